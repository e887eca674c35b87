#ifndef PGCOVER_BLOCKING_HPP
#define PGCOVER_BLOCKING_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgcover/projgeom.hpp"

namespace pgcover {

/// Ordered, duplicate-free set of projective points of one space;
/// a candidate blocking set B.
class PointSet {
 public:
  PointSet(SpaceDescriptor space, std::vector<ProjectivePoint> points)
      : space_(space), points_(std::move(points)) {
    if (points_.empty()) throw Error("point set must be nonempty");
    std::set<std::vector<Residue>> seen;
    for (const ProjectivePoint& pt : points_) {
      if (pt.mod() != space_.mod) throw ModulusMismatch("point modulus differs from space");
      if (pt.size() != static_cast<std::size_t>(space_.m) + 1)
        throw LengthMismatch("point length differs from space");
      if (!seen.insert(pt.coords().coords()).second)
        throw DuplicatePoint("duplicate point in point set");
    }
  }

  const SpaceDescriptor& space() const { return space_; }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
  bool contains(const ProjectivePoint& pt) const {
    return std::find(points_.begin(), points_.end(), pt) != points_.end();
  }

 private:
  SpaceDescriptor space_;
  std::vector<ProjectivePoint> points_;
};

/// |B| x (m+1) matrix whose rows generate the points of B.
inline FieldMatrix blocking_matrix(const PointSet& b) {
  std::vector<FieldVector> rows;
  rows.reserve(b.size());
  for (const ProjectivePoint& pt : b.points()) rows.push_back(pt.coords());
  return FieldMatrix::from_rows(rows);
}

inline PointSet point_set_from_matrix(const SpaceDescriptor& space, const FieldMatrix& a) {
  std::vector<ProjectivePoint> pts;
  pts.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) pts.push_back(ProjectivePoint(a.row_vector(r)));
  return PointSet(space, std::move(pts));
}

/// d(B) = rank(blocking matrix) - 1, the projective dimension of <B>.
inline int span_dimension(const PointSet& b) {
  return static_cast<int>(rank_of(blocking_matrix(b))) - 1;
}

/// Hyperplane-scan route: B blocks iff every hyperplane of the ambient
/// space is incident with some point of B.
inline bool is_blocking(const PointSet& b) {
  for (const Hyperplane& h : enumerate_points(b.space())) {
    bool hit = false;
    for (const ProjectivePoint& pt : b.points())
      if (incident(h, pt)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

/// Matrix property (a): AX has a zero entry for every column X. Scans all
/// nonzero X in GF(p)^{m+1}. Independent of the hyperplane scan; the two
/// are cross-checked in tests.
inline std::pair<bool, bool> matrix_properties(const FieldMatrix& a) {
  const PrimeModulus mod = a.mod();
  const std::uint32_t p = mod.value();
  const std::size_t cols = a.cols();
  bool property_a = true;
  std::vector<bool> row_has_witness(a.rows(), false);
  std::vector<Residue> x(cols, 0);
  while (true) {  // odometer over all X
    std::size_t i = cols;
    while (i > 0 && x[i - 1] == p - 1) x[--i] = 0;
    if (i == 0) break;
    ++x[i - 1];
    std::size_t zero_count = 0, zero_row = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < cols; ++c) acc += static_cast<std::uint64_t>(a.at(r, c)) * x[c];
      if (acc % p == 0) {
        ++zero_count;
        zero_row = r;
      }
    }
    if (zero_count == 0) property_a = false;
    if (zero_count == 1) row_has_witness[zero_row] = true;
  }
  bool property_b = true;
  for (bool w : row_has_witness) property_b = property_b && w;
  return {property_a, property_b};
}

inline bool is_blocking_by_matrix(const PointSet& b) {
  return matrix_properties(blocking_matrix(b)).first;
}

/// Outcome of the minimality check. B is minimal blocking iff it blocks and
/// every point has a tangent hyperplane (meeting B exactly in that point).
struct MinimalityReport {
  bool is_blocking = false;
  std::vector<std::optional<Hyperplane>> tangent_witness;  // aligned with B's points
  std::vector<std::size_t> redundant_points;               // points lacking a tangent

  bool is_minimal() const { return is_blocking && redundant_points.empty(); }
};

/// Tangent witnesses are searched in global hyperplane index order, first
/// hit recorded, so reports are deterministic.
inline MinimalityReport minimality_report(const PointSet& b) {
  MinimalityReport rep;
  const std::vector<Hyperplane> hyperplanes = enumerate_points(b.space());
  rep.is_blocking = true;
  for (const Hyperplane& h : hyperplanes) {
    bool hit = false;
    for (const ProjectivePoint& pt : b.points())
      if (incident(h, pt)) {
        hit = true;
        break;
      }
    if (!hit) {
      rep.is_blocking = false;
      break;
    }
  }
  rep.tangent_witness.assign(b.size(), std::nullopt);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (const Hyperplane& h : hyperplanes) {
      if (!incident(h, b[i])) continue;
      bool tangent = true;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (j != i && incident(h, b[j])) {
          tangent = false;
          break;
        }
      if (tangent) {
        rep.tangent_witness[i] = h;
        break;
      }
    }
    if (!rep.tangent_witness[i]) rep.redundant_points.push_back(i);
  }
  return rep;
}

/// Result of reducing a blocking matrix to the [I_{d+1}; L] shape using
/// only the equivalence operations (column ops, row permutation, row
/// scaling). Columns beyond d+1 vanish because every row lies in the span
/// of the chosen frame rows.
struct NormalForm {
  int d;                                  // span dimension
  FieldMatrix L;                          // (k-d-1) x (d+1)
  FieldMatrix column_transform;           // (m+1) x (m+1), invertible
  std::vector<std::size_t> row_permutation;  // new position -> original row
  std::vector<Residue> row_scalings;         // applied after permutation

  /// recomputes P A T with the recorded scalings; rows 0..d become e_i,
  /// the rest carry L in their first d+1 coordinates
  FieldMatrix apply(const FieldMatrix& a) const {
    FieldMatrix permuted(a.mod(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      permuted.set_row(i, a.row_vector(row_permutation[i]).scaled(row_scalings[i]));
    return matmul(permuted, column_transform);
  }
};

inline NormalForm normal_form(const FieldMatrix& a) {
  const PrimeModulus mod = a.mod();
  const std::size_t k = a.rows(), cols = a.cols();
  for (std::size_t r = 0; r < k; ++r)
    if (a.row_vector(r).is_zero()) throw ZeroVector("blocking matrix rows must be nonzero");

  // greedy independent rows form the frame
  std::vector<std::size_t> frame;
  FieldMatrix acc(mod, 0, cols);
  for (std::size_t r = 0; r < k; ++r) {
    acc.append_row(a.row_vector(r));
    if (rank_of(acc) == frame.size() + 1) {
      frame.push_back(r);
    } else {
      FieldMatrix trimmed(mod, 0, cols);
      for (std::size_t i : frame) trimmed.append_row(a.row_vector(i));
      acc = std::move(trimmed);
    }
  }
  const std::size_t rank = frame.size();
  const int d = static_cast<int>(rank) - 1;

  // extend the frame rows to an invertible (m+1)x(m+1) matrix E; T = E^{-1}
  FieldMatrix e(mod, 0, cols);
  for (std::size_t i : frame) e.append_row(a.row_vector(i));
  {
    const RrefResult rr = rref(e);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : rr.pivot_columns) is_pivot[p] = true;
    for (std::size_t c = 0; c < cols; ++c)
      if (!is_pivot[c]) e.append_row(FieldVector::unit(mod, cols, c));
  }
  const FieldMatrix t = inverse(e);

  std::vector<std::size_t> perm = frame;
  std::vector<bool> in_frame(k, false);
  for (std::size_t i : frame) in_frame[i] = true;
  for (std::size_t r = 0; r < k; ++r)
    if (!in_frame[r]) perm.push_back(r);

  FieldMatrix l(mod, 0, rank);
  std::vector<Residue> scalings(k, 1);
  for (std::size_t pos = rank; pos < k; ++pos) {
    FieldVector mapped = matmul(FieldMatrix::from_rows({a.row_vector(perm[pos])}), t).row_vector(0);
    for (std::size_t c = rank; c < cols; ++c)
      if (mapped[c] != 0) throw Error("normal_form: row escapes the frame span");
    std::vector<Residue> head(mapped.coords().begin(), mapped.coords().begin() + rank);
    FieldVector hv = FieldVector::of(mod, std::move(head));
    // R2: scale the L row to leading 1
    for (std::size_t c = 0; c < hv.size(); ++c)
      if (hv[c] != 0) {
        scalings[pos] = mod.inv(hv[c]);
        hv = hv.scaled(scalings[pos]);
        break;
      }
    l.append_row(hv);
  }
  return {d, std::move(l), t, std::move(perm), std::move(scalings)};
}

namespace detail {

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// min over the monomial group (column permutations x column scalings) of
/// the sorted list of normalized transformed rows
inline std::vector<std::vector<Residue>> minimize_monomial(
    const PrimeModulus mod, const std::vector<std::vector<Residue>>& rows, std::size_t width) {
  const std::uint32_t p = mod.value();
  std::vector<std::size_t> perm(width);
  std::vector<std::vector<Residue>> best;
  bool have_best = false;
  for (std::size_t i = 0; i < width; ++i) perm[i] = i;
  do {
    std::vector<Residue> lambda(width, 1);
    while (true) {
      std::vector<std::vector<Residue>> cand;
      cand.reserve(rows.size());
      for (const std::vector<Residue>& r : rows) {
        std::vector<Residue> s(width);
        for (std::size_t j = 0; j < width; ++j) s[j] = mod.mul(r[perm[j]], lambda[j]);
        for (std::size_t j = 0; j < width; ++j)
          if (s[j] != 0) {  // normalize to leading 1
            const Residue inv = mod.inv(s[j]);
            for (std::size_t t = j; t < width; ++t) s[t] = mod.mul(s[t], inv);
            break;
          }
        cand.push_back(std::move(s));
      }
      std::sort(cand.begin(), cand.end());
      if (!have_best || cand < best) {
        best = std::move(cand);
        have_best = true;
      }
      std::size_t i = width;
      while (i > 0 && lambda[i - 1] == p - 1) lambda[--i] = 1;
      if (i == 0) break;
      ++lambda[i - 1];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// Canonical key of the PGL-orbit of the point set generated by A's rows:
/// minimize the normal-form L rows over every independent frame choice and
/// the full monomial group. Keys agree exactly for matrices in the same
/// (C1)-(R2) orbit.
inline std::string canonical_key(const FieldMatrix& a) {
  const PrimeModulus mod = a.mod();
  const std::uint32_t p = mod.value();
  std::vector<std::vector<Residue>> pts;
  for (std::size_t r = 0; r < a.rows(); ++r)
    pts.push_back(ProjectivePoint(a.row_vector(r)).coords().coords());
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw DuplicatePoint("canonical_key: rows generate duplicate points");

  const std::size_t n = pts.size();
  const std::size_t rank = rank_of(a);
  {
    std::uint64_t orbit = detail::factorial(rank);
    for (std::size_t i = 0; i < rank && orbit <= 10'000'000ULL; ++i) orbit *= (p - 1);
    if (orbit > 10'000'000ULL) throw OrbitTooLarge("canonical_key: monomial orbit exceeds cap");
  }

  std::vector<std::vector<Residue>> best;
  bool have_best = false;
  std::vector<std::size_t> comb(rank);
  for (std::size_t i = 0; i < rank; ++i) comb[i] = i;
  while (true) {
    // frame candidate: rows comb[...]
    FieldMatrix f(mod, 0, a.cols());
    for (std::size_t i : comb) f.append_row(FieldVector::of(mod, pts[i]));
    if (rank_of(f) == rank) {
      const RrefResult rr = rref(f);
      std::vector<bool> is_pivot(a.cols(), false);
      for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) f.append_row(FieldVector::unit(mod, a.cols(), c));
      const FieldMatrix t = inverse(f);
      std::vector<std::vector<Residue>> others;
      std::vector<bool> used(n, false);
      for (std::size_t i : comb) used[i] = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        FieldVector mapped =
            matmul(FieldMatrix::from_rows({FieldVector::of(mod, pts[i])}), t).row_vector(0);
        others.emplace_back(mapped.coords().begin(), mapped.coords().begin() + rank);
      }
      std::vector<std::vector<Residue>> cand =
          others.empty() ? others : detail::minimize_monomial(mod, others, rank);
      if (!have_best || cand < best) {
        best = std::move(cand);
        have_best = true;
      }
    }
    // next combination
    std::size_t i = rank;
    while (i > 0 && comb[i - 1] == n - rank + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < rank; ++j) comb[j] = comb[j - 1] + 1;
  }

  std::string key = "p" + std::to_string(p) + ":n" + std::to_string(n) + ":d" +
                    std::to_string(static_cast<int>(rank) - 1) + ":";
  for (const std::vector<Residue>& row : best) {
    for (Residue c : row) key += std::to_string(c) + ",";
    key += ";";
  }
  return key;
}

inline std::string canonical_key(const PointSet& b) { return canonical_key(blocking_matrix(b)); }

/// The projective triangle: {(0,1,-s^2), (1,-s^2,0), (-s^2,0,1) : s in F_p},
/// a minimal blocking set of size 3(p+1)/2 in PG(2,p), p odd.
inline PointSet projective_triangle(PrimeModulus p) {
  if (p.value() == 2) throw EvenCharacteristic("projective triangle requires odd p");
  const SpaceDescriptor space(2, p);
  std::set<ProjectivePoint> pts;
  for (std::uint32_t s = 0; s < p.value(); ++s) {
    const Residue q = p.neg(p.mul(s % p.value(), s % p.value()));
    pts.insert(ProjectivePoint(FieldVector::of(p, {0, 1, q})));
    pts.insert(ProjectivePoint(FieldVector::of(p, {1, q, 0})));
    pts.insert(ProjectivePoint(FieldVector::of(p, {q, 0, 1})));
  }
  return PointSet(space, std::vector<ProjectivePoint>(pts.begin(), pts.end()));
}

/// Description of the minimal blocking sets of PG(m,2) spanning a
/// d-subspace: empty for d even; for d odd a single equivalence class,
/// represented by the frame {e_1,...,e_{d+1}, e_1+...+e_{d+1}}.
struct Gf2Family {
  bool exists = false;
  std::optional<PointSet> representative;
  /// number of spanning minimal blocking sets when d == m (orbit-stabilizer:
  /// |GL(m+1,2)| / (m+2)!), 0 otherwise
  std::uint64_t spanning_count = 0;
};

inline Gf2Family gf2_minimal_sets(int m, int d) {
  if (d < 1 || d > m) throw Error("gf2_minimal_sets: need 1 <= d <= m");
  Gf2Family fam;
  if (d % 2 == 0) return fam;
  fam.exists = true;
  const PrimeModulus two(2);
  const SpaceDescriptor space(m, two);
  std::vector<ProjectivePoint> pts;
  std::vector<Residue> ones(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i <= d; ++i) {
    pts.push_back(ProjectivePoint(FieldVector::unit(two, m + 1, i)));
    ones[i] = 1;
  }
  pts.push_back(ProjectivePoint(FieldVector::of(two, std::move(ones))));
  fam.representative = PointSet(space, std::move(pts));
  if (d == m) {
    std::uint64_t gl = 1;
    for (int i = 0; i <= m; ++i) gl *= (1ULL << (m + 1)) - (1ULL << i);
    fam.spanning_count = gl / detail::factorial(m + 2);
  }
  return fam;
}

}  // namespace pgcover

#endif
