#ifndef PGCOVER_COVERS_HPP
#define PGCOVER_COVERS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgcover/blocking.hpp"

namespace pgcover {

/// Cover of G = (C_p)^d by the maximal subgroups M_b = {x : b.x = 0},
/// one per dual b. Elements of G are exponent vectors in (F_p)^d.
class DualCover {
 public:
  DualCover(PrimeModulus mod, int d, std::vector<ProjectivePoint> duals)
      : mod_(mod), d_(d), duals_(std::move(duals)) {
    if (d_ < 2) throw Error("cover rank d must be >= 2");
    if (duals_.size() < 2) throw Error("cover needs at least 2 members");
    std::set<std::vector<Residue>> seen;
    for (const ProjectivePoint& b : duals_) {
      if (b.mod() != mod_) throw ModulusMismatch("dual modulus differs from cover");
      if (b.size() != static_cast<std::size_t>(d_)) throw LengthMismatch("dual length differs from d");
      if (!seen.insert(b.coords().coords()).second)
        throw DuplicatePoint("duplicate member in cover");
    }
  }

  PrimeModulus mod() const { return mod_; }
  int d() const { return d_; }
  std::size_t n() const { return duals_.size(); }
  const std::vector<ProjectivePoint>& duals() const { return duals_; }
  const ProjectivePoint& operator[](std::size_t i) const { return duals_[i]; }

  std::uint64_t group_order() const {
    std::uint64_t g = 1;
    for (int i = 0; i < d_; ++i) g *= mod_.value();
    return g;
  }

  FieldMatrix dual_matrix() const {
    std::vector<FieldVector> rows;
    rows.reserve(duals_.size());
    for (const ProjectivePoint& b : duals_) rows.push_back(b.coords());
    return FieldMatrix::from_rows(rows);
  }

 private:
  PrimeModulus mod_;
  int d_;
  std::vector<ProjectivePoint> duals_;
};

/// Prop 2.1 direction: the points of B, read as duals, cover (C_p)^{m+1}.
inline DualCover cover_from_blocking(const PointSet& b) {
  return DualCover(b.space().mod, b.space().m + 1, b.points());
}

/// Inverse identification: the duals of C, read as points of PG(d-1,p).
inline PointSet blocking_from_cover(const DualCover& c) {
  return PointSet(SpaceDescriptor(c.d() - 1, c.mod()), c.duals());
}

/// An index-p subgroup of (C_p)^d given by generator exponent vectors.
struct SubgroupDescriptor {
  std::vector<FieldVector> generators;
};

/// The unique normalized b with b.g = 0 for all generators; requires the
/// generators to span exactly dimension d-1 so the orthogonal complement
/// is a line.
inline ProjectivePoint dual_from_generators(const SubgroupDescriptor& s) {
  if (s.generators.empty()) throw WrongCorank("no generators given");
  const FieldMatrix g = FieldMatrix::from_rows(s.generators);
  if (rank_of(g) + 1 != g.cols()) throw WrongCorank("generators do not span corank 1");
  const FieldMatrix ns = null_space_basis(g);
  return ProjectivePoint(ns.row_vector(0));
}

struct CoverReport {
  bool covers = false;
  bool irredundant = false;
  bool maximal = true;  // every M_b has index p
  bool core_free = false;
  std::optional<std::vector<Residue>> witness_uncovered;
  std::vector<std::optional<std::vector<Residue>>> witness_private;  // per member
  std::string method;  // "direct" or "geometric"
};

namespace detail {

constexpr std::uint64_t kScanCap = 6561;  // 3^8

/// iterate all p^d exponent vectors; f(x) for each
template <typename F>
inline void for_each_element(const PrimeModulus mod, int d, F&& f) {
  const std::uint32_t p = mod.value();
  std::vector<Residue> x(static_cast<std::size_t>(d), 0);
  while (true) {
    f(x);
    std::size_t i = x.size();
    while (i > 0 && x[i - 1] == p - 1) x[--i] = 0;
    if (i == 0) break;
    ++x[i - 1];
  }
}

inline std::size_t members_containing(const DualCover& c, const std::vector<Residue>& x,
                                      std::size_t* only = nullptr) {
  const std::uint32_t p = c.mod().value();
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.n(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      acc += static_cast<std::uint64_t>(c[i][j]) * x[j];
    if (acc % p == 0) {
      ++count;
      if (only) *only = i;
    }
  }
  return count;
}

}  // namespace detail

/// Direct element scan for p^d <= 3^8; larger groups go through the
/// geometric dual (Props 2.1/2.2/2.4). The report says which path ran.
inline CoverReport verify_cover(const DualCover& c) {
  CoverReport rep;
  rep.core_free = rank_of(c.dual_matrix()) == static_cast<std::size_t>(c.d());
  rep.witness_private.assign(c.n(), std::nullopt);
  if (c.group_order() <= detail::kScanCap) {
    rep.method = "direct";
    rep.covers = true;
    detail::for_each_element(c.mod(), c.d(), [&](const std::vector<Residue>& x) {
      std::size_t only = 0;
      const std::size_t cnt = detail::members_containing(c, x, &only);
      if (cnt == 0 && !rep.witness_uncovered) {
        rep.covers = false;
        rep.witness_uncovered = x;
      }
      if (cnt == 1 && !rep.witness_private[only]) rep.witness_private[only] = x;
    });
    rep.irredundant = true;
    for (const auto& w : rep.witness_private) rep.irredundant = rep.irredundant && w.has_value();
  } else {
    rep.method = "geometric";
    const PointSet b = blocking_from_cover(c);
    const MinimalityReport mr = minimality_report(b);
    rep.covers = mr.is_blocking;
    rep.irredundant = true;
    for (std::size_t i = 0; i < c.n(); ++i) {
      if (mr.tangent_witness[i]) {
        // a tangent hyperplane at b_i is exactly a private element of M_i
        rep.witness_private[i] = mr.tangent_witness[i]->coords().coords();
      } else {
        rep.irredundant = false;
      }
    }
  }
  return rep;
}

/// |∩_{i in S} M_i| = p^{d - rank of the selected duals}; empty S -> p^d.
inline std::uint64_t intersection_size(const DualCover& c, const std::vector<std::size_t>& s) {
  FieldMatrix rows(c.mod(), 0, static_cast<std::size_t>(c.d()));
  for (std::size_t i : s) {
    if (i >= c.n()) throw Error("intersection_size: index out of range");
    rows.append_row(c[i].coords());
  }
  const std::size_t r = rows.rows() == 0 ? 0 : rank_of(rows);
  std::uint64_t out = 1;
  for (int i = 0; i < c.d() - static_cast<int>(r); ++i) out *= c.mod().value();
  return out;
}

/// |∪ M_i| by direct scan; the oracle against which ie_union is checked.
inline std::uint64_t union_size_direct(const DualCover& c) {
  if (c.group_order() > detail::kScanCap) throw TooLarge("union_size_direct: group exceeds 3^8");
  std::uint64_t count = 0;
  detail::for_each_element(c.mod(), c.d(), [&](const std::vector<Residue>& x) {
    if (detail::members_containing(c, x) > 0) ++count;
  });
  return count;
}

/// Asserted k-wise intersection sizes, level_sizes[k-1] for k = 1..n.
struct SizeProfile {
  int n = 0;
  std::vector<std::uint64_t> level_sizes;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Inclusion-exclusion under the uniform-profile assumption:
/// sum (-1)^{k+1} C(n,k) level_sizes[k].
inline std::int64_t ie_union(int n, const SizeProfile& profile) {
  if (profile.n != n || profile.level_sizes.size() != static_cast<std::size_t>(n))
    throw LengthMismatch("ie_union: profile must have n levels");
  std::int64_t acc = 0;
  for (int k = 1; k <= n; ++k) {
    const std::int64_t term = static_cast<std::int64_t>(binomial(n, k)) *
                              static_cast<std::int64_t>(profile.level_sizes[k - 1]);
    acc += (k % 2 == 1) ? term : -term;
  }
  return acc;
}

/// Theorem 1.1 + Lemma 3.2(a) gate on (n,p): either n = p+1 (only the
/// line / (C_p)^2 case survives) or n >= 3(p+1)/2, and always p <= n-1.
enum class Admissibility { Inadmissible, ForcedLine, Admissible };

inline Admissibility bound_filter(int n, PrimeModulus p) {
  const std::int64_t pv = p.value();
  if (pv > n - 1) return Admissibility::Inadmissible;
  if (n == pv + 1) return Admissibility::ForcedLine;
  if (2 * n < 3 * (pv + 1)) return Admissibility::Inadmissible;
  return Admissibility::Admissible;
}

/// One audited claim: pass/fail plus a short witness description.
struct AuditCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct LemmaAudit {
  std::vector<AuditCheck> checks;
  bool all_pass() const {
    for (const AuditCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string join_residues(const std::vector<Residue>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

template <typename F>
inline void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    f(comb);
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace detail

/// Structural checks from the paper's intersection lemmas, each reported
/// with a witness. Requires an actual C_n-cover (n-cover, irredundant,
/// maximal, core-free); audits run on the full element scan.
inline LemmaAudit lemma_audit(const DualCover& c) {
  if (c.group_order() > detail::kScanCap) throw TooLarge("lemma_audit: group exceeds 3^8");
  {
    const CoverReport rep = verify_cover(c);
    if (!(rep.covers && rep.irredundant && rep.maximal && rep.core_free))
      throw NotACnCover("lemma_audit requires an irredundant maximal core-free cover");
  }
  const int n = static_cast<int>(c.n());
  const int p = static_cast<int>(c.mod().value());
  const int d = c.d();
  const int s = n - p;
  LemmaAudit audit;

  // D = intersection of all members: x with rank-test via dual matrix;
  // core-free cover => D = {0}
  const FieldMatrix all = c.dual_matrix();
  const std::size_t full_rank = rank_of(all);

  {  // 3.1(a): every non-D element lies in at most n-p members
    AuditCheck ck{"3.1a_membership_bound", true, ""};
    detail::for_each_element(c.mod(), d, [&](const std::vector<Residue>& x) {
      if (!ck.pass) return;
      const bool in_d = std::all_of(x.begin(), x.end(), [](Residue r) { return r == 0; });
      if (in_d) return;
      const std::size_t cnt = detail::members_containing(c, x);
      if (cnt > static_cast<std::size_t>(s)) {
        ck.pass = false;
        ck.witness = "element " + detail::join_residues(x) + " lies in " + std::to_string(cnt) +
                     " members > " + std::to_string(s);
      }
    });
    if (ck.pass) ck.witness = "max membership <= " + std::to_string(s);
    audit.checks.push_back(std::move(ck));
  }

  {  // 3.1(b): dropping any one member leaves the same intersection D
    AuditCheck ck{"3.1b_drop_one_keeps_core", true, ""};
    for (std::size_t i = 0; i < c.n(); ++i) {
      FieldMatrix rest(c.mod(), 0, static_cast<std::size_t>(d));
      for (std::size_t j = 0; j < c.n(); ++j)
        if (j != i) rest.append_row(c[j].coords());
      if (rank_of(rest) != full_rank) {
        ck.pass = false;
        ck.witness = "dropping member " + std::to_string(i) + " changes the intersection";
        break;
      }
    }
    if (ck.pass) ck.witness = "all " + std::to_string(n) + " deletions keep rank " + std::to_string(full_rank);
    audit.checks.push_back(std::move(ck));
  }

  if (s + 1 >= 1 && s + 1 <= n) {  // 3.2(b): every (s+1)-wise intersection trivial
    AuditCheck ck{"3.2b_s_plus_1_trivial", true, ""};
    detail::for_each_subset(c.n(), static_cast<std::size_t>(s + 1), [&](const std::vector<std::size_t>& sub) {
      if (!ck.pass) return;
      if (intersection_size(c, sub) != 1) {
        ck.pass = false;
        ck.witness = "subset of size " + std::to_string(s + 1) + " starting at index " +
                     std::to_string(sub[0]) + " has nontrivial intersection";
      }
    });
    if (ck.pass) ck.witness = "all " + std::to_string(s + 1) + "-wise intersections trivial";
    audit.checks.push_back(std::move(ck));
  }

  if (s >= 1 && s <= n) {  // 3.3(a): (n-p)-wise intersections have size 1 or p
    AuditCheck ck{"3.3a_np_wise_size_1_or_p", true, ""};
    detail::for_each_subset(c.n(), static_cast<std::size_t>(s), [&](const std::vector<std::size_t>& sub) {
      if (!ck.pass) return;
      const std::uint64_t sz = intersection_size(c, sub);
      if (sz != 1 && sz != static_cast<std::uint64_t>(p)) {
        ck.pass = false;
        ck.witness = "a " + std::to_string(s) + "-wise intersection has size " + std::to_string(sz);
      }
    });
    if (ck.pass) ck.witness = "all " + std::to_string(s) + "-wise intersections have size 1 or " + std::to_string(p);
    audit.checks.push_back(std::move(ck));
  }

  {  // 3.3(b): pairwise intersections have size p^{d-2}
    AuditCheck ck{"3.3b_pairwise_pd2", true, ""};
    std::uint64_t want = 1;
    for (int i = 0; i < d - 2; ++i) want *= p;
    detail::for_each_subset(c.n(), 2, [&](const std::vector<std::size_t>& sub) {
      if (!ck.pass) return;
      if (intersection_size(c, sub) != want) {
        ck.pass = false;
        ck.witness = "pair (" + std::to_string(sub[0]) + "," + std::to_string(sub[1]) +
                     ") has size != p^(d-2)";
      }
    });
    if (ck.pass) ck.witness = "all pairs have size " + std::to_string(want);
    audit.checks.push_back(std::move(ck));
  }

  {  // 3.3(c): some d-wise intersection is trivial
    AuditCheck ck{"3.3c_some_d_wise_trivial", false, ""};
    detail::for_each_subset(c.n(), static_cast<std::size_t>(d), [&](const std::vector<std::size_t>& sub) {
      if (ck.pass) return;
      if (intersection_size(c, sub) == 1) {
        ck.pass = true;
        std::string w = "witness indices";
        for (std::size_t i : sub) w += " " + std::to_string(i);
        ck.witness = w;
      }
    });
    if (!ck.pass) ck.witness = "no trivial d-wise intersection";
    audit.checks.push_back(std::move(ck));
  }

  {  // 3.1(d): each order-p subgroup in exactly k members satisfies p <= n-k
    // (order-p subgroups = projective points of PG(d-1,p); none lie in D here)
    AuditCheck ck{"3.1d_order_p_subgroups", true, ""};
    const SpaceDescriptor space(d - 1, c.mod());
    for (const ProjectivePoint& u : enumerate_points(space)) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < c.n(); ++i)
        if (incident(c[i], u)) ++k;
      if (p > n - static_cast<int>(k)) {
        ck.pass = false;
        ck.witness = "subgroup <" + detail::join_residues(u.coords().coords()) + "> lies in " +
                     std::to_string(k) + " members";
        break;
      }
    }
    if (ck.pass) ck.witness = "p <= n-k for every order-p subgroup";
    audit.checks.push_back(std::move(ck));
  }

  return audit;
}

}  // namespace pgcover

#endif
