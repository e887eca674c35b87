#ifndef PGCOVER_PROJGEOM_HPP
#define PGCOVER_PROJGEOM_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "pgcover/gflin.hpp"

namespace pgcover {

/// PG(m,p): the m-dimensional projective space over GF(p). Points are
/// 1-dimensional subspaces of GF(p)^{m+1}.
struct SpaceDescriptor {
  SpaceDescriptor(int m_, PrimeModulus mod_) : m(m_), mod(mod_) {
    if (m < 1) throw Error("projective dimension must be >= 1 (PG(0,p) has no hyperplanes)");
  }
  int m;
  PrimeModulus mod;

  /// (p^{m+1} - 1) / (p - 1); hyperplane count is the same by duality.
  std::uint64_t point_count() const {
    std::uint64_t acc = 0, pw = 1;
    for (int i = 0; i <= m; ++i) {
      acc += pw;
      pw *= mod.value();
    }
    return acc;
  }

  bool operator==(const SpaceDescriptor& o) const { return m == o.m && mod == o.mod; }
  bool operator!=(const SpaceDescriptor& o) const { return !(*this == o); }
};

/// Canonical representative of a 1-dimensional subspace: leftmost nonzero
/// coordinate scaled to 1. Doubles as a hyperplane in the dual role.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const FieldVector& v) : v_(normalized(v)) {}

  const FieldVector& coords() const { return v_; }
  PrimeModulus mod() const { return v_.mod(); }
  std::size_t size() const { return v_.size(); }
  Residue operator[](std::size_t i) const { return v_[i]; }

  bool operator==(const ProjectivePoint& o) const { return v_ == o.v_; }
  bool operator!=(const ProjectivePoint& o) const { return !(v_ == o.v_); }
  bool operator<(const ProjectivePoint& o) const { return v_ < o.v_; }

 private:
  static FieldVector normalized(const FieldVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) return i == 0 && v[i] == 1 ? v : v.scaled(v.mod().inv(v[i]));
    }
    throw ZeroVector("cannot normalize the zero vector");
  }
  FieldVector v_;
};

using Hyperplane = ProjectivePoint;

inline ProjectivePoint normalize_point(const FieldVector& v) { return ProjectivePoint(v); }

/// h and pt are incident iff h . pt = 0.
inline bool incident(const Hyperplane& h, const ProjectivePoint& pt) {
  return dot(h.coords(), pt.coords()) == 0;
}

/// All points of PG(m,p) in lexicographic coordinate order (0 < 1 < ... < p-1).
/// The position in this list is the module's global point index.
inline std::vector<ProjectivePoint> enumerate_points(const SpaceDescriptor& space) {
  const std::uint32_t p = space.mod.value();
  const std::size_t len = static_cast<std::size_t>(space.m) + 1;
  std::vector<ProjectivePoint> pts;
  pts.reserve(space.point_count());
  // canonical vectors grouped by the position of the leading 1; longer zero
  // prefixes sort first, suffixes run as a plain odometer
  for (std::size_t lead = len; lead-- > 0;) {
    std::vector<Residue> v(len, 0);
    v[lead] = 1;
    while (true) {
      pts.push_back(ProjectivePoint(FieldVector::of(space.mod, v)));
      std::size_t i = len;
      while (i > lead + 1 && v[i - 1] == p - 1) v[--i] = 0;
      if (i == lead + 1) break;
      ++v[i - 1];
    }
  }
  return pts;
}

/// Point enumeration plus O(log) index lookup; shared by incidence scans
/// and the search frontier.
class PointCatalog {
 public:
  explicit PointCatalog(const SpaceDescriptor& space) : space_(space), points_(enumerate_points(space)) {
    for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i].coords().coords(), i);
  }

  const SpaceDescriptor& space() const { return space_; }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }

  std::size_t index_of(const ProjectivePoint& pt) const {
    auto it = index_.find(pt.coords().coords());
    if (it == index_.end()) throw Error("point not in catalog");
    return it->second;
  }

 private:
  SpaceDescriptor space_;
  std::vector<ProjectivePoint> points_;
  std::map<std::vector<Residue>, std::size_t> index_;
};

}  // namespace pgcover

#endif
