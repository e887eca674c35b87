#ifndef PGCOVER_GFLIN_HPP
#define PGCOVER_GFLIN_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pgcover/errors.hpp"

namespace pgcover {

/// Canonical residue in [0, p).
using Residue = std::uint32_t;

/// A prime p <= 2^16, verified at construction. All residue arithmetic
/// stays inside 64-bit intermediates.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint32_t p) : p_(p) {
    if (p < 2 || !is_prime(p)) throw Error("modulus must be prime: " + std::to_string(p));
    if (p > 65536u) throw Error("modulus cap exceeded (p <= 2^16)");
  }

  std::uint32_t value() const { return p_; }

  Residue reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Residue>(r);
  }
  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue pow(Residue a, std::uint64_t e) const {
    std::uint64_t base = a % p_, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Residue>(acc);
  }
  Residue inv(Residue a) const {
    if (a % p_ == 0) throw Error("inverse of zero");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeModulus& o) const { return p_ != o.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

/// Immutable vector over GF(p), every coordinate reduced.
class FieldVector {
 public:
  FieldVector(PrimeModulus mod, const std::vector<std::int64_t>& raw) : mod_(mod) {
    if (raw.empty()) throw Error("field vector must have length >= 1");
    coords_.reserve(raw.size());
    for (std::int64_t x : raw) coords_.push_back(mod.reduce(x));
  }
  FieldVector(PrimeModulus mod, std::initializer_list<std::int64_t> raw)
      : FieldVector(mod, std::vector<std::int64_t>(raw)) {}

  /// Trusted constructor: coordinates already reduced.
  static FieldVector of(PrimeModulus mod, std::vector<Residue> reduced) {
    if (reduced.empty()) throw Error("field vector must have length >= 1");
    FieldVector v(mod);
    v.coords_ = std::move(reduced);
    return v;
  }
  static FieldVector zero(PrimeModulus mod, std::size_t len) {
    return of(mod, std::vector<Residue>(len, 0));
  }
  static FieldVector unit(PrimeModulus mod, std::size_t len, std::size_t i) {
    std::vector<Residue> c(len, 0);
    c.at(i) = 1;
    return of(mod, std::move(c));
  }

  PrimeModulus mod() const { return mod_; }
  std::size_t size() const { return coords_.size(); }
  Residue operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Residue>& coords() const { return coords_; }
  bool is_zero() const {
    for (Residue c : coords_)
      if (c) return false;
    return true;
  }

  FieldVector scaled(Residue lambda) const {
    std::vector<Residue> c(coords_);
    for (Residue& x : c) x = mod_.mul(x, lambda);
    return of(mod_, std::move(c));
  }

  bool operator==(const FieldVector& o) const {
    return mod_ == o.mod_ && coords_ == o.coords_;
  }
  bool operator<(const FieldVector& o) const { return coords_ < o.coords_; }

 private:
  explicit FieldVector(PrimeModulus mod) : mod_(mod) {}
  PrimeModulus mod_;
  std::vector<Residue> coords_;
};

inline Residue dot(const FieldVector& u, const FieldVector& v) {
  if (u.mod() != v.mod()) throw ModulusMismatch("dot: moduli differ");
  if (u.size() != v.size()) throw LengthMismatch("dot: lengths differ");
  std::uint64_t acc = 0;
  const std::uint32_t p = u.mod().value();
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc += static_cast<std::uint64_t>(u[i]) * v[i];
    if (acc >> 60) acc %= p;
  }
  return static_cast<Residue>(acc % p);
}

/// Rectangular matrix over GF(p), row-major, entries reduced. Zero rows are
/// permitted (null-space bases of full-rank maps have none).
class FieldMatrix {
 public:
  FieldMatrix(PrimeModulus mod, std::size_t rows, std::size_t cols)
      : mod_(mod), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (cols == 0) throw Error("matrix must have at least one column");
  }

  static FieldMatrix from_rows(const std::vector<FieldVector>& rows) {
    if (rows.empty()) throw Error("from_rows: need at least one row");
    FieldMatrix m(rows.front().mod(), rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
  }
  static FieldMatrix identity(PrimeModulus mod, std::size_t n) {
    FieldMatrix m(mod, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  PrimeModulus mod() const { return mod_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FieldVector row_vector(std::size_t r) const {
    std::vector<Residue> c(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    return FieldVector::of(mod_, std::move(c));
  }
  void set_row(std::size_t r, const FieldVector& v) {
    if (v.size() != cols_) throw LengthMismatch("set_row: wrong length");
    if (v.mod() != mod_) throw ModulusMismatch("set_row: wrong modulus");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
  }
  void append_row(const FieldVector& v) {
    if (v.size() != cols_) throw LengthMismatch("append_row: wrong length");
    if (v.mod() != mod_) throw ModulusMismatch("append_row: wrong modulus");
    data_.insert(data_.end(), v.coords().begin(), v.coords().end());
    ++rows_;
  }

  FieldMatrix transposed() const {
    FieldMatrix t(mod_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  bool operator==(const FieldMatrix& o) const {
    return mod_ == o.mod_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  PrimeModulus mod_;
  std::size_t rows_, cols_;
  std::vector<Residue> data_;
};

struct RrefResult {
  FieldMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form. Pivots are the first nonzero entry scanning
/// left to right, top to bottom, scaled to 1.
inline RrefResult rref(const FieldMatrix& m) {
  if (m.rows() == 0) throw Error("rref: empty matrix");
  const PrimeModulus mod = m.mod();
  FieldMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(piv, c), r.at(lead, c));
    const Residue inv = mod.inv(r.at(lead, col));
    for (std::size_t c = 0; c < r.cols(); ++c) r.at(lead, c) = mod.mul(r.at(lead, c), inv);
    for (std::size_t row = 0; row < r.rows(); ++row) {
      if (row == lead || r.at(row, col) == 0) continue;
      const Residue f = r.at(row, col);
      for (std::size_t c = 0; c < r.cols(); ++c)
        r.at(row, c) = mod.sub(r.at(row, c), mod.mul(f, r.at(lead, c)));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

inline std::size_t rank_of(const FieldMatrix& m) { return rref(m).rank; }

/// Basis of {x : Mx = 0}, one basis vector per row. Row count is
/// cols - rank; a full-rank map yields a 0-row matrix.
inline FieldMatrix null_space_basis(const FieldMatrix& m) {
  const RrefResult rr = rref(m);
  const PrimeModulus mod = m.mod();
  const std::size_t c = m.cols();
  std::vector<bool> is_pivot(c, false);
  for (std::size_t p : rr.pivot_columns) is_pivot[p] = true;
  FieldMatrix basis(mod, 0, c);
  // one basis vector per free column: x_free = 1, pivots balance it out
  for (std::size_t f = 0; f < c; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Residue> x(c, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i)
      x[rr.pivot_columns[i]] = mod.neg(rr.reduced.at(i, f));
    basis.append_row(FieldVector::of(mod, std::move(x)));
  }
  return basis;
}

inline FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.mod() != b.mod()) throw ModulusMismatch("matmul: moduli differ");
  if (a.cols() != b.rows()) throw LengthMismatch("matmul: inner dimensions differ");
  const PrimeModulus mod = a.mod();
  FieldMatrix out(mod, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Residue aik = a.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = mod.add(out.at(i, j), mod.mul(aik, b.at(k, j)));
    }
  return out;
}

/// Inverse of a square invertible matrix (Gauss-Jordan on [A | I]).
inline FieldMatrix inverse(const FieldMatrix& a) {
  if (a.rows() != a.cols()) throw Error("inverse: matrix not square");
  const std::size_t n = a.rows();
  const PrimeModulus mod = a.mod();
  FieldMatrix aug(mod, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const RrefResult rr = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (rr.reduced.at(i, i) != 1) throw Error("inverse: matrix is singular");
  FieldMatrix inv(mod, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
  return inv;
}

}  // namespace pgcover

#endif
