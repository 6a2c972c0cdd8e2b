#pragma once

// Exact arithmetic over GF(p) and dense linear algebra on column spaces.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polyshare/error.hpp"

namespace polyshare {

using Element = std::uint64_t;
using FieldVector = std::vector<Element>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t next_prime_at_least(std::uint64_t n) {
  detail::require(n >= 2, "next_prime_at_least needs n >= 2");
  while (!is_prime(n)) ++n;
  return n;
}

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    detail::require(p < (std::uint64_t{1} << 62), "modulus too large");
    detail::require(is_prime(p), "modulus " + std::to_string(p) + " is not prime");
  }

  std::uint64_t p() const { return p_; }

  Element reduce(std::int64_t v) const {
    const auto sp = static_cast<std::int64_t>(p_);
    std::int64_t r = v % sp;
    return static_cast<Element>(r < 0 ? r + sp : r);
  }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element pow(Element a, std::uint64_t e) const {
    Element result = 1 % p_;
    while (e > 0) {
      if (e & 1U) result = mul(result, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return result;
  }
  Element inv(Element a) const {
    detail::require(a % p_ != 0, "zero has no inverse");
    return pow(a, p_ - 2);
  }

  Element random(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<Element>(0, p_ - 1)(rng);
  }
  Element random_nonzero(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<Element>(1, p_ - 1)(rng);
  }
  FieldVector random_vector(std::size_t n, std::mt19937_64& rng) const {
    FieldVector v(n);
    for (auto& e : v) e = random(rng);
    return v;
  }

  Element dot(const FieldVector& a, const FieldVector& b) const {
    detail::require(a.size() == b.size(), "dot product of vectors with different lengths");
    Element s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
    return s;
  }

 private:
  std::uint64_t p_;
};

inline bool is_zero(const FieldVector& v) {
  for (Element e : v)
    if (e != 0) return false;
  return true;
}

/// Dense row-major matrix over GF(p).
class FieldMatrix {
 public:
  FieldMatrix(int rows, int cols, std::uint64_t p)
      : rows_(rows), cols_(cols), p_(p),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    detail::require(rows >= 0 && cols >= 0, "negative matrix dimension");
  }

  static FieldMatrix zero(int rows, int cols, std::uint64_t p) { return FieldMatrix(rows, cols, p); }

  static FieldMatrix identity(int n, std::uint64_t p) {
    FieldMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
  }

  static FieldMatrix from_columns(int rows, const std::vector<FieldVector>& cols, std::uint64_t p) {
    FieldMatrix m(rows, static_cast<int>(cols.size()), p);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      detail::require(static_cast<int>(cols[j].size()) == rows, "column has the wrong length");
      for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][static_cast<std::size_t>(i)] % p;
    }
    return m;
  }

  static FieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t p) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    PrimeField f(p);
    FieldMatrix m(r, c, p);
    for (int i = 0; i < r; ++i) {
      detail::require(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == c, "ragged matrix");
      for (int j = 0; j < c; ++j) m.at(i, j) = f.reduce(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t p() const { return p_; }

  Element& at(int r, int c) { return data_[index(r, c)]; }
  Element at(int r, int c) const { return data_[index(r, c)]; }

  FieldVector column(int c) const {
    FieldVector v(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = at(r, c);
    return v;
  }

  std::vector<FieldVector> columns() const {
    std::vector<FieldVector> out;
    for (int c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
  }

  FieldVector times(const FieldVector& x) const {
    detail::require(static_cast<int>(x.size()) == cols_, "vector length does not match column count");
    PrimeField f(p_);
    FieldVector y(static_cast<std::size_t>(rows_), 0);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        y[static_cast<std::size_t>(r)] = f.add(y[static_cast<std::size_t>(r)], f.mul(at(r, c), x[static_cast<std::size_t>(c)]));
    return y;
  }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_;
  int cols_;
  std::uint64_t p_;
  std::vector<Element> data_;
};

/// [A | B]
inline FieldMatrix hcat(const FieldMatrix& a, const FieldMatrix& b) {
  detail::require(a.rows() == b.rows(), "hcat needs equal row counts");
  detail::require(a.p() == b.p(), "matrices over different fields");
  FieldMatrix m(a.rows(), a.cols() + b.cols(), a.p());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
  }
  return m;
}

inline FieldMatrix append_column(const FieldMatrix& a, const FieldVector& v) {
  return hcat(a, FieldMatrix::from_columns(a.rows(), {v}, a.p()));
}

struct Echelon {
  FieldMatrix reduced;
  std::vector<int> pivot_columns;
};

inline Echelon reduced_row_echelon(FieldMatrix m) {
  PrimeField f(m.p());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pivot, c));
    const Element scale = f.inv(m.at(row, col));
    for (int c = 0; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), scale);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Element factor = m.at(r, col);
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline int rank_of(const FieldMatrix& m) {
  return static_cast<int>(reduced_row_echelon(m).pivot_columns.size());
}

/// Coefficients x with M x = v, if any.
inline std::optional<FieldVector> solve_in_span(const FieldMatrix& m, const FieldVector& v) {
  detail::require(static_cast<int>(v.size()) == m.rows(), "vector length does not match row count");
  const Echelon e = reduced_row_echelon(append_column(m, v));
  const int last = m.cols();
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == last) return std::nullopt;
  FieldVector x(static_cast<std::size_t>(m.cols()), 0);
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i)
    x[static_cast<std::size_t>(e.pivot_columns[i])] = e.reduced.at(static_cast<int>(i), last);
  return x;
}

inline bool in_span(const FieldMatrix& m, const FieldVector& v) { return solve_in_span(m, v).has_value(); }

/// An independent subset of the columns spanning the same space.
inline FieldMatrix column_basis(const FieldMatrix& m) {
  const Echelon e = reduced_row_echelon(m);
  std::vector<FieldVector> cols;
  for (int c : e.pivot_columns) cols.push_back(m.column(c));
  return FieldMatrix::from_columns(m.rows(), cols, m.p());
}

/// Basis of {x : M x = 0}.
inline FieldMatrix null_space(const FieldMatrix& m) {
  PrimeField f(m.p());
  const Echelon e = reduced_row_echelon(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int c : e.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<FieldVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    FieldVector x(static_cast<std::size_t>(m.cols()), 0);
    x[static_cast<std::size_t>(free)] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i)
      x[static_cast<std::size_t>(e.pivot_columns[i])] = f.neg(e.reduced.at(static_cast<int>(i), free));
    basis.push_back(std::move(x));
  }
  return FieldMatrix::from_columns(m.cols(), basis, m.p());
}

/// Basis of colspace(A) ∩ colspace(B), via the kernel of [A | -B].
inline FieldMatrix intersect_column_spaces(const FieldMatrix& a, const FieldMatrix& b) {
  detail::require(a.rows() == b.rows(), "intersection needs equal row counts");
  detail::require(a.p() == b.p(), "matrices over different fields");
  PrimeField f(a.p());
  FieldMatrix neg_b = b;
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) neg_b.at(r, c) = f.neg(b.at(r, c));
  const FieldMatrix kernel = null_space(hcat(a, neg_b));
  std::vector<FieldVector> images;
  for (int k = 0; k < kernel.cols(); ++k) {
    FieldVector x = kernel.column(k);
    x.resize(static_cast<std::size_t>(a.cols()));
    images.push_back(a.times(x));
  }
  return column_basis(FieldMatrix::from_columns(a.rows(), images, a.p()));
}

/// Every column of `sub` lies in colspace(`space`).
inline bool column_space_contains(const FieldMatrix& space, const FieldMatrix& sub) {
  for (int c = 0; c < sub.cols(); ++c)
    if (!in_span(space, sub.column(c))) return false;
  return true;
}

}  // namespace polyshare
