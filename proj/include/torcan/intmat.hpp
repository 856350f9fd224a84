#pragma once

// Exact integer linear algebra over arbitrary-precision integers: matrices,
// Bezout witnesses, Smith and Hermite normal forms, unimodular matrices.
// Every operation is a pure function on values; nothing here mutates its
// arguments or keeps hidden state.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torcan {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_of(a / gcd_of(a, b) * b);
}

// Quotient rounded toward minus infinity; b must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // cpp_int division truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Residue of a modulo m normalized into [0, m); m must be positive.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

struct ExtGcd {
  Integer g;  // gcd(a, b) >= 0
  Integer x;  // a*x + b*y == g
  Integer y;
};

// Extended Euclid with a fixed normalization: g >= 0, a*x + b*y = g, |x|
// minimal among all Bezout solutions, ties resolved toward x >= 0.
// ext_gcd(0, 0) = (0, 0, 0).
inline ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) return {0, 0, 0};
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  Integer g = old_r, x = old_s;
  if (g < 0) {
    g = -g;
    x = -x;
  }
  Integer y = 0;
  if (b == 0) return {g, x, y};  // a != 0: x = sign(a) is forced, y = 0
  // The solution set for x is x0 + t*(|b|/g); pick the representative of
  // minimal absolute value, preferring the nonnegative one on a tie.
  Integer m = abs_of(b) / g;
  x = mod_floor(x, m);
  Integer alt = x - m;
  if (abs_of(alt) < abs_of(x)) x = alt;
  y = (g - a * x) / b;
  return {g, x, y};
}

// Inverse of a modulo m (m >= 1), normalized into [0, m); requires
// gcd(a, m) == 1. For m == 1 the inverse is 0.
inline Integer inv_mod(const Integer& a, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("inv_mod: modulus must be positive");
  ExtGcd e = ext_gcd(mod_floor(a, m), m);
  if (e.g != 1) throw std::invalid_argument("inv_mod: element is not a unit");
  return mod_floor(e.x, m);
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("from_rows: ragged row lengths");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix diagonal(const std::vector<Integer>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const Integer& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix::at");
    return entries_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const Integer& e : entries_)
      if (e != 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ",";
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += (*this)(i, j).str();
      }
      s += "]";
    }
    s += "]";
    return s;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> entries_;  // row-major
};

// Copies src into dst starting at (r0, c0); bounds are checked.
inline void paste_block(IntMatrix& dst, std::size_t r0, std::size_t c0,
                        const IntMatrix& src) {
  if (r0 + src.rows() > dst.rows() || c0 + src.cols() > dst.cols())
    throw std::invalid_argument("paste_block: block does not fit");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      dst(r0 + i, c0 + j) = src(i, j);
}

// Columns [c0, c1) as a new matrix.
inline IntMatrix column_range(const IntMatrix& m, std::size_t c0,
                              std::size_t c1) {
  if (c0 > c1 || c1 > m.cols())
    throw std::invalid_argument("column_range: bad range");
  IntMatrix r(m.rows(), c1 - c0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = c0; j < c1; ++j) r(i, j - c0) = m(i, j);
  return r;
}

// Horizontal concatenation [a | b].
inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  IntMatrix r(a.rows(), a.cols() + b.cols());
  paste_block(r, 0, 0, a);
  paste_block(r, 0, a.cols(), b);
  return r;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix w = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

class UnimodularMatrix;
struct HermiteResult;
inline HermiteResult hermite_normal_form(const IntMatrix& a);

// A square integer matrix whose determinant is +1 or -1, verified at
// construction. The inverse is again integral.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(IntMatrix m) : inner_(std::move(m)) {
    if (!inner_.is_square())
      throw std::invalid_argument("UnimodularMatrix: not square");
    det_ = determinant(inner_);
    if (det_ != 1 && det_ != -1)
      throw std::invalid_argument(
          "UnimodularMatrix: determinant is not +1 or -1 (got " + det_.str() +
          ")");
  }

  static UnimodularMatrix identity(std::size_t n) {
    return UnimodularMatrix(IntMatrix::identity(n));
  }

  const IntMatrix& matrix() const { return inner_; }
  const Integer& det() const { return det_; }
  std::size_t size() const { return inner_.rows(); }

  UnimodularMatrix inverse() const;  // defined after hermite_normal_form

  friend UnimodularMatrix operator*(const UnimodularMatrix& a,
                                    const UnimodularMatrix& b) {
    return UnimodularMatrix(a.inner_ * b.inner_);
  }
  friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) {
    return a.inner_ == b.inner_;
  }

  std::string to_string() const { return inner_.to_string(); }

 private:
  IntMatrix inner_;
  Integer det_;
};

// Smith decomposition a = u * s * v with u, v unimodular and s diagonal,
// nonnegative, each diagonal entry dividing the next.
struct SmithDecomposition {
  UnimodularMatrix u;
  IntMatrix s;
  UnimodularMatrix v;

  // Nonzero diagonal entries d1 | d2 | ... (the invariant factors).
  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> f;
    const std::size_t lim = std::min(s.rows(), s.cols());
    for (std::size_t i = 0; i < lim; ++i)
      if (s(i, i) != 0) f.push_back(s(i, i));
    return f;
  }

  std::size_t rank() const { return invariant_factors().size(); }
};

// Smith normal form. Pivot policy: at each step pick the entry of smallest
// nonzero magnitude in the active submatrix, scanning row-major (first
// occurrence wins), which makes the whole run deterministic.
inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  // Invariant maintained throughout: a == u * s * v. A row operation E
  // applied to s (s <- E s) is compensated on u by u <- u E^{-1}; a column
  // operation F (s <- s F) is compensated on v by v <- F^{-1} v.
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(s(i, c), s(j, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(u(r, i), u(r, j));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(s(r, i), s(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(v(i, c), v(j, c));
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) s(i, c) = -s(i, c);
    for (std::size_t r = 0; r < m; ++r) u(r, i) = -u(r, i);
  };
  // s: row[tgt] += q * row[src];  u: col[src] -= q * col[tgt]
  auto add_row = [&](std::size_t tgt, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) s(tgt, c) += q * s(src, c);
    for (std::size_t r = 0; r < m; ++r) u(r, src) -= q * u(r, tgt);
  };
  // s: col[tgt] += q * col[src];  v: row[src] -= q * row[tgt]
  auto add_col = [&](std::size_t tgt, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m; ++r) s(r, tgt) += q * s(r, src);
    for (std::size_t c = 0; c < n; ++c) v(src, c) -= q * v(tgt, c);
  };

  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    // Locate the smallest-magnitude nonzero entry of the active submatrix.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (s(i, j) != 0 &&
            (!found || abs_of(s(i, j)) < abs_of(s(pi, pj)))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot; a nonzero remainder is strictly
      // smaller than the pivot and gets swapped up to replace it.
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        add_row(i, t, -(s(i, t) / s(t, t)));
        if (s(i, t) != 0) {
          swap_rows(t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        add_col(j, t, -(s(t, j) / s(t, t)));
        if (s(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot divides everything that remains? If not, fold the offending
      // row into row t and keep reducing.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (s(i, j) % s(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) negate_row(t);
  }

  SmithDecomposition d{UnimodularMatrix(u), s, UnimodularMatrix(v)};
  if (!(u * s * v == a))
    throw std::logic_error("smith_normal_form: decomposition check failed");
  return d;
}

// Row-style Hermite normal form h = u * a: row echelon, pivots positive,
// entries above each pivot reduced into [0, pivot). The rows of h span the
// same lattice as the rows of a.
struct HermiteResult {
  IntMatrix h;
  UnimodularMatrix u;
};

inline HermiteResult hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u(i, c), u(j, c));
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) h(i, c) = -h(i, c);
    for (std::size_t c = 0; c < m; ++c) u(i, c) = -u(i, c);
  };
  auto add_row = [&](std::size_t tgt, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) h(tgt, c) += q * h(src, c);
    for (std::size_t c = 0; c < m; ++c) u(tgt, c) += q * u(src, c);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      // Smallest-magnitude nonzero entry in column c at or below row r.
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (p == m || abs_of(h(i, c)) < abs_of(h(p, c))))
          p = i;
      if (p == m) break;
      swap_rows(r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        add_row(i, r, -(h(i, c) / h(r, c)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;  // no pivot in this column
    if (h(r, c) < 0) negate_row(r);
    for (std::size_t i = 0; i < r; ++i)
      add_row(i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }

  HermiteResult res{h, UnimodularMatrix(u)};
  if (!(res.u.matrix() * a == h))
    throw std::logic_error("hermite_normal_form: transform check failed");
  return res;
}

inline UnimodularMatrix UnimodularMatrix::inverse() const {
  // The Hermite form of a unimodular matrix is the identity, so the recorded
  // row transform is exactly the inverse.
  HermiteResult r = hermite_normal_form(inner_);
  if (!(r.h == IntMatrix::identity(size())))
    throw std::logic_error("UnimodularMatrix::inverse: HNF is not identity");
  return r.u;
}

// Random element of GL(n, Z) as a product of elementary transvections,
// swaps and a sign flip. Uses raw mt19937_64 draws (reduced by modulo) so the
// stream is identical on every platform.
inline UnimodularMatrix random_unimodular(std::size_t n, std::mt19937_64& rng,
                                          std::size_t ops = 0) {
  if (ops == 0) ops = 6 * n + 4;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t t = 0; t < ops; ++t) {
    std::uint64_t kind = rng() % 4;
    if (n < 2) kind = 3;
    if (kind <= 1) {  // row i += (+-1) * row j
      std::size_t i = static_cast<std::size_t>(rng() % n);
      std::size_t j = static_cast<std::size_t>(rng() % (n - 1));
      if (j >= i) ++j;
      Integer q = (kind == 0) ? 1 : -1;
      for (std::size_t c = 0; c < n; ++c) m(i, c) += q * m(j, c);
    } else if (kind == 2) {  // swap two rows
      std::size_t i = static_cast<std::size_t>(rng() % n);
      std::size_t j = static_cast<std::size_t>(rng() % (n - 1));
      if (j >= i) ++j;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    } else {  // negate a row
      if (n == 0) continue;
      std::size_t i = static_cast<std::size_t>(rng() % n);
      for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
    }
  }
  return UnimodularMatrix(m);
}

}  // namespace torcan
