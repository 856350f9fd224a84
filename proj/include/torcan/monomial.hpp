#pragma once

// Monomial (Laurent) maps between tori of equal dimension, their exponent
// matrices, composition and inversion, equivariance with respect to diagonal
// weight actions of a cyclic group, and the explicit degree-one equivariant
// isomorphism underlying the cylinder construction.

#include "torcan/intmat.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torcan {

// A map T^n -> T^n of tori, x |-> (x^{E_1}, ..., x^{E_n}) where E_j is row
// j of the exponent matrix: target coordinate j pulls back to the Laurent
// monomial prod_i x_i^{E(j, i)}.
class MonomialMap {
 public:
  explicit MonomialMap(IntMatrix exponents) : exponents_(std::move(exponents)) {
    if (exponents_.rows() != exponents_.cols())
      throw std::invalid_argument("MonomialMap: exponent matrix must be square");
  }

  static MonomialMap identity(std::size_t n) {
    return MonomialMap(IntMatrix::identity(n));
  }

  std::size_t dim() const { return exponents_.rows(); }
  const IntMatrix& exponents() const { return exponents_; }

  bool is_isomorphism() const {
    Integer d = determinant(exponents_);
    return d == 1 || d == -1;
  }

  friend bool operator==(const MonomialMap& f, const MonomialMap& g) {
    return f.exponents_ == g.exponents_;
  }
  friend bool operator!=(const MonomialMap& f, const MonomialMap& g) {
    return !(f == g);
  }

  // Coordinate-wise description, e.g. "(x1^2 x2, x1^5 x2^3)".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < dim(); ++j) {
      if (j) s += ", ";
      bool any = false;
      for (std::size_t i = 0; i < dim(); ++i) {
        const Integer& e = exponents_(j, i);
        if (e == 0) continue;
        if (any) s += " ";
        s += "x" + std::to_string(i + 1);
        if (e != 1) s += "^" + e.str();
        any = true;
      }
      if (!any) s += "1";
    }
    return s + ")";
  }

 private:
  IntMatrix exponents_;
};

// Composite f after g: exponent matrices multiply, E_{f o g} = E_f * E_g.
inline MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  if (f.dim() != g.dim())
    throw std::invalid_argument("compose: dimension mismatch");
  return MonomialMap(f.exponents() * g.exponents());
}

// Inverse of a monomial isomorphism (exponent matrix in GL(n, Z)).
inline MonomialMap invert(const MonomialMap& f) {
  if (!f.is_isomorphism())
    throw std::invalid_argument("invert: map is not an isomorphism");
  return MonomialMap(UnimodularMatrix(f.exponents()).inverse().matrix());
}

// The diagonal action of Z/d on an n-torus with weights (w_1, ..., w_n):
// the chosen generator scales coordinate i by a fixed primitive d-th root
// of unity raised to w_i.
class DiagonalWeightAction {
 public:
  DiagonalWeightAction(Integer modulus, std::vector<Integer> weights)
      : modulus_(std::move(modulus)), weights_(std::move(weights)) {
    if (modulus_ < 1)
      throw std::invalid_argument("DiagonalWeightAction: modulus must be >= 1");
    for (Integer& w : weights_) w = mod_floor(w, modulus_);
  }

  const Integer& modulus() const { return modulus_; }
  std::size_t dim() const { return weights_.size(); }
  const std::vector<Integer>& weights() const { return weights_; }

 private:
  Integer modulus_;
  std::vector<Integer> weights_;
};

// f intertwines the two actions iff E * w_src == w_tgt (mod d)
// componentwise: target coordinate j, a monomial in the source coordinates,
// transforms with weight (row j of E) . w_src, which must be the weight
// assigned to it on the target side.
inline bool is_equivariant(const MonomialMap& f,
                           const DiagonalWeightAction& source,
                           const DiagonalWeightAction& target) {
  if (source.modulus() != target.modulus())
    throw std::invalid_argument("is_equivariant: modulus mismatch");
  if (source.dim() != f.dim() || target.dim() != f.dim())
    throw std::invalid_argument("is_equivariant: dimension mismatch");
  const Integer& d = source.modulus();
  for (std::size_t j = 0; j < f.dim(); ++j) {
    Integer acc = 0;
    for (std::size_t i = 0; i < f.dim(); ++i)
      acc += f.exponents()(j, i) * source.weights()[i];
    if (mod_floor(acc - target.weights()[j], d) != 0) return false;
  }
  return true;
}

// The degree-one monomial isomorphism of the 2-torus that intertwines the
// diagonal Z/d actions with weights (1, 0) and (k, 0), for k a unit mod d:
//
//   (x, y) |-> (x^k y, x^{bd} y^a)   with   a*k - b*d = 1,  0 <= a < d,
//
// i.e. exponent matrix E = [[k, 1], [b*d, a]] of determinant 1. Weight
// check: E * (1, 0) = (k, b*d) == (k, 0) (mod d). Both the determinant and
// the equivariance of the map and of its inverse are re-verified before
// returning.
struct CylinderIsomorphism {
  MonomialMap f;
  Integer a;
  Integer b;
};

inline CylinderIsomorphism cylinder_isomorphism_map(const Integer& d,
                                                    const Integer& k) {
  if (d < 2)
    throw std::invalid_argument("cylinder_isomorphism_map: modulus must be >= 2");
  ExtGcd e = ext_gcd(k, d);
  if (e.g != 1)
    throw std::invalid_argument(
        "cylinder_isomorphism_map: k is not invertible modulo d");
  Integer a = mod_floor(e.x, d);
  Integer b = (a * k - 1) / d;
  MonomialMap f(IntMatrix::from_rows({{k, 1}, {b * d, a}}));
  if (determinant(f.exponents()) != 1)
    throw std::logic_error("cylinder_isomorphism_map: determinant is not 1");
  DiagonalWeightAction src(d, {1, 0});
  DiagonalWeightAction tgt(d, {mod_floor(k, d), 0});
  if (!is_equivariant(f, src, tgt) || !is_equivariant(invert(f), tgt, src))
    throw std::logic_error(
        "cylinder_isomorphism_map: equivariance verification failed");
  return {std::move(f), std::move(a), std::move(b)};
}

}  // namespace torcan
