#pragma once

// Finite abelian groups in invariant-factor form, their elements, and
// canonical subgroup arithmetic. A group Z/f1 x ... x Z/fk (f1 | f2 | ...)
// is presented as Z^k modulo the relation lattice spanned by f_i * e_i; a
// subgroup is represented canonically by the Hermite basis of the full
// preimage lattice of its generators (relations included), which makes
// subgroup equality a matrix comparison.

#include "torcan/intmat.hpp"

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torcan {

class FinAbGroup {
 public:
  FinAbGroup() = default;  // the trivial group

  static FinAbGroup from_invariant_factors(std::vector<Integer> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i] < 2)
        throw std::invalid_argument(
            "FinAbGroup: invariant factors must be >= 2");
      if (i > 0 && factors[i] % factors[i - 1] != 0)
        throw std::invalid_argument(
            "FinAbGroup: invariant factors must form a divisibility chain");
    }
    FinAbGroup g;
    g.factors_ = std::move(factors);
    return g;
  }

  // Normalizes an arbitrary list of cyclic moduli (each >= 1) into invariant
  // factors via the Smith form of the diagonal relation matrix.
  static FinAbGroup from_moduli(const std::vector<Integer>& moduli) {
    for (const Integer& m : moduli)
      if (m < 1)
        throw std::invalid_argument("FinAbGroup: moduli must be >= 1");
    SmithDecomposition d = smith_normal_form(IntMatrix::diagonal(moduli));
    std::vector<Integer> factors;
    for (const Integer& f : d.invariant_factors())
      if (f > 1) factors.push_back(f);
    return from_invariant_factors(std::move(factors));
  }

  static FinAbGroup cyclic(const Integer& d) { return from_moduli({d}); }

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool trivial() const { return factors_.empty(); }

  Integer order() const {
    Integer o = 1;
    for (const Integer& f : factors_) o *= f;
    return o;
  }

  Integer exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) {
    return !(a == b);
  }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "x";
      s += "Z" + factors_[i].str();
    }
    return s;
  }

 private:
  std::vector<Integer> factors_;
};

class GroupElement {
 public:
  GroupElement(FinAbGroup group, std::vector<Integer> coords)
      : group_(std::move(group)), coords_(std::move(coords)) {
    if (coords_.size() != group_.rank())
      throw std::invalid_argument(
          "GroupElement: coordinate count does not match the group rank");
    reduce();
  }

  static GroupElement zero(const FinAbGroup& g) {
    return GroupElement(g, std::vector<Integer>(g.rank(), 0));
  }

  const FinAbGroup& group() const { return group_; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const {
    for (const Integer& c : coords_)
      if (c != 0) return false;
    return true;
  }

  GroupElement operator+(const GroupElement& o) const {
    require_same_group(o);
    std::vector<Integer> c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return GroupElement(group_, std::move(c));
  }

  GroupElement operator-() const {
    std::vector<Integer> c = coords_;
    for (Integer& x : c) x = -x;
    return GroupElement(group_, std::move(c));
  }

  GroupElement scaled(const Integer& k) const {
    std::vector<Integer> c = coords_;
    for (Integer& x : c) x *= k;
    return GroupElement(group_, std::move(c));
  }

  // Order of the element: lcm over coordinates of f_i / gcd(c_i, f_i).
  Integer order() const {
    Integer o = 1;
    const std::vector<Integer>& f = group_.invariant_factors();
    for (std::size_t i = 0; i < coords_.size(); ++i)
      o = lcm_of(o, f[i] / gcd_of(coords_[i], f[i]));
    return o;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group_ == b.group_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }

  std::string to_string() const {
    if (coords_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ":";
      s += coords_[i].str();
    }
    return s;
  }

 private:
  void reduce() {
    const std::vector<Integer>& f = group_.invariant_factors();
    for (std::size_t i = 0; i < coords_.size(); ++i)
      coords_[i] = mod_floor(coords_[i], f[i]);
  }
  void require_same_group(const GroupElement& o) const {
    if (group_ != o.group_)
      throw std::invalid_argument("GroupElement: group mismatch");
  }

  FinAbGroup group_;
  std::vector<Integer> coords_;
};

// Convenience: the residue class r in Z/d (for d == 1 this is the zero
// element of the trivial group).
inline GroupElement cyclic_element(const Integer& d, const Integer& r) {
  FinAbGroup g = FinAbGroup::cyclic(d);
  if (g.trivial()) return GroupElement::zero(g);
  return GroupElement(g, {r});
}

class Subgroup {
 public:
  const FinAbGroup& ambient() const { return ambient_; }
  // k x k upper-triangular Hermite basis of the preimage lattice in Z^k
  // (relation rows folded in); the canonical representation.
  const IntMatrix& basis_hnf() const { return basis_; }
  const Integer& order() const { return order_; }

  bool contains(const GroupElement& e) const {
    if (e.group() != ambient_)
      throw std::invalid_argument("Subgroup::contains: group mismatch");
    // Solve y * basis = coords by forward substitution along the columns;
    // membership is exact divisibility at every pivot.
    const std::size_t k = ambient_.rank();
    std::vector<Integer> rem = e.coords();
    std::vector<Integer> y(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      Integer acc = rem[j];
      for (std::size_t i = 0; i < j; ++i) acc -= y[i] * basis_(i, j);
      if (basis_(j, j) == 0) {
        if (acc != 0) return false;
        continue;
      }
      if (acc % basis_(j, j) != 0) return false;
      y[j] = acc / basis_(j, j);
    }
    return true;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend Subgroup subgroup_generated(const FinAbGroup&,
                                     const std::vector<GroupElement>&);
  FinAbGroup ambient_;
  IntMatrix basis_;
  Integer order_;
};

inline Subgroup subgroup_generated(const FinAbGroup& g,
                                   const std::vector<GroupElement>& gens) {
  for (const GroupElement& e : gens)
    if (e.group() != g)
      throw std::invalid_argument(
          "subgroup_generated: generator does not live in the ambient group");
  const std::size_t k = g.rank();
  IntMatrix stacked(gens.size() + k, k);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) stacked(i, j) = gens[i].coords()[j];
  for (std::size_t j = 0; j < k; ++j)
    stacked(gens.size() + j, j) = g.invariant_factors()[j];
  HermiteResult hr = hermite_normal_form(stacked);
  IntMatrix basis(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) basis(i, j) = hr.h(i, j);
  // The relation rows make the lattice full rank, so the echelon is square
  // upper triangular with positive diagonal; its determinant is the index.
  Integer index = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (basis(i, i) <= 0)
      throw std::logic_error("subgroup_generated: degenerate Hermite basis");
    index *= basis(i, i);
  }
  Subgroup s;
  s.ambient_ = g;
  s.basis_ = basis;
  s.order_ = g.order() / index;
  return s;
}

inline bool subgroups_equal(const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("subgroups_equal: ambient group mismatch");
  return a.basis_hnf() == b.basis_hnf();
}

// G / s, again in invariant-factor form: the Smith form of the preimage
// basis of s presents the quotient.
inline FinAbGroup quotient_group(const FinAbGroup& g, const Subgroup& s) {
  if (s.ambient() != g)
    throw std::invalid_argument("quotient_group: s is not a subgroup of g");
  SmithDecomposition d = smith_normal_form(s.basis_hnf());
  std::vector<Integer> factors;
  for (const Integer& f : d.invariant_factors())
    if (f > 1) factors.push_back(f);
  return FinAbGroup::from_invariant_factors(std::move(factors));
}

}  // namespace torcan
