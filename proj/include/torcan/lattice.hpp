#pragma once

// Sections of lattice surjections. A surjection sigma: Z^n -> Z^n' admits
// an integral section tau, and Z^n splits as tau(Z^n') plus a complement of
// rank n - n'. This module computes an explicit (tau, complement basis)
// pair from the Smith decomposition of sigma and re-verifies both defining
// identities before returning.

#include "torcan/intmat.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace torcan {

class LatticeSurjection {
 public:
  explicit LatticeSurjection(IntMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() > matrix_.cols())
      throw std::invalid_argument(
          "LatticeSurjection: target rank exceeds source rank");
  }

  std::size_t source_rank() const { return matrix_.cols(); }
  std::size_t target_rank() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }

 private:
  IntMatrix matrix_;
};

// Surjective over Z iff the Smith form is [I | 0]: full rank and every
// invariant factor equal to 1.
inline bool is_surjective(const LatticeSurjection& s) {
  SmithDecomposition d = smith_normal_form(s.matrix());
  std::vector<Integer> inv = d.invariant_factors();
  if (inv.size() != s.target_rank()) return false;
  for (const Integer& f : inv)
    if (f != 1) return false;
  return true;
}

struct SectionData {
  IntMatrix tau;             // n x n', sigma * tau = identity
  IntMatrix quotient_basis;  // n x m, m = n - n'; [tau | quotient_basis]
                             // is unimodular, so its columns past tau
                             // descend to a basis of the quotient lattice
};

inline SectionData section_and_quotient(const LatticeSurjection& s) {
  if (!is_surjective(s))
    throw std::invalid_argument("section_and_quotient: map is not surjective");
  const std::size_t n = s.source_rank();
  const std::size_t np = s.target_rank();

  // sigma = U * S * V with S = [I | 0], so sigma * (V^-1 [I;0] U^-1) = I.
  SmithDecomposition d = smith_normal_form(s.matrix());
  IntMatrix vinv = d.v.inverse().matrix();
  IntMatrix uinv = d.u.inverse().matrix();
  SectionData out{column_range(vinv, 0, np) * uinv, column_range(vinv, np, n)};

  if (!(s.matrix() * out.tau == IntMatrix::identity(np)))
    throw std::logic_error("section_and_quotient: tau is not a section");
  if (np + out.quotient_basis.cols() != n)
    throw std::logic_error("section_and_quotient: complement rank mismatch");
  Integer det = determinant(hconcat(out.tau, out.quotient_basis));
  if (det != 1 && det != -1)
    throw std::logic_error(
        "section_and_quotient: assembled matrix is not unimodular");
  return out;
}

}  // namespace torcan
