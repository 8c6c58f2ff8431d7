// Degree-2 classification: exact signatures of rational quadratic forms
// (Sylvester), the Q_{r,s} identification and counting formulas, and the
// matrix-square discriminator separating the signature family from the
// antidiagonal-block form.
#ifndef FERMAT_QUADRIC_HPP
#define FERMAT_QUADRIC_HPP

#include <string>
#include <vector>

#include "fermat/cyclotomic.hpp"
#include "fermat/rational.hpp"

namespace fermat {

class QuadraticForm {
  public:
    explicit QuadraticForm(std::vector<std::vector<Rat>> matrix);  // symmetric required
    static QuadraticForm diagonal(std::vector<Rat> entries);
    // X_0^2 + ... + X_{r-1}^2 - X_r^2 - ... - X_{r+s-1}^2.
    static QuadraticForm q_rs(int r, int s);

    int size() const { return static_cast<int>(m_.size()); }
    const std::vector<std::vector<Rat>>& matrix() const { return m_; }

  private:
    std::vector<std::vector<Rat>> m_;
};

struct Signature {
    int positive = 0;
    int negative = 0;
    int size = 0;

    int rank() const { return positive + negative; }
    bool nondegenerate() const { return rank() == size; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Exact symmetric congruence diagonalization over Q (pivot exchange plus the
// row+column addition trick for zero diagonals).
Signature signature(const QuadraticForm& form);

// Number of real forms of the degree-2 hypersurface of dimension n:
// n/2 + 3 for even n, (n+1)/2 + 1 for odd n (n = 1, 2 agree with the
// classically known counts 2 and 4).
Int quadric_expected_count(int n);

enum class StructureType { PlusType, MinusType };

std::string to_string(StructureType type);

// Invertible matrix over Q(i), a candidate when A * conj(A) = +-I.
class RealStructureMatrix {
  public:
    explicit RealStructureMatrix(std::vector<std::vector<Cyclotomic>> entries);  // order 4
    static RealStructureMatrix from_rational(const std::vector<std::vector<Rat>>& entries);
    // diag(-1 x s, +1 x r).
    static RealStructureMatrix diagonal_example(int s, int r);
    // Antidiagonal blocks (0 1 / -1 0); size must be even.
    static RealStructureMatrix antidiagonal_example(int size);

    int size() const { return static_cast<int>(a_.size()); }
    const std::vector<std::vector<Cyclotomic>>& entries() const { return a_; }

    // P^{-1} * A * conj(P) for invertible P over Q(i); preserves the type.
    RealStructureMatrix conjugated_by(const RealStructureMatrix& p) const;

  private:
    std::vector<std::vector<Cyclotomic>> a_;
};

// PlusType iff A * conj(A) = I (the Q_{r,s} family), MinusType iff = -I
// (the L form; even size only). Throws std::domain_error otherwise.
StructureType structure_discriminator(const RealStructureMatrix& a);

}  // namespace fermat

#endif
