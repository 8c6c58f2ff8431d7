// The cubic curve F^1_3 as the torus C/(Z + zeta Z) with zeta a primitive
// 6th root of unity: exact cocycle tests, twisted conjugation, and the
// constructive two-class normalization. All arithmetic lives in Q(zeta_12),
// with zeta = zeta_12^2, sqrt(-1) = zeta_12^3 and xi = zeta_12 (xi^2 = zeta).
#ifndef FERMAT_ELLIPTIC_HPP
#define FERMAT_ELLIPTIC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermat/cyclotomic.hpp"

namespace fermat {

// z -> zeta^i z + a on C/(Z + zeta Z). Translations are stored reduced
// modulo the lattice: the coefficients of 1 and zeta_12^2 lie in [0, 1).
// Cocycle inputs typically have rational coordinates in the basis (1, zeta);
// conjugators produced by normalization may use all of Q(zeta_12).
class EllAut {
  public:
    EllAut(int rotation, Cyclotomic translation);
    static EllAut identity();
    // a = u + v*zeta.
    static EllAut from_lattice_coords(int rotation, const Rat& u, const Rat& v);

    int rotation() const { return rot_; }
    const Cyclotomic& translation() const { return a_; }
    // (u, v) with a = u + v*zeta; throws when a is not in Q(zeta).
    std::pair<Rat, Rat> lattice_coords() const;

    friend bool operator==(const EllAut& x, const EllAut& y) {
        return x.rot_ == y.rot_ && x.a_ == y.a_;
    }
    friend bool operator!=(const EllAut& x, const EllAut& y) { return !(x == y); }

    std::string to_string() const;

  private:
    int rot_;        // mod 6
    Cyclotomic a_;   // order 12, lattice-reduced
};

EllAut ell_compose(const EllAut& g, const EllAut& h);  // h first, then g
EllAut ell_inverse(const EllAut& g);
// Conjugation by z -> conj(z): (i, a) -> (-i, conj(a)).
EllAut ell_twist(const EllAut& g);

// True iff zeta^i conj(a) + a lies in the lattice.
bool ell_is_cocycle(const EllAut& alpha);

// phi^{-1} * alpha * twist(phi); a right action, preserves cocycles.
EllAut ell_twisted_conjugate(const EllAut& phi, const EllAut& alpha);

// The rotation changes by -2j under conjugation, so i mod 2 is conserved.
int ell_invariant(const EllAut& cocycle);

enum class EllClassLabel { Id, Neg };

std::string to_string(EllClassLabel label);

struct EllNormalization {
    EllClassLabel label;
    EllAut conjugator;   // phi with twisted_conjugate(phi, alpha) = normal_form
    EllAut normal_form;  // z -> z (Id) or z -> -z (Neg), i.e. (0,0) or (3,0)
};

// Kills the translation through the decomposition a + lambda =
// sqrt(-1) xi^i x (lattice shifts |p|,|q| <= shift_bound are searched), then
// normalizes the rotation; the result is recomputed and checked exactly.
EllNormalization ell_normalize(const EllAut& cocycle, int shift_bound = 2);

// All cocycles with translation u + v*zeta, u, v in [0,1) of denominator
// <= max_denominator, over all rotations.
std::vector<EllAut> ell_enumerate_family(int max_denominator);

}  // namespace fermat

#endif
