// Exact arithmetic for Aut F^n_d = G^n_d x| S_{n+2}: diagonal root-of-unity
// scalings extended by coordinate permutations, the Galois twist, and the
// action on projective points with cyclotomic coordinates.
//
// Composition convention (fixed once, for the whole library):
//   an element g = (v, pi) acts on a point P by
//       act(g, P)_i = zeta_d^{v_i} * P_{pi(i)},
//   and compose(g, h) is the automorphism "h first, then g", so that
//       act(compose(g, h), P) == act(g, act(h, P)).
// Concretely compose((v, pi), (w, mu)) = (v + w o pi, i -> mu(pi(i))).
// The act_on_point consistency tests are the arbiter for this choice.
#ifndef FERMAT_GROUP_HPP
#define FERMAT_GROUP_HPP

#include <compare>
#include <string>
#include <vector>

#include "fermat/cyclotomic.hpp"
#include "fermat/rational.hpp"

namespace fermat {

struct GroupParams {
    int n;  // dimension of the hypersurface, >= 1
    int d;  // degree, >= 2

    GroupParams(int n_, int d_);

    int num_vars() const { return n + 2; }
    // True iff the monomial-linear subgroup is the full automorphism group:
    // d >= 3 and (n, d) not in {(1,3), (2,4)}.
    bool shioda_applies() const;

    friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

// |G^n_d x| S_{n+2}| = d^{n+1} * (n+2)!
Int group_order(const GroupParams& params);

class Permutation {
  public:
    explicit Permutation(int size);  // identity
    explicit Permutation(std::vector<int> images);
    static Permutation transposition(int size, int a, int b);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;
    bool is_involution() const;
    bool has_fixed_point() const;
    // The 2-cycles {i, sigma(i)} of an involution, each as (min, max).
    std::vector<std::pair<int, int>> two_cycles() const;
    // Cycle lengths, descending.
    std::vector<int> cycle_type() const;

    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

  private:
    std::vector<int> img_;
};

// Exponent vector mod d, projectively normalized: the diagonal scaling
// D(N,...,N) acts trivially, so the canonical form has last entry 0.
class ExponentVector {
  public:
    ExponentVector(std::vector<int> entries, int d);
    static ExponentVector zero(int size);
    static ExponentVector unit(int size, int position, int d);  // g(position, 1)

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    const std::vector<int>& entries() const { return e_; }
    bool is_zero() const;

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  private:
    explicit ExponentVector(std::vector<int> canonical) : e_(std::move(canonical)) {}
    std::vector<int> e_;
};

class AutElement {
  public:
    AutElement(GroupParams params, ExponentVector vec, Permutation perm);

    static AutElement identity(const GroupParams& params);
    static AutElement scaling(const GroupParams& params, std::vector<int> exponents);
    // g(i, j): multiply coordinate i by zeta_d^j.
    static AutElement coordinate_scaling(const GroupParams& params, int i, int j);
    static AutElement from_permutation(const GroupParams& params, Permutation perm);

    const GroupParams& params() const { return params_; }
    const ExponentVector& vec() const { return vec_; }
    const Permutation& perm() const { return perm_; }
    bool is_identity() const;

    // Orbit representatives are chosen as the lexicographic minimum of
    // (permutation images, vector entries); this ordering implements that.
    friend auto operator<=>(const AutElement& a, const AutElement& b) {
        if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
        return a.vec_ <=> b.vec_;
    }
    friend bool operator==(const AutElement& a, const AutElement& b) {
        return a.params_ == b.params_ && a.perm_ == b.perm_ && a.vec_ == b.vec_;
    }

    std::string to_string() const;

  private:
    GroupParams params_;
    ExponentVector vec_;
    Permutation perm_;
};

AutElement compose(const AutElement& g, const AutElement& h);
AutElement inverse(const AutElement& g);
// Conjugation by the coordinatewise real structure: negates the exponent
// vector, fixes the permutation. An involutive group automorphism.
AutElement twist(const AutElement& g);

struct ProjectivePoint {
    std::vector<Cyclotomic> coords;  // not all zero, common cyclotomic order

    ProjectivePoint(std::vector<Cyclotomic> c);
    int order() const;
};

ProjectivePoint act_on_point(const AutElement& g, const ProjectivePoint& p);
// Value of X_0^d + ... + X_{n+1}^d at the point's coordinates.
Cyclotomic fermat_value(const ProjectivePoint& p, int d);

}  // namespace fermat

#endif
