// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// Elements are residue polynomials of degree < phi(m) modulo the m-th
// cyclotomic polynomial, with rational coefficients. Equality is
// coefficient-wise and therefore decidable; no floating point anywhere.
#ifndef FERMAT_CYCLOTOMIC_HPP
#define FERMAT_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "fermat/rational.hpp"

namespace fermat {

// Phi_m as ascending integer coefficients, computed by dividing x^m - 1 by
// the cyclotomic polynomials of the proper divisors of m. Results are cached.
std::vector<Int> cyclotomic_polynomial(int m);

class Cyclotomic {
  public:
    // Zero of Q(zeta_1) = Q.
    Cyclotomic() : m_(1), c_(1, Rat(0)) {}

    static Cyclotomic zero(int m);
    static Cyclotomic one(int m);
    static Cyclotomic from_rational(int m, const Rat& value);
    // zeta_m^k (k may be negative).
    static Cyclotomic root_of_unity(int m, long k);

    int order() const { return m_; }
    // Residue coefficients, size phi(m), ascending powers of zeta_m.
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws when not rational

    // Complex conjugation zeta_m -> zeta_m^{m-1}.
    Cyclotomic conj() const;
    Cyclotomic inverse() const;  // throws on zero
    Cyclotomic pow(long e) const;
    // Canonical embedding into Q(zeta_new) for m | new_m.
    Cyclotomic promoted(int new_m) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic scaled(const Rat& q) const;

    std::string to_string() const;

  private:
    Cyclotomic(int m, std::vector<Rat> reduced) : m_(m), c_(std::move(reduced)) {}
    static Cyclotomic reduce(int m, std::vector<Rat> poly);

    int m_;
    std::vector<Rat> c_;
};

// True iff c is a root of unity (its order then divides lcm(2, m)).
bool is_root_of_unity(const Cyclotomic& c);

}  // namespace fermat

#endif
