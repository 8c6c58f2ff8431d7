// Exact integer/rational arithmetic aliases and small helpers on top of GMP.
#ifndef FERMAT_RATIONAL_HPP
#define FERMAT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fermat {

using Int = mpz_class;
using Rat = mpq_class;

// num/den with canonicalization; GMP does not canonicalize two-argument
// rational constructions on its own.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline Rat frac_part(const Rat& q) { return q - Rat(floor_rat(q)); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Nonnegative residue of a mod m (m > 0).
inline int mod_int(long a, int m) {
    long r = a % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& text) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace fermat

#endif
