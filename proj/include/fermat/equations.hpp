// Integer-coefficient defining equations for the labeled real forms, and
// their verification by exact cyclotomic substitution back to the Fermat
// polynomial.
#ifndef FERMAT_EQUATIONS_HPP
#define FERMAT_EQUATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fermat/cohomology.hpp"
#include "fermat/polynomial.hpp"

namespace fermat {

struct RealFormEquation {
    ClassLabel label;
    int n = 0;
    int d = 0;
    // Homogeneous of degree d in Y_0..Y_{n+1}; absent exactly for L, which
    // carries a structured descriptor instead.
    std::optional<IntPolynomial> polynomial;
    std::optional<std::string> descriptor;
};

// (Y_j + i Y_k)^d + (Y_j - i Y_k)^d expanded over the integers:
// 2 * sum over even m of (-1)^{m/2} C(d,m) Y_j^{d-m} Y_k^m.
IntPolynomial pair_block(int d, int j, int k, int num_vars);

// K(s,t): s negative d-th powers, t positive ones, pair blocks on the rest.
// H(r) (odd d): r positive powers plus pair blocks. L: descriptor only.
RealFormEquation emit_equation(const ClassLabel& label, const GroupParams& params);
std::vector<RealFormEquation> emit_all_equations(const GroupParams& params);

// Substitutes the forward coordinate change (Y = zeta_{2d} X on negative
// variables, the invariant pair change on swap pairs) over Q(zeta_{4d}) and
// checks the result is a root of unity times X_0^d + ... + X_{n+1}^d.
bool verify_equation(const RealFormEquation& eq, const ClassLabel& label,
                     const GroupParams& params);

std::string equation_text(const RealFormEquation& eq);

}  // namespace fermat

#endif
