#include "fermat/equations.hpp"

namespace fermat {

IntPolynomial pair_block(int d, int j, int k, int num_vars) {
    if (d < 1) throw std::domain_error("pair_block: d must be >= 1");
    if (j == k || j < 0 || k < 0 || j >= num_vars || k >= num_vars)
        throw std::invalid_argument("pair_block: bad variable indices");
    IntPolynomial p(num_vars);
    for (int m = 0; m <= d; m += 2) {
        Int coeff = 2 * binomial(d, m);
        if ((m / 2) % 2 == 1) coeff = -coeff;
        std::vector<int> exps(num_vars, 0);
        exps[j] = d - m;
        exps[k] = m;
        p.add_term(std::move(exps), coeff);
    }
    return p;
}

namespace {

IntPolynomial power_term(int num_vars, int var, int d, const Int& coeff) {
    std::vector<int> exps(num_vars, 0);
    exps[var] = d;
    return IntPolynomial::monomial(num_vars, std::move(exps), coeff);
}

}  // namespace

RealFormEquation emit_equation(const ClassLabel& label, const GroupParams& params) {
    if (params.d < 3) throw std::domain_error("emit_equation requires d >= 3");
    validate_label(label, params);
    const int nv = params.num_vars();
    const int d = params.d;
    RealFormEquation eq{label, params.n, params.d, std::nullopt, std::nullopt};

    if (label.kind == LabelKind::L) {
        eq.descriptor =
            "quotient Z(n,d) of the complex degree-d Fermat hypersurface by the "
            "fixed-point-free twisted real structure built from antidiagonal blocks "
            "(0 1; -1 0) composed with coordinatewise conjugation; no real hypersurface "
            "equation; real locus empty";
        return eq;
    }

    const int minus = (label.kind == LabelKind::K) ? label.s : 0;
    const int plus = (label.kind == LabelKind::K) ? label.t : label.r;
    IntPolynomial poly(nv);
    for (int i = 0; i < minus; ++i) poly += power_term(nv, i, d, Int(-1));
    for (int i = minus; i < minus + plus; ++i) poly += power_term(nv, i, d, Int(1));
    for (int j = minus + plus; j + 1 < nv; j += 2) poly += pair_block(d, j, j + 1, nv);
    eq.polynomial = std::move(poly);
    return eq;
}

std::vector<RealFormEquation> emit_all_equations(const GroupParams& params) {
    std::vector<RealFormEquation> out;
    for (const ClassLabel& label : canonical_label_list(params))
        out.push_back(emit_equation(label, params));
    return out;
}

bool verify_equation(const RealFormEquation& eq, const ClassLabel& label,
                     const GroupParams& params) {
    validate_label(label, params);
    if (label.kind == LabelKind::L)
        throw std::invalid_argument("verify_equation: the L form has no hypersurface equation");
    if (!(eq.label == label) || eq.n != params.n || eq.d != params.d || !eq.polynomial)
        throw std::invalid_argument("verify_equation: equation does not match label/params");

    const int nv = params.num_vars();
    const int d = params.d;
    const int m = 4 * d;  // contains zeta_{2d} and sqrt(-1)
    const int minus = (label.kind == LabelKind::K) ? label.s : 0;
    const int plus = (label.kind == LabelKind::K) ? label.t : label.r;

    const Cyclotomic xi_2d = Cyclotomic::root_of_unity(m, 2);  // zeta_{4d}^2 = zeta_{2d}
    const Cyclotomic imag = Cyclotomic::root_of_unity(m, d);   // zeta_4
    const Rat half = make_rat(1, 2);

    auto var = [&](int i) {
        std::vector<int> exps(nv, 0);
        exps[i] = 1;
        return CycPolynomial::monomial(nv, std::move(exps), Cyclotomic::one(m));
    };

    // Forward coordinate change Y -> X.
    std::vector<CycPolynomial> images;
    images.reserve(nv);
    for (int i = 0; i < minus; ++i) images.push_back(var(i).scaled(xi_2d));
    for (int i = minus; i < minus + plus; ++i) images.push_back(var(i));
    for (int j = minus + plus; j + 1 < nv; j += 2) {
        // Y_j = (X_j + X_k)/2,  Y_k = (X_j - X_k)/(2i); both are invariant
        // under "swap and conjugate", and Y_j + i Y_k = X_j, Y_j - i Y_k = X_k.
        CycPolynomial sum = var(j) + var(j + 1);
        CycPolynomial diff = var(j) - var(j + 1);
        images.push_back(sum.scaled(Cyclotomic::from_rational(m, half)));
        images.push_back(diff.scaled((-imag).scaled(half)));
    }

    const CycPolynomial substituted = to_cyclotomic(*eq.polynomial, m).substitute(images);

    std::vector<int> lead(nv, 0);
    lead[0] = d;
    const Cyclotomic unit = substituted.coefficient(lead);
    if (unit.is_zero() || !is_root_of_unity(unit)) return false;

    CycPolynomial fermat(nv);
    for (int i = 0; i < nv; ++i) {
        std::vector<int> exps(nv, 0);
        exps[i] = d;
        fermat.add_term(std::move(exps), unit);
    }
    return substituted == fermat;
}

std::string equation_text(const RealFormEquation& eq) {
    if (eq.descriptor) return *eq.descriptor;
    return polynomial_text(*eq.polynomial);
}

}  // namespace fermat
