#include "fermat/elliptic.hpp"

#include <numeric>
#include <sstream>

namespace fermat {

namespace {

constexpr int kOrder = 12;

Cyclotomic zeta_pow(int e) { return Cyclotomic::root_of_unity(kOrder, 2L * e); }  // zeta_6^e

// Reduce the coefficients of 1 and zeta (= zeta_12^2) into [0, 1); the
// lattice is Z + Z*zeta.
Cyclotomic lattice_reduce(const Cyclotomic& a) {
    Cyclotomic x = a.promoted(kOrder);
    const auto& c = x.coeffs();
    Cyclotomic shift = Cyclotomic::from_rational(kOrder, Rat(floor_rat(c[0]))) +
                       Cyclotomic::root_of_unity(kOrder, 2).scaled(Rat(floor_rat(c[2])));
    return x - shift;
}

}  // namespace

EllAut::EllAut(int rotation, Cyclotomic translation)
    : rot_(mod_int(rotation, 6)), a_(lattice_reduce(translation)) {}

EllAut EllAut::identity() { return EllAut(0, Cyclotomic::zero(kOrder)); }

EllAut EllAut::from_lattice_coords(int rotation, const Rat& u, const Rat& v) {
    Cyclotomic a = Cyclotomic::from_rational(kOrder, u) +
                   Cyclotomic::root_of_unity(kOrder, 2).scaled(v);
    return EllAut(rotation, std::move(a));
}

std::pair<Rat, Rat> EllAut::lattice_coords() const {
    const auto& c = a_.coeffs();
    if (c[1] != 0 || c[3] != 0)
        throw std::domain_error("EllAut translation is not in Q(zeta): " + a_.to_string());
    return {c[0], c[2]};
}

std::string EllAut::to_string() const {
    std::ostringstream out;
    out << "(i=" << rot_ << ", a=" << a_.to_string() << ")";
    return out.str();
}

EllAut ell_compose(const EllAut& g, const EllAut& h) {
    // z -> zeta^{i+j} z + (zeta^i b + a) where g=(i,a), h=(j,b).
    return EllAut(g.rotation() + h.rotation(),
                  zeta_pow(g.rotation()) * h.translation() + g.translation());
}

EllAut ell_inverse(const EllAut& g) {
    return EllAut(-g.rotation(), -(zeta_pow(-g.rotation()) * g.translation()));
}

EllAut ell_twist(const EllAut& g) { return EllAut(-g.rotation(), g.translation().conj()); }

bool ell_is_cocycle(const EllAut& alpha) {
    return ell_compose(alpha, ell_twist(alpha)) == EllAut::identity();
}

EllAut ell_twisted_conjugate(const EllAut& phi, const EllAut& alpha) {
    return ell_compose(ell_compose(ell_inverse(phi), alpha), ell_twist(phi));
}

int ell_invariant(const EllAut& cocycle) {
    if (!ell_is_cocycle(cocycle))
        throw std::invalid_argument("ell_invariant: not a cocycle: " + cocycle.to_string());
    return cocycle.rotation() % 2;
}

std::string to_string(EllClassLabel label) { return label == EllClassLabel::Id ? "Id" : "Neg"; }

EllNormalization ell_normalize(const EllAut& cocycle, int shift_bound) {
    if (!ell_is_cocycle(cocycle))
        throw std::invalid_argument("ell_normalize: not a cocycle: " + cocycle.to_string());
    const int i = cocycle.rotation();

    // Decompose a + lambda = sqrt(-1) * xi^i * x with x real, searching
    // small lattice shifts lambda = p + q*zeta.
    const Cyclotomic unit_inv = Cyclotomic::root_of_unity(kOrder, -(3L + i));
    std::optional<Cyclotomic> x;
    for (int p = -shift_bound; p <= shift_bound && !x; ++p) {
        for (int q = -shift_bound; q <= shift_bound && !x; ++q) {
            Cyclotomic shifted = cocycle.translation() +
                                 Cyclotomic::from_rational(kOrder, Rat(p)) +
                                 Cyclotomic::root_of_unity(kOrder, 2).scaled(Rat(q));
            Cyclotomic w = shifted * unit_inv;
            if (w == w.conj()) x = std::move(w);
        }
    }
    if (!x)
        throw std::runtime_error(
            "ell_normalize: no lattice shift with |p|,|q| <= " + std::to_string(shift_bound) +
            " yields a real decomposition for " + cocycle.to_string());

    // b = (1 + sqrt(-1))/2 * xi^i * x kills the translation.
    const Cyclotomic b =
        (Cyclotomic::one(kOrder) + Cyclotomic::root_of_unity(kOrder, 3)).scaled(make_rat(1, 2)) *
        Cyclotomic::root_of_unity(kOrder, i) * *x;
    const EllAut step_translation(0, b);
    const EllAut after_translation = ell_twisted_conjugate(step_translation, cocycle);
    if (!(after_translation == EllAut(i, Cyclotomic::zero(kOrder))))
        throw std::logic_error("ell_normalize: translation step failed for " + cocycle.to_string());

    // Rotation step: i -> i - 2j lands on 0 (i even) or 3 (i odd).
    const int target = (i % 2 == 0) ? 0 : 3;
    int j = 0;
    while (j < 6 && mod_int(i - 2 * j, 6) != target) ++j;
    if (j == 6) throw std::logic_error("ell_normalize: no rotation conjugator");
    const EllAut step_rotation(j, Cyclotomic::zero(kOrder));

    EllNormalization result{target == 0 ? EllClassLabel::Id : EllClassLabel::Neg,
                            ell_compose(step_translation, step_rotation),
                            EllAut(target, Cyclotomic::zero(kOrder))};
    // Exact recomputation through the composite conjugator.
    const EllAut recomputed = ell_twisted_conjugate(result.conjugator, cocycle);
    if (!(recomputed == result.normal_form))
        throw std::logic_error("ell_normalize: verification failed for " + cocycle.to_string());
    return result;
}

std::vector<EllAut> ell_enumerate_family(int max_denominator) {
    if (max_denominator < 1)
        throw std::invalid_argument("ell_enumerate_family: denominator bound must be >= 1");
    std::vector<Rat> values;
    for (int q = 1; q <= max_denominator; ++q)
        for (int p = 0; p < q; ++p)
            if (std::gcd(p, q) == 1) values.push_back(make_rat(p, q));
    std::sort(values.begin(), values.end());

    std::vector<EllAut> family;
    for (int i = 0; i < 6; ++i)
        for (const Rat& u : values)
            for (const Rat& v : values) {
                EllAut candidate = EllAut::from_lattice_coords(i, u, v);
                if (ell_is_cocycle(candidate)) family.push_back(std::move(candidate));
            }
    return family;
}

}  // namespace fermat
