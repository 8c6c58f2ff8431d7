#include "fermat/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fermat {

GroupParams::GroupParams(int n_, int d_) : n(n_), d(d_) {
    if (n < 1) throw std::domain_error("GroupParams: n must be >= 1");
    if (d < 2) throw std::domain_error("GroupParams: d must be >= 2");
}

bool GroupParams::shioda_applies() const {
    if (d < 3) return false;
    if (n == 1 && d == 3) return false;
    if (n == 2 && d == 4) return false;
    return true;
}

Int group_order(const GroupParams& params) {
    return pow_int(Int(params.d), params.n + 1) * factorial(params.num_vars());
}

Permutation::Permutation(int size) : img_(size) {
    if (size < 1) throw std::invalid_argument("Permutation: size must be >= 1");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::transposition(int size, int a, int b) {
    Permutation p(size);
    if (a < 0 || b < 0 || a >= size || b >= size)
        throw std::invalid_argument("transposition: index out of range");
    std::swap(p.img_[a], p.img_[b]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

bool Permutation::is_involution() const {
    for (int i = 0; i < size(); ++i)
        if (img_[img_[i]] != i) return false;
    return true;
}

bool Permutation::has_fixed_point() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] == i) return true;
    return false;
}

std::vector<std::pair<int, int>> Permutation::two_cycles() const {
    std::vector<std::pair<int, int>> cycles;
    for (int i = 0; i < size(); ++i)
        if (img_[i] > i) cycles.emplace_back(i, img_[i]);
    return cycles;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

ExponentVector::ExponentVector(std::vector<int> entries, int d) : e_(std::move(entries)) {
    if (d < 2) throw std::domain_error("ExponentVector: d must be >= 2");
    if (e_.empty()) throw std::invalid_argument("ExponentVector: empty");
    const int last = e_.back();
    for (auto& x : e_) x = mod_int(static_cast<long>(x) - last, d);
}

ExponentVector ExponentVector::zero(int size) {
    return ExponentVector(std::vector<int>(size, 0));
}

ExponentVector ExponentVector::unit(int size, int position, int d) {
    std::vector<int> e(size, 0);
    e.at(position) = 1;
    return ExponentVector(std::move(e), d);
}

bool ExponentVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

AutElement::AutElement(GroupParams params, ExponentVector vec, Permutation perm)
    : params_(params), vec_(std::move(vec)), perm_(std::move(perm)) {
    if (vec_.size() != params_.num_vars() || perm_.size() != params_.num_vars())
        throw std::invalid_argument("AutElement: size mismatch with params");
}

AutElement AutElement::identity(const GroupParams& params) {
    return AutElement(params, ExponentVector::zero(params.num_vars()),
                      Permutation(params.num_vars()));
}

AutElement AutElement::scaling(const GroupParams& params, std::vector<int> exponents) {
    return AutElement(params, ExponentVector(std::move(exponents), params.d),
                      Permutation(params.num_vars()));
}

AutElement AutElement::coordinate_scaling(const GroupParams& params, int i, int j) {
    std::vector<int> e(params.num_vars(), 0);
    e.at(i) = mod_int(j, params.d);
    return scaling(params, std::move(e));
}

AutElement AutElement::from_permutation(const GroupParams& params, Permutation perm) {
    return AutElement(params, ExponentVector::zero(params.num_vars()), std::move(perm));
}

bool AutElement::is_identity() const { return vec_.is_zero() && perm_.is_identity(); }

std::string AutElement::to_string() const {
    std::ostringstream out;
    out << "D(";
    for (int i = 0; i < vec_.size(); ++i) out << (i ? "," : "") << vec_[i];
    out << ")*[";
    for (int i = 0; i < perm_.size(); ++i) out << (i ? " " : "") << perm_(i);
    out << "]";
    return out.str();
}

AutElement compose(const AutElement& g, const AutElement& h) {
    if (!(g.params() == h.params()))
        throw std::invalid_argument("compose: group parameter mismatch");
    const int size = g.params().num_vars();
    const int d = g.params().d;
    std::vector<int> vec(size);
    std::vector<int> perm(size);
    for (int i = 0; i < size; ++i) {
        const int pg = g.perm()(i);
        vec[i] = mod_int(static_cast<long>(g.vec()[i]) + h.vec()[pg], d);
        perm[i] = h.perm()(pg);
    }
    return AutElement(g.params(), ExponentVector(std::move(vec), d),
                      Permutation(std::move(perm)));
}

AutElement inverse(const AutElement& g) {
    const int size = g.params().num_vars();
    const int d = g.params().d;
    const Permutation inv = g.perm().inverse();
    std::vector<int> vec(size);
    for (int i = 0; i < size; ++i) vec[i] = mod_int(-static_cast<long>(g.vec()[inv(i)]), d);
    return AutElement(g.params(), ExponentVector(std::move(vec), d), inv);
}

AutElement twist(const AutElement& g) {
    const int d = g.params().d;
    std::vector<int> vec(g.params().num_vars());
    for (int i = 0; i < g.params().num_vars(); ++i)
        vec[i] = mod_int(-static_cast<long>(g.vec()[i]), d);
    return AutElement(g.params(), ExponentVector(std::move(vec), d), g.perm());
}

ProjectivePoint::ProjectivePoint(std::vector<Cyclotomic> c) : coords(std::move(c)) {
    if (coords.empty()) throw std::invalid_argument("ProjectivePoint: no coordinates");
    const int m = coords.front().order();
    bool all_zero = true;
    for (const auto& x : coords) {
        if (x.order() != m) throw std::invalid_argument("ProjectivePoint: mixed cyclotomic orders");
        if (!x.is_zero()) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("ProjectivePoint: the zero point is not projective");
}

int ProjectivePoint::order() const { return coords.front().order(); }

ProjectivePoint act_on_point(const AutElement& g, const ProjectivePoint& p) {
    const int size = g.params().num_vars();
    if (static_cast<int>(p.coords.size()) != size)
        throw std::invalid_argument("act_on_point: coordinate count mismatch");
    const int m = p.order();
    if (m % g.params().d != 0)
        throw std::invalid_argument("act_on_point: d must divide the cyclotomic order");
    const int stride = m / g.params().d;
    std::vector<Cyclotomic> out;
    out.reserve(size);
    for (int i = 0; i < size; ++i) {
        Cyclotomic x = p.coords[g.perm()(i)];
        if (g.vec()[i] != 0)
            x *= Cyclotomic::root_of_unity(m, static_cast<long>(stride) * g.vec()[i]);
        out.push_back(std::move(x));
    }
    return ProjectivePoint(std::move(out));
}

Cyclotomic fermat_value(const ProjectivePoint& p, int d) {
    Cyclotomic sum = Cyclotomic::zero(p.order());
    for (const auto& x : p.coords) sum += x.pow(d);
    return sum;
}

}  // namespace fermat
