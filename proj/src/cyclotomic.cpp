#include "fermat/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fermat {

namespace {

// Quotient of exact division of integer polynomials (ascending coefficients,
// divisor monic or at least with exactly dividing leading coefficient).
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Int> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size()) {
        Int q = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = q;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        while (!num.empty() && num.back() == 0) num.pop_back();
    }
    if (!num.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

int euler_phi(int m) {
    int result = m, k = m;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int m) {
    if (m < 1) throw std::domain_error("cyclotomic_polynomial: m must be >= 1");
    static std::map<int, std::vector<Int>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // x^m - 1 divided by prod of Phi_d over proper divisors d of m.
    std::function<std::vector<Int>(int)> compute = [&](int k) -> std::vector<Int> {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        std::vector<Int> num(k + 1, Int(0));
        num[0] = -1;
        num[k] = 1;
        for (int d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            num = poly_div_exact(std::move(num), compute(d));
        }
        cache[k] = num;
        return num;
    };
    return compute(m);
}

Cyclotomic Cyclotomic::reduce(int m, std::vector<Rat> poly) {
    const std::vector<Int> phi = cyclotomic_polynomial(m);
    const std::size_t deg = phi.size() - 1;  // phi(m)
    // Long division by the monic Phi_m.
    for (std::size_t i = poly.size(); i-- > deg;) {
        Rat q = poly[i];
        if (q == 0) continue;
        poly[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) poly[i - deg + j] -= q * Rat(phi[j]);
    }
    poly.resize(deg, Rat(0));
    return Cyclotomic(m, std::move(poly));
}

Cyclotomic Cyclotomic::zero(int m) { return reduce(m, std::vector<Rat>(1, Rat(0))); }

Cyclotomic Cyclotomic::one(int m) { return from_rational(m, Rat(1)); }

Cyclotomic Cyclotomic::from_rational(int m, const Rat& value) {
    std::vector<Rat> p(1, value);
    return reduce(m, std::move(p));
}

Cyclotomic Cyclotomic::root_of_unity(int m, long k) {
    int e = mod_int(k, m);
    std::vector<Rat> p(e + 1, Rat(0));
    p[e] = 1;
    return reduce(m, std::move(p));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
    return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^k -> zeta^{k(m-1) mod m}, then reduce.
    std::vector<Rat> p(m_, Rat(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        p[mod_int(static_cast<long>(k) * (m_ - 1), m_)] += c_[k];
    }
    return reduce(m_, std::move(p));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
    // Extended Euclid in Q[x] against Phi_m (irreducible over Q).
    const std::vector<Int> phi_int = cyclotomic_polynomial(m_);
    std::vector<Rat> r0(phi_int.begin(), phi_int.end());
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0(1, Rat(0)), s1(1, Rat(1));  // coefficients on c_

    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    while (true) {
        trim(r1);
        if (r1.empty()) throw std::logic_error("cyclotomic inverse: gcd became zero");
        if (r1.size() == 1) break;  // nonzero constant: done
        // r0 = q*r1 + rem
        std::vector<Rat> rem = r0;
        std::vector<Rat> q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rat(0));
        while (rem.size() >= r1.size()) {
            Rat f = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] = f;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
            trim(rem);
            if (rem.empty()) break;
        }
        // s_next = s0 - q*s1
        std::vector<Rat> s_next = s0;
        s_next.resize(std::max(s_next.size(), q.size() + s1.size()), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    Rat unit = r1[0];
    for (auto& coef : s1) coef /= unit;
    return reduce(m_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result = one(m_);
    Cyclotomic base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

Cyclotomic Cyclotomic::promoted(int new_m) const {
    if (new_m == m_) return *this;
    if (new_m % m_ != 0) throw std::invalid_argument("promoted: old order must divide new order");
    const int stride = new_m / m_;
    std::vector<Rat> p(static_cast<std::size_t>(c_.size() - 1) * stride + 1, Rat(0));
    for (std::size_t k = 0; k < c_.size(); ++k) p[k * stride] = c_[k];
    return reduce(new_m, std::move(p));
}

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.m_ != m_) {
        int m = lcm_int(m_, o.m_);
        *this = promoted(m);
        return *this += o.promoted(m);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (o.m_ != m_) {
        int m = lcm_int(m_, o.m_);
        *this = promoted(m);
        return *this -= o.promoted(m);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.m_ != m_) {
        int m = lcm_int(m_, o.m_);
        *this = promoted(m);
        return *this *= o.promoted(m);
    }
    std::vector<Rat> prod(2 * c_.size(), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    *this = reduce(m_, std::move(prod));
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    int m = lcm_int(a.m_, b.m_);
    return a.promoted(m).c_ == b.promoted(m).c_;
}

Cyclotomic Cyclotomic::scaled(const Rat& q) const {
    Cyclotomic r = *this;
    for (auto& coef : r.c_) coef *= q;
    return r;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) out << " + ";
        out << "(" << c_[k].get_str() << ")";
        if (k > 0) out << "*z" << m_ << "^" << k;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

bool is_root_of_unity(const Cyclotomic& c) {
    if (c.is_zero()) return false;
    long m = c.order();
    long order_bound = (m % 2 == 0) ? m : 2 * m;  // lcm(2, m)
    return c.pow(order_bound) == Cyclotomic::one(c.order());
}

}  // namespace fermat
