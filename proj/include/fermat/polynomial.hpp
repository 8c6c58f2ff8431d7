// Sparse multivariate polynomials over an exact coefficient ring.
#ifndef FERMAT_POLYNOMIAL_HPP
#define FERMAT_POLYNOMIAL_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fermat/cyclotomic.hpp"
#include "fermat/rational.hpp"

namespace fermat {

namespace detail {
inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }
}  // namespace detail

template <typename C>
class Polynomial {
  public:
    using Monomial = std::vector<int>;  // one exponent per variable
    using TermMap = std::map<Monomial, C>;

    explicit Polynomial(int num_vars) : nvars_(num_vars) {}

    static Polynomial monomial(int num_vars, Monomial exps, C coeff) {
        Polynomial p(num_vars);
        p.add_term(std::move(exps), std::move(coeff));
        return p;
    }

    int num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(Monomial exps, const C& coeff) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw std::invalid_argument("monomial arity mismatch");
        if (detail::coeff_is_zero(coeff)) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exps), coeff);
        } else {
            it->second += coeff;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    C coefficient(const Monomial& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? C() : it->second;
    }

    int total_degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int x : e) d += x;
            deg = std::max(deg, d);
        }
        return deg;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int x : e) d += x;
            if (d != degree) return false;
        }
        return true;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) {
            C neg = c;
            neg = C() - neg;
            add_term(e, neg);
        }
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_arity(b);
        Polynomial result(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Monomial e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                result.add_term(std::move(e), ca * cb);
            }
        }
        return result;
    }

    Polynomial scaled(const C& factor) const {
        Polynomial result(nvars_);
        if (detail::coeff_is_zero(factor)) return result;
        for (const auto& [e, c] : terms_) result.add_term(e, c * factor);
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("polynomial pow: negative exponent");
        Polynomial result(nvars_);
        result.add_term(Monomial(nvars_, 0), unit());
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // Composition: variable i is replaced by images[i].
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("substitute: one image per variable required");
        int out_vars = images.empty() ? nvars_ : images.front().num_vars();
        Polynomial result(out_vars);
        for (const auto& [e, c] : terms_) {
            Polynomial term(out_vars);
            term.add_term(Monomial(out_vars, 0), c);
            for (int i = 0; i < nvars_; ++i)
                if (e[i] > 0) term = term * images[i].pow(e[i]);
            result += term;
        }
        return result;
    }

    C evaluate(const std::vector<C>& values) const {
        if (static_cast<int>(values.size()) != nvars_)
            throw std::invalid_argument("evaluate: one value per variable required");
        C sum = C();
        for (const auto& [e, c] : terms_) {
            C term = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) term *= values[i];
            sum += term;
        }
        return sum;
    }

  private:
    void check_arity(const Polynomial& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
    }
    static C unit() {
        if constexpr (std::is_same_v<C, Cyclotomic>) {
            return Cyclotomic::one(1);
        } else {
            return C(1);
        }
    }

    int nvars_;
    TermMap terms_;
};

using IntPolynomial = Polynomial<Int>;
using CycPolynomial = Polynomial<Cyclotomic>;

inline CycPolynomial to_cyclotomic(const IntPolynomial& p, int order) {
    CycPolynomial out(p.num_vars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, Cyclotomic::from_rational(order, Rat(c)));
    return out;
}

// Canonical text: homogeneous terms in graded-lex-descending order with
// explicit signs; e.g. "-Y0^4 + Y1^4 + Y2^4".
inline std::string polynomial_text(const IntPolynomial& p, const std::string& var = "Y") {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs_c = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (has_vars) vars << "*";
            vars << var << i;
            if (e[i] > 1) vars << "^" << e[i];
            has_vars = true;
        }
        if (!has_vars) {
            out << abs_c.get_str();
        } else {
            if (abs_c != 1) out << abs_c.get_str() << "*";
            out << vars.str();
        }
    }
    return out.str();
}

}  // namespace fermat

#endif
