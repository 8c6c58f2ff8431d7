#include "fermat/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace fermat {

Cocycle::Cocycle(AutElement e) : element(std::move(e)) {
    if (!is_cocycle_direct(element))
        throw std::invalid_argument("Cocycle: element * twist(element) != identity: " +
                                    element.to_string());
}

ClassLabel ClassLabel::H(int r) { return ClassLabel{LabelKind::H, r, 0, 0}; }
ClassLabel ClassLabel::K(int s, int t) { return ClassLabel{LabelKind::K, 0, s, t}; }
ClassLabel ClassLabel::L() { return ClassLabel{LabelKind::L, 0, 0, 0}; }

std::string ClassLabel::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case LabelKind::H: out << "H(" << r << ")"; break;
        case LabelKind::K: out << "K(" << s << "," << t << ")"; break;
        case LabelKind::L: out << "L"; break;
    }
    return out.str();
}

ClassLabel ClassLabel::parse(const std::string& text) {
    auto fail = [&]() -> ClassLabel {
        throw std::invalid_argument("cannot parse class label: '" + text +
                                    "' (expected H(r), K(s,t) or L)");
    };
    if (text == "L") return L();
    if (text.size() >= 4 && text.front() == 'H' && text[1] == '(' && text.back() == ')') {
        try {
            std::size_t used = 0;
            int r = std::stoi(text.substr(2, text.size() - 3), &used);
            if (used != text.size() - 3) return fail();
            return H(r);
        } catch (const std::exception&) {
            return fail();
        }
    }
    if (text.size() >= 6 && text.front() == 'K' && text[1] == '(' && text.back() == ')') {
        std::string inner = text.substr(2, text.size() - 3);
        auto comma = inner.find(',');
        if (comma == std::string::npos) return fail();
        try {
            std::size_t u1 = 0, u2 = 0;
            int s = std::stoi(inner.substr(0, comma), &u1);
            int t = std::stoi(inner.substr(comma + 1), &u2);
            if (u1 != comma || u2 != inner.size() - comma - 1) return fail();
            return K(s, t);
        } catch (const std::exception&) {
            return fail();
        }
    }
    return fail();
}

void validate_label(const ClassLabel& label, const GroupParams& params) {
    const int n = params.n, d = params.d;
    switch (label.kind) {
        case LabelKind::H:
            if (d % 2 == 0)
                throw std::invalid_argument("H labels require odd d");
            if (label.r < 0 || label.r > n + 2 || (label.r - n) % 2 != 0)
                throw std::invalid_argument("invalid H label " + label.to_string() +
                                            " for n=" + std::to_string(n));
            return;
        case LabelKind::K:
            if (d % 2 != 0)
                throw std::invalid_argument("K labels require even d");
            if (label.s < 0 || label.s > label.t || label.s + label.t > n + 2 ||
                mod_int(label.s + label.t - n, 2) != 0)
                throw std::invalid_argument("invalid K label " + label.to_string() +
                                            " for n=" + std::to_string(n));
            return;
        case LabelKind::L:
            if (d % 2 != 0 || n % 2 != 0)
                throw std::invalid_argument("the L label requires even n and even d");
            return;
    }
    throw std::logic_error("unreachable label kind");
}

bool is_cocycle_direct(const AutElement& g) { return compose(g, twist(g)).is_identity(); }

bool is_cocycle_criterion(const AutElement& g, const GroupParams& params) {
    if (!(g.params() == params))
        throw std::invalid_argument("is_cocycle_criterion: parameter mismatch");
    const Permutation& sigma = g.perm();
    if (!sigma.is_involution()) return false;  // type 1^l 2^m required
    const int d = params.d;
    if (sigma.has_fixed_point()) {
        for (int i = 0; i < sigma.size(); ++i)
            if (mod_int(g.vec()[i] - g.vec()[sigma(i)], d) != 0) return false;
        return true;
    }
    // Fixed-point free: all differences congruent to a common value in
    // {0, d/2}; the d/2 branch exists only for even d.
    const int first = mod_int(g.vec()[0] - g.vec()[sigma(0)], d);
    if (first != 0 && (d % 2 != 0 || first != d / 2)) return false;
    for (int i = 1; i < sigma.size(); ++i)
        if (mod_int(g.vec()[i] - g.vec()[sigma(i)], d) != first) return false;
    return true;
}

namespace {

std::vector<Permutation> all_involutions(int size) {
    std::vector<int> base(size);
    std::iota(base.begin(), base.end(), 0);
    std::vector<Permutation> out;
    do {
        Permutation p{std::vector<int>(base)};
        if (p.is_involution()) out.push_back(std::move(p));
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// Orbits of an involution as index lists; the orbit containing the last
// index goes first so its value can be pinned to 0 (projective gauge).
std::vector<std::vector<int>> involution_orbits_last_first(const Permutation& sigma) {
    const int size = sigma.size();
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(size, false);
    for (int i = size - 1; i >= 0; --i) {
        if (seen[i]) continue;
        std::vector<int> orbit{i};
        seen[i] = true;
        if (sigma(i) != i) {
            orbit.push_back(sigma(i));
            seen[sigma(i)] = true;
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

void enumerate_for_involution(const GroupParams& params, const Permutation& sigma,
                              std::vector<Cocycle>& out) {
    const int d = params.d;
    const int size = params.num_vars();
    const auto orbits = involution_orbits_last_first(sigma);
    const std::size_t free_orbits = orbits.size() - 1;

    // Constant-on-orbits vectors (difference 0); the gauge orbit is 0.
    {
        std::vector<int> choice(free_orbits, 0);
        while (true) {
            std::vector<int> vec(size, 0);
            for (std::size_t k = 0; k < free_orbits; ++k)
                for (int idx : orbits[k + 1]) vec[idx] = choice[k];
            out.emplace_back(AutElement(params, ExponentVector(std::move(vec), d), sigma));
            std::size_t pos = 0;
            while (pos < free_orbits && ++choice[pos] == d) choice[pos++] = 0;
            if (pos == free_orbits) break;
        }
    }

    // Fixed-point-free involutions with even d also admit common
    // difference d/2: within each 2-cycle the two values differ by d/2.
    if (!sigma.has_fixed_point() && d % 2 == 0) {
        const int half = d / 2;
        std::vector<int> choice(free_orbits, 0);
        while (true) {
            std::vector<int> vec(size, 0);
            vec[orbits[0][0]] = 0;
            vec[orbits[0][1]] = half;  // gauge cycle: (0, d/2)
            for (std::size_t k = 0; k < free_orbits; ++k) {
                vec[orbits[k + 1][0]] = choice[k];
                vec[orbits[k + 1][1]] = mod_int(choice[k] + half, d);
            }
            out.emplace_back(AutElement(params, ExponentVector(std::move(vec), d), sigma));
            std::size_t pos = 0;
            while (pos < free_orbits && ++choice[pos] == d) choice[pos++] = 0;
            if (pos == free_orbits) break;
        }
    }
}

std::vector<Cocycle> enumerate_criterion(const GroupParams& params) {
    if (params.d < 3)
        throw std::domain_error("enumerate_cocycles: structural enumeration requires d >= 3");
    std::vector<Cocycle> out;
    for (const Permutation& sigma : all_involutions(params.num_vars()))
        enumerate_for_involution(params, sigma, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cocycle> enumerate_brute(const GroupParams& params, const Int& budget) {
    if (params.d < 3) throw std::domain_error("enumerate_cocycles: d >= 3 required");
    const Int order = group_order(params);
    if (order > budget)
        throw BudgetExceeded("enumerate_cocycles: group order " + order.get_str() +
                             " exceeds the brute-force budget " + budget.get_str());
    const int d = params.d;
    const int size = params.num_vars();
    std::vector<Cocycle> out;
    std::vector<int> base(size);
    std::iota(base.begin(), base.end(), 0);
    do {
        const Permutation sigma{std::vector<int>(base)};
        std::vector<int> vec(size, 0);  // last entry stays 0: canonical gauge
        while (true) {
            AutElement g(params, ExponentVector(std::vector<int>(vec), d), sigma);
            if (is_cocycle_direct(g)) out.emplace_back(std::move(g));
            int pos = 0;
            while (pos < size - 1 && ++vec[pos] == d) vec[pos++] = 0;
            if (pos == size - 1) break;
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Cocycle> enumerate_cocycles(const GroupParams& params, EnumerationMethod method,
                                        const Int& budget) {
    return method == EnumerationMethod::Brute ? enumerate_brute(params, budget)
                                              : enumerate_criterion(params);
}

Cocycle twisted_conjugate(const AutElement& phi, const Cocycle& alpha) {
    return Cocycle(compose(compose(inverse(phi), alpha.element), twist(phi)));
}

Int expected_real_form_count(const GroupParams& params) {
    const int n = params.n, d = params.d;
    if (d == 2) return (n % 2 == 1) ? Int((n + 1) / 2 + 1) : Int(n / 2 + 3);
    if (n == 2 && d == 4)
        throw OpenCase("(n,d)=(2,4): the class count is an open case");
    if (d % 2 == 1) return Int(n / 2 + 2);
    if (n % 2 == 1) return Int((n + 3) * (n + 5) / 8);
    return Int((n + 4) * (n + 6) / 8 + 1);
}

std::vector<ClassLabel> canonical_label_list(const GroupParams& params) {
    if (params.d < 3) throw std::domain_error("canonical labels require d >= 3");
    std::vector<ClassLabel> labels;
    const int n = params.n;
    if (params.d % 2 == 1) {
        for (int r = (n % 2 == 0) ? 0 : 1; r <= n + 2; r += 2) labels.push_back(ClassLabel::H(r));
    } else {
        for (int s = 0; 2 * s <= n + 2; ++s)
            for (int t = s; s + t <= n + 2; ++t)
                if (mod_int(s + t - n, 2) == 0) labels.push_back(ClassLabel::K(s, t));
        if (n % 2 == 0) labels.push_back(ClassLabel::L());
    }
    std::sort(labels.begin(), labels.end(), [](const ClassLabel& a, const ClassLabel& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.kind == LabelKind::H) return a.r < b.r;
        return std::pair(a.s, a.t) < std::pair(b.s, b.t);
    });
    return labels;
}

AutElement canonical_representative(const ClassLabel& label, const GroupParams& params) {
    validate_label(label, params);
    const int size = params.num_vars();
    const int d = params.d;
    auto swaps_from = [&](int start) {
        Permutation perm(size);
        std::vector<int> img = perm.images();
        for (int i = start; i + 1 < size; i += 2) std::swap(img[i], img[i + 1]);
        return Permutation(std::move(img));
    };
    switch (label.kind) {
        case LabelKind::H:
            return AutElement(params, ExponentVector::zero(size), swaps_from(label.r));
        case LabelKind::K: {
            std::vector<int> vec(size, 0);
            for (int i = 0; i < label.s; ++i) vec[i] = 1;
            return AutElement(params, ExponentVector(std::move(vec), d),
                              swaps_from(label.s + label.t));
        }
        case LabelKind::L: {
            // Swap blocks (0 1 / -1 0): the -1 is the exponent d/2.
            std::vector<int> vec(size, 0);
            for (int i = 1; i < size; i += 2) vec[i] = d / 2;
            return AutElement(params, ExponentVector(std::move(vec), d), swaps_from(0));
        }
    }
    throw std::logic_error("unreachable label kind");
}

std::vector<std::pair<ClassLabel, Cocycle>> canonical_representatives(const GroupParams& params) {
    std::vector<std::pair<ClassLabel, Cocycle>> out;
    for (const ClassLabel& label : canonical_label_list(params))
        out.emplace_back(label, Cocycle(canonical_representative(label, params)));
    return out;
}

namespace {

std::vector<AutElement> orbit_generators(const GroupParams& params) {
    std::vector<AutElement> gens;
    const int size = params.num_vars();
    for (int i = 0; i + 1 < size; ++i)
        gens.push_back(AutElement::from_permutation(params, Permutation::transposition(size, i, i + 1)));
    for (int i = 0; i < size; ++i) gens.push_back(AutElement::coordinate_scaling(params, i, 1));
    return gens;
}

}  // namespace

void label_classes(std::vector<CocycleClass>& classes, const GroupParams& params) {
    // Membership of each canonical representative in each orbit is resolved
    // through the orbit the representative generates; classify() instead
    // passes the member->class map. This entry point recomputes membership
    // by a bounded orbit walk from each representative.
    std::map<AutElement, std::size_t> member_of;
    const auto gens = orbit_generators(params);
    for (std::size_t idx = 0; idx < classes.size(); ++idx) {
        classes[idx].label.reset();
        std::deque<Cocycle> queue{classes[idx].representative};
        std::map<AutElement, bool> seen{{classes[idx].representative.element, true}};
        while (!queue.empty()) {
            Cocycle current = std::move(queue.front());
            queue.pop_front();
            member_of.emplace(current.element, idx);
            for (const auto& phi : gens) {
                Cocycle next = twisted_conjugate(phi, current);
                if (!seen.emplace(next.element, true).second) continue;
                queue.push_back(std::move(next));
            }
        }
    }
    for (const auto& [label, rep] : canonical_representatives(params)) {
        auto it = member_of.find(rep.element);
        if (it == member_of.end())
            throw std::logic_error("label_classes: representative " + label.to_string() +
                                   " lies in no computed orbit");
        if (classes[it->second].label)
            throw std::logic_error("label_classes: orbit received two labels: " +
                                   classes[it->second].label->to_string() + " and " +
                                   label.to_string());
        classes[it->second].label = label;
    }
    for (const auto& c : classes)
        if (!c.label)
            throw std::logic_error("label_classes: orbit of " +
                                   c.representative.element.to_string() + " received no label");
}

ClassificationReport classify(const GroupParams& params, EnumerationMethod method,
                              const Int& budget, unsigned long shuffle_seed) {
    if (params.d < 3)
        throw std::domain_error("classify requires d >= 3; degree 2 is handled by the quadric module");

    std::vector<Cocycle> cocycles = enumerate_cocycles(params, method, budget);
    std::vector<AutElement> gens = orbit_generators(params);
    if (shuffle_seed != 0) {
        std::mt19937_64 rng(shuffle_seed);
        std::shuffle(cocycles.begin(), cocycles.end(), rng);
        std::shuffle(gens.begin(), gens.end(), rng);
    }

    ClassificationReport report{params, Int(cocycles.size()), 0, std::nullopt, {}, false, {}};

    // Breadth-first closure under the generator moves; twisted conjugation
    // is a right action and the generators generate the group, so the
    // closure of each seed is its full orbit.
    std::map<AutElement, std::size_t> class_of;
    std::vector<CocycleClass> classes;
    for (const Cocycle& seed : cocycles) {
        if (class_of.count(seed.element)) continue;
        const std::size_t idx = classes.size();
        Cocycle best = seed;
        Int orbit_size = 0;
        std::deque<Cocycle> queue{seed};
        class_of.emplace(seed.element, idx);
        while (!queue.empty()) {
            Cocycle current = std::move(queue.front());
            queue.pop_front();
            ++orbit_size;
            if (current < best) best = current;
            for (const auto& phi : gens) {
                Cocycle next = twisted_conjugate(phi, current);
                if (!class_of.emplace(next.element, idx).second) continue;
                queue.push_back(std::move(next));
            }
        }
        classes.push_back(CocycleClass{std::move(best), orbit_size, std::nullopt});
    }

    // Orbits partition the cocycle set; every BFS-visited element must be an
    // enumerated cocycle, so the sizes add up exactly.
    Int total = 0;
    for (const auto& c : classes) total += c.orbit_size;
    if (total != report.cocycle_count)
        throw std::logic_error("classify: orbit sizes do not add up to the cocycle count");

    std::sort(classes.begin(), classes.end(), [](const CocycleClass& a, const CocycleClass& b) {
        return a.representative < b.representative;
    });
    for (const auto& [label, rep] : canonical_representatives(params)) {
        auto it = class_of.find(rep.element);
        if (it == class_of.end())
            throw std::logic_error("classify: canonical representative not among cocycles");
        // class_of indices refer to discovery order; map through representatives.
        CocycleClass* target = nullptr;
        for (auto& c : classes)
            if (class_of.at(c.representative.element) == it->second) target = &c;
        if (!target) throw std::logic_error("classify: lost orbit while labeling");
        if (target->label)
            throw std::logic_error("classify: orbit received two labels");
        target->label = label;
    }
    for (const auto& c : classes)
        if (!c.label) throw std::logic_error("classify: orbit received no label");

    report.classes = std::move(classes);
    report.class_count = report.classes.size();
    report.complete = params.shioda_applies();
    try {
        report.expected_count = expected_real_form_count(params);
    } catch (const OpenCase&) {
        report.expected_count.reset();
    }
    if (params.n == 1 && params.d == 3) {
        report.caveats.push_back(
            "(n,d)=(1,3): the cubic curve is elliptic and has automorphisms beyond the "
            "monomial-linear subgroup; classes shown are for that subgroup (the elliptic "
            "module certifies the full count of 2).");
    } else if (params.n == 2 && params.d == 4) {
        report.caveats.push_back(
            "(n,d)=(2,4): the automorphism group of the quartic surface is unknown; at "
            "least 4 pairwise non-isomorphic real forms exist, and the classes shown "
            "cover the monomial-linear subgroup only.");
    }
    return report;
}

std::vector<SweepRow> sweep_report(int n_min, int n_max, int d_min, int d_max,
                                   const Int& budget) {
    std::vector<SweepRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        for (int d = std::max(3, d_min); d <= d_max; ++d) {
            SweepRow row;
            row.n = n;
            row.d = d;
            try {
                ClassificationReport rep = classify(GroupParams(n, d),
                                                    EnumerationMethod::Criterion, budget);
                if (rep.expected_count) row.match = rep.matches_expected();
                if (!rep.caveats.empty()) row.note = rep.caveats.front();
                row.report = std::move(rep);
            } catch (const std::exception& e) {
                row.note = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace fermat
