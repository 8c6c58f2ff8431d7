// First Galois cohomology of Aut F^n_d with respect to the coordinatewise
// real structure: cocycle enumeration, twisted-conjugacy orbits, canonical
// class labels H(r) / K(s,t) / L, and the closed counting formulas.
#ifndef FERMAT_COHOMOLOGY_HPP
#define FERMAT_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fermat/group.hpp"

namespace fermat {

class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The degree-4 surface: the automorphism group is unknown, the class count
// is an open problem.
class OpenCase : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// An automorphism alpha with alpha * twist(alpha) = id, i.e. alpha composed
// with the real structure is an involution.
struct Cocycle {
    AutElement element;

    explicit Cocycle(AutElement e);
    friend auto operator<=>(const Cocycle& a, const Cocycle& b) { return a.element <=> b.element; }
    friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.element == b.element; }
};

enum class LabelKind { H, K, L };

struct ClassLabel {
    LabelKind kind;
    int r = 0;  // H only: identity block size
    int s = 0;  // K only: zeta-block size
    int t = 0;  // K only: identity block size

    static ClassLabel H(int r);
    static ClassLabel K(int s, int t);
    static ClassLabel L();

    std::string to_string() const;            // "H(1)", "K(0,3)", "L"
    static ClassLabel parse(const std::string& text);

    friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

// Throws std::invalid_argument unless the label names a canonical class for
// these parameters (parity, ranges, d parity).
void validate_label(const ClassLabel& label, const GroupParams& params);

struct CocycleClass {
    Cocycle representative;  // lexicographically least orbit member
    Int orbit_size;
    std::optional<ClassLabel> label;
};

struct ClassificationReport {
    GroupParams params;
    Int cocycle_count;
    std::size_t class_count = 0;
    std::optional<Int> expected_count;  // empty for the open case (2,4)
    std::vector<CocycleClass> classes;  // sorted by representative
    bool complete = false;              // false when the group may be larger
    std::vector<std::string> caveats;

    bool matches_expected() const {
        return expected_count && Int(class_count) == *expected_count;
    }
};

enum class EnumerationMethod { Brute, Criterion };

inline constexpr long kDefaultBruteBudget = 10'000'000;

// Definition check: compose(g, twist(g)) == identity.
bool is_cocycle_direct(const AutElement& g);
// Structural three-condition test: the permutation is an involution; with a
// fixed point all exponent differences p_i - p_{sigma(i)} vanish mod d; with
// no fixed point they are all congruent to a common value in {0, d/2} (the
// d/2 branch only when d is even).
bool is_cocycle_criterion(const AutElement& g, const GroupParams& params);

// Sorted, duplicate-free. Brute mode filters the whole group (subject to the
// element budget); criterion mode enumerates involutions by cycle structure
// and then the admissible exponent vectors. The two agree as sets.
std::vector<Cocycle> enumerate_cocycles(const GroupParams& params, EnumerationMethod method,
                                        const Int& budget = Int(kDefaultBruteBudget));

// phi^{-1} * alpha * twist(phi); a right action on cocycles.
Cocycle twisted_conjugate(const AutElement& phi, const Cocycle& alpha);

// Closed-form class count. d = 2 is the quadric count; throws OpenCase for
// (n, d) = (2, 4).
Int expected_real_form_count(const GroupParams& params);

// Labels in canonical order (H ascending r; K ascending (s,t); L last).
std::vector<ClassLabel> canonical_label_list(const GroupParams& params);
AutElement canonical_representative(const ClassLabel& label, const GroupParams& params);
std::vector<std::pair<ClassLabel, Cocycle>> canonical_representatives(const GroupParams& params);

// Attaches exactly one canonical label to every class; throws
// std::logic_error when the correspondence is not a bijection.
void label_classes(std::vector<CocycleClass>& classes, const GroupParams& params);

// Orbits of the cocycle set under twisted conjugation, via breadth-first
// closure over {adjacent transpositions} and {g(i,1)}. A nonzero
// shuffle_seed permutes the enumeration and generator order; the resulting
// report is identical (determinism hook for tests).
ClassificationReport classify(const GroupParams& params,
                              EnumerationMethod method = EnumerationMethod::Criterion,
                              const Int& budget = Int(kDefaultBruteBudget),
                              unsigned long shuffle_seed = 0);

struct SweepRow {
    int n = 0;
    int d = 0;
    std::optional<ClassificationReport> report;
    std::optional<bool> match;  // empty when no expected count applies
    std::string note;           // inline error or caveat summary
};

std::vector<SweepRow> sweep_report(int n_min, int n_max, int d_min, int d_max,
                                   const Int& budget = Int(kDefaultBruteBudget));

}  // namespace fermat

#endif
