#include "fermat/loci.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <unordered_map>

namespace fermat {

TopologyDescriptor TopologyDescriptor::empty() { return {Kind::Empty, 0, 0, 0}; }
TopologyDescriptor TopologyDescriptor::sphere(int dim) { return {Kind::Sphere, dim, 0, 0}; }
TopologyDescriptor TopologyDescriptor::product(int a, int b) {
    return {Kind::ProductOfProjectiveSpaces, a, b, 0};
}
TopologyDescriptor TopologyDescriptor::projective_space(int dim) {
    return {Kind::ProjectiveSpace, dim, 0, 0};
}
TopologyDescriptor TopologyDescriptor::disjoint_spheres(int count, int dim) {
    if (count < 1) throw std::invalid_argument("disjoint_spheres: count must be >= 1");
    return {Kind::DisjointSpheres, dim, 0, count};
}
TopologyDescriptor TopologyDescriptor::unknown() { return {Kind::Unknown, 0, 0, 0}; }

std::optional<int> TopologyDescriptor::component_count_for_curve() const {
    switch (kind) {
        case Kind::Empty: return 0;
        case Kind::Sphere: return dim == 1 ? std::optional<int>(1) : std::nullopt;
        case Kind::ProjectiveSpace: return dim == 1 ? std::optional<int>(1) : std::nullopt;
        case Kind::DisjointSpheres: return dim == 1 ? std::optional<int>(count) : std::nullopt;
        default: return std::nullopt;
    }
}

std::string TopologyDescriptor::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Empty: out << "empty"; break;
        case Kind::Sphere: out << "S^" << dim; break;
        case Kind::ProductOfProjectiveSpaces: out << "P^" << dim << "(R) x P^" << dim2 << "(R)"; break;
        case Kind::ProjectiveSpace: out << "P^" << dim << "(R)"; break;
        case Kind::DisjointSpheres: out << count << " disjoint copies of S^" << dim; break;
        case Kind::Unknown: out << "unknown"; break;
    }
    return out.str();
}

TopologyDescriptor expected_topology(const ClassLabel& label, const GroupParams& params) {
    validate_label(label, params);
    const int n = params.n;
    switch (label.kind) {
        case LabelKind::L:
            return TopologyDescriptor::empty();
        case LabelKind::K: {
            const int s = label.s, t = label.t;
            if (s == 0 && t == n + 2) return TopologyDescriptor::empty();
            if (s == 1 && t == n + 1) return TopologyDescriptor::sphere(n);
            if (s >= 2 && s + t == n + 2) return TopologyDescriptor::product(t - 1, s - 1);
            if (s == 0 && t == n) return TopologyDescriptor::disjoint_spheres(params.d / 2, n);
            return TopologyDescriptor::unknown();
        }
        case LabelKind::H:
            return label.r >= 1 ? TopologyDescriptor::projective_space(n)
                                : TopologyDescriptor::unknown();
    }
    throw std::logic_error("unreachable label kind");
}

std::string RealPointWitness::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) out << " : ";
        if (exact || static_cast<int>(i) != free_variable)
            out << point[i].get_str();
        else
            out << "t";
    }
    out << "]";
    if (!exact)
        out << " with t in (" << lo.get_str() << ", " << hi.get_str()
            << "), opposite exact signs at the endpoints";
    return out.str();
}

bool prove_empty_allplus(const GroupParams& params) {
    if (params.d % 2 != 0)
        throw std::domain_error("prove_empty_allplus: d odd (positivity argument needs even d)");
    // Sum of even powers of reals vanishes only at the origin, which is not
    // a projective point.
    return true;
}

namespace {

Rat eval_rat(const IntPolynomial& f, const std::vector<Rat>& values) {
    Rat sum(0);
    for (const auto& [e, c] : f.terms()) {
        Rat term{c};
        for (std::size_t i = 0; i < values.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= values[i];
        sum += term;
    }
    return sum;
}

// Coefficients of f restricted to a line: variable `free` runs, the others
// are frozen at `values`.
std::vector<Rat> slice_coefficients(const IntPolynomial& f, const std::vector<Rat>& values,
                                    int free) {
    std::vector<Rat> coeffs(f.total_degree() + 1, Rat(0));
    for (const auto& [e, c] : f.terms()) {
        Rat term{c};
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (static_cast<int>(i) == free) continue;
            for (int k = 0; k < e[i]; ++k) term *= values[i];
        }
        coeffs[e[free]] += term;
    }
    return coeffs;
}

Rat eval_univariate(const std::vector<Rat>& coeffs, const Rat& t) {
    Rat value(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) value = value * t + coeffs[i];
    return value;
}

std::vector<Int> divisors_of(const Int& value) {
    Int a = abs(value);
    std::vector<Int> divs;
    for (Int k = 1; k * k <= a; ++k) {
        if (a % k != 0) continue;
        divs.push_back(k);
        if (k * k != a) divs.push_back(a / k);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Exact rational roots via the rational root bound on the integer model.
std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs) {
    std::vector<Rat> roots;
    // common denominator -> integer coefficients
    Int lcm_den(1);
    for (const auto& c : coeffs) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<Int> a(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Rat scaled = coeffs[i] * Rat(lcm_den);
        a[i] = scaled.get_num();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) return roots;  // identically zero: handled by caller
    std::size_t lowest = 0;
    while (lowest < a.size() && a[lowest] == 0) ++lowest;
    if (lowest > 0) roots.push_back(Rat(0));
    if (lowest + 1 == a.size()) return roots;  // only the t^v factor
    const Int low = a[lowest], lead = a.back();
    for (const Int& p : divisors_of(low)) {
        for (const Int& q : divisors_of(lead)) {
            if (gcd(p, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rat cand = make_rat(sign * p, q);
                if (eval_univariate(coeffs, cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::optional<RealPointWitness> find_real_point(const RealFormEquation& eq,
                                                long denominator_bound, long range_bound) {
    if (!eq.polynomial)
        throw std::invalid_argument("find_real_point: no polynomial (L-type descriptor)");
    const IntPolynomial& f = *eq.polynomial;
    const int nv = f.num_vars();

    // Closed-form candidates: at most two nonzero coordinates in {1, -1}.
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    std::vector<Rat> point(nv, Rat(0));
                    point[i] = si;
                    point[j] = sj;
                    if (eval_rat(f, point) == 0)
                        return RealPointWitness{std::move(point), true, -1, Rat(0), Rat(0)};
                }
            }
        }
    }

    // Chart-wise slices: chart coordinate = 1, one coordinate free, the
    // rest frozen over a small height-bounded value set.
    std::vector<Rat> value_set{Rat(0)};
    for (long q = 1; q <= denominator_bound; ++q) {
        for (long p = 1; p <= range_bound * q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            value_set.push_back(make_rat(p, q));
            value_set.push_back(make_rat(-p, q));
        }
    }

    std::optional<RealPointWitness> interval_witness;
    const int frozen = nv - 2;
    std::vector<int> choice(std::max(frozen, 0), 0);
    for (int chart = 0; chart < nv; ++chart) {
        for (int free = 0; free < nv; ++free) {
            if (free == chart) continue;
            std::vector<int> others;
            for (int i = 0; i < nv; ++i)
                if (i != chart && i != free) others.push_back(i);
            std::fill(choice.begin(), choice.end(), 0);
            while (true) {
                std::vector<Rat> values(nv, Rat(0));
                values[chart] = 1;
                for (std::size_t k = 0; k < others.size(); ++k)
                    values[others[k]] = value_set[choice[k]];
                const std::vector<Rat> coeffs = slice_coefficients(f, values, free);

                bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                                            [](const Rat& c) { return c == 0; });
                if (all_zero) {
                    values[free] = 0;
                    return RealPointWitness{std::move(values), true, -1, Rat(0), Rat(0)};
                }
                for (const Rat& root : rational_roots(coeffs)) {
                    std::vector<Rat> point = values;
                    point[free] = root;
                    return RealPointWitness{std::move(point), true, -1, Rat(0), Rat(0)};
                }
                if (!interval_witness) {
                    Rat prev_t = make_rat(-2 * range_bound, 2);
                    Rat prev_v = eval_univariate(coeffs, prev_t);
                    for (long k = -2 * range_bound + 1; k <= 2 * range_bound; ++k) {
                        Rat t = make_rat(k, 2);
                        Rat v = eval_univariate(coeffs, t);
                        if ((prev_v < 0 && v > 0) || (prev_v > 0 && v < 0)) {
                            RealPointWitness w;
                            w.point = values;
                            w.exact = false;
                            w.free_variable = free;
                            w.lo = prev_t;
                            w.hi = t;
                            interval_witness = std::move(w);
                            break;
                        }
                        prev_t = t;
                        prev_v = v;
                    }
                }
                std::size_t pos = 0;
                while (pos < others.size() && ++choice[pos] == static_cast<int>(value_set.size()))
                    choice[pos++] = 0;
                if (pos == others.size()) break;
                if (others.empty()) break;
            }
        }
    }
    return interval_witness;
}

// ---------------------------------------------------------------------------
// Component counting on the octahedral subdivision of S^2.
// ---------------------------------------------------------------------------

namespace {

struct Term3 {
    int e0, e1, e2;
    Int coeff;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) {
        for (int i = 0; i < size; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

struct RunResult {
    int count = 0;
    int sphere_components = 0;
    std::vector<int> class_sizes;
};

class SphereScan {
  public:
    SphereScan(const IntPolynomial& f, int resolution) : R_(resolution) {
        if (f.num_vars() != 3)
            throw std::invalid_argument("count_curve_components: ternary form required");
        degree_ = f.total_degree();
        if (degree_ < 1) throw std::invalid_argument("count_curve_components: constant form");
        if (!f.is_homogeneous(degree_))
            throw std::invalid_argument("count_curve_components: homogeneous form required");
        if (R_ < 2) throw std::invalid_argument("count_curve_components: resolution must be >= 2");
        for (const auto& [e, c] : f.terms()) terms_.push_back(Term3{e[0], e[1], e[2], c});
    }

    RunResult run() {
        // Attempt 0 evaluates on the lattice itself; if a lattice point lies
        // on the curve, switch to a sheared lattice N = (3Rj) I + S where S
        // is the companion matrix of x^3 - x - 1. S has no rational
        // eigenvector, so f cannot vanish at a fixed corner for more than
        // deg f values of j; the shear is a rational-linear change of
        // coordinates and leaves component counts unchanged.
        for (int attempt = 0; attempt <= 64; ++attempt) {
            std::array<std::array<long, 3>, 3> N{};
            if (attempt == 0) {
                for (int i = 0; i < 3; ++i) N[i][i] = 1;
            } else {
                const long D = 3L * R_ * attempt;
                N = {{{D, 1, 0}, {0, D, 1}, {1, 1, D}}};
            }
            if (!compute_signs(N)) continue;
            return analyze();
        }
        throw std::runtime_error("count_curve_components: no shear separated the lattice "
                                 "from the curve (degenerate input?)");
    }

  private:
    static int face_sign(int face, int axis) { return (face >> axis) & 1 ? -1 : 1; }

    std::size_t corner_index(int b, int c) const {
        return static_cast<std::size_t>(c) * (R_ + 1) - static_cast<std::size_t>(c) * (c - 1) / 2 + b;
    }

    long triangle_local(int b, int c, bool down) const {
        return 2L * R_ * c - static_cast<long>(c) * c + 2L * b + (down ? 1 : 0);
    }

    std::array<long, 3> corner_key(int face, int b, int c) const {
        return {static_cast<long>(face_sign(face, 0)) * (R_ - b - c),
                static_cast<long>(face_sign(face, 1)) * b,
                static_cast<long>(face_sign(face, 2)) * c};
    }

    Int evaluate(const Int& x, const Int& y, const Int& z) const {
        std::vector<Int> px(degree_ + 1), py(degree_ + 1), pz(degree_ + 1);
        px[0] = py[0] = pz[0] = 1;
        for (int k = 1; k <= degree_; ++k) {
            px[k] = px[k - 1] * x;
            py[k] = py[k - 1] * y;
            pz[k] = pz[k - 1] * z;
        }
        Int sum(0);
        for (const Term3& t : terms_) sum += t.coeff * px[t.e0] * py[t.e1] * pz[t.e2];
        return sum;
    }

    // Exact signs at all face corners; false when some corner evaluates to
    // zero (caller retries with the next shear).
    bool compute_signs(const std::array<std::array<long, 3>, 3>& N) {
        signs_.assign(8, {});
        const std::size_t corners = corner_index(0, R_) + 1;
        for (int face = 0; face < 8; ++face) {
            auto& grid = signs_[face];
            grid.assign(corners, 0);
            const long sx = face_sign(face, 0), sy = face_sign(face, 1), sz = face_sign(face, 2);
            for (int c = 0; c <= R_; ++c) {
                const int row_len = R_ - c + 1;
                // Lattice row: k(b) = (sx (R - c - b), sy b, sz c), so the
                // sheared point N k(b) moves linearly in b and f(N k(b)) is
                // a polynomial of degree <= deg f: forward differences.
                std::array<Int, 3> base, step;
                for (int r = 0; r < 3; ++r) {
                    base[r] = Int(N[r][0]) * (sx * static_cast<long>(R_ - c)) +
                              Int(N[r][2]) * (sz * static_cast<long>(c));
                    step[r] = Int(N[r][1]) * sy - Int(N[r][0]) * sx;
                }
                const int direct = std::min(row_len, degree_ + 1);
                std::vector<Int> table;
                table.reserve(direct);
                for (int b = 0; b < direct; ++b) {
                    Int v = evaluate(base[0] + step[0] * b, base[1] + step[1] * b,
                                     base[2] + step[2] * b);
                    if (v == 0) return false;
                    grid[corner_index(b, c)] = v > 0 ? 1 : -1;
                    table.push_back(std::move(v));
                }
                if (row_len <= degree_ + 1) continue;
                // In-place forward differences: table[j] = Delta^j f at b=0.
                for (std::size_t level = 1; level < table.size(); ++level)
                    for (std::size_t i = table.size() - 1; i >= level; --i)
                        table[i] -= table[i - 1];
                // One ascending sweep advances the anchor by one step and
                // leaves f at the new anchor in table[0].
                for (int b = 1; b < row_len; ++b) {
                    for (std::size_t j = 0; j + 1 < table.size(); ++j) table[j] += table[j + 1];
                    if (b < direct) continue;  // rolls through known values
                    if (table[0] == 0) return false;
                    grid[corner_index(b, c)] = table[0] > 0 ? 1 : -1;
                }
            }
        }
        return true;
    }

    bool marked(int face, int b, int c, bool down) const {
        const auto& grid = signs_[face];
        int8_t s0, s1, s2;
        if (!down) {
            s0 = grid[corner_index(b, c)];
            s1 = grid[corner_index(b + 1, c)];
            s2 = grid[corner_index(b, c + 1)];
        } else {
            s0 = grid[corner_index(b + 1, c)];
            s1 = grid[corner_index(b, c + 1)];
            s2 = grid[corner_index(b + 1, c + 1)];
        }
        return !(s0 == s1 && s1 == s2);
    }

    RunResult analyze() {
        // Collect marked triangles.
        std::unordered_map<long, int> index_of;  // global triangle id -> dense index
        std::vector<long> global_ids;
        std::vector<std::array<int, 4>> info;  // face, b, c, down
        const long per_face = static_cast<long>(R_) * R_;
        for (int face = 0; face < 8; ++face) {
            for (int c = 0; c < R_; ++c) {
                for (int b = 0; b < R_ - c; ++b) {
                    if (marked(face, b, c, false)) {
                        long id = face * per_face + triangle_local(b, c, false);
                        index_of.emplace(id, static_cast<int>(global_ids.size()));
                        global_ids.push_back(id);
                        info.push_back({face, b, c, 0});
                    }
                    if (b + c <= R_ - 2 && marked(face, b, c, true)) {
                        long id = face * per_face + triangle_local(b, c, true);
                        index_of.emplace(id, static_cast<int>(global_ids.size()));
                        global_ids.push_back(id);
                        info.push_back({face, b, c, 1});
                    }
                }
            }
        }

        UnionFind uf(static_cast<int>(global_ids.size()));
        auto try_unite = [&](int idx, long other_id) {
            auto it = index_of.find(other_id);
            if (it != index_of.end()) uf.unite(idx, it->second);
        };

        // Interior adjacency: every interior edge joins a down-triangle to
        // one of its three up-neighbours. Face-boundary edges of
        // up-triangles are stitched through shared corner keys.
        std::map<std::array<long, 6>, std::pair<int, int>> boundary_edges;
        auto record_boundary = [&](int idx, std::array<long, 3> k1, std::array<long, 3> k2) {
            if (k2 < k1) std::swap(k1, k2);
            std::array<long, 6> key{k1[0], k1[1], k1[2], k2[0], k2[1], k2[2]};
            auto [it, inserted] = boundary_edges.emplace(key, std::pair<int, int>{idx, -1});
            if (!inserted) it->second.second = idx;
        };

        for (std::size_t i = 0; i < info.size(); ++i) {
            const auto [face, b, c, down] = info[i];
            const long base = face * per_face;
            if (down) {
                try_unite(static_cast<int>(i), base + triangle_local(b, c, false));
                try_unite(static_cast<int>(i), base + triangle_local(b + 1, c, false));
                try_unite(static_cast<int>(i), base + triangle_local(b, c + 1, false));
            } else {
                if (c == 0) record_boundary(static_cast<int>(i), corner_key(face, b, 0),
                                            corner_key(face, b + 1, 0));
                if (b == 0) record_boundary(static_cast<int>(i), corner_key(face, 0, c),
                                            corner_key(face, 0, c + 1));
                if (b + c == R_ - 1) record_boundary(static_cast<int>(i), corner_key(face, b + 1, c),
                                                     corner_key(face, b, c + 1));
            }
        }
        for (const auto& [key, pair] : boundary_edges)
            if (pair.second >= 0) uf.unite(pair.first, pair.second);

        // Components on the sphere, then antipodal identification. The
        // antipodal image of triangle (face, b, c) is the same cell on the
        // opposite face, so the marked set is antipodally closed.
        std::map<int, int> root_order;  // UF root -> sphere component id
        std::vector<int> component_of(info.size());
        std::vector<int> member_of_component;
        for (std::size_t i = 0; i < info.size(); ++i) {
            int root = uf.find(static_cast<int>(i));
            auto [it, inserted] = root_order.emplace(root, static_cast<int>(root_order.size()));
            if (inserted) member_of_component.push_back(static_cast<int>(i));
            component_of[i] = it->second;
        }

        const int sphere_components = static_cast<int>(root_order.size());
        std::vector<int> partner(sphere_components, -1);
        for (int comp = 0; comp < sphere_components; ++comp) {
            const auto [face, b, c, down] = info[member_of_component[comp]];
            const long anti_id = (face ^ 7) * per_face + triangle_local(b, c, down != 0);
            auto it = index_of.find(anti_id);
            if (it == index_of.end())
                throw std::logic_error("sphere scan: marked set is not antipodally closed");
            partner[comp] = component_of[it->second];
        }

        RunResult result;
        result.sphere_components = sphere_components;
        std::vector<bool> seen(sphere_components, false);
        for (int comp = 0; comp < sphere_components; ++comp) {
            if (seen[comp]) continue;
            seen[comp] = true;
            if (partner[comp] == comp) {
                result.class_sizes.push_back(1);
            } else {
                if (partner[partner[comp]] != comp)
                    throw std::logic_error("sphere scan: antipodal pairing is not an involution");
                seen[partner[comp]] = true;
                result.class_sizes.push_back(2);
            }
        }
        result.count = static_cast<int>(result.class_sizes.size());
        return result;
    }

    int R_;
    int degree_ = 0;
    std::vector<Term3> terms_;
    std::vector<std::vector<int8_t>> signs_;
};

}  // namespace

ComponentCount count_curve_components(const IntPolynomial& ternary_form, int resolution) {
    RunResult base = SphereScan(ternary_form, resolution).run();
    RunResult refined = SphereScan(ternary_form, 2 * resolution).run();
    ComponentCount out;
    out.count = refined.count;
    out.resolution = resolution;
    out.stable = (base.count == refined.count);
    out.sphere_components = refined.sphere_components;
    out.antipodal_class_sizes = std::move(refined.class_sizes);
    return out;
}

ComponentCount count_curve_components(const RealFormEquation& eq, int resolution) {
    if (!eq.polynomial)
        throw std::invalid_argument("count_curve_components: no polynomial (L-type descriptor)");
    if (eq.n != 1)
        throw std::invalid_argument("count_curve_components: curve counting requires n = 1");
    return count_curve_components(*eq.polynomial, resolution);
}

}  // namespace fermat
