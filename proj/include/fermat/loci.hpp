// Real-locus certification: expected topology from the classification
// tables, exact witness points / sign-change certificates, and connected
// component counts for plane curves by exact sign evaluation on a
// subdivided sphere (double cover of P^2(R)).
#ifndef FERMAT_LOCI_HPP
#define FERMAT_LOCI_HPP

#include <optional>
#include <string>
#include <vector>

#include "fermat/equations.hpp"

namespace fermat {

struct TopologyDescriptor {
    enum class Kind {
        Empty,
        Sphere,                     // S^dim
        ProductOfProjectiveSpaces,  // P^dim(R) x P^dim2(R)
        ProjectiveSpace,            // P^dim(R)
        DisjointSpheres,            // count disjoint copies of S^dim
        Unknown
    };

    Kind kind = Kind::Unknown;
    int dim = 0;
    int dim2 = 0;
    int count = 0;  // DisjointSpheres only, >= 1

    static TopologyDescriptor empty();
    static TopologyDescriptor sphere(int dim);
    static TopologyDescriptor product(int dim_a, int dim_b);
    static TopologyDescriptor projective_space(int dim);
    static TopologyDescriptor disjoint_spheres(int count, int dim);
    static TopologyDescriptor unknown();

    // Connected components of the real locus for n = 1 families; empty for
    // Unknown or non-curve descriptors.
    std::optional<int> component_count_for_curve() const;
    std::string to_string() const;

    friend bool operator==(const TopologyDescriptor&, const TopologyDescriptor&) = default;
};

TopologyDescriptor expected_topology(const ClassLabel& label, const GroupParams& params);

// A nonemptiness certificate: either an exact rational zero of the
// polynomial, or a one-variable sign change (both checked in exact
// arithmetic; intermediate-value argument supplies the real zero).
struct RealPointWitness {
    std::vector<Rat> point;  // the exact zero, or the probe line base point
    bool exact = true;
    int free_variable = -1;  // sign-change witnesses: the varied coordinate
    Rat lo, hi;              // f at (point with free=lo) and (free=hi) have opposite signs

    std::string to_string() const;
};

// Bounded search over the standard affine charts: closed-form candidates,
// exact rational roots of one-variable slices, then sign-change isolation.
// Absence of a witness is not a proof of emptiness.
std::optional<RealPointWitness> find_real_point(const RealFormEquation& eq,
                                                long denominator_bound = 4,
                                                long range_bound = 3);

// All-plus form with even d: a sum of even powers vanishes only at the
// origin, which is not projective. Throws std::domain_error for odd d.
bool prove_empty_allplus(const GroupParams& params);

struct ComponentCount {
    int count = 0;       // components of the curve in P^2(R)
    int resolution = 0;  // requested subdivision parameter
    bool stable = false; // count equal at doubled resolution
    // Diagnostics from the final run: components on the sphere before
    // antipodal identification, and the antipodal orbit sizes (1 or 2).
    int sphere_components = 0;
    std::vector<int> antipodal_class_sizes;
};

// Exact corner signs on an octahedral subdivision of S^2 (resolution cells
// per octant edge), sign-change triangles marked, edge-adjacent components
// joined, antipodal components merged. When a corner lands exactly on the
// curve the lattice is replaced by a sheared copy (an exact rational-linear
// change of coordinates; component counts are invariant under it).
ComponentCount count_curve_components(const IntPolynomial& ternary_form, int resolution);
ComponentCount count_curve_components(const RealFormEquation& eq, int resolution);

}  // namespace fermat

#endif
