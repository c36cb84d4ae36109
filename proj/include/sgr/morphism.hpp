#pragma once

// Morphisms between shift sums as matrices of ring elements with homogeneity
// certificates: strict degree-zero (every entry term of exact degree
// a_j - b_i) or filtered (bounded by a_j - b_i). Also the detection map
// phi_bar(r) = (r*m)_k of the generator construction, with its linearity
// audit.

#include "sgr/finite_module.hpp"
#include "sgr/shift_sum.hpp"

namespace sgr {

enum class Semantics { strict, filtered };

inline const char* to_string(Semantics s) { return s == Semantics::strict ? "strict" : "filtered"; }

struct PolyMatrixMorphism {
    ShiftSum source;  // typically (-a_1, ..., -a_s)
    ShiftSum target;  // (-b_1, ..., -b_t)
    std::vector<std::vector<Polynomial>> entries;  // [row i][col j]; column j is the image of eps_j
    Semantics semantics = Semantics::filtered;

    int rows() const { return target.size(); }
    int cols() const { return source.size(); }

    // degree bound for entry (i, j): a_j - b_i
    int entry_bound(int i, int j) const {
        return -source.shifts[static_cast<size_t>(j)] + target.shifts[static_cast<size_t>(i)];
    }
};

// Validates the homogeneity certificate for the chosen semantics entry-wise.
PolyMatrixMorphism make_morphism(const RingPresentation& ring, ShiftSum source, ShiftSum target,
                                 std::vector<std::vector<Polynomial>> entries, Semantics semantics);

// True when the entries satisfy the given certificate (no throw).
bool satisfies_certificate(const ShiftSum& source, const ShiftSum& target,
                           const std::vector<std::vector<Polynomial>>& entries, Semantics semantics);

PolyMatrixMorphism identity_morphism(const RingPresentation& ring, const ShiftSum& sum);
PolyMatrixMorphism zero_morphism(const ShiftSum& source, const ShiftSum& target, Semantics semantics);

// v |-> sum_j v_j * column_j. Strict semantics projects the result back to
// the input's module degree and requires a homogeneous input.
ModuleElement apply(const RingPresentation& ring, const PolyMatrixMorphism& f, const ModuleElement& v);

// f after g (matrix product with ring multiplication, g's entries on the left).
PolyMatrixMorphism compose(const RingPresentation& ring, const PolyMatrixMorphism& f, const PolyMatrixMorphism& g);

// Matrix of apply on filtered_basis(source, k) -> filtered_basis(target, k).
QMatrix component_matrix(const RingPresentation& ring, const PolyMatrixMorphism& f, int k);

// phi_bar : R(-j) -> M sending homogeneous r in (R(-j))_k to (r*m)_k.
struct LeadingComponentMap {
    int degree_j = 0;  // m lives in M_j
    ShiftSum target;
    ModuleElement m;
};

LeadingComponentMap leading_component_map(const RingPresentation& ring, const ShiftSum& target,
                                          const ModuleElement& m);

// Same map into a finite truncated module; m given by stacked coordinates.
struct LeadingComponentMapFinite {
    int degree_j = 0;
    const FiniteSGModule* target = nullptr;
    QVector m;
};

LeadingComponentMapFinite leading_component_map(const RingPresentation& ring, const FiniteSGModule& target,
                                                const QVector& m);

// Extended by linearity over the homogeneous parts of r.
ModuleElement phi_bar(const RingPresentation& ring, const LeadingComponentMap& map, const Polynomial& r);
QVector phi_bar(const RingPresentation& ring, const LeadingComponentMapFinite& map, const Polynomial& r);

struct LinearityWitness {
    Monomial ra, rk;
    ModuleElement lhs;  // phi_bar(ra * rk)
    ModuleElement rhs;  // ra * phi_bar(rk)
    ModuleElement residual;
};

struct LinearityReport {
    int max_degree = 0;
    long pairs_checked = 0;
    std::vector<LinearityWitness> violations;
    bool pass() const { return violations.empty(); }
};

// Exhaustive comparison of phi_bar(ra*rk) against ra*phi_bar(rk) over all
// basis monomial pairs with deg ra + deg rk <= max_degree. A violation
// exists iff the report is non-empty.
LinearityReport check_strict_linearity(const RingPresentation& ring, const ShiftSum& target, const ModuleElement& m,
                                       int max_degree);

}  // namespace sgr
