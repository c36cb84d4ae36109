#pragma once

// Computational content of the semi-graded Baer criterion: degree-zero maps
// J -> E given by generator values (with bounded syzygy consistency), the
// uniform-element solve g(r) = r*x over E_0, conductor ideals, and one
// morphism-extension step M -> M + Rb.

#include "sgr/homology.hpp"

namespace sgr {

struct IdealMapSpec {
    std::vector<Polynomial> ideal_gens;  // homogeneous, degrees d_i
    std::vector<QVector> values;         // v_i: stacked coords in E, supported in the degree-d_i block
};

struct ConsistencyWitness {
    std::vector<Polynomial> syzygy;  // coefficients c with sum c_i g_i = 0
    QVector residual;                // sum c_i v_i, nonzero
};

struct ConsistencyError : Error {
    ConsistencyWitness witness;
    ConsistencyError(std::string what_, ConsistencyWitness w) : Error(std::move(what_)), witness(std::move(w)) {}
};

// Validates shapes, homogeneity and the bounded syzygy consistency that
// makes g well-defined from generator values. Throws ConsistencyError with
// the violating syzygy otherwise.
IdealMapSpec make_ideal_map_spec(const RingPresentation& ring, const FiniteSGModule& E,
                                 std::vector<Polynomial> ideal_gens, std::vector<QVector> values, int D);

struct BaerCheck {
    std::string element;  // spanning element u*g_i
    bool ok = true;
};

struct BaerResult {
    bool solvable = false;
    QVector x;                             // E_0 coordinates when solvable
    std::optional<QVector> infeasibility;  // lambda with lambda^T A = 0, lambda^T b = 1
    std::vector<BaerCheck> transcript;     // spanning-set verification of g(r) = r*x
    Index unknowns = 0;
    Index equations = 0;
};

// Solves { r_i * x = v_i as full equalities in E } for x in E_0 coordinates
// and verifies the solution across a spanning set of J up to degree D. The
// system itself does not depend on D, so infeasibility is unconditional.
BaerResult solve_baer(const RingPresentation& ring, const IdealMapSpec& spec, const FiniteSGModule& E, int D);

// Homogeneous generators of { r in R | r*b in span(M) }, degree by degree up
// to D - deg(b), minimal modulo the bounded span of earlier generators.
std::vector<Polynomial> conductor_ideal(const RingPresentation& ring, const ShiftSum& B,
                                        const std::vector<ModuleElement>& M_gens, const ModuleElement& b, int D);

struct ExtensionWitness {
    std::string module_part;  // u with u + r*b = 0
    std::string ring_part;    // r
    QVector residual;         // psi(u) + r*x
};

struct ExtensionResult {
    bool well_defined = true;
    std::optional<ExtensionWitness> witness;
    Index family_size = 0;
    Index relations_checked = 0;
};

// psi'(u + r b) = psi(u) + r x on a spanning family of (M + Rb)_{<=D};
// checks well-definedness on every bounded relation. psi is given by values
// on the M generators; x0 is the solve_baer solution in E_0 coordinates.
ExtensionResult extend_morphism(const RingPresentation& ring, const ShiftSum& B,
                                const std::vector<ModuleElement>& M_gens, const std::vector<QVector>& psi_values,
                                const ModuleElement& b, const QVector& x0, const FiniteSGModule& E, int D);

}  // namespace sgr
