#pragma once

// Text formats: ring presentations, resolution certificate files (ring +
// ordered map blocks + augment line) and Baer problem files. Expressions use
// the noncommutative polynomial grammar: rationals a/b, generator names, *,
// ^, +, -, parentheses; rhs monomials need not be normal, the parser
// normalizes.

#include <variant>

#include "sgr/finite_module.hpp"
#include "sgr/shift_sum.hpp"

namespace sgr {

RingPresentation parse_presentation(const std::string& text);

// Standalone expression in an installed ring (CLI --expr).
Polynomial parse_polynomial(const RingPresentation& ring, const std::string& text);

ShiftSum parse_shift_sum(const std::string& text);

struct MorphismSpec {
    std::string name;
    ShiftSum source;
    ShiftSum target;
    std::vector<std::vector<Polynomial>> entries;  // row-major
};

struct CertificateFile {
    RingPresentation ring;
    std::vector<MorphismSpec> maps;  // d1, d2, ... in file order
    std::vector<Polynomial> augment_gens;
};

CertificateFile parse_certificate_file(const std::string& text);

// Module block of a Baer problem: either "module truncate R/{...} to D" or
// an explicit degree-indexed dimension list with action matrices.
struct BaerModuleSpec {
    bool truncate = true;
    std::vector<Polynomial> quotient_gens;
    int D = 6;
    std::vector<long> dims;
    struct ActionBlock {
        int gen = 0;
        int degree = 0;
        QMatrix matrix;
    };
    std::vector<ActionBlock> actions;
};

struct BaerProblemFile {
    RingPresentation ring;
    std::vector<Polynomial> ideal_gens;
    BaerModuleSpec module;
    // values: ring expressions (classes in a truncated module) or raw
    // coordinate vectors for explicit modules
    std::vector<std::variant<Polynomial, QVector>> values;
};

BaerProblemFile parse_baer_problem(const std::string& text);

}  // namespace sgr
