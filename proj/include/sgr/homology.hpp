#pragma once

// Bounded-degree homological engine: kernels of morphisms on filtered
// components, syzygy generator extraction, complex/exactness verification,
// resolution construction, ideal membership with self-verifying
// certificates, and the projective-dimension estimate.

#include "sgr/morphism.hpp"

namespace sgr {

enum class CheckStatus { unchecked, pass, fail };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::unchecked: return "unchecked";
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
    }
    return "unchecked";
}

struct ComplexCheck {
    int position = 0;
    int degree = -1;  // -1 for symbolic (degree-independent) checks
    std::string kind;  // "complex" | "exact" | "kernel"
    CheckStatus status = CheckStatus::unchecked;
    std::string witness;
};

struct ChainComplex {
    // positions[i] = P_i, diffs[i] = d_{i+1} : P_{i+1} -> P_i
    std::vector<ShiftSum> positions;
    std::vector<PolyMatrixMorphism> diffs;
    std::optional<TruncatedQuotient> augmentation;  // P_0 must be R(0) when set
    std::vector<Polynomial> augmentation_gens;

    int length() const { return static_cast<int>(positions.size()) - 1; }
};

struct ComplexReport {
    bool pass = true;
    std::vector<ComplexCheck> checks;
};

// d_i ∘ d_{i+1} = 0 symbolically for every adjacent pair, and the
// augmentation kills every d_1 column when present.
ComplexReport verify_complex(const RingPresentation& ring, const ChainComplex& complex, int D);

// Rank-nullity comparison of consecutive component matrices at every
// filtered level k <= D; requires verify_complex to have passed.
ComplexReport verify_exactness(const RingPresentation& ring, const ChainComplex& complex, int D);

// Basis of the null space of the filtered component matrix at level k,
// decoded back to module elements of level <= k.
std::vector<ModuleElement> kernel_filtered(const RingPresentation& ring, const PolyMatrixMorphism& f, int k);

struct SyzygyGenerator {
    ModuleElement element;
    int level = 0;
};

// Minimal bounded generating set of ker f: levels ascending, each new
// generator independent of the R-span (up to its level) of the earlier
// ones, lex-earliest pivots, leading coordinate normalized to 1.
std::vector<SyzygyGenerator> syzygy_generators(const RingPresentation& ring, const PolyMatrixMorphism& f, int D);

struct MembershipCertificate {
    Polynomial target;
    std::vector<Polynomial> gens;
    std::vector<Polynomial> coefficients;  // sum_j coefficients[j] * gens[j] == target
};

// Exact re-normalization check of the certificate identity.
bool verify_certificate(const RingPresentation& ring, const MembershipCertificate& cert);

// Solves sum_j c_j g_j = target with deg c_j <= D - deg g_j; nullopt when no
// bounded certificate exists.
std::optional<MembershipCertificate> ideal_membership(const RingPresentation& ring, const Polynomial& target,
                                                      const std::vector<Polynomial>& gens, int D);

struct Resolution {
    ChainComplex complex;
    int D = 0;
    int max_length = 0;
    int length = 0;
    bool zero_module = false;                              // 1 ∈ J detected
    std::optional<MembershipCertificate> unit_certificate; // the 1 ∈ J witness
    bool certified = false;  // kernel vanishes up to D at the last position
    std::vector<Semantics> diff_semantics;  // strongest certificate each differential satisfies
    std::string ring_name;
    std::vector<Polynomial> ideal_gens;
};

// P_0 = R(0) onto R/J; d_1 from the given generators; then syzygy covers
// until the kernel vanishes up to D or max_length is reached. 1 ∈ J is a
// distinguished outcome, not an error.
Resolution build_resolution(const RingPresentation& ring, const std::vector<Polynomial>& ideal_gens, int max_length,
                            int D);

struct PdReport {
    bool zero_module = false;
    int length = 0;
    bool certified = false;
    int D = 0;
    std::string summary;
    std::optional<std::string> paper_claim;
    std::optional<std::string> agreement;  // "agree" | "disagree" | "not-applicable"
};

PdReport pd_estimate(const Resolution& res);

}  // namespace sgr
