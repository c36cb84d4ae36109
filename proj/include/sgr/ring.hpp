#pragma once

// Finitely presented PBW-type semi-graded rings: generators with positive
// weights and exactly one degree-compatible rewriting rule per out-of-order
// generator pair. Normal forms, multiplication, homogeneous component bases,
// the diamond-lemma overlap check, and the bounded semi-graduation audit all
// live here, together with the corpus of example algebras.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/polynomial.hpp"

namespace sgr {

struct GeneratorSpec {
    std::string name;
    int degree = 1;
};

// A free word: sequence of generator indices, left to right.
using Word = std::vector<int>;

struct RewriteRule {
    int hi = 0;
    int lo = 0;      // rewrites g_hi * g_lo with hi > lo
    Polynomial rhs;  // PBW-normal after installation
};

// Pre-normalization rule as produced by the parser: rhs words need not be
// sorted yet, the installer normalizes them.
struct RawRule {
    int hi = 0;
    int lo = 0;
    std::vector<std::pair<Word, Rational>> rhs;
};

struct ConfluenceOverlap {
    int k = 0, j = 0, i = 0;   // overlap word g_k g_j g_i with k > j > i
    Polynomial reduce_left;    // normal form resolving (g_k, g_j) first
    Polynomial reduce_right;   // normal form resolving (g_j, g_i) first
    Polynomial residual;       // reduce_left - reduce_right
};

struct ConfluenceReport {
    int max_degree = 0;
    bool pass = true;
    std::vector<ConfluenceOverlap> overlaps;
};

struct SgAxiomWitness {
    Monomial u, v;
    Polynomial product;
    int bound = 0;  // deg u + deg v
};

struct SgAxiomReport {
    int max_degree = 0;
    bool unit_in_degree_zero = true;
    std::vector<SgAxiomWitness> violations;
    bool pass() const { return unit_in_degree_zero && violations.empty(); }
};

class RingPresentation {
  public:
    std::string name;
    std::vector<GeneratorSpec> generators;
    std::vector<RewriteRule> rules;  // sorted by (hi, lo); one per pair hi > lo

    // Escape hatch for running downstream machinery on a non-confluent
    // system anyway (CLI --force). Off by default.
    bool force_nonconfluent = false;

    int num_generators() const { return static_cast<int>(generators.size()); }
    int degree_of(int gen) const { return generators[static_cast<size_t>(gen)].degree; }

    int weighted_degree(const std::vector<int>& exps) const {
        int d = 0;
        for (size_t i = 0; i < exps.size(); ++i) d += exps[i] * generators[i].degree;
        return d;
    }

    int word_degree(const Word& w) const {
        int d = 0;
        for (int g : w) d += degree_of(g);
        return d;
    }

    Monomial monomial(std::vector<int> exps) const {
        Monomial m{std::move(exps), 0};
        m.wdeg = weighted_degree(m.exps);
        return m;
    }

    Monomial unit() const { return monomial(std::vector<int>(generators.size(), 0)); }

    Monomial generator_monomial(int g) const {
        std::vector<int> e(generators.size(), 0);
        e[static_cast<size_t>(g)] = 1;
        return monomial(std::move(e));
    }

    std::optional<int> generator_index(const std::string& name_) const {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == name_) return static_cast<int>(i);
        return std::nullopt;
    }

    const RewriteRule& rule(int hi, int lo) const;
    const std::vector<std::pair<Word, Rational>>& expansion(int hi, int lo) const;
    const std::map<std::pair<int, int>, size_t>& rule_index() const { return rule_index_; }
    const std::vector<std::vector<std::pair<Word, Rational>>>& expansions() const { return expansions_; }

    bool installed() const { return installed_; }
    bool confluent() const { return confluent_; }
    const ConfluenceReport& confluence_report() const { return confluence_; }

    // Downstream linear algebra only trusts the monomial basis when the
    // rewriting system is confluent.
    void require_confluent() const {
        if (!confluent_ && !force_nonconfluent)
            throw NotConfluentError("ring '" + name + "' failed the confluence check; pass --force to proceed anyway");
    }

    friend void install_rules(RingPresentation&, std::vector<RawRule>, bool);

  private:
    bool installed_ = false;
    bool confluent_ = false;
    ConfluenceReport confluence_;
    std::map<std::pair<int, int>, size_t> rule_index_;
    std::vector<std::vector<std::pair<Word, Rational>>> expansions_;
};

// Validates generators and rules, normalizes every rule rhs, and caches the
// full overlap check. With enforce_degree_bounds = false the semi-graded
// admissibility conditions are skipped (test support for deliberately broken
// presentations); rewriting may then fail to terminate on adversarial input.
void install_rules(RingPresentation& ring, std::vector<RawRule> raw, bool enforce_degree_bounds = true);

Word word_of(const Monomial& m);

Polynomial normal_form(const RingPresentation& ring, const Word& word);
Polynomial normal_form(const RingPresentation& ring, const std::vector<std::pair<Word, Rational>>& words);

Polynomial multiply(const RingPresentation& ring, const Monomial& a, const Monomial& b);
Polynomial multiply(const RingPresentation& ring, const Polynomial& a, const Polynomial& b);

// All PBW monomials of weighted degree exactly k, in canonical order;
// empty for k < 0.
std::vector<Monomial> component_basis(const RingPresentation& ring, int k);
long component_dim(const RingPresentation& ring, int k);

ConfluenceReport check_confluence(const RingPresentation& ring, int max_degree);
SgAxiomReport verify_sg_axioms(const RingPresentation& ring, int max_degree);

// Built-in corpus: weyl, qweyl(q), usl2, jordan_def, poly2.
RingPresentation load_example(const std::string& spec);

std::string mono_to_string(const RingPresentation& ring, const Monomial& m);
std::string poly_to_string(const RingPresentation& ring, const Polynomial& p);

}  // namespace sgr
