#include "sgr/ring.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sgr {

namespace {

// Worklist keys order words by (weighted degree, length, lex). Rule right
// hand sides are strictly below their left hand side in this order, so every
// expansion step descends and each distinct word is processed at most once.
using WordKey = std::tuple<int, size_t, Word>;

WordKey make_key(const RingPresentation& ring, Word w) {
    const int deg = ring.word_degree(w);
    const size_t len = w.size();
    return {deg, len, std::move(w)};
}

Monomial mono_from_word(const RingPresentation& ring, const Word& w) {
    std::vector<int> exps(ring.generators.size(), 0);
    for (int g : w) exps[static_cast<size_t>(g)] += 1;
    return ring.monomial(std::move(exps));
}

using ExpansionTable = std::vector<std::vector<std::pair<Word, Rational>>>;
using RuleIndex = std::map<std::pair<int, int>, size_t>;

Polynomial reduce_worklist(const RingPresentation& ring, const RuleIndex& index, const ExpansionTable& table,
                           std::map<WordKey, Rational> pending) {
    Polynomial out;
    while (!pending.empty()) {
        auto top = std::prev(pending.end());
        const Word w = std::get<2>(top->first);
        const Rational c = top->second;
        pending.erase(top);
        if (c == 0) continue;

        size_t pos = w.size();
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] > w[p + 1]) {
                pos = p;
                break;
            }
        }
        if (pos == w.size()) {
            out.add_term(mono_from_word(ring, w), c);
            continue;
        }
        const auto& expansion = table[index.at({w[pos], w[pos + 1]})];
        for (const auto& [rw, rc] : expansion) {
            Word nw;
            nw.reserve(w.size() - 2 + rw.size());
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
            auto [it, inserted] = pending.try_emplace(make_key(ring, std::move(nw)), c * rc);
            if (!inserted) {
                it->second += c * rc;
                if (it->second == 0) pending.erase(it);
            }
        }
    }
    return out;
}

// Strictly-below test in the (weighted degree, length, lex) word order,
// against the two-letter left hand side (hi, lo).
bool word_below_lhs(const RingPresentation& ring, const Word& w, int hi, int lo) {
    const int lhs_deg = ring.degree_of(hi) + ring.degree_of(lo);
    const int deg = ring.word_degree(w);
    if (deg != lhs_deg) return deg < lhs_deg;
    if (w.size() != 2) return w.size() < 2;
    const Word lhs{hi, lo};
    return std::lexicographical_compare(w.begin(), w.end(), lhs.begin(), lhs.end());
}

}  // namespace

const RewriteRule& RingPresentation::rule(int hi, int lo) const {
    auto it = rule_index_.find({hi, lo});
    if (it == rule_index_.end()) throw Error("no rule for generator pair (" + std::to_string(hi) + ", " + std::to_string(lo) + ")");
    return rules[it->second];
}

const std::vector<std::pair<Word, Rational>>& RingPresentation::expansion(int hi, int lo) const {
    auto it = rule_index_.find({hi, lo});
    if (it == rule_index_.end()) throw Error("no rule for generator pair (" + std::to_string(hi) + ", " + std::to_string(lo) + ")");
    return expansions_[it->second];
}

void install_rules(RingPresentation& ring, std::vector<RawRule> raw, bool enforce_degree_bounds) {
    const int n = ring.num_generators();

    std::set<std::string> seen;
    for (const auto& g : ring.generators) {
        if (g.name.empty()) throw ValidationError("generator with empty name");
        if (!seen.insert(g.name).second) throw ValidationError("duplicate generator '" + g.name + "'");
        if (g.degree < 1) throw ValidationError("generator '" + g.name + "' has degree " + std::to_string(g.degree) + "; degrees must be >= 1");
    }

    // one rule per out-of-order pair, no extras
    std::sort(raw.begin(), raw.end(), [](const RawRule& a, const RawRule& b) {
        return std::pair(a.hi, a.lo) < std::pair(b.hi, b.lo);
    });
    std::set<std::pair<int, int>> pairs;
    for (const auto& r : raw) {
        if (r.hi < 0 || r.hi >= n || r.lo < 0 || r.lo >= n) throw ValidationError("rule references an unknown generator");
        if (r.hi <= r.lo)
            throw ValidationError("rule for pair (" + ring.generators[static_cast<size_t>(r.hi)].name + ", " +
                                  ring.generators[static_cast<size_t>(r.lo)].name + ") does not rewrite an out-of-order pair");
        if (!pairs.insert({r.hi, r.lo}).second)
            throw ValidationError("duplicate rule for pair " + ring.generators[static_cast<size_t>(r.hi)].name + "*" +
                                  ring.generators[static_cast<size_t>(r.lo)].name);
    }
    for (int hi = 0; hi < n; ++hi)
        for (int lo = 0; lo < hi; ++lo)
            if (!pairs.count({hi, lo}))
                throw ValidationError("missing rule for pair " + ring.generators[static_cast<size_t>(hi)].name + "*" +
                                      ring.generators[static_cast<size_t>(lo)].name);

    // merge duplicate rhs words, drop zero coefficients
    for (auto& r : raw) {
        std::map<Word, Rational> merged;
        for (auto& [w, c] : r.rhs) {
            merged[w] += c;
        }
        r.rhs.clear();
        for (auto& [w, c] : merged)
            if (c != 0) r.rhs.emplace_back(w, c);
    }

    if (enforce_degree_bounds) {
        for (const auto& r : raw) {
            const int lhs_deg = ring.degree_of(r.hi) + ring.degree_of(r.lo);
            const std::string lhs_name = ring.generators[static_cast<size_t>(r.hi)].name + "*" +
                                         ring.generators[static_cast<size_t>(r.lo)].name;
            for (const auto& [w, c] : r.rhs) {
                for (int g : w)
                    if (g < 0 || g >= n) throw ValidationError("rule rhs references an unknown generator");
                const int deg = ring.word_degree(w);
                if (deg > lhs_deg)
                    throw ValidationError("rule " + lhs_name + ": rhs term of degree " + std::to_string(deg) +
                                          " exceeds the lhs degree " + std::to_string(lhs_deg));
                if (!word_below_lhs(ring, w, r.hi, r.lo))
                    throw ValidationError("rule " + lhs_name + ": rhs term breaks the termination order");
            }
        }
    }

    // normalize every rhs against the raw system, then freeze
    RuleIndex index;
    ExpansionTable raw_table;
    for (size_t i = 0; i < raw.size(); ++i) {
        index[{raw[i].hi, raw[i].lo}] = i;
        raw_table.push_back(raw[i].rhs);
    }

    ring.rules.clear();
    ring.expansions_.clear();
    ring.rule_index_ = index;
    for (const auto& r : raw) {
        std::map<WordKey, Rational> seed;
        for (const auto& [w, c] : r.rhs) seed[make_key(ring, w)] += c;
        Polynomial rhs = reduce_worklist(ring, index, raw_table, std::move(seed));
        ring.rules.push_back(RewriteRule{r.hi, r.lo, std::move(rhs)});
    }
    for (const auto& r : ring.rules) {
        std::vector<std::pair<Word, Rational>> exp;
        for (const auto& [m, c] : r.rhs.terms()) exp.emplace_back(word_of(m), c);
        ring.expansions_.push_back(std::move(exp));
    }
    ring.installed_ = true;

    // cache the full overlap check; bound covers every generator triple
    int bound = 3;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                bound = std::max(bound, ring.degree_of(i) + ring.degree_of(j) + ring.degree_of(k));
    ring.confluence_ = check_confluence(ring, bound);
    ring.confluent_ = ring.confluence_.pass;
}

Word word_of(const Monomial& m) {
    Word w;
    w.reserve(static_cast<size_t>(m.length()));
    for (size_t g = 0; g < m.exps.size(); ++g)
        for (int e = 0; e < m.exps[g]; ++e) w.push_back(static_cast<int>(g));
    return w;
}

Polynomial normal_form(const RingPresentation& ring, const Word& word) {
    if (!ring.installed()) throw Error("ring presentation is not installed");
    for (int g : word)
        if (g < 0 || g >= ring.num_generators()) throw Error("word references an unknown generator index");
    std::map<WordKey, Rational> seed;
    seed[make_key(ring, word)] = 1;
    return reduce_worklist(ring, ring.rule_index(), ring.expansions(), std::move(seed));
}

Polynomial normal_form(const RingPresentation& ring, const std::vector<std::pair<Word, Rational>>& words) {
    if (!ring.installed()) throw Error("ring presentation is not installed");
    std::map<WordKey, Rational> seed;
    for (const auto& [w, c] : words) {
        for (int g : w)
            if (g < 0 || g >= ring.num_generators()) throw Error("word references an unknown generator index");
        auto [it, inserted] = seed.try_emplace(make_key(ring, w), c);
        if (!inserted) it->second += c;
    }
    return reduce_worklist(ring, ring.rule_index(), ring.expansions(), std::move(seed));
}

Polynomial multiply(const RingPresentation& ring, const Monomial& a, const Monomial& b) {
    Word w = word_of(a);
    const Word wb = word_of(b);
    w.insert(w.end(), wb.begin(), wb.end());
    return normal_form(ring, w);
}

Polynomial multiply(const RingPresentation& ring, const Polynomial& a, const Polynomial& b) {
    std::map<WordKey, Rational> seed;
    for (const auto& [ma, ca] : a.terms()) {
        const Word wa = word_of(ma);
        for (const auto& [mb, cb] : b.terms()) {
            Word w = wa;
            const Word wb = word_of(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            auto [it, inserted] = seed.try_emplace(make_key(ring, std::move(w)), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) seed.erase(it);
            }
        }
    }
    return reduce_worklist(ring, ring.rule_index(), ring.expansions(), std::move(seed));
}

namespace {

void enumerate_component(const RingPresentation& ring, size_t idx, int remaining, std::vector<int>& cur,
                         std::vector<Monomial>& out) {
    if (idx == ring.generators.size()) {
        if (remaining == 0) out.push_back(ring.monomial(cur));
        return;
    }
    const int d = ring.generators[idx].degree;
    for (int a = remaining / d; a >= 0; --a) {
        cur[idx] = a;
        enumerate_component(ring, idx + 1, remaining - a * d, cur, out);
    }
    cur[idx] = 0;
}

}  // namespace

std::vector<Monomial> component_basis(const RingPresentation& ring, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    std::vector<int> cur(ring.generators.size(), 0);
    enumerate_component(ring, 0, k, cur, out);
    return out;
}

long component_dim(const RingPresentation& ring, int k) {
    return static_cast<long>(component_basis(ring, k).size());
}

ConfluenceReport check_confluence(const RingPresentation& ring, int max_degree) {
    if (!ring.installed()) throw Error("ring presentation is not installed");
    if (max_degree < 3) throw ValidationError("check_confluence requires max_degree >= 3");
    ConfluenceReport report;
    report.max_degree = max_degree;
    const int n = ring.num_generators();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (ring.degree_of(i) + ring.degree_of(j) + ring.degree_of(k) > max_degree) continue;
                ConfluenceOverlap overlap;
                overlap.k = k;
                overlap.j = j;
                overlap.i = i;
                // leftmost-first rewriting resolves the (g_k, g_j) pair first
                overlap.reduce_left = normal_form(ring, Word{k, j, i});
                // the other branch seeds with g_k * rhs(g_j, g_i)
                std::vector<std::pair<Word, Rational>> seed;
                for (const auto& [w, c] : ring.expansion(j, i)) {
                    Word nw{k};
                    nw.insert(nw.end(), w.begin(), w.end());
                    seed.emplace_back(std::move(nw), c);
                }
                overlap.reduce_right = normal_form(ring, seed);
                overlap.residual = overlap.reduce_left - overlap.reduce_right;
                if (!overlap.residual.is_zero()) report.pass = false;
                report.overlaps.push_back(std::move(overlap));
            }
        }
    }
    return report;
}

SgAxiomReport verify_sg_axioms(const RingPresentation& ring, int max_degree) {
    if (!ring.installed()) throw Error("ring presentation is not installed");
    if (max_degree < 2) throw ValidationError("verify_sg_axioms requires max_degree >= 2");
    SgAxiomReport report;
    report.max_degree = max_degree;
    const auto deg0 = component_basis(ring, 0);
    report.unit_in_degree_zero = deg0.size() == 1 && deg0.front().is_unit();
    for (int m = 0; m <= max_degree; ++m) {
        const auto basis_m = component_basis(ring, m);
        for (int n = 0; m + n <= max_degree; ++n) {
            const auto basis_n = component_basis(ring, n);
            for (const auto& u : basis_m) {
                for (const auto& v : basis_n) {
                    Polynomial p = multiply(ring, u, v);
                    if (p.degree() > m + n) report.violations.push_back(SgAxiomWitness{u, v, std::move(p), m + n});
                }
            }
        }
    }
    return report;
}

namespace {

RawRule rule_from_poly(int hi, int lo, const Polynomial& rhs) {
    RawRule r{hi, lo, {}};
    for (const auto& [m, c] : rhs.terms()) r.rhs.emplace_back(word_of(m), c);
    return r;
}

}  // namespace

RingPresentation load_example(const std::string& spec) {
    std::string base = spec;
    Rational q;
    bool has_q = false;
    if (auto open = spec.find('('); open != std::string::npos) {
        if (spec.back() != ')') throw Error("malformed example name '" + spec + "'");
        base = spec.substr(0, open);
        const std::string arg = spec.substr(open + 1, spec.size() - open - 2);
        try {
            q = Rational(arg);
        } catch (const std::invalid_argument&) {
            throw Error("invalid parameter '" + arg + "' in example name");
        }
        q.canonicalize();
        has_q = true;
    }

    RingPresentation ring;
    auto two_gen = [&](const char* xname, const char* yname) {
        ring.generators = {{xname, 1}, {yname, 1}};
    };

    if (base == "weyl") {
        if (has_q) throw Error("example 'weyl' takes no parameter");
        ring.name = "weyl";
        two_gen("x", "y");
        Polynomial rhs = Polynomial::term(ring.monomial({1, 1}), 1);
        rhs.add_term(ring.unit(), 1);
        install_rules(ring, {rule_from_poly(1, 0, rhs)});
    } else if (base == "qweyl") {
        if (!has_q) throw Error("example 'qweyl' needs a parameter, e.g. qweyl(2)");
        if (q == 0 || q == 1) throw Error("qweyl parameter must be a rational different from 0 and 1");
        ring.name = "qweyl(" + to_string(q) + ")";
        two_gen("x", "y");
        Polynomial rhs = Polynomial::term(ring.monomial({1, 1}), q);
        rhs.add_term(ring.unit(), 1);
        install_rules(ring, {rule_from_poly(1, 0, rhs)});
    } else if (base == "jordan_def") {
        if (has_q) throw Error("example 'jordan_def' takes no parameter");
        ring.name = "jordan_def";
        two_gen("x", "y");
        Polynomial rhs = Polynomial::term(ring.monomial({1, 1}), 1);
        rhs.add_term(ring.monomial({2, 0}), 1);
        rhs.add_term(ring.unit(), 1);
        install_rules(ring, {rule_from_poly(1, 0, rhs)});
    } else if (base == "poly2") {
        if (has_q) throw Error("example 'poly2' takes no parameter");
        ring.name = "poly2";
        two_gen("x", "y");
        install_rules(ring, {rule_from_poly(1, 0, Polynomial::term(ring.monomial({1, 1}), 1))});
    } else if (base == "usl2") {
        if (has_q) throw Error("example 'usl2' takes no parameter");
        ring.name = "usl2";
        ring.generators = {{"e", 1}, {"f", 1}, {"h", 1}};
        // f e -> e f - h,  h e -> e h + 2 e,  h f -> f h - 2 f
        Polynomial fe = Polynomial::term(ring.monomial({1, 1, 0}), 1);
        fe.add_term(ring.monomial({0, 0, 1}), -1);
        Polynomial he = Polynomial::term(ring.monomial({1, 0, 1}), 1);
        he.add_term(ring.monomial({1, 0, 0}), 2);
        Polynomial hf = Polynomial::term(ring.monomial({0, 1, 1}), 1);
        hf.add_term(ring.monomial({0, 1, 0}), -2);
        install_rules(ring, {rule_from_poly(1, 0, fe), rule_from_poly(2, 0, he), rule_from_poly(2, 1, hf)});
    } else {
        throw Error("unknown example '" + spec + "' (expected weyl, qweyl(q), usl2, jordan_def or poly2)");
    }
    return ring;
}

std::string mono_to_string(const RingPresentation& ring, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (size_t g = 0; g < m.exps.size(); ++g) {
        if (m.exps[g] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.generators[g].name;
        if (m.exps[g] > 1) out += "^" + std::to_string(m.exps[g]);
    }
    return out;
}

std::string poly_to_string(const RingPresentation& ring, const Polynomial& p) {
    if (p.is_zero()) return "0";
    // highest degree block first; within a block the map order (exps
    // descending) is already the display order
    std::map<int, std::vector<std::pair<const Monomial*, const Rational*>>> blocks;
    for (const auto& [m, c] : p.terms()) blocks[m.wdeg].emplace_back(&m, &c);

    std::string out;
    for (auto bit = blocks.rbegin(); bit != blocks.rend(); ++bit) {
        for (const auto& [m, c] : bit->second) {
            const bool neg = *c < 0;
            const Rational mag = neg ? Rational(-*c) : *c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (m->is_unit()) {
                out += to_string(mag);
            } else {
                if (mag != 1) out += to_string(mag) + "*";
                out += mono_to_string(ring, *m);
            }
        }
    }
    return out;
}

}  // namespace sgr
