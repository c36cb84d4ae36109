#include "sgr/finite_module.hpp"

#include <algorithm>

namespace sgr {

FiniteSGModule FiniteSGModule::make(const RingPresentation& ring, int D, std::vector<long> dims,
                                    std::vector<std::vector<QMatrix>> action,
                                    std::vector<std::vector<std::string>> labels, std::string origin) {
    if (D < 0) throw ValidationError("truncation degree must be >= 0");
    if (dims.size() != static_cast<size_t>(D) + 1) throw ValidationError("component dimension list must cover 0..D");
    for (long d : dims)
        if (d < 0) throw ValidationError("negative component dimension");

    FiniteSGModule mod;
    mod.D_ = D;
    mod.dims_ = std::move(dims);
    mod.offsets_.assign(static_cast<size_t>(D) + 2, 0);
    for (int k = 0; k <= D; ++k)
        mod.offsets_[static_cast<size_t>(k) + 1] = mod.offsets_[static_cast<size_t>(k)] + mod.dims_[static_cast<size_t>(k)];
    mod.total_ = mod.offsets_.back();
    for (const auto& g : ring.generators) mod.gen_degrees_.push_back(g.degree);

    const int ngen = ring.num_generators();
    if (action.size() != static_cast<size_t>(ngen)) throw ValidationError("one action table per generator required");
    for (int g = 0; g < ngen; ++g) {
        auto& table = action[static_cast<size_t>(g)];
        if (table.size() != static_cast<size_t>(D) + 1) throw ValidationError("action table must cover degrees 0..D");
        for (int k = 0; k <= D; ++k) {
            const QMatrix& m = table[static_cast<size_t>(k)];
            const int top = std::min(k + ring.degree_of(g), D);
            const Index rows = mod.offsets_[static_cast<size_t>(top) + 1];
            if (m.cols() != mod.dims_[static_cast<size_t>(k)] || m.rows() != rows)
                throw ValidationError("action matrix for generator '" + ring.generators[static_cast<size_t>(g)].name +
                                      "' at degree " + std::to_string(k) + " has the wrong shape");
        }
    }
    mod.action_ = std::move(action);

    if (labels.empty()) labels.assign(static_cast<size_t>(D) + 1, {});
    mod.labels_ = std::move(labels);
    mod.origin_ = std::move(origin);

    // the action must satisfy every rewriting rule wherever the window can
    // see both sides exactly: g_hi (g_lo v) == rhs v on degrees k with
    // k + deg lo + deg hi <= D
    for (const auto& rule : ring.rules) {
        const int dlohi = ring.degree_of(rule.lo) + ring.degree_of(rule.hi);
        for (int k = 0; k + dlohi <= D; ++k) {
            for (long col = 0; col < mod.dims_[static_cast<size_t>(k)]; ++col) {
                QVector unit = mod.zero_vector();
                unit(mod.offset(k) + col) = 1;
                QVector lhs = mod.act_gen(rule.hi, mod.act_gen(rule.lo, unit));
                QVector rhs = mod.act(ring, rule.rhs, unit);
                if (lhs != rhs)
                    throw ValidationError("module action violates rule " +
                                          ring.generators[static_cast<size_t>(rule.hi)].name + "*" +
                                          ring.generators[static_cast<size_t>(rule.lo)].name + " at degree " +
                                          std::to_string(k));
            }
        }
    }
    return mod;
}

QVector FiniteSGModule::embed(int k, const QVector& comp) const {
    QVector full = zero_vector();
    full.segment(offset(k), dim(k)) = comp;
    return full;
}

QVector FiniteSGModule::act_gen(int gen, const QVector& full) const {
    QVector out = zero_vector();
    for (int k = 0; k <= D_; ++k) {
        const long dk = dims_[static_cast<size_t>(k)];
        if (dk == 0) continue;
        const QVector comp = full.segment(offset(k), dk);
        if (comp.isZero()) continue;
        const QMatrix& m = action_[static_cast<size_t>(gen)][static_cast<size_t>(k)];
        out.head(m.rows()) += m * comp;
    }
    return out;
}

QVector FiniteSGModule::act(const RingPresentation& ring, const Polynomial& r, const QVector& full) const {
    if (static_cast<size_t>(ring.num_generators()) != gen_degrees_.size())
        throw Error("module was built over a different ring");
    QVector out = zero_vector();
    for (const auto& [m, c] : r.terms()) {
        QVector cur = full;
        const Word w = word_of(m);
        // left action: the rightmost letter acts first
        for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act_gen(*it, cur);
        out += c * cur;
    }
    return out;
}

std::string FiniteSGModule::describe_vector(const QVector& full) const {
    std::string out;
    for (int k = 0; k <= D_; ++k) {
        for (long i = 0; i < dims_[static_cast<size_t>(k)]; ++i) {
            const Rational& c = full(offset(k) + i);
            if (c == 0) continue;
            if (!out.empty()) out += " + ";
            const auto& name = labels_[static_cast<size_t>(k)].empty()
                                   ? ("[" + std::to_string(k) + ":" + std::to_string(i) + "]")
                                   : labels_[static_cast<size_t>(k)][static_cast<size_t>(i)];
            if (c == 1)
                out += name;
            else
                out += "(" + to_string(c) + ")*" + name;
        }
    }
    return out.empty() ? "0" : out;
}

TruncatedQuotient truncate_cyclic_module(const RingPresentation& ring, const std::vector<Polynomial>& ideal_gens,
                                         int D) {
    if (D < 0) throw ValidationError("truncation degree must be >= 0");
    ring.require_confluent();
    for (const auto& g : ideal_gens) {
        if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
            throw ValidationError("ideal generators must be homogeneous of positive degree");
    }

    // ring filtered coordinates on [0, D]
    std::vector<std::vector<Monomial>> rbasis;
    std::vector<Index> roffset{0};
    std::map<std::vector<int>, Index> rindex;
    for (int t = 0; t <= D; ++t) {
        rbasis.push_back(component_basis(ring, t));
        for (size_t i = 0; i < rbasis.back().size(); ++i)
            rindex[rbasis.back()[i].exps] = roffset.back() + static_cast<Index>(i);
        roffset.push_back(roffset.back() + static_cast<Index>(rbasis.back().size()));
    }
    const Index total = roffset.back();

    auto coords_of = [&](const Polynomial& p) {
        QVector v = QVector::Zero(total);
        for (const auto& [m, c] : p.terms()) {
            if (m.wdeg > D) throw Error("polynomial exceeds the truncation window");
            v(rindex.at(m.exps)) = c;
        }
        return v;
    };

    // bounded ideal subspace V = span{ m*g : deg m + deg g <= D }
    RowSpace ideal(total);
    for (const auto& g : ideal_gens) {
        const int dg = g.degree();
        for (int t = 0; t + dg <= D; ++t) {
            for (const auto& m : rbasis[static_cast<size_t>(t)]) {
                ideal.insert(coords_of(multiply(ring, Polynomial::term(m, 1), g)));
            }
        }
    }

    // split V into its degree parts; Prop-2.6-style semi-graduation of the
    // quotient needs the bounded span to be degree-split
    std::vector<std::vector<QVector>> ideal_parts;
    Index split_total = 0;
    for (int k = 0; k <= D; ++k) {
        ideal_parts.push_back(rows_supported_in_block(ideal.rows(), total, roffset[static_cast<size_t>(k)],
                                                      static_cast<Index>(rbasis[static_cast<size_t>(k)].size())));
        split_total += static_cast<Index>(ideal_parts.back().size());
    }
    if (split_total != ideal.dim())
        throw ValidationError("bounded ideal span is not degree-split within [0, " + std::to_string(D) +
                              "]; the quotient has no semi-graduation at this bound");

    TruncatedQuotient out;
    std::vector<long> dims(static_cast<size_t>(D) + 1, 0);
    std::vector<std::vector<std::string>> labels(static_cast<size_t>(D) + 1);
    out.reduction.resize(static_cast<size_t>(D) + 1);
    out.representatives.resize(static_cast<size_t>(D) + 1);
    out.ideal_rank = ideal.dim();

    for (int k = 0; k <= D; ++k) {
        const Index nk = static_cast<Index>(rbasis[static_cast<size_t>(k)].size());
        RowSpace span(nk);
        for (const auto& r : ideal_parts[static_cast<size_t>(k)]) span.insert(r);
        const Index w = span.dim();

        // lex-earliest monomials completing the ideal rows to a basis of R_k
        std::vector<Index> reps;
        for (Index c = 0; c < nk && span.dim() < nk; ++c) {
            QVector e = QVector::Zero(nk);
            e(c) = 1;
            if (span.insert(e)) reps.push_back(c);
        }
        const Index q = static_cast<Index>(reps.size());
        dims[static_cast<size_t>(k)] = q;
        for (Index r : reps) {
            out.representatives[static_cast<size_t>(k)].push_back(rbasis[static_cast<size_t>(k)][static_cast<size_t>(r)]);
            labels[static_cast<size_t>(k)].push_back(
                mono_to_string(ring, rbasis[static_cast<size_t>(k)][static_cast<size_t>(r)]));
        }

        // class map: v == sum_b alpha_b e_b  (mod ideal part); alpha = bottom
        // rows of the inverse of [ideal rows; rep rows]^T
        QMatrix sq(nk, nk);
        for (Index r = 0; r < w; ++r) sq.row(r) = ideal_parts[static_cast<size_t>(k)][static_cast<size_t>(r)].transpose();
        for (Index r = 0; r < q; ++r) {
            sq.row(w + r).setZero();
            sq(w + r, reps[static_cast<size_t>(r)]) = 1;
        }
        if (nk == 0) {
            out.reduction[static_cast<size_t>(k)] = QMatrix::Zero(0, 0);
            continue;
        }
        QMatrix aug(nk, 2 * nk);
        aug.leftCols(nk) = sq.transpose();
        aug.rightCols(nk) = QMatrix::Identity(nk, nk);
        const auto pivots = rref_in_place(aug);
        if (static_cast<Index>(pivots.size()) != nk) throw Error("reduction basis is singular");
        const QMatrix inv = aug.rightCols(nk);
        out.reduction[static_cast<size_t>(k)] = inv.bottomRows(q);
    }

    // generator actions on the chosen representatives
    std::vector<Index> qoffset{0};
    for (int k = 0; k <= D; ++k) qoffset.push_back(qoffset.back() + dims[static_cast<size_t>(k)]);
    std::vector<std::vector<QMatrix>> action(static_cast<size_t>(ring.num_generators()));
    for (int g = 0; g < ring.num_generators(); ++g) {
        const int dg = ring.degree_of(g);
        const Polynomial gp = Polynomial::term(ring.generator_monomial(g), 1);
        for (int k = 0; k <= D; ++k) {
            const int top = std::min(k + dg, D);
            QMatrix m = QMatrix::Zero(qoffset[static_cast<size_t>(top) + 1], dims[static_cast<size_t>(k)]);
            for (long col = 0; col < dims[static_cast<size_t>(k)]; ++col) {
                const Monomial& rep = out.representatives[static_cast<size_t>(k)][static_cast<size_t>(col)];
                const Polynomial p = multiply(ring, gp, Polynomial::term(rep, 1));
                for (const auto& [mm, cc] : p.terms()) {
                    if (mm.wdeg > top) continue;  // outside the window
                    // project the degree part through the class map
                    QVector e = QVector::Zero(static_cast<Index>(rbasis[static_cast<size_t>(mm.wdeg)].size()));
                    e(rindex.at(mm.exps) - roffset[static_cast<size_t>(mm.wdeg)]) = 1;
                    const QVector cls = out.reduction[static_cast<size_t>(mm.wdeg)] * e;
                    for (Index r = 0; r < cls.size(); ++r)
                        m(qoffset[static_cast<size_t>(mm.wdeg)] + r, col) += cc * cls(r);
                }
            }
            action[static_cast<size_t>(g)].push_back(std::move(m));
        }
    }

    std::string origin = "R/{";
    for (size_t i = 0; i < ideal_gens.size(); ++i) {
        if (i) origin += ", ";
        origin += poly_to_string(ring, ideal_gens[i]);
    }
    origin += "} truncated to [0, " + std::to_string(D) + "]";

    out.module = FiniteSGModule::make(ring, D, std::move(dims), std::move(action), std::move(labels), std::move(origin));
    return out;
}

QVector TruncatedQuotient::class_of(const RingPresentation& ring, const Polynomial& p) const {
    const FiniteSGModule& mod = module;
    QVector out = mod.zero_vector();
    for (const auto& [comp_deg, part] : p.homogeneous_components()) {
        if (comp_deg > mod.D()) throw Error("polynomial exceeds the truncation window");
        const auto basis = component_basis(ring, comp_deg);
        QVector v = QVector::Zero(static_cast<Index>(basis.size()));
        for (const auto& [m, c] : part.terms()) {
            for (size_t i = 0; i < basis.size(); ++i) {
                if (basis[i] == m) {
                    v(static_cast<Index>(i)) = c;
                    break;
                }
            }
        }
        const QVector cls = reduction[static_cast<size_t>(comp_deg)] * v;
        out.segment(mod.offset(comp_deg), mod.dim(comp_deg)) += cls;
    }
    return out;
}

}  // namespace sgr
