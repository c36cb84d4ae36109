#include "sgr/baer.hpp"

namespace sgr {

namespace {

const ShiftSum kR0{{0}};

void check_value_shape(const FiniteSGModule& E, const Polynomial& gen, const QVector& value, size_t i) {
    if (value.size() != E.total_dim())
        throw ValidationError("value " + std::to_string(i) + " does not live in the module");
    const int d = gen.degree();
    for (int k = 0; k <= E.D(); ++k) {
        if (k == d) continue;
        if (!E.component(value, k).isZero())
            throw ValidationError("value " + std::to_string(i) + " is not homogeneous of degree " + std::to_string(d) +
                                  " (degree-zero morphisms send J_d into E_d)");
    }
}

}  // namespace

IdealMapSpec make_ideal_map_spec(const RingPresentation& ring, const FiniteSGModule& E,
                                 std::vector<Polynomial> ideal_gens, std::vector<QVector> values, int D) {
    ring.require_confluent();
    if (ideal_gens.size() != values.size()) throw ValidationError("one value per ideal generator required");
    if (D > E.D()) throw ValidationError("module truncation is smaller than the requested bound");
    for (size_t i = 0; i < ideal_gens.size(); ++i) {
        const Polynomial& g = ideal_gens[i];
        if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
            throw ValidationError("ideal generators must be homogeneous of positive degree");
        if (g.degree() > D) throw ValidationError("truncation too small to express the ideal generators");
        check_value_shape(E, g, values[i], i);
    }

    // bounded well-definedness: every syzygy of the generators must be
    // killed by the values
    ShiftSum source;
    std::vector<std::vector<Polynomial>> row(1);
    for (const auto& g : ideal_gens) {
        source.shifts.push_back(-g.degree());
        row[0].push_back(g);
    }
    if (!ideal_gens.empty()) {
        const PolyMatrixMorphism d1 = make_morphism(ring, source, kR0, std::move(row), Semantics::filtered);
        const auto lo = min_module_degree(source);
        for (int level = *lo; level <= D; ++level) {
            for (const auto& syz : kernel_filtered(ring, d1, level)) {
                QVector residual = E.zero_vector();
                for (size_t i = 0; i < ideal_gens.size(); ++i) {
                    if (syz.entries[i].is_zero()) continue;
                    residual += E.act(ring, syz.entries[i], values[i]);
                }
                if (!residual.isZero()) {
                    std::string what = "generator values are inconsistent on the syzygy (";
                    for (size_t i = 0; i < syz.entries.size(); ++i) {
                        if (i) what += ", ";
                        what += poly_to_string(ring, syz.entries[i]);
                    }
                    what += "): residual " + E.describe_vector(residual);
                    throw ConsistencyError(std::move(what), ConsistencyWitness{syz.entries, std::move(residual)});
                }
            }
        }
    }
    return IdealMapSpec{std::move(ideal_gens), std::move(values)};
}

BaerResult solve_baer(const RingPresentation& ring, const IdealMapSpec& spec, const FiniteSGModule& E, int D) {
    ring.require_confluent();
    const Index q0 = E.dim(0);
    const Index block = E.total_dim();
    const size_t s = spec.ideal_gens.size();

    // columns: r_i acting on each basis vector of E_0; rows: one full module
    // equation r_i * x = v_i per generator
    QMatrix a = QMatrix::Zero(static_cast<Index>(s) * block, q0);
    QVector b = QVector::Zero(static_cast<Index>(s) * block);
    for (size_t i = 0; i < s; ++i) {
        for (Index c = 0; c < q0; ++c) {
            QVector unit = E.zero_vector();
            unit(E.offset(0) + c) = 1;
            a.block(static_cast<Index>(i) * block, c, block, 1) = E.act(ring, spec.ideal_gens[i], unit);
        }
        b.segment(static_cast<Index>(i) * block, block) = spec.values[i];
    }

    BaerResult result;
    result.unknowns = q0;
    result.equations = a.rows();
    LinearSolve solve = solve_linear(a, b);
    if (!solve.solution) {
        result.solvable = false;
        result.infeasibility = std::move(solve.infeasibility);
        return result;
    }
    result.solvable = true;
    result.x = *solve.solution;

    // verify g(r) = r*x across a spanning set of J up to degree D, not just
    // on the generators
    const QVector x_full = E.embed(0, result.x);
    for (size_t i = 0; i < s; ++i) {
        const int d = spec.ideal_gens[i].degree();
        for (int t = 0; t + d <= D; ++t) {
            for (const auto& u : component_basis(ring, t)) {
                const Polynomial u_poly = Polynomial::term(u, 1);
                const Polynomial w = multiply(ring, u_poly, spec.ideal_gens[i]);
                const QVector lhs = E.act(ring, w, x_full);
                const QVector rhs = E.act(ring, u_poly, spec.values[i]);
                BaerCheck check;
                check.element = mono_to_string(ring, u) + " * g" + std::to_string(i + 1);
                check.ok = lhs == rhs;
                result.transcript.push_back(std::move(check));
            }
        }
    }
    return result;
}

std::vector<Polynomial> conductor_ideal(const RingPresentation& ring, const ShiftSum& B,
                                        const std::vector<ModuleElement>& M_gens, const ModuleElement& b, int D) {
    ring.require_confluent();
    int j = 0;
    if (b.is_zero() || !element_homogeneous(B, b, &j))
        throw ValidationError("conductor_ideal requires a nonzero homogeneous element b");
    std::vector<int> gen_levels;
    for (const auto& m : M_gens) {
        int lvl = 0;
        if (!element_homogeneous(B, m, &lvl))
            throw ValidationError("conductor_ideal requires homogeneous submodule generators");
        gen_levels.push_back(m.is_zero() ? 0 : lvl);
    }

    const FilteredBasis full = filtered_basis(ring, B, D);

    // bounded span of M inside F_D(B)
    std::vector<QVector> m_rows;
    for (size_t g = 0; g < M_gens.size(); ++g) {
        if (M_gens[g].is_zero()) continue;
        for (int t = 0; t + gen_levels[g] <= D; ++t) {
            for (const auto& u : component_basis(ring, t)) {
                m_rows.push_back(encode_element(full, left_multiply(ring, Polynomial::term(u, 1), M_gens[g])));
            }
        }
    }

    // ring coordinates for the emitted generators' redundancy test
    const FilteredBasis ring_basis = filtered_basis(ring, kR0, D);
    std::vector<Index> ring_offsets{0};
    for (int t = 0; t <= D; ++t) {
        Index count = 0;
        for (Index i = 0; i < ring_basis.dim(); ++i)
            if (ring_basis.degree_of(i) == t) ++count;
        ring_offsets.push_back(ring_offsets.back() + count);
    }
    RowSpace prev_span(ring_basis.dim());

    std::vector<Polynomial> gens;
    for (int k = 0; k <= D - j; ++k) {
        // products of earlier generators reaching degree k
        for (const auto& r : gens) {
            const int udeg = k - r.degree();
            if (udeg < 1) continue;
            for (const auto& u : component_basis(ring, udeg)) {
                prev_span.insert(encode_element(ring_basis, ModuleElement{{multiply(ring, Polynomial::term(u, 1), r)}}));
            }
        }
        const std::vector<QVector> w_rows =
            rows_supported_in_block(prev_span.rows(), ring_basis.dim(), ring_offsets[static_cast<size_t>(k)],
                                    ring_offsets[static_cast<size_t>(k) + 1] - ring_offsets[static_cast<size_t>(k)]);

        // solve r*b in span(M) for r in R_k
        const auto rk = component_basis(ring, k);
        const Index nk = static_cast<Index>(rk.size());
        if (nk == 0) continue;
        QMatrix a(full.dim(), nk + static_cast<Index>(m_rows.size()));
        for (Index c = 0; c < nk; ++c)
            a.col(c) = encode_element(full, left_multiply(ring, Polynomial::term(rk[static_cast<size_t>(c)], 1), b));
        for (size_t c = 0; c < m_rows.size(); ++c) a.col(nk + static_cast<Index>(c)) = -m_rows[c];

        RowSpace solutions(nk);
        const QMatrix kernel = nullspace_basis(a);
        for (Index c = 0; c < kernel.cols(); ++c) {
            solutions.insert(kernel.col(c).head(nk));
        }

        RowSpace redundancy(nk);
        for (const auto& w : w_rows) redundancy.insert(w);
        for (const auto& row : solutions.rows()) {
            if (redundancy.insert(row)) {
                Polynomial r;
                for (Index c = 0; c < nk; ++c)
                    if (row(c) != 0) r.add_term(rk[static_cast<size_t>(c)], row(c));
                gens.push_back(std::move(r));
                prev_span.insert(encode_element(ring_basis, ModuleElement{{gens.back()}}));
            }
        }
    }
    return gens;
}

ExtensionResult extend_morphism(const RingPresentation& ring, const ShiftSum& B,
                                const std::vector<ModuleElement>& M_gens, const std::vector<QVector>& psi_values,
                                const ModuleElement& b, const QVector& x0, const FiniteSGModule& E, int D) {
    ring.require_confluent();
    if (M_gens.size() != psi_values.size()) throw ValidationError("one psi value per submodule generator required");
    int j = 0;
    if (b.is_zero() || !element_homogeneous(B, b, &j))
        throw ValidationError("extend_morphism requires a nonzero homogeneous element b");
    if (x0.size() != E.dim(0)) throw ValidationError("x must be given in E_0 coordinates");

    std::vector<int> gen_levels;
    for (size_t g = 0; g < M_gens.size(); ++g) {
        int lvl = 0;
        if (!element_homogeneous(B, M_gens[g], &lvl))
            throw ValidationError("extend_morphism requires homogeneous submodule generators");
        gen_levels.push_back(M_gens[g].is_zero() ? 0 : lvl);
        if (psi_values[g].size() != E.total_dim()) throw ValidationError("psi value does not live in the module");
    }

    const FilteredBasis full = filtered_basis(ring, B, D);
    const QVector x_full = E.embed(0, x0);

    // b must genuinely extend M
    {
        RowSpace m_span(full.dim());
        for (size_t g = 0; g < M_gens.size(); ++g) {
            if (M_gens[g].is_zero()) continue;
            for (int t = 0; t + gen_levels[g] <= D; ++t)
                for (const auto& u : component_basis(ring, t))
                    m_span.insert(encode_element(full, left_multiply(ring, Polynomial::term(u, 1), M_gens[g])));
        }
        if (m_span.contains(encode_element(full, b)))
            throw ValidationError("b already lies in the bounded span of M");
    }

    // spanning family of (M + Rb)_{<=D} with the psi'-values attached
    struct Member {
        QVector coords;   // in F_D(B)
        QVector value;    // in E
        std::string name;
        bool from_b = false;
        Polynomial ring_coeff;  // u for u*m_g or u*b
    };
    std::vector<Member> family;
    for (size_t g = 0; g < M_gens.size(); ++g) {
        if (M_gens[g].is_zero()) continue;
        for (int t = 0; t + gen_levels[g] <= D; ++t) {
            for (const auto& u : component_basis(ring, t)) {
                const Polynomial u_poly = Polynomial::term(u, 1);
                Member m;
                m.coords = encode_element(full, left_multiply(ring, u_poly, M_gens[g]));
                m.value = E.act(ring, u_poly, psi_values[g]);
                m.name = mono_to_string(ring, u) + "*m" + std::to_string(g + 1);
                m.ring_coeff = u_poly;
                family.push_back(std::move(m));
            }
        }
    }
    for (int t = 0; t + j <= D; ++t) {
        for (const auto& u : component_basis(ring, t)) {
            const Polynomial u_poly = Polynomial::term(u, 1);
            Member m;
            m.coords = encode_element(full, left_multiply(ring, u_poly, b));
            m.value = E.act(ring, u_poly, x_full);
            m.name = mono_to_string(ring, u) + "*b";
            m.from_b = true;
            m.ring_coeff = u_poly;
            family.push_back(std::move(m));
        }
    }

    ExtensionResult result;
    result.family_size = static_cast<Index>(family.size());
    if (family.empty()) return result;

    QMatrix a(full.dim(), static_cast<Index>(family.size()));
    for (size_t c = 0; c < family.size(); ++c) a.col(static_cast<Index>(c)) = family[c].coords;
    const QMatrix relations = nullspace_basis(a);
    result.relations_checked = relations.cols();

    for (Index c = 0; c < relations.cols(); ++c) {
        QVector residual = E.zero_vector();
        for (size_t i = 0; i < family.size(); ++i) {
            const Rational& coeff = relations(static_cast<Index>(i), c);
            if (coeff != 0) residual += coeff * family[i].value;
        }
        if (!residual.isZero()) {
            result.well_defined = false;
            ExtensionWitness witness;
            Polynomial r_part;
            std::string u_part;
            for (size_t i = 0; i < family.size(); ++i) {
                const Rational& coeff = relations(static_cast<Index>(i), c);
                if (coeff == 0) continue;
                if (family[i].from_b) {
                    r_part += coeff * family[i].ring_coeff;
                } else {
                    if (!u_part.empty()) u_part += " + ";
                    u_part += "(" + to_string(coeff) + ")*" + family[i].name;
                }
            }
            witness.module_part = u_part.empty() ? "0" : u_part;
            witness.ring_part = poly_to_string(ring, r_part);
            witness.residual = std::move(residual);
            result.witness = std::move(witness);
            return result;
        }
    }
    return result;
}

}  // namespace sgr
