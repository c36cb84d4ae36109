#include "sgr/morphism.hpp"

namespace sgr {

namespace {

// nullopt when fine; otherwise a description of the offending term
std::optional<std::string> certificate_violation(const RingPresentation& ring, const ShiftSum& source,
                                                 const ShiftSum& target,
                                                 const std::vector<std::vector<Polynomial>>& entries,
                                                 Semantics semantics) {
    for (size_t i = 0; i < entries.size(); ++i) {
        for (size_t j = 0; j < entries[i].size(); ++j) {
            const int bound = -source.shifts[j] + target.shifts[i];
            for (const auto& [m, c] : entries[i][j].terms()) {
                const bool ok = semantics == Semantics::filtered ? (m.wdeg <= bound) : (m.wdeg == bound);
                if (!ok) {
                    return "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") term " +
                           mono_to_string(ring, m) + " of degree " + std::to_string(m.wdeg) +
                           (semantics == Semantics::filtered ? " exceeds" : " differs from") + " the bound " +
                           std::to_string(bound);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool satisfies_certificate(const ShiftSum& source, const ShiftSum& target,
                           const std::vector<std::vector<Polynomial>>& entries, Semantics semantics) {
    for (size_t i = 0; i < entries.size(); ++i) {
        for (size_t j = 0; j < entries[i].size(); ++j) {
            const int bound = -source.shifts[j] + target.shifts[i];
            for (const auto& [m, c] : entries[i][j].terms()) {
                const bool ok = semantics == Semantics::filtered ? (m.wdeg <= bound) : (m.wdeg == bound);
                if (!ok) return false;
            }
        }
    }
    return true;
}

PolyMatrixMorphism make_morphism(const RingPresentation& ring, ShiftSum source, ShiftSum target,
                                 std::vector<std::vector<Polynomial>> entries, Semantics semantics) {
    if (entries.size() != static_cast<size_t>(target.size()))
        throw ValidationError("entry matrix has " + std::to_string(entries.size()) + " rows, target has " +
                              std::to_string(target.size()) + " summands");
    for (const auto& row : entries) {
        if (row.size() != static_cast<size_t>(source.size()))
            throw ValidationError("entry matrix row width does not match the source");
    }
    if (auto bad = certificate_violation(ring, source, target, entries, semantics))
        throw ValidationError(std::string(to_string(semantics)) + " certificate violated: " + *bad);
    return PolyMatrixMorphism{std::move(source), std::move(target), std::move(entries), semantics};
}

PolyMatrixMorphism identity_morphism(const RingPresentation& ring, const ShiftSum& sum) {
    std::vector<std::vector<Polynomial>> entries(static_cast<size_t>(sum.size()),
                                                 std::vector<Polynomial>(static_cast<size_t>(sum.size())));
    for (int i = 0; i < sum.size(); ++i)
        entries[static_cast<size_t>(i)][static_cast<size_t>(i)] = Polynomial::term(ring.unit(), 1);
    return PolyMatrixMorphism{sum, sum, std::move(entries), Semantics::strict};
}

PolyMatrixMorphism zero_morphism(const ShiftSum& source, const ShiftSum& target, Semantics semantics) {
    std::vector<std::vector<Polynomial>> entries(static_cast<size_t>(target.size()),
                                                 std::vector<Polynomial>(static_cast<size_t>(source.size())));
    return PolyMatrixMorphism{source, target, std::move(entries), semantics};
}

ModuleElement apply(const RingPresentation& ring, const PolyMatrixMorphism& f, const ModuleElement& v) {
    if (v.entries.size() != static_cast<size_t>(f.cols())) throw Error("element does not live in the morphism source");
    ModuleElement out = ModuleElement::zero(f.target);
    for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) {
            const Polynomial& e = f.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (e.is_zero() || v.entries[static_cast<size_t>(j)].is_zero()) continue;
            out.entries[static_cast<size_t>(i)] += multiply(ring, v.entries[static_cast<size_t>(j)], e);
        }
    }
    if (f.semantics == Semantics::strict) {
        int deg = 0;
        if (!element_homogeneous(f.source, v, &deg))
            throw Error("strict morphism applied to a non-homogeneous element");
        if (!v.is_zero()) out = element_component(f.target, out, deg);
    }
    return out;
}

PolyMatrixMorphism compose(const RingPresentation& ring, const PolyMatrixMorphism& f, const PolyMatrixMorphism& g) {
    if (f.source != g.target) throw ValidationError("compose: f.source must equal g.target");
    const Semantics semantics =
        (f.semantics == Semantics::strict && g.semantics == Semantics::strict) ? Semantics::strict
                                                                               : Semantics::filtered;
    std::vector<std::vector<Polynomial>> entries(static_cast<size_t>(f.rows()),
                                                 std::vector<Polynomial>(static_cast<size_t>(g.cols())));
    for (int i = 0; i < f.rows(); ++i) {
        for (int k = 0; k < g.cols(); ++k) {
            Polynomial sum;
            for (int j = 0; j < g.rows(); ++j) {
                const Polynomial& gj = g.entries[static_cast<size_t>(j)][static_cast<size_t>(k)];
                const Polynomial& fi = f.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (gj.is_zero() || fi.is_zero()) continue;
                sum += multiply(ring, gj, fi);  // g's coefficient acts on the left
            }
            entries[static_cast<size_t>(i)][static_cast<size_t>(k)] = std::move(sum);
        }
    }
    return make_morphism(ring, g.source, f.target, std::move(entries), semantics);
}

QMatrix component_matrix(const RingPresentation& ring, const PolyMatrixMorphism& f, int k) {
    ring.require_confluent();
    const FilteredBasis src = filtered_basis(ring, f.source, k);
    const FilteredBasis dst = filtered_basis(ring, f.target, k);
    QMatrix m = QMatrix::Zero(dst.dim(), src.dim());
    for (Index col = 0; col < src.dim(); ++col) {
        const BasisRef& ref = src.elements()[static_cast<size_t>(col)];
        const int deg = src.degree_of(col);
        const Polynomial mono = Polynomial::term(ref.mono, 1);
        for (int i = 0; i < f.rows(); ++i) {
            const Polynomial& entry = f.entries[static_cast<size_t>(i)][static_cast<size_t>(ref.summand)];
            if (entry.is_zero()) continue;
            Polynomial image = multiply(ring, mono, entry);
            if (f.semantics == Semantics::strict) {
                // keep only the part in module degree deg
                image = image.homogeneous_component(deg + f.target.shifts[static_cast<size_t>(i)]);
            }
            for (const auto& [mm, cc] : image.terms()) {
                const auto idx = dst.find(i, mm);
                if (!idx) throw Error("morphism image escapes the filtered basis; certificate broken");
                m(*idx, col) += cc;
            }
        }
    }
    return m;
}

LeadingComponentMap leading_component_map(const RingPresentation& ring, const ShiftSum& target,
                                          const ModuleElement& m) {
    if (m.is_zero()) throw ValidationError("leading_component_map requires a nonzero element");
    int deg = 0;
    if (!element_homogeneous(target, m, &deg))
        throw ValidationError("leading_component_map requires a homogeneous element");
    (void)ring;
    return LeadingComponentMap{deg, target, m};
}

LeadingComponentMapFinite leading_component_map(const RingPresentation& ring, const FiniteSGModule& target,
                                                const QVector& m) {
    if (m.size() != target.total_dim()) throw ValidationError("element does not live in the module");
    int deg = -1;
    for (int k = 0; k <= target.D(); ++k) {
        if (!target.component(m, k).isZero()) {
            if (deg >= 0) throw ValidationError("leading_component_map requires a homogeneous element");
            deg = k;
        }
    }
    if (deg < 0) throw ValidationError("leading_component_map requires a nonzero element");
    (void)ring;
    return LeadingComponentMapFinite{deg, &target, m};
}

ModuleElement phi_bar(const RingPresentation& ring, const LeadingComponentMap& map, const Polynomial& r) {
    ModuleElement out = ModuleElement::zero(map.target);
    for (const auto& [d, part] : r.homogeneous_components()) {
        const ModuleElement prod = left_multiply(ring, part, map.m);
        out += element_component(map.target, prod, d + map.degree_j);
    }
    return out;
}

QVector phi_bar(const RingPresentation& ring, const LeadingComponentMapFinite& map, const Polynomial& r) {
    const FiniteSGModule& mod = *map.target;
    QVector out = mod.zero_vector();
    for (const auto& [d, part] : r.homogeneous_components()) {
        const QVector prod = mod.act(ring, part, map.m);
        const int k = d + map.degree_j;
        if (k < 0 || k > mod.D()) continue;
        out.segment(mod.offset(k), mod.dim(k)) += mod.component(prod, k);
    }
    return out;
}

LinearityReport check_strict_linearity(const RingPresentation& ring, const ShiftSum& target, const ModuleElement& m,
                                       int max_degree) {
    if (max_degree < 2) throw ValidationError("check_strict_linearity requires max_degree >= 2");
    const LeadingComponentMap map = leading_component_map(ring, target, m);
    LinearityReport report;
    report.max_degree = max_degree;
    for (int a = 0; a <= max_degree; ++a) {
        const auto basis_a = component_basis(ring, a);
        for (int k = 0; a + k <= max_degree; ++k) {
            const auto basis_k = component_basis(ring, k);
            for (const auto& ra : basis_a) {
                const Polynomial ra_poly = Polynomial::term(ra, 1);
                for (const auto& rk : basis_k) {
                    const Polynomial rk_poly = Polynomial::term(rk, 1);
                    const ModuleElement lhs = phi_bar(ring, map, multiply(ring, ra_poly, rk_poly));
                    const ModuleElement rhs = left_multiply(ring, ra_poly, phi_bar(ring, map, rk_poly));
                    ++report.pairs_checked;
                    if (lhs != rhs) {
                        report.violations.push_back(LinearityWitness{ra, rk, lhs, rhs, lhs - rhs});
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace sgr
