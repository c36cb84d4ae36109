#include "sgr/shift_sum.hpp"

#include <algorithm>

namespace sgr {

std::string shift_sum_to_string(const ShiftSum& sum) {
    if (sum.shifts.empty()) return "0";
    std::string out;
    size_t i = 0;
    while (i < sum.shifts.size()) {
        size_t j = i;
        while (j < sum.shifts.size() && sum.shifts[j] == sum.shifts[i]) ++j;
        if (!out.empty()) out += " + ";
        out += "R(" + std::to_string(sum.shifts[i]) + ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::optional<int> min_module_degree(const ShiftSum& sum) {
    if (sum.shifts.empty()) return std::nullopt;
    // (R(n))_k = R_{n+k} is nonzero from k = -n onward
    int best = -sum.shifts.front();
    for (int n : sum.shifts) best = std::min(best, -n);
    return best;
}

std::vector<BasisRef> component_basis_shift(const RingPresentation& ring, const ShiftSum& sum, int k) {
    std::vector<BasisRef> out;
    for (int i = 0; i < sum.size(); ++i) {
        for (auto& m : component_basis(ring, sum.shifts[static_cast<size_t>(i)] + k)) {
            out.push_back(BasisRef{i, std::move(m)});
        }
    }
    return out;
}

FilteredBasis::FilteredBasis(const RingPresentation& ring, const ShiftSum& sum, int level) : level_(level) {
    const auto lo = min_module_degree(sum);
    if (!lo) return;
    for (int t = *lo; t <= level; ++t) {
        for (auto& ref : component_basis_shift(ring, sum, t)) {
            lookup_[{ref.summand, ref.mono.exps}] = static_cast<Index>(elems_.size());
            degrees_.push_back(t);
            elems_.push_back(std::move(ref));
        }
    }
}

std::optional<Index> FilteredBasis::find(int summand, const Monomial& m) const {
    auto it = lookup_.find({summand, m.exps});
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> element_level(const ShiftSum& sum, const ModuleElement& elem) {
    std::optional<int> level;
    for (size_t i = 0; i < elem.entries.size(); ++i) {
        for (const auto& [m, c] : elem.entries[i].terms()) {
            const int d = m.wdeg - sum.shifts[i];
            if (!level || d > *level) level = d;
        }
    }
    return level;
}

bool element_homogeneous(const ShiftSum& sum, const ModuleElement& elem, int* degree_out) {
    std::optional<int> deg;
    for (size_t i = 0; i < elem.entries.size(); ++i) {
        for (const auto& [m, c] : elem.entries[i].terms()) {
            const int d = m.wdeg - sum.shifts[i];
            if (!deg)
                deg = d;
            else if (*deg != d)
                return false;
        }
    }
    if (deg && degree_out) *degree_out = *deg;
    return true;
}

ModuleElement element_component(const ShiftSum& sum, const ModuleElement& elem, int d) {
    ModuleElement out = ModuleElement::zero(sum);
    for (size_t i = 0; i < elem.entries.size(); ++i) {
        out.entries[i] = elem.entries[i].homogeneous_component(d + sum.shifts[i]);
    }
    return out;
}

ModuleElement left_multiply(const RingPresentation& ring, const Polynomial& r, const ModuleElement& elem) {
    ModuleElement out;
    out.entries.reserve(elem.entries.size());
    for (const auto& e : elem.entries) out.entries.push_back(multiply(ring, r, e));
    return out;
}

QVector encode_element(const FilteredBasis& basis, const ModuleElement& elem) {
    QVector v = QVector::Zero(basis.dim());
    for (size_t i = 0; i < elem.entries.size(); ++i) {
        for (const auto& [m, c] : elem.entries[i].terms()) {
            const auto idx = basis.find(static_cast<int>(i), m);
            if (!idx) throw Error("element does not fit in the filtered basis at level " + std::to_string(basis.level()));
            v(*idx) = c;
        }
    }
    return v;
}

ModuleElement decode_element(const ShiftSum& sum, const FilteredBasis& basis, const QVector& coords) {
    ModuleElement out = ModuleElement::zero(sum);
    for (Index i = 0; i < coords.size(); ++i) {
        if (coords(i) == 0) continue;
        const BasisRef& ref = basis.elements()[static_cast<size_t>(i)];
        out.entries[static_cast<size_t>(ref.summand)].add_term(ref.mono, coords(i));
    }
    return out;
}

std::string element_to_string(const RingPresentation& ring, const ModuleElement& elem) {
    std::string out = "(";
    for (size_t i = 0; i < elem.entries.size(); ++i) {
        if (i) out += ", ";
        out += poly_to_string(ring, elem.entries[i]);
    }
    return out + ")";
}

}  // namespace sgr
