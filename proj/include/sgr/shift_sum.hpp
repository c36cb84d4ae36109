#pragma once

// Finite direct sums of free shifts R(n) with the canonical component-wise
// semi-graduation, their elements, and the filtered bases on which all
// linear algebra runs.

#include <optional>
#include <string>

#include "sgr/linalg.hpp"
#include "sgr/ring.hpp"

namespace sgr {

struct ShiftSum {
    std::vector<int> shifts;  // the empty list is the zero module

    int size() const { return static_cast<int>(shifts.size()); }
    bool operator==(const ShiftSum& o) const { return shifts == o.shifts; }
    bool operator!=(const ShiftSum& o) const { return shifts != o.shifts; }
};

// "R(0) + R(-1)^2 + R(-3)"; "0" for the zero module.
std::string shift_sum_to_string(const ShiftSum& sum);

// Smallest module degree with a nonzero component (positively semi-graded
// ring); nullopt for the zero module.
std::optional<int> min_module_degree(const ShiftSum& sum);

struct BasisRef {
    int summand = 0;
    Monomial mono;
};

// (sum)_k = ⊕_i R_{n_i + k}, listed summand-major in the canonical monomial order.
std::vector<BasisRef> component_basis_shift(const RingPresentation& ring, const ShiftSum& sum, int k);

// Ordered basis of F_k = ⊕_{t <= k} (sum)_t: module degree ascending, then
// summand, then monomial order. This is the coordinate system for component
// matrices, kernels and spans.
class FilteredBasis {
  public:
    FilteredBasis(const RingPresentation& ring, const ShiftSum& sum, int level);

    int level() const { return level_; }
    Index dim() const { return static_cast<Index>(elems_.size()); }
    const std::vector<BasisRef>& elements() const { return elems_; }
    int degree_of(Index i) const { return degrees_[static_cast<size_t>(i)]; }
    std::optional<Index> find(int summand, const Monomial& m) const;

  private:
    int level_;
    std::vector<BasisRef> elems_;
    std::vector<int> degrees_;
    std::map<std::pair<int, std::vector<int>>, Index> lookup_;
};

inline FilteredBasis filtered_basis(const RingPresentation& ring, const ShiftSum& sum, int k) {
    return FilteredBasis(ring, sum, k);
}

// One polynomial entry per summand.
struct ModuleElement {
    std::vector<Polynomial> entries;

    static ModuleElement zero(const ShiftSum& sum) {
        return ModuleElement{std::vector<Polynomial>(static_cast<size_t>(sum.size()))};
    }

    bool is_zero() const {
        for (const auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }

    bool operator==(const ModuleElement& o) const { return entries == o.entries; }
    bool operator!=(const ModuleElement& o) const { return entries != o.entries; }

    ModuleElement& operator+=(const ModuleElement& o) {
        for (size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
        return *this;
    }

    ModuleElement& operator-=(const ModuleElement& o) {
        for (size_t i = 0; i < entries.size(); ++i) entries[i] -= o.entries[i];
        return *this;
    }

    ModuleElement& operator*=(const Rational& c) {
        for (auto& e : entries) e *= c;
        return *this;
    }

    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend ModuleElement operator*(const Rational& c, ModuleElement a) { return a *= c; }
};

// Filtered level: max over nonzero terms of (ring degree - shift); nullopt
// for the zero element.
std::optional<int> element_level(const ShiftSum& sum, const ModuleElement& elem);

// True when every term sits in the same module degree (zero counts as
// homogeneous); the degree is reported through degree_out when nonzero.
bool element_homogeneous(const ShiftSum& sum, const ModuleElement& elem, int* degree_out = nullptr);

// Module-degree-d part.
ModuleElement element_component(const ShiftSum& sum, const ModuleElement& elem, int d);

ModuleElement left_multiply(const RingPresentation& ring, const Polynomial& r, const ModuleElement& elem);

QVector encode_element(const FilteredBasis& basis, const ModuleElement& elem);
ModuleElement decode_element(const ShiftSum& sum, const FilteredBasis& basis, const QVector& coords);

std::string element_to_string(const RingPresentation& ring, const ModuleElement& elem);

}  // namespace sgr
