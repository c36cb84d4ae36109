#pragma once

#include <numeric>
#include <vector>

namespace sgr {

// Exponent vector of a PBW-normal word g_0^{a_0} ... g_{n-1}^{a_{n-1}} with
// its weighted degree cached at construction.
struct Monomial {
    std::vector<int> exps;
    int wdeg = 0;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }

    bool is_unit() const {
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }

    int length() const { return std::accumulate(exps.begin(), exps.end(), 0); }
};

// Canonical basis order: weighted degree ascending, ties broken by exponent
// vector lexicographically descending, so degree-2 reads x^2, x*y, y^2.
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg;
        return a.exps > b.exps;
    }
};

}  // namespace sgr
