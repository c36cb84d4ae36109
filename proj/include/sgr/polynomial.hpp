#pragma once

// Sparse exact-rational combinations of PBW-normal monomials. These are the
// elements of the ring and of shift-module entries. Zero coefficients are
// never stored; equality is coefficient-wise.

#include <map>

#include "sgr/monomial.hpp"
#include "sgr/rational.hpp"

namespace sgr {

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonoOrder>;

    Polynomial() = default;

    static Polynomial term(Monomial m, Rational c) {
        Polynomial p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Monomial m, Rational c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [m, v] : a.terms_) v = -v;
        return a;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Max weighted degree over terms; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.wdeg; }

    bool is_homogeneous() const {
        return terms_.empty() || terms_.begin()->first.wdeg == terms_.rbegin()->first.wdeg;
    }

    Polynomial homogeneous_component(int d) const {
        Polynomial out;
        for (const auto& [m, c] : terms_)
            if (m.wdeg == d) out.add_term(m, c);
        return out;
    }

    // Partition of the terms by weighted degree; summing the parts gives the
    // polynomial back exactly.
    std::map<int, Polynomial> homogeneous_components() const {
        std::map<int, Polynomial> out;
        for (const auto& [m, c] : terms_) out[m.wdeg].add_term(m, c);
        return out;
    }

  private:
    TermMap terms_;
};

}  // namespace sgr
