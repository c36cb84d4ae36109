#pragma once

// Finite truncated semi-graded modules: explicit component dimensions on a
// window [0, D] with exact generator action matrices, plus the truncated
// cyclic quotients R/J computed degree by degree.

#include <string>

#include "sgr/linalg.hpp"
#include "sgr/ring.hpp"

namespace sgr {

// Elements are stacked coordinate vectors over the degree blocks 0..D. The
// action of a degree-m generator on the block at degree k is stored as a
// matrix into the blocks <= min(k + m, D); anything the window cannot hold
// is dropped, so callers that need exact products must stay inside it.
class FiniteSGModule {
  public:
    // Validates shapes and checks that the action matrices satisfy every
    // rewriting rule of the ring wherever the window can see the products.
    static FiniteSGModule make(const RingPresentation& ring, int D, std::vector<long> dims,
                               std::vector<std::vector<QMatrix>> action,
                               std::vector<std::vector<std::string>> labels, std::string origin);

    int D() const { return D_; }
    long dim(int k) const { return (k < 0 || k > D_) ? 0 : dims_[static_cast<size_t>(k)]; }
    Index offset(int k) const { return offsets_[static_cast<size_t>(k)]; }
    Index total_dim() const { return total_; }
    bool is_zero() const { return total_ == 0; }

    const std::vector<long>& dims() const { return dims_; }
    const QMatrix& action_matrix(int gen, int k) const {
        return action_[static_cast<size_t>(gen)][static_cast<size_t>(k)];
    }
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }
    const std::string& origin() const { return origin_; }

    QVector zero_vector() const { return QVector::Zero(total_); }

    // Embeds component coordinates at degree k into a full stacked vector.
    QVector embed(int k, const QVector& comp) const;
    QVector component(const QVector& full, int k) const {
        return full.segment(offset(k), dim(k));
    }

    // pi_{<=D}(g . v) for a full stacked vector.
    QVector act_gen(int gen, const QVector& full) const;
    QVector act(const RingPresentation& ring, const Polynomial& r, const QVector& full) const;

    std::string describe_vector(const QVector& full) const;

  private:
    int D_ = 0;
    std::vector<long> dims_;
    std::vector<Index> offsets_;  // size D+2, offsets_[D+1] == total
    Index total_ = 0;
    std::vector<int> gen_degrees_;
    std::vector<std::vector<QMatrix>> action_;  // [gen][k]
    std::vector<std::vector<std::string>> labels_;
    std::string origin_;
};

// R/J on [0, D], computed from the bounded ideal subspace
// V = span{ m*g : deg m + deg g <= D }. Component k is R_k / (R_k ∩ V);
// quotient bases are the lex-earliest monomials completing the ideal rows.
struct TruncatedQuotient {
    FiniteSGModule module;
    std::vector<QMatrix> reduction;                  // class map R_k -> quotient coords, per degree
    std::vector<std::vector<Monomial>> representatives;
    Index ideal_rank = 0;

    // Class of a polynomial's degree-k parts, stacked over the window.
    QVector class_of(const RingPresentation& ring, const Polynomial& p) const;
};

TruncatedQuotient truncate_cyclic_module(const RingPresentation& ring, const std::vector<Polynomial>& ideal_gens,
                                         int D);

}  // namespace sgr
