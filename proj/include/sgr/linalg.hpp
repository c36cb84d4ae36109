#pragma once

// Exact dense linear algebra over the rational scalar, on Eigen matrices.
// Pivots are chosen positionally (first usable row/column), never by
// magnitude, so reductions are deterministic and emitted bases are the
// lex-earliest ones. This is what makes reports byte-reproducible.

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "sgr/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = long;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace sgr {

using Index = Eigen::Index;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Reduced row echelon form in place; returns the pivot columns in ascending
// order. rank == pivots.size().
template <typename Scalar>
std::vector<Index> rref_in_place(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index p = -1;
        for (Index r = row; r < m.rows(); ++r) {
            if (m(r, col) != 0) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        {
            const Scalar inv = Scalar(1) / m(row, col);
            m.row(row) *= inv;
        }
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Scalar f = m(r, col);  // copy: the row update writes through m(r, col)
            m.row(r) -= f * m.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename Scalar>
Index rank_of(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    return static_cast<Index>(rref_in_place(m).size());
}

// Basis of the right null space, one column per free column of a, in the
// standard parametrization (free variable set to 1, pivots back-substituted).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> nullspace_basis(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Index n = m.cols();
    const std::vector<Index> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    Mat basis = Mat::Zero(n, n - static_cast<Index>(pivots.size()));
    Index out = 0;
    for (Index f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        basis(f, out) = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            basis(pivots[r], out) = -m(static_cast<Index>(r), f);
        }
        ++out;
    }
    return basis;
}

struct LinearSolve {
    std::optional<QVector> solution;       // one particular solution, if consistent
    std::optional<QVector> infeasibility;  // lambda with lambda^T a = 0, lambda^T b = 1
};

// Solves a x = b exactly. On inconsistency the returned lambda is a
// self-verifying certificate of infeasibility.
inline LinearSolve solve_linear(const QMatrix& a, const QVector& b) {
    const Index rows = a.rows();
    const Index cols = a.cols();
    QMatrix m(rows, cols + 1);
    m.leftCols(cols) = a;
    m.col(cols) = b;
    QMatrix track = QMatrix::Identity(rows, rows);

    Index row = 0;
    std::vector<Index> pivots;
    for (Index col = 0; col < cols && row < rows; ++col) {
        Index p = -1;
        for (Index r = row; r < rows; ++r) {
            if (m(r, col) != 0) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row) {
            m.row(p).swap(m.row(row));
            track.row(p).swap(track.row(row));
        }
        {
            const Rational inv = Rational(1) / m(row, col);
            m.row(row) *= inv;
            track.row(row) *= inv;
        }
        for (Index r = 0; r < rows; ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            m.row(r) -= f * m.row(row);
            track.row(r) -= f * track.row(row);
        }
        pivots.push_back(col);
        ++row;
    }

    LinearSolve result;
    for (Index r = row; r < rows; ++r) {
        if (m(r, cols) != 0) {
            QVector lambda = track.row(r).transpose();
            lambda /= m(r, cols);
            result.infeasibility = std::move(lambda);
            return result;
        }
    }
    QVector x = QVector::Zero(cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
        x(pivots[r]) = m(static_cast<Index>(r), cols);
    }
    result.solution = std::move(x);
    return result;
}

// Incrementally maintained row space in reduced echelon form. Used for
// bounded ideal/submodule spans and greedy generator extraction.
class RowSpace {
  public:
    explicit RowSpace(Index ambient) : ambient_(ambient) {}

    Index ambient() const { return ambient_; }
    Index dim() const { return static_cast<Index>(rows_.size()); }

    QVector reduce(QVector v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Rational f = v(pivots_[i]);
            if (f != 0) v -= f * rows_[i];
        }
        return v;
    }

    bool contains(const QVector& v) const { return reduce(v).isZero(); }

    // Returns true when v enlarged the space.
    bool insert(QVector v) {
        v = reduce(std::move(v));
        Index lead = -1;
        for (Index i = 0; i < ambient_; ++i) {
            if (v(i) != 0) {
                lead = i;
                break;
            }
        }
        if (lead < 0) return false;
        v /= v(lead);
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Rational f = rows_[i](lead);
            if (f != 0) rows_[i] -= f * v;
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), lead);
        return true;
    }

    const std::vector<QVector>& rows() const { return rows_; }
    const std::vector<Index>& pivots() const { return pivots_; }

  private:
    Index ambient_;
    std::vector<QVector> rows_;    // reduced echelon, pivot columns ascending
    std::vector<Index> pivots_;
};

// Basis of rowspace(rows) intersected with the coordinate subspace supported
// on [begin, begin + len). Returned rows are given in block coordinates.
inline std::vector<QVector> rows_supported_in_block(const std::vector<QVector>& rows, Index ambient,
                                                    Index begin, Index len) {
    const Index outside = ambient - len;
    if (rows.empty()) return {};
    QMatrix m(static_cast<Index>(rows.size()), ambient);
    // permute columns: everything outside the block first, block last
    for (Index r = 0; r < m.rows(); ++r) {
        Index out = 0;
        for (Index c = 0; c < ambient; ++c) {
            if (c < begin || c >= begin + len) m(r, out++) = rows[static_cast<size_t>(r)](c);
        }
        for (Index c = 0; c < len; ++c) m(r, outside + c) = rows[static_cast<size_t>(r)](begin + c);
    }
    const std::vector<Index> pivots = rref_in_place(m);
    std::vector<QVector> result;
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] < outside) continue;
        // echelon rows with pivot inside the block vanish on all earlier
        // (outside) columns, so they lie in the block subspace
        result.push_back(m.row(static_cast<Index>(i)).segment(outside, len).transpose());
    }
    return result;
}

}  // namespace sgr
