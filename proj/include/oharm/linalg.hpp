#pragma once

#include <gmpxx.h>

#include <vector>

namespace oharm {

using Rational = mpq_class;

/* Incremental row space over Q. Rows are added in a fixed order; the builder
 * keeps a forward-echelon basis and, for every added row, its exact
 * expansion in terms of the raw pivot rows seen so far. Pivot selection is
 * deterministic (first nonzero column of the reduced row), so ranks and
 * coordinates are reproducible. */
class SpanBuilder {
public:
    explicit SpanBuilder(int ncols);

    // Adds v; returns the new pivot's index, or -1 if v was dependent.
    // coords receives the expansion of v over raw pivot rows 0..k (its length
    // may be shorter than rank(); missing entries are zero).
    int add(const std::vector<Rational>& v, std::vector<Rational>* coords = nullptr);

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }

    // Is v in the span of the first k pivot rows (equivalently, of every row
    // added before the (k+1)-th pivot appeared)?
    bool in_span(const std::vector<Rational>& v, int k) const;

private:
    struct Row {
        std::vector<Rational> vals;    // echelon row, pivot entry = 1
        int pivot;
        std::vector<Rational> expand;  // vals = sum expand[j] * raw_pivot_j
    };

    int ncols_;
    std::vector<Row> rows_;
};

/* Dense matrix of exact rationals. Small surface: rank, trace, linear solve.
 * Rank is independent of row order. */
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[i * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[i * cols_ + j]; }

    int rank() const;
    Rational trace() const;

    // Solves A x = b for square nonsingular A.
    static std::vector<Rational> solve(const ExactMatrix& A, const std::vector<Rational>& b);

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace oharm
