#include "oharm/linalg.hpp"

#include <stdexcept>

namespace oharm {

SpanBuilder::SpanBuilder(int ncols)
    : ncols_(ncols) {}

int SpanBuilder::add(const std::vector<Rational>& v, std::vector<Rational>* coords) {
    if (static_cast<int>(v.size()) != ncols_)
        throw std::domain_error("SpanBuilder::add: wrong row length");
    std::vector<Rational> w = v;
    std::vector<Rational> alpha(rows_.size(), Rational(0));
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Row& row = rows_[k];
        if (w[row.pivot] == 0)
            continue;
        Rational c = w[row.pivot];  // pivot entries are normalized to 1
        alpha[k] = c;
        for (int j = row.pivot; j < ncols_; ++j)
            if (row.vals[j] != 0)
                w[j] -= c * row.vals[j];
    }
    int pivot = -1;
    for (int j = 0; j < ncols_; ++j)
        if (w[j] != 0) { pivot = j; break; }

    if (pivot < 0) {
        if (coords) {
            coords->assign(rows_.size(), Rational(0));
            for (size_t k = 0; k < rows_.size(); ++k) {
                if (alpha[k] == 0)
                    continue;
                const std::vector<Rational>& ek = rows_[k].expand;
                for (size_t j = 0; j < ek.size(); ++j)
                    if (ek[j] != 0)
                        (*coords)[j] += alpha[k] * ek[j];
            }
        }
        return -1;
    }

    Rational p = w[pivot];
    Row row;
    row.pivot = pivot;
    row.vals = std::move(w);
    for (int j = pivot; j < ncols_; ++j)
        if (row.vals[j] != 0)
            row.vals[j] /= p;
    // raw_new = v, so basis_new = (raw_new - sum alpha_k basis_k) / p
    row.expand.assign(rows_.size() + 1, Rational(0));
    row.expand[rows_.size()] = 1 / p;
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (alpha[k] == 0)
            continue;
        const std::vector<Rational>& ek = rows_[k].expand;
        for (size_t j = 0; j < ek.size(); ++j)
            if (ek[j] != 0)
                row.expand[j] -= alpha[k] * ek[j] / p;
    }
    rows_.push_back(std::move(row));
    int index = static_cast<int>(rows_.size()) - 1;
    if (coords) {
        coords->assign(rows_.size(), Rational(0));
        (*coords)[index] = 1;
    }
    return index;
}

bool SpanBuilder::in_span(const std::vector<Rational>& v, int k) const {
    if (static_cast<int>(v.size()) != ncols_)
        throw std::domain_error("SpanBuilder::in_span: wrong row length");
    std::vector<Rational> w = v;
    for (int t = 0; t < k && t < static_cast<int>(rows_.size()); ++t) {
        const Row& row = rows_[t];
        if (w[row.pivot] == 0)
            continue;
        Rational c = w[row.pivot];
        for (int j = row.pivot; j < ncols_; ++j)
            if (row.vals[j] != 0)
                w[j] -= c * row.vals[j];
    }
    for (const Rational& x : w)
        if (x != 0)
            return false;
    return true;
}

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rational(0)) {}

int ExactMatrix::rank() const {
    SpanBuilder sb(cols_);
    std::vector<Rational> row(cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            row[j] = at(i, j);
        sb.add(row);
    }
    return sb.rank();
}

Rational ExactMatrix::trace() const {
    if (rows_ != cols_)
        throw std::domain_error("ExactMatrix::trace: matrix not square");
    Rational t = 0;
    for (int i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

std::vector<Rational> ExactMatrix::solve(const ExactMatrix& A, const std::vector<Rational>& b) {
    if (A.rows() != A.cols() || static_cast<int>(b.size()) != A.rows())
        throw std::domain_error("ExactMatrix::solve: shape mismatch");
    int n = A.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = A.at(i, j);
        m[i][n] = b[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0)
            throw std::domain_error("ExactMatrix::solve: singular matrix");
        std::swap(m[col], m[piv]);
        Rational inv = 1 / m[col][col];
        for (int j = col; j <= n; ++j)
            m[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0)
                continue;
            Rational c = m[i][col];
            for (int j = col; j <= n; ++j)
                m[i][j] -= c * m[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i)
        x[i] = m[i][n];
    return x;
}

}  // namespace oharm
