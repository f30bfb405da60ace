#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oharm {

using Cell = std::pair<int, int>;  // 1-based (row, col)
using Perm = std::vector<int>;     // images: g[i-1] = g(i), 1-based values

/* Non-attacking rook placement on an n x m board, kept as a sorted cell
 * list. Identified with the 0/1 matrix supported on its cells. */
struct RookPlacement {
    std::vector<Cell> cells;  // sorted, at most one per row and per column

    int size() const { return static_cast<int>(cells.size()); }
    bool operator==(const RookPlacement&) const = default;
    std::string str() const;  // "{(1,2),(2,1)}"
};

/* Involution in S_n with its 2-cycles listed as sorted pairs {i < j};
 * identified with its permutation matrix. */
struct InvolutionPoint {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // disjoint, sorted

    int fixed_points() const { return n - 2 * static_cast<int>(pairs.size()); }
    std::vector<Cell> cells() const;  // permutation-matrix support, sorted
    bool operator==(const InvolutionPoint&) const = default;
    std::string str() const;
};

// All placements of exactly r rooks, sorted by cell list.
std::vector<RookPlacement> enumerate_rook(int n, int m, int r);

// Union of enumerate_rook(n, m, r') for r' = r .. min(n,m), smaller sizes first.
std::vector<RookPlacement> enumerate_uz(int n, int m, int r);

// All involutions of S_n with exactly a fixed points; empty if a != n mod 2.
std::vector<InvolutionPoint> enumerate_involutions(int n, int a);

// Row/column permutation action: cell (i,j) -> (g(i), h(j)).
RookPlacement act_rook(const Perm& g, const Perm& h, const RookPlacement& p);

// Conjugation action: pair {i,j} -> {g(i), g(j)}.
InvolutionPoint act_involution(const Perm& g, const InvolutionPoint& w);

// m(support) evaluated at the 0/1 matrix of `point`: 1 iff support is a
// subset of point.
int eval_rook_monomial(const RookPlacement& support, const RookPlacement& point);

// Arbitrary monomial (cell -> positive exponent) evaluated at a 0/1 matrix
// given by its support cells: 1 iff every cell with positive exponent is set.
int eval_general_monomial(const std::map<Cell, int>& exponents,
                          const std::vector<Cell>& point_cells);

Perm identity_perm(int n);

}  // namespace oharm
