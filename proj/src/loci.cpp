#include "oharm/loci.hpp"

#include <algorithm>
#include <stdexcept>

namespace oharm {

std::string RookPlacement::str() const {
    std::string s = "{";
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(cells[i].first) + "," + std::to_string(cells[i].second) + ")";
    }
    return s + "}";
}

std::vector<Cell> InvolutionPoint::cells() const {
    std::vector<Cell> out;
    std::vector<bool> moved(n + 1, false);
    for (const auto& [i, j] : pairs) {
        out.emplace_back(i, j);
        out.emplace_back(j, i);
        moved[i] = moved[j] = true;
    }
    for (int i = 1; i <= n; ++i)
        if (!moved[i])
            out.emplace_back(i, i);
    std::sort(out.begin(), out.end());
    return out;
}

std::string InvolutionPoint::str() const {
    std::string s = "{";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) s += ",";
        s += "{" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + "}";
    }
    return s + "}";
}

namespace {

void gen_rook(int n, int m, int r, int row, std::vector<int>& used_cols,
              std::vector<Cell>& cur, std::vector<RookPlacement>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(RookPlacement{cur});
        return;
    }
    if (row > n || n - row + 1 < r - static_cast<int>(cur.size()))
        return;
    gen_rook(n, m, r, row + 1, used_cols, cur, out);  // skip this row
    for (int col = 1; col <= m; ++col) {
        if (std::find(used_cols.begin(), used_cols.end(), col) != used_cols.end())
            continue;
        used_cols.push_back(col);
        cur.emplace_back(row, col);
        gen_rook(n, m, r, row + 1, used_cols, cur, out);
        cur.pop_back();
        used_cols.pop_back();
    }
}

void gen_involutions(int n, int target_pairs, int next, std::vector<bool>& taken,
                     std::vector<std::pair<int, int>>& cur,
                     std::vector<InvolutionPoint>& out) {
    if (static_cast<int>(cur.size()) == target_pairs) {
        out.push_back(InvolutionPoint{n, cur});
        return;
    }
    int i = next;
    while (i <= n && taken[i])
        ++i;
    if (i > n)
        return;
    // either i is a fixed point, or i pairs with some larger j
    taken[i] = true;
    gen_involutions(n, target_pairs, i + 1, taken, cur, out);
    for (int j = i + 1; j <= n; ++j) {
        if (taken[j])
            continue;
        taken[j] = true;
        cur.emplace_back(i, j);
        gen_involutions(n, target_pairs, i + 1, taken, cur, out);
        cur.pop_back();
        taken[j] = false;
    }
    taken[i] = false;
}

}  // namespace

std::vector<RookPlacement> enumerate_rook(int n, int m, int r) {
    if (r < 0)
        throw std::domain_error("enumerate_rook: r must be nonnegative");
    std::vector<RookPlacement> out;
    if (r > std::min(n, m))
        return out;
    std::vector<int> used_cols;
    std::vector<Cell> cur;
    gen_rook(n, m, r, 1, used_cols, cur, out);
    std::sort(out.begin(), out.end(),
              [](const RookPlacement& a, const RookPlacement& b) { return a.cells < b.cells; });
    return out;
}

std::vector<RookPlacement> enumerate_uz(int n, int m, int r) {
    if (r < 0 || r > std::min(n, m))
        throw std::domain_error("enumerate_uz: requires 0 <= r <= min(n,m)");
    std::vector<RookPlacement> out;
    for (int rp = r; rp <= std::min(n, m); ++rp) {
        std::vector<RookPlacement> layer = enumerate_rook(n, m, rp);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<InvolutionPoint> enumerate_involutions(int n, int a) {
    if (n < 0 || a < 0 || a > n)
        throw std::domain_error("enumerate_involutions: requires 0 <= a <= n");
    std::vector<InvolutionPoint> out;
    if ((n - a) % 2 != 0)
        return out;
    std::vector<bool> taken(n + 1, false);
    std::vector<std::pair<int, int>> cur;
    gen_involutions(n, (n - a) / 2, 1, taken, cur, out);
    std::sort(out.begin(), out.end(),
              [](const InvolutionPoint& x, const InvolutionPoint& y) { return x.pairs < y.pairs; });
    return out;
}

RookPlacement act_rook(const Perm& g, const Perm& h, const RookPlacement& p) {
    RookPlacement out;
    for (const auto& [i, j] : p.cells)
        out.cells.emplace_back(g[i - 1], h[j - 1]);
    std::sort(out.cells.begin(), out.cells.end());
    return out;
}

InvolutionPoint act_involution(const Perm& g, const InvolutionPoint& w) {
    InvolutionPoint out;
    out.n = w.n;
    for (const auto& [i, j] : w.pairs) {
        int a = g[i - 1], b = g[j - 1];
        out.pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

int eval_rook_monomial(const RookPlacement& support, const RookPlacement& point) {
    return std::includes(point.cells.begin(), point.cells.end(),
                         support.cells.begin(), support.cells.end())
               ? 1
               : 0;
}

int eval_general_monomial(const std::map<Cell, int>& exponents,
                          const std::vector<Cell>& point_cells) {
    for (const auto& [cell, e] : exponents) {
        if (e <= 0)
            throw std::domain_error("eval_general_monomial: exponents must be positive");
        if (!std::binary_search(point_cells.begin(), point_cells.end(), cell))
            return 0;
    }
    return 1;
}

Perm identity_perm(int n) {
    Perm g(n);
    for (int i = 0; i < n; ++i)
        g[i] = i + 1;
    return g;
}

}  // namespace oharm
