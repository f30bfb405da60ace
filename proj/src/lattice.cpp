#include "oharm/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "oharm/parallel.hpp"

namespace oharm {

namespace {

// True iff column c holds a cell of the skew outer/inner.
bool column_meets(const Partition& inner, const Partition& outer, int c) {
    for (int i = 1; i <= outer.length(); ++i)
        if (inner.part(i) < c && c <= outer.part(i))
            return true;
    return false;
}

// Adds a cell to column c; the result must stay a partition.
Partition add_cell_to_column(const Partition& p, int c) {
    int k = 0;
    while (k < p.length() && p.part(k + 1) >= c)
        ++k;
    // new cell lands in row k+1
    if (p.part(k + 1) != c - 1)
        throw std::domain_error("add_cell_to_column: column " + std::to_string(c) +
                                " cannot grow in " + p.str());
    std::vector<int> parts = p.parts();
    if (k == p.length())
        parts.push_back(c);
    else
        parts[k] = c;
    return Partition(parts);
}

// Removes the lowest cell of column c; the result must stay a partition.
Partition remove_cell_from_column(const Partition& p, int c) {
    int k = 0;
    while (k < p.length() && p.part(k + 1) >= c)
        ++k;
    if (k == 0 || p.part(k) != c)
        throw std::domain_error("remove_cell_from_column: column " + std::to_string(c) +
                                " has no removable cell in " + p.str());
    std::vector<int> parts = p.parts();
    parts[k - 1] = c - 1;
    return Partition(parts);
}

void require_strips(const Partition& mu, const Partition& lam1, const Partition& lam2) {
    if (!is_horizontal_strip(mu, lam1) || !is_horizontal_strip(mu, lam2))
        throw std::domain_error("lattice_path: skews are not horizontal strips");
}

}  // namespace

LatticePath::LatticePath(std::vector<int> steps)
    : steps_(std::move(steps)) {
    heights_.resize(steps_.size() + 1, 0);
    for (size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i] < -1 || steps_[i] > 1)
            throw std::domain_error("LatticePath: steps must be -1, 0 or +1");
        heights_[i + 1] = heights_[i] + steps_[i];
    }
}

int LatticePath::step(int i) const {
    if (i < 1)
        throw std::domain_error("LatticePath::step: index is 1-based");
    return i <= length() ? steps_[i - 1] : -1;
}

int LatticePath::height(int x) const {
    if (x < 0)
        throw std::domain_error("LatticePath::height: x must be nonnegative");
    if (x <= length())
        return heights_[x];
    return heights_[length()] - (x - length());
}

int LatticePath::min_height(int upto) const {
    int mn = 0;
    for (int x = 0; x <= upto; ++x)
        mn = std::min(mn, height(x));
    return mn;
}

std::string LatticePath::str() const {
    std::string out;
    for (int i = 1; i <= length(); ++i) {
        const char* name = step(i) == 1 ? "NE" : step(i) == 0 ? "HE" : "SE";
        out += "x=" + std::to_string(i) + " step=" + name +
               " h=" + std::to_string(height(i)) + "\n";
    }
    return out;
}

LatticePath lattice_path(const Partition& mu, const Partition& lam1,
                         const Partition& lam2, int len) {
    require_strips(mu, lam1, lam2);
    std::vector<int> steps(len);
    for (int c = 1; c <= len; ++c) {
        bool a = column_meets(mu, lam1, c);
        bool b = column_meets(mu, lam2, c);
        steps[c - 1] = a && b ? 1 : (!a && !b ? -1 : 0);
    }
    return LatticePath(std::move(steps));
}

std::vector<std::pair<int, int>> reflection_pairs(const LatticePath& path) {
    std::vector<std::pair<int, int>> out;
    int L = path.length();
    for (int i = 1; i <= L; ++i) {
        if (path.step(i) != 1)
            continue;
        int t = path.height(i - 1);
        for (int j = i + 1; j <= L; ++j)
            if (path.step(j) == -1 && path.height(j) == t)
                out.emplace_back(i, j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int width(const Partition& mu, const Partition& lam1, const Partition& lam2) {
    // Beyond max(lam1_1, lam2_1) every step is SE and the height falls
    // strictly, so no pair closes past that point plus the prefix height
    // spread; storing that much makes the prefix search exhaustive.
    int base = std::max(lam1.first(), lam2.first());
    LatticePath head = lattice_path(mu, lam1, lam2, base);
    int maxh = 0;
    for (int x = 0; x <= base; ++x)
        maxh = std::max(maxh, head.height(x));
    LatticePath path = lattice_path(mu, lam1, lam2, base + (maxh - head.min_height(base)) + 1);
    int M = 0;
    for (const auto& [i, j] : reflection_pairs(path))
        M = std::max(M, j);
    return std::max({M, lam1.first(), lam2.first()});
}

std::vector<Partition> hori_set(int d, const Partition& lam1, const Partition& lam2) {
    std::vector<Partition> out;
    for (const Partition& mu : partitions_of(d))
        if (is_horizontal_strip(mu, lam1) && is_horizontal_strip(mu, lam2))
            out.push_back(mu);
    return out;
}

std::vector<Partition> hori_positive(int d, const Partition& lam1, const Partition& lam2,
                                     int n, int m, int r) {
    if (d > r)
        throw std::domain_error("hori_positive: requires d <= r");
    // The defining window is max(lam1_1, lam2_1); when that is at most
    // n+m-d-r the two windows test the same thing, and every in-range use
    // has it so. Checking the larger of the two keeps both readings exact.
    int w = std::max({n + m - d - r, lam1.first(), lam2.first()});
    std::vector<Partition> out;
    for (const Partition& mu : hori_set(d, lam1, lam2)) {
        LatticePath path = lattice_path(mu, lam1, lam2, w);
        if (path.min_height(w) >= 0)
            out.push_back(mu);
    }
    return out;
}

std::vector<Partition> hori_wid(int d, const Partition& lam1, const Partition& lam2,
                                int n, int m, int r) {
    if (d > r)
        throw std::domain_error("hori_wid: requires d <= r");
    std::vector<Partition> out;
    for (const Partition& mu : hori_set(r, lam1, lam2))
        if (width(mu, lam1, lam2) == n + m - d - r)
            out.push_back(mu);
    return out;
}

int phi_removal_column(const Partition& mu, const StripContext& ctx) {
    int w = ctx.window();
    LatticePath path = lattice_path(mu, ctx.lam1, ctx.lam2, std::max(w, 0));
    int mn = path.min_height(w);
    if (mn >= 0)
        throw std::domain_error("phi: mu lies in the positive set");
    int x0 = 0;
    while (path.height(x0) != mn)
        ++x0;
    return x0;  // first minimum; > 0 since the path starts on the axis
}

Partition phi(const Partition& mu, const StripContext& ctx) {
    if (ctx.d <= 0 || mu.size() != ctx.d)
        throw std::domain_error("phi: mu must be a partition of d > 0");
    require_strips(mu, ctx.lam1, ctx.lam2);
    return remove_cell_from_column(mu, phi_removal_column(mu, ctx));
}

Partition phi_inverse(const Partition& nu, const StripContext& ctx) {
    if (ctx.d <= 0 || nu.size() != ctx.d - 1)
        throw std::domain_error("phi_inverse: nu must be a partition of d - 1");
    require_strips(nu, ctx.lam1, ctx.lam2);
    int w = ctx.window();
    LatticePath path = lattice_path(nu, ctx.lam1, ctx.lam2, w);
    int mn = path.min_height(w);
    int x0p = w;
    while (path.height(x0p) != mn)
        --x0p;
    return add_cell_to_column(nu, x0p + 1);
}

Partition ls(const Partition& mu, const StripContext& ctx) {
    if (mu.size() != ctx.d)
        throw std::domain_error("ls: mu must be a partition of d");
    require_strips(mu, ctx.lam1, ctx.lam2);
    int w = ctx.window();
    LatticePath path = lattice_path(mu, ctx.lam1, ctx.lam2, w);
    if (path.min_height(w) < 0)
        throw std::domain_error("ls: mu is not in the positive set");
    std::vector<bool> paired(w + 1, false);
    for (const auto& [i, j] : reflection_pairs(path))
        if (j <= w)
            paired[i] = true;
    Partition out = mu;
    for (int i = 1; i <= w; ++i)
        if (path.step(i) == 1 && !paired[i])
            out = add_cell_to_column(out, i);
    return out;
}

Partition ls_inverse(const Partition& nu, const StripContext& ctx) {
    if (nu.size() != ctx.r)
        throw std::domain_error("ls_inverse: nu must be a partition of r");
    require_strips(nu, ctx.lam1, ctx.lam2);
    int w = ctx.window();
    if (width(nu, ctx.lam1, ctx.lam2) != w)
        throw std::domain_error("ls_inverse: nu does not have the required width");
    LatticePath path = lattice_path(nu, ctx.lam1, ctx.lam2, w);
    // SE steps descending to a new strict minimum are exactly the steps a
    // rightward horizontal light ray from the left reaches first.
    std::vector<int> touched;
    int mn = 0;
    for (int x = 1; x <= w; ++x) {
        if (path.height(x) < mn) {
            mn = path.height(x);
            touched.push_back(x);
        }
    }
    Partition out = nu;
    for (auto it = touched.rbegin(); it != touched.rend(); ++it)
        out = remove_cell_from_column(out, *it);
    return out;
}

CheckReport verify_bijections(int n, int m, int jobs) {
    CheckReport report;
    std::vector<Partition> lams1 = partitions_of(n), lams2 = partitions_of(m);
    int mn = std::min(n, m);

    struct PairResult {
        bool phi_ok = true, ls_ok = true;
        long phi_cases = 0, ls_cases = 0;
    };
    std::vector<PairResult> results(lams1.size() * lams2.size());

    parallel_for(static_cast<int>(results.size()), jobs, [&](int idx) {
        const Partition& lam1 = lams1[idx / lams2.size()];
        const Partition& lam2 = lams2[idx % lams2.size()];
        PairResult& res = results[idx];
        bool& phi_ok = res.phi_ok;
        bool& ls_ok = res.ls_ok;
        long& phi_cases = res.phi_cases;
        long& ls_cases = res.ls_cases;
        {
            for (int r = 0; r <= mn; ++r) {
                for (int d = 0; d <= r; ++d) {
                    int w = n + m - d - r;
                    if (lam1.first() > w || lam2.first() > w)
                        continue;
                    StripContext ctx{lam1, lam2, n, m, r, d};
                    std::vector<Partition> plus = hori_positive(d, lam1, lam2, n, m, r);

                    if (d > 0) {
                        // phi: H(d) \ H+(d) -> H(d-1), with phi_inverse a two-sided inverse
                        std::vector<Partition> domain;
                        for (const Partition& mu : hori_set(d, lam1, lam2))
                            if (std::find(plus.begin(), plus.end(), mu) == plus.end())
                                domain.push_back(mu);
                        std::vector<Partition> codomain = hori_set(d - 1, lam1, lam2);
                        if (domain.size() != codomain.size())
                            phi_ok = false;
                        std::vector<Partition> images;
                        for (const Partition& mu : domain) {
                            int x0 = phi_removal_column(mu, ctx);
                            if (!(0 < x0 && x0 < ctx.window()))
                                phi_ok = false;
                            Partition nu = phi(mu, ctx);
                            images.push_back(nu);
                            if (std::find(codomain.begin(), codomain.end(), nu) == codomain.end())
                                phi_ok = false;
                            if (phi_inverse(nu, ctx) != mu)
                                phi_ok = false;
                            ++phi_cases;
                        }
                        for (const Partition& nu : codomain) {
                            Partition mu = phi_inverse(nu, ctx);
                            if (phi(mu, ctx) != nu)
                                phi_ok = false;
                        }
                        std::sort(images.begin(), images.end(),
                                  [](const Partition& a, const Partition& b) {
                                      return PartitionLess()(a, b);
                                  });
                        if (std::adjacent_find(images.begin(), images.end()) != images.end())
                            phi_ok = false;
                    }

                    // ls: H+(d) -> H^wid(d), with ls_inverse a two-sided inverse
                    std::vector<Partition> wid_set = hori_wid(d, lam1, lam2, n, m, r);
                    if (plus.size() != wid_set.size())
                        ls_ok = false;
                    std::vector<Partition> images;
                    for (const Partition& mu : plus) {
                        Partition nu = ls(mu, ctx);
                        images.push_back(nu);
                        if (std::find(wid_set.begin(), wid_set.end(), nu) == wid_set.end())
                            ls_ok = false;
                        if (ls_inverse(nu, ctx) != mu)
                            ls_ok = false;
                        ++ls_cases;
                    }
                    for (const Partition& nu : wid_set) {
                        Partition mu = ls_inverse(nu, ctx);
                        if (ls(mu, ctx) != nu)
                            ls_ok = false;
                    }
                    std::sort(images.begin(), images.end(),
                              [](const Partition& a, const Partition& b) {
                                  return PartitionLess()(a, b);
                              });
                    if (std::adjacent_find(images.begin(), images.end()) != images.end())
                        ls_ok = false;
                }
            }
        }
    });

    bool phi_ok = true, ls_ok = true;
    long phi_cases = 0, ls_cases = 0;
    for (const PairResult& res : results) {
        phi_ok = phi_ok && res.phi_ok;
        ls_ok = ls_ok && res.ls_ok;
        phi_cases += res.phi_cases;
        ls_cases += res.ls_cases;
    }
    report.check("phi", phi_ok, "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                    " cases=" + std::to_string(phi_cases));
    report.check("ls", ls_ok, "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                  " cases=" + std::to_string(ls_cases));
    return report;
}

}  // namespace oharm
