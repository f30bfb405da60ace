#include "oharm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oharm {

namespace {

std::vector<Cell> involution_cells(const InvolutionPoint& w) { return w.cells(); }

// All size-k cell subsets of the board, sorted lists in lex order.
void gen_subsets(int nrows, int ncols, int k, int from, std::vector<Cell>& cur,
                 std::vector<std::vector<Cell>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    int total = nrows * ncols;
    for (int v = from; v < total; ++v) {
        cur.emplace_back(v / ncols + 1, v % ncols + 1);
        gen_subsets(nrows, ncols, k, v + 1, cur, out);
        cur.pop_back();
    }
}

// Exponent vectors of total degree k over nvars variables, lex order on the
// variable sequence x_{1,1},...,x_{1,m},x_{2,1},...
void gen_monomials(int nvars, int k, int var, std::vector<int>& exps,
                   std::vector<std::vector<int>>& out) {
    if (var == nvars - 1) {
        exps[var] = k;
        out.push_back(exps);
        exps[var] = 0;
        return;
    }
    for (int e = k; e >= 0; --e) {
        exps[var] = e;
        gen_monomials(nvars, k - e, var + 1, exps, out);
        exps[var] = 0;
    }
}

std::vector<Cell> support_of_exps(const std::vector<int>& exps, int ncols) {
    std::vector<Cell> cells;
    for (size_t v = 0; v < exps.size(); ++v)
        if (exps[v] > 0)
            cells.emplace_back(static_cast<int>(v) / ncols + 1, static_cast<int>(v) % ncols + 1);
    return cells;
}

std::vector<Rational> eval_support(const std::vector<Cell>& support, const Locus& locus) {
    std::vector<Rational> v(locus.points.size());
    for (size_t i = 0; i < locus.points.size(); ++i) {
        bool in = std::includes(locus.points[i].begin(), locus.points[i].end(),
                                support.begin(), support.end());
        v[i] = in ? 1 : 0;
    }
    return v;
}

std::vector<Cell> act_support(const Locus& locus, const Perm& g, const Perm& h,
                              const std::vector<Cell>& support) {
    std::vector<Cell> out;
    out.reserve(support.size());
    for (const auto& [i, j] : support) {
        if (locus.action == Locus::Action::rowcol)
            out.emplace_back(g[i - 1], h[j - 1]);
        else
            out.emplace_back(g[i - 1], g[j - 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* Evaluation spans of V_{<=0} .. V_{<=dmax} over the locus points, with the
 * expansion of every support's evaluation vector in terms of the pivot
 * supports (the lexicographically first maximal independent family). */
struct LocusSpan {
    SpanBuilder sb;
    std::vector<std::vector<Cell>> pivot_supports;
    std::vector<int> pivot_size;
    std::map<std::vector<Cell>, std::vector<Rational>> coords;
    std::vector<int> rank_le;  // rank_le[d] = rank of E_{<=d}

    LocusSpan(const Locus& locus, int dmax, BasisMode mode)
        : sb(static_cast<int>(locus.points.size())) {
        int npts = static_cast<int>(locus.points.size());
        if (npts == 0)
            throw std::domain_error("LocusSpan: empty locus");
        for (int d = 0; d <= dmax; ++d) {
            if (mode == BasisMode::monomials) {
                std::vector<std::vector<int>> exps_list;
                std::vector<int> exps(locus.nrows * locus.ncols, 0);
                gen_monomials(locus.nrows * locus.ncols, d, 0, exps, exps_list);
                for (const auto& e : exps_list)
                    add_support(support_of_exps(e, locus.ncols), d, locus);
            } else if (mode == BasisMode::subsets) {
                std::vector<std::vector<Cell>> subs;
                std::vector<Cell> cur;
                gen_subsets(locus.nrows, locus.ncols, d, 0, cur, subs);
                for (const auto& s : subs)
                    add_support(s, d, locus);
            } else {
                for (const RookPlacement& p : enumerate_rook(locus.nrows, locus.ncols, d))
                    add_support(p.cells, d, locus);
            }
            rank_le.push_back(sb.rank());
        }
    }

    void add_support(const std::vector<Cell>& support, int d, const Locus& locus) {
        if (coords.count(support))
            return;  // same evaluation vector as a lower-degree monomial
        std::vector<Rational> c;
        int piv = sb.add(eval_support(support, locus), &c);
        if (piv >= 0) {
            pivot_supports.push_back(support);
            pivot_size.push_back(d);
        }
        coords.emplace(support, std::move(c));
    }

    int rank_upto(int d) const {  // rank of E_{<=d}; d may be -1
        if (d < 0)
            return 0;
        if (d >= static_cast<int>(rank_le.size()))
            return rank_le.back();
        return rank_le[d];
    }
};

std::vector<std::pair<Perm, Perm>> class_reps(const Locus& locus,
                                              const std::vector<ConjClass>& cn,
                                              const std::vector<ConjClass>& cm) {
    std::vector<std::pair<Perm, Perm>> reps;
    for (const ConjClass& a : cn) {
        Perm g = class_representative(a.cycle_type);
        for (const ConjClass& b : cm) {
            Perm h = locus.action == Locus::Action::rowcol
                         ? class_representative(b.cycle_type)
                         : Perm{};
            reps.emplace_back(g, h);
        }
    }
    return reps;
}

}  // namespace

Locus rook_locus(int n, int m, int r) {
    if (r < 0 || r > std::min(n, m))
        throw std::domain_error("rook_locus: requires 0 <= r <= min(n,m)");
    Locus L;
    L.nrows = n;
    L.ncols = m;
    L.action = Locus::Action::rowcol;
    L.n = n;
    L.m = m;
    for (const RookPlacement& p : enumerate_rook(n, m, r))
        L.points.push_back(p.cells);
    return L;
}

Locus uz_locus(int n, int m, int r) {
    Locus L = rook_locus(n, m, r);
    L.points.clear();
    for (const RookPlacement& p : enumerate_uz(n, m, r))
        L.points.push_back(p.cells);
    return L;
}

Locus involution_locus(int n, int a) {
    std::vector<InvolutionPoint> pts = enumerate_involutions(n, a);
    if (pts.empty())
        throw std::domain_error("involution_locus: empty locus (parity mismatch?)");
    Locus L;
    L.nrows = n;
    L.ncols = n;
    L.action = Locus::Action::conjugation;
    L.n = n;
    L.m = 0;
    for (const InvolutionPoint& w : pts)
        L.points.push_back(involution_cells(w));
    std::sort(L.points.begin(), L.points.end());  // canonical order: cell lists
    return L;
}

std::vector<int> oracle_hilbert(const Locus& locus, int dmax, BasisMode mode) {
    LocusSpan span(locus, dmax, mode);
    std::vector<int> dims;
    for (int d = 0; d <= dmax; ++d)
        dims.push_back(span.rank_upto(d) - span.rank_upto(d - 1));
    return dims;
}

SchurExpansion oracle_graded_frobenius(const Locus& locus, int dmax, BasisMode mode) {
    LocusSpan span(locus, dmax, mode);
    std::vector<ConjClass> cn = conj_classes(locus.n);
    std::vector<ConjClass> cm = conj_classes(locus.m);
    size_t nclasses = cn.size() * cm.size();
    std::vector<std::pair<Perm, Perm>> reps = class_reps(locus, cn, cm);

    // chi[d][class]: trace on V_{<=d} minus trace on V_{<=d-1}, i.e. the sum
    // of diagonal coordinates over pivots of degree exactly d.
    std::vector<std::vector<Rational>> chi(dmax + 1, std::vector<Rational>(nclasses, Rational(0)));
    for (size_t ci = 0; ci < nclasses; ++ci) {
        const auto& [g, h] = reps[ci];
        for (size_t k = 0; k < span.pivot_supports.size(); ++k) {
            std::vector<Cell> image = act_support(locus, g, h, span.pivot_supports[k]);
            auto it = span.coords.find(image);
            if (it == span.coords.end())
                throw std::runtime_error("oracle: image support not in basis family");
            const std::vector<Rational>& c = it->second;
            if (k < c.size() && c[k] != 0)
                chi[span.pivot_size[k]][ci] += c[k];
        }
    }

    size_t id_class = nclasses - 1;  // (1^n, 1^m) is last in canonical order
    SchurExpansion out(locus.n, locus.m);
    for (int d = 0; d <= dmax; ++d) {
        for (size_t ci = 0; ci < nclasses; ++ci)
            if (chi[d][ci].get_den() != 1)
                throw std::runtime_error("oracle: non-integral trace");
        if (chi[d][id_class] != span.rank_upto(d) - span.rank_upto(d - 1))
            throw std::runtime_error("oracle: identity trace disagrees with dimension");
        SchurExpansion frob = frobenius_from_character(chi[d], locus.n, locus.m);
        if (!frob.schur_positive())
            throw std::runtime_error("oracle: negative multiplicity");
        out += mul_q_power(frob, d);
    }
    return out;
}

int poly_degree(const BoardPoly& f) {
    int deg = 0;
    for (const auto& [mono, c] : f) {
        int d = 0;
        for (const auto& [cell, e] : mono)
            d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

namespace {

BoardPoly monomial_poly(const std::vector<Cell>& cells) {
    BoardMonomial m;
    for (const Cell& c : cells)
        m[c] += 1;
    return BoardPoly{{m, 1}};
}

BoardPoly poly_mul(const BoardPoly& a, const BoardPoly& b) {
    BoardPoly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            BoardMonomial m = ma;
            for (const auto& [cell, e] : mb)
                m[cell] += e;
            out[m] += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

BoardPoly row_sum(int i, int ncols) {
    BoardPoly p;
    for (int j = 1; j <= ncols; ++j)
        p[BoardMonomial{{Cell(i, j), 1}}] = 1;
    return p;
}

BoardPoly col_sum(int j, int nrows) {
    BoardPoly p;
    for (int i = 1; i <= nrows; ++i)
        p[BoardMonomial{{Cell(i, j), 1}}] = 1;
    return p;
}

void append_subset_products(const std::vector<BoardPoly>& factors, int take,
                            std::vector<BoardPoly>& out) {
    std::vector<int> pos;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pos.size()) == take) {
            BoardPoly prod{{BoardMonomial{}, 1}};
            for (int p : pos)
                prod = poly_mul(prod, factors[p]);
            out.push_back(prod);
            return;
        }
        for (int v = from; v < static_cast<int>(factors.size()); ++v) {
            pos.push_back(v);
            rec(v + 1);
            pos.pop_back();
        }
    };
    rec(0);
}

}  // namespace

std::vector<BoardPoly> rook_ideal_generators(int n, int m, int r) {
    std::vector<BoardPoly> gens;
    BoardPoly total;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            total[BoardMonomial{{Cell(i, j), 1}}] = 1;
    gens.push_back(total);

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            for (int jp = j; jp <= m; ++jp)
                gens.push_back(monomial_poly({Cell(i, j), Cell(i, jp)}));
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= n; ++i)
            for (int ip = i + 1; ip <= n; ++ip)
                gens.push_back(monomial_poly({Cell(i, j), Cell(ip, j)}));

    std::vector<BoardPoly> rows, cols;
    for (int i = 1; i <= n; ++i)
        rows.push_back(row_sum(i, m));
    for (int j = 1; j <= m; ++j)
        cols.push_back(col_sum(j, n));
    if (n - r + 1 <= n)
        append_subset_products(rows, n - r + 1, gens);
    if (m - r + 1 <= m)
        append_subset_products(cols, m - r + 1, gens);

    for (int size = r + 1; size <= std::min(n, m); ++size)
        for (const RookPlacement& p : enumerate_rook(n, m, size))
            gens.push_back(monomial_poly(p.cells));
    return gens;
}

std::vector<BoardPoly> involution_ideal_generators(int n, int a) {
    std::vector<BoardPoly> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back(row_sum(i, n));
    for (int j = 1; j <= n; ++j)
        gens.push_back(col_sum(j, n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int jp = j; jp <= n; ++jp)
                gens.push_back(monomial_poly({Cell(i, j), Cell(i, jp)}));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            for (int ip = i + 1; ip <= n; ++ip)
                gens.push_back(monomial_poly({Cell(i, j), Cell(ip, j)}));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            BoardPoly diff;
            diff[BoardMonomial{{Cell(i, j), 1}}] = 1;
            diff[BoardMonomial{{Cell(j, i), 1}}] = -1;
            gens.push_back(diff);
        }
    }
    BoardPoly diag;
    for (int i = 1; i <= n; ++i)
        diag[BoardMonomial{{Cell(i, i), 1}}] = 1;
    gens.push_back(diag);

    // products of a+1 distinct diagonal variables
    std::vector<BoardPoly> diag_vars;
    for (int i = 1; i <= n; ++i)
        diag_vars.push_back(BoardPoly{{BoardMonomial{{Cell(i, i), 1}}, 1}});
    if (a + 1 <= n)
        append_subset_products(diag_vars, a + 1, gens);

    for (int ap = a - 2; ap >= 0; ap -= 2)
        for (const InvolutionPoint& w : enumerate_involutions(n, ap)) {
            std::vector<Cell> cells;
            for (const auto& [i, j] : w.pairs)
                cells.emplace_back(i, j);
            gens.push_back(monomial_poly(cells));
        }
    return gens;
}

long monomial_count(int nvars, int deg) {
    if (deg < 0)
        return 0;
    // C(nvars + deg - 1, deg)
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), nvars + deg - 1, deg);
    return c.get_si();
}

long ideal_degree_dim(const std::vector<BoardPoly>& gens, int deg, int nrows, int ncols) {
    if (deg < 0)
        throw std::domain_error("ideal_degree_dim: negative degree");
    int nvars = nrows * ncols;

    // Split off monomial generators; every degree-deg monomial divisible by
    // one of them contributes a unit vector, which we eliminate up front.
    std::vector<std::vector<int>> mono_gens;
    std::vector<std::pair<BoardPoly, int>> general;  // (gen, degree)
    for (const BoardPoly& g : gens) {
        int e = poly_degree(g);
        if (e > deg || g.empty())
            continue;
        if (g.size() == 1) {
            std::vector<int> exps(nvars, 0);
            for (const auto& [cell, ex] : g.begin()->first)
                exps[(cell.first - 1) * ncols + (cell.second - 1)] = ex;
            mono_gens.push_back(std::move(exps));
        } else {
            general.emplace_back(g, e);
        }
    }

    std::vector<std::vector<int>> degree_d;
    std::vector<int> exps(nvars, 0);
    if (nvars > 0)
        gen_monomials(nvars, deg, 0, exps, degree_d);

    auto divisible = [&](const std::vector<int>& mono) {
        for (const auto& mg : mono_gens) {
            bool div = true;
            for (int v = 0; v < nvars; ++v)
                if (mono[v] < mg[v]) { div = false; break; }
            if (div)
                return true;
        }
        return false;
    };

    std::map<std::vector<int>, int> survivor_index;
    for (const auto& mono : degree_d)
        if (!divisible(mono))
            survivor_index.emplace(mono, static_cast<int>(survivor_index.size()));

    long killed = static_cast<long>(degree_d.size()) - static_cast<long>(survivor_index.size());

    SpanBuilder sb(static_cast<int>(survivor_index.size()));
    std::vector<int> uexps(nvars, 0);
    for (const auto& [g, e] : general) {
        std::vector<std::vector<int>> complements;
        gen_monomials(nvars, deg - e, 0, uexps, complements);
        for (const auto& u : complements) {
            std::vector<Rational> row(survivor_index.size(), Rational(0));
            bool nonzero = false;
            for (const auto& [mono, c] : g) {
                std::vector<int> prod = u;
                for (const auto& [cell, ex] : mono)
                    prod[(cell.first - 1) * ncols + (cell.second - 1)] += ex;
                auto it = survivor_index.find(prod);
                if (it != survivor_index.end()) {
                    row[it->second] += Rational(c);
                    nonzero = true;
                }
            }
            if (nonzero)
                sb.add(row);
        }
    }
    return killed + sb.rank();
}

namespace {

std::vector<Rational> eval_poly(const BoardPoly& f, const Locus& locus) {
    std::vector<Rational> v(locus.points.size(), Rational(0));
    for (const auto& [mono, c] : f) {
        std::vector<Cell> support;
        for (const auto& [cell, e] : mono)
            support.push_back(cell);
        for (size_t i = 0; i < locus.points.size(); ++i) {
            if (std::includes(locus.points[i].begin(), locus.points[i].end(),
                              support.begin(), support.end()))
                v[i] += Rational(c);
        }
    }
    return v;
}

CheckReport verify_ideal_common(const Locus& locus, const std::vector<BoardPoly>& gens,
                                int dmax, const std::string& tag) {
    CheckReport report;
    LocusSpan span(locus, dmax, BasisMode::placements);
    int nvars = locus.nrows * locus.ncols;

    for (int d = 1; d <= dmax; ++d) {
        int checked = 0;
        bool member_ok = true;
        for (const BoardPoly& g : gens) {
            if (poly_degree(g) != d)
                continue;
            ++checked;
            if (!span.sb.in_span(eval_poly(g, locus), span.rank_upto(d - 1)))
                member_ok = false;
        }
        report.check(tag + "-gen-membership d=" + std::to_string(d), member_ok,
                     "generators=" + std::to_string(checked));

        long lhs = ideal_degree_dim(gens, d, locus.nrows, locus.ncols);
        long full = monomial_count(nvars, d);
        long rhs = (full - (span.rank_upto(d) - span.rank_upto(d - 1)));
        report.check(tag + "-dim d=" + std::to_string(d), lhs == rhs,
                     "ideal=" + std::to_string(lhs) + " gr=" + std::to_string(rhs) +
                         " of " + std::to_string(full));
    }
    return report;
}

}  // namespace

long gr_ideal_dim(const Locus& locus, int deg) {
    if (deg < 0)
        throw std::domain_error("gr_ideal_dim: negative degree");
    LocusSpan span(locus, deg, BasisMode::placements);
    // (#monomials_{<=deg} - rank_{<=deg}) - (#monomials_{<=deg-1} - rank_{<=deg-1})
    return monomial_count(locus.nrows * locus.ncols, deg) -
           (span.rank_upto(deg) - span.rank_upto(deg - 1));
}

bool gr_ideal_member(const BoardPoly& form, const Locus& locus) {
    int deg = poly_degree(form);
    LocusSpan span(locus, std::max(0, deg - 1), BasisMode::placements);
    return span.sb.in_span(eval_poly(form, locus), span.rank_upto(deg - 1));
}

CheckReport verify_ideal_equality(int n, int m, int r, int dmax) {
    return verify_ideal_common(rook_locus(n, m, r), rook_ideal_generators(n, m, r), dmax,
                               "ideal n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                   " r=" + std::to_string(r));
}

CheckReport verify_involution_ideal(int n, int a, int dmax) {
    return verify_ideal_common(involution_locus(n, a), involution_ideal_generators(n, a), dmax,
                               "involution-ideal n=" + std::to_string(n) +
                                   " a=" + std::to_string(a));
}

}  // namespace oharm
