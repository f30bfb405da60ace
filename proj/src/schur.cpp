#include "oharm/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace oharm {

namespace {
const QPoly kZeroPoly;
}

SchurExpansion::SchurExpansion(int deg1, int deg2)
    : deg1_(deg1), deg2_(deg2) {
    if (deg1 < 0 || deg2 < 0)
        throw std::domain_error("SchurExpansion: negative degree");
}

void SchurExpansion::add_term(const Partition& a, const Partition& b, const QPoly& c) {
    if (a.size() != deg1_ || b.size() != deg2_)
        throw std::domain_error("SchurExpansion::add_term: index size mismatch");
    if (c.is_zero())
        return;
    auto key = PartitionPair(a, b);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

const QPoly& SchurExpansion::coefficient(const Partition& a, const Partition& b) const {
    auto it = terms_.find(PartitionPair(a, b));
    return it == terms_.end() ? kZeroPoly : it->second;
}

bool SchurExpansion::schur_positive() const {
    for (const auto& [key, c] : terms_)
        if (!c.nonneg())
            return false;
    return true;
}

int SchurExpansion::top_q_degree() const {
    int top = -1;
    for (const auto& [key, c] : terms_)
        top = std::max(top, c.degree());
    return top;
}

SchurExpansion SchurExpansion::slice(int e) const {
    SchurExpansion out(deg1_, deg2_);
    for (const auto& [key, c] : terms_) {
        const mpz_class& v = c.at(e);
        if (v != 0)
            out.add_term(key.first, key.second, QPoly(v));
    }
    return out;
}

SchurExpansion SchurExpansion::ungraded() const {
    SchurExpansion out(deg1_, deg2_);
    for (const auto& [key, c] : terms_)
        out.add_term(key.first, key.second, QPoly(c.eval_one()));
    return out;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
    if (deg1_ != o.deg1_ || deg2_ != o.deg2_)
        throw std::domain_error("SchurExpansion: degree mismatch");
    for (const auto& [key, c] : o.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& o) {
    if (deg1_ != o.deg1_ || deg2_ != o.deg2_)
        throw std::domain_error("SchurExpansion: degree mismatch");
    for (const auto& [key, c] : o.terms_) {
        QPoly neg;
        neg -= c;
        add_term(key.first, key.second, neg);
    }
    return *this;
}

SchurExpansion truncate(const SchurExpansion& f, int L) {
    SchurExpansion out(f.deg1(), f.deg2());
    for (const auto& [key, c] : f.terms())
        if (key.first.first() <= L && key.second.first() <= L)
            out.add_term(key.first, key.second, c);
    return out;
}

SchurExpansion filter_first_part(const SchurExpansion& f, int p, Side side) {
    SchurExpansion out(f.deg1(), f.deg2());
    for (const auto& [key, c] : f.terms()) {
        int fp = side == Side::left ? key.first.first() : key.second.first();
        if (fp == p)
            out.add_term(key.first, key.second, c);
    }
    return out;
}

SchurExpansion mul_h(const SchurExpansion& f, int k, Side side) {
    if (k < 0)
        throw std::domain_error("mul_h: k must be nonnegative");
    SchurExpansion out(f.deg1() + (side == Side::left ? k : 0),
                       f.deg2() + (side == Side::right ? k : 0));
    for (const auto& [key, c] : f.terms()) {
        const Partition& grow = side == Side::left ? key.first : key.second;
        for (const Partition& lam : pieri_h(grow, k)) {
            if (side == Side::left)
                out.add_term(lam, key.second, c);
            else
                out.add_term(key.first, lam, c);
        }
    }
    return out;
}

SchurExpansion mul_q_power(const SchurExpansion& f, int e) {
    SchurExpansion out(f.deg1(), f.deg2());
    QPoly qe = QPoly::q_power(e);
    for (const auto& [key, c] : f.terms())
        out.add_term(key.first, key.second, c * qe);
    return out;
}

SchurExpansion scale(const SchurExpansion& f, const mpz_class& c) {
    SchurExpansion out(f.deg1(), f.deg2());
    QPoly scalar(c);
    for (const auto& [key, v] : f.terms())
        out.add_term(key.first, key.second, v * scalar);
    return out;
}

SchurExpansion sf(int n, int m, int d) {
    if (d < 0 || d > std::min(n, m))
        throw std::domain_error("sf: requires 0 <= d <= min(n,m)");
    SchurExpansion out(n, m);
    QPoly one(1);
    for (const Partition& mu : partitions_of(d)) {
        std::vector<Partition> left = pieri_h(mu, n - d);
        std::vector<Partition> right = pieri_h(mu, m - d);
        for (const Partition& a : left)
            for (const Partition& b : right)
                out.add_term(a, b, one);
    }
    return out;
}

SchurExpansion plethysm_h_h2(int d) {
    if (d < 0)
        throw std::domain_error("plethysm_h_h2: d must be nonnegative");
    SchurExpansion out(2 * d, 0);
    for (const Partition& lam : even_partitions(2 * d))
        out.add_term(lam, Partition{}, QPoly(1));
    return out;
}

mpz_class coef_closed_form(int d, int a, int b, int p, int q,
                           const Partition& lam1, const Partition& lam2) {
    if (lam1.size() != a + d || lam2.size() != b + d)
        throw std::domain_error("coef_closed_form: size preconditions violated");
    if (lam1.first() != p || lam2.first() != q)
        return 0;
    int len = std::max(lam1.length(), lam2.length());
    for (int i = 1; i <= len; ++i) {
        if (std::min(lam1.part(i), lam2.part(i)) <
            std::max(lam1.part(i + 1), lam2.part(i + 1)))
            return 0;
    }
    // Coefficient of q^{d - sum_i max(lam1_{i+1}, lam2_{i+1})} in
    // prod_i (1 + q + ... + q^{min(lam_i) - max(lam_{i+1})}).
    int shift = 0;
    QPoly prod(1);
    for (int i = 1; i <= len; ++i) {
        shift += std::max(lam1.part(i + 1), lam2.part(i + 1));
        int top = std::min(lam1.part(i), lam2.part(i)) -
                  std::max(lam1.part(i + 1), lam2.part(i + 1));
        QPoly factor;
        for (int j = 0; j <= top; ++j)
            factor.add_term(j, 1);
        prod = prod * factor;
    }
    int want = d - shift;
    return want < 0 ? mpz_class(0) : prod.at(want);
}

SchurExpansion interchange_side(int d, int a, int b, int p, int q) {
    SchurExpansion out(a + d, b + d);
    if (d < 0)
        return out;
    for (const Partition& mu : partitions_of(d)) {
        std::vector<Partition> left, right;
        for (const Partition& lam : pieri_h(mu, a))
            if (lam.first() == p)
                left.push_back(lam);
        if (left.empty())
            continue;
        for (const Partition& lam : pieri_h(mu, b))
            if (lam.first() == q)
                right.push_back(lam);
        for (const Partition& x : left)
            for (const Partition& y : right)
                out.add_term(x, y, QPoly(1));
    }
    return out;
}

IdentityResult verify_schur_interchange(int d, int a, int b, int p, int q) {
    IdentityResult res;
    int M = std::max(p, q);
    SchurExpansion lhs = interchange_side(d, a, b, p, q);
    if (M - b < 0 || M - a < 0) {
        // h with a negative index vanishes, so the right-hand side is zero.
        res.vacuous = true;
        res.equal = lhs.is_zero();
        return res;
    }
    SchurExpansion rhs = interchange_side(d + a + b - M, M - b, M - a, p, q);
    res.equal = lhs == rhs;
    return res;
}

bool verify_refinement(int n, int m, int r) {
    if (r < 0 || r > std::min(n, m))
        throw std::domain_error("verify_refinement: requires 0 <= r <= min(n,m)");
    SchurExpansion rhs(n, m);
    for (int d = 0; d <= r; ++d) {
        SchurExpansion diff = sf(n, m, d);
        if (d > 0)
            diff -= sf(n, m, d - 1);
        rhs += truncate(diff, n + m - d - r);
    }
    return rhs == sf(n, m, r);
}

bool verify_schur_sum(int n, int m) {
    int mn = std::min(n, m);
    SchurExpansion lhs(n, m), rhs(n, m);
    for (int d = 0; d <= mn; ++d) {
        lhs += truncate(sf(n, m, d), n + m - 2 * d);
        if (d <= mn - 1)
            lhs += truncate(sf(n, m, d), n + m - 2 * d - 1);
        rhs += sf(n, m, d);
    }
    return lhs == rhs;
}

}  // namespace oharm
