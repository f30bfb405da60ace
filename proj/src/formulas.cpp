#include "oharm/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "oharm/lattice.hpp"

namespace oharm {

namespace {

void require_rank(int n, int m, int r) {
    if (n < 1 || m < 1 || r < 0 || r > std::min(n, m))
        throw std::domain_error("grfrob: requires 0 <= r <= min(n,m)");
}

}  // namespace

SchurExpansion grfrob_signed(int n, int m, int r) {
    require_rank(n, m, r);
    SchurExpansion out(n, m);
    for (int d = 0; d <= r; ++d) {
        SchurExpansion diff = sf(n, m, d);
        if (d > 0)
            diff -= sf(n, m, d - 1);
        out += mul_q_power(truncate(diff, n + m - d - r), d);
    }
    return out;
}

SchurExpansion grfrob_bad(int n, int m, int r) {
    require_rank(n, m, r);
    SchurExpansion out(n, m);
    for (int d = 0; d <= r; ++d) {
        int w = n + m - d - r;
        QPoly qd = QPoly::q_power(d);
        for (const Partition& lam1 : partitions_of(n)) {
            if (lam1.first() > w)
                continue;
            for (const Partition& lam2 : partitions_of(m)) {
                if (lam2.first() > w)
                    continue;
                size_t count = hori_positive(d, lam1, lam2, n, m, r).size();
                if (count)
                    out.add_term(lam1, lam2, qd * QPoly(static_cast<long>(count)));
            }
        }
    }
    return out;
}

SchurExpansion grfrob_good(int n, int m, int r) {
    require_rank(n, m, r);
    SchurExpansion out(n, m);
    for (const Partition& lam1 : partitions_of(n)) {
        for (const Partition& lam2 : partitions_of(m)) {
            for (const Partition& mu : hori_set(r, lam1, lam2)) {
                int e = n + m - r - width(mu, lam1, lam2);
                out.add_term(lam1, lam2, QPoly::q_power(e));
            }
        }
    }
    return out;
}

SchurExpansion grfrob_uz(int n, int m, int r) {
    require_rank(n, m, r);
    SchurExpansion out(n, m);
    for (int d = 0; d <= std::min(n, m); ++d)
        out += mul_q_power(truncate(sf(n, m, d), n + m - d - r), d);
    return out;
}

SchurExpansion grfrob_involution(int n, int a) {
    if (n < 1 || a < 0 || a > n || (n - a) % 2 != 0)
        throw std::domain_error("grfrob_involution: requires 0 <= a <= n with a = n mod 2");
    SchurExpansion out(n, 0);
    for (int d = 0; d <= (n - a) / 2; ++d) {
        SchurExpansion diff = mul_h(plethysm_h_h2(d), n - 2 * d, Side::left);
        if (d > 0)
            diff -= mul_h(plethysm_h_h2(d - 1), n - 2 * d + 2, Side::left);
        out += mul_q_power(truncate(diff, n - 2 * d + a), d);
    }
    return out;
}

mpz_class hook_dim(const Partition& lam) {
    // |lam|! / product of hook lengths
    mpz_class num = 1;
    for (int i = 2; i <= lam.size(); ++i)
        num *= i;
    std::vector<int> col_len(lam.first() + 1, 0);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j)
            col_len[j] = i;
    mpz_class den = 1;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j)
            den *= (lam.part(i) - j) + (col_len[j] - i) + 1;
    return num / den;
}

QPoly hilbert(const SchurExpansion& f) {
    QPoly out;
    for (const auto& [key, c] : f.terms()) {
        mpz_class dim = hook_dim(key.first) * hook_dim(key.second);
        for (const auto& [e, v] : c.terms())
            out.add_term(e, v * dim);
    }
    return out;
}

}  // namespace oharm
