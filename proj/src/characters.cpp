#include "oharm/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace oharm {

std::vector<ConjClass> conj_classes(int n) {
    std::vector<ConjClass> out;
    mpz_class nfact = factorial(n);
    for (const Partition& lam : partitions_of(n)) {
        // z_lambda = prod i^{m_i} m_i!
        mpz_class z = 1;
        int run = 0;
        for (int i = 1; i <= lam.length(); ++i) {
            ++run;
            if (lam.part(i + 1) != lam.part(i)) {
                for (int k = 1; k <= run; ++k)
                    z *= k;
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), lam.part(i), run);
                z *= pw;
                run = 0;
            }
        }
        out.push_back(ConjClass{lam, nfact / z});
    }
    return out;
}

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;
thread_local std::map<Key, mpz_class> mn_cache;

// Border-strip recursion on beta numbers: removing a strip of size t from
// lam corresponds to lowering one beta number by t onto a free slot; the
// strip height is the number of beta numbers jumped over.
mpz_class mn_rec(const std::vector<int>& beta, const std::vector<int>& cls, size_t ci) {
    if (ci == cls.size())
        return 1;
    Key key(beta, std::vector<int>(cls.begin() + ci, cls.end()));
    auto it = mn_cache.find(key);
    if (it != mn_cache.end())
        return it->second;

    int t = cls[ci];
    mpz_class total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - t;
        if (target < 0)
            continue;
        bool clash = false;
        int jumped = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i)
                continue;
            if (beta[j] == target) { clash = true; break; }
            if (target < beta[j] && beta[j] < beta[i])
                ++jumped;
        }
        if (clash)
            continue;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        mpz_class sub = mn_rec(next, cls, ci + 1);
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }
    mn_cache.emplace(std::move(key), total);
    return total;
}

}  // namespace

mpz_class mn_character(const Partition& lam, const Partition& cls) {
    if (lam.size() != cls.size())
        throw std::domain_error("mn_character: size mismatch");
    std::vector<int> beta;
    int len = lam.length();
    for (int i = 1; i <= len; ++i)
        beta.push_back(lam.part(i) + (len - i));
    // Process largest class parts first to keep the recursion shallow.
    std::vector<int> cycles = cls.parts();
    return mn_rec(beta, cycles, 0);
}

Perm class_representative(const Partition& cls) {
    Perm g(cls.size());
    int start = 0;
    for (int i = 1; i <= cls.length(); ++i) {
        int len = cls.part(i);
        for (int k = 0; k < len; ++k)
            g[start + k] = start + (k + 1) % len + 1;
        start += len;
    }
    return g;
}

SchurExpansion frobenius_from_character(const std::vector<Rational>& chi, int n, int m) {
    std::vector<ConjClass> cn = conj_classes(n), cm = conj_classes(m);
    if (chi.size() != cn.size() * cm.size())
        throw std::domain_error("frobenius_from_character: wrong class-function length");
    mpz_class order = factorial(n) * factorial(m);
    SchurExpansion out(n, m);
    for (const Partition& lam : partitions_of(n)) {
        std::vector<mpz_class> chi_lam(cn.size());
        for (size_t i = 0; i < cn.size(); ++i)
            chi_lam[i] = mn_character(lam, cn[i].cycle_type);
        for (const Partition& mu : partitions_of(m)) {
            Rational acc = 0;
            for (size_t i = 0; i < cn.size(); ++i) {
                for (size_t j = 0; j < cm.size(); ++j) {
                    const Rational& v = chi[i * cm.size() + j];
                    if (v == 0)
                        continue;
                    acc += Rational(cn[i].size * cm[j].size * chi_lam[i] *
                                    mn_character(mu, cm[j].cycle_type)) *
                           v;
                }
            }
            acc /= Rational(order);
            if (acc == 0)
                continue;
            if (acc.get_den() != 1)
                throw std::runtime_error("frobenius_from_character: non-integral multiplicity of " +
                                         lam.str() + "*" + mu.str());
            out.add_term(lam, mu, QPoly(mpz_class(acc.get_num())));
        }
    }
    return out;
}

std::vector<Rational> character_of_slice(const SchurExpansion& f, int e) {
    std::vector<ConjClass> cn = conj_classes(f.deg1()), cm = conj_classes(f.deg2());
    std::vector<Rational> chi(cn.size() * cm.size(), Rational(0));
    for (const auto& [key, c] : f.terms()) {
        const mpz_class& v = c.at(e);
        if (v == 0)
            continue;
        for (size_t i = 0; i < cn.size(); ++i) {
            mpz_class a = mn_character(key.first, cn[i].cycle_type) * v;
            if (a == 0)
                continue;
            for (size_t j = 0; j < cm.size(); ++j)
                chi[i * cm.size() + j] += Rational(a * mn_character(key.second, cm[j].cycle_type));
        }
    }
    return chi;
}

}  // namespace oharm
