#pragma once

#include <map>
#include <utility>

#include "oharm/partition.hpp"
#include "oharm/qpoly.hpp"

namespace oharm {

using PartitionPair = std::pair<Partition, Partition>;

struct PairLess {
    bool operator()(const PartitionPair& a, const PartitionPair& b) const {
        PartitionLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

/* Element of Lambda_n (x) Lambda_m with QPoly coefficients, stored sparsely
 * in the Schur basis s_a (x) s_b. Every stored first index is a partition of
 * deg1() and every second index a partition of deg2(); zero coefficients are
 * never stored.
 *
 * Plain symmetric functions of degree n are the m = 0 case: Lambda_0 is
 * spanned by s_[], so the second factor is pinned to the empty partition and
 * the whole object is canonically an element of Lambda_n. */
class SchurExpansion {
public:
    SchurExpansion(int deg1, int deg2);

    int deg1() const { return deg1_; }
    int deg2() const { return deg2_; }

    using TermMap = std::map<PartitionPair, QPoly, PairLess>;
    const TermMap& terms() const { return terms_; }

    void add_term(const Partition& a, const Partition& b, const QPoly& c);
    const QPoly& coefficient(const Partition& a, const Partition& b) const;

    bool is_zero() const { return terms_.empty(); }
    bool schur_positive() const;
    int top_q_degree() const;  // -1 when zero

    // The coefficient of q^e, as an expansion with constant coefficients.
    SchurExpansion slice(int e) const;
    // Substitutes q = 1.
    SchurExpansion ungraded() const;

    SchurExpansion& operator+=(const SchurExpansion& o);
    SchurExpansion& operator-=(const SchurExpansion& o);
    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }

    bool operator==(const SchurExpansion&) const = default;

private:
    int deg1_, deg2_;
    TermMap terms_;
};

// Keeps exactly the terms whose index partitions both have first part <= L.
SchurExpansion truncate(const SchurExpansion& f, int L);

// Keeps the terms whose chosen-side index has first part exactly p.
enum class Side { left, right };
SchurExpansion filter_first_part(const SchurExpansion& f, int p, Side side);

// Pieri product with h_k on the chosen tensor side.
SchurExpansion mul_h(const SchurExpansion& f, int k, Side side);

SchurExpansion mul_q_power(const SchurExpansion& f, int e);

// Multiplies every coefficient by the scalar c.
SchurExpansion scale(const SchurExpansion& f, const mpz_class& c);

// SF_d = sum over mu |- d of (s_mu h_{n-d}) (x) (s_mu h_{m-d}).
SchurExpansion sf(int n, int m, int d);

// h_d[h_2] = sum of s_lambda over even partitions of 2d, as an element of
// Lambda_{2d} (second factor pinned to s_[]).
SchurExpansion plethysm_h_h2(int d);

// The closed-form coefficient of s_lam1 (x) s_lam2 in
//   sum over mu |- d of {s_mu h_a}_{first = p} (x) {s_mu h_b}_{first = q},
// requiring |lam1| = a + d and |lam2| = b + d.
mpz_class coef_closed_form(int d, int a, int b, int p, int q,
                           const Partition& lam1, const Partition& lam2);

// Builds the expansion named above by direct Pieri expansion and filtering.
SchurExpansion interchange_side(int d, int a, int b, int p, int q);

struct IdentityResult {
    bool equal = false;
    bool vacuous = false;  // an h-index on the right-hand side was negative
};

IdentityResult verify_schur_interchange(int d, int a, int b, int p, int q);
bool verify_refinement(int n, int m, int r);
bool verify_schur_sum(int n, int m);

}  // namespace oharm
