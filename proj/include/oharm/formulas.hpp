#pragma once

#include <gmpxx.h>

#include "oharm/schur.hpp"

namespace oharm {

// Signed formula: sum_{d=0}^{r} q^d {SF_d - SF_{d-1}}_{first parts <= n+m-d-r}
// with SF_{-1} = 0.
SchurExpansion grfrob_signed(int n, int m, int r);

// Sign-free formula counting H+(d, lam1, lam2) per graded component.
SchurExpansion grfrob_bad(int n, int m, int r);

// Sign-free formula grading H(r, lam1, lam2) by n+m-r-width.
SchurExpansion grfrob_good(int n, int m, int r);

// Upper rook locus: sum_{d=0}^{min(n,m)} q^d {SF_d}_{first parts <= n+m-d-r}.
SchurExpansion grfrob_uz(int n, int m, int r);

// Involution locus M_{n,a} (a fixed points, a = n mod 2):
// sum_d q^d {h_d[h_2] h_{n-2d} - h_{d-1}[h_2] h_{n-2d+2}}_{first part <= n-2d+a}.
SchurExpansion grfrob_involution(int n, int a);

// Dimension of the irreducible V^lam by the hook length formula.
mpz_class hook_dim(const Partition& lam);

// Hilbert series: each s_a (x) s_b contributes dim V^a * dim V^b.
QPoly hilbert(const SchurExpansion& f);

}  // namespace oharm
