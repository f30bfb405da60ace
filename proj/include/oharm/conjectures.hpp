#pragma once

#include "oharm/report.hpp"
#include "oharm/schur.hpp"

namespace oharm {

/* Equivariant log-concavity of the graded module encoded by grfrob_signed:
 * for each interior degree 0 < d < r, the irreducible multiplicities of
 * chi_{d-1} * chi_{d+1} are dominated by those of chi_d * chi_d (pointwise
 * character products decomposed over S_n x S_m). */
CheckReport check_log_concavity(int n, int m, int r);

// Coefficientwise dominance along each surjection chain column:
// slice_d(grfrob_signed(n,m,r)) >= slice_d(grfrob_signed(n,m,r+1)).
CheckReport check_surjection_chain(int n, int m);

/* Isomorphism region: slices at consecutive ranks agree exactly for
 * d <= min(n,m)-r-1 and dominate strictly above that line. */
CheckReport check_surj_to_isom(int n, int m);

/* Upper-rook identification: for 0 <= d < r < min(n,m),
 * grfrob_uz(n,m,r)[d+1] - grfrob_uz(n,m,r+1)[d] equals
 * grfrob_signed(n,m,r)[d+1], and the difference is Schur-positive. With
 * with_oracle set, also recomputes grfrob_uz from the locus oracle. */
CheckReport check_uz_identity(int n, int m, bool with_oracle = false);

}  // namespace oharm
