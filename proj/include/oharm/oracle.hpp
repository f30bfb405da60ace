#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "oharm/characters.hpp"
#include "oharm/linalg.hpp"
#include "oharm/loci.hpp"
#include "oharm/report.hpp"
#include "oharm/schur.hpp"

namespace oharm {

/* Monomial sets used as row families of the evaluation matrix. All loci here
 * consist of 0/1 matrices, so a monomial evaluates like its squarefree
 * support; the smaller families span the same spaces and the redundant modes
 * exist to cross-check that claim. */
enum class BasisMode {
    placements,  // supports with distinct rows and columns
    subsets,     // all distinct-cell supports
    monomials,   // every monomial of the polynomial ring, with multiplicities
};

/* A finite locus of 0/1 matrices and the group acting on it. Points are
 * sorted cell sets in a fixed canonical order. */
struct Locus {
    enum class Action { rowcol, conjugation };

    int nrows = 0, ncols = 0;
    Action action = Action::rowcol;
    int n = 0, m = 0;  // S_n x S_m for rowcol; S_n (with m = 0) for conjugation
    std::vector<std::vector<Cell>> points;
};

Locus rook_locus(int n, int m, int r);
Locus uz_locus(int n, int m, int r);
Locus involution_locus(int n, int a);

// dim R(Z)_d = rank E_{<=d} - rank E_{<=d-1} for d = 0..dmax, where E_{<=d}
// evaluates the degree <= d monomial family at the locus points.
std::vector<int> oracle_hilbert(const Locus& locus, int dmax,
                                BasisMode mode = BasisMode::placements);

// Graded Frobenius image of R(Z) computed from exact traces of class
// representatives on the filtration spaces V_{<=d}. Throws on any internal
// inconsistency (non-integral trace or multiplicity, negative multiplicity,
// identity trace != dimension).
SchurExpansion oracle_graded_frobenius(const Locus& locus, int dmax,
                                       BasisMode mode = BasisMode::placements);

/* Sparse polynomial over the board variables x_{i,j}: each monomial is a
 * sorted (cell -> positive exponent) map. */
using BoardMonomial = std::map<Cell, int>;
using BoardPoly = std::map<BoardMonomial, mpz_class>;

int poly_degree(const BoardPoly& f);

// Generators of the rook ideal: the sum of all variables, same-row and
// same-column products, products of n-r+1 distinct row sums and of m-r+1
// distinct column sums, and m(R) for every placement with more than r rooks.
std::vector<BoardPoly> rook_ideal_generators(int n, int m, int r);

// Generators of the involution ideal: row and column sums, same-row and
// same-column products, diagonal differences x_{i,j} - x_{j,i}, the diagonal
// sum, products of a+1 diagonal variables, and m(w) for involutions with
// fewer than a fixed points.
std::vector<BoardPoly> involution_ideal_generators(int n, int a);

// Dimension of the degree-deg piece of the ideal generated by homogeneous
// gens inside the polynomial ring on an nrows x ncols board.
long ideal_degree_dim(const std::vector<BoardPoly>& gens, int deg, int nrows, int ncols);

// dim (gr I(Z))_deg via evaluation-matrix ranks.
long gr_ideal_dim(const Locus& locus, int deg);

// A homogeneous form lies in gr I(Z) iff its evaluation vector is spanned by
// evaluations of strictly lower-degree monomials.
bool gr_ideal_member(const BoardPoly& form, const Locus& locus);

// Degreewise check that gr I equals the generated ideal: every generator of
// degree d <= dmax is a member, and the graded dimensions agree.
CheckReport verify_ideal_equality(int n, int m, int r, int dmax);
CheckReport verify_involution_ideal(int n, int a, int dmax);

// Number of monomials of degree exactly deg in nvars variables.
long monomial_count(int nvars, int deg);

}  // namespace oharm
