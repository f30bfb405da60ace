#pragma once

#include <gmpxx.h>

#include <vector>

#include "oharm/linalg.hpp"
#include "oharm/loci.hpp"
#include "oharm/partition.hpp"
#include "oharm/schur.hpp"

namespace oharm {

struct ConjClass {
    Partition cycle_type;
    mpz_class size;  // n! / z_lambda
};

// Conjugacy classes of S_n in canonical partition order. n = 0 gives the
// single class of the trivial group.
std::vector<ConjClass> conj_classes(int n);

mpz_class factorial(int n);

// Irreducible character value chi^lam on the class of cycle type cls,
// via recursive border-strip removal. Memoized.
mpz_class mn_character(const Partition& lam, const Partition& cls);

// A concrete permutation of cycle type cls (cycles laid out left to right).
Perm class_representative(const Partition& cls);

/* Decomposes a class function on S_n x S_m into irreducible multiplicities
 * and returns them as a Schur expansion with constant coefficients. chi is
 * indexed over conj_classes(n) x conj_classes(m) in row-major order; m = 0
 * handles a plain S_n class function. Throws if any multiplicity is not an
 * integer (a genuine character always gives integers). */
SchurExpansion frobenius_from_character(const std::vector<Rational>& chi, int n, int m);

// The character of the coefficient of q^e in f, as a class function indexed
// like frobenius_from_character's input.
std::vector<Rational> character_of_slice(const SchurExpansion& f, int e);

}  // namespace oharm
