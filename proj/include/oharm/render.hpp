#pragma once

#include <string>

#include "oharm/partition.hpp"
#include "oharm/schur.hpp"

namespace oharm {

/* One line per (index pair, q-exponent) in canonical order:
 *   q^0  s[2]*s[2]  1
 * Single symmetric functions (deg2 == 0) drop the second factor. With
 * records set, lines read `kind=term q=0 l1=[2] l2=[2] c=1` instead. */
std::string render_terms(const SchurExpansion& f, bool records = false);

// Accepts "[3,2,1]", "3,2,1", "[]" or "" as a partition.
Partition parse_partition(const std::string& s);

}  // namespace oharm
