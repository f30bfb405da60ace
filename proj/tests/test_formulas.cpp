#include <doctest.h>

#include <algorithm>

#include "oharm/formulas.hpp"

using namespace oharm;

namespace {

QPoly qpoly(std::initializer_list<std::pair<int, long>> terms) {
    QPoly p;
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("grfrob_signed worked values") {
    SchurExpansion f = grfrob_signed(2, 2, 1);
    CHECK(f.terms().size() == 4);
    CHECK(f.coefficient(Partition{2}, Partition{2}) == QPoly(1));
    CHECK(f.coefficient(Partition{2}, Partition{1, 1}) == QPoly::q_power(1));
    CHECK(f.coefficient(Partition{1, 1}, Partition{2}) == QPoly::q_power(1));
    CHECK(f.coefficient(Partition{1, 1}, Partition{1, 1}) == QPoly::q_power(1));

    SchurExpansion g = grfrob_signed(2, 2, 2);
    CHECK(g.terms().size() == 2);
    CHECK(g.coefficient(Partition{2}, Partition{2}) == QPoly(1));
    CHECK(g.coefficient(Partition{1, 1}, Partition{1, 1}) == QPoly::q_power(1));

    SchurExpansion h = grfrob_signed(4, 3, 0);
    CHECK(h.terms().size() == 1);
    CHECK(h.coefficient(Partition{4}, Partition{3}) == QPoly(1));

    CHECK_THROWS(grfrob_signed(2, 2, 3));
}

TEST_CASE("grfrob_bad equals signed") {
    CHECK(grfrob_bad(2, 2, 1) == grfrob_signed(2, 2, 1));
    SchurExpansion f = grfrob_bad(3, 3, 2);
    CHECK(f == grfrob_signed(3, 3, 2));
    // spot values from the hand expansion
    CHECK(f.coefficient(Partition{3}, Partition{3}) == QPoly(1));
    CHECK(f.coefficient(Partition{2, 1}, Partition{2, 1}) == qpoly({{1, 1}, {2, 1}}));
    CHECK(f.coefficient(Partition{1, 1, 1}, Partition{1, 1, 1}) == QPoly::q_power(2));
    CHECK(grfrob_bad(3, 2, 0) == grfrob_signed(3, 2, 0));
}

TEST_CASE("grfrob_good equals signed and collapses at q=1") {
    CHECK(grfrob_good(2, 2, 1) == grfrob_signed(2, 2, 1));
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int r = 0; r <= std::min(n, m); ++r) {
                SchurExpansion good = grfrob_good(n, m, r);
                CHECK(good == grfrob_signed(n, m, r));
                CHECK(good.ungraded() == sf(n, m, r));
            }
}

TEST_CASE("grfrob_uz") {
    SchurExpansion f = grfrob_uz(2, 2, 2);
    CHECK(f == grfrob_signed(2, 2, 2));  // UZ_{n,n,n} is the permutation locus
    SchurExpansion g = grfrob_uz(2, 2, 1);
    CHECK(hilbert(g).eval_one() == 6);
    CHECK(hilbert(grfrob_uz(2, 2, 0)).eval_one() == 7);
}

TEST_CASE("grfrob_involution") {
    SchurExpansion f = grfrob_involution(3, 1);
    CHECK(f.terms().size() == 2);
    CHECK(f.coefficient(Partition{3}, Partition{}) == QPoly(1));
    CHECK(f.coefficient(Partition{2, 1}, Partition{}) == QPoly::q_power(1));

    SchurExpansion id5 = grfrob_involution(5, 5);
    CHECK(id5.terms().size() == 1);
    CHECK(id5.coefficient(Partition{5}, Partition{}) == QPoly(1));

    SchurExpansion m40 = grfrob_involution(4, 0);
    CHECK(hilbert(m40).eval_one() == 3);  // |M_{4,0}| = 3

    CHECK_THROWS(grfrob_involution(3, 0));
}

TEST_CASE("hook dims and hilbert") {
    CHECK(hook_dim(Partition{3}) == 1);
    CHECK(hook_dim(Partition{2, 1}) == 2);
    CHECK(hook_dim(Partition{1, 1, 1}) == 1);
    CHECK(hook_dim(Partition{3, 2}) == 5);
    CHECK(hook_dim(Partition{}) == 1);

    CHECK(hilbert(grfrob_signed(2, 2, 1)) == qpoly({{0, 1}, {1, 3}}));
    CHECK(hilbert(grfrob_signed(3, 3, 2)) == qpoly({{0, 1}, {1, 8}, {2, 9}}));
}

TEST_CASE("schur positivity and top degree") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int r = 0; r <= std::min(n, m); ++r) {
                SchurExpansion f = grfrob_signed(n, m, r);
                CHECK(f.schur_positive());
                CHECK(f.top_q_degree() <= r);
            }
}
