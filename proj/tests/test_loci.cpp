#include <doctest.h>

#include <algorithm>
#include <set>

#include "oharm/loci.hpp"

using namespace oharm;

namespace {

// Independent count of size-r placements by row-choice recursion.
long count_rook_brute(int n, int m, int r, int row = 1, long used_mask = 0) {
    if (r == 0)
        return 1;
    if (row > n)
        return 0;
    long total = count_rook_brute(n, m, r, row + 1, used_mask);
    for (int col = 1; col <= m; ++col)
        if (!(used_mask & (1L << col)))
            total += count_rook_brute(n, m, r - 1, row + 1, used_mask | (1L << col));
    return total;
}

Perm transposition(int n, int i, int j) {
    Perm g = identity_perm(n);
    std::swap(g[i - 1], g[j - 1]);
    return g;
}

}  // namespace

TEST_CASE("rook enumeration counts") {
    CHECK(enumerate_rook(2, 2, 1).size() == 4);
    CHECK(enumerate_rook(4, 4, 4).size() == 24);
    CHECK(enumerate_rook(2, 3, 3).empty());
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m)
            for (int r = 0; r <= std::min(n, m); ++r)
                CHECK(static_cast<long>(enumerate_rook(n, m, r).size()) ==
                      count_rook_brute(n, m, r));
}

TEST_CASE("uz enumeration") {
    CHECK(enumerate_uz(2, 2, 1).size() == 6);
    CHECK(enumerate_uz(3, 3, 3).size() == 6);
    CHECK(enumerate_uz(2, 2, 0).size() == 7);
}

TEST_CASE("involution enumeration") {
    CHECK(enumerate_involutions(3, 1).size() == 3);
    CHECK(enumerate_involutions(4, 0).size() == 3);
    CHECK(enumerate_involutions(3, 0).empty());
    CHECK(enumerate_involutions(5, 1).size() == 15);
    for (const InvolutionPoint& w : enumerate_involutions(5, 1))
        CHECK(w.fixed_points() == 1);
}

TEST_CASE("rook action") {
    RookPlacement p{{{1, 1}}};
    CHECK(act_rook(identity_perm(2), identity_perm(2), p) == p);
    Perm swap2 = transposition(2, 1, 2);
    CHECK(act_rook(swap2, swap2, p) == RookPlacement{{{2, 2}}});

    // orbit of {(1,1)} under S_2 x S_2 is the whole locus
    std::set<std::vector<Cell>> orbit;
    for (const Perm& g : {identity_perm(2), swap2})
        for (const Perm& h : {identity_perm(2), swap2})
            orbit.insert(act_rook(g, h, p).cells);
    CHECK(orbit.size() == 4);

    // locus stability and bijectivity under sampled permutations
    for (int n = 2; n <= 4; ++n)
        for (int r = 0; r <= n; ++r) {
            auto locus = enumerate_rook(n, n, r);
            Perm g = transposition(n, 1, n);
            std::set<std::vector<Cell>> seen;
            for (const RookPlacement& q : locus) {
                RookPlacement img = act_rook(g, g, q);
                CHECK(img.size() == q.size());
                seen.insert(img.cells);
            }
            CHECK(seen.size() == locus.size());
        }
}

TEST_CASE("involution action") {
    InvolutionPoint w{3, {{1, 2}}};
    CHECK(act_involution(identity_perm(3), w) == w);
    CHECK(act_involution(transposition(3, 1, 3), w) == InvolutionPoint{3, {{2, 3}}});

    std::set<std::vector<std::pair<int, int>>> orbit;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            orbit.insert(act_involution(transposition(3, i, j), w).pairs);
    CHECK(orbit.size() == 3);
}

TEST_CASE("action composition") {
    Perm g1 = transposition(3, 1, 2), g2 = transposition(3, 2, 3);
    Perm composed(3);
    for (int i = 0; i < 3; ++i)
        composed[i] = g1[g2[i] - 1];
    for (const RookPlacement& p : enumerate_rook(3, 3, 2))
        CHECK(act_rook(composed, composed, p) == act_rook(g1, g1, act_rook(g2, g2, p)));
}

namespace {

void all_perms(int n, std::vector<Perm>& out) {
    Perm g = identity_perm(n);
    do {
        out.push_back(g);
    } while (std::next_permutation(g.begin(), g.end()));
}

}  // namespace

TEST_CASE("locus stability under the whole group at small sizes") {
    std::vector<Perm> s3;
    all_perms(3, s3);
    for (int r = 0; r <= 3; ++r) {
        auto locus = enumerate_rook(3, 3, r);
        std::set<std::vector<Cell>> members;
        for (const RookPlacement& p : locus)
            members.insert(p.cells);
        for (const Perm& g : s3)
            for (const Perm& h : s3) {
                std::set<std::vector<Cell>> image;
                for (const RookPlacement& p : locus) {
                    RookPlacement q = act_rook(g, h, p);
                    CHECK(members.count(q.cells) == 1);
                    image.insert(q.cells);
                }
                CHECK(image.size() == locus.size());
            }
    }
    for (int a = 0; a <= 3; ++a) {
        auto locus = enumerate_involutions(3, a);
        std::set<std::vector<std::pair<int, int>>> members;
        for (const InvolutionPoint& w : locus)
            members.insert(w.pairs);
        for (const Perm& g : s3)
            for (const InvolutionPoint& w : locus)
                CHECK(members.count(act_involution(g, w).pairs) == 1);
    }
}

TEST_CASE("monomial evaluation") {
    RookPlacement point{{{1, 1}, {2, 2}}};
    CHECK(eval_rook_monomial(RookPlacement{}, point) == 1);
    CHECK(eval_rook_monomial(point, point) == 1);
    CHECK(eval_rook_monomial(RookPlacement{{{1, 2}}}, point) == 0);

    CHECK(eval_general_monomial({{Cell(1, 1), 2}}, point.cells) == 1);
    CHECK(eval_general_monomial({{Cell(1, 1), 1}, {Cell(2, 2), 1}}, point.cells) == 1);
    CHECK(eval_general_monomial({{Cell(1, 2), 1}}, point.cells) == 0);
}

TEST_CASE("involution matrix support") {
    InvolutionPoint w{4, {{1, 3}}};
    std::vector<Cell> cells = w.cells();
    CHECK(cells == std::vector<Cell>{{1, 3}, {2, 2}, {3, 1}, {4, 4}});
}
