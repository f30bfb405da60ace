#include <doctest.h>

#include <algorithm>

#include "oharm/lattice.hpp"

using namespace oharm;

namespace {

const Partition kMu{6, 3, 1};
const Partition kLam1{6, 5, 2};
const Partition kLam2{6, 4, 3};

}  // namespace

TEST_CASE("worked lattice path") {
    LatticePath p = lattice_path(kMu, kLam1, kLam2, 7);
    std::vector<int> want{-1, 1, 0, 1, 0, -1, -1};
    for (int i = 1; i <= 7; ++i)
        CHECK(p.step(i) == want[i - 1]);
    CHECK(p.height(0) == 0);
    CHECK(p.height(7) == -1);
    CHECK(p.step(9) == -1);      // implicit SE tail
    CHECK(p.height(9) == -3);

    Partition mu{2, 1};
    LatticePath flat = lattice_path(mu, mu, mu, 4);
    for (int i = 1; i <= 4; ++i)
        CHECK(flat.step(i) == -1);

    LatticePath up = lattice_path(Partition{}, Partition{3}, Partition{3}, 4);
    CHECK(up.step(1) == 1);
    CHECK(up.step(3) == 1);
    CHECK(up.step(4) == -1);

    CHECK_THROWS(lattice_path(Partition{1}, Partition{1, 1, 1}, Partition{3}, 3));
}

TEST_CASE("reflection pairs") {
    auto pairs = reflection_pairs(lattice_path(kMu, kLam1, kLam2, 7));
    CHECK(pairs == std::vector<std::pair<int, int>>{{2, 7}, {4, 6}});

    auto none = reflection_pairs(LatticePath({1, 1, 1}));
    CHECK(none.empty());

    auto one = reflection_pairs(LatticePath({1, -1}));
    CHECK(one == std::vector<std::pair<int, int>>{{1, 2}});

    // width extends the stored prefix far enough to close tail pairs
    CHECK(width(Partition{}, Partition{1}, Partition{1}) == 2);
}

TEST_CASE("width") {
    CHECK(width(kMu, kLam1, kLam2) == 7);
    CHECK(width(Partition{3}, Partition{3}, Partition{3}) == 3);
    CHECK(width(Partition{}, Partition{1}, Partition{1}) == 2);
    CHECK(width(Partition{1}, Partition{2}, Partition{2}) == 3);
}

TEST_CASE("hori sets") {
    CHECK(hori_set(1, Partition{2}, Partition{2}) == std::vector<Partition>{Partition{1}});
    CHECK(hori_set(0, Partition{1, 1}, Partition{2}).empty());
    Partition lam{3, 1};
    CHECK(hori_set(4, lam, lam) == std::vector<Partition>{lam});

    CHECK(hori_positive(1, Partition{2}, Partition{2}, 2, 2, 2).empty());
    CHECK(hori_positive(0, Partition{2}, Partition{2}, 2, 2, 1) ==
          std::vector<Partition>{Partition{}});
    CHECK_THROWS(hori_positive(2, Partition{2}, Partition{2}, 2, 2, 1));  // d > r

    // the worked strip pair dips below the axis at the first step, so its
    // inner partition sits in H(10) but not in H+(10)
    {
        auto all = hori_set(10, kLam1, kLam2);
        auto plus = hori_positive(10, kLam1, kLam2, 13, 13, 10);
        CHECK(std::find(all.begin(), all.end(), kMu) != all.end());
        CHECK(std::find(plus.begin(), plus.end(), kMu) == plus.end());
    }

    CHECK(hori_wid(0, Partition{2}, Partition{2}, 2, 2, 1) ==
          std::vector<Partition>{Partition{1}});
    CHECK(hori_wid(1, Partition{2}, Partition{2}, 2, 2, 1).empty());
}

TEST_CASE("phi worked instance") {
    Partition mu{13, 8, 6, 5, 2, 2};
    StripContext ctx{Partition{13, 12, 7, 6, 2, 2, 1}, Partition{13, 13, 7, 5, 2, 2, 2},
                     43, 44, 36, 36};
    Partition nu = phi(mu, ctx);
    CHECK(nu == Partition{13, 8, 6, 4, 2, 2});
    CHECK(phi_inverse(nu, ctx) == mu);
}

TEST_CASE("phi small instance") {
    StripContext ctx{Partition{2}, Partition{2}, 2, 2, 2, 1};
    CHECK(phi(Partition{1}, ctx) == Partition{});
    CHECK(phi_inverse(Partition{}, ctx) == Partition{1});
    CHECK_THROWS(phi(Partition{}, StripContext{Partition{2}, Partition{2}, 2, 2, 1, 0}));
}

TEST_CASE("left shadow worked instance") {
    StripContext ctx{Partition{2}, Partition{2}, 2, 2, 1, 0};
    CHECK(ls(Partition{}, ctx) == Partition{1});
    CHECK(ls_inverse(Partition{1}, ctx) == Partition{});
    CHECK_THROWS(ls(Partition{1}, StripContext{Partition{2}, Partition{2}, 2, 2, 2, 1}));
}

TEST_CASE("exhaustive bijection certification to 4") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            CheckReport rep = verify_bijections(n, m);
            CHECK(rep.ok);
        }
}

TEST_CASE("height formula") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m)
            for (const Partition& l1 : partitions_of(n))
                for (const Partition& l2 : partitions_of(m))
                    for (int d = 0; d <= std::min(n, m); ++d)
                        for (const Partition& mu : hori_set(d, l1, l2)) {
                            int base = std::max(l1.first(), l2.first());
                            LatticePath p = lattice_path(mu, l1, l2, base);
                            CHECK(p.height(base) == n + m - 2 * d - base);
                            CHECK(p.height(base + 2) == n + m - 2 * d - base - 2);
                        }
}

TEST_CASE("path dump format") {
    LatticePath p = lattice_path(Partition{1}, Partition{2}, Partition{2}, 2);
    CHECK(p.str() == "x=1 step=SE h=-1\nx=2 step=NE h=0\n");
}
