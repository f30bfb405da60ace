#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oharm/partition.hpp"

using namespace oharm;

namespace {

// Independent count: weakly decreasing sequences found by brute-force
// enumeration of compositions with non-increasing parts.
int count_partitions_brute(int n, int maxpart) {
    if (n == 0)
        return 1;
    int total = 0;
    for (int p = std::min(n, maxpart); p >= 1; --p)
        total += count_partitions_brute(n - p, p);
    return total;
}

// Cell-level horizontal strip test: every column of outer/inner holds at
// most one cell, by explicit cell enumeration.
bool strip_by_cells(const Partition& inner, const Partition& outer) {
    if (!contains(inner, outer))
        return false;
    std::vector<int> cells_in_col(outer.first() + 1, 0);
    for (int i = 1; i <= outer.length(); ++i)
        for (int j = inner.part(i) + 1; j <= outer.part(i); ++j)
            cells_in_col[j] += 1;
    for (int c = 1; c <= outer.first(); ++c)
        if (cells_in_col[c] > 1)
            return false;
    return true;
}

}  // namespace

TEST_CASE("partition normal form and equality") {
    CHECK(Partition{3, 2} == Partition(std::vector<int>{3, 2, 0, 0}));
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{4, 3, 3, 1}.size() == 11);
    CHECK(Partition{3, 1}.part(2) == 1);
    CHECK(Partition{3, 1}.part(5) == 0);
    CHECK(Partition{3, 2, 1}.str() == "[3,2,1]");
    CHECK(Partition{}.str() == "[]");
    CHECK_THROWS(Partition{1, 2});
}

TEST_CASE("partitions_of: counts and canonical order") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(3) ==
          std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    CHECK(partitions_of(4).size() == 5);
    const int pn[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        CHECK(static_cast<int>(partitions_of(n).size()) == pn[n]);
        CHECK(static_cast<int>(partitions_of(n).size()) == count_partitions_brute(n, n));
    }
    // strictly increasing in the canonical order, hence no duplicates
    for (int n = 0; n <= 9; ++n) {
        auto ps = partitions_of(n);
        PartitionLess less;
        for (size_t i = 0; i + 1 < ps.size(); ++i)
            CHECK(less(ps[i], ps[i + 1]));
    }
}

TEST_CASE("containment") {
    CHECK(contains(Partition{3, 3, 1, 1}, Partition{4, 3, 3, 1}));
    Partition lam{4, 2, 1};
    CHECK(contains(lam, lam));
    CHECK_FALSE(contains(Partition{2, 2}, Partition{3, 1}));
    CHECK(contains(Partition{}, Partition{5}));
}

TEST_CASE("horizontal strips match the cell-level definition") {
    CHECK(is_horizontal_strip(Partition{3, 3, 1, 1}, Partition{4, 3, 3, 1}));
    Partition mu{2, 1};
    CHECK(is_horizontal_strip(mu, mu));
    CHECK_FALSE(is_horizontal_strip(Partition{1}, Partition{3, 2}));
    for (int n = 0; n <= 10; ++n)
        for (const Partition& outer : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition& inner : partitions_of(k))
                    if (contains(inner, outer))
                        CHECK(is_horizontal_strip(inner, outer) == strip_by_cells(inner, outer));
}

TEST_CASE("pieri_h") {
    auto got = pieri_h(Partition{2, 1}, 2);
    std::vector<Partition> want{Partition{4, 1}, Partition{3, 2}, Partition{3, 1, 1},
                                Partition{2, 2, 1}};
    CHECK(got == want);
    CHECK(pieri_h(Partition{3, 2}, 0) == std::vector<Partition>{Partition{3, 2}});
    CHECK(pieri_h(Partition{}, 3) == std::vector<Partition>{Partition{3}});

    // agrees with filtering all partitions by the strip test
    for (int b = 0; b <= 6; ++b)
        for (const Partition& base : partitions_of(b))
            for (int k = 0; k <= 4; ++k) {
                std::vector<Partition> brute;
                for (const Partition& lam : partitions_of(b + k))
                    if (is_horizontal_strip(base, lam))
                        brute.push_back(lam);
                CHECK(pieri_h(base, k) == brute);
            }
}

TEST_CASE("even partitions") {
    CHECK(even_partitions(2) == std::vector<Partition>{Partition{2}});
    CHECK(even_partitions(4) == std::vector<Partition>{Partition{4}, Partition{2, 2}});
    CHECK(even_partitions(3).empty());
    CHECK(even_partitions(0) == std::vector<Partition>{Partition{}});
}
