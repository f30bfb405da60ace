#include <doctest.h>

#include "oharm/characters.hpp"
#include "oharm/formulas.hpp"

using namespace oharm;

TEST_CASE("conjugacy classes") {
    auto cls = conj_classes(3);
    REQUIRE(cls.size() == 3);
    CHECK(cls[0].cycle_type == Partition{3});
    CHECK(cls[0].size == 2);
    CHECK(cls[1].cycle_type == Partition{2, 1});
    CHECK(cls[1].size == 3);
    CHECK(cls[2].size == 1);
    for (int n = 0; n <= 7; ++n) {
        mpz_class total = 0;
        for (const ConjClass& c : conj_classes(n))
            total += c.size;
        CHECK(total == factorial(n));
    }
}

TEST_CASE("murnaghan-nakayama values") {
    // trivial and sign representations
    for (int n = 1; n <= 6; ++n)
        for (const ConjClass& c : conj_classes(n)) {
            CHECK(mn_character(Partition{n}, c.cycle_type) == 1);
            int transpositions = 0;
            for (int p : c.cycle_type.parts())
                transpositions += p - 1;
            mpz_class sign = transpositions % 2 ? -1 : 1;
            std::vector<int> ones(n, 1);
            CHECK(mn_character(Partition(ones), c.cycle_type) == sign);
        }
    CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK_THROWS(mn_character(Partition{2}, Partition{3}));

    // identity column gives hook-length dimensions
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> ones(n, 1);
        Partition id(ones);
        for (const Partition& lam : partitions_of(n))
            CHECK(mn_character(lam, id) == hook_dim(lam));
    }

    // column orthogonality: sum_lam chi(c)^2 = z_c
    for (int n = 1; n <= 7; ++n) {
        mpz_class order = factorial(n);
        for (const ConjClass& c : conj_classes(n)) {
            mpz_class acc = 0;
            for (const Partition& lam : partitions_of(n)) {
                mpz_class v = mn_character(lam, c.cycle_type);
                acc += v * v;
            }
            CHECK(acc * c.size == order);
        }
    }
}

TEST_CASE("class representative") {
    Perm g = class_representative(Partition{2, 1});
    CHECK(g == Perm{2, 1, 3});
    Perm h = class_representative(Partition{3});
    CHECK(h == Perm{2, 3, 1});
}

TEST_CASE("frobenius of the regular representation") {
    // S_3 regular character (6, 0, 0) -> s3 + 2 s21 + s111
    std::vector<Rational> chi{Rational(0), Rational(0), Rational(6)};
    SchurExpansion f = frobenius_from_character(chi, 3, 0);
    CHECK(f.coefficient(Partition{3}, Partition{}).at(0) == 1);
    CHECK(f.coefficient(Partition{2, 1}, Partition{}).at(0) == 2);
    CHECK(f.coefficient(Partition{1, 1, 1}, Partition{}).at(0) == 1);
}

TEST_CASE("frobenius of the trivial character") {
    std::vector<Rational> chi(conj_classes(4).size(), Rational(1));
    SchurExpansion f = frobenius_from_character(chi, 4, 0);
    CHECK(f.terms().size() == 1);
    CHECK(f.coefficient(Partition{4}, Partition{}).at(0) == 1);
}

TEST_CASE("non-integral multiplicity is flagged") {
    std::vector<Rational> chi(conj_classes(2).size(), Rational(0));
    chi.back() = Rational(1, 2);  // half the identity indicator is no character
    CHECK_THROWS(frobenius_from_character(chi, 2, 0));
}

TEST_CASE("character of a slice round-trips through frobenius") {
    SchurExpansion f = grfrob_signed(3, 2, 1);
    for (int d = 0; d <= 1; ++d) {
        std::vector<Rational> chi = character_of_slice(f, d);
        CHECK(frobenius_from_character(chi, 3, 2) == f.slice(d));
    }
}

TEST_CASE("permutation character of the rook locus gives SF_r") {
    // fixed points of each (g, h) class pair acting on Z_{2,2,1}
    auto locus = enumerate_rook(2, 2, 1);
    auto cn = conj_classes(2);
    std::vector<Rational> chi;
    for (const ConjClass& a : cn) {
        Perm g = class_representative(a.cycle_type);
        for (const ConjClass& b : cn) {
            Perm h = class_representative(b.cycle_type);
            int fixed = 0;
            for (const RookPlacement& p : locus)
                if (act_rook(g, h, p) == p)
                    ++fixed;
            chi.push_back(Rational(fixed));
        }
    }
    CHECK(frobenius_from_character(chi, 2, 2) == sf(2, 2, 1));
}
