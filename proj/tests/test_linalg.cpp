#include <doctest.h>

#include <algorithm>
#include <random>

#include "oharm/linalg.hpp"

using namespace oharm;

TEST_CASE("span builder rank and coordinates") {
    SpanBuilder sb(3);
    std::vector<Rational> c;
    CHECK(sb.add({Rational(1), Rational(0), Rational(1)}, &c) == 0);
    CHECK(c == std::vector<Rational>{Rational(1)});

    CHECK(sb.add({Rational(0), Rational(2), Rational(0)}, &c) == 1);
    CHECK(sb.rank() == 2);

    // dependent row: v = raw0 + raw1/2
    CHECK(sb.add({Rational(1), Rational(1), Rational(1)}, &c) == -1);
    CHECK(c == std::vector<Rational>{Rational(1), Rational(1, 2)});

    CHECK(sb.in_span({Rational(2), Rational(0), Rational(2)}, 1));
    CHECK_FALSE(sb.in_span({Rational(0), Rational(1), Rational(0)}, 1));
    CHECK(sb.in_span({Rational(0), Rational(1), Rational(0)}, 2));
}

TEST_CASE("matrix rank independent of row order") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 5, cols = 4;
        ExactMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                a.at(i, j) = Rational(static_cast<int>(rng() % 3) - 1);
        int want = a.rank();
        // shuffle rows
        std::vector<int> order(rows);
        for (int i = 0; i < rows; ++i)
            order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        ExactMatrix b(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                b.at(i, j) = a.at(order[i], j);
        CHECK(b.rank() == want);
    }
}

TEST_CASE("exact solve") {
    ExactMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = 3;
    std::vector<Rational> x = ExactMatrix::solve(a, {Rational(5), Rational(10)});
    CHECK(x[0] == Rational(1));
    CHECK(x[1] == Rational(3));
    CHECK(a.trace() == Rational(5));
}
