#include <doctest.h>

#include "oharm/conjectures.hpp"

using namespace oharm;

TEST_CASE("log concavity at small sizes") {
    CHECK(check_log_concavity(2, 2, 2).ok);
    CHECK(check_log_concavity(3, 3, 2).ok);
    CHECK(check_log_concavity(3, 3, 3).ok);
    CHECK(check_log_concavity(4, 3, 3).ok);
}

TEST_CASE("surjection chain dominance") {
    CHECK(check_surjection_chain(3, 3).ok);
    CHECK(check_surjection_chain(4, 4).ok);
    CHECK(check_surjection_chain(2, 4).ok);
}

TEST_CASE("isomorphism region") {
    CHECK(check_surj_to_isom(2, 2).ok);
    CHECK(check_surj_to_isom(4, 5).ok);
    CHECK(check_surj_to_isom(4, 4).ok);
}

TEST_CASE("upper rook identities") {
    CHECK(check_uz_identity(3, 3).ok);
    CHECK(check_uz_identity(2, 2).ok);
    CHECK(check_uz_identity(4, 4).ok);
    CHECK(check_uz_identity(2, 3, /*with_oracle=*/true).ok);
}

TEST_CASE("checkers are deterministic") {
    CheckReport a = check_log_concavity(4, 4, 3);
    CheckReport b = check_log_concavity(4, 4, 3);
    CHECK(a.ok == b.ok);
    CHECK(a.lines == b.lines);
    CheckReport c = check_surj_to_isom(4, 4);
    CheckReport d = check_surj_to_isom(4, 4);
    CHECK(c.lines == d.lines);
}
