#include <doctest.h>

#include "oharm/formulas.hpp"
#include "oharm/render.hpp"

using namespace oharm;

TEST_CASE("term rendering in canonical order") {
    std::string got = render_terms(grfrob_signed(2, 2, 1));
    CHECK(got ==
          "q^0  s[2]*s[2]  1\n"
          "q^1  s[2]*s[1,1]  1\n"
          "q^1  s[1,1]*s[2]  1\n"
          "q^1  s[1,1]*s[1,1]  1\n");
}

TEST_CASE("record rendering") {
    std::string got = render_terms(grfrob_signed(2, 2, 2), true);
    CHECK(got ==
          "kind=term q=0 l1=[2] l2=[2] c=1\n"
          "kind=term q=1 l1=[1,1] l2=[1,1] c=1\n");
}

TEST_CASE("single factor rendering omits the second slot") {
    std::string got = render_terms(grfrob_involution(3, 1));
    CHECK(got ==
          "q^0  s[3]  1\n"
          "q^1  s[2,1]  1\n");
    CHECK(render_terms(grfrob_involution(3, 1), true) ==
          "kind=term q=0 l1=[3] c=1\n"
          "kind=term q=1 l1=[2,1] c=1\n");
}

TEST_CASE("partition parsing") {
    CHECK(parse_partition("[3,2,1]") == Partition{3, 2, 1});
    CHECK(parse_partition("3,2,1") == Partition{3, 2, 1});
    CHECK(parse_partition("[]") == Partition{});
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS(parse_partition("[2,3]"));
}
