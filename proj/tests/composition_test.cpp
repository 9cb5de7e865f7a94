#include <doctest.h>

#include <stdexcept>

#include "oqsym/composition.hpp"

using namespace oqsym;

TEST_CASE("lexicographic order") {
    CHECK(Composition{} < Composition{1});
    CHECK(Composition{2, 1} < Composition{2, 1, 3});  // proper prefix is smaller
    CHECK(Composition{1, 5} < Composition{2});        // first part decides
    CHECK(Composition{2} > Composition{1, 5});
    CHECK(Composition{1, 2} == Composition{1, 2});
    CHECK((Composition{} <=> Composition{}) == std::strong_ordering::equal);
}

TEST_CASE("concat") {
    CHECK(concat(Composition{1}, Composition{2, 3}) == Composition{1, 2, 3});
    CHECK(concat(Composition{}, Composition{4}) == Composition{4});
    CHECK(concat(Composition{2, 2}, Composition{}) == Composition{2, 2});
}

TEST_CASE("dotplus") {
    CHECK(dotplus(Composition{1, 2}, Composition{3}) == Composition{4, 2});
    CHECK(dotplus(Composition{}, Composition{5, 1}) == Composition{5, 1});
    CHECK(dotplus(Composition{1, 1, 1}, Composition{2, 2, 2}) == Composition{3, 3, 3});
}

TEST_CASE("reverse") {
    CHECK(reversed(Composition{1, 2, 3}) == Composition{3, 2, 1});
    CHECK(reversed(Composition{}) == Composition{});
    CHECK(reversed(Composition{7}) == Composition{7});
}

TEST_CASE("weight and length") {
    CHECK(Composition{}.weight() == 0);
    CHECK(Composition{}.length() == 0);
    CHECK(Composition{2, 3, 2}.weight() == 7);
    CHECK(Composition{2, 3, 2}.length() == 3);
}

TEST_CASE("zero parts are rejected") {
    CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
}

TEST_CASE("text forms") {
    CHECK(Composition{1, 2, 3}.str() == "(1,2,3)");
    CHECK(Composition{}.str() == "()");
    CHECK(Composition::parse("(1,2,3)") == Composition{1, 2, 3});
    CHECK(Composition::parse("()") == Composition{});
    CHECK(Composition::parse("232") == Composition{2, 3, 2});
    CHECK(Composition::parse("(1,12)") == Composition{1, 12});
    CHECK_THROWS_AS(Composition::parse("1a2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("102"), std::invalid_argument);  // compact part 0
}

TEST_CASE("hash is structural") {
    CompositionHash h;
    CHECK(h(Composition{1, 2}) == h(Composition{1, 2}));
    CHECK(h(Composition{}) != h(Composition{1}));  // almost surely
}
