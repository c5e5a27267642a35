#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "deltakit/errors.hpp"
#include "deltakit/generators.hpp"
#include "deltakit/structure.hpp"

using namespace deltakit;

namespace {

SetSystem sys(std::string_view chars, const std::vector<std::vector<std::string>>& fam) {
    return SetSystem::from_labels(GroundSet::from_chars(chars), fam);
}

}  // namespace

TEST_CASE("obstructions are dual or self-dual as expected") {
    CHECK(dual(x1()) == x2());
    CHECK(dual(x0()) == x0());
}

TEST_CASE("obstructions are not twists of matroids") {
    for (const auto& d : {x0(), x1(), x2()}) {
        CHECK(!is_twist_of_matroid_em(d));
        CHECK(!is_twist_of_matroid_search(d).has_value());
        CHECK(twist_sets_yielding_matroid(d).empty());
    }
}

TEST_CASE("a matroid is its own twist witness") {
    const DeltaMatroid m = DeltaMatroid::validated(sys("abc", {{"a", "b"}, {"a", "c"}}));
    CHECK(is_twist_of_matroid_em(m));
    CHECK(is_twist_of_matroid_search(m) == ElemSet{});
}

TEST_CASE("isomorphism finds a relabeling") {
    const SetSystem a = sys("abc", {{"a"}, {"a", "b"}});
    const SetSystem b = sys("abc", {{"c"}, {"b", "c"}});
    const auto r = is_isomorphic(a, b);
    REQUIRE(r.has_value());
    CHECK((*r)[0] == 2);
    CHECK((*r)[1] == 1);
    CHECK(!is_isomorphic(a, sys("abc", {{"a"}, {"b", "c"}})).has_value());
}

TEST_CASE("minor search finds an obstruction inside a larger system") {
    // X0 with a coloop attached.
    const DeltaMatroid d = DeltaMatroid::validated(sys("ab", {{"b"}, {"a", "b"}}));
    const auto w = has_minor(d, x0());
    REQUIRE(w.has_value());
    CHECK(w->contract_set == ElemSet::single(1));
    const auto ex = find_excluded_minor(d);
    REQUIRE(ex.has_value());
    CHECK(ex->which == Obstruction::X0);
}

TEST_CASE("eight-element example twists giving a matroid") {
    const DeltaMatroid d = fig1_delta_matroid();
    const GroundSet& g = d.ground();
    const std::vector<ElemSet> expected = {
        g.set_of({"1", "6", "7"}), g.set_of({"2", "6", "7"}),
        g.set_of({"1", "3", "4", "5", "8"}), g.set_of({"2", "3", "4", "5", "8"})};
    CHECK(twist_sets_yielding_matroid(d) == expected);
    CHECK(is_twist_of_matroid_search(d) == expected[0]);
    for (const ElemSet b : expected) CHECK(is_matroid(twist(d, b)));
}

TEST_CASE("separator criterion agrees with direct twisting") {
    const DeltaMatroid d = DeltaMatroid::validated(sys("abc", {{"a"}, {"a", "b"}, {"a", "c"}, {"a", "b", "c"}}));
    for_each_subset(d.all(), [&](ElemSet a) {
        CHECK(twist_is_matroid(d, a) == is_matroid(twist(d, a)));
        if (!a.empty() && a != d.all()) CHECK(separator_criterion(d, a) == is_matroid(twist(d, a)));
    });
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(all_delta_matroids(5), SizeGuardError);
    CHECK(all_delta_matroids(1).size() == 3);
}
