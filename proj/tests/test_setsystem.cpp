#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "deltakit/errors.hpp"
#include "deltakit/io.hpp"
#include "deltakit/setsystem.hpp"

using namespace deltakit;

namespace {

SetSystem sys(std::string_view chars, const std::vector<std::vector<std::string>>& fam) {
    return SetSystem::from_labels(GroundSet::from_chars(chars), fam);
}

}  // namespace

TEST_CASE("element sets") {
    const ElemSet s = ElemSet::single(1).with(3);
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK(!s.contains(0));
    CHECK(s.subset_of(ElemSet::full(4)));
    CHECK(remove_position(s, 2) == ElemSet::single(1).with(2));
    int count = 0;
    for_each_subset(ElemSet::full(3), [&](ElemSet) { ++count; });
    CHECK(count == 8);
    CHECK(CanonicalLess{}(ElemSet::single(5), ElemSet::full(2)));
}

TEST_CASE("ground set labels and formatting") {
    const GroundSet g = GroundSet::numbered(3);
    CHECK(g.labels() == std::vector<std::string>{"1", "2", "3"});
    CHECK(g.index("2") == 1);
    CHECK(g.find("9") == -1);
    CHECK_THROWS_AS(g.index("9"), DomainError);
    CHECK(g.format(ElemSet::single(0).with(2)) == "{1,3}");
    CHECK(g.without(1).labels() == std::vector<std::string>{"1", "3"});
    CHECK_THROWS(GroundSet(std::vector<std::string>{"a", "a"}));
}

TEST_CASE("exchange axiom") {
    CHECK(validate_delta_matroid(sys("a", {{}, {"a"}})));
    CHECK(validate_delta_matroid(sys("ab", {{}, {"a", "b"}})));
    CHECK(!validate_delta_matroid(sys("abc", {{}, {"a", "b", "c"}})));
    CHECK_THROWS_AS(validate_delta_matroid(SetSystem(GroundSet::from_chars("a"), {})), ImproperSetSystem);
    CHECK_THROWS(DeltaMatroid::validated(sys("abc", {{}, {"a", "b", "c"}})));
}

TEST_CASE("twist is symmetric difference with every feasible set") {
    const SetSystem d = sys("ab", {{}, {"a", "b"}});
    CHECK(twist(d, d.ground().set_of({"a"})) == sys("ab", {{"a"}, {"b"}}));
    CHECK(dual(d) == twist(d, d.all()));
    CHECK(twist(twist(d, ElemSet::single(0)), ElemSet::single(0)) == d);
}

TEST_CASE("loop complementation toggles sets containing the element") {
    CHECK(loop_complement(sys("a", {{}}), ElemSet::single(0)) == sys("a", {{}, {"a"}}));
    CHECK(loop_complement(sys("a", {{}, {"a"}}), ElemSet::single(0)) == sys("a", {{}}));
    CHECK(loop_complement(sys("a", {{"a"}}), ElemSet::single(0)) == sys("a", {{"a"}}));
}

TEST_CASE("words apply left to right") {
    const SetSystem loop = sys("a", {{}});
    const ElemSet a = ElemSet::single(0);
    const std::vector<WordStep> twist_first = {{Generator::Twist, a}, {Generator::LoopComplement, a}};
    const std::vector<WordStep> loopc_first = {{Generator::LoopComplement, a}, {Generator::Twist, a}};
    CHECK(apply_word(loop, twist_first) == sys("a", {{"a"}}));
    CHECK(apply_word(loop, loopc_first) == sys("a", {{}, {"a"}}));
}

TEST_CASE("dual pivot of a set system") {
    // ((S*X)+X)*X on the single-loop system gives the single-element system with both sets.
    CHECK(dual_pivot(sys("a", {{"a"}}), ElemSet::single(0)) == sys("a", {{}, {"a"}}));
}

TEST_CASE("loops, coloops and the lower and upper matroids") {
    const SetSystem d = sys("abc", {{"a"}, {"a", "b"}, {"a", "c"}, {"a", "b", "c"}});
    CHECK(is_coloop(d, 0));
    CHECK(!is_loop(d, 1));
    CHECK(d_min(d) == 1);
    CHECK(lower_matroid(d) == Matroid::validated(sys("abc", {{"a"}})));
    CHECK(upper_matroid(d) == Matroid::validated(sys("abc", {{"a", "b", "c"}})));
    CHECK(is_loop(sys("ab", {{}, {"b"}}), 0));
    CHECK(element_kind(sys("a", {{"a"}}), 0) == ElementKind::Coloop);
    CHECK(element_kind(sys("a", {{}}), 0) == ElementKind::DmLoop);
    CHECK(element_kind(sys("ab", {{"a"}, {"b"}}), 0) == ElementKind::Ordinary);
}

TEST_CASE("even delta-matroids and matroids") {
    CHECK(is_even(sys("ab", {{}, {"a", "b"}})));
    CHECK(!is_even(sys("a", {{}, {"a"}})));
    CHECK(is_matroid(sys("ab", {{"a"}, {"b"}})));
    CHECK(!is_matroid(sys("ab", {{}, {"a", "b"}})));
}

TEST_CASE("deletion and contraction") {
    const DeltaMatroid d = DeltaMatroid::validated(sys("ab", {{}, {"a", "b"}}));
    // a is neither a loop nor a coloop: delete keeps sets avoiding a, contract keeps sets with a.
    CHECK(delete_element(d, 0) == DeltaMatroid::validated(sys("b", {{}})));
    CHECK(contract_element(d, 0) == DeltaMatroid::validated(sys("b", {{"b"}})));
    const DeltaMatroid c = DeltaMatroid::validated(sys("ab", {{"a"}, {"a", "b"}}));
    CHECK(delete_element(c, 0) == DeltaMatroid::validated(sys("b", {{}, {"b"}})));
}

TEST_CASE("direct sums") {
    const DeltaMatroid a = DeltaMatroid::validated(sys("a", {{}, {"a"}}));
    const DeltaMatroid b = DeltaMatroid::validated(sys("b", {{"b"}}));
    CHECK(direct_sum(a, b) == DeltaMatroid::validated(sys("ab", {{"b"}, {"a", "b"}})));
}

TEST_CASE("set system text round trip") {
    const SetSystem d = sys("abc", {{"a"}, {"b"}, {"c"}, {"a", "b", "c"}});
    CHECK(parse_set_system(serialize(d)) == d);
    CHECK(d.to_string() == "({a,b,c},{{a},{b},{c},{a,b,c}})");
    CHECK_THROWS_AS(parse_set_system(R"({"ground":["a"],"feasible":[["z"]]})"), ParseError);
    CHECK_THROWS_AS(parse_set_system(R"({"ground":["a"]})"), ParseError);
}

TEST_CASE("vf-safety of small systems") {
    CHECK(is_vf_safe(sys("a", {{}, {"a"}})));
    CHECK(is_vf_safe(sys("ab", {{}, {"a", "b"}})));
}
