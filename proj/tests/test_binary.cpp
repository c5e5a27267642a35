#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <string>
#include <vector>

#include "deltakit/binary_matroid.hpp"
#include "deltakit/io.hpp"
#include "deltakit/polynomials.hpp"

using namespace deltakit;

namespace {

Gf2Matrix mat(const std::vector<std::string>& rows) {
    return Gf2Matrix::from_strings(GroundSet::numbered(static_cast<int>(rows[0].size())), rows);
}

SetSystem sys(int n, const std::vector<std::vector<std::string>>& fam) {
    return SetSystem::from_labels(GroundSet::numbered(n), fam);
}

// Vertex-edge incidence of K4 with one vertex row dropped.
Gf2Matrix k4() { return mat({"110100", "101010", "011001"}); }

// Proper 3-edge-colourings of K4, by brute force over all 3^6 assignments.
int k4_edge_colourings() {
    const std::array<std::array<int, 2>, 6> ends = {{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}};
    int count = 0;
    for (int code = 0; code < 729; ++code) {
        std::array<int, 6> c{};
        for (int i = 0, x = code; i < 6; ++i, x /= 3) c[static_cast<std::size_t>(i)] = x % 3;
        bool ok = true;
        for (std::size_t i = 0; i < 6 && ok; ++i)
            for (std::size_t j = i + 1; j < 6 && ok; ++j) {
                const bool share = ends[i][0] == ends[j][0] || ends[i][0] == ends[j][1] || ends[i][1] == ends[j][0] ||
                                   ends[i][1] == ends[j][1];
                if (share && c[i] == c[j]) ok = false;
            }
        count += ok;
    }
    return count;
}

}  // namespace

TEST_CASE("identity matrix gives the free matroid") {
    CHECK(matroid_of(mat({"10", "01"})) == Matroid::validated(sys(2, {{"1", "2"}})));
}

TEST_CASE("triangle matrix has every pair as a basis") {
    const Gf2Matrix c3 = mat({"110", "011"});
    CHECK(c3.rank() == 2);
    CHECK(matroid_of(c3) == Matroid::validated(sys(3, {{"1", "2"}, {"1", "3"}, {"2", "3"}})));
    const Gf2Subspace cyc = cycle_space(c3);
    CHECK(cyc.dim() == 1);
    CHECK(cyc.contains(ElemSet::full(3)));
    CHECK(bicycle_space(c3).dim() == 0);
    CHECK(cocycle_space(c3).dim() == 2);
    CHECK(is_eulerian(c3));
    CHECK(!is_bipartite(c3));
}

TEST_CASE("zero column is a loop") {
    const Matroid m = matroid_of(mat({"10"}));
    CHECK(is_loop(m, 1));
    CHECK(!is_loop(m, 0));
}

TEST_CASE("subspace operations") {
    const Gf2Subspace s(3, {ElemSet{0b011}, ElemSet{0b110}});
    CHECK(s.dim() == 2);
    CHECK(s.contains(ElemSet{0b101}));
    CHECK(!s.contains(ElemSet{0b001}));
    const Gf2Subspace perp = s.orthogonal_complement();
    CHECK(perp.dim() == 1);
    CHECK(perp.contains(ElemSet{0b111}));
    CHECK(s.intersect(perp).dim() == 0);
    CHECK(s.sum(perp).dim() == 3);
    CHECK(s.members().size() == 4);
}

TEST_CASE("K4 spaces and predicates") {
    const Gf2Matrix m = k4();
    CHECK(cycle_space(m).dim() == 3);
    CHECK(cocycle_space(m).dim() == 3);
    // Every vertex has odd degree, so K4 is not Eulerian; its triangles make it non-bipartite.
    CHECK(!is_eulerian(m));
    CHECK(!is_bipartite(m));
    CHECK(is_eulerian(m) == is_eulerian_bruteforce(matroid_of(m)));
    CHECK(circuits(matroid_of(m)).size() == 7);
}

TEST_CASE("dual representation gives the dual matroid") {
    const Gf2Matrix m = k4();
    CHECK(matroid_of(m.dual()) == dual(matroid_of(m)));
    CHECK(cycle_space(m.dual()) == cocycle_space(m));
}

TEST_CASE("binary Penrose of plane K4 counts its 3-edge-colourings") {
    const LaurentPoly p = penrose_binary(k4());
    CHECK(p == penrose_dm(matroid_of(k4())));
    // One component, so the ribbon-graph value at 3 is three times this one.
    CHECK(p.substitute(Var::L, LaurentPoly(3)) * 3 == LaurentPoly(k4_edge_colourings()));
    CHECK(k4_edge_colourings() == 6);
}

TEST_CASE("lower matroid of a twisted binary matroid decomposes") {
    const Gf2Matrix m = k4();
    const Matroid mm = matroid_of(m);
    for (std::uint64_t a = 0; a < 64; ++a) {
        const DeltaMatroid tw = twist(static_cast<const DeltaMatroid&>(mm), ElemSet{a});
        CHECK(twist_min_decomposition(mm, ElemSet{a}) == lower_matroid(tw));
        CHECK(twist_max_decomposition(mm, ElemSet{a}) == upper_matroid(tw));
    }
}

TEST_CASE("parallel pair twisted at one element has an Eulerian lower matroid") {
    // The pair is Eulerian and bipartite with bicycle space {{}, {1,2}}, so {1} is not a bicycle,
    // yet both elements become loops of the lower matroid.
    const Gf2Matrix m = mat({"11"});
    const ElemSet a = ElemSet::single(0);
    CHECK(is_eulerian(m));
    CHECK(is_bipartite(m));
    CHECK(!bicycle_space(m).contains(a));
    const Matroid low = lower_matroid(twist(static_cast<const DeltaMatroid&>(matroid_of(m)), a));
    CHECK(low == Matroid::validated(sys(2, {{}})));
    CHECK(bipartite_eulerian_twist_test(m, a).second);
    CHECK(!bipartite_eulerian_twist_test(m, a).first);
}

TEST_CASE("matrix text round trip") {
    const Gf2Matrix m = k4();
    const Gf2Matrix back = parse_matrix(serialize(m));
    CHECK(back.row_strings() == m.row_strings());
    CHECK(back.labels() == m.labels());
    CHECK_THROWS(parse_matrix(R"({"labels":["1","2"],"rows":["1"]})"));
    CHECK_THROWS(parse_matrix(R"({"labels":["1"],"rows":["2"]})"));
}
