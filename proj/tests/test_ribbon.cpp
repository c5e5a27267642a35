#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "deltakit/io.hpp"
#include "deltakit/ribbon.hpp"
#include "deltakit/setsystem.hpp"

using namespace deltakit;

namespace {

// Edges are named by single letters with ends "x.0" and "x.1".
RibbonGraph graph(const std::vector<std::vector<std::string>>& rotations, const std::string& edges,
                  const std::string& twisted = "") {
    RotationSystem rs;
    rs.vertices = rotations;
    for (char c : edges) {
        const std::string l(1, c);
        rs.edges.push_back({l, {l + ".0", l + ".1"}, twisted.find(c) != std::string::npos});
    }
    return RibbonGraph::from_rotation_system(rs);
}

SetSystem sys(std::string_view chars, const std::vector<std::vector<std::string>>& fam) {
    return SetSystem::from_labels(GroundSet::from_chars(chars), fam);
}

RibbonGraph plane_loop() { return graph({{"a.0", "a.1"}}, "a"); }
RibbonGraph twisted_loop() { return graph({{"a.0", "a.1"}}, "a", "a"); }
RibbonGraph bridge() { return graph({{"a.0"}, {"a.1"}}, "a"); }
RibbonGraph torus() { return graph({{"a.0", "b.0", "a.1", "b.1"}}, "ab"); }
RibbonGraph triangle() { return graph({{"a.0", "c.1"}, {"a.1", "b.0"}, {"b.1", "c.0"}}, "abc"); }

}  // namespace

TEST_CASE("counts of a plane loop") {
    const RibbonGraph g = plane_loop();
    CHECK(g.vertices() == 1);
    CHECK(g.edges() == 1);
    CHECK(g.boundary_components() == 2);
    CHECK(g.euler_genus() == 0);
    CHECK(g.is_orientable());
}

TEST_CASE("a twisted loop lives in the projective plane") {
    const RibbonGraph g = twisted_loop();
    CHECK(g.boundary_components() == 1);
    CHECK(g.euler_genus() == 1);
    CHECK(!g.is_orientable());
}

TEST_CASE("two interlaced loops live on the torus") {
    const RibbonGraph g = torus();
    CHECK(g.vertices() == 1);
    CHECK(g.boundary_components() == 1);
    CHECK(g.euler_genus() == 2);
    CHECK(g.is_orientable());
}

TEST_CASE("isolated vertices count as vertices, faces and components") {
    RotationSystem rs;
    rs.isolated_vertices = 2;
    const RibbonGraph g = RibbonGraph::from_rotation_system(rs);
    CHECK(g.vertices() == 2);
    CHECK(g.boundary_components() == 2);
    CHECK(g.components() == 2);
    CHECK(g.euler_genus() == 0);
}

TEST_CASE("delta-matroids of small ribbon graphs") {
    CHECK(delta_matroid_of(plane_loop()) == DeltaMatroid::validated(sys("a", {{}})));
    CHECK(delta_matroid_of(twisted_loop()) == DeltaMatroid::validated(sys("a", {{}, {"a"}})));
    CHECK(delta_matroid_of(bridge()) == DeltaMatroid::validated(sys("a", {{"a"}})));
    CHECK(delta_matroid_of(torus()) == DeltaMatroid::validated(sys("ab", {{}, {"a", "b"}})));
    // Spanning trees of a triangle are its three pairs of edges.
    CHECK(delta_matroid_of(triangle()) == DeltaMatroid::validated(sys("abc", {{"a", "b"}, {"a", "c"}, {"b", "c"}})));
}

TEST_CASE("partial dual of a plane loop is a bridge") {
    const RibbonGraph d = partial_dual(plane_loop(), ElemSet::single(0));
    CHECK(d.vertices() == 2);
    CHECK(d.boundary_components() == 1);
    CHECK(equivalent(d, bridge()));
}

TEST_CASE("full dual swaps vertices and faces") {
    const RibbonGraph g = triangle();
    const RibbonGraph d = partial_dual(g, g.all_edges());
    CHECK(d.vertices() == g.boundary_components());
    CHECK(d.boundary_components() == g.vertices());
    CHECK(equivalent(partial_dual(d, g.all_edges()), g));
}

TEST_CASE("Petrial of a plane loop is a twisted loop") {
    CHECK(equivalent(partial_petrial(plane_loop(), ElemSet::single(0)), twisted_loop()));
}

TEST_CASE("partial duals give twists on the torus") {
    const RibbonGraph g = torus();
    const ElemSet a = ElemSet::single(0);
    CHECK(delta_matroid_of(partial_dual(g, a)) == DeltaMatroid::validated(sys("ab", {{"a"}, {"b"}})));
}

TEST_CASE("twisted duals apply their steps in order") {
    const RibbonGraph g = plane_loop();
    const ElemSet a = ElemSet::single(0);
    const std::vector<RibbonStep> dual_then_petrial = {{RibbonGenerator::Dual, a}, {RibbonGenerator::Petrial, a}};
    // The bridge is unchanged by the Petrial, so the result is plane.
    CHECK(twisted_dual(g, dual_then_petrial).is_plane());
    const std::vector<RibbonStep> petrial_then_dual = {{RibbonGenerator::Petrial, a}, {RibbonGenerator::Dual, a}};
    CHECK(!twisted_dual(g, petrial_then_dual).is_plane());
}

TEST_CASE("deletion and contraction of edges") {
    const RibbonGraph g = triangle();
    const RibbonGraph del = delete_edge(g, 0);
    CHECK(del.edges() == 2);
    CHECK(del.vertices() == 3);
    const RibbonGraph con = contract_edge(g, 0);
    CHECK(con.vertices() == 2);
    CHECK(con.edges() == 2);
    CHECK(con.is_plane());
}

TEST_CASE("graph rank and quasi-trees") {
    const RibbonGraph g = triangle();
    CHECK(graph_rank(g, ElemSet{}) == 0);
    CHECK(graph_rank(g, g.all_edges()) == 2);
    CHECK(is_quasi_tree(twisted_loop()));
    CHECK(!is_quasi_tree(plane_loop()));
    CHECK(is_quasi_tree(torus()));
}

TEST_CASE("plane biseparations of a plane graph") {
    const RibbonGraph g = triangle();
    CHECK(plane_biseparation(g, ElemSet{}));
    CHECK(plane_biseparation(g, g.all_edges()));
    // A single edge of a cycle: its ends are not separating vertices.
    CHECK(!plane_biseparation(g, ElemSet::single(0)));
    CHECK(!partial_dual(g, ElemSet::single(0)).is_plane());
}

TEST_CASE("rotation system round trip") {
    for (const RibbonGraph& g : {plane_loop(), twisted_loop(), torus(), triangle()}) {
        const RotationSystem rs = parse_rotation_system(serialize(g.to_rotation_system()));
        CHECK(equivalent(RibbonGraph::from_rotation_system(rs), g));
    }
}

TEST_CASE("malformed rotation systems are rejected") {
    CHECK_THROWS(graph({{"a.0"}}, "a"));
    CHECK_THROWS(graph({{"a.0", "a.1", "a.1"}}, "a"));
}

TEST_CASE("disjoint union adds counts") {
    const RibbonGraph u = disjoint_union(plane_loop(), graph({{"b.0"}, {"b.1"}}, "b"));
    CHECK(u.components() == 2);
    CHECK(u.vertices() == 3);
    CHECK(u.boundary_components() == 3);
}
