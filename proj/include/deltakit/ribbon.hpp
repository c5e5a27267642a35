#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "deltakit/elemset.hpp"
#include "deltakit/setsystem.hpp"

namespace deltakit {

/// Exchange format: cyclic half-edge orders at each vertex plus edge incidences.
struct RotationSystem {
    struct Edge {
        std::string label;
        std::array<std::string, 2> ends;
        bool twisted = false;
    };
    std::vector<std::vector<std::string>> vertices;
    std::vector<Edge> edges;
    int isolated_vertices = 0;
};

/// Ribbon graph in the flag model.
///
/// Edge i owns flags 4i..4i+3. `t0` and `t2` act inside each edge block and
/// commute; `t1` joins flags across vertex corners. Vertices are
/// <t1,t2>-orbits, boundary components are <t0,t1>-orbits. Vertices without
/// edges are kept as a count.
class RibbonGraph {
public:
    RibbonGraph() = default;
    /// Throws DomainError on malformed incidence data.
    static RibbonGraph from_rotation_system(const RotationSystem& rs);
    /// Raw constructor; validates the involution invariants.
    RibbonGraph(GroundSet edge_labels, std::vector<int> t0, std::vector<int> t1, std::vector<int> t2,
                int isolated_vertices);

    RotationSystem to_rotation_system() const;

    const GroundSet& edge_labels() const { return labels_; }
    int edges() const { return labels_.size(); }
    ElemSet all_edges() const { return labels_.all(); }
    int isolated_vertices() const { return isolated_; }
    std::span<const int> t0() const { return t0_; }
    std::span<const int> t1() const { return t1_; }
    std::span<const int> t2() const { return t2_; }

    int vertices() const;
    int boundary_components() const;
    int components() const;
    int euler_genus() const;
    bool is_orientable() const;
    bool is_plane() const { return euler_genus() == 0; }

    /// Vertex id (0..v-1 over non-isolated vertices) of every flag.
    std::vector<int> vertex_of_flags() const;

private:
    GroundSet labels_;
    std::vector<int> t0_, t1_, t2_;
    int isolated_ = 0;
};

RibbonGraph partial_petrial(const RibbonGraph& g, ElemSet a);
RibbonGraph partial_dual(const RibbonGraph& g, ElemSet a);
RibbonGraph delete_edges(const RibbonGraph& g, ElemSet a);
RibbonGraph delete_edge(const RibbonGraph& g, int e);
/// G/e = G^{e} \ e
RibbonGraph contract_edge(const RibbonGraph& g, int e);

enum class RibbonGenerator { Dual, Petrial };

struct RibbonStep {
    RibbonGenerator gen;
    ElemSet set;
};

/// Applies the steps in the order listed.
RibbonGraph twisted_dual(const RibbonGraph& g, std::span<const RibbonStep> word);

/// The spanning subgraph (V, A).
RibbonGraph spanning_subgraph(const RibbonGraph& g, ElemSet a);
/// Every component has exactly one boundary component.
bool is_quasi_tree(const RibbonGraph& g);

/// Feasible sets: edge sets of spanning quasi-trees (one per component of G).
DeltaMatroid delta_matroid_of(const RibbonGraph& g);

/// Graph rank of the spanning subgraph (V, A): v - k(V, A).
int graph_rank(const RibbonGraph& g, ElemSet a);

/// Edge sets of both sides plane and every mixed vertex a separating vertex.
bool plane_biseparation(const RibbonGraph& g, ElemSet a);
/// Vertex ids (as in vertex_of_flags) that are separating vertices.
std::vector<bool> separating_vertices(const RibbonGraph& g);

RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b);

/// Isomorphism of flag systems with edge labels fixed.
bool equivalent(const RibbonGraph& a, const RibbonGraph& b);

}  // namespace deltakit
