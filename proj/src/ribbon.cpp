#include "deltakit/ribbon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "deltakit/errors.hpp"

namespace deltakit {

namespace {

constexpr int flag_of(int edge, int end, int side) { return 4 * edge + 2 * end + side; }

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Number of orbits of the group generated by the given involutions.
int count_orbits(std::initializer_list<const std::vector<int>*> gens, std::size_t n) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int orbits = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++orbits;
        seen[s] = 1;
        stack.push_back(static_cast<int>(s));
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (const auto* g : gens) {
                const int y = (*g)[at(x)];
                if (!seen[at(y)]) {
                    seen[at(y)] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return orbits;
}

void check_involution(const std::vector<int>& t, const char* name) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        const int j = t[i];
        if (j < 0 || at(j) >= t.size() || at(j) == i || t[at(j)] != static_cast<int>(i))
            throw DomainError(std::string(name) + " is not a fixed-point-free involution");
    }
}

}  // namespace

RibbonGraph::RibbonGraph(GroundSet edge_labels, std::vector<int> t0, std::vector<int> t1, std::vector<int> t2,
                         int isolated_vertices)
    : labels_(std::move(edge_labels)), t0_(std::move(t0)), t1_(std::move(t1)), t2_(std::move(t2)),
      isolated_(isolated_vertices) {
    const std::size_t n = 4 * static_cast<std::size_t>(labels_.size());
    if (t0_.size() != n || t1_.size() != n || t2_.size() != n)
        throw DomainError("flag arrays must have 4 entries per edge");
    if (isolated_ < 0) throw DomainError("negative isolated vertex count");
    check_involution(t0_, "t0");
    check_involution(t1_, "t1");
    check_involution(t2_, "t2");
    for (std::size_t i = 0; i < n; ++i) {
        if (t0_[i] / 4 != static_cast<int>(i / 4) || t2_[i] / 4 != static_cast<int>(i / 4))
            throw DomainError("t0 and t2 must act within edge blocks");
        if (t0_[at(t2_[i])] != t2_[at(t0_[i])]) throw DomainError("t0 and t2 do not commute");
        if (t0_[i] == t2_[i]) throw DomainError("edge orbit has fewer than four flags");
    }
}

RibbonGraph RibbonGraph::from_rotation_system(const RotationSystem& rs) {
    std::vector<std::string> labels;
    std::map<std::string, std::pair<int, int>> half;  // name -> (edge, end)
    for (std::size_t e = 0; e < rs.edges.size(); ++e) {
        labels.push_back(rs.edges[e].label);
        for (int end = 0; end < 2; ++end) {
            const auto& name = rs.edges[e].ends[at(end)];
            if (!half.emplace(name, std::make_pair(static_cast<int>(e), end)).second)
                throw DomainError("half-edge '" + name + "' is used by more than one edge end");
        }
    }
    GroundSet ground(std::move(labels));
    const int m = ground.size();
    std::vector<int> t0(at(4 * m)), t1(at(4 * m), -1), t2(at(4 * m));
    for (int e = 0; e < m; ++e) {
        const bool tw = rs.edges[at(e)].twisted;
        for (int end = 0; end < 2; ++end)
            for (int side = 0; side < 2; ++side) {
                const int f = flag_of(e, end, side);
                t2[at(f)] = flag_of(e, end, 1 - side);
                t0[at(f)] = flag_of(e, 1 - end, tw ? side : 1 - side);
            }
    }
    int isolated = rs.isolated_vertices;
    if (isolated < 0) throw DomainError("isolated_vertices must be non-negative");
    std::set<std::string> placed;
    for (const auto& cyc : rs.vertices) {
        if (cyc.empty()) {
            ++isolated;
            continue;
        }
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            const auto it = half.find(cyc[j]);
            if (it == half.end()) throw DomainError("vertex lists unknown half-edge '" + cyc[j] + "'");
            if (!placed.insert(cyc[j]).second)
                throw DomainError("half-edge '" + cyc[j] + "' appears at more than one vertex position");
            const auto nx = half.at(cyc[(j + 1) % cyc.size()]);
            const int a = flag_of(it->second.first, it->second.second, 1);
            const int b = flag_of(nx.first, nx.second, 0);
            t1[at(a)] = b;
            t1[at(b)] = a;
        }
    }
    if (placed.size() != half.size()) throw DomainError("some half-edge is not placed at any vertex");
    return RibbonGraph(std::move(ground), std::move(t0), std::move(t1), std::move(t2), isolated);
}

RotationSystem RibbonGraph::to_rotation_system() const {
    const int n = 4 * edges();
    auto half_name = [&](int flag) {
        const int e = flag / 4;
        const int other = t2_[at(flag)];
        // End 0 is the half-edge holding the lowest flag of the block.
        const int base = 4 * e;
        const bool end0 = std::min(flag, other) == base;
        return labels_.label(e) + (end0 ? ".0" : ".1");
    };
    RotationSystem rs;
    rs.isolated_vertices = isolated_;
    std::vector<int> side(at(n), -1);
    std::vector<char> seen(at(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[at(s)]) continue;
        std::vector<std::string> cyc;
        int x = s;
        do {
            const int y = t2_[at(x)];
            seen[at(x)] = seen[at(y)] = 1;
            side[at(x)] = 0;
            side[at(y)] = 1;
            cyc.push_back(half_name(x));
            x = t1_[at(y)];
        } while (x != s);
        rs.vertices.push_back(std::move(cyc));
    }
    for (int e = 0; e < edges(); ++e) {
        const int base = 4 * e;
        const int p0 = side[at(base)] == 0 ? base : t2_[at(base)];
        RotationSystem::Edge edge;
        edge.label = labels_.label(e);
        edge.ends = {labels_.label(e) + ".0", labels_.label(e) + ".1"};
        edge.twisted = side[at(t0_[at(p0)])] == 0;
        rs.edges.push_back(std::move(edge));
    }
    return rs;
}

int RibbonGraph::vertices() const { return count_orbits({&t1_, &t2_}, t1_.size()) + isolated_; }

int RibbonGraph::boundary_components() const { return count_orbits({&t0_, &t1_}, t1_.size()) + isolated_; }

int RibbonGraph::components() const { return count_orbits({&t0_, &t1_, &t2_}, t1_.size()) + isolated_; }

int RibbonGraph::euler_genus() const {
    return 2 * components() - vertices() + edges() - boundary_components();
}

bool RibbonGraph::is_orientable() const {
    const std::size_t n = t1_.size();
    std::vector<int> colour(n, -1);
    std::vector<int> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        stack.push_back(static_cast<int>(s));
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (const auto* g : {&t0_, &t1_, &t2_}) {
                const int y = (*g)[at(x)];
                if (colour[at(y)] < 0) {
                    colour[at(y)] = 1 - colour[at(x)];
                    stack.push_back(y);
                } else if (colour[at(y)] == colour[at(x)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<int> RibbonGraph::vertex_of_flags() const {
    const std::size_t n = t1_.size();
    std::vector<int> vid(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (vid[s] >= 0) continue;
        int x = static_cast<int>(s);
        do {
            vid[at(x)] = next;
            vid[at(t2_[at(x)])] = next;
            x = t1_[at(t2_[at(x)])];
        } while (x != static_cast<int>(s));
        ++next;
    }
    return vid;
}

RibbonGraph partial_petrial(const RibbonGraph& g, ElemSet a) {
    if (!a.subset_of(g.all_edges())) throw DomainError("partial Petrial: edge set not in E(G)");
    std::vector<int> t0(g.t0().begin(), g.t0().end());
    const auto t2 = g.t2();
    a.for_each([&](int e) {
        for (int f = 4 * e; f < 4 * e + 4; ++f) t0[at(f)] = g.t0()[at(t2[at(f)])];
    });
    return RibbonGraph(g.edge_labels(), std::move(t0), {g.t1().begin(), g.t1().end()},
                       {g.t2().begin(), g.t2().end()}, g.isolated_vertices());
}

RibbonGraph partial_dual(const RibbonGraph& g, ElemSet a) {
    if (!a.subset_of(g.all_edges())) throw DomainError("partial dual: edge set not in E(G)");
    std::vector<int> t0(g.t0().begin(), g.t0().end());
    std::vector<int> t2(g.t2().begin(), g.t2().end());
    a.for_each([&](int e) {
        for (int f = 4 * e; f < 4 * e + 4; ++f) std::swap(t0[at(f)], t2[at(f)]);
    });
    return RibbonGraph(g.edge_labels(), std::move(t0), {g.t1().begin(), g.t1().end()}, std::move(t2),
                       g.isolated_vertices());
}

RibbonGraph delete_edges(const RibbonGraph& g, ElemSet a) {
    if (!a.subset_of(g.all_edges())) throw DomainError("deletion: edge set not in E(G)");
    if (a.empty()) return g;
    const int n = 4 * g.edges();
    const auto t0 = g.t0();
    const auto t1 = g.t1();
    const auto t2 = g.t2();
    auto removed = [&](int f) { return a.contains(f / 4); };

    // Vertices losing every flag become isolated.
    int isolated = g.isolated_vertices();
    std::vector<char> seen(at(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[at(s)] || !removed(s)) continue;
        bool all_removed = true;
        int x = s;
        do {
            seen[at(x)] = seen[at(t2[at(x)])] = 1;
            if (!removed(x)) all_removed = false;
            x = t1[at(t2[at(x)])];
        } while (x != s);
        if (all_removed) ++isolated;
    }

    std::vector<int> newid(at(n), -1);
    int next = 0;
    for (int f = 0; f < n; ++f)
        if (!removed(f)) newid[at(f)] = next++;
    std::vector<int> n0(at(next)), n1(at(next)), n2(at(next));
    for (int f = 0; f < n; ++f) {
        if (removed(f)) continue;
        int z = t1[at(f)];
        while (removed(z)) z = t1[at(t2[at(z)])];
        n0[at(newid[at(f)])] = newid[at(t0[at(f)])];
        n1[at(newid[at(f)])] = newid[at(z)];
        n2[at(newid[at(f)])] = newid[at(t2[at(f)])];
    }
    return RibbonGraph(g.edge_labels().restricted(g.all_edges() - a), std::move(n0), std::move(n1),
                       std::move(n2), isolated);
}

RibbonGraph delete_edge(const RibbonGraph& g, int e) { return delete_edges(g, ElemSet::single(e)); }

RibbonGraph contract_edge(const RibbonGraph& g, int e) {
    return delete_edge(partial_dual(g, ElemSet::single(e)), e);
}

RibbonGraph twisted_dual(const RibbonGraph& g, std::span<const RibbonStep> word) {
    RibbonGraph cur = g;
    for (const auto& step : word)
        cur = step.gen == RibbonGenerator::Dual ? partial_dual(cur, step.set) : partial_petrial(cur, step.set);
    return cur;
}

RibbonGraph spanning_subgraph(const RibbonGraph& g, ElemSet a) { return delete_edges(g, g.all_edges() - a); }

bool is_quasi_tree(const RibbonGraph& g) { return g.boundary_components() == g.components(); }

DeltaMatroid delta_matroid_of(const RibbonGraph& g) {
    if (g.edges() > 24) throw SizeGuardError("delta_matroid_of enumerates 2^|E| subsets; limited to 24 edges");
    const int k = g.components();
    std::vector<ElemSet> feasible;
    for_each_subset(g.all_edges(), [&](ElemSet a) {
        if (spanning_subgraph(g, a).boundary_components() == k) feasible.push_back(a);
    });
    return DeltaMatroid::unchecked(SetSystem(g.edge_labels(), std::move(feasible)));
}

int graph_rank(const RibbonGraph& g, ElemSet a) {
    const RibbonGraph h = spanning_subgraph(g, a);
    return h.vertices() - h.components();
}

std::vector<bool> separating_vertices(const RibbonGraph& g) {
    const std::vector<int> vid = g.vertex_of_flags();
    const int nv = vid.empty() ? 0 : *std::max_element(vid.begin(), vid.end()) + 1;
    // Endpoints of every edge.
    std::vector<std::array<int, 2>> ends(at(g.edges()));
    for (int e = 0; e < g.edges(); ++e) {
        // The two ends of an edge are its t2-classes.
        const int f = 4 * e;
        int other = f + 1;
        while (other == g.t2()[at(f)]) ++other;
        ends[at(e)] = {vid[at(f)], vid[at(other)]};
    }
    std::vector<bool> result(at(nv), false);
    for (int v = 0; v < nv; ++v) {
        std::vector<int> parent(at(nv));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[at(x)] != x) x = parent[at(x)] = parent[at(parent[at(x)])];
            return x;
        };
        for (const auto& [a, b] : ends)
            if (a != v && b != v) parent[at(find(a))] = find(b);
        std::set<int> groups;
        int loops = 0;
        for (const auto& [a, b] : ends) {
            if (a == v && b == v) ++loops;
            else if (a == v) groups.insert(find(b));
            else if (b == v) groups.insert(find(a));
        }
        result[at(v)] = static_cast<int>(groups.size()) + loops >= 2;
    }
    return result;
}

bool plane_biseparation(const RibbonGraph& g, ElemSet a) {
    if (!a.subset_of(g.all_edges())) throw DomainError("plane-biseparation: edge set not in E(G)");
    const ElemSet ac = g.all_edges() - a;
    if (!delete_edges(g, a).is_plane() || !delete_edges(g, ac).is_plane()) return false;
    const std::vector<int> vid = g.vertex_of_flags();
    const std::vector<bool> sep = separating_vertices(g);
    const int nv = static_cast<int>(sep.size());
    std::vector<char> in_a(at(nv), 0), in_ac(at(nv), 0);
    for (int f = 0; f < 4 * g.edges(); ++f) {
        if (a.contains(f / 4)) in_a[at(vid[at(f)])] = 1;
        else in_ac[at(vid[at(f)])] = 1;
    }
    for (int v = 0; v < nv; ++v)
        if (in_a[at(v)] && in_ac[at(v)] && !sep[at(v)]) return false;
    return true;
}

RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b) {
    std::vector<std::string> labels = a.edge_labels().labels();
    for (const auto& l : b.edge_labels().labels()) {
        if (a.edge_labels().find(l) >= 0) throw LabelCollision(l);
        labels.push_back(l);
    }
    const int shift = 4 * a.edges();
    auto join = [&](std::span<const int> x, std::span<const int> y) {
        std::vector<int> out(x.begin(), x.end());
        for (int v : y) out.push_back(v + shift);
        return out;
    };
    return RibbonGraph(GroundSet(std::move(labels)), join(a.t0(), b.t0()), join(a.t1(), b.t1()),
                       join(a.t2(), b.t2()), a.isolated_vertices() + b.isolated_vertices());
}

bool equivalent(const RibbonGraph& a, const RibbonGraph& b) {
    if (!(a.edge_labels() == b.edge_labels()) || a.isolated_vertices() != b.isolated_vertices()) return false;
    const int n = 4 * a.edges();
    std::vector<int> map(at(n), -1);
    std::vector<char> used(at(n), 0);
    for (int s = 0; s < n; ++s) {
        if (map[at(s)] >= 0) continue;
        bool matched = false;
        for (int cand = 4 * (s / 4); cand < 4 * (s / 4) + 4 && !matched; ++cand) {
            std::vector<int> trial = map;
            std::vector<char> trial_used = used;
            std::vector<int> stack{s};
            if (trial_used[at(cand)]) continue;
            trial[at(s)] = cand;
            trial_used[at(cand)] = 1;
            bool ok = true;
            while (!stack.empty() && ok) {
                const int x = stack.back();
                stack.pop_back();
                const int y = trial[at(x)];
                const std::array<std::pair<int, int>, 3> moves = {
                    std::pair{a.t0()[at(x)], b.t0()[at(y)]},
                    std::pair{a.t1()[at(x)], b.t1()[at(y)]},
                    std::pair{a.t2()[at(x)], b.t2()[at(y)]},
                };
                for (const auto& [xn, yn] : moves) {
                    if (trial[at(xn)] < 0) {
                        if (trial_used[at(yn)] || xn / 4 != yn / 4) {
                            ok = false;
                            break;
                        }
                        trial[at(xn)] = yn;
                        trial_used[at(yn)] = 1;
                        stack.push_back(xn);
                    } else if (trial[at(xn)] != yn) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                map = std::move(trial);
                used = std::move(trial_used);
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace deltakit
