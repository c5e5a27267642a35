#include "deltakit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "deltakit/binary_matroid.hpp"
#include "deltakit/errors.hpp"
#include "deltakit/io.hpp"
#include "deltakit/polynomials.hpp"
#include "deltakit/structure.hpp"

namespace deltakit {

// ---------------------------------------------------------------- tally

Tally::Line& Tally::line(std::vector<Line>& lines, std::string_view name) {
    for (auto& l : lines)
        if (l.name == name) return l;
    lines.push_back({std::string(name), 0, 0});
    return lines.back();
}

void Tally::check(std::string_view name, bool ok) { check(name, ok, {}); }

void Tally::check(std::string_view name, bool ok, const std::function<std::string()>& witness) {
    Line& l = line(checks_, name);
    ++l.total;
    if (ok) {
        ++l.passed;
    } else if (counterexample_.empty()) {
        counterexample_ = std::string(name) + ": " + (witness ? witness() : std::string("(no witness)"));
    }
}

void Tally::observe(std::string_view name, bool held) {
    Line& l = line(observations_, name);
    ++l.total;
    if (held) ++l.passed;
}

void Tally::note(std::string text) { notes_.push_back(std::move(text)); }

void Tally::merge(const Tally& other) {
    for (const auto& o : other.checks_) {
        Line& l = line(checks_, o.name);
        l.passed += o.passed;
        l.total += o.total;
    }
    for (const auto& o : other.observations_) {
        Line& l = line(observations_, o.name);
        l.passed += o.passed;
        l.total += o.total;
    }
    for (const auto& n : other.notes_) notes_.push_back(n);
    if (counterexample_.empty()) counterexample_ = other.counterexample_;
}

long Tally::passed() const {
    long p = 0;
    for (const auto& l : checks_) p += l.passed;
    return p;
}

long Tally::total() const {
    long t = 0;
    for (const auto& l : checks_) t += l.total;
    return t;
}

std::string Report::text() const {
    std::ostringstream out;
    out << "suite " << suite << " seed " << seed << "\n";
    for (const auto& l : tally.checks()) out << l.name << ": " << l.passed << "/" << l.total << "\n";
    for (const auto& l : tally.observations())
        out << "observed, not asserted: " << l.name << ": " << l.passed << "/" << l.total << "\n";
    for (const auto& n : tally.notes()) out << "note: " << n << "\n";
    out << (ok() ? "PASS " : "FAIL ") << tally.passed() << "/" << tally.total() << "\n";
    if (!tally.counterexample().empty()) out << "counterexample: " << tally.counterexample() << "\n";
    return out.str();
}

std::string Report::json() const {
    nlohmann::ordered_json doc;
    doc["suite"] = suite;
    doc["seed"] = seed;
    auto lines = [](const std::vector<Tally::Line>& ls) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& l : ls) arr.push_back({{"name", l.name}, {"passed", l.passed}, {"total", l.total}});
        return arr;
    };
    doc["checks"] = lines(tally.checks());
    doc["observations"] = lines(tally.observations());
    doc["notes"] = tally.notes();
    doc["status"] = ok() ? "PASS" : "FAIL";
    doc["passed"] = tally.passed();
    doc["total"] = tally.total();
    if (!tally.counterexample().empty()) doc["counterexample"] = tally.counterexample();
    return doc.dump() + "\n";
}

Tally run_trials(const SuiteOptions& opts, int trials, const std::function<void(Rng&, int, Tally&)>& body) {
    std::vector<Tally> results(static_cast<std::size_t>(std::max(trials, 0)));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < trials; i = next++) {
            Rng rng(trial_seed(opts.seed, static_cast<std::uint64_t>(i)));
            Tally& t = results[static_cast<std::size_t>(i)];
            try {
                body(rng, i, t);
            } catch (const std::exception& e) {
                const std::string what = e.what();
                t.check("trial completed without error", false,
                        [&] { return "trial " + std::to_string(i) + ": " + what; });
            }
        }
    };
    const unsigned n = std::max(1u, std::min(opts.threads, static_cast<unsigned>(std::max(trials, 1))));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    Tally out;
    for (const auto& t : results) out.merge(t);
    return out;
}

namespace {

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::function<std::string()> dm_witness(const SetSystem& s) {
    return [s] { return serialize(s); };
}

std::function<std::string()> graph_witness(const RibbonGraph& g, std::string extra = {}) {
    return [g, extra] { return serialize(g.to_rotation_system()) + (extra.empty() ? "" : " " + extra); };
}

std::function<std::string()> matrix_witness(const Gf2Matrix& m, std::string extra = {}) {
    return [m, extra] { return serialize(m) + (extra.empty() ? "" : " " + extra); };
}

LaurentPoly lambda() { return LaurentPoly::var(Var::L); }

RibbonGraph random_graph(Rng& rng, const SuiteOptions& o, int max_edges = 0) {
    return random_ribbon_graph(rng, std::max(1, o.vertices), pick(max_edges, std::max(1, o.edges)));
}

/// Edge labels prefixed so two generated graphs can be joined.
RibbonGraph prefixed(const RibbonGraph& g, const std::string& prefix) {
    RotationSystem rs = g.to_rotation_system();
    for (auto& v : rs.vertices)
        for (auto& h : v) h = prefix + h;
    for (auto& e : rs.edges) {
        e.label = prefix + e.label;
        for (auto& h : e.ends) h = prefix + h;
    }
    return RibbonGraph::from_rotation_system(rs);
}

DeltaMatroid prefixed(const DeltaMatroid& d, const std::string& prefix) {
    std::vector<std::string> labels;
    for (const auto& l : d.ground().labels()) labels.push_back(prefix + l);
    return DeltaMatroid::unchecked(rename(d, GroundSet(std::move(labels))));
}

/// Cycle matroid of the underlying graph: bases are the spanning forests.
Matroid cycle_matroid(const RibbonGraph& g) {
    const int r = graph_rank(g, g.all_edges());
    std::vector<ElemSet> bases;
    for_each_subset(g.all_edges(), [&](ElemSet a) {
        if (a.size() == r && graph_rank(g, a) == r) bases.push_back(a);
    });
    return Matroid::validated(SetSystem(g.edge_labels(), std::move(bases)));
}

/// Whitney's expansion of the chromatic polynomial of the underlying graph.
LaurentPoly chromatic_whitney(const RibbonGraph& h) {
    LaurentPoly out;
    const int v = h.vertices();
    for_each_subset(h.all_edges(), [&](ElemSet b) {
        const LaurentPoly term = lambda().pow(v - graph_rank(h, b));
        out += (b.size() % 2 ? -term : term);
    });
    return out;
}

std::vector<RibbonStep> to_ribbon_word(const std::vector<WordStep>& word) {
    std::vector<RibbonStep> out;
    for (const auto& s : word)
        out.push_back({s.gen == Generator::Twist ? RibbonGenerator::Dual : RibbonGenerator::Petrial, s.set});
    return out;
}

struct GraphInvariants {
    int v, e, f, genus;
    bool orientable;
    friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

GraphInvariants invariants(const RibbonGraph& g) {
    return {g.vertices(), g.edges(), g.boundary_components(), g.euler_genus(), g.is_orientable()};
}

bool same_graph(const RibbonGraph& a, const RibbonGraph& b) {
    return equivalent(a, b) && invariants(a) == invariants(b) && delta_matroid_of(a) == delta_matroid_of(b);
}

std::string set_text(const GroundSet& g, ElemSet a) { return "A=" + g.format(a); }

DeltaMatroid lc(const SetSystem& s, ElemSet a) { return DeltaMatroid::unchecked(loop_complement(s, a)); }

/// Every vf-safe delta-matroid on at most n elements.
std::vector<DeltaMatroid> vf_safe_corpus(int n) {
    std::vector<DeltaMatroid> out;
    for (int k = 0; k <= n; ++k)
        for (auto& d : all_delta_matroids(k))
            if (is_vf_safe(d)) out.push_back(std::move(d));
    return out;
}

std::vector<DeltaMatroid> full_corpus(int n) {
    std::vector<DeltaMatroid> out;
    for (int k = 0; k <= n; ++k)
        for (auto& d : all_delta_matroids(k)) out.push_back(std::move(d));
    return out;
}

Tally over_corpus(const SuiteOptions& o, const std::vector<DeltaMatroid>& corpus,
                  const std::function<void(const DeltaMatroid&, Rng&, Tally&)>& body) {
    return run_trials(o, static_cast<int>(corpus.size()),
                      [&](Rng& rng, int i, Tally& t) { body(corpus[static_cast<std::size_t>(i)], rng, t); });
}

// ---------------------------------------------------------------- fig1

Tally suite_fig1(const SuiteOptions&) {
    Tally t;
    const DeltaMatroid d = fig1_delta_matroid();
    const GroundSet& g = d.ground();
    t.check("feasible family has 20 sets", d.family_size() == 20);
    t.check("symmetric exchange holds", validate_delta_matroid(d), dm_witness(d));
    t.check("serialization round trip", parse_set_system(serialize(d)) == d, dm_witness(d));

    std::vector<ElemSet> six;
    for (auto s : {"3 4 6", "3 4 7", "3 5 6", "3 5 7", "4 5 6", "4 5 7"}) {
        std::vector<std::string> labels;
        std::istringstream in(s);
        for (std::string w; in >> w;) labels.push_back(w);
        six.push_back(g.set_of(labels));
    }
    std::sort(six.begin(), six.end(), CanonicalLess{});
    const Matroid low = lower_matroid(d);
    t.check("lower matroid bases are the six 3-sets",
            std::vector<ElemSet>(low.feasible().begin(), low.feasible().end()) == six, dm_witness(low));

    const std::vector<ElemSet> expected = {g.set_of({"1", "6", "7"}), g.set_of({"2", "6", "7"}),
                                           g.set_of({"1", "3", "4", "5", "8"}), g.set_of({"2", "3", "4", "5", "8"})};
    t.check("twist sets giving a matroid", twist_sets_yielding_matroid(d) == expected, dm_witness(d));
    const auto witness = is_twist_of_matroid_search(d);
    t.check("smallest twist witness is {1,6,7}", witness && *witness == expected[0]);
    t.check("no excluded minor", is_twist_of_matroid_em(d));
    t.check("no X0 minor", !has_minor(d, x0()).has_value());
    return t;
}

// ---------------------------------------------------------------- obstructions

Tally suite_obstructions(const SuiteOptions&) {
    Tally t;
    t.check("X1 equals the dual of X2", dual(x2()) == x1());
    t.check("X1 isomorphic to the dual of X2", is_isomorphic(x1(), dual(x2())).has_value());
    for_each_subset(x0().all(), [&](ElemSet a) {
        t.check("every twist of X0 is isomorphic to X0", is_isomorphic(twist(x0(), a), x0()).has_value(),
                dm_witness(twist(x0(), a)));
    });
    for (const DeltaMatroid& x : {x1(), x2()}) {
        for_each_subset(x.all(), [&](ElemSet a) {
            const DeltaMatroid tw = twist(x, a);
            t.check("every twist of X1 or X2 is isomorphic to X1 or X2",
                    is_isomorphic(tw, x1()).has_value() || is_isomorphic(tw, x2()).has_value(), dm_witness(tw));
        });
    }
    for (Obstruction o : {Obstruction::X0, Obstruction::X1, Obstruction::X2}) {
        const DeltaMatroid x = obstruction(o);
        const std::string name(to_string(o));
        t.check(name + " is a delta-matroid", validate_delta_matroid(x));
        t.check(name + " is not a twist of a matroid (search)", !is_twist_of_matroid_search(x).has_value());
        t.check(name + " is not a twist of a matroid (excluded minors)", !is_twist_of_matroid_em(x));
        const auto self = has_minor(x, x);
        t.check(name + " contains itself with the identity relabeling",
                self && self->delete_set.empty() && self->contract_set.empty() &&
                    self->relabeling == Relabeling{[&] {
                        Relabeling r(static_cast<std::size_t>(x.size()));
                        for (int i = 0; i < x.size(); ++i) r[static_cast<std::size_t>(i)] = i;
                        return r;
                    }()});
    }
    t.check("X0 has no twist giving a matroid", twist_sets_yielding_matroid(x0()).empty());
    t.check("X0 is odd", !is_even(x0()));
    const DeltaMatroid sum = direct_sum(x0(), prefixed(x1(), "p"));
    t.check("X0 is a minor of X0 plus X1", has_minor(sum, x0()).has_value(), dm_witness(sum));
    return t;
}

// ---------------------------------------------------------------- corpus4

Tally suite_corpus4(const SuiteOptions& o) {
    const auto corpus = full_corpus(std::min(4, pick(o.max_elements, 4)));
    Tally t = over_corpus(o, corpus, [](const DeltaMatroid& d, Rng&, Tally& t) {
        const bool em = is_twist_of_matroid_em(d);
        const auto search = is_twist_of_matroid_search(d);
        t.check("excluded-minor test agrees with twist search", em == search.has_value(), dm_witness(d));
        for_each_subset(d.all(), [&](ElemSet a) {
            if (a.empty() || a == d.all()) return;
            t.check("two-condition criterion agrees with direct test", separator_criterion(d, a) == twist_is_matroid(d, a),
                    [&] { return serialize(d) + " " + set_text(d.ground(), a); });
        });
        const bool x0_free = d.size() == 0 || !has_minor(d, x0()).has_value();
        t.check("X0-free iff even", x0_free == is_even(d), dm_witness(d));
        if (search) t.check("twists of matroids are even", is_even(d), dm_witness(d));
    });
    t.note("corpus size " + std::to_string(corpus.size()));
    return t;
}

// ---------------------------------------------------------------- ribbon graphs

Tally suite_compat(const SuiteOptions& o) {
    return run_trials(o, pick(o.trials, 1000), [&](Rng& rng, int, Tally& t) {
        const RibbonGraph g = random_graph(rng, o);
        const DeltaMatroid d = delta_matroid_of(g);
        const RibbonGraph star = partial_dual(g, g.all_edges());

        const bool lower = lower_matroid(d) == cycle_matroid(g) && upper_matroid(d) == dual(cycle_matroid(star));
        t.check("lower and upper matroids are cycle matroids", lower, graph_witness(g));

        t.check("delta-matroid is a matroid iff the graph is plane", is_matroid(d) == g.is_plane(), graph_witness(g));

        bool twists = true;
        for_each_subset(g.all_edges(), [&](ElemSet a) {
            twists = twists && delta_matroid_of(partial_dual(g, a)) == twist(d, a);
        });
        t.check("partial duals give twists", twists, graph_witness(g));

        bool minors = true;
        for (int e = 0; e < g.edges(); ++e) {
            minors = minors && delta_matroid_of(delete_edge(g, e)) == delete_element(d, e);
            minors = minors && delta_matroid_of(contract_edge(g, e)) == contract_element(d, e);
        }
        t.check("deletion and contraction commute with the construction", minors, graph_witness(g));
    });
}

Tally suite_ribbon(const SuiteOptions& o) {
    return run_trials(o, pick(o.trials, 300), [&](Rng& rng, int, Tally& t) {
        const RibbonGraph g = random_graph(rng, o);
        bool euler = true, faces = true;
        for_each_subset(g.all_edges(), [&](ElemSet a) {
            const RibbonGraph h = spanning_subgraph(g, a);
            const int genus = h.euler_genus();
            euler = euler && genus >= 0 && (!h.is_orientable() || genus % 2 == 0);
            faces = faces && h.boundary_components() >= h.components();
        });
        t.check("Euler genus non-negative and even when orientable", euler, graph_witness(g));
        t.check("at least as many boundary components as components", faces, graph_witness(g));

        ElemSet forest;
        for (int e = 0; e < g.edges(); ++e)
            if (graph_rank(g, forest.with(e)) > graph_rank(g, forest)) forest = forest.with(e);
        t.check("spanning forests are quasi-trees", is_quasi_tree(spanning_subgraph(g, forest)), graph_witness(g));

        t.check("orientable iff the delta-matroid is even", g.is_orientable() == is_even(delta_matroid_of(g)),
                graph_witness(g));

        const RotationSystem rs = g.to_rotation_system();
        t.check("rotation-system round trip", same_graph(RibbonGraph::from_rotation_system(rs), g), graph_witness(g));
        t.check("serialization round trip", serialize(parse_rotation_system(serialize(rs))) == serialize(rs),
                graph_witness(g));
        t.check("graph rank is the rank of the cycle matroid",
                graph_rank(g, g.all_edges()) == cycle_matroid(g).rank(), graph_witness(g));
    });
}

Tally suite_petrial(const SuiteOptions& o) {
    return run_trials(o, pick(o.trials, 1000), [&](Rng& rng, int, Tally& t) {
        const RibbonGraph g = random_graph(rng, o);
        const DeltaMatroid d = delta_matroid_of(g);
        ElemSet bad;
        bool ok = true;
        for_each_subset(g.all_edges(), [&](ElemSet a) {
            if (ok && !(delta_matroid_of(partial_petrial(g, a)) == loop_complement(d, a))) {
                ok = false;
                bad = a;
            }
        });
        t.check("partial Petrials give loop complementations", ok,
                graph_witness(g, set_text(g.edge_labels(), bad)));
    });
}

Tally suite_twisted(const SuiteOptions& o) {
    return run_trials(o, pick(o.trials, 300), [&](Rng& rng, int, Tally& t) {
        const RibbonGraph g = random_graph(rng, o);
        const DeltaMatroid d = delta_matroid_of(g);
        const auto word = random_word(rng, g.all_edges(), uniform_int(rng, 1, 5));
        t.check("twisted duals match twist and loop-complement words",
                delta_matroid_of(twisted_dual(g, to_ribbon_word(word))) == apply_word(d, word), graph_witness(g));

        const ElemSet a = random_subset(rng, g.all_edges());
        const std::vector<RibbonStep> dd = {{RibbonGenerator::Dual, a}, {RibbonGenerator::Dual, a}};
        const std::vector<RibbonStep> tt = {{RibbonGenerator::Petrial, a}, {RibbonGenerator::Petrial, a}};
        std::vector<RibbonStep> dt3;
        for (int i = 0; i < 3; ++i) {
            dt3.push_back({RibbonGenerator::Dual, a});
            dt3.push_back({RibbonGenerator::Petrial, a});
        }
        const std::string at = set_text(g.edge_labels(), a);
        t.check("partial dual is an involution", same_graph(twisted_dual(g, dd), g), graph_witness(g, at));
        t.check("partial Petrial is an involution", same_graph(twisted_dual(g, tt), g), graph_witness(g, at));
        t.check("dual then Petrial has order three", same_graph(twisted_dual(g, dt3), g), graph_witness(g, at));

        const ElemSet b = random_subset(rng, g.all_edges()) - a;
        const std::vector<RibbonStep> ab = {{RibbonGenerator::Dual, a}, {RibbonGenerator::Petrial, b}};
        const std::vector<RibbonStep> ba = {{RibbonGenerator::Petrial, b}, {RibbonGenerator::Dual, a}};
        t.check("operations on disjoint sets commute", same_graph(twisted_dual(g, ab), twisted_dual(g, ba)),
                graph_witness(g, at));
    });
}

/// Stricter reading of a plane-biseparation: at every mixed vertex v, the
/// A-edges and complement edges at v lie in different pieces of G split at v.
bool split_biseparation(const RibbonGraph& g, ElemSet a) {
    const ElemSet all = g.all_edges();
    if (!delete_edges(g, a).is_plane() || !delete_edges(g, all - a).is_plane()) return false;
    const RotationSystem rs = g.to_rotation_system();
    const int nv = static_cast<int>(rs.vertices.size());
    std::map<std::string, int> vertex_of;
    for (int v = 0; v < nv; ++v)
        for (const auto& h : rs.vertices[static_cast<std::size_t>(v)]) vertex_of[h] = v;
    std::vector<std::array<int, 2>> ends(static_cast<std::size_t>(g.edges()));
    for (const auto& e : rs.edges)
        ends[static_cast<std::size_t>(g.edge_labels().index(e.label))] = {vertex_of.at(e.ends[0]), vertex_of.at(e.ends[1])};
    for (int v = 0; v < nv; ++v) {
        std::vector<int> parent(static_cast<std::size_t>(nv));
        for (int i = 0; i < nv; ++i) parent[static_cast<std::size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        for (const auto& [x, y] : ends)
            if (x != v && y != v) parent[static_cast<std::size_t>(find(x))] = find(y);
        std::map<int, int> side;  // piece -> 1 for A, 2 for complement, 3 for both
        int seen = 0;
        for (int e = 0; e < g.edges(); ++e) {
            const auto [x, y] = ends[static_cast<std::size_t>(e)];
            if (x != v && y != v) continue;
            const int bit = a.contains(e) ? 1 : 2;
            seen |= bit;
            if (x == v && y == v) continue;  // a loop is a piece of its own
            side[find(x == v ? y : x)] |= bit;
        }
        if (seen != 3) continue;
        for (const auto& [piece, sd] : side)
            if (sd == 3) return false;
    }
    return true;
}

Tally suite_biseparation(const SuiteOptions& o) {
    return run_trials(o, pick(o.trials, 200), [&](Rng& rng, int, Tally& t) {
        const RibbonGraph g = random_graph(rng, o);
        for_each_subset(g.all_edges(), [&](ElemSet a) {
            const bool plane = partial_dual(g, a).is_plane();
            const bool bisep = plane_biseparation(g, a);
            t.observe("stricter split reading agrees with planarity of the partial dual", plane == split_biseparation(g, a));
            t.check("partial dual plane iff plane-biseparation", plane == bisep, [&] {
                return serialize(g.to_rotation_system()) + " " + set_text(g.edge_labels(), a) +
                       " plane=" + (plane ? "true" : "false") + " biseparation=" + (bisep ? "true" : "false");
            });
        });
    });
}

// ---------------------------------------------------------------- Penrose

void penrose_triple(const DeltaMatroid& d, Tally& t) {
    const LaurentPoly p = penrose_dm(d);
    t.check("state sum equals recursion", p == penrose_recursive(d), dm_witness(d));
    t.check("state sum equals characteristic expansion", p == penrose_via_characteristic(d), dm_witness(d));
}

Tally suite_penrose(const SuiteOptions& o) {
    const auto corpus = vf_safe_corpus(3);
    Tally t = over_corpus(o, corpus, [](const DeltaMatroid& d, Rng&, Tally& t) { penrose_triple(d, t); });
    t.note("exhaustive vf-safe corpus on at most 3 elements: " + std::to_string(corpus.size()));
    const int max_el = pick(o.max_elements, 6);
    t.merge(run_trials(o, pick(o.trials, 1000), [&](Rng& rng, int, Tally& t) {
        const DeltaMatroid d = random_vf_safe(rng, max_el);
        penrose_triple(d, t);

        const RibbonGraph g = random_graph(rng, o);
        const DeltaMatroid dg = delta_matroid_of(g);
        const LaurentPoly pg = penrose_ribbon(g);
        t.check("ribbon form equals lambda^k times delta-matroid form",
                pg == lambda().pow(g.components()) * penrose_dm(dg), graph_witness(g));
        bool rec = true;
        for (int e = 0; e < g.edges(); ++e) {
            const LaurentPoly rhs = penrose_ribbon(contract_edge(g, e)) -
                                    penrose_ribbon(contract_edge(partial_petrial(g, ElemSet::single(e)), e));
            rec = rec && rhs == pg;
        }
        t.check("ribbon contraction recursion", rec, graph_witness(g));

        const RibbonGraph h = prefixed(random_graph(rng, o, 3), "b");
        t.check("multiplicative over disjoint unions", penrose_ribbon(disjoint_union(g, h)) == pg * penrose_ribbon(h),
                graph_witness(g));

        const DeltaMatroid d2 = prefixed(random_vf_safe(rng, 3), "b");
        t.observe("delta-matroid Penrose multiplicative over direct sums",
                  penrose_dm(direct_sum(d, d2)) == penrose_dm(d) * penrose_dm(d2));
    }));
    return t;
}

Tally suite_pchi(const SuiteOptions& o) {
    const int max_el = pick(o.max_elements, 6);
    return run_trials(o, pick(o.trials, 500), [&](Rng& rng, int, Tally& t) {
        const DeltaMatroid d = random_vf_safe(rng, max_el);
        LaurentPoly sum;
        for_each_subset(d.all(), [&](ElemSet a) {
            const LaurentPoly chi = characteristic(lower_matroid(dual(loop_complement(d, a))));
            sum += (a.size() % 2 ? -chi : chi);
        });
        t.check("Penrose equals alternating sum of characteristic polynomials", penrose_dm(d) == sum, dm_witness(d));

        const RibbonGraph g = random_graph(rng, o);
        LaurentPoly chrom;
        bool graph_chi = true;
        for_each_subset(g.all_edges(), [&](ElemSet a) {
            const RibbonGraph h = partial_dual(partial_petrial(g, a), g.all_edges());
            const LaurentPoly c = chromatic_whitney(h);
            graph_chi = graph_chi && c == lambda().pow(h.components()) * characteristic(cycle_matroid(h));
            chrom += (a.size() % 2 ? -c : c);
        });
        t.check("chromatic polynomial is lambda^k times characteristic", graph_chi, graph_witness(g));
        t.check("Penrose equals alternating sum of chromatic polynomials", penrose_ribbon(g) == chrom,
                graph_witness(g));
    });
}

// ---------------------------------------------------------------- transition

WeightSystem random_weights(Rng& rng, const GroundSet& ground) {
    if (rng() & 1u) return WeightSystem::uniform_symbolic(ground);
    std::vector<WeightTriple> w;
    auto c = [&] { return LaurentPoly(static_cast<long>(uniform_int(rng, -2, 2))); };
    for (int i = 0; i < ground.size(); ++i) w.push_back({c(), c(), c()});
    return WeightSystem(ground, std::move(w));
}

Tally suite_transition(const SuiteOptions& o) {
    const int max_el = pick(o.max_elements, 5);
    const LaurentPoly t_var = LaurentPoly::var(Var::T);
    return run_trials(o, pick(o.trials, 300), [&](Rng& rng, int, Tally& t) {
        const DeltaMatroid d = random_vf_safe(rng, max_el);
        const WeightSystem w = random_weights(rng, d.ground());
        t.check("state sum equals recursion", transition_dm(d, w, t_var) == transition_recursive(d, w, t_var),
                dm_witness(d));
        const WeightSystem penrose_w = WeightSystem::uniform(d.ground(), {LaurentPoly(0), LaurentPoly(1), LaurentPoly(-1)});
        t.check("weights (0,1,-1) give the Penrose polynomial", transition_dm(d, penrose_w, lambda()) == penrose_dm(d),
                dm_witness(d));
        const auto word = random_word(rng, d.all(), uniform_int(rng, 1, 4));
        t.check("invariant under twisted duality", transition_invariance_check(d, w, word, t_var), dm_witness(d));

        const RibbonGraph g = random_graph(rng, o, std::min(5, std::max(1, o.edges)));
        const WeightSystem wg = random_weights(rng, g.edge_labels());
        t.check("ribbon form equals t^k times delta-matroid form with alpha and beta swapped",
                transition_ribbon(g, wg, t_var) ==
                    t_var.pow(g.components()) * transition_dm(delta_matroid_of(g), wg.swapped_alpha_beta(), t_var),
                graph_witness(g));
    });
}

// ---------------------------------------------------------------- Bollobas-Riordan

std::string kind_case(ElementKind k) {
    switch (k) {
        case ElementKind::DmLoop: return "trivial orientable ribbon loop";
        case ElementKind::NonTrivialOrientableRibbonLoop: return "non-trivial orientable ribbon loop";
        case ElementKind::TrivialNonOrientableRibbonLoop:
        case ElementKind::NonTrivialNonOrientableRibbonLoop: return "non-orientable ribbon loop";
        case ElementKind::Coloop: return "coloop";
        case ElementKind::Ordinary: return "neither ribbon loop nor coloop";
    }
    return "?";
}

void br_checks(const DeltaMatroid& d, Tally& t) {
    const BrTransitionOutcome out = br_from_transition(d);
    t.check("transition specialization with square-root weight", out.root_weight_holds(), dm_witness(d));
    t.observe("transition specialization with squared weight", out.square_weight_holds());
    for (int e = 0; e < d.size(); ++e)
        t.check("deletion-contraction: " + kind_case(element_kind(d, e)), br_recursion_holds_at(d, e),
                [&] { return serialize(d) + " e=" + d.ground().label(e); });

    const Matroid low = lower_matroid(d);
    const int nE = d.size() - low.rank();
    bool lower = true, upper = true;
    for_each_subset(d.all(), [&](ElemSet a) {
        const DeltaMatroid r = restrict_to(d, a);
        lower = lower && lower_matroid(r).rank() == low.rank(a);
        upper = upper && upper_matroid(r).rank() == rho(d, a) - nE + low.nullity(a);
    });
    t.check("lower matroid of a restriction has the restricted rank", lower, dm_witness(d));
    t.check("upper matroid rank of a restriction", upper, dm_witness(d));
}

Tally suite_br(const SuiteOptions& o) {
    const int max_el = pick(o.max_elements, 6);
    Tally t;
    t.check("empty ground set gives 1", br_dm_st(DeltaMatroid()) == LaurentPoly(1) && br_dm(DeltaMatroid()) == LaurentPoly(1));
    t.merge(run_trials(o, pick(o.trials, 300), [&](Rng& rng, int, Tally& t) {
        const RibbonGraph g = random_graph(rng, o);
        const DeltaMatroid dg = delta_matroid_of(g);
        t.check("ribbon form equals delta-matroid form", br_ribbon(g) == br_dm(dg), graph_witness(g));
        t.check("shifted ribbon form equals shifted delta-matroid form", br_ribbon_shifted(g) == br_dm_shifted(dg),
                graph_witness(g));
        br_checks(dg, t);
        br_checks(random_vf_safe(rng, max_el), t);
    }));
    return t;
}

// ---------------------------------------------------------------- binary

Gf2Matrix shaped_matrix(Rng& rng, int max_rows, int max_cols, int shape) {
    const int cols = uniform_int(rng, 1, max_cols);
    const int rows = uniform_int(rng, 1, std::min(max_rows, cols));
    Gf2Matrix m = random_matrix(rng, rows, cols);
    std::vector<ElemSet> r = m.rows();
    if (shape == 1) {
        // all-ones vector in the row space: bipartite
        r.push_back(ElemSet::full(cols));
    } else if (shape == 2) {
        // even rows: the all-ones vector is a cycle, so Eulerian
        for (auto& row : r)
            if (row.size() % 2) row = row ^ ElemSet::single(uniform_int(rng, 0, cols - 1));
    }
    return Gf2Matrix(m.labels(), std::move(r));
}

Tally suite_welsh(const SuiteOptions& o) {
    return run_trials(o, pick(o.trials, 500), [&](Rng& rng, int i, Tally& t) {
        const Gf2Matrix m = shaped_matrix(rng, 5, pick(o.max_elements, 10), i % 3);
        const Matroid mat = matroid_of(m);
        t.check("Eulerian iff dual bipartite", is_eulerian(m) == is_bipartite(m.dual()), matrix_witness(m));
        t.check("Eulerian iff dual bipartite (circuit oracle)",
                is_eulerian_bruteforce(mat) == is_bipartite_bruteforce(dual(mat)), matrix_witness(m));
        t.check("dual matrix represents the dual matroid", matroid_of(m.dual()) == dual(mat), matrix_witness(m));
        t.observe("instance is Eulerian", is_eulerian(m));
    });
}

Tally suite_binary(const SuiteOptions& o) {
    const int max_cols = pick(o.max_elements, 12);
    return run_trials(o, pick(o.trials, 300), [&](Rng& rng, int i, Tally& t) {
        const Gf2Matrix m = shaped_matrix(rng, 6, max_cols, i % 3);
        const int n = m.columns();
        const Matroid mat = matroid_of(m);
        const Gf2Subspace cyc = cycle_space(m), cocyc = cocycle_space(m), bi = bicycle_space(m);

        t.check("Eulerian agrees with circuit oracle", is_eulerian(m) == is_eulerian_bruteforce(mat), matrix_witness(m));
        t.check("bipartite agrees with circuit oracle", is_bipartite(m) == is_bipartite_bruteforce(mat), matrix_witness(m));
        bool orth = cyc.dim() + cocyc.dim() == n;
        for (ElemSet a : cyc.basis())
            for (ElemSet b : cocyc.basis()) orth = orth && (a & b).size() % 2 == 0;
        t.check("cycle and cocycle spaces are orthogonal complements", orth, matrix_witness(m));
        t.check("bicycle space of the dual is the same", bi == bicycle_space(m.dual()), matrix_witness(m));

        const auto cocircuits = circuits(dual(mat));
        bool membership = true;
        for (int k = 0; k < 8; ++k) {
            const ElemSet v = random_subset(rng, ElemSet::full(n));
            bool even = true;
            for (ElemSet c : cocircuits) even = even && (v & c).size() % 2 == 0;
            membership = membership && cyc.contains(v) == even;
        }
        t.check("cycle space is the set of vectors even on every cocircuit", membership, matrix_witness(m));

        if (n <= 8) {
            t.check("bicycle-dimension sum equals delta-matroid Penrose", penrose_binary(m) == penrose_dm(mat),
                    matrix_witness(m));
        }

        const ElemSet a = random_subset(rng, ElemSet::full(n));
        const DeltaMatroid tw = twist(static_cast<const DeltaMatroid&>(mat), a);
        t.check("lower matroid of a twist decomposes", twist_min_decomposition(mat, a) == lower_matroid(tw),
                matrix_witness(m, set_text(m.labels(), a)));
        t.check("upper matroid of a twist decomposes", twist_max_decomposition(mat, a) == upper_matroid(tw),
                matrix_witness(m, set_text(m.labels(), a)));

        const bool bip = is_bipartite(m), eul = is_eulerian(m);
        if (n <= 10 && (bip || eul)) {
            for_each_subset(ElemSet::full(n), [&](ElemSet s) {
                const auto [low_bip, low_eul] = bipartite_eulerian_twist_test(m, s);
                const Matroid low = lower_matroid(twist(static_cast<const DeltaMatroid&>(mat), s));
                const std::string at = set_text(m.labels(), s);
                t.check("twist test agrees with circuit oracle",
                        low_bip == is_bipartite_bruteforce(low) && low_eul == is_eulerian_bruteforce(low),
                        matrix_witness(m, at));
                const bool in_a = bi.contains(s), in_c = bi.contains(ElemSet::full(n) - s);
                if (bip) {
                    t.check("bipartite M: lower matroid bipartite iff A bicycle", low_bip == in_a, matrix_witness(m, at));
                    t.check("bipartite M: lower matroid Eulerian iff complement bicycle", low_eul == in_c,
                            matrix_witness(m, at));
                    t.observe("bipartite M: lower matroid Eulerian iff the contraction of A is Eulerian",
                              low_eul == is_eulerian_bruteforce(minor(mat, ElemSet{}, s)));
                }
                if (eul) {
                    t.check("Eulerian M: lower matroid Eulerian iff A bicycle", low_eul == in_a, matrix_witness(m, at));
                    t.observe("Eulerian M: lower matroid Eulerian iff the restriction to A is bipartite",
                              low_eul == is_bipartite_bruteforce(restrict_to(mat, s)));
                    t.check("Eulerian M: lower matroid bipartite iff complement bicycle", low_bip == in_c,
                            matrix_witness(m, at));
                }
            });
        }
    });
}

// ---------------------------------------------------------------- loops and core

Tally suite_loops(const SuiteOptions& o) {
    const int max_el = pick(o.max_elements, 6);
    return run_trials(o, pick(o.trials, 300), [&](Rng& rng, int, Tally& t) {
        const DeltaMatroid d = random_vf_safe(rng, max_el);
        const GroundSet& g = d.ground();
        for (int e = 0; e < d.size(); ++e) {
            const ElemSet es = ElemSet::single(e);
            const auto w = [&] { return serialize(d) + " e=" + g.label(e); };
            const SetSystem tw = twist(d, es), dp = dual_pivot(d, es);
            const std::array<Matroid, 3> mins = {lower_matroid(d), lower_matroid(tw), lower_matroid(dp)};
            std::array<int, 3> ds{};
            for (int i = 0; i < 3; ++i) ds[static_cast<std::size_t>(i)] = mins[static_cast<std::size_t>(i)].rank();
            int odd = -1;
            for (int i = 0; i < 3; ++i) {
                const int j = (i + 1) % 3, k = (i + 2) % 3;
                if (ds[static_cast<std::size_t>(j)] == ds[static_cast<std::size_t>(k)] &&
                    ds[static_cast<std::size_t>(i)] == ds[static_cast<std::size_t>(j)] + 1)
                    odd = i;
            }
            t.check("two lower ranks agree and the third is one larger", odd >= 0, w);
            int loops = 0;
            for (const auto& m : mins) loops += is_loop(m, e);
            t.check("loop in exactly two lower matroids", loops == 2, w);
            if (odd >= 0) {
                const Matroid& m1 = mins[static_cast<std::size_t>((odd + 1) % 3)];
                const Matroid& m2 = mins[static_cast<std::size_t>((odd + 2) % 3)];
                const Matroid& m3 = mins[static_cast<std::size_t>(odd)];
                const Matroid loop = Matroid::validated(SetSystem(GroundSet({"loop"}), {ElemSet{}}));
                t.check("the two agreeing lower matroids are isomorphic", is_isomorphic(m1, m2).has_value(), w);
                t.check("they are the contraction of the third plus a loop",
                        is_isomorphic(m1, direct_sum(contract_element(m3, e), loop)).has_value(), w);
            }

            const ElementKind k = element_kind(d, e);
            const DeltaMatroid dl = lc(d, es);
            const ElementKind kl = element_kind(dl, e);
            auto ribbon_loop = [](ElementKind x) {
                return x != ElementKind::Coloop && x != ElementKind::Ordinary;
            };
            auto orientable = [](ElementKind x) {
                return x == ElementKind::DmLoop || x == ElementKind::NonTrivialOrientableRibbonLoop;
            };
            auto trivial = [](ElementKind x) {
                return x == ElementKind::DmLoop || x == ElementKind::TrivialNonOrientableRibbonLoop;
            };
            t.check("loop complementation preserves ribbon loops", ribbon_loop(k) == ribbon_loop(kl), w);
            if (ribbon_loop(k)) {
                t.check("loop complementation swaps orientability", orientable(k) != orientable(kl), w);
                t.check("loop complementation preserves triviality", trivial(k) == trivial(kl), w);
            }
            t.check("loop complementation preserves coloops",
                    (k == ElementKind::Coloop) == (kl == ElementKind::Coloop), w);

            const ElementKind kt = element_kind(tw, e);
            t.check("coloop iff loop after twisting e", (k == ElementKind::Coloop) == is_loop(tw, e), w);
            t.check("ordinary iff non-trivial orientable after twisting e",
                    (k == ElementKind::Ordinary) == (kt == ElementKind::NonTrivialOrientableRibbonLoop), w);

            const DeltaMatroid ds_ = dual(d), dls = dual(dl);
            const ElementKind a = element_kind(ds_, e), b = element_kind(dls, e);
            t.check("dual kinds: non-trivial orientable matches",
                    (a == ElementKind::NonTrivialOrientableRibbonLoop) == (b == ElementKind::NonTrivialOrientableRibbonLoop), w);
            t.check("dual kinds: trivial orientable matches",
                    (a == ElementKind::DmLoop) == (b == ElementKind::DmLoop), w);
            t.check("dual kinds: coloop matches trivial non-orientable",
                    (a == ElementKind::Coloop) == (b == ElementKind::TrivialNonOrientableRibbonLoop), w);
            t.check("dual kinds: ordinary matches non-trivial non-orientable",
                    (a == ElementKind::Ordinary) == (b == ElementKind::NonTrivialNonOrientableRibbonLoop), w);

            if (a == ElementKind::NonTrivialOrientableRibbonLoop)
                t.check("dual minors: non-trivial orientable",
                        lower_matroid(delete_element(ds_, e)) == lower_matroid(delete_element(dls, e)), w);
            if (a == ElementKind::Ordinary)
                t.check("dual minors: ordinary",
                        lower_matroid(contract_element(ds_, e)) == lower_matroid(delete_element(dls, e)), w);
            if (a == ElementKind::NonTrivialNonOrientableRibbonLoop)
                t.check("dual minors: non-trivial non-orientable",
                        lower_matroid(delete_element(ds_, e)) == lower_matroid(contract_element(dls, e)), w);

            const ElemSet rest = random_subset(rng, d.all() - es);
            const DeltaMatroid da = lc(d, rest);
            const ElemSet rest_reduced = remove_position(rest, e);
            t.check("contraction commutes with loop complementation",
                    contract_element(da, e) == lc(contract_element(d, e), rest_reduced), w);
            t.check("deletion commutes with loop complementation",
                    delete_element(da, e) == lc(delete_element(d, e), rest_reduced), w);
            t.check("trivial orientable iff coloop of dual after complementing A",
                    (k == ElementKind::DmLoop) == is_coloop(dual(da), e), w);
            t.check("trivial non-orientable iff coloop of dual after complementing A and e",
                    (k == ElementKind::TrivialNonOrientableRibbonLoop) == is_coloop(dual(lc(da, es)), e), w);
        }

        const ElemSet a = random_subset(rng, d.all());
        const Matroid low = lower_matroid(d);
        int s0 = d.size() + 1;
        for (ElemSet b : low.feasible()) s0 = std::min(s0, (b & a).size());
        bool bound = true;
        for (ElemSet f : d.feasible()) bound = bound && (f & a).size() >= s0;
        t.check("every feasible set meets A at least as much as some basis", bound, dm_witness(d));
    });
}

Tally suite_char(const SuiteOptions& o) {
    const int max_el = pick(o.max_elements, 8);
    return run_trials(o, pick(o.trials, 300), [&](Rng& rng, int i, Tally& t) {
        Matroid m;
        if (i % 3 == 0) {
            m = random_binary_matroid(rng, max_el);
        } else if (i % 3 == 1) {
            m = lower_matroid(random_vf_safe(rng, max_el));
        } else {
            const int n = uniform_int(rng, 1, max_el), r = uniform_int(rng, 0, n);
            std::vector<ElemSet> bases;
            for_each_subset(ElemSet::full(n), [&](ElemSet s) {
                if (s.size() == r) bases.push_back(s);
            });
            m = Matroid::validated(SetSystem(GroundSet::numbered(n), std::move(bases)));
        }
        const LaurentPoly chi = characteristic(m);
        for (int e = 0; e < m.size(); ++e) {
            const auto w = [&] { return serialize(m) + " e=" + m.ground().label(e); };
            if (is_loop(m, e)) {
                t.check("loop gives zero", chi.is_zero(), w);
            } else if (is_coloop(m, e)) {
                t.check("coloop factors out lambda - 1", chi == (lambda() - 1) * characteristic(contract_element(m, e)), w);
            } else {
                t.check("deletion-contraction", chi == characteristic(delete_element(m, e)) -
                                                          characteristic(contract_element(m, e)), w);
            }
        }
        t.check("delta-matroid form uses the lower matroid", characteristic_dm(m) == chi, dm_witness(m));
    });
}

Tally suite_closure(const SuiteOptions& o) {
    const int max_el = pick(o.max_elements, 8);
    return run_trials(o, pick(o.trials, 500), [&](Rng& rng, int i, Tally& t) {
        Matroid m;
        if (i % 2 == 0) {
            m = random_binary_matroid(rng, max_el);
        } else {
            m = lower_matroid(delta_matroid_of(random_plane_graph(rng, std::max(1, o.vertices), max_el)));
        }
        const DeltaMatroid d = twist(static_cast<const DeltaMatroid&>(m), random_subset(rng, m.all()));
        t.check("twist of a matroid has no excluded minor", is_twist_of_matroid_em(d), dm_witness(d));
        const ElemSet del = random_subset(rng, d.all());
        const ElemSet con = random_subset(rng, d.all() - del);
        const DeltaMatroid mn = minor(d, del, con);
        t.check("minor has no excluded minor", is_twist_of_matroid_em(mn), dm_witness(mn));
        t.check("minor is a twist of a matroid by search", is_twist_of_matroid_search(mn).has_value(), dm_witness(mn));
        t.check("empty minor leaves the input unchanged", minor(d, ElemSet{}, ElemSet{}) == d, dm_witness(d));
    });
}

void core_checks(const DeltaMatroid& d, Rng& rng, Tally& t) {
    const ElemSet all = d.all();
    const ElemSet a = random_subset(rng, all), b = random_subset(rng, all);
    const auto w = [&] { return serialize(d) + " " + set_text(d.ground(), a) + " B=" + d.ground().format(b); };
    t.check("twist composition", twist(twist(d, a), b) == twist(d, a ^ b), w);
    bool order = true;
    for (int e1 = 0; e1 < d.size(); ++e1)
        for (int e2 = 0; e2 < d.size(); ++e2) {
            const ElemSet s1 = ElemSet::single(e1), s2 = ElemSet::single(e2);
            order = order && loop_complement(loop_complement(d, s1), s2) == loop_complement(loop_complement(d, s2), s1);
        }
    t.check("loop complementation is order independent", order, w);
    const ElemSet bd = b - a;
    t.check("twist and loop complementation commute on disjoint sets",
            loop_complement(twist(d, a), bd) == twist(loop_complement(d, bd), a), w);
    const std::vector<WordStep> tt = {{Generator::Twist, a}, {Generator::Twist, a}};
    const std::vector<WordStep> ll = {{Generator::LoopComplement, a}, {Generator::LoopComplement, a}};
    std::vector<WordStep> tl3;
    for (int i = 0; i < 3; ++i) {
        tl3.push_back({Generator::Twist, a});
        tl3.push_back({Generator::LoopComplement, a});
    }
    t.check("twist is an involution", apply_word(d, tt) == d, w);
    t.check("loop complementation is an involution", apply_word(d, ll) == d, w);
    t.check("twist then loop complementation has order three", apply_word(d, tl3) == d, w);
    t.check("dual pivot mixed identity", dual_pivot(d, a) == loop_complement(twist(loop_complement(d, a), a), a), w);
    const Matroid low = lower_matroid(d), up = upper_matroid(d);
    t.check("lower and upper matroids are matroids",
            is_matroid(low) && is_matroid(up) && validate_delta_matroid(low) && validate_delta_matroid(up), w);
    t.check("serialization round trip", parse_set_system(serialize(d)) == d, w);
    t.check("input satisfies symmetric exchange", validate_delta_matroid(d), w);
    if (d.size() <= 4) t.check("generated input is vf-safe", is_vf_safe(d), w);
}

Tally suite_core(const SuiteOptions& o) {
    const auto corpus = full_corpus(3);
    Tally t = over_corpus(o, corpus, [](const DeltaMatroid& d, Rng& rng, Tally& t) {
        bool comp = true;
        for_each_subset(d.all(), [&](ElemSet a) {
            for_each_subset(d.all(), [&](ElemSet b) { comp = comp && twist(twist(d, a), b) == twist(d, a ^ b); });
        });
        t.check("twist composition over all pairs", comp, dm_witness(d));
        if (is_vf_safe(d)) core_checks(d, rng, t);
    });
    const int max_el = pick(o.max_elements, 6);
    t.merge(run_trials(o, pick(o.trials, 300),
                       [&](Rng& rng, int, Tally& t) { core_checks(random_vf_safe(rng, max_el), rng, t); }));
    return t;
}

// ---------------------------------------------------------------- registry

using SuiteFn = Tally (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"fig1", suite_fig1},
        {"obstructions", suite_obstructions},
        {"corpus4", suite_corpus4},
        {"core", suite_core},
        {"loops", suite_loops},
        {"compat", suite_compat},
        {"ribbon", suite_ribbon},
        {"petrial", suite_petrial},
        {"twisted", suite_twisted},
        {"biseparation", suite_biseparation},
        {"penrose", suite_penrose},
        {"pchi", suite_pchi},
        {"char", suite_char},
        {"transition", suite_transition},
        {"br", suite_br},
        {"welsh", suite_welsh},
        {"binary", suite_binary},
        {"closure", suite_closure},
    };
    return r;
}

Tally suite_determinism(const SuiteOptions& o) {
    Tally t;
    const unsigned many = std::max(2u, std::thread::hardware_concurrency());
    for (const auto& [name, fn] : registry()) {
        SuiteOptions one = o, par = o;
        one.threads = 1;
        par.threads = std::max(many, o.threads);
        const std::string a = Report{name, o.seed, fn(one)}.text();
        const std::string b = Report{name, o.seed, fn(par)}.text();
        const std::string c = Report{name, o.seed, fn(par)}.text();
        t.check(name + " identical under 1 and " + std::to_string(par.threads) + " threads", a == b && b == c,
                [&] { return name; });
    }
    return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        n.push_back("determinism");
        return n;
    }();
    return names;
}

bool is_suite(std::string_view name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

Report run_suite(std::string_view name, const SuiteOptions& opts) {
    if (name == "determinism") return Report{std::string(name), opts.seed, suite_determinism(opts)};
    for (const auto& [n, fn] : registry())
        if (n == name) return Report{n, opts.seed, fn(opts)};
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace deltakit
