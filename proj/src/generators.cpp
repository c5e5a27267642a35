#include "deltakit/generators.hpp"

#include <algorithm>

#include "deltakit/errors.hpp"

namespace deltakit {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 over a combination of the two inputs
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + trial + 0x632BE59BD9B4E019ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ElemSet random_subset(Rng& rng, ElemSet of) {
    ElemSet out;
    of.for_each([&](int i) {
        if (rng() & 1u) out = out.with(i);
    });
    return out;
}

RotationSystem random_rotation_system(Rng& rng, int vertices, int edges, bool twists) {
    if (vertices < 1) throw DomainError("a random ribbon graph needs at least one vertex");
    RotationSystem rs;
    rs.vertices.assign(static_cast<std::size_t>(vertices), {});
    for (int e = 0; e < edges; ++e) {
        RotationSystem::Edge edge;
        edge.label = std::to_string(e + 1);
        edge.ends = {edge.label + ".0", edge.label + ".1"};
        for (const auto& h : edge.ends)
            rs.vertices[static_cast<std::size_t>(uniform_int(rng, 0, vertices - 1))].push_back(h);
        edge.twisted = twists && (rng() & 1u);
        rs.edges.push_back(std::move(edge));
    }
    for (auto& v : rs.vertices) std::shuffle(v.begin(), v.end(), rng);
    return rs;
}

RibbonGraph random_ribbon_graph(Rng& rng, int max_vertices, int max_edges, bool twists) {
    const int v = uniform_int(rng, 1, max_vertices);
    const int e = uniform_int(rng, 1, max_edges);
    return RibbonGraph::from_rotation_system(random_rotation_system(rng, v, e, twists));
}

RibbonGraph random_plane_graph(Rng& rng, int max_vertices, int max_edges) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        RibbonGraph g = random_ribbon_graph(rng, max_vertices, max_edges, false);
        if (g.is_plane()) return g;
    }
    // A path is always plane.
    RotationSystem rs;
    const int n = std::max(2, max_vertices);
    rs.vertices.assign(static_cast<std::size_t>(n), {});
    for (int e = 0; e + 1 < n; ++e) {
        RotationSystem::Edge edge{std::to_string(e + 1), {std::to_string(e + 1) + ".0", std::to_string(e + 1) + ".1"}, false};
        rs.vertices[static_cast<std::size_t>(e)].push_back(edge.ends[0]);
        rs.vertices[static_cast<std::size_t>(e + 1)].push_back(edge.ends[1]);
        rs.edges.push_back(edge);
    }
    return RibbonGraph::from_rotation_system(rs);
}

Gf2Matrix random_matrix(Rng& rng, int rows, int cols) {
    std::vector<ElemSet> r;
    for (int i = 0; i < rows; ++i) r.push_back(random_subset(rng, ElemSet::full(cols)));
    return Gf2Matrix(GroundSet::numbered(cols), std::move(r));
}

std::vector<WordStep> random_word(Rng& rng, ElemSet all, int steps) {
    std::vector<WordStep> word;
    for (int i = 0; i < steps; ++i)
        word.push_back({(rng() & 1u) ? Generator::Twist : Generator::LoopComplement, random_subset(rng, all)});
    return word;
}

DeltaMatroid random_vf_safe(Rng& rng, int max_elements) {
    SetSystem base;
    if (rng() & 1u) {
        base = delta_matroid_of(random_ribbon_graph(rng, std::max(1, max_elements / 2 + 1), max_elements));
    } else {
        const int n = uniform_int(rng, 1, max_elements);
        base = matroid_of(random_matrix(rng, uniform_int(rng, 1, n), n));
    }
    const auto word = random_word(rng, base.all(), uniform_int(rng, 0, 4));
    return DeltaMatroid::unchecked(apply_word(base, word));
}

Matroid random_binary_matroid(Rng& rng, int max_elements) {
    const int n = uniform_int(rng, 1, max_elements);
    return matroid_of(random_matrix(rng, uniform_int(rng, 1, n), n));
}

std::vector<DeltaMatroid> all_delta_matroids(int n) {
    if (n < 0 || n > 4) throw SizeGuardError("exhaustive enumeration is limited to 4 elements");
    const GroundSet ground = GroundSet::from_chars(std::string("abcd").substr(0, static_cast<std::size_t>(n)));
    const std::uint64_t sets = std::uint64_t{1} << n;
    std::vector<DeltaMatroid> out;
    for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << sets); ++fam) {
        std::vector<ElemSet> f;
        for (std::uint64_t s = 0; s < sets; ++s)
            if (fam >> s & 1u) f.push_back(ElemSet{s});
        SetSystem sys(ground, std::move(f));
        if (validate_delta_matroid(sys)) out.push_back(DeltaMatroid::unchecked(std::move(sys)));
    }
    return out;
}

DeltaMatroid fig1_delta_matroid() {
    const GroundSet g = GroundSet::numbered(8);
    const std::vector<std::vector<std::string>> small = {
        {"3", "4", "6"}, {"3", "4", "7"}, {"3", "5", "6"}, {"3", "5", "7"}, {"4", "5", "6"},
        {"4", "5", "7"}, {"3", "4", "5", "6", "7"}, {"3", "4", "6", "7", "8"}, {"3", "5", "6", "7", "8"}, {"4", "5", "6", "7", "8"},
    };
    auto fam = small;
    for (auto f : small) {
        f.push_back("1");
        f.push_back("2");
        fam.push_back(std::move(f));
    }
    return DeltaMatroid::unchecked(SetSystem::from_labels(g, fam));
}

}  // namespace deltakit
