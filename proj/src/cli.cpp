#include "deltakit/cli.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltakit/binary_matroid.hpp"
#include "deltakit/errors.hpp"
#include "deltakit/io.hpp"
#include "deltakit/polynomials.hpp"
#include "deltakit/structure.hpp"
#include "deltakit/suites.hpp"

namespace deltakit::cli {

namespace {

using Json = nlohmann::ordered_json;

// vf-safety is checked exhaustively only up to this size; beyond it the
// precondition is the caller's responsibility.
constexpr int kVfSafeCheckLimit = 6;

struct Flags {
    std::string verb;
    std::vector<std::string> args;
    std::uint64_t seed = 1;
    int edges = 6;
    int vertices = 4;
    int trials = 0;
    int max_elements = 0;
    std::string format = "text";
    unsigned threads = 0;
    std::string set;
    bool set_given = false;
    std::string weights;
};

class UsageError : public Error {
public:
    using Error::Error;
};

const std::vector<std::pair<std::string, std::string>>& verbs() {
    static const std::vector<std::pair<std::string, std::string>> v = {
        {"dm-validate", "FILE             check the symmetric exchange axiom"},
        {"dm-twist", "FILE --set A     twist D*A"},
        {"dm-loopc", "FILE --set A     loop complementation D+A"},
        {"dm-dual-pivot", "FILE --set A     dual pivot"},
        {"dm-kind", "FILE [--set A]   element kinds"},
        {"dm-penrose", "FILE             Penrose polynomial in l"},
        {"dm-char", "FILE             characteristic polynomial of the lower matroid"},
        {"dm-transition", "FILE [--weights a,b,c]  transition polynomial in t"},
        {"dm-br", "FILE             Bollobas-Riordan polynomial in x, y, z"},
        {"dm-twistrec", "FILE             all twists giving a matroid"},
        {"rg-to-dm", "FILE             delta-matroid of a ribbon graph"},
        {"rg-dual", "FILE [--set A]   partial dual (default: all edges)"},
        {"rg-petrial", "FILE [--set A]   partial Petrial (default: all edges)"},
        {"rg-genus", "FILE             vertices, edges, faces, components, Euler genus"},
        {"rg-penrose", "FILE             Penrose polynomial of a ribbon graph"},
        {"rg-transition", "FILE [--weights a,b,c]  ribbon transition polynomial"},
        {"bm-spaces", "FILE             cycle, cocycle and bicycle space bases"},
        {"bm-eulerian", "FILE             is the binary matroid Eulerian"},
        {"bm-penrose", "FILE             Penrose polynomial from bicycle dimensions"},
        {"suite-run", "NAME             run a property suite"},
    };
    return v;
}

std::string usage() {
    std::ostringstream out;
    out << "usage: deltakit <verb> [args] [--seed N] [--edges N] [--vertices N] [--trials N]\n"
           "                [--max-elements N] [--format json|text] [--threads N] [--set a,b] [--weights a,b,c]\n"
           "verbs:\n";
    for (const auto& [v, help] : verbs()) out << "  " << v << std::string(15 - std::min<std::size_t>(14, v.size()), ' ') << help << "\n";
    out << "suites:";
    for (const auto& s : suite_names()) out << " " << s;
    out << "\n";
    return out.str();
}

const std::string& file_arg(const Flags& f) {
    if (f.args.size() != 1) throw UsageError(f.verb + " expects exactly one argument");
    return f.args[0];
}

SetSystem load_set_system(const Flags& f) {
    SetSystem s = parse_set_system(read_file(file_arg(f)));
    if (!s.proper()) throw ParseError("feasible", "the feasible family is empty");
    return s;
}

DeltaMatroid load_delta_matroid(const Flags& f) {
    SetSystem s = load_set_system(f);
    if (!validate_delta_matroid(s)) throw ParseError("feasible", "not a delta-matroid (symmetric exchange fails)");
    return DeltaMatroid::unchecked(std::move(s));
}

DeltaMatroid load_vf_safe(const Flags& f) {
    DeltaMatroid d = load_delta_matroid(f);
    if (d.size() <= kVfSafeCheckLimit && !is_vf_safe(d))
        throw ParseError("feasible", "the delta-matroid is not vf-safe");
    return d;
}

RibbonGraph load_graph(const Flags& f) {
    return RibbonGraph::from_rotation_system(parse_rotation_system(read_file(file_arg(f))));
}

Gf2Matrix load_matrix(const Flags& f) { return parse_matrix(read_file(file_arg(f))); }

ElemSet parse_set(const GroundSet& ground, const std::string& text) {
    ElemSet out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (item.empty()) continue;
        const int i = ground.find(item);
        if (i < 0) throw ParseError("set", "unknown element '" + item + "'");
        out = out.with(i);
    }
    return out;
}

ElemSet required_set(const Flags& f, const GroundSet& ground) {
    if (!f.set_given) throw UsageError(f.verb + " requires --set");
    return parse_set(ground, f.set);
}

ElemSet set_or_all(const Flags& f, const GroundSet& ground) {
    return f.set_given ? parse_set(ground, f.set) : ground.all();
}

WeightSystem weights_for(const Flags& f, const GroundSet& ground) {
    if (f.weights.empty()) return WeightSystem::uniform_symbolic(ground);
    std::vector<LaurentPoly> parts;
    std::string item;
    std::istringstream in(f.weights);
    while (std::getline(in, item, ',')) parts.push_back(LaurentPoly::parse(item));
    if (parts.size() != 3) throw ParseError("weights", "expected three comma-separated polynomials");
    return WeightSystem::uniform(ground, {parts[0], parts[1], parts[2]});
}

void emit_system(const Flags& f, std::ostream& out, const SetSystem& s) {
    out << (f.format == "json" ? serialize(s) : s.to_string()) << "\n";
}

void emit_poly(const Flags& f, std::ostream& out, const LaurentPoly& p) {
    if (f.format == "json") {
        out << Json{{"polynomial", p.to_string()}}.dump() << "\n";
    } else {
        out << p.to_string() << "\n";
    }
}

int emit_bool(const Flags& f, std::ostream& out, const char* key, bool value) {
    if (f.format == "json") {
        out << Json{{key, value}}.dump() << "\n";
    } else {
        out << (value ? "true" : "false") << "\n";
    }
    return value ? kOk : kFalse;
}

void emit_space(Json& doc, std::ostream& out, bool json, const char* name, const Gf2Subspace& s, const GroundSet& g) {
    std::vector<std::string> basis;
    for (ElemSet v : s.basis()) basis.push_back(g.format(v));
    if (json) {
        doc[name] = {{"dim", s.dim()}, {"basis", basis}};
    } else {
        out << name << " dim " << s.dim() << ":";
        for (const auto& b : basis) out << " " << b;
        out << "\n";
    }
}

int dispatch(const Flags& f, std::ostream& out) {
    const std::string& v = f.verb;
    const bool json = f.format == "json";

    if (v == "dm-validate") {
        const SetSystem s = load_set_system(f);
        return emit_bool(f, out, "delta_matroid", validate_delta_matroid(s));
    }
    if (v == "dm-twist") {
        const DeltaMatroid d = load_delta_matroid(f);
        emit_system(f, out, twist(d, required_set(f, d.ground())));
        return kOk;
    }
    if (v == "dm-loopc") {
        const SetSystem s = load_set_system(f);
        emit_system(f, out, loop_complement(s, required_set(f, s.ground())));
        return kOk;
    }
    if (v == "dm-dual-pivot") {
        const SetSystem s = load_set_system(f);
        emit_system(f, out, dual_pivot(s, required_set(f, s.ground())));
        return kOk;
    }
    if (v == "dm-kind") {
        const DeltaMatroid d = load_vf_safe(f);
        const ElemSet which = set_or_all(f, d.ground());
        Json doc = Json::object();
        which.for_each([&](int e) {
            const std::string kind(to_string(element_kind(d, e)));
            if (json) {
                doc[d.ground().label(e)] = kind;
            } else {
                out << d.ground().label(e) << ": " << kind << "\n";
            }
        });
        if (json) out << doc.dump() << "\n";
        return kOk;
    }
    if (v == "dm-penrose") {
        emit_poly(f, out, penrose_dm(load_vf_safe(f)));
        return kOk;
    }
    if (v == "dm-char") {
        emit_poly(f, out, characteristic_dm(load_delta_matroid(f)));
        return kOk;
    }
    if (v == "dm-transition") {
        const DeltaMatroid d = load_vf_safe(f);
        emit_poly(f, out, transition_dm(d, weights_for(f, d.ground()), LaurentPoly::var(Var::T)));
        return kOk;
    }
    if (v == "dm-br") {
        emit_poly(f, out, br_dm(load_delta_matroid(f)));
        return kOk;
    }
    if (v == "dm-twistrec") {
        const DeltaMatroid d = load_delta_matroid(f);
        const auto sets = twist_sets_yielding_matroid(d);
        std::vector<std::string> text;
        for (ElemSet b : sets) text.push_back(d.ground().format(b));
        if (json) {
            out << Json{{"twist_sets", text}}.dump() << "\n";
        } else if (text.empty()) {
            out << "none\n";
        } else {
            for (std::size_t i = 0; i < text.size(); ++i) out << (i ? " " : "") << text[i];
            out << "\n";
        }
        return sets.empty() ? kFalse : kOk;
    }
    if (v == "rg-to-dm") {
        emit_system(f, out, delta_matroid_of(load_graph(f)));
        return kOk;
    }
    if (v == "rg-dual" || v == "rg-petrial") {
        const RibbonGraph g = load_graph(f);
        const ElemSet a = set_or_all(f, g.edge_labels());
        const RibbonGraph h = v == "rg-dual" ? partial_dual(g, a) : partial_petrial(g, a);
        out << serialize(h.to_rotation_system()) << "\n";
        return kOk;
    }
    if (v == "rg-genus") {
        const RibbonGraph g = load_graph(f);
        const std::vector<std::pair<const char*, int>> rows = {
            {"vertices", g.vertices()}, {"edges", g.edges()},         {"faces", g.boundary_components()},
            {"components", g.components()}, {"euler_genus", g.euler_genus()}};
        Json doc;
        for (const auto& [k, n] : rows) {
            if (json) {
                doc[k] = n;
            } else {
                out << k << " " << n << "\n";
            }
        }
        if (json) {
            doc["orientable"] = g.is_orientable();
            out << doc.dump() << "\n";
        } else {
            out << "orientable " << (g.is_orientable() ? "true" : "false") << "\n";
        }
        return kOk;
    }
    if (v == "rg-penrose") {
        emit_poly(f, out, penrose_ribbon(load_graph(f)));
        return kOk;
    }
    if (v == "rg-transition") {
        const RibbonGraph g = load_graph(f);
        emit_poly(f, out, transition_ribbon(g, weights_for(f, g.edge_labels()), LaurentPoly::var(Var::T)));
        return kOk;
    }
    if (v == "bm-spaces") {
        const Gf2Matrix m = load_matrix(f);
        Json doc;
        emit_space(doc, out, json, "cycle", cycle_space(m), m.labels());
        emit_space(doc, out, json, "cocycle", cocycle_space(m), m.labels());
        emit_space(doc, out, json, "bicycle", bicycle_space(m), m.labels());
        if (json) out << doc.dump() << "\n";
        return kOk;
    }
    if (v == "bm-eulerian") return emit_bool(f, out, "eulerian", is_eulerian(load_matrix(f)));
    if (v == "bm-penrose") {
        emit_poly(f, out, penrose_binary(load_matrix(f)));
        return kOk;
    }
    if (v == "suite-run") {
        const std::string& name = file_arg(f);
        if (!is_suite(name)) throw UsageError("unknown suite '" + name + "'");
        SuiteOptions o;
        o.seed = f.seed;
        o.trials = f.trials;
        o.edges = f.edges;
        o.vertices = f.vertices;
        o.max_elements = f.max_elements;
        o.threads = f.threads ? f.threads : std::max(1u, std::thread::hardware_concurrency());
        const Report r = run_suite(name, o);
        out << (json ? r.json() : r.text());
        return r.ok() ? kOk : kFalse;
    }
    throw UsageError("unknown verb '" + v + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"delta-matroid and ribbon graph toolkit"};
    app.set_help_flag();
    app.add_option("verb", f.verb)->required();
    app.add_option("args", f.args);
    app.add_option("--seed", f.seed);
    app.add_option("--edges", f.edges)->check(CLI::Range(1, 24));
    app.add_option("--vertices", f.vertices)->check(CLI::Range(1, 64));
    app.add_option("--trials", f.trials)->check(CLI::NonNegativeNumber);
    app.add_option("--max-elements", f.max_elements)->check(CLI::Range(0, 24));
    app.add_option("--format", f.format)->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", f.threads);
    auto* set = app.add_option("--set", f.set);
    app.add_option("--weights", f.weights);
    app.allow_extras(false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << usage();
        return kUsage;
    }
    f.set_given = set->count() > 0;

    try {
        return dispatch(f, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << usage();
        return kUsage;
    } catch (const SizeGuardError& e) {
        err << "size guard: " << e.what() << "\n";
        return kSizeGuard;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace deltakit::cli
