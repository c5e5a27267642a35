// Acceptance run: one PASS/FAIL line per criterion, then the reports behind
// every failure.
//
// Exit status is 0 when every criterion passes or fails only in a way that
// comes with a verified report: the plane-biseparation cross-check may fail
// with its counterexample printed, and the binary suite may fail only on the
// two Eulerian-lower-matroid statements, and only while the two-element
// counterexample below still disproves them. Any other failure exits 1.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "deltakit/binary_matroid.hpp"
#include "deltakit/cli.hpp"
#include "deltakit/generators.hpp"
#include "deltakit/io.hpp"
#include "deltakit/setsystem.hpp"
#include "deltakit/suites.hpp"

using namespace deltakit;

namespace {

struct Outcome {
    bool pass = false;
    bool excused = false;  // failed, with a verified report
    std::string summary;
    std::vector<std::string> report;
    std::vector<Report> suites;
};

struct Criterion {
    int id;
    std::string title;
    double limit_s;  // 0 means no limit
    std::function<Outcome()> run;
};

SuiteOptions options() {
    SuiteOptions o;
    o.seed = 1;
    o.threads = std::max(1u, std::thread::hardware_concurrency());
    return o;
}

Outcome from_suites(const std::vector<std::string>& names) {
    Outcome out;
    out.pass = true;
    std::ostringstream sum;
    for (const auto& n : names) {
        Report r = run_suite(n, options());
        sum << (sum.tellp() > 0 ? ", " : "") << n << ' ' << r.tally.passed() << '/' << r.tally.total();
        if (!r.ok()) {
            out.pass = false;
            out.report.push_back(r.text());
        }
        out.suites.push_back(std::move(r));
    }
    out.summary = sum.str();
    return out;
}

std::string data_file(const std::string& name) { return std::string(DELTAKIT_DATA_DIR) + "/" + name; }

Outcome eight_element_example() {
    Outcome out = from_suites({"fig1"});
    const SetSystem parsed = parse_set_system(read_file(data_file("fig1.json")));
    const bool file_ok = parsed == static_cast<const SetSystem&>(fig1_delta_matroid()) &&
                         parsed.family_size() == 20 && validate_delta_matroid(parsed);
    std::ostringstream cli_out, cli_err;
    const int code = cli::run({"dm-twistrec", data_file("fig1.json")}, cli_out, cli_err);
    const bool cli_ok = code == cli::kOk && cli_out.str() == "{1,6,7} {2,6,7} {1,3,4,5,8} {2,3,4,5,8}\n";
    if (!file_ok) out.report.push_back("data/fig1.json does not match the built-in family");
    if (!cli_ok) out.report.push_back("dm-twistrec printed: " + cli_out.str() + cli_err.str());
    out.pass = out.pass && file_ok && cli_ok;
    out.summary += ", data file " + std::string(file_ok ? "ok" : "mismatch") + ", dm-twistrec " +
                   (cli_ok ? "ok" : "mismatch");
    return out;
}

Outcome biseparation() {
    Outcome out = from_suites({"biseparation"});
    if (!out.pass && !out.suites[0].tally.counterexample().empty()) {
        out.excused = true;
        out.summary += "; literal statement fails, counterexample reported";
    }
    return out;
}

// Parallel pair {1,2}: both Eulerian and bipartite. Twisting by A = {1} turns
// both elements into loops of the lower matroid, which is then Eulerian, yet
// {1} is not in the bicycle space {{}, {1,2}}.
bool eulerian_statements_disproved() {
    const Gf2Matrix m = parse_matrix(R"({"labels":["1","2"],"rows":["11"]})");
    const ElemSet a = ElemSet::single(0);
    const Matroid low = lower_matroid(twist(static_cast<const DeltaMatroid&>(matroid_of(m)), a));
    const bool low_eulerian = is_eulerian_bruteforce(low) && bipartite_eulerian_twist_test(m, a).second;
    const Gf2Subspace bi = bicycle_space(m);
    return is_eulerian(m) && is_bipartite(m) && low_eulerian && !bi.contains(a) &&
           !bi.contains(ElemSet::full(2) - a);
}

Outcome binary() {
    Outcome out = from_suites({"welsh", "binary"});
    if (out.pass) return out;
    const std::set<std::string> disproved = {
        "bipartite M: lower matroid Eulerian iff complement bicycle",
        "Eulerian M: lower matroid Eulerian iff A bicycle",
    };
    bool only_disproved = out.suites[0].ok();
    for (const auto& line : out.suites[1].tally.checks())
        if (line.passed != line.total && !disproved.count(line.name)) only_disproved = false;
    const bool verified = eulerian_statements_disproved();
    out.report.push_back(std::string("two-element counterexample {1,2} parallel, A = {1}: ") +
                         (verified ? "lower matroid Eulerian, A and its complement not bicycles"
                                   : "did not reproduce"));
    if (only_disproved && verified) {
        out.excused = true;
        out.summary += "; only the two Eulerian-lower-matroid statements fail, and they are false as stated";
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "eight-element golden example", 1.0, eight_element_example},
        {2, "obstruction facts", 1.0, [] { return from_suites({"obstructions"}); }},
        {3, "exhaustive four-element corpus", 120.0, [] { return from_suites({"corpus4"}); }},
        {4, "ribbon compatibility", 120.0, [] { return from_suites({"compat", "ribbon", "petrial", "twisted"}); }},
        {5, "Penrose agreement", 300.0, [] { return from_suites({"penrose", "pchi"}); }},
        {6, "transition polynomial", 300.0, [] { return from_suites({"transition"}); }},
        {7, "Bollobas-Riordan", 300.0, [] { return from_suites({"br"}); }},
        {8, "binary matroids", 300.0, binary},
        {9, "plane biseparation cross-check", 0.0, biseparation},
        {10, "determinism across thread counts", 0.0, [] { return from_suites({"determinism"}); }},
    };

    int passed = 0;
    bool acceptable = true;
    std::vector<std::pair<int, Outcome>> failures;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("error: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
        if (!in_time) {
            o.pass = o.excused = false;
            o.summary += "; over the time limit";
        }
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(2);
        t << secs << "s";
        if (c.limit_s > 0) t << " < " << static_cast<int>(c.limit_s) << "s";
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " (" << t.str()
                  << ")  " << o.summary << '\n';
        if (o.pass) ++passed;
        else {
            if (!o.excused) acceptable = false;
            failures.emplace_back(c.id, o);
        }
    }
    for (const auto& [id, o] : failures) {
        std::cout << "\n--- criterion " << id << (o.excused ? " (failure with verified report)" : "") << '\n';
        for (const auto& r : o.report) std::cout << r << (r.ends_with('\n') ? "" : "\n");
    }
    std::cout << "\n" << passed << "/" << criteria.size() << " criteria pass; "
              << (acceptable ? "every failure carries a verified report" : "unexpected failure") << '\n';
    return acceptable ? 0 : 1;
}
