#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "deltakit/generators.hpp"

namespace deltakit {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int trials = 0;        ///< 0 selects the suite's default
    int edges = 6;         ///< max edges of random ribbon graphs
    int vertices = 4;      ///< max vertices of random ribbon graphs
    int max_elements = 0;  ///< 0 selects the suite's default
    unsigned threads = 1;
};

/// Per-check pass counts. Checks count towards the summary; observations are
/// informational tallies that do not.
class Tally {
public:
    struct Line {
        std::string name;
        long passed = 0;
        long total = 0;
    };

    void check(std::string_view name, bool ok);
    /// `witness` is evaluated only for the first failure.
    void check(std::string_view name, bool ok, const std::function<std::string()>& witness);
    void observe(std::string_view name, bool held);
    void note(std::string text);
    void merge(const Tally& other);

    const std::vector<Line>& checks() const { return checks_; }
    const std::vector<Line>& observations() const { return observations_; }
    const std::vector<std::string>& notes() const { return notes_; }
    const std::string& counterexample() const { return counterexample_; }
    long passed() const;
    long total() const;

private:
    static Line& line(std::vector<Line>& lines, std::string_view name);

    std::vector<Line> checks_;
    std::vector<Line> observations_;
    std::vector<std::string> notes_;
    std::string counterexample_;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    Tally tally;

    bool ok() const { return tally.passed() == tally.total(); }
    /// Line-oriented report ending in "PASS n/n" or "FAIL k/n" (k = checks passed),
    /// followed by the first counterexample when one exists.
    std::string text() const;
    std::string json() const;
};

/// Runs `body` once per trial on a worker pool; each trial gets its own
/// generator seeded from (seed, trial) and results merge in trial order, so the
/// outcome does not depend on the thread count.
Tally run_trials(const SuiteOptions& opts, int trials, const std::function<void(Rng&, int, Tally&)>& body);

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);
/// Throws DomainError for an unknown suite.
Report run_suite(std::string_view name, const SuiteOptions& opts);

}  // namespace deltakit
