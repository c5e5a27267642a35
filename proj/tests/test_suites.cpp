#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "deltakit/errors.hpp"
#include "deltakit/suites.hpp"

using namespace deltakit;

TEST_CASE("trial seeds are distinct and reproducible") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(trial_seed(5, i));
    CHECK(seen.size() == 1000);
    CHECK(trial_seed(5, 17) == trial_seed(5, 17));
    CHECK(trial_seed(5, 17) != trial_seed(6, 17));
}

TEST_CASE("tally counts checks but not observations") {
    Tally t;
    t.check("always", true);
    t.check("sometimes", false, [] { return std::string("w"); });
    t.check("sometimes", true);
    t.observe("seen", false);
    CHECK(t.passed() == 2);
    CHECK(t.total() == 3);
    CHECK(t.counterexample().find("w") != std::string::npos);
    Report r{"demo", 4, t};
    CHECK(!r.ok());
    const std::string text = r.text();
    CHECK(text.find("suite demo seed 4") == 0);
    CHECK(text.find("FAIL 2/3") != std::string::npos);
    CHECK(text.find("observed, not asserted: seen: 0/1") != std::string::npos);
}

TEST_CASE("trial results merge in trial order whatever the thread count") {
    auto body = [](Rng& rng, int i, Tally& t) {
        t.check("trial " + std::to_string(i % 3), rng() % 2 == 0);
    };
    SuiteOptions one;
    one.threads = 1;
    SuiteOptions four = one;
    four.threads = 4;
    const Tally a = run_trials(one, 200, body), b = run_trials(four, 200, body);
    REQUIRE(a.checks().size() == b.checks().size());
    for (std::size_t i = 0; i < a.checks().size(); ++i) {
        CHECK(a.checks()[i].name == b.checks()[i].name);
        CHECK(a.checks()[i].passed == b.checks()[i].passed);
    }
    CHECK(a.checks()[0].name == "trial 0");
}

TEST_CASE("exceptions inside a trial are recorded as failures") {
    SuiteOptions o;
    const Tally t = run_trials(o, 3, [](Rng&, int i, Tally& tt) {
        if (i == 1) throw DomainError("boom");
        tt.check("fine", true);
    });
    CHECK(t.passed() == 2);
    CHECK(t.total() == 3);
}

TEST_CASE("suite registry") {
    CHECK(is_suite("compat"));
    CHECK(is_suite("determinism"));
    CHECK(!is_suite("nope"));
    CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), DomainError);
}

TEST_CASE("reports are identical under different thread counts") {
    SuiteOptions o;
    o.seed = 11;
    o.trials = 30;
    for (const char* name : {"compat", "penrose", "binary", "biseparation"}) {
        o.threads = 1;
        const std::string a = run_suite(name, o).text();
        o.threads = 3;
        CHECK(run_suite(name, o).text() == a);
        CHECK(run_suite(name, o).json() == run_suite(name, o).json());
    }
}
