#include <doctest.h>

#include <cmath>
#include <set>

#include "test_support.hpp"
#include "truthdisc/errors.hpp"
#include "truthdisc/generator.hpp"

using namespace truthdisc;

TEST_CASE("exponential coverage boundaries and midpoint") {
    auto cov = coverage_counts(CoverageDist::E, 50, 1000);
    CHECK(cov[0] == 1);
    CHECK(cov[49] == 1000);
    // Hand evaluation: 1 + 999 * (e^{96/49} - 1)/(e^4 - 1), rounded half-up.
    double mid = 1.0 + 999.0 * (std::exp(4.0 * 24 / 49.0) - 1.0) / (std::exp(4.0) - 1.0);
    CHECK(static_cast<int>(std::floor(mid + 0.5)) == 115);
    CHECK(cov[24] == 115);
}

TEST_CASE("uniform coverage floors the fraction") {
    auto u25 = coverage_counts(CoverageDist::U25, 10, 1000);
    auto u75 = coverage_counts(CoverageDist::U75, 10, 1000);
    for (int c : u25) CHECK(c == 250);
    for (int c : u75) CHECK(c == 750);
}

TEST_CASE("coverage is monotone for the exponential distribution") {
    auto cov = coverage_counts(CoverageDist::E, 37, 500);
    for (std::size_t i = 1; i < cov.size(); ++i) CHECK(cov[i] >= cov[i - 1]);
    for (int c : cov) {
        CHECK(c >= 1);
        CHECK(c <= 500);
    }
}

TEST_CASE("conflict counts") {
    SUBCASE("uniform gives every item the maximum") {
        for (int k : conflict_counts(ConflictDist::U, 100, 5)) CHECK(k == 5);
    }
    SUBCASE("exponential boundaries at |D|=1000, max=20") {
        auto k = conflict_counts(ConflictDist::E, 1000, 20);
        CHECK(k[0] == 4);      // 19 e^{-1.996} + 1, rounded half-up
        CHECK(k[999] == 20);   // ~20.04, clamped
        for (std::size_t i = 1; i < k.size(); ++i) CHECK(k[i] >= k[i - 1]);
    }
}

TEST_CASE("truth quotas per distribution") {
    std::vector<int> coverage(50, 100);
    SUBCASE("FP splits 40 liars / 10 saints exactly") {
        Rng rng(3);
        auto q = truth_quota(TruthDist::FP, coverage, rng);
        int zeros = 0, fulls = 0;
        for (int i = 0; i < 50; ++i) {
            if (q[i] == 0) ++zeros;
            if (q[i] == 100) ++fulls;
        }
        CHECK(zeros == 40);
        CHECK(fulls == 10);
    }
    SUBCASE("U75 floors the per-source fraction") {
        Rng rng(3);
        std::vector<int> cov250(50, 250);
        auto q = truth_quota(TruthDist::U75, cov250, rng);
        for (int v : q) CHECK(v == 187);
    }
    SUBCASE("exponential spectrum runs from 0 to full coverage") {
        Rng rng(3);
        auto q = truth_quota(TruthDist::E, coverage, rng);
        CHECK(q.front() == 0);
        CHECK(q.back() == 100);
        for (std::size_t i = 1; i < q.size(); ++i) CHECK(q[i] >= q[i - 1]);
    }
    SUBCASE("random quotas stay within the coverage") {
        Rng rng(3);
        auto q = truth_quota(TruthDist::R, coverage, rng);
        for (int v : q) {
            CHECK(v >= 0);
            CHECK(v <= 100);
        }
    }
}

TEST_CASE("generated U75 scenario meets its quotas exactly") {
    ScenarioConfig cfg;
    cfg.n_sources = 50;
    cfg.n_items = 1000;
    cfg.cov = CoverageDist::U25;
    cfg.conf = ConflictDist::U;
    cfg.gt = TruthDist::U75;
    cfg.max_distinct = 2;
    cfg.seed = 7;
    auto s = generate_scenario(cfg);
    CHECK(s.claims.size() == 50u * 250u);
    for (int src = 0; src < 50; ++src) {
        CHECK(s.metadata.coverage[src] == 250);
        CHECK(s.metadata.achieved_true[src] == 187);  // floor(.75 * 250)
    }
    CHECK(s.metadata.quota_slips == 0);
    CHECK(s.ground_truth.size() == 1000);
}

TEST_CASE("the same seed regenerates an identical scenario") {
    ScenarioConfig cfg;
    cfg.n_sources = 20;
    cfg.n_items = 100;
    cfg.cov = CoverageDist::E;
    cfg.conf = ConflictDist::E;
    cfg.gt = TruthDist::R;
    cfg.max_distinct = 6;
    cfg.seed = 99;
    auto a = generate_scenario(cfg);
    auto b = generate_scenario(cfg);
    CHECK(a.claims == b.claims);
    CHECK(a.ground_truth == b.ground_truth);
    cfg.seed = 100;
    auto c = generate_scenario(cfg);
    CHECK(a.claims != c.claims);
}

TEST_CASE("fully optimistic scenarios put the mean true rate at .8 or above") {
    ScenarioConfig cfg;
    cfg.n_sources = 50;
    cfg.n_items = 200;
    cfg.cov = CoverageDist::U25;
    cfg.conf = ConflictDist::U;
    cfg.gt = TruthDist::FO;
    cfg.max_distinct = 4;
    cfg.seed = 11;
    auto s = generate_scenario(cfg);
    CHECK(s.metadata.mean_true_rate >= 0.8 - 1e-9);
}

TEST_CASE("every claimed value comes from the item's candidate pool") {
    ScenarioConfig cfg;
    cfg.n_sources = 15;
    cfg.n_items = 60;
    cfg.cov = CoverageDist::E;
    cfg.conf = ConflictDist::E;
    cfg.gt = TruthDist::P80;
    cfg.max_distinct = 5;
    cfg.seed = 4;
    auto s = generate_scenario(cfg);

    // Candidate pool tokens carry the item index; spot-check membership and
    // the achieved-distinct accounting.
    std::map<std::string, std::set<std::string>> seen;
    for (const Claim& c : s.claims) {
        CHECK(c.value.substr(1, c.data_item_id.size() - 1) ==
              c.data_item_id.substr(1));  // v<item>_ prefix matches d<item>
        seen[c.data_item_id].insert(c.value);
    }
    for (const auto& [item, values] : seen) {
        int d = std::stoi(item.substr(1));
        CHECK(static_cast<int>(values.size()) == s.metadata.achieved_distinct[d]);
        CHECK(static_cast<int>(values.size()) <= s.metadata.requested_distinct[d]);
    }
    // Exponential coverage makes thin items unavoidable; the shortfall is
    // recorded instead of rejected.
    CHECK(s.metadata.items_with_shortfall > 0);
}

TEST_CASE("items reach their conflict count when claims suffice") {
    ScenarioConfig cfg;
    cfg.n_sources = 50;
    cfg.n_items = 40;
    cfg.cov = CoverageDist::U75;  // 30 claims per item on average
    cfg.conf = ConflictDist::U;
    cfg.gt = TruthDist::U25;
    cfg.max_distinct = 6;
    cfg.seed = 21;
    auto s = generate_scenario(cfg);
    int claims_per_item_min = 50 * 30 / 40 / 2;  // loose lower bound
    REQUIRE(claims_per_item_min > 6);
    for (int d = 0; d < cfg.n_items; ++d) {
        CHECK(s.metadata.achieved_distinct[d] == 6);
    }
    CHECK(s.metadata.items_with_shortfall == 0);
}

TEST_CASE("generator validation") {
    ScenarioConfig cfg;
    cfg.max_distinct = 1;
    CHECK_THROWS_AS(cfg.validate(), SpecError);
    cfg.max_distinct = 2;
    cfg.n_sources = 0;
    CHECK_THROWS_AS(cfg.validate(), SpecError);
    cfg.n_sources = 1;
    cfg.cov = CoverageDist::E;
    CHECK_THROWS_AS(cfg.validate(), SpecError);
}
