#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "mlbalance/error.hpp"
#include "mlbalance/planner.hpp"
#include "oracles.hpp"

using namespace mlbalance;

namespace {

OccurrencePlan plan_with(const LabelsetTable& table, CountVector n_u) {
    OccurrencePlan p;
    p.n_u = std::move(n_u);
    p.bounds = make_bounds(table.original_counts(), BalanceParams{});
    return p;
}

std::map<std::string, int> clones_per_sample(const AugmentationManifest& m) {
    std::map<std::string, int> out;
    for (const auto& e : m.entries) {
        ++out[e.sample_id];
    }
    return out;
}

} // namespace

TEST_CASE("round robin assignment") {
    SUBCASE("two members, three clones") {
        const auto t = oracle::make_table({{1, 0}}, {2});
        const auto m = plan_augmentations(t, plan_with(t, {5}), 0);
        REQUIRE(m.entries.size() == 3);
        CHECK(m.entries[0].sample_id == "s0");
        CHECK(m.entries[0].clone_index == 1);
        CHECK(m.entries[1].sample_id == "s1");
        CHECK(m.entries[1].clone_index == 1);
        CHECK(m.entries[2].sample_id == "s0");
        CHECK(m.entries[2].clone_index == 2);
        const auto per = clones_per_sample(m);
        CHECK(per.at("s0") == 2);
        CHECK(per.at("s1") == 1);
    }
    SUBCASE("no growth, empty manifest") {
        const auto t = oracle::make_table({{1, 0}, {0, 1}}, {2, 3});
        CHECK(plan_augmentations(t, plan_with(t, {2, 3}), 0).entries.empty());
    }
    SUBCASE("single member grown to the cap") {
        const auto t = oracle::make_table({{1, 1}}, {1});
        const auto m = plan_augmentations(t, plan_with(t, {10}), 0);
        REQUIRE(m.entries.size() == 9);
        for (std::size_t i = 0; i < 9; ++i) {
            CHECK(m.entries[i].sample_id == "s0");
            CHECK(m.entries[i].clone_index == i + 1);
        }
    }
    SUBCASE("misaligned plan") {
        const auto t = oracle::make_table({{1, 0}, {0, 1}}, {2, 3});
        CHECK_THROWS_AS(plan_augmentations(t, plan_with(t, {2}), 0), DimensionError);
        CHECK_THROWS_AS(plan_augmentations(t, plan_with(t, {1, 3}), 0), DomainError);
    }
}

TEST_CASE("manifest invariants on random plans") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = oracle::random_instance(rng, static_cast<std::size_t>(rng.uniform_int(1, 8)), 4, 12);
        const auto t = oracle::make_table(inst.labelsets, inst.counts);
        const auto bounds = make_bounds(inst.counts, BalanceParams{});
        CountVector n_u;
        for (std::size_t r = 0; r < inst.counts.size(); ++r) {
            n_u.push_back(rng.uniform_int(bounds.lower[r], bounds.upper[r]));
        }
        const auto seed = static_cast<std::uint64_t>(rng.uniform_int(0, 1000));
        const auto m = plan_augmentations(t, plan_with(t, n_u), seed);

        Count growth = 0;
        for (std::size_t r = 0; r < n_u.size(); ++r) {
            growth += n_u[r] - inst.counts[r];
        }
        CHECK(static_cast<Count>(m.entries.size()) == growth);

        std::set<std::pair<std::string, std::uint32_t>> keys;
        for (const auto& e : m.entries) {
            CHECK(keys.emplace(e.sample_id, e.clone_index).second);
        }
        const auto per = clones_per_sample(m);
        for (std::size_t r = 0; r < t.num_rows(); ++r) {
            int lo = INT32_MAX;
            int hi = 0;
            int sum = 0;
            for (const auto& id : t.rows()[r].members) {
                const auto it = per.find(id);
                const int k = it == per.end() ? 0 : it->second;
                lo = std::min(lo, k);
                hi = std::max(hi, k);
                sum += k;
            }
            CHECK(hi - lo <= 1);
            CHECK(sum == n_u[r] - inst.counts[r]);
        }

        std::ostringstream a;
        std::ostringstream b;
        write_manifest_csv(a, m);
        write_manifest_csv(b, plan_augmentations(t, plan_with(t, n_u), seed));
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("sample_op distribution and ranges") {
    Rng rng(2024);
    std::map<AugOpKind, int> freq;
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) {
        const auto op = sample_op(rng);
        ++freq[op.kind];
        const auto ranges = param_ranges(op.kind);
        REQUIRE(op.params.size() == ranges.size());
        for (const auto& r : ranges) {
            const double v = op.params.at(r.name);
            CHECK(v >= r.lo);
            CHECK(v <= r.hi);
        }
    }
    REQUIRE(freq.size() == 6);
    for (const auto& [kind, n] : freq) {
        CHECK(std::abs(static_cast<double>(n) / draws - 1.0 / 6.0) <= 0.01);
    }

    Rng a(77);
    Rng b(77);
    for (int i = 0; i < 100; ++i) {
        const auto x = sample_op(a);
        const auto y = sample_op(b);
        CHECK(x.kind == y.kind);
        CHECK(x.params == y.params);
    }
}

TEST_CASE("op names and params json") {
    CHECK(to_string(AugOpKind::flip_lr) == "flip_lr");
    CHECK(to_string(AugOpKind::perspective_transform) == "perspective_transform");
    AugOp op{AugOpKind::gaussian_blur, {{"sigma", 0.75}}};
    CHECK(op.params_json() == R"({"sigma":0.75})");
    AugOp flip{AugOpKind::flip_lr, {}};
    CHECK(flip.params_json() == "{}");
    AugOp multi{AugOpKind::multiply, {{"z", 1.0}, {"a", 0.5}}};
    CHECK(multi.params_json() == R"({"a":0.5,"z":1.0})");
}

TEST_CASE("lp_ros_baseline") {
    SUBCASE("raises rows below the mean") {
        const auto t = oracle::make_table({{1, 0}, {0, 1}, {1, 1}}, {10, 2, 1});
        const auto p = lp_ros_baseline(t);
        CHECK(p.n_u == CountVector{10, 4, 4});
        CHECK(p.strategy == Strategy::lp_ros);
        CHECK(p.bounds.contains(p.n_u));
        CHECK(p.objective_value == objective(p.n_u, t, {10, 2, 1}, BalanceParams{}));
    }
    SUBCASE("uniform rows") {
        const auto t = oracle::make_table({{1, 0}, {0, 1}, {1, 1}}, {3, 3, 3});
        CHECK(lp_ros_baseline(t).n_u == CountVector{3, 3, 3});
    }
    SUBCASE("single row") {
        const auto t = oracle::make_table({{1, 0}}, {7});
        CHECK(lp_ros_baseline(t).n_u == CountVector{7});
    }
    SUBCASE("half rounds up") {
        // mean 2.5 -> 3
        const auto t = oracle::make_table({{1, 0}, {0, 1}}, {4, 1});
        CHECK(lp_ros_baseline(t).n_u == CountVector{4, 3});
    }
    SUBCASE("never shrinks a row") {
        Rng rng(3);
        for (int i = 0; i < 50; ++i) {
            const auto inst = oracle::random_instance(rng, static_cast<std::size_t>(rng.uniform_int(1, 10)), 5, 100);
            const auto p = lp_ros_baseline(oracle::make_table(inst.labelsets, inst.counts));
            for (std::size_t r = 0; r < inst.counts.size(); ++r) {
                CHECK(p.n_u[r] >= inst.counts[r]);
            }
        }
    }
}

TEST_CASE("merged_distribution") {
    const std::vector<std::string> names{"C0", "C1"};
    const LabelMatrix m(names, {{"a", std::nullopt, {1, 0}},
                                {"b", std::nullopt, {1, 0}},
                                {"c", std::nullopt, {1, 0}},
                                {"d", std::nullopt, {0, 1}}});
    const auto t = group_labelsets(m);
    SUBCASE("identity plan") {
        const auto md = merged_distribution(m, t, plan_with(t, {3, 1}));
        CHECK(md.before == md.after);
        CHECK(md.images_before == md.images_after);
    }
    SUBCASE("two-row optimum") {
        const auto md = merged_distribution(m, t, plan_with(t, {3, 3}));
        CHECK(md.before == CountVector{3, 1});
        CHECK(md.after == CountVector{3, 3});
        CHECK(md.images_before == 4);
        CHECK(md.images_after == 6);
        CHECK(md.after == class_occurrences({3, 3}, t));
    }
}
