#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "argvoi/praf.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace argvoi;

namespace {

oracle::Praf to_oracle(const ProbabilisticFramework& pf) {
    oracle::Praf out;
    const DungFramework& base = pf.base();
    for (std::size_t i = 0; i < base.argument_count(); ++i)
        out.arg_p[base.argument_name(i)] = pf.argument_probability(i);
    for (std::size_t j = 0; j < base.attacks().size(); ++j) {
        const Attack& d = base.attacks()[j];
        out.att_p[{base.argument_name(d.source), base.argument_name(d.target)}] = pf.attack_probability(j);
    }
    return out;
}

bool close(double a, double b, double tolerance = 1e-12) { return std::abs(a - b) <= tolerance; }

ProbabilisticFramework certain_praf(const DungFramework& f) {
    std::vector<std::pair<std::string, double>> args;
    for (const auto& id : f.arguments()) args.emplace_back(id, 1.0);
    std::vector<std::tuple<std::string, std::string, double>> atts;
    for (const Attack& d : f.attacks())
        atts.emplace_back(f.argument_name(d.source), f.argument_name(d.target), 1.0);
    return make_praf(args, atts);
}

const Semantics kSemantics[] = {Semantics::ConflictFree, Semantics::Admissible, Semantics::Complete,
                                Semantics::Grounded, Semantics::Preferred};

}  // namespace

TEST_CASE("probabilistic framework construction validates probabilities") {
    CHECK_NOTHROW(support::example2());
    CHECK_NOTHROW(make_praf({{"a", 1.0}}, {{"a", "a", 1.0}}));
    CHECK_THROWS_AS(make_praf({{"a", 0.0}}, {}), InputError);
    CHECK_THROWS_AS(make_praf({{"a", 1.2}}, {}), InputError);
    CHECK_THROWS_AS(make_praf({{"a", 0.5}}, {{"a", "b", 0.5}}), InputError);
    CHECK_THROWS_AS(make_praf({{"a", 0.5}, {"a", 0.7}}, {}), InputError);
    CHECK_THROWS_AS(make_praf({{"a", 0.5}}, {{"a", "a", 0.5}, {"a", "a", 0.6}}), InputError);
}

TEST_CASE("induced probability is the four-factor product") {
    const auto single = make_praf({{"a", 0.8}}, {});
    CHECK(close(induced_probability(single, make_framework({"a"}, {})), 0.8));
    CHECK(close(induced_probability(single, make_framework({}, {})), 0.2));

    const auto pf = support::example2();
    const auto full = make_framework({"a1", "a2", "a3", "a4"},
                                     {{"a1", "a2"}, {"a2", "a3"}, {"a2", "a4"}, {"a4", "a3"}});
    CHECK(close(induced_probability(pf, full), 0.02239488));

    // a probability-1 argument cannot be left out
    const auto pinned = make_praf({{"a", 1.0}, {"b", 0.5}}, {});
    CHECK_THROWS_AS(induced_probability(pinned, make_framework({"b"}, {})), InputError);
    // nor can unknown material be brought in
    CHECK_THROWS_AS(induced_probability(single, make_framework({"zz"}, {})), InputError);
}

TEST_CASE("enumeration yields every inducible graph exactly once") {
    const auto single = make_praf({{"a", 0.8}}, {});
    const auto graphs = enumerate_induced(single);
    REQUIRE(graphs.size() == 2);
    std::multiset<double> weights;
    for (const auto& g : graphs) weights.insert(g.weight);
    CHECK(close(*weights.begin(), 0.2));
    CHECK(close(*weights.rbegin(), 0.8));

    const auto certain = certain_praf(support::example1());
    const auto one = enumerate_induced(certain);
    REQUIRE(one.size() == 1);
    CHECK(one[0].weight == 1.0);
    CHECK(one[0].graph == support::example1());

    double total = 0.0;
    for (const auto& g : enumerate_induced(support::example2())) {
        total += g.weight;
        CHECK(close(induced_probability(support::example2(), g.graph), g.weight));
    }
    CHECK(close(total, 1.0));
}

TEST_CASE("weights sum to one on random frameworks") {
    support::TestRng rng(808);
    for (int round = 0; round < 100; ++round) {
        const auto pf = support::random_praf(rng, 5);
        double total = 0.0;
        for_each_induced(pf, {}, [&](const Bitset&, const Bitset&, double w) { total += w; });
        CHECK(close(total, 1.0));
    }
}

TEST_CASE("probabilistic justification follows the weight-sum definition") {
    const auto certain = certain_praf(support::example1());
    CHECK(probabilistic_justification(certain, Semantics::Grounded, {"a1", "a4"}) == 1.0);
    CHECK(probabilistic_justification(certain, Semantics::Grounded, {"a2"}) == 0.0);

    const auto single = make_praf({{"a", 0.8}}, {});
    CHECK(close(probabilistic_justification(single, Semantics::Grounded, {"a"}), 0.8));

    support::TestRng rng(313);
    for (int round = 0; round < 15; ++round) {
        const auto pf = support::random_praf(rng, 4);
        const auto ref = to_oracle(pf);
        const auto subsets = oracle::all_subsets(
            oracle::ArgSet(pf.base().arguments().begin(), pf.base().arguments().end()));
        for (const auto& s : subsets) {
            const Extension candidate(s.begin(), s.end());
            for (const auto sem : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred}) {
                const double got = probabilistic_justification(pf, sem, candidate);
                CHECK(close(got, oracle::justification(ref, s, to_string(sem))));
                CHECK(got >= 0.0);
                CHECK(got <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("exact acceptance probabilities reproduce the reference example") {
    const auto pf = support::example2();
    const auto acc = acceptance_probabilities_exact(pf, Semantics::Grounded, InferenceMode::Sceptical);
    CHECK(close(acc.at("a1"), support::kExample2A1));
    CHECK(close(acc.at("a2"), support::kExample2A2));
    CHECK(close(acc.at("a3"), support::kExample2A3));
    CHECK(close(acc.at("a4"), support::kExample2A4));
    CHECK(acc.method == EvalMethod::Exact);
    CHECK(acc.std_error.empty());

    const auto removed = praf_remove_arguments(pf, {"a1"});
    const auto acc_removed = acceptance_probabilities_exact(removed, Semantics::Grounded, InferenceMode::Sceptical);
    CHECK(close(acc_removed.at("a2"), support::kExample2RemovedA2));
    CHECK(close(acc_removed.at("a3"), support::kExample2RemovedA3));
    CHECK(close(acc_removed.at("a4"), support::kExample2RemovedA4));
    CHECK_THROWS_AS(acc_removed.at("a1"), InputError);

    ObservationBundle bundle;
    bundle.arguments.push_back({"b", 1.0});
    bundle.attacks.push_back({"b", "a4", 0.9});
    const auto extended = praf_extend(pf, bundle);
    const auto acc_added = acceptance_probabilities_exact(extended, Semantics::Grounded, InferenceMode::Sceptical);
    CHECK(close(acc_added.at("a1"), support::kExample2A1));
    CHECK(close(acc_added.at("a2"), support::kExample2A2));
    CHECK(close(acc_added.at("a3"), support::kExample2AddedA3));
    CHECK(close(acc_added.at("a4"), support::kExample2AddedA4));
    CHECK(acc_added.at("b") == 1.0);
}

TEST_CASE("exact acceptance matches the reference on random frameworks") {
    support::TestRng rng(616);
    for (int round = 0; round < 12; ++round) {
        const auto pf = support::random_praf(rng, 4);
        const auto ref = to_oracle(pf);
        for (const auto sem : kSemantics) {
            for (const auto mode : {InferenceMode::Credulous, InferenceMode::Sceptical}) {
                const auto acc = acceptance_probabilities_exact(pf, sem, mode);
                const auto expected = oracle::exact_acceptance(ref, to_string(sem), to_string(mode));
                for (std::size_t i = 0; i < acc.ids.size(); ++i)
                    CHECK(close(acc.probability[i], expected.at(acc.ids[i])));
            }
        }
    }
}

TEST_CASE("acceptance probability never exceeds existence probability") {
    support::TestRng rng(272727);
    for (int round = 0; round < 25; ++round) {
        const auto pf = support::random_praf(rng, 5);
        // credulous conflict-free acceptance is the loosest notion available
        const auto acc = acceptance_probabilities_exact(pf, Semantics::ConflictFree, InferenceMode::Credulous);
        for (std::size_t i = 0; i < acc.ids.size(); ++i)
            CHECK(acc.probability[i] <= pf.argument_probability(acc.ids[i]) + 1e-12);
    }
}

TEST_CASE("a certain framework behaves exactly like its Dung counterpart") {
    support::TestRng rng(511);
    for (int round = 0; round < 25; ++round) {
        const auto f = support::random_daf(rng, 6);
        const auto pf = certain_praf(f);
        for (const auto sem : kSemantics) {
            for (const auto mode : {InferenceMode::Credulous, InferenceMode::Sceptical}) {
                const auto acc = acceptance_probabilities_exact(pf, sem, mode);
                const auto accepted = accepted_arguments(f, sem, mode);
                for (std::size_t i = 0; i < acc.ids.size(); ++i) {
                    const bool in = std::binary_search(accepted.begin(), accepted.end(), acc.ids[i]);
                    CHECK(acc.probability[i] == (in ? 1.0 : 0.0));
                }
            }
        }
    }
}

TEST_CASE("the exact method refuses oversized enumerations") {
    std::vector<std::pair<std::string, double>> args;
    for (int i = 0; i < 21; ++i) args.emplace_back("a" + std::to_string(i), 0.5);
    const auto pf = make_praf(args, {});
    CHECK(pf.uncertain_count() == 21);
    CHECK_THROWS_AS(acceptance_probabilities_exact(pf, Semantics::Grounded, InferenceMode::Sceptical), InputError);
    CHECK_NOTHROW(acceptance_probabilities_exact(pf, Semantics::Grounded, InferenceMode::Sceptical,
                                                 ExactConfig{.max_uncertain = 21}));
}

TEST_CASE("sampling is deterministic and honours the probabilities") {
    const auto certain = certain_praf(support::example1());
    for (std::uint64_t i = 0; i < 5; ++i) {
        SampleRng rng(7, i);
        CHECK(sample_induced(certain, rng) == support::example1());
    }

    const auto single = make_praf({{"a", 0.8}}, {});
    std::size_t present = 0;
    const std::size_t rounds = 100000;
    for (std::uint64_t i = 0; i < rounds; ++i) {
        SampleRng rng(42, i);
        if (sample_induced(single, rng).argument_count() == 1) ++present;
    }
    const double freq = static_cast<double>(present) / static_cast<double>(rounds);
    CHECK(std::abs(freq - 0.8) < 0.01);

    // the draw sequence is a pure function of (seed, index)
    SampleRng a(99, 123), b(99, 123), c(99, 124);
    bool diverged = false;
    for (int i = 0; i < 16; ++i) {
        const auto va = a.next_u64();
        CHECK(va == b.next_u64());
        if (va != c.next_u64()) diverged = true;
    }
    CHECK(diverged);
}

TEST_CASE("Monte Carlo estimates agree with exact evaluation") {
    const auto pf = support::example2();
    const MonteCarloConfig config{50000, 20260810};
    const auto mc = acceptance_probabilities_mc(pf, Semantics::Grounded, InferenceMode::Sceptical, config);
    const auto exact = acceptance_probabilities_exact(pf, Semantics::Grounded, InferenceMode::Sceptical);
    REQUIRE(mc.ids == exact.ids);
    CHECK(mc.method == EvalMethod::MonteCarlo);
    CHECK(mc.samples == config.samples);
    CHECK(mc.seed == config.seed);
    for (std::size_t i = 0; i < mc.ids.size(); ++i) {
        CHECK(mc.std_error[i] >= 0.0);
        CHECK(std::abs(mc.probability[i] - exact.probability[i]) <= 4.0 * mc.std_error[i]);
    }

    // same seed, same numbers
    const auto again = acceptance_probabilities_mc(pf, Semantics::Grounded, InferenceMode::Sceptical, config);
    CHECK(again.probability == mc.probability);
    CHECK(again.std_error == mc.std_error);
}

TEST_CASE("Monte Carlo corner cases") {
    const auto certain = certain_praf(support::example1());
    const auto mc = acceptance_probabilities_mc(certain, Semantics::Grounded, InferenceMode::Sceptical, {500, 3});
    for (std::size_t i = 0; i < mc.ids.size(); ++i) {
        CHECK((mc.probability[i] == 0.0 || mc.probability[i] == 1.0));
        CHECK(mc.std_error[i] == 0.0);
    }

    const auto single = make_praf({{"a", 0.8}}, {});
    const auto one = acceptance_probabilities_mc(single, Semantics::Grounded, InferenceMode::Sceptical, {1, 9});
    CHECK((one.probability[0] == 0.0 || one.probability[0] == 1.0));

    CHECK_THROWS_AS(acceptance_probabilities_mc(single, Semantics::Grounded, InferenceMode::Sceptical, {0, 0}),
                    InputError);
}

TEST_CASE("removal and extension keep probabilities aligned") {
    const auto pf = support::example2();
    const auto removed = praf_remove_arguments(pf, {"a1"});
    CHECK(removed.base().arguments() == std::vector<std::string>{"a2", "a3", "a4"});
    CHECK(removed.argument_probability("a3") == 0.6);
    CHECK(removed.base().attacks().size() == 3);
    CHECK_THROWS_AS(praf_remove_arguments(pf, {"zz"}), InputError);

    ObservationBundle missing;
    missing.arguments.push_back({"b", std::nullopt});
    CHECK_THROWS_AS(praf_extend(pf, missing), InputError);

    ObservationBundle zero;
    zero.arguments.push_back({"b", 0.0});
    CHECK_THROWS_AS(praf_extend(pf, zero), InputError);

    ObservationBundle good;
    good.arguments.push_back({"b", 1.0});
    good.attacks.push_back({"b", "a4", 0.9});
    const auto extended = praf_extend(pf, good);
    CHECK(extended.base().argument_count() == 5);
    CHECK(extended.argument_probability("b") == 1.0);
    CHECK(extended.argument_probability("a1") == 0.8);

    ObservationBundle collision;
    collision.arguments.push_back({"a1", 1.0});
    CHECK_THROWS_AS(praf_extend(pf, collision), InputError);
}
