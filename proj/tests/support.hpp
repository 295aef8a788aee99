#pragma once

// Shared fixtures: the worked examples behind the reference results, a
// deterministic RNG and random framework generators for the property tests.
// Expected numeric constants were frozen from an independent exact-arithmetic
// computation.

#include <cstdint>
#include <string>
#include <vector>

#include "argvoi/ach.hpp"
#include "argvoi/framework.hpp"
#include "argvoi/praf.hpp"

namespace support {

// four arguments in a chain of attacks; grounded extension {a1, a4}
inline argvoi::DungFramework example1() {
    return argvoi::make_framework({"a1", "a2", "a3", "a4"},
                                  {{"a1", "a2"}, {"a2", "a3"}, {"a2", "a4"}, {"a4", "a3"}});
}

// probabilistic variant of the same graph; inputs chosen so the exact
// grounded-sceptical evaluation reproduces every reference probability
inline argvoi::ProbabilisticFramework example2() {
    return argvoi::make_praf({{"a1", 0.8}, {"a2", 0.8}, {"a3", 0.6}, {"a4", 0.9}},
                             {{"a1", "a2", 0.9}, {"a2", "a3", 0.4}, {"a2", "a4", 0.6}, {"a4", "a3", 0.3}});
}

// expected exact grounded-sceptical acceptance probabilities for example2
inline constexpr double kExample2A1 = 0.8;
inline constexpr double kExample2A2 = 0.224;
inline constexpr double kExample2A3 = 0.41181888;
inline constexpr double kExample2A4 = 0.77904;
// after removing a1
inline constexpr double kExample2RemovedA2 = 0.8;
inline constexpr double kExample2RemovedA3 = 0.344496;
inline constexpr double kExample2RemovedA4 = 0.468;
// after adding b (p=1) attacking a4 (p=0.9)
inline constexpr double kExample2AddedA3 = 0.532797888;
inline constexpr double kExample2AddedA4 = 0.077904;
// value of information under the target-output utility, signed difference
inline constexpr double kExample2ValueObserved = -0.24371712;
inline constexpr double kExample2ValueObservation = 0.822115008;

// three evidence items against two mutually exclusive hypotheses
inline argvoi::AchMatrix aegean_matrix() {
    using argvoi::CellLabel;
    return argvoi::AchMatrix::make(
        {{"h1", "hijacked by pirates"}, {"h2", "seized by local police"}},
        {{"e1", "boarders wore police uniforms", "likely"},
         {"e2", "history of piracy in the area", "certain"},
         {"e3", "local media reports a police seizure", "likely"}},
        {CellLabel::Inconsistent, CellLabel::WeaklyConsistent,       // e1
         CellLabel::WeaklyConsistent, CellLabel::WeaklyInconsistent, // e2
         CellLabel::Inconsistent, CellLabel::Consistent});           // e3
}

inline argvoi::DungFramework aegean_daf() { return argvoi::ach_to_daf(aegean_matrix()); }
inline argvoi::ProbabilisticFramework aegean_praf() { return argvoi::ach_to_praf(aegean_matrix()); }

inline constexpr double kAegeanH1 = 0.06125;
inline constexpr double kAegeanH2 = 0.43875;
inline constexpr double kAegeanKlObservedE1 = 0.08504711144838904;  // same for e3
inline constexpr double kAegeanKlAttackH2 = 0.11262339884593203;
inline constexpr double kAegeanKlAttackE2 = 0.10726358106633993;
inline constexpr double kAegeanKlAttackE3 = 0.02911177540664938;  // same for e1
inline constexpr double kAegeanKlAttackH1 = 0.011787514091233624;

// deterministic generator for property tests
struct TestRng {
    std::uint64_t state;

    explicit TestRng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // probability on a three-decimal grid in (0,1], occasionally exactly 1
    double probability() {
        if (below(4) == 0) return 1.0;
        return static_cast<double>(below(999) + 1) / 1000.0;
    }
};

inline argvoi::DungFramework random_daf(TestRng& rng, std::size_t max_args, double attack_density = 0.25) {
    const std::size_t n = 1 + rng.below(max_args);
    std::vector<std::string> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back("a" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> attacks;
    for (const auto& s : args)
        for (const auto& t : args)
            if (rng.unit() < attack_density) attacks.emplace_back(s, t);
    return argvoi::make_framework(args, attacks);
}

inline argvoi::ProbabilisticFramework random_praf(TestRng& rng, std::size_t max_args,
                                                  double attack_density = 0.3) {
    const std::size_t n = 1 + rng.below(max_args);
    std::vector<std::pair<std::string, double>> args;
    for (std::size_t i = 0; i < n; ++i) args.emplace_back("a" + std::to_string(i), rng.probability());
    std::vector<std::tuple<std::string, std::string, double>> attacks;
    for (const auto& [s, ps] : args)
        for (const auto& [t, pt] : args)
            if (rng.unit() < attack_density) attacks.emplace_back(s, t, rng.probability());
    return argvoi::make_praf(args, attacks);
}

}  // namespace support
