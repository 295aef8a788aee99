#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "argvoi/framework.hpp"

namespace argvoi {

enum class EvalMethod { Exact, MonteCarlo };

const char* to_string(EvalMethod method);
EvalMethod eval_method_from_string(std::string_view name);

// Dung framework with independent existence probabilities on arguments and
// attacks, each in (0,1]. An attack probability is conditional on both of its
// endpoints existing.
class ProbabilisticFramework {
public:
    ProbabilisticFramework() = default;

    static ProbabilisticFramework make(
        const std::vector<std::pair<std::string, double>>& arguments,
        const std::vector<std::tuple<std::string, std::string, double>>& attacks);

    const DungFramework& base() const { return base_; }
    double argument_probability(std::size_t index) const { return arg_prob_[index]; }
    double argument_probability(std::string_view id) const { return arg_prob_[base_.index_of(id)]; }
    double attack_probability(std::size_t attack_index) const { return att_prob_[attack_index]; }

    // number of sub-unit-probability elements; drives the exact-method limit
    std::size_t uncertain_count() const;

    friend bool operator==(const ProbabilisticFramework& a, const ProbabilisticFramework& b) {
        return a.base_ == b.base_ && a.arg_prob_ == b.arg_prob_ && a.att_prob_ == b.att_prob_;
    }

private:
    DungFramework base_;
    std::vector<double> arg_prob_;  // aligned with base_.arguments()
    std::vector<double> att_prob_;  // aligned with base_.attacks()
};

ProbabilisticFramework make_praf(const std::vector<std::pair<std::string, double>>& arguments,
                                 const std::vector<std::tuple<std::string, std::string, double>>& attacks);

// One member of the induced-graph distribution.
struct InducedFramework {
    DungFramework graph;
    double weight = 0.0;
};

struct AcceptanceProbabilities {
    std::vector<std::string> ids;       // framework argument order
    std::vector<double> probability;    // aligned with ids
    EvalMethod method = EvalMethod::Exact;
    std::uint64_t samples = 0;          // Monte Carlo only
    std::uint64_t seed = 0;             // Monte Carlo only
    std::vector<double> std_error;      // Monte Carlo only, aligned with ids

    double at(std::string_view id) const;                  // throws on unknown id
    double at_or(std::string_view id, double fallback) const;
};

struct ExactConfig {
    std::size_t max_uncertain = 20;
};

struct MonteCarloConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
};

// Counter-based random stream: every draw is a pure function of
// (seed, sample_index, draw position), so sample i can be regenerated in
// isolation and parallel partitions reproduce the sequential results.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t sample_index);
    std::uint64_t next_u64();
    double next_unit();  // [0, 1)

private:
    std::uint64_t state_;
};

// The probability the framework assigns to one induced graph: the product of
// argument-inclusion, argument-exclusion, attack-inclusion and
// attack-exclusion factors. Throws if the graph violates the inducibility
// constraints (unknown material, or a probability-1 element left out where
// the definition pins it).
double induced_probability(const ProbabilisticFramework& pf, const DungFramework& induced);

// Visit every inducible graph exactly once with its weight. Arguments and
// attacks with probability 1 are pinned present and never toggled, so no
// zero-weight graph is emitted and the weights sum to 1.
void for_each_induced(const ProbabilisticFramework& pf, const ExactConfig& config,
                      const std::function<void(const Bitset& args, const Bitset& atts, double weight)>& visit);

std::vector<InducedFramework> enumerate_induced(const ProbabilisticFramework& pf, const ExactConfig& config = {});

double probabilistic_justification(const ProbabilisticFramework& pf, Semantics sem, const Extension& extension,
                                   const ExactConfig& config = {});

AcceptanceProbabilities acceptance_probabilities_exact(const ProbabilisticFramework& pf, Semantics sem,
                                                       InferenceMode mode, const ExactConfig& config = {});

// Draw one induced graph: each argument independently with its probability,
// then each attack whose endpoints were drawn, independently with its
// probability. Probability-1 elements are included without consuming a draw.
DungFramework sample_induced(const ProbabilisticFramework& pf, SampleRng& rng);

AcceptanceProbabilities acceptance_probabilities_mc(const ProbabilisticFramework& pf, Semantics sem,
                                                    InferenceMode mode, const MonteCarloConfig& config);

ProbabilisticFramework praf_remove_arguments(const ProbabilisticFramework& pf,
                                             const std::vector<std::string>& removed);
ProbabilisticFramework praf_extend(const ProbabilisticFramework& pf, const ObservationBundle& bundle);

}  // namespace argvoi
