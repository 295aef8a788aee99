#pragma once

#include <optional>
#include <string>
#include <vector>

#include "argvoi/framework.hpp"
#include "argvoi/praf.hpp"

namespace argvoi {

// Utility functions over an evaluation result. The daf-* kinds read the
// accepted-argument set of a Dung framework; the praf-* kinds read the
// per-argument acceptance probabilities of a probabilistic framework.
enum class UtilityKind {
    DafTargetOutput,
    DafMaximisingChange,
    PrafTargetOutput,
    PrafEntropy,
    PrafMaximisingChange,
    PrafProbability,  // raw acceptance probability, paired with the KL difference
};

enum class DifferenceKind { Signed, Absolute, KlDivergence };

const char* to_string(UtilityKind kind);
const char* to_string(DifferenceKind kind);
UtilityKind utility_from_string(std::string_view name);
DifferenceKind difference_from_string(std::string_view name);
bool is_probabilistic(UtilityKind kind);
bool is_target_output(UtilityKind kind);

// A value is a finite real or +infinity; +infinity only arises from the KL
// difference when the second operand puts zero mass where the first does not.
using ValueResult = double;

// What the analysis is asked to optimise: the objective extension O, the
// utility over it, an optional target subset O' (required by the
// target-output utilities) and the difference to maximise, all evaluated
// under a fixed semantics and inference mode.
struct Objective {
    std::vector<std::string> members;                  // O
    std::optional<std::vector<std::string>> target;    // O', subset of O
    UtilityKind utility = UtilityKind::DafMaximisingChange;
    DifferenceKind difference = DifferenceKind::Absolute;
    Semantics semantics = Semantics::Grounded;
    InferenceMode inference = InferenceMode::Sceptical;
};

struct PrafEvalOptions {
    EvalMethod method = EvalMethod::Exact;
    ExactConfig exact{};
    MonteCarloConfig mc{};
};

struct VoiOptions {
    // Removal candidates normally exclude the objective arguments; with
    // this flag an objective member may be removed, in which case its
    // post-removal utility is taken at acceptance 0 / probability 0.
    bool allow_objective_removal = false;
    PrafEvalOptions eval{};
};

double utility(const std::string& argument, const Objective& objective,
               const std::vector<std::string>& accepted);
double utility(const std::string& argument, const Objective& objective,
               const AcceptanceProbabilities& probabilities);

ValueResult difference(DifferenceKind kind, double x, double y);

ValueResult value_of_observed(const DungFramework& framework, const Objective& objective,
                              const std::vector<std::string>& removed, const VoiOptions& options = {});
ValueResult value_of_observed(const ProbabilisticFramework& framework, const Objective& objective,
                              const std::vector<std::string>& removed, const VoiOptions& options = {});

ValueResult value_of_observation(const DungFramework& framework, const Objective& objective,
                                 const ObservationBundle& bundle, const VoiOptions& options = {});
ValueResult value_of_observation(const ProbabilisticFramework& framework, const Objective& objective,
                                 const ObservationBundle& bundle, const VoiOptions& options = {});

struct RankedCandidate {
    std::vector<std::string> removed;  // sorted ids
    ValueResult value = 0.0;
};

struct RankedAttack {
    std::string target;
    ValueResult value = 0.0;
};

// All removal candidates up to the size bound, best first (+infinity ahead of
// every finite value, ties broken lexicographically by member ids).
std::vector<RankedCandidate> rank_observed(const DungFramework& framework, const Objective& objective,
                                           std::size_t max_subset_size, const VoiOptions& options = {});
std::vector<RankedCandidate> rank_observed(const ProbabilisticFramework& framework, const Objective& objective,
                                           std::size_t max_subset_size, const VoiOptions& options = {});

// For each existing argument, the value of adding one fresh argument with a
// single attack on it; probabilities are ignored for Dung frameworks.
std::vector<RankedAttack> rank_single_attacks(const DungFramework& framework, const Objective& objective,
                                              double new_arg_prob = 1.0, double attack_prob = 1.0,
                                              const VoiOptions& options = {});
std::vector<RankedAttack> rank_single_attacks(const ProbabilisticFramework& framework, const Objective& objective,
                                              double new_arg_prob, double attack_prob,
                                              const VoiOptions& options = {});

// First id from b, b1, b2, ... that does not collide with an existing argument.
std::string fresh_argument_id(const DungFramework& framework);

}  // namespace argvoi
