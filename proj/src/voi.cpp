#include "argvoi/voi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace argvoi {

const char* to_string(UtilityKind kind) {
    switch (kind) {
        case UtilityKind::DafTargetOutput: return "daf-target-output";
        case UtilityKind::DafMaximisingChange: return "daf-maximising-change";
        case UtilityKind::PrafTargetOutput: return "praf-target-output";
        case UtilityKind::PrafEntropy: return "praf-entropy";
        case UtilityKind::PrafMaximisingChange: return "praf-maximising-change";
        case UtilityKind::PrafProbability: return "praf-probability";
    }
    return "?";
}

const char* to_string(DifferenceKind kind) {
    switch (kind) {
        case DifferenceKind::Signed: return "signed";
        case DifferenceKind::Absolute: return "absolute";
        case DifferenceKind::KlDivergence: return "kl";
    }
    return "?";
}

UtilityKind utility_from_string(std::string_view name) {
    if (name == "daf-target-output") return UtilityKind::DafTargetOutput;
    if (name == "daf-maximising-change") return UtilityKind::DafMaximisingChange;
    if (name == "praf-target-output") return UtilityKind::PrafTargetOutput;
    if (name == "praf-entropy") return UtilityKind::PrafEntropy;
    if (name == "praf-maximising-change") return UtilityKind::PrafMaximisingChange;
    if (name == "praf-probability") return UtilityKind::PrafProbability;
    throw InputError("unknown utility kind '" + std::string(name) + "'");
}

DifferenceKind difference_from_string(std::string_view name) {
    if (name == "signed") return DifferenceKind::Signed;
    if (name == "absolute") return DifferenceKind::Absolute;
    if (name == "kl") return DifferenceKind::KlDivergence;
    throw InputError("unknown difference kind '" + std::string(name) + "' (expected signed, absolute or kl)");
}

bool is_probabilistic(UtilityKind kind) {
    return kind == UtilityKind::PrafTargetOutput || kind == UtilityKind::PrafEntropy ||
           kind == UtilityKind::PrafMaximisingChange || kind == UtilityKind::PrafProbability;
}

bool is_target_output(UtilityKind kind) {
    return kind == UtilityKind::DafTargetOutput || kind == UtilityKind::PrafTargetOutput;
}

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

bool contains(const std::vector<std::string>& sorted_ids, std::string_view id) {
    return std::binary_search(sorted_ids.begin(), sorted_ids.end(), id);
}

void validate_objective(const DungFramework& framework, const Objective& objective, bool probabilistic) {
    if (is_probabilistic(objective.utility) != probabilistic) {
        if (probabilistic)
            throw InputError(std::string("utility kind '") + to_string(objective.utility) +
                             "' does not apply to a probabilistic framework");
        throw InputError(std::string("utility kind '") + to_string(objective.utility) +
                         "' requires a probabilistic framework");
    }
    for (const auto& id : objective.members)
        if (!framework.has_argument(id))
            throw InputError("objective argument '" + id + "' is not part of the framework");
    if (is_target_output(objective.utility) && !objective.target)
        throw InputError("target-output utility requires a target subset of the objective");
    if (objective.target)
        for (const auto& id : *objective.target)
            if (!contains(objective.members, id))
                throw InputError("target argument '" + id + "' is not part of the objective");
}

std::vector<std::string> sorted_unique(std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

void validate_removal(const Objective& objective, const std::vector<std::string>& removed,
                      const VoiOptions& options) {
    if (options.allow_objective_removal) return;
    for (const auto& id : removed)
        if (contains(objective.members, id))
            throw InputError("removal candidate '" + id +
                             "' is an objective argument (pass allow-objective-removal to permit this)");
}

AcceptanceProbabilities evaluate(const ProbabilisticFramework& pf, const Objective& objective,
                                 const PrafEvalOptions& options) {
    if (options.method == EvalMethod::MonteCarlo)
        return acceptance_probabilities_mc(pf, objective.semantics, objective.inference, options.mc);
    return acceptance_probabilities_exact(pf, objective.semantics, objective.inference, options.exact);
}

double utility_term(const std::string& e, const Objective& objective, const std::vector<std::string>& accepted) {
    const bool in_e = contains(accepted, e);
    if (objective.utility == UtilityKind::DafMaximisingChange) return in_e ? 1.0 : 0.0;
    // target output: 1 iff membership in E agrees with membership in O'
    const bool in_target = contains(*objective.target, e);
    return in_target == in_e ? 1.0 : 0.0;
}

double utility_term(const std::string& e, const Objective& objective, const AcceptanceProbabilities& probs) {
    const double p = probs.at_or(e, 0.0);  // a removed argument is never accepted
    switch (objective.utility) {
        case UtilityKind::PrafTargetOutput:
            return contains(*objective.target, e) ? p : 1.0 - p;
        case UtilityKind::PrafEntropy:
            return (p > 0.0 && p < 1.0) ? p * std::log(p) + (1.0 - p) * std::log(1.0 - p) : 0.0;
        default:
            return p;  // maximising change and plain probability
    }
}

template <typename Result>
ValueResult objective_sum(const Objective& objective, const Result& first, const Result& second) {
    double total = 0.0;
    for (const auto& e : objective.members) {
        const double term =
            difference(objective.difference, utility_term(e, objective, first), utility_term(e, objective, second));
        if (std::isinf(term)) return kInfinity;
        total += term;
    }
    return total;
}

}  // namespace

double utility(const std::string& argument, const Objective& objective,
               const std::vector<std::string>& accepted) {
    if (is_probabilistic(objective.utility))
        throw InputError(std::string("utility kind '") + to_string(objective.utility) +
                         "' expects acceptance probabilities, not an accepted set");
    if (!contains(objective.members, argument))
        throw InputError("argument '" + argument + "' is not part of the objective");
    if (is_target_output(objective.utility) && !objective.target)
        throw InputError("target-output utility requires a target subset of the objective");
    return utility_term(argument, objective, accepted);
}

double utility(const std::string& argument, const Objective& objective,
               const AcceptanceProbabilities& probabilities) {
    if (!is_probabilistic(objective.utility))
        throw InputError(std::string("utility kind '") + to_string(objective.utility) +
                         "' expects an accepted set, not acceptance probabilities");
    if (!contains(objective.members, argument))
        throw InputError("argument '" + argument + "' is not part of the objective");
    if (is_target_output(objective.utility) && !objective.target)
        throw InputError("target-output utility requires a target subset of the objective");
    return utility_term(argument, objective, probabilities);
}

ValueResult difference(DifferenceKind kind, double x, double y) {
    switch (kind) {
        case DifferenceKind::Signed:
            return x - y;
        case DifferenceKind::Absolute:
            return std::abs(x - y);
        case DifferenceKind::KlDivergence:
            break;
    }
    if (!(x >= 0.0 && x <= 1.0) || !(y >= 0.0 && y <= 1.0))
        throw InputError("KL difference requires operands in [0,1]");
    // KL([x,1-x] || [y,1-y]) in nats, with 0*log(0/y) = 0 and positive mass
    // over a zero denominator treated as +infinity
    double total = 0.0;
    if (x > 0.0) {
        if (y == 0.0) return kInfinity;
        total += x * std::log(x / y);
    }
    if (x < 1.0) {
        if (y == 1.0) return kInfinity;
        total += (1.0 - x) * std::log((1.0 - x) / (1.0 - y));
    }
    return std::max(total, 0.0);  // KL is non-negative; clamp roundoff
}

ValueResult value_of_observed(const DungFramework& framework, const Objective& objective,
                              const std::vector<std::string>& removed, const VoiOptions& options) {
    validate_objective(framework, objective, false);
    const auto alpha = sorted_unique(removed);
    validate_removal(objective, alpha, options);
    const auto before = accepted_arguments(framework, objective.semantics, objective.inference);
    const auto after =
        accepted_arguments(remove_arguments(framework, alpha), objective.semantics, objective.inference);
    return objective_sum(objective, before, after);
}

ValueResult value_of_observed(const ProbabilisticFramework& framework, const Objective& objective,
                              const std::vector<std::string>& removed, const VoiOptions& options) {
    validate_objective(framework.base(), objective, true);
    const auto alpha = sorted_unique(removed);
    validate_removal(objective, alpha, options);
    const auto before = evaluate(framework, objective, options.eval);
    const auto after = evaluate(praf_remove_arguments(framework, alpha), objective, options.eval);
    return objective_sum(objective, before, after);
}

ValueResult value_of_observation(const DungFramework& framework, const Objective& objective,
                                 const ObservationBundle& bundle, const VoiOptions&) {
    validate_objective(framework, objective, false);
    const auto before = accepted_arguments(framework, objective.semantics, objective.inference);
    const auto after =
        accepted_arguments(extend_framework(framework, bundle), objective.semantics, objective.inference);
    return objective_sum(objective, after, before);  // d(U(e, F u B), U(e, F))
}

ValueResult value_of_observation(const ProbabilisticFramework& framework, const Objective& objective,
                                 const ObservationBundle& bundle, const VoiOptions& options) {
    validate_objective(framework.base(), objective, true);
    const auto before = evaluate(framework, objective, options.eval);
    const auto after = evaluate(praf_extend(framework, bundle), objective, options.eval);
    return objective_sum(objective, after, before);
}

namespace {

bool rank_order(const RankedCandidate& a, const RankedCandidate& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.removed < b.removed;
}

bool rank_order(const RankedAttack& a, const RankedAttack& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.target < b.target;
}

template <typename Framework>
std::vector<RankedCandidate> rank_observed_impl(const Framework& framework, const DungFramework& base,
                                                const Objective& objective, std::size_t max_subset_size,
                                                const VoiOptions& options) {
    if (max_subset_size == 0) throw InputError("maximum subset size must be at least 1");
    std::vector<std::string> pool;
    for (const auto& id : base.arguments())
        if (options.allow_objective_removal || !contains(objective.members, id)) pool.push_back(id);

    std::vector<RankedCandidate> ranked;
    std::vector<std::size_t> pick;
    const std::size_t bound = std::min(max_subset_size, pool.size());
    for (std::size_t size = 1; size <= bound; ++size) {
        pick.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            std::vector<std::string> subset;
            subset.reserve(size);
            for (auto i : pick) subset.push_back(pool[i]);
            ranked.push_back({subset, value_of_observed(framework, objective, subset, options)});
            // advance the combination
            std::size_t k = size;
            while (k > 0 && pick[k - 1] == pool.size() - size + (k - 1)) --k;
            if (k == 0) break;
            ++pick[k - 1];
            for (std::size_t i = k; i < size; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return rank_order(a, b); });
    return ranked;
}

}  // namespace

std::vector<RankedCandidate> rank_observed(const DungFramework& framework, const Objective& objective,
                                           std::size_t max_subset_size, const VoiOptions& options) {
    validate_objective(framework, objective, false);
    return rank_observed_impl(framework, framework, objective, max_subset_size, options);
}

std::vector<RankedCandidate> rank_observed(const ProbabilisticFramework& framework, const Objective& objective,
                                           std::size_t max_subset_size, const VoiOptions& options) {
    validate_objective(framework.base(), objective, true);
    return rank_observed_impl(framework, framework.base(), objective, max_subset_size, options);
}

std::string fresh_argument_id(const DungFramework& framework) {
    if (!framework.has_argument("b")) return "b";
    for (std::size_t i = 1;; ++i) {
        const std::string id = "b" + std::to_string(i);
        if (!framework.has_argument(id)) return id;
    }
}

std::vector<RankedAttack> rank_single_attacks(const DungFramework& framework, const Objective& objective,
                                              double, double, const VoiOptions& options) {
    validate_objective(framework, objective, false);
    const std::string fresh = fresh_argument_id(framework);
    std::vector<RankedAttack> ranked;
    for (const auto& target : framework.arguments()) {
        ObservationBundle bundle;
        bundle.arguments.push_back({fresh, std::nullopt});
        bundle.attacks.push_back({fresh, target, std::nullopt});
        ranked.push_back({target, value_of_observation(framework, objective, bundle, options)});
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return rank_order(a, b); });
    return ranked;
}

std::vector<RankedAttack> rank_single_attacks(const ProbabilisticFramework& framework, const Objective& objective,
                                              double new_arg_prob, double attack_prob, const VoiOptions& options) {
    validate_objective(framework.base(), objective, true);
    if (!(new_arg_prob > 0.0 && new_arg_prob <= 1.0))
        throw InputError("new-argument probability out of range (expected a value in (0,1])");
    if (!(attack_prob > 0.0 && attack_prob <= 1.0))
        throw InputError("attack probability out of range (expected a value in (0,1])");
    const std::string fresh = fresh_argument_id(framework.base());
    std::vector<RankedAttack> ranked;
    for (const auto& target : framework.base().arguments()) {
        ObservationBundle bundle;
        bundle.arguments.push_back({fresh, new_arg_prob});
        bundle.attacks.push_back({fresh, target, attack_prob});
        ranked.push_back({target, value_of_observation(framework, objective, bundle, options)});
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return rank_order(a, b); });
    return ranked;
}

}  // namespace argvoi
