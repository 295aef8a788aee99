#include "argvoi/praf.hpp"

#include <algorithm>
#include <cmath>

namespace argvoi {

const char* to_string(EvalMethod method) {
    return method == EvalMethod::Exact ? "exact" : "mc";
}

EvalMethod eval_method_from_string(std::string_view name) {
    if (name == "exact") return EvalMethod::Exact;
    if (name == "mc") return EvalMethod::MonteCarlo;
    throw InputError("unknown evaluation method '" + std::string(name) + "' (expected exact or mc)");
}

namespace {

void require_probability(double p, const std::string& what) {
    if (!(p > 0.0 && p <= 1.0))
        throw InputError(what + " probability out of range (expected a value in (0,1])");
}

}  // namespace

ProbabilisticFramework ProbabilisticFramework::make(
    const std::vector<std::pair<std::string, double>>& arguments,
    const std::vector<std::tuple<std::string, std::string, double>>& attacks) {
    ProbabilisticFramework pf;
    std::vector<std::string> ids;
    ids.reserve(arguments.size());
    for (const auto& [id, p] : arguments) {
        require_probability(p, "argument '" + id + "'");
        ids.push_back(id);
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(attacks.size());
    for (const auto& [src, tgt, p] : attacks) {
        require_probability(p, "attack (" + src + "," + tgt + ")");
        pairs.emplace_back(src, tgt);
    }
    pf.base_ = DungFramework::make(ids, pairs);
    if (pf.base_.attacks().size() != attacks.size())
        throw InputError("duplicate attack in probabilistic framework");

    pf.arg_prob_.assign(pf.base_.argument_count(), 1.0);
    for (const auto& [id, p] : arguments) pf.arg_prob_[pf.base_.index_of(id)] = p;
    pf.att_prob_.assign(pf.base_.attacks().size(), 1.0);
    for (const auto& [src, tgt, p] : attacks) {
        const auto j = pf.base_.find_attack(pf.base_.index_of(src), pf.base_.index_of(tgt));
        pf.att_prob_[*j] = p;
    }
    return pf;
}

std::size_t ProbabilisticFramework::uncertain_count() const {
    std::size_t n = 0;
    for (double p : arg_prob_)
        if (p < 1.0) ++n;
    for (double p : att_prob_)
        if (p < 1.0) ++n;
    return n;
}

ProbabilisticFramework make_praf(const std::vector<std::pair<std::string, double>>& arguments,
                                 const std::vector<std::tuple<std::string, std::string, double>>& attacks) {
    return ProbabilisticFramework::make(arguments, attacks);
}

double AcceptanceProbabilities::at(std::string_view id) const {
    const auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) throw InputError("unknown argument '" + std::string(id) + "'");
    return probability[static_cast<std::size_t>(it - ids.begin())];
}

double AcceptanceProbabilities::at_or(std::string_view id, double fallback) const {
    const auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) return fallback;
    return probability[static_cast<std::size_t>(it - ids.begin())];
}

// ---------------------------------------------------------------------------
// RNG

namespace {

std::uint64_t split_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t sample_index)
    : state_(split_mix(seed ^ split_mix(sample_index + 0x6A09E667F3BCC909ull))) {}

std::uint64_t SampleRng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return split_mix(state_);
}

double SampleRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// Exact enumeration

double induced_probability(const ProbabilisticFramework& pf, const DungFramework& induced) {
    const DungFramework& base = pf.base();
    Bitset present(base.argument_count());
    for (const auto& id : induced.arguments()) {
        const auto i = base.find(id);
        if (!i) throw InputError("induced argument '" + id + "' is not part of the probabilistic framework");
        present.set(*i);
    }
    for (std::size_t i = 0; i < base.argument_count(); ++i)
        if (pf.argument_probability(i) == 1.0 && !present.test(i))
            throw InputError("induced graph omits argument '" + base.argument_name(i) +
                             "' which has probability 1");

    Bitset att_present(base.attacks().size());
    for (const Attack& d : induced.attacks()) {
        const auto si = base.find(induced.argument_name(d.source));
        const auto ti = base.find(induced.argument_name(d.target));
        const auto j = base.find_attack(*si, *ti);
        if (!j)
            throw InputError("induced attack (" + induced.argument_name(d.source) + "," +
                             induced.argument_name(d.target) + ") is not part of the probabilistic framework");
        att_present.set(*j);
    }
    for (std::size_t j = 0; j < base.attacks().size(); ++j) {
        const Attack& d = base.attacks()[j];
        if (pf.attack_probability(j) == 1.0 && pf.argument_probability(d.source) == 1.0 &&
            pf.argument_probability(d.target) == 1.0 && !att_present.test(j))
            throw InputError("induced graph omits attack (" + base.argument_name(d.source) + "," +
                             base.argument_name(d.target) + ") which has probability 1 between probability-1 arguments");
    }

    double w = 1.0;
    for (std::size_t i = 0; i < base.argument_count(); ++i)
        w *= present.test(i) ? pf.argument_probability(i) : 1.0 - pf.argument_probability(i);
    for (std::size_t j = 0; j < base.attacks().size(); ++j) {
        const Attack& d = base.attacks()[j];
        if (!present.test(d.source) || !present.test(d.target)) continue;
        w *= att_present.test(j) ? pf.attack_probability(j) : 1.0 - pf.attack_probability(j);
    }
    return w;
}

void for_each_induced(const ProbabilisticFramework& pf, const ExactConfig& config,
                      const std::function<void(const Bitset&, const Bitset&, double)>& visit) {
    const DungFramework& base = pf.base();
    const std::size_t uncertain = pf.uncertain_count();
    if (uncertain > config.max_uncertain)
        throw InputError("exact enumeration limit exceeded: " + std::to_string(uncertain) +
                         " uncertain elements, limit " + std::to_string(config.max_uncertain) +
                         "; use the Monte Carlo method");

    std::vector<std::size_t> free_args;
    Bitset pinned_args(base.argument_count());
    for (std::size_t i = 0; i < base.argument_count(); ++i) {
        if (pf.argument_probability(i) < 1.0)
            free_args.push_back(i);
        else
            pinned_args.set(i);
    }

    std::vector<std::size_t> free_atts;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << free_args.size()); ++choice) {
        Bitset args = pinned_args;
        double arg_weight = 1.0;
        for (std::size_t b = 0; b < free_args.size(); ++b) {
            const double p = pf.argument_probability(free_args[b]);
            if (choice & (std::uint64_t{1} << b)) {
                args.set(free_args[b]);
                arg_weight *= p;
            } else {
                arg_weight *= 1.0 - p;
            }
        }

        Bitset pinned_atts(base.attacks().size());
        free_atts.clear();
        for (std::size_t j = 0; j < base.attacks().size(); ++j) {
            const Attack& d = base.attacks()[j];
            if (!args.test(d.source) || !args.test(d.target)) continue;
            if (pf.attack_probability(j) < 1.0)
                free_atts.push_back(j);
            else
                pinned_atts.set(j);
        }

        for (std::uint64_t att_choice = 0; att_choice < (std::uint64_t{1} << free_atts.size()); ++att_choice) {
            Bitset atts = pinned_atts;
            double weight = arg_weight;
            for (std::size_t b = 0; b < free_atts.size(); ++b) {
                const double p = pf.attack_probability(free_atts[b]);
                if (att_choice & (std::uint64_t{1} << b)) {
                    atts.set(free_atts[b]);
                    weight *= p;
                } else {
                    weight *= 1.0 - p;
                }
            }
            visit(args, atts, weight);
        }
    }
}

std::vector<InducedFramework> enumerate_induced(const ProbabilisticFramework& pf, const ExactConfig& config) {
    std::vector<InducedFramework> out;
    for_each_induced(pf, config, [&](const Bitset& args, const Bitset& atts, double weight) {
        out.push_back({subgraph(pf.base(), args, atts), weight});
    });
    return out;
}

double probabilistic_justification(const ProbabilisticFramework& pf, Semantics sem, const Extension& extension,
                                   const ExactConfig& config) {
    const Bitset candidate = pf.base().to_mask(extension);
    long double total = 0.0L;  // weights accumulate in extended precision
    for_each_induced(pf, config, [&](const Bitset& args, const Bitset& atts, double weight) {
        if (extension_satisfies(pf.base(), sem, candidate, args, atts)) total += weight;
    });
    return static_cast<double>(total);
}

AcceptanceProbabilities acceptance_probabilities_exact(const ProbabilisticFramework& pf, Semantics sem,
                                                       InferenceMode mode, const ExactConfig& config) {
    AcceptanceProbabilities out;
    out.ids = pf.base().arguments();
    out.method = EvalMethod::Exact;
    std::vector<long double> sums(out.ids.size(), 0.0L);
    for_each_induced(pf, config, [&](const Bitset& args, const Bitset& atts, double weight) {
        const Bitset accepted = accepted_mask(pf.base(), sem, mode, args, atts);
        accepted.for_each([&](std::size_t i) { sums[i] += weight; });
    });
    out.probability.reserve(sums.size());
    for (const long double p : sums) out.probability.push_back(static_cast<double>(p));
    return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo

namespace {

// Args are drawn in index order, then candidate attacks in index order, so
// the draw sequence is fully determined by (seed, sample index).
void sample_masks(const ProbabilisticFramework& pf, SampleRng& rng, Bitset& args, Bitset& atts) {
    const DungFramework& base = pf.base();
    args = Bitset(base.argument_count());
    atts = Bitset(base.attacks().size());
    for (std::size_t i = 0; i < base.argument_count(); ++i) {
        const double p = pf.argument_probability(i);
        if (p == 1.0 || rng.next_unit() < p) args.set(i);
    }
    for (std::size_t j = 0; j < base.attacks().size(); ++j) {
        const Attack& d = base.attacks()[j];
        if (!args.test(d.source) || !args.test(d.target)) continue;
        const double p = pf.attack_probability(j);
        if (p == 1.0 || rng.next_unit() < p) atts.set(j);
    }
}

}  // namespace

DungFramework sample_induced(const ProbabilisticFramework& pf, SampleRng& rng) {
    Bitset args, atts;
    sample_masks(pf, rng, args, atts);
    return subgraph(pf.base(), args, atts);
}

AcceptanceProbabilities acceptance_probabilities_mc(const ProbabilisticFramework& pf, Semantics sem,
                                                    InferenceMode mode, const MonteCarloConfig& config) {
    if (config.samples == 0) throw InputError("Monte Carlo sample count must be at least 1");
    const std::size_t n = pf.base().argument_count();
    std::vector<std::uint64_t> hits(n, 0);
    Bitset args, atts;
    for (std::uint64_t s = 0; s < config.samples; ++s) {
        SampleRng rng(config.seed, s);
        sample_masks(pf, rng, args, atts);
        const Bitset accepted = accepted_mask(pf.base(), sem, mode, args, atts);
        accepted.for_each([&](std::size_t i) { ++hits[i]; });
    }
    AcceptanceProbabilities out;
    out.ids = pf.base().arguments();
    out.method = EvalMethod::MonteCarlo;
    out.samples = config.samples;
    out.seed = config.seed;
    out.probability.resize(n);
    out.std_error.resize(n);
    const double count = static_cast<double>(config.samples);
    for (std::size_t i = 0; i < n; ++i) {
        const double estimate = static_cast<double>(hits[i]) / count;
        out.probability[i] = estimate;
        out.std_error[i] = std::sqrt(estimate * (1.0 - estimate) / count);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Editing

ProbabilisticFramework praf_remove_arguments(const ProbabilisticFramework& pf,
                                             const std::vector<std::string>& removed) {
    const DungFramework reduced = remove_arguments(pf.base(), removed);
    std::vector<std::pair<std::string, double>> args;
    for (const auto& id : reduced.arguments()) args.emplace_back(id, pf.argument_probability(id));
    std::vector<std::tuple<std::string, std::string, double>> atts;
    for (const Attack& d : reduced.attacks()) {
        const std::string& src = reduced.argument_name(d.source);
        const std::string& tgt = reduced.argument_name(d.target);
        const auto j = pf.base().find_attack(pf.base().index_of(src), pf.base().index_of(tgt));
        atts.emplace_back(src, tgt, pf.attack_probability(*j));
    }
    return ProbabilisticFramework::make(args, atts);
}

ProbabilisticFramework praf_extend(const ProbabilisticFramework& pf, const ObservationBundle& bundle) {
    // collision, dangling-endpoint and touches-a-new-argument checks
    ObservationBundle plain;
    for (const auto& a : bundle.arguments) plain.arguments.push_back({a.id, std::nullopt});
    for (const auto& d : bundle.attacks) plain.attacks.push_back({d.source, d.target, std::nullopt});
    extend_framework(pf.base(), plain);

    std::vector<std::pair<std::string, double>> args;
    for (std::size_t i = 0; i < pf.base().argument_count(); ++i)
        args.emplace_back(pf.base().argument_name(i), pf.argument_probability(i));
    for (const auto& a : bundle.arguments) {
        if (!a.probability)
            throw InputError("bundle argument '" + a.id + "' is missing a probability (framework is probabilistic)");
        args.emplace_back(a.id, *a.probability);
    }
    std::vector<std::tuple<std::string, std::string, double>> atts;
    for (std::size_t j = 0; j < pf.base().attacks().size(); ++j) {
        const Attack& d = pf.base().attacks()[j];
        atts.emplace_back(pf.base().argument_name(d.source), pf.base().argument_name(d.target),
                          pf.attack_probability(j));
    }
    for (const auto& d : bundle.attacks) {
        if (!d.probability)
            throw InputError("bundle attack (" + d.source + "," + d.target +
                             ") is missing a probability (framework is probabilistic)");
        atts.emplace_back(d.source, d.target, *d.probability);
    }
    return ProbabilisticFramework::make(args, atts);
}

}  // namespace argvoi
