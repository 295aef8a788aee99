#include "argvoi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "argvoi/formats.hpp"

namespace argvoi {

namespace {

// Bad flag combinations and malformed flag values; distinct from validation
// errors so the exit codes differ (2 vs 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "' for writing");
    file << content;
    if (!file) throw InputError("failed while writing '" + path + "'");
}

std::vector<std::string> split_ids(const std::string& csv, const char* what) {
    std::vector<std::string> ids;
    std::string current;
    std::istringstream stream(csv);
    while (std::getline(stream, current, ',')) {
        if (current.empty()) throw UsageError(std::string("empty id in ") + what + " list");
        ids.push_back(current);
    }
    if (ids.empty()) throw UsageError(std::string(what) + " list is empty");
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

// flag-value conversions fail as usage errors, not validation errors
template <typename Fn>
auto flag_value(const char* flag, Fn&& convert) {
    try {
        return convert();
    } catch (const InputError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

struct CommonFlags {
    std::string input;
    std::string semantics = "grounded";
    std::string inference = "sceptical";
    std::string method = "exact";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    std::string output = "-";
};

struct ObjectiveFlags {
    std::string objective;
    std::string target;
    std::string utility;
    std::string difference;
    bool allow_objective_removal = false;
};

struct Flags {
    CommonFlags common;
    ObjectiveFlags objective;
    std::string remove;
    bool rank = false;
    std::size_t max_size = 1;
    std::string bundle;
    bool rank_attacks = false;
    double new_arg_prob = 1.0;
    double attack_prob = 1.0;
    std::string mapping;
};

struct SubOptions {
    CLI::App* app = nullptr;
    CLI::Option* samples = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* target = nullptr;
    CLI::Option* remove = nullptr;
    CLI::Option* max_size = nullptr;
    CLI::Option* bundle = nullptr;
    CLI::Option* new_arg_prob = nullptr;
    CLI::Option* attack_prob = nullptr;
};

SubOptions add_common(CLI::App& app, const std::string& name, const std::string& description, Flags& flags) {
    SubOptions sub;
    sub.app = app.add_subcommand(name, description);
    sub.app->add_option("input", flags.common.input, "framework file")->required();
    sub.app->add_option("--semantics", flags.common.semantics,
                        "conflict-free, admissible, complete, grounded or preferred (default grounded)");
    sub.app->add_option("--inference", flags.common.inference, "credulous or sceptical (default sceptical)");
    sub.app->add_option("--method", flags.common.method, "exact or mc (default exact)");
    sub.samples = sub.app->add_option("--samples", flags.common.samples, "Monte Carlo sample count");
    sub.seed = sub.app->add_option("--seed", flags.common.seed, "Monte Carlo seed");
    sub.app->add_option("-o,--output", flags.common.output, "output path, '-' for stdout");
    return sub;
}

void add_objective(SubOptions& sub, Flags& flags) {
    sub.app->add_option("--objective", flags.objective.objective, "objective arguments, comma separated")->required();
    sub.target = sub.app->add_option("--target", flags.objective.target,
                                     "target subset of the objective (target-output utilities)");
    sub.app->add_option("--utility", flags.objective.utility,
                        "daf-target-output, daf-maximising-change, praf-target-output, praf-entropy, "
                        "praf-maximising-change or praf-probability (usual pairings: target-output+signed, "
                        "maximising-change+absolute, entropy+signed, probability+kl)")
        ->required();
    sub.app->add_option("--difference", flags.objective.difference, "signed, absolute or kl")->required();
    sub.app->add_flag("--allow-objective-removal", flags.objective.allow_objective_removal,
                      "permit removal candidates inside the objective");
}

struct Context {
    Framework framework;
    bool probabilistic = false;
    Semantics semantics = Semantics::Grounded;
    InferenceMode inference = InferenceMode::Sceptical;
    EvalMethod method = EvalMethod::Exact;
    VoiOptions voi;
};

Context make_context(const Flags& flags, const SubOptions& sub) {
    Context ctx;
    ctx.semantics = flag_value("--semantics", [&] { return semantics_from_string(flags.common.semantics); });
    ctx.inference = flag_value("--inference", [&] { return inference_from_string(flags.common.inference); });
    ctx.method = flag_value("--method", [&] { return eval_method_from_string(flags.common.method); });
    if (ctx.method != EvalMethod::MonteCarlo) {
        if (sub.samples->count() > 0) throw UsageError("--samples requires --method mc");
        if (sub.seed->count() > 0) throw UsageError("--seed requires --method mc");
    }
    ctx.framework = parse_framework(read_file(flags.common.input));
    ctx.probabilistic = std::holds_alternative<ProbabilisticFramework>(ctx.framework);
    if (ctx.method == EvalMethod::MonteCarlo && !ctx.probabilistic)
        throw InputError("the Monte Carlo method requires a probabilistic framework");
    ctx.voi.allow_objective_removal = flags.objective.allow_objective_removal;
    ctx.voi.eval.method = ctx.method;
    ctx.voi.eval.mc = {flags.common.samples, flags.common.seed};
    if (flags.common.samples == 0) throw UsageError("--samples must be at least 1");
    return ctx;
}

Objective make_objective(const Flags& flags, const SubOptions& sub, const Context& ctx) {
    Objective o;
    o.members = split_ids(flags.objective.objective, "--objective");
    if (sub.target->count() > 0) o.target = split_ids(flags.objective.target, "--target");
    o.utility = flag_value("--utility", [&] { return utility_from_string(flags.objective.utility); });
    o.difference = flag_value("--difference", [&] { return difference_from_string(flags.objective.difference); });
    o.semantics = ctx.semantics;
    o.inference = ctx.inference;
    return o;
}

Report report_header(const char* command, const Context& ctx) {
    Report r;
    r.field("command", command);
    r.field("framework", ctx.probabilistic ? "praf" : "daf");
    r.field("semantics", to_string(ctx.semantics));
    r.field("inference", to_string(ctx.inference));
    r.field("method", to_string(ctx.probabilistic ? ctx.method : EvalMethod::Exact));
    if (ctx.probabilistic && ctx.method == EvalMethod::MonteCarlo) {
        r.field("samples", std::to_string(ctx.voi.eval.mc.samples));
        r.field("seed", std::to_string(ctx.voi.eval.mc.seed));
    }
    return r;
}

void append_objective_fields(Report& r, const Objective& o) {
    r.field("utility", to_string(o.utility));
    r.field("difference", to_string(o.difference));
    r.field("objective", join_ids(o.members));
    if (o.target) r.field("target", join_ids(*o.target));
}

// fill grammar-default probabilities when applying a bundle to a PrAF
ObservationBundle resolve_bundle(const ObservationBundle& bundle, bool probabilistic) {
    if (!probabilistic) return bundle;
    ObservationBundle resolved = bundle;
    for (auto& a : resolved.arguments)
        if (!a.probability) a.probability = 1.0;
    for (auto& d : resolved.attacks)
        if (!d.probability) d.probability = 1.0;
    return resolved;
}

void append_bundle_fields(Report& r, const ObservationBundle& bundle, bool probabilistic) {
    for (const auto& a : bundle.arguments) {
        std::string value = a.id;
        if (probabilistic) value += " " + format_probability(*a.probability);
        r.field("bundle-argument", value);
    }
    for (const auto& d : bundle.attacks) {
        std::string value = d.source + "," + d.target;
        if (probabilistic) value += " " + format_probability(*d.probability);
        r.field("bundle-attack", value);
    }
}

std::string run_evaluate(const Flags& flags, const Context& ctx) {
    Report r;
    r.field("command", "evaluate");
    r.field("framework", ctx.probabilistic ? "praf" : "daf");
    if (ctx.probabilistic) {
        const auto& pf = std::get<ProbabilisticFramework>(ctx.framework);
        const auto probabilities =
            ctx.method == EvalMethod::MonteCarlo
                ? acceptance_probabilities_mc(pf, ctx.semantics, ctx.inference,
                                              {flags.common.samples, flags.common.seed})
                : acceptance_probabilities_exact(pf, ctx.semantics, ctx.inference);
        r.append(acceptance_report(ctx.semantics, ctx.inference, probabilities));
    } else {
        const auto& f = std::get<DungFramework>(ctx.framework);
        r.append(acceptance_report(ctx.semantics, ctx.inference,
                                   accepted_arguments(f, ctx.semantics, ctx.inference)));
    }
    return r.render();
}

std::string run_voi_observed(const char* command, const Flags& flags, const SubOptions& sub, const Context& ctx,
                             bool ranking) {
    const Objective objective = make_objective(flags, sub, ctx);
    Report r = report_header(command, ctx);
    append_objective_fields(r, objective);
    if (ranking) {
        r.field("max-size", std::to_string(flags.max_size));
        const auto ranked =
            ctx.probabilistic
                ? rank_observed(std::get<ProbabilisticFramework>(ctx.framework), objective, flags.max_size, ctx.voi)
                : rank_observed(std::get<DungFramework>(ctx.framework), objective, flags.max_size, ctx.voi);
        r.append(observed_ranking_report(ranked));
    } else {
        const auto removed = split_ids(flags.remove, "--remove");
        const double value =
            ctx.probabilistic
                ? value_of_observed(std::get<ProbabilisticFramework>(ctx.framework), objective, removed, ctx.voi)
                : value_of_observed(std::get<DungFramework>(ctx.framework), objective, removed, ctx.voi);
        r.field("removed", join_ids(removed));
        r.field("value", format_value(value));
    }
    return r.render();
}

std::string run_voi_observation(const char* command, const Flags& flags, const SubOptions& sub, const Context& ctx,
                                bool ranking) {
    const Objective objective = make_objective(flags, sub, ctx);
    Report r = report_header(command, ctx);
    append_objective_fields(r, objective);
    if (ranking) {
        r.field("new-arg-prob", format_probability(flags.new_arg_prob));
        r.field("attack-prob", format_probability(flags.attack_prob));
        const auto ranked = ctx.probabilistic
                                ? rank_single_attacks(std::get<ProbabilisticFramework>(ctx.framework), objective,
                                                      flags.new_arg_prob, flags.attack_prob, ctx.voi)
                                : rank_single_attacks(std::get<DungFramework>(ctx.framework), objective,
                                                      flags.new_arg_prob, flags.attack_prob, ctx.voi);
        r.append(attack_ranking_report(ranked));
    } else {
        const ObservationBundle bundle =
            resolve_bundle(parse_bundle(read_file(flags.bundle)), ctx.probabilistic);
        const double value =
            ctx.probabilistic
                ? value_of_observation(std::get<ProbabilisticFramework>(ctx.framework), objective, bundle, ctx.voi)
                : value_of_observation(std::get<DungFramework>(ctx.framework), objective, bundle, ctx.voi);
        append_bundle_fields(r, bundle, ctx.probabilistic);
        r.field("value", format_value(value));
    }
    return r.render();
}

ProbabilityMapping parse_mapping(const std::string& text) {
    ProbabilityMapping mapping = ProbabilityMapping::defaults();
    if (text.empty()) return mapping;
    std::istringstream stream(text);
    std::string entry;
    while (std::getline(stream, entry, ',')) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
            throw UsageError("--mapping entries must look like label=probability");
        const std::string label = entry.substr(0, eq);
        double p = 0.0;
        try {
            std::size_t used = 0;
            p = std::stod(entry.substr(eq + 1), &used);
            if (used != entry.size() - eq - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("--mapping: invalid probability for label '" + label + "'");
        }
        if (label == "I" || label == "II")
            mapping.inconsistency[label] = p;
        else
            mapping.uncertainty[label] = p;
    }
    return mapping;
}

std::string run_ach_convert(const Flags& flags) {
    const AchMatrix matrix = parse_ach_csv(read_file(flags.common.input));
    const ProbabilityMapping mapping = parse_mapping(flags.mapping);
    return serialize_framework(ach_to_praf(matrix, mapping));
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dung and probabilistic argumentation framework evaluation with value-of-information analysis"};
    app.require_subcommand(1);

    Flags flags;
    SubOptions evaluate = add_common(app, "evaluate", "evaluate a framework and print acceptance", flags);

    SubOptions observed =
        add_common(app, "voi-observed", "value of removing existing arguments against an objective", flags);
    add_objective(observed, flags);
    observed.remove = observed.app->add_option("--remove", flags.remove, "arguments to remove, comma separated");
    observed.app->add_flag("--rank", flags.rank, "rank all removal candidates");
    observed.max_size = observed.app->add_option("--max-size", flags.max_size, "largest candidate subset (default 1)");

    SubOptions observation =
        add_common(app, "voi-observation", "value of adding new arguments and attacks against an objective", flags);
    add_objective(observation, flags);
    observation.bundle = observation.app->add_option("--bundle", flags.bundle,
                                                     "file of arg/att lines describing the new material");
    observation.app->add_flag("--rank-attacks", flags.rank_attacks,
                              "rank single-attack bundles against every argument");
    observation.new_arg_prob =
        observation.app->add_option("--new-arg-prob", flags.new_arg_prob, "probability of the fresh argument");
    observation.attack_prob =
        observation.app->add_option("--attack-prob", flags.attack_prob, "probability of the fresh attack");

    SubOptions rank = add_common(app, "voi-rank", "rank removal candidates or single-attack additions", flags);
    add_objective(rank, flags);
    rank.max_size = rank.app->add_option("--max-size", flags.max_size, "rank removals up to this subset size");
    rank.app->add_flag("--rank-attacks", flags.rank_attacks, "rank single-attack bundles instead of removals");
    rank.new_arg_prob = rank.app->add_option("--new-arg-prob", flags.new_arg_prob, "probability of the fresh argument");
    rank.attack_prob = rank.app->add_option("--attack-prob", flags.attack_prob, "probability of the fresh attack");

    CLI::App* ach = app.add_subcommand("ach-convert", "translate an ACH CSV matrix into a framework file");
    ach->add_option("input", flags.common.input, "ACH CSV file")->required();
    ach->add_option("--mapping", flags.mapping,
                    "label=probability overrides, e.g. certain=1.0,likely=0.65,I=0.5,II=1.0");
    ach->add_option("-o,--output", flags.common.output, "output path, '-' for stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::string report;
        if (ach->parsed()) {
            report = run_ach_convert(flags);
        } else if (evaluate.app->parsed()) {
            report = run_evaluate(flags, make_context(flags, evaluate));
        } else if (observed.app->parsed()) {
            const bool has_remove = observed.remove->count() > 0;
            if (flags.rank == has_remove)
                throw UsageError("voi-observed needs exactly one of --remove or --rank");
            if (!flags.rank && observed.max_size->count() > 0)
                throw UsageError("--max-size requires --rank");
            report = run_voi_observed("voi-observed", flags, observed, make_context(flags, observed), flags.rank);
        } else if (observation.app->parsed()) {
            const bool has_bundle = observation.bundle->count() > 0;
            if (flags.rank_attacks == has_bundle)
                throw UsageError("voi-observation needs exactly one of --bundle or --rank-attacks");
            if (!flags.rank_attacks &&
                (observation.new_arg_prob->count() > 0 || observation.attack_prob->count() > 0))
                throw UsageError("--new-arg-prob and --attack-prob require --rank-attacks");
            report = run_voi_observation("voi-observation", flags, observation,
                                         make_context(flags, observation), flags.rank_attacks);
        } else if (rank.app->parsed()) {
            const bool has_size = rank.max_size->count() > 0;
            if (flags.rank_attacks == has_size)
                throw UsageError("voi-rank needs exactly one of --max-size or --rank-attacks");
            const Context ctx = make_context(flags, rank);
            report = flags.rank_attacks ? run_voi_observation("voi-rank", flags, rank, ctx, true)
                                        : run_voi_observed("voi-rank", flags, rank, ctx, true);
        }
        write_output(flags.common.output, report, out);
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace argvoi
