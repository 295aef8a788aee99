#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "argvoi/ach.hpp"
#include "argvoi/framework.hpp"
#include "argvoi/praf.hpp"
#include "argvoi/voi.hpp"

namespace argvoi {

// A framework document denotes a probabilistic framework iff any probability
// is strictly below 1; otherwise it denotes a plain Dung framework.
using Framework = std::variant<DungFramework, ProbabilisticFramework>;

// Framework grammar, one directive per line, '#' comments, blank lines ignored:
//   arg(<id>).  arg(<id>,<prob>).  att(<src>,<tgt>).  att(<src>,<tgt>,<prob>).
// Probabilities are plain decimal literals in (0,1]; omitted means 1.
// Arguments must be declared before any attack that uses them.
Framework parse_framework(std::string_view text);

// Canonical form: arguments sorted by id, then attacks sorted by
// (source, target); probabilities trimmed to at most 6 decimals and omitted
// when 1. parse(serialize(f)) reproduces f on every grammar-expressible input.
std::string serialize_framework(const DungFramework& framework);
std::string serialize_framework(const ProbabilisticFramework& framework);
std::string serialize_framework(const Framework& framework);

// Observation bundles reuse the framework grammar: arg lines declare the new
// arguments, att lines may also reference arguments of the target framework.
// A probability is recorded only when the directive carries one.
ObservationBundle parse_bundle(std::string_view text);

// ACH CSV layout:
//   id,uncertainty,<hyp-id>,...
//   <evidence-id>,<uncertainty-label>,<cell>,...
// with cells in {II,I,NA,C,CC} and common double-quote field quoting.
AchMatrix parse_ach_csv(std::string_view text);

std::string format_fixed6(double value);        // always 6 decimals
std::string format_value(double value);         // 6 decimals, +infinity as "inf"
std::string format_probability(double value);   // up to 6 decimals, zeros trimmed

// Key/value report, one field per line, rendered in insertion order with LF
// line endings; identical inputs render byte-identically.
class Report {
public:
    Report& field(std::string_view key, std::string_view value);
    Report& field(std::string_view key) { return field(key, {}); }
    Report& append(const Report& other);
    std::string render() const;

private:
    std::vector<std::string> lines_;
};

Report acceptance_report(Semantics sem, InferenceMode mode, const std::vector<std::string>& accepted);
Report acceptance_report(Semantics sem, InferenceMode mode, const AcceptanceProbabilities& probabilities);
Report observed_ranking_report(const std::vector<RankedCandidate>& ranking);
Report attack_ranking_report(const std::vector<RankedAttack>& ranking);

std::string join_ids(const std::vector<std::string>& ids);  // comma-separated

}  // namespace argvoi
