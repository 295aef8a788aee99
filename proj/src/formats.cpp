#include "argvoi/formats.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace argvoi {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& message) {
    throw InputError("line " + std::to_string(line) + ": " + message);
}

bool is_plain_decimal(std::string_view s) {
    // digits with at most one interior '.'; no sign, no exponent
    if (s.empty() || s.front() == '.' || s.back() == '.') return false;
    bool dot = false;
    for (char c : s) {
        if (c == '.') {
            if (dot) return false;
            dot = true;
        } else if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

double parse_probability(std::string_view token, std::size_t line) {
    if (!is_plain_decimal(token))
        fail_line(line, "invalid probability literal '" + std::string(token) + "' (plain decimal expected)");
    const double p = std::stod(std::string(token));
    if (!(p > 0.0 && p <= 1.0))
        fail_line(line, "probability " + std::string(token) + " out of range (expected a value in (0,1])");
    return p;
}

struct Directive {
    bool is_attack = false;
    std::string first;
    std::string second;                 // attacks only
    std::optional<double> probability;  // present iff the directive carries one
};

// Parses one `arg(...)` / `att(...)` directive; comments and blank lines
// return nothing.
std::optional<Directive> parse_directive(std::string_view raw, std::size_t line) {
    std::string_view s = raw;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) return std::nullopt;

    Directive d;
    if (s.starts_with("arg(")) {
        d.is_attack = false;
        s.remove_prefix(4);
    } else if (s.starts_with("att(")) {
        d.is_attack = true;
        s.remove_prefix(4);
    } else {
        fail_line(line, "expected an arg(...). or att(...). directive");
    }
    if (!s.ends_with(").")) fail_line(line, "directive must end with ').'");
    s.remove_suffix(2);

    std::vector<std::string_view> fields;
    while (true) {
        const auto comma = s.find(',');
        if (comma == std::string_view::npos) {
            fields.push_back(trim(s));
            break;
        }
        fields.push_back(trim(s.substr(0, comma)));
        s.remove_prefix(comma + 1);
    }

    const std::size_t base = d.is_attack ? 2 : 1;
    if (fields.size() < base || fields.size() > base + 1)
        fail_line(line, d.is_attack ? "att(...) takes 2 or 3 fields" : "arg(...) takes 1 or 2 fields");
    if (!is_valid_argument_id(fields[0])) fail_line(line, "invalid argument id '" + std::string(fields[0]) + "'");
    d.first = std::string(fields[0]);
    if (d.is_attack) {
        if (!is_valid_argument_id(fields[1]))
            fail_line(line, "invalid argument id '" + std::string(fields[1]) + "'");
        d.second = std::string(fields[1]);
    }
    if (fields.size() == base + 1) d.probability = parse_probability(fields[base], line);
    return d;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line = 0;
    while (!text.empty()) {
        ++line;
        const auto nl = text.find('\n');
        const std::string_view current = nl == std::string_view::npos ? text : text.substr(0, nl);
        fn(current, line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
}

}  // namespace

Framework parse_framework(std::string_view text) {
    std::vector<std::pair<std::string, double>> args;
    std::set<std::string> declared;
    std::vector<std::tuple<std::string, std::string, double>> atts;
    std::set<std::pair<std::string, std::string>> attack_seen;
    bool probabilistic = false;

    for_each_line(text, [&](std::string_view raw, std::size_t line) {
        const auto d = parse_directive(raw, line);
        if (!d) return;
        const double p = d->probability.value_or(1.0);
        if (p < 1.0) probabilistic = true;
        if (!d->is_attack) {
            if (!declared.insert(d->first).second) fail_line(line, "duplicate argument '" + d->first + "'");
            args.emplace_back(d->first, p);
            return;
        }
        if (!declared.count(d->first))
            fail_line(line, "unknown argument '" + d->first + "' (arguments must be declared before attacks)");
        if (!declared.count(d->second))
            fail_line(line, "unknown argument '" + d->second + "' (arguments must be declared before attacks)");
        if (!attack_seen.emplace(d->first, d->second).second)
            fail_line(line, "duplicate attack (" + d->first + "," + d->second + ")");
        atts.emplace_back(d->first, d->second, p);
    });

    if (probabilistic) return ProbabilisticFramework::make(args, atts);
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [id, p] : args) ids.push_back(id);
    for (const auto& [s, t, p] : atts) pairs.emplace_back(s, t);
    return DungFramework::make(ids, pairs);
}

ObservationBundle parse_bundle(std::string_view text) {
    ObservationBundle bundle;
    std::set<std::string> declared;
    for_each_line(text, [&](std::string_view raw, std::size_t line) {
        const auto d = parse_directive(raw, line);
        if (!d) return;
        if (!d->is_attack) {
            if (!declared.insert(d->first).second) fail_line(line, "duplicate argument '" + d->first + "'");
            bundle.arguments.push_back({d->first, d->probability});
        } else {
            bundle.attacks.push_back({d->first, d->second, d->probability});
        }
    });
    return bundle;
}

std::string serialize_framework(const DungFramework& framework) {
    std::string out;
    for (const auto& id : framework.arguments()) out += "arg(" + id + ").\n";
    for (const Attack& d : framework.attacks())
        out += "att(" + framework.argument_name(d.source) + "," + framework.argument_name(d.target) + ").\n";
    return out;
}

std::string serialize_framework(const ProbabilisticFramework& framework) {
    const DungFramework& base = framework.base();
    std::string out;
    for (std::size_t i = 0; i < base.argument_count(); ++i) {
        const double p = framework.argument_probability(i);
        out += "arg(" + base.argument_name(i);
        if (p < 1.0) out += "," + format_probability(p);
        out += ").\n";
    }
    for (std::size_t j = 0; j < base.attacks().size(); ++j) {
        const Attack& d = base.attacks()[j];
        const double p = framework.attack_probability(j);
        out += "att(" + base.argument_name(d.source) + "," + base.argument_name(d.target);
        if (p < 1.0) out += "," + format_probability(p);
        out += ").\n";
    }
    return out;
}

std::string serialize_framework(const Framework& framework) {
    return std::visit([](const auto& f) { return serialize_framework(f); }, framework);
}

// ---------------------------------------------------------------------------
// ACH CSV

namespace {

// Minimal CSV reader: comma separation, double-quote quoting with doubled
// quotes inside quoted fields; newlines inside quoted fields are preserved.
std::vector<std::vector<std::string>> read_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;

    const auto push_field = [&] {
        if (!quoted) {
            const auto t = trim(field);
            field.assign(t.begin(), t.end());
        }
        row.push_back(field);
        field.clear();
        field_started = false;
        quoted = false;
    };
    const auto push_row = [&] {
        push_field();
        const bool blank = row.size() == 1 && row[0].empty();
        if (!blank) rows.push_back(row);
        row.clear();
    };

    bool in_quotes = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field_started) {
                    in_quotes = true;
                    quoted = true;
                    field_started = true;
                } else {
                    field += c;
                }
                break;
            case ',':
                push_field();
                break;
            case '\n':
                push_row();
                break;
            case '\r':
                break;
            default:
                field += c;
                field_started = true;
                break;
        }
    }
    if (in_quotes) throw InputError("unterminated quote in CSV input");
    if (field_started || !row.empty() || !field.empty()) push_row();
    return rows;
}

}  // namespace

AchMatrix parse_ach_csv(std::string_view text) {
    const auto rows = read_csv(text);
    if (rows.empty()) throw InputError("empty ACH matrix");
    const auto& header = rows[0];
    if (header.size() < 3 || header[0] != "id" || header[1] != "uncertainty")
        throw InputError("row 1: header must be 'id,uncertainty,<hypothesis ids...>'");

    std::vector<AchHypothesis> hypotheses;
    for (std::size_t c = 2; c < header.size(); ++c) hypotheses.push_back({header[c], header[c]});

    std::vector<AchEvidence> evidence;
    std::vector<CellLabel> cells;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size())
            throw InputError("row " + std::to_string(r + 1) + ": expected " + std::to_string(header.size()) +
                             " fields, found " + std::to_string(row.size()) + " (ragged row)");
        evidence.push_back({row[0], row[0], row[1]});
        for (std::size_t c = 2; c < row.size(); ++c) {
            try {
                cells.push_back(cell_label_from_string(row[c]));
            } catch (const InputError& e) {
                throw InputError("row " + std::to_string(r + 1) + ", column " + std::to_string(c + 1) + ": " +
                                 e.what());
            }
        }
    }
    return AchMatrix::make(std::move(hypotheses), std::move(evidence), std::move(cells));
}

// ---------------------------------------------------------------------------
// Formatting and reports

std::string format_fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

std::string format_value(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return format_fixed6(value);
}

std::string format_probability(double value) {
    std::string s = format_fixed6(value);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

Report& Report::field(std::string_view key, std::string_view value) {
    std::string line(key);
    if (!value.empty()) {
        line += ' ';
        line += value;
    }
    lines_.push_back(std::move(line));
    return *this;
}

Report& Report::append(const Report& other) {
    lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
    return *this;
}

std::string Report::render() const {
    std::string out;
    for (const auto& line : lines_) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
        if (!out.empty()) out += ',';
        out += id;
    }
    return out;
}

Report acceptance_report(Semantics sem, InferenceMode mode, const std::vector<std::string>& accepted) {
    Report r;
    r.field("semantics", to_string(sem));
    r.field("inference", to_string(mode));
    r.field("method", "exact");
    r.field("accepted", join_ids(accepted));
    return r;
}

Report acceptance_report(Semantics sem, InferenceMode mode, const AcceptanceProbabilities& probabilities) {
    Report r;
    r.field("semantics", to_string(sem));
    r.field("inference", to_string(mode));
    r.field("method", to_string(probabilities.method));
    if (probabilities.method == EvalMethod::MonteCarlo) {
        r.field("samples", std::to_string(probabilities.samples));
        r.field("seed", std::to_string(probabilities.seed));
    }
    for (std::size_t i = 0; i < probabilities.ids.size(); ++i) {
        std::string value = probabilities.ids[i] + " " + format_fixed6(probabilities.probability[i]);
        if (probabilities.method == EvalMethod::MonteCarlo)
            value += " " + format_fixed6(probabilities.std_error[i]);
        r.field("argument", value);
    }
    return r;
}

Report observed_ranking_report(const std::vector<RankedCandidate>& ranking) {
    Report r;
    for (const auto& c : ranking) r.field("candidate", join_ids(c.removed) + " " + format_value(c.value));
    return r;
}

Report attack_ranking_report(const std::vector<RankedAttack>& ranking) {
    Report r;
    for (const auto& t : ranking) r.field("target", t.target + " " + format_value(t.value));
    return r;
}

}  // namespace argvoi
