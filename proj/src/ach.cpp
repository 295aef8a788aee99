#include "argvoi/ach.hpp"

#include <set>

namespace argvoi {

const char* to_string(CellLabel label) {
    switch (label) {
        case CellLabel::Inconsistent: return "II";
        case CellLabel::WeaklyInconsistent: return "I";
        case CellLabel::NotApplicable: return "NA";
        case CellLabel::WeaklyConsistent: return "C";
        case CellLabel::Consistent: return "CC";
    }
    return "?";
}

CellLabel cell_label_from_string(std::string_view text) {
    if (text == "II") return CellLabel::Inconsistent;
    if (text == "I") return CellLabel::WeaklyInconsistent;
    if (text == "NA") return CellLabel::NotApplicable;
    if (text == "C") return CellLabel::WeaklyConsistent;
    if (text == "CC") return CellLabel::Consistent;
    throw InputError("unknown cell label '" + std::string(text) + "' (expected II, I, NA, C or CC)");
}

AchMatrix AchMatrix::make(std::vector<AchHypothesis> hypotheses, std::vector<AchEvidence> evidence,
                          std::vector<CellLabel> cells) {
    if (hypotheses.empty()) throw InputError("an ACH matrix needs at least one hypothesis");
    if (cells.size() != hypotheses.size() * evidence.size())
        throw InputError("ACH cell count does not cover evidence x hypotheses");
    std::set<std::string> ids;
    for (auto& h : hypotheses) {
        if (!is_valid_argument_id(h.id)) throw InputError("invalid hypothesis id '" + h.id + "'");
        if (!ids.insert(h.id).second) throw InputError("duplicate id '" + h.id + "' in ACH matrix");
        if (h.text.empty()) h.text = h.id;
    }
    for (auto& e : evidence) {
        if (!is_valid_argument_id(e.id)) throw InputError("invalid evidence id '" + e.id + "'");
        if (!ids.insert(e.id).second) throw InputError("duplicate id '" + e.id + "' in ACH matrix");
        if (e.text.empty()) e.text = e.id;
        if (e.uncertainty.empty()) throw InputError("evidence '" + e.id + "' has no uncertainty label");
    }
    AchMatrix m;
    m.hypotheses_ = std::move(hypotheses);
    m.evidence_ = std::move(evidence);
    m.cells_ = std::move(cells);
    return m;
}

ProbabilityMapping ProbabilityMapping::defaults() {
    ProbabilityMapping pm;
    pm.uncertainty = {{"certain", 1.0}, {"likely", 0.65}};
    pm.inconsistency = {{"I", 0.5}, {"II", 1.0}};
    return pm;
}

namespace {

bool is_attack_label(CellLabel label) {
    return label == CellLabel::Inconsistent || label == CellLabel::WeaklyInconsistent;
}

}  // namespace

DungFramework ach_to_daf(const AchMatrix& matrix) {
    std::vector<std::string> args;
    for (const auto& e : matrix.evidence()) args.push_back(e.id);
    for (const auto& h : matrix.hypotheses()) args.push_back(h.id);
    std::vector<std::pair<std::string, std::string>> attacks;
    for (std::size_t row = 0; row < matrix.evidence().size(); ++row)
        for (std::size_t col = 0; col < matrix.hypotheses().size(); ++col)
            if (is_attack_label(matrix.cell(row, col)))
                attacks.emplace_back(matrix.evidence()[row].id, matrix.hypotheses()[col].id);
    for (const auto& a : matrix.hypotheses())
        for (const auto& b : matrix.hypotheses())
            if (a.id != b.id) attacks.emplace_back(a.id, b.id);
    return DungFramework::make(args, attacks);
}

ProbabilisticFramework ach_to_praf(const AchMatrix& matrix, const ProbabilityMapping& mapping) {
    std::vector<std::pair<std::string, double>> args;
    for (const auto& e : matrix.evidence()) {
        const auto it = mapping.uncertainty.find(e.uncertainty);
        if (it == mapping.uncertainty.end())
            throw InputError("uncertainty label '" + e.uncertainty + "' of evidence '" + e.id +
                             "' has no probability mapping");
        args.emplace_back(e.id, it->second);
    }
    for (const auto& h : matrix.hypotheses()) args.emplace_back(h.id, 1.0);

    std::vector<std::tuple<std::string, std::string, double>> attacks;
    for (std::size_t row = 0; row < matrix.evidence().size(); ++row) {
        for (std::size_t col = 0; col < matrix.hypotheses().size(); ++col) {
            const CellLabel label = matrix.cell(row, col);
            if (!is_attack_label(label)) continue;
            const auto it = mapping.inconsistency.find(to_string(label));
            if (it == mapping.inconsistency.end())
                throw InputError(std::string("inconsistency label '") + to_string(label) +
                                 "' has no probability mapping");
            attacks.emplace_back(matrix.evidence()[row].id, matrix.hypotheses()[col].id, it->second);
        }
    }
    for (const auto& a : matrix.hypotheses())
        for (const auto& b : matrix.hypotheses())
            if (a.id != b.id) attacks.emplace_back(a.id, b.id, 1.0);
    return ProbabilisticFramework::make(args, attacks);
}

}  // namespace argvoi
