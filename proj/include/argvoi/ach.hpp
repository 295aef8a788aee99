#pragma once

#include <map>
#include <string>
#include <vector>

#include "argvoi/framework.hpp"
#include "argvoi/praf.hpp"

namespace argvoi {

// Cell labels of an analysis-of-competing-hypotheses matrix. Only the two
// inconsistency labels generate attacks; consistency labels are kept for the
// data model but Dung frameworks cannot express support.
enum class CellLabel { Inconsistent, WeaklyInconsistent, NotApplicable, WeaklyConsistent, Consistent };

const char* to_string(CellLabel label);          // II, I, NA, C, CC
CellLabel cell_label_from_string(std::string_view text);

struct AchHypothesis {
    std::string id;
    std::string text;  // display text; defaults to the id
};

struct AchEvidence {
    std::string id;
    std::string text;
    std::string uncertainty;  // free-form label, e.g. "certain" or "likely"
};

// Hypotheses along one axis, evidence along the other, one consistency label
// per (evidence, hypothesis) pair.
class AchMatrix {
public:
    AchMatrix() = default;

    // cells are row-major: evidence index * hypothesis count + hypothesis index
    static AchMatrix make(std::vector<AchHypothesis> hypotheses, std::vector<AchEvidence> evidence,
                          std::vector<CellLabel> cells);

    const std::vector<AchHypothesis>& hypotheses() const { return hypotheses_; }
    const std::vector<AchEvidence>& evidence() const { return evidence_; }
    CellLabel cell(std::size_t evidence_row, std::size_t hypothesis_column) const {
        return cells_[evidence_row * hypotheses_.size() + hypothesis_column];
    }

private:
    std::vector<AchHypothesis> hypotheses_;
    std::vector<AchEvidence> evidence_;
    std::vector<CellLabel> cells_;
};

// Numeric mapping used when viewing an ACH matrix probabilistically:
// evidence uncertainty labels and the two inconsistency strengths become
// probabilities. Hypotheses and the attacks between them are always 1.
struct ProbabilityMapping {
    std::map<std::string, double> uncertainty;     // label -> argument probability
    std::map<std::string, double> inconsistency;   // "I" / "II" -> attack probability

    static ProbabilityMapping defaults();  // certain=1.0, likely=0.65, I=0.5, II=1.0
};

// Arguments are the evidence and hypotheses; every I or II cell becomes an
// evidence-to-hypothesis attack and distinct hypotheses attack each other in
// both directions (mutual exclusivity).
DungFramework ach_to_daf(const AchMatrix& matrix);

ProbabilisticFramework ach_to_praf(const AchMatrix& matrix,
                                   const ProbabilityMapping& mapping = ProbabilityMapping::defaults());

}  // namespace argvoi
