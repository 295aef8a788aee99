#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argvoi/bitset.hpp"
#include "argvoi/error.hpp"

namespace argvoi {

enum class Semantics { ConflictFree, Admissible, Complete, Grounded, Preferred };
enum class InferenceMode { Credulous, Sceptical };

const char* to_string(Semantics sem);
const char* to_string(InferenceMode mode);
Semantics semantics_from_string(std::string_view name);
InferenceMode inference_from_string(std::string_view name);

// Directed attack between two arguments, stored as dense indices into the
// owning framework's sorted argument list.
struct Attack {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    friend auto operator<=>(const Attack&, const Attack&) = default;
};

// An extension is a set of argument ids, kept sorted so equal sets compare
// equal and every output is byte-stable.
using Extension = std::vector<std::string>;

struct BundleArgument {
    std::string id;
    std::optional<double> probability;  // set only for probabilistic bundles
};

struct BundleAttack {
    std::string source;
    std::string target;
    std::optional<double> probability;
};

// New material to add to a framework. Every attack must touch at least one
// of the bundle's new arguments; attacks between two pre-existing arguments
// are not part of an observation.
struct ObservationBundle {
    std::vector<BundleArgument> arguments;
    std::vector<BundleAttack> attacks;

    bool empty() const { return arguments.empty() && attacks.empty(); }
    bool carries_probability_below_one() const;
};

bool is_valid_argument_id(std::string_view id);

// Immutable Dung argumentation framework: a finite set of argument ids and a
// set of directed attacks over them. Arguments are sorted by id and attacks
// by (source, target) index, which fixes the canonical order used everywhere.
class DungFramework {
public:
    DungFramework() = default;

    static DungFramework make(const std::vector<std::string>& arguments,
                              const std::vector<std::pair<std::string, std::string>>& attacks);

    std::size_t argument_count() const { return ids_.size(); }
    const std::vector<std::string>& arguments() const { return ids_; }
    const std::vector<Attack>& attacks() const { return attacks_; }
    const std::string& argument_name(std::size_t index) const { return ids_[index]; }

    std::optional<std::size_t> find(std::string_view id) const;
    std::size_t index_of(std::string_view id) const;  // throws InputError on unknown id
    bool has_argument(std::string_view id) const { return find(id).has_value(); }
    bool has_attack(std::size_t source, std::size_t target) const;
    std::optional<std::size_t> find_attack(std::size_t source, std::size_t target) const;

    const Bitset& attackers_mask(std::size_t target) const { return attackers_[target]; }
    const std::vector<std::uint32_t>& incoming_attacks(std::size_t target) const { return incoming_[target]; }
    const std::vector<std::uint32_t>& outgoing_attacks(std::size_t source) const { return outgoing_[source]; }

    Bitset all_arguments_mask() const;
    Bitset all_attacks_mask() const;

    Extension to_extension(const Bitset& members) const;
    Bitset to_mask(const Extension& members) const;  // validates membership

    friend bool operator==(const DungFramework& a, const DungFramework& b) {
        return a.ids_ == b.ids_ && a.attacks_ == b.attacks_;
    }

private:
    std::vector<std::string> ids_;                       // sorted
    std::vector<Attack> attacks_;                        // sorted by (source, target)
    std::vector<Bitset> attackers_;                      // per argument
    std::vector<std::vector<std::uint32_t>> incoming_;   // attack indices by target
    std::vector<std::vector<std::uint32_t>> outgoing_;   // attack indices by source
};

DungFramework make_framework(const std::vector<std::string>& arguments,
                             const std::vector<std::pair<std::string, std::string>>& attacks);

std::vector<std::string> attackers(const DungFramework& framework, std::string_view argument);

bool is_conflict_free(const DungFramework& framework, const Extension& candidate);
bool is_acceptable(const DungFramework& framework, const Extension& candidate, std::string_view argument);
bool is_admissible(const DungFramework& framework, const Extension& candidate);
bool is_complete(const DungFramework& framework, const Extension& candidate);

Extension grounded_extension(const DungFramework& framework);
std::vector<Extension> extensions(const DungFramework& framework, Semantics sem);
std::vector<std::string> accepted_arguments(const DungFramework& framework, Semantics sem, InferenceMode mode);

DungFramework remove_arguments(const DungFramework& framework, const std::vector<std::string>& removed);
DungFramework extend_framework(const DungFramework& framework, const ObservationBundle& bundle);

// ---------------------------------------------------------------------------
// Subgraph evaluation. The probabilistic engine evaluates many subgraphs of
// one base framework; these run directly on presence masks (arguments by
// argument index, attacks by attack index) without rebuilding frameworks.
// An attack mask never contains an attack whose endpoints are absent.

Bitset grounded_mask(const DungFramework& framework, const Bitset& present_args, const Bitset& present_atts);
bool extension_satisfies(const DungFramework& framework, Semantics sem, const Bitset& candidate,
                         const Bitset& present_args, const Bitset& present_atts);
std::vector<Bitset> extension_masks(const DungFramework& framework, Semantics sem,
                                    const Bitset& present_args, const Bitset& present_atts);
Bitset accepted_mask(const DungFramework& framework, Semantics sem, InferenceMode mode,
                     const Bitset& present_args, const Bitset& present_atts);

// Materialize the subgraph selected by the masks as a standalone framework.
DungFramework subgraph(const DungFramework& base, const Bitset& present_args, const Bitset& present_atts);

// Exhaustive subset enumeration is exponential; reject outright rather than
// run for hours. Grounded evaluation is a fixpoint and has no such limit.
inline constexpr std::size_t kMaxEnumerationArguments = 24;

}  // namespace argvoi
