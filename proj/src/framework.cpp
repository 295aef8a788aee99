#include "argvoi/framework.hpp"

#include <algorithm>
#include <set>

namespace argvoi {

const char* to_string(Semantics sem) {
    switch (sem) {
        case Semantics::ConflictFree: return "conflict-free";
        case Semantics::Admissible: return "admissible";
        case Semantics::Complete: return "complete";
        case Semantics::Grounded: return "grounded";
        case Semantics::Preferred: return "preferred";
    }
    return "?";
}

const char* to_string(InferenceMode mode) {
    return mode == InferenceMode::Credulous ? "credulous" : "sceptical";
}

Semantics semantics_from_string(std::string_view name) {
    if (name == "conflict-free") return Semantics::ConflictFree;
    if (name == "admissible") return Semantics::Admissible;
    if (name == "complete") return Semantics::Complete;
    if (name == "grounded") return Semantics::Grounded;
    if (name == "preferred") return Semantics::Preferred;
    throw InputError("unknown semantics '" + std::string(name) +
                     "' (expected conflict-free, admissible, complete, grounded or preferred)");
}

InferenceMode inference_from_string(std::string_view name) {
    if (name == "credulous") return InferenceMode::Credulous;
    if (name == "sceptical") return InferenceMode::Sceptical;
    throw InputError("unknown inference mode '" + std::string(name) + "' (expected credulous or sceptical)");
}

bool is_valid_argument_id(std::string_view id) {
    if (id.empty()) return false;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

bool ObservationBundle::carries_probability_below_one() const {
    for (const auto& a : arguments)
        if (a.probability && *a.probability < 1.0) return true;
    for (const auto& d : attacks)
        if (d.probability && *d.probability < 1.0) return true;
    return false;
}

namespace {

void require_valid_id(std::string_view id) {
    if (!is_valid_argument_id(id))
        throw InputError("invalid argument id '" + std::string(id) +
                         "' (expected a non-empty token of letters, digits and underscores)");
}

}  // namespace

DungFramework DungFramework::make(const std::vector<std::string>& arguments,
                                  const std::vector<std::pair<std::string, std::string>>& attacks) {
    DungFramework f;
    f.ids_ = arguments;
    for (const auto& id : f.ids_) require_valid_id(id);
    std::sort(f.ids_.begin(), f.ids_.end());
    for (std::size_t i = 1; i < f.ids_.size(); ++i)
        if (f.ids_[i] == f.ids_[i - 1]) throw InputError("duplicate argument id '" + f.ids_[i] + "'");

    f.attacks_.reserve(attacks.size());
    for (const auto& [src, tgt] : attacks) {
        const auto si = f.find(src);
        if (!si) throw InputError("attack endpoint '" + src + "' is not a declared argument");
        const auto ti = f.find(tgt);
        if (!ti) throw InputError("attack endpoint '" + tgt + "' is not a declared argument");
        f.attacks_.push_back({static_cast<std::uint32_t>(*si), static_cast<std::uint32_t>(*ti)});
    }
    std::sort(f.attacks_.begin(), f.attacks_.end());
    f.attacks_.erase(std::unique(f.attacks_.begin(), f.attacks_.end()), f.attacks_.end());

    const std::size_t n = f.ids_.size();
    f.attackers_.assign(n, Bitset(n));
    f.incoming_.assign(n, {});
    f.outgoing_.assign(n, {});
    for (std::size_t j = 0; j < f.attacks_.size(); ++j) {
        const Attack& d = f.attacks_[j];
        f.attackers_[d.target].set(d.source);
        f.incoming_[d.target].push_back(static_cast<std::uint32_t>(j));
        f.outgoing_[d.source].push_back(static_cast<std::uint32_t>(j));
    }
    return f;
}

std::optional<std::size_t> DungFramework::find(std::string_view id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t DungFramework::index_of(std::string_view id) const {
    const auto i = find(id);
    if (!i) throw InputError("unknown argument '" + std::string(id) + "'");
    return *i;
}

std::optional<std::size_t> DungFramework::find_attack(std::size_t source, std::size_t target) const {
    const Attack probe{static_cast<std::uint32_t>(source), static_cast<std::uint32_t>(target)};
    const auto it = std::lower_bound(attacks_.begin(), attacks_.end(), probe);
    if (it == attacks_.end() || !(*it == probe)) return std::nullopt;
    return static_cast<std::size_t>(it - attacks_.begin());
}

bool DungFramework::has_attack(std::size_t source, std::size_t target) const {
    return find_attack(source, target).has_value();
}

Bitset DungFramework::all_arguments_mask() const {
    Bitset m(ids_.size());
    m.set_all();
    return m;
}

Bitset DungFramework::all_attacks_mask() const {
    Bitset m(attacks_.size());
    m.set_all();
    return m;
}

Extension DungFramework::to_extension(const Bitset& members) const {
    Extension out;
    out.reserve(members.count());
    members.for_each([&](std::size_t i) { out.push_back(ids_[i]); });
    return out;
}

Bitset DungFramework::to_mask(const Extension& members) const {
    Bitset m(ids_.size());
    for (const auto& id : members) m.set(index_of(id));
    return m;
}

DungFramework make_framework(const std::vector<std::string>& arguments,
                             const std::vector<std::pair<std::string, std::string>>& attacks) {
    return DungFramework::make(arguments, attacks);
}

std::vector<std::string> attackers(const DungFramework& framework, std::string_view argument) {
    return framework.to_extension(framework.attackers_mask(framework.index_of(argument)));
}

bool is_conflict_free(const DungFramework& framework, const Extension& candidate) {
    const Bitset s = framework.to_mask(candidate);
    return extension_satisfies(framework, Semantics::ConflictFree, s,
                               framework.all_arguments_mask(), framework.all_attacks_mask());
}

bool is_acceptable(const DungFramework& framework, const Extension& candidate, std::string_view argument) {
    const Bitset s = framework.to_mask(candidate);
    const std::size_t a = framework.index_of(argument);
    Bitset attacked(framework.argument_count());
    s.for_each([&](std::size_t c) {
        for (auto j : framework.outgoing_attacks(c)) attacked.set(framework.attacks()[j].target);
    });
    return attacked.contains(framework.attackers_mask(a));
}

bool is_admissible(const DungFramework& framework, const Extension& candidate) {
    const Bitset s = framework.to_mask(candidate);
    return extension_satisfies(framework, Semantics::Admissible, s,
                               framework.all_arguments_mask(), framework.all_attacks_mask());
}

bool is_complete(const DungFramework& framework, const Extension& candidate) {
    const Bitset s = framework.to_mask(candidate);
    return extension_satisfies(framework, Semantics::Complete, s,
                               framework.all_arguments_mask(), framework.all_attacks_mask());
}

Extension grounded_extension(const DungFramework& framework) {
    return framework.to_extension(
        grounded_mask(framework, framework.all_arguments_mask(), framework.all_attacks_mask()));
}

std::vector<Extension> extensions(const DungFramework& framework, Semantics sem) {
    std::vector<Extension> out;
    for (const auto& m :
         extension_masks(framework, sem, framework.all_arguments_mask(), framework.all_attacks_mask()))
        out.push_back(framework.to_extension(m));
    return out;
}

std::vector<std::string> accepted_arguments(const DungFramework& framework, Semantics sem, InferenceMode mode) {
    return framework.to_extension(
        accepted_mask(framework, sem, mode, framework.all_arguments_mask(), framework.all_attacks_mask()));
}

DungFramework remove_arguments(const DungFramework& framework, const std::vector<std::string>& removed) {
    std::set<std::string> gone;
    for (const auto& id : removed) {
        framework.index_of(id);  // unknown ids are an error, not a no-op
        gone.insert(id);
    }
    std::vector<std::string> args;
    for (const auto& id : framework.arguments())
        if (!gone.count(id)) args.push_back(id);
    std::vector<std::pair<std::string, std::string>> atts;
    for (const Attack& d : framework.attacks()) {
        const std::string& s = framework.argument_name(d.source);
        const std::string& t = framework.argument_name(d.target);
        if (!gone.count(s) && !gone.count(t)) atts.emplace_back(s, t);
    }
    return DungFramework::make(args, atts);
}

namespace {

// Structural checks shared by the plain and probabilistic extensions.
void validate_bundle_shape(const DungFramework& framework, const ObservationBundle& bundle) {
    std::set<std::string> fresh;
    for (const auto& a : bundle.arguments) {
        require_valid_id(a.id);
        if (framework.has_argument(a.id)) throw InputError("bundle argument '" + a.id + "' collides with an existing argument");
        if (!fresh.insert(a.id).second) throw InputError("duplicate bundle argument '" + a.id + "'");
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& d : bundle.attacks) {
        const bool src_new = fresh.count(d.source) > 0;
        const bool tgt_new = fresh.count(d.target) > 0;
        if (!src_new && !framework.has_argument(d.source))
            throw InputError("bundle attack endpoint '" + d.source + "' is neither a new nor an existing argument");
        if (!tgt_new && !framework.has_argument(d.target))
            throw InputError("bundle attack endpoint '" + d.target + "' is neither a new nor an existing argument");
        if (!src_new && !tgt_new)
            throw InputError("bundle attack (" + d.source + "," + d.target + ") touches no new argument");
        if (!seen.emplace(d.source, d.target).second)
            throw InputError("duplicate bundle attack (" + d.source + "," + d.target + ")");
    }
}

}  // namespace

DungFramework extend_framework(const DungFramework& framework, const ObservationBundle& bundle) {
    validate_bundle_shape(framework, bundle);
    if (bundle.carries_probability_below_one())
        throw InputError("bundle carries probabilities below 1 but the framework is not probabilistic");
    std::vector<std::string> args = framework.arguments();
    for (const auto& a : bundle.arguments) args.push_back(a.id);
    std::vector<std::pair<std::string, std::string>> atts;
    for (const Attack& d : framework.attacks())
        atts.emplace_back(framework.argument_name(d.source), framework.argument_name(d.target));
    for (const auto& d : bundle.attacks) atts.emplace_back(d.source, d.target);
    return DungFramework::make(args, atts);
}

// ---------------------------------------------------------------------------
// Subgraph evaluation

Bitset grounded_mask(const DungFramework& framework, const Bitset& present_args, const Bitset& present_atts) {
    const std::size_t n = framework.argument_count();
    Bitset in(n);
    Bitset attacked(n);  // arguments attacked by the current extension
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
            if (!present_args.test(a) || in.test(a)) continue;
            bool defended = true;
            for (auto j : framework.incoming_attacks(a)) {
                if (!present_atts.test(j)) continue;
                const auto src = framework.attacks()[j].source;
                if (present_args.test(src) && !attacked.test(src)) {
                    defended = false;
                    break;
                }
            }
            if (!defended) continue;
            in.set(a);
            changed = true;
            for (auto j : framework.outgoing_attacks(a)) {
                if (!present_atts.test(j)) continue;
                const auto tgt = framework.attacks()[j].target;
                if (present_args.test(tgt)) attacked.set(tgt);
            }
        }
    }
    return in;
}

namespace {

Bitset attacked_by(const DungFramework& framework, const Bitset& members, const Bitset& present_args,
                   const Bitset& present_atts) {
    Bitset attacked(framework.argument_count());
    members.for_each([&](std::size_t c) {
        for (auto j : framework.outgoing_attacks(c)) {
            if (!present_atts.test(j)) continue;
            const auto tgt = framework.attacks()[j].target;
            if (present_args.test(tgt)) attacked.set(tgt);
        }
    });
    return attacked;
}

bool acceptable_in_subgraph(const DungFramework& framework, std::size_t a, const Bitset& attacked,
                            const Bitset& present_args, const Bitset& present_atts) {
    for (auto j : framework.incoming_attacks(a)) {
        if (!present_atts.test(j)) continue;
        const auto src = framework.attacks()[j].source;
        if (present_args.test(src) && !attacked.test(src)) return false;
    }
    return true;
}

// Compressed view of the present subgraph: present arguments renumbered into
// the low bits of one 64-bit word, enabling plain-counter subset enumeration.
struct CompressedGraph {
    std::vector<std::size_t> global_index;         // compressed -> framework index
    std::vector<std::uint64_t> attacker_bits;      // per compressed argument
    std::vector<std::uint64_t> target_bits;
    std::size_t size() const { return global_index.size(); }
};

CompressedGraph compress(const DungFramework& framework, const Bitset& present_args, const Bitset& present_atts) {
    CompressedGraph g;
    std::vector<std::size_t> pos(framework.argument_count(), 0);
    present_args.for_each([&](std::size_t i) {
        pos[i] = g.global_index.size();
        g.global_index.push_back(i);
    });
    if (g.size() > kMaxEnumerationArguments)
        throw InputError("exhaustive extension enumeration supports at most " +
                         std::to_string(kMaxEnumerationArguments) + " arguments (got " +
                         std::to_string(g.size()) + ")");
    g.attacker_bits.assign(g.size(), 0);
    g.target_bits.assign(g.size(), 0);
    present_atts.for_each([&](std::size_t j) {
        const Attack& d = framework.attacks()[j];
        if (!present_args.test(d.source) || !present_args.test(d.target)) return;
        g.attacker_bits[pos[d.target]] |= std::uint64_t{1} << pos[d.source];
        g.target_bits[pos[d.source]] |= std::uint64_t{1} << pos[d.target];
    });
    return g;
}

// Enumerates every subset satisfying sem (conflict-free, admissible or
// complete) in ascending counter order.
template <typename Fn>
void for_each_satisfying(const CompressedGraph& g, Semantics sem, Fn&& emit) {
    const std::size_t k = g.size();
    const std::uint64_t end = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        bool conflict_free = true;
        std::uint64_t attacked = 0;
        for (std::uint64_t rest = mask; rest;) {
            const int b = std::countr_zero(rest);
            rest &= rest - 1;
            if (g.attacker_bits[b] & mask) {
                conflict_free = false;
                break;
            }
            attacked |= g.target_bits[b];
        }
        if (!conflict_free) continue;
        if (sem == Semantics::ConflictFree) {
            emit(mask);
            continue;
        }
        bool admissible = true;
        for (std::uint64_t rest = mask; rest;) {
            const int b = std::countr_zero(rest);
            rest &= rest - 1;
            if (g.attacker_bits[b] & ~attacked) {
                admissible = false;
                break;
            }
        }
        if (!admissible) continue;
        if (sem == Semantics::Admissible) {
            emit(mask);
            continue;
        }
        bool complete = true;
        for (std::size_t a = 0; a < k; ++a) {
            if (mask & (std::uint64_t{1} << a)) continue;
            if ((g.attacker_bits[a] & ~attacked) == 0) {
                complete = false;  // acceptable argument left outside
                break;
            }
        }
        if (complete) emit(mask);
    }
}

Bitset decompress(const CompressedGraph& g, std::uint64_t mask, std::size_t n) {
    Bitset out(n);
    for (std::uint64_t rest = mask; rest;) {
        const int b = std::countr_zero(rest);
        rest &= rest - 1;
        out.set(g.global_index[b]);
    }
    return out;
}

std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> masks) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < masks.size(); ++j) {
            if (i == j) continue;
            if ((masks[i] & ~masks[j]) == 0 && masks[i] != masks[j]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(masks[i]);
    }
    return out;
}

}  // namespace

bool extension_satisfies(const DungFramework& framework, Semantics sem, const Bitset& candidate,
                         const Bitset& present_args, const Bitset& present_atts) {
    if (!present_args.contains(candidate))
        return false;  // an extension is a subset of the (sub)framework's arguments
    if (sem == Semantics::Grounded)
        return candidate == grounded_mask(framework, present_args, present_atts);
    if (sem == Semantics::Preferred) {
        for (const auto& m : extension_masks(framework, Semantics::Preferred, present_args, present_atts))
            if (m == candidate) return true;
        return false;
    }
    bool conflict_free = true;
    candidate.for_each([&](std::size_t a) {
        for (auto j : framework.incoming_attacks(a))
            if (present_atts.test(j) && candidate.test(framework.attacks()[j].source)) conflict_free = false;
    });
    if (!conflict_free) return false;
    if (sem == Semantics::ConflictFree) return true;

    const Bitset attacked = attacked_by(framework, candidate, present_args, present_atts);
    bool admissible = true;
    candidate.for_each([&](std::size_t a) {
        if (!acceptable_in_subgraph(framework, a, attacked, present_args, present_atts)) admissible = false;
    });
    if (!admissible) return false;
    if (sem == Semantics::Admissible) return true;

    bool complete = true;
    present_args.for_each([&](std::size_t a) {
        if (!candidate.test(a) && acceptable_in_subgraph(framework, a, attacked, present_args, present_atts))
            complete = false;
    });
    return complete;
}

std::vector<Bitset> extension_masks(const DungFramework& framework, Semantics sem,
                                    const Bitset& present_args, const Bitset& present_atts) {
    const std::size_t n = framework.argument_count();
    if (sem == Semantics::Grounded) return {grounded_mask(framework, present_args, present_atts)};

    const CompressedGraph g = compress(framework, present_args, present_atts);
    if (sem == Semantics::Preferred) {
        std::vector<std::uint64_t> complete;
        for_each_satisfying(g, Semantics::Complete, [&](std::uint64_t m) { complete.push_back(m); });
        std::vector<Bitset> out;
        for (auto m : maximal_masks(std::move(complete))) out.push_back(decompress(g, m, n));
        return out;
    }
    std::vector<Bitset> out;
    for_each_satisfying(g, sem, [&](std::uint64_t m) { out.push_back(decompress(g, m, n)); });
    return out;
}

Bitset accepted_mask(const DungFramework& framework, Semantics sem, InferenceMode mode,
                     const Bitset& present_args, const Bitset& present_atts) {
    const std::size_t n = framework.argument_count();
    if (sem == Semantics::Grounded)
        return grounded_mask(framework, present_args, present_atts);  // unique extension, both modes agree

    if (sem == Semantics::Preferred) {
        const auto exts = extension_masks(framework, Semantics::Preferred, present_args, present_atts);
        Bitset acc(n);
        if (exts.empty()) return acc;
        if (mode == InferenceMode::Sceptical) {
            acc = present_args;
            for (const auto& e : exts) acc &= e;
        } else {
            for (const auto& e : exts) acc |= e;
        }
        return acc;
    }

    const CompressedGraph g = compress(framework, present_args, present_atts);
    Bitset acc(n);
    bool seen = false;
    if (mode == InferenceMode::Sceptical) acc = present_args;
    for_each_satisfying(g, sem, [&](std::uint64_t m) {
        seen = true;
        const Bitset e = decompress(g, m, n);
        if (mode == InferenceMode::Sceptical)
            acc &= e;
        else
            acc |= e;
    });
    if (!seen) return Bitset(n);  // no extension at all: sceptical acceptance is empty
    return acc;
}

DungFramework subgraph(const DungFramework& base, const Bitset& present_args, const Bitset& present_atts) {
    std::vector<std::string> args;
    present_args.for_each([&](std::size_t i) { args.push_back(base.argument_name(i)); });
    std::vector<std::pair<std::string, std::string>> atts;
    present_atts.for_each([&](std::size_t j) {
        const Attack& d = base.attacks()[j];
        atts.emplace_back(base.argument_name(d.source), base.argument_name(d.target));
    });
    return DungFramework::make(args, atts);
}

}  // namespace argvoi
