#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "termweave/term.hpp"

namespace termweave {

/// One generalization g = (R, S): under any subtree rooted at a label in
/// `roots`, replace every maximal inner subtree rooted at a label in
/// `replace` with a metavariable.
struct GeneralizationStep {
    std::set<std::string> roots;
    std::set<std::string> replace;
};

/// Ordered sequence G = (g1, g2, ...); steps are applied strictly in order.
struct GeneralizationSpec {
    std::vector<GeneralizationStep> steps;
};

/// Assigns metavariable names T_1, T_2, ... in first-encounter order, keyed
/// by the location-normalized subterm so that occurrences differing only in
/// source locations share one name. Shared across both sides of a rule;
/// not safe for concurrent use within one generalize_pair call.
class MetavarTable {
public:
    /// Name for the given (already normalized) subterm, assigning the next
    /// fresh name on first encounter.
    const std::string& name_for(const TermPtr& normalized_key);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t next_index() const noexcept { return next_; }

private:
    std::unordered_map<std::string, std::string> names_;  // canonical text -> name
    std::size_t next_ = 1;
};

/// Turn a concrete term into a pattern: apply each (R, S) step in order,
/// then replace remaining location subterms with `_` (Left side) or
/// `gen_info()` (Right side).
TermPtr generalize_term(const TermPtr& t, const GeneralizationSpec& spec,
                        const LocationLabels& loc, MetavarTable& table, Side side);

/// Generalize a before/after pair with one shared table: subterms identical
/// modulo location normalization receive the same metavariable on both sides.
std::pair<TermPtr, TermPtr> generalize_pair(const TermPtr& left, const TermPtr& right,
                                            const GeneralizationSpec& spec,
                                            const LocationLabels& loc);

}  // namespace termweave
