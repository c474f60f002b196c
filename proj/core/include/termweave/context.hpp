#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "termweave/term.hpp"
#include "termweave/weave.hpp"

namespace termweave {

/// Labels of interest: constructs around which rules are anchored when an
/// insertion or deletion needs surrounding context. May be empty, in which
/// case only mismatches yield rules.
struct ContextSpec {
    std::set<std::string> labels;

    bool contains(const std::string& label) const { return labels.count(label) != 0; }
};

/// A location in the weave at which one rewrite rule is generated.
struct RuleSite {
    enum class Kind { Mismatch, Context };

    Kind kind;
    std::vector<std::size_t> path;  // WeavePoint indices from the root
    WeavePoint point;               // Mismatch point, or the Match point of the context node
};

/// Walk the weave from the root. The first (shallowest) node whose label is
/// a context label and whose subtree contains a change becomes a Context
/// site; nothing below it is visited. Outside such regions each Mismatch
/// becomes its own site, and a hole raises ContextError naming its path and
/// candidate ancestor labels.
std::vector<RuleSite> select_rule_sites(const WeavePoint& root, const ContextSpec& ctx);

/// The concrete before/after fragments a rule is built from: left/right
/// projections of the site's weave material.
std::pair<TermPtr, TermPtr> site_terms(const RuleSite& site);

}  // namespace termweave
