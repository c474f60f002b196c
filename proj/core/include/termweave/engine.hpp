#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "termweave/rulegen.hpp"
#include "termweave/term.hpp"

namespace termweave {

/// Binding of metavariable names to terms.
using Substitution = std::map<std::string, TermPtr>;

/// Structural, nonlinear pattern match. Wildcards match anything and bind
/// nothing; a metavariable's first occurrence binds, later occurrences must
/// equal the binding. Returns nullopt on mismatch.
std::optional<Substitution> match(const TermPtr& pattern, const TermPtr& term);

/// Replace every metavariable by its binding. Throws RuleError on an unbound
/// metavariable or a wildcard in the pattern.
TermPtr instantiate(const TermPtr& pattern, const Substitution& subst);

/// Where and how often rules are applied.
struct Strategy {
    enum class Kind {
        OnceTopDown,  ///< first match in preorder, rewritten once, then stop
        TopDownAll,   ///< single preorder pass, each node rewritten at most once
        Innermost     ///< leftmost-innermost to fixpoint, bounded by max_steps
    };

    Kind kind = Kind::TopDownAll;
    std::size_t max_steps = 10000;  ///< Innermost budget; must be >= 1

    static Strategy once_top_down() { return {Kind::OnceTopDown, 10000}; }
    static Strategy top_down_all() { return {Kind::TopDownAll, 10000}; }
    static Strategy innermost(std::size_t max_steps = 10000) {
        return {Kind::Innermost, max_steps};
    }
};

struct TraceEntry {
    std::string rule_name;
    std::vector<std::size_t> path;  // child indices from the root at application time
};

struct RewriteResult {
    TermPtr term;
    std::vector<TraceEntry> trace;
};

/// Apply rules under the given strategy. At every visited node rules are
/// tried in sequence order. Innermost throws StepLimitError when a redex
/// remains after max_steps applications.
RewriteResult rewrite(const TermPtr& t, std::span<const RewriteRule> rules,
                      const Strategy& strategy);

/// Apply one rule at the node addressed by `path` (it must match there).
/// Replaying a rewrite trace with this reproduces the rewrite result.
TermPtr apply_rule_at(const TermPtr& t, const RewriteRule& rule,
                      std::span<const std::size_t> path);

}  // namespace termweave
