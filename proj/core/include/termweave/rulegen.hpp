#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termweave/context.hpp"
#include "termweave/generalize.hpp"
#include "termweave/term.hpp"
#include "termweave/weave.hpp"

namespace termweave {

/// A named rewrite rule `name : lhs -> rhs`. Every metavariable on the right
/// also occurs on the left; wildcards appear on the left only.
struct RewriteRule {
    std::string name;
    TermPtr lhs;
    TermPtr rhs;
};

/// Constructor inventory: unique (name, arity) pairs observed in terms and
/// patterns, always including the builtin (gen_info, 0). List nodes map to a
/// builtin list sort and are excluded (their elements are still scanned).
class Signature {
public:
    Signature();

    /// Throws SignatureError when the name was already seen with a
    /// different arity.
    void add(const std::string& name, std::size_t arity);
    /// Collect constructors from every Application node of the term;
    /// metavariables and wildcards are skipped.
    void scan(const TermPtr& t);

    const std::map<std::string, std::size_t>& constructors() const noexcept {
        return constructors_;
    }

private:
    std::map<std::string, std::size_t> constructors_;
};

Signature infer_signature(std::span<const TermPtr> terms);

/// One rule per rule site, named R1, R2, ... in site order, each generalized
/// with a fresh metavariable table. Throws ContextError for uncontextualized
/// holes and RuleError when a right-hand metavariable is absent on the left.
std::vector<RewriteRule> build_rules(const WeavePoint& root, const GeneralizationSpec& spec,
                                     const ContextSpec& ctx, const LocationLabels& loc);

/// Render rules and signature as a Stratego .str module: a `module` header,
/// a `signature`/`constructors` block over the single sort Term, and a
/// `rules` block with one `R<k> : lhs -> rhs` line per rule in canonical
/// pattern syntax. LF line endings; deterministic for identical inputs.
std::string emit_str(std::span<const RewriteRule> rules, const Signature& sig);

/// Read the rules back from emitted .str text (the signature block is
/// ignored). Validates rule invariants.
std::vector<RewriteRule> parse_str_rules(std::string_view text);

}  // namespace termweave
