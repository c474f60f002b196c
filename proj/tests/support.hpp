#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "termweave/diff.hpp"
#include "termweave/engine.hpp"
#include "termweave/rulegen.hpp"
#include "termweave/term.hpp"

namespace termweave::testsupport {

struct TermGenOptions {
    std::size_t max_depth = 5;
    std::size_t max_branch = 4;
    std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f"};
    bool value_leaves = true;  // sprinkle string/int leaves among the applications
};

/// Random ground term bounded by depth and branching.
TermPtr random_term(std::mt19937& rng, const TermGenOptions& opts = {});

/// Random application-only tree with exactly `nodes` nodes.
TermPtr random_term_exact(std::mt19937& rng, std::size_t nodes, const TermGenOptions& opts = {});

/// Randomly edited copy: a few subtree replacements, child insertions,
/// deletions or relabelings.
TermPtr mutate(std::mt19937& rng, const TermPtr& t, const TermGenOptions& opts = {});

/// Wildcard-free random pattern plus a ground substitution covering all of
/// its metavariables.
std::pair<TermPtr, Substitution> random_pattern(std::mt19937& rng,
                                                const TermGenOptions& opts = {});

/// All ordered application trees with up to `max_nodes` nodes over the label
/// alphabet.
std::vector<TermPtr> enumerate_trees(std::size_t max_nodes,
                                     const std::vector<std::string>& labels);

/// Exhaustive maximum over all valid top-down order-preserving matchings,
/// enumerated pair set by pair set. Independent of the diff implementation.
std::size_t oracle_matched(const TermPtr& t1, const TermPtr& t2, const CompSpec& spec);

/// Pattern equality under a consistent metavariable bijection.
bool alpha_equal(const TermPtr& a, const TermPtr& b);
/// Same, with the bijection shared across both sides of the rules.
bool alpha_equal_rules(const RewriteRule& a, const RewriteRule& b);

/// Structural equality where a wildcard on either side matches anything.
bool equal_modulo_wildcards(const TermPtr& a, const TermPtr& b);

/// Replace metavariables by their bindings, leaving wildcards in place.
TermPtr subst_metavars(const TermPtr& pattern, const Substitution& subst);

/// Self-deleting scratch directory.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    /// Write `content` to `name` inside the directory, returning the path.
    std::string file(const std::string& name, const std::string& content) const;

private:
    std::filesystem::path path_;
};

std::string read_file(const std::string& path);

}  // namespace termweave::testsupport
