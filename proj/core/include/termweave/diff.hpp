#pragma once

#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "termweave/term.hpp"

namespace termweave {

/// Edit operation attached to each child slot of an edit tree.
/// Additions are represented implicitly: a delete on one side paired with a
/// hole on the other (see weave).
enum class EditOp { Keep, Delete };

/// Declares sets of labels that are interchangeable for matching purposes,
/// e.g. binary operators of equal precedence. Labels not listed compare
/// only to themselves.
class CompSpec {
public:
    CompSpec() = default;
    /// Throws std::invalid_argument if the classes are not pairwise disjoint.
    explicit CompSpec(std::vector<std::set<std::string>> classes);

    const std::vector<std::set<std::string>>& classes() const noexcept { return classes_; }

    bool comparable(const std::string& a, const std::string& b) const;

private:
    std::vector<std::set<std::string>> classes_;
    std::unordered_map<std::string, std::size_t> class_of_;
};

/// True iff a == b or both labels appear in one equivalence class.
bool comparable(const std::string& a, const std::string& b, const CompSpec& spec);

/// A term annotated with edit operations: ENodes are matched nodes whose
/// children carry Keep/Delete tags, ELeaves are unmatched original subtrees
/// below which no comparison was attempted.
///
/// Invariants: a Keep child is always an ENode, a Delete child is always an
/// ELeaf, and erasing the tags reconstructs the original term exactly.
class EditTree {
public:
    using TaggedChild = std::pair<EditOp, EditTree>;

    static EditTree node(TermPtr original, std::vector<TaggedChild> children);
    static EditTree leaf(TermPtr original);

    bool is_node() const noexcept { return is_node_; }
    /// The original subtree rooted here.
    const TermPtr& term() const noexcept { return term_; }
    const std::vector<TaggedChild>& children() const noexcept { return children_; }

private:
    EditTree(bool is_node, TermPtr term, std::vector<TaggedChild> children);

    TermPtr term_;
    bool is_node_;
    std::vector<TaggedChild> children_;
};

/// Rebuild the term an edit tree annotates (tag erasure).
TermPtr edit_tree_term(const EditTree& tree);

/// Number of Keep-tagged nodes including the root when it is an ENode.
std::size_t keep_count(const EditTree& tree);

struct DiffResult {
    EditTree pre;
    EditTree post;
    /// Count of Keep-paired node pairs.
    std::size_t matched = 0;
    /// nodes(t1) + nodes(t2) - 2 * matched.
    std::size_t distance = 0;

    /// Keep when the roots matched, Delete when both sides are whole-tree
    /// ELeaves.
    EditOp root_op() const noexcept { return pre.is_node() ? EditOp::Keep : EditOp::Delete; }
};

/// Top-down structural difference. Maximizes the number of matched nodes
/// subject to: matched nodes have comparable labels and matched parents, and
/// matches among siblings preserve left-to-right order. Ties between optimal
/// alignments are broken deterministically (diagonal, then advance in t1).
DiffResult diff(const TermPtr& t1, const TermPtr& t2, const CompSpec& spec = {});

}  // namespace termweave
