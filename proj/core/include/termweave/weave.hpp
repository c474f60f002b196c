#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "termweave/diff.hpp"
#include "termweave/term.hpp"

namespace termweave {

class WeaveTree;
using WeaveTreePtr = std::shared_ptr<const WeaveTree>;

/// One position in the woven change tree. Four interpretations:
///   Match     — the node exists on both sides (subtree is a WNode),
///   Mismatch  — both sides changed (left/right are WLeaves),
///   LeftHole  — present only on the right/after side (payload is the
///               post-side term absent on the left),
///   RightHole — present only on the left/before side.
class WeavePoint {
public:
    enum class Kind { Match, Mismatch, LeftHole, RightHole };

    static WeavePoint match(WeaveTreePtr subtree);
    static WeavePoint mismatch(WeaveTreePtr left, WeaveTreePtr right);
    static WeavePoint left_hole(WeaveTreePtr payload);
    static WeavePoint right_hole(WeaveTreePtr payload);

    Kind kind() const noexcept { return kind_; }
    bool is_match() const noexcept { return kind_ == Kind::Match; }

    /// Match and hole payloads.
    const WeaveTreePtr& subtree() const;
    /// Mismatch sides.
    const WeaveTreePtr& left() const;
    const WeaveTreePtr& right() const;

private:
    WeavePoint(Kind kind, WeaveTreePtr a, WeaveTreePtr b);

    Kind kind_;
    WeaveTreePtr a_, b_;
};

/// WNode: a matched node pair with woven child points. WLeaf: an unmodified
/// original subtree attached below a mismatch or hole.
class WeaveTree {
public:
    /// A matched pair; both original subtrees are retained so that each side
    /// projects back exactly even when comparable-but-unequal labels matched.
    static WeaveTreePtr node(TermPtr pre, TermPtr post, std::vector<WeavePoint> points);
    static WeaveTreePtr leaf(TermPtr term);

    bool is_node() const noexcept { return is_node_; }
    const TermPtr& pre_term() const noexcept { return pre_; }
    const TermPtr& post_term() const noexcept { return post_; }
    /// WLeaf payload.
    const TermPtr& term() const noexcept { return pre_; }
    const std::vector<WeavePoint>& points() const noexcept { return points_; }

private:
    WeaveTree(bool is_node, TermPtr pre, TermPtr post, std::vector<WeavePoint> points);

    bool is_node_;
    TermPtr pre_, post_;
    std::vector<WeavePoint> points_;
};

/// Weave one paired child list row by row (first matching row wins):
///   1. both empty            -> done
///   2. Keep    | Keep        -> Match
///   3. Delete  | Delete      -> Mismatch
///   4. Delete  | (empty)     -> RightHole
///   5. (empty) | Delete      -> LeftHole
///   6. Delete  | any         -> RightHole
///   7. any     | Delete      -> LeftHole
///   8. (empty) | Keep        -> error
///   9. Keep    | (empty)     -> error
/// Rows 8/9 throw WeaveError ("Keep without partner"); they cannot arise
/// from a valid DiffResult but are checked.
std::vector<WeavePoint> weave_points(std::span<const EditTree::TaggedChild> pre,
                                     std::span<const EditTree::TaggedChild> post);

/// Weave a Keep-paired ENode pair into a WNode.
WeaveTreePtr weave_matched(const EditTree& pre, const EditTree& post);

/// Weave a whole DiffResult. Matched roots yield a Match point over the root
/// WNode; unmatched roots yield a single Mismatch point.
WeavePoint weave(const DiffResult& d);

/// Reconstruct one side's original term from a woven subtree.
TermPtr project(const WeaveTreePtr& w, Side side);

/// Contribution of a single point to one side's child list; empty for a hole
/// on that side.
std::optional<TermPtr> project_point(const WeavePoint& point, Side side);

/// Projection of a root weave point. The root of a weave is always a Match
/// or Mismatch, both of which contribute on both sides.
TermPtr project_root(const WeavePoint& root, Side side);

struct ChangePoint {
    std::vector<std::size_t> path;  // WeavePoint indices from the root WNode
    WeavePoint::Kind kind;
};

/// Preorder enumeration of all non-Match points with their paths.
std::vector<ChangePoint> change_points(const WeavePoint& root);

/// Number of Match points in the weave (equals DiffResult.matched).
std::size_t match_count(const WeavePoint& root);

}  // namespace termweave
