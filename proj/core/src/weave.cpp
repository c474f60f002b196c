#include "termweave/weave.hpp"

#include <stdexcept>

#include "termweave/errors.hpp"

namespace termweave {

WeavePoint::WeavePoint(Kind kind, WeaveTreePtr a, WeaveTreePtr b)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)) {}

WeavePoint WeavePoint::match(WeaveTreePtr subtree) {
    return WeavePoint(Kind::Match, std::move(subtree), nullptr);
}

WeavePoint WeavePoint::mismatch(WeaveTreePtr left, WeaveTreePtr right) {
    return WeavePoint(Kind::Mismatch, std::move(left), std::move(right));
}

WeavePoint WeavePoint::left_hole(WeaveTreePtr payload) {
    return WeavePoint(Kind::LeftHole, std::move(payload), nullptr);
}

WeavePoint WeavePoint::right_hole(WeaveTreePtr payload) {
    return WeavePoint(Kind::RightHole, std::move(payload), nullptr);
}

const WeaveTreePtr& WeavePoint::subtree() const {
    if (kind_ == Kind::Mismatch) throw std::logic_error("subtree() on a Mismatch point");
    return a_;
}

const WeaveTreePtr& WeavePoint::left() const {
    if (kind_ != Kind::Mismatch) throw std::logic_error("left() on a non-Mismatch point");
    return a_;
}

const WeaveTreePtr& WeavePoint::right() const {
    if (kind_ != Kind::Mismatch) throw std::logic_error("right() on a non-Mismatch point");
    return b_;
}

WeaveTree::WeaveTree(bool is_node, TermPtr pre, TermPtr post, std::vector<WeavePoint> points)
    : is_node_(is_node), pre_(std::move(pre)), post_(std::move(post)), points_(std::move(points)) {}

WeaveTreePtr WeaveTree::node(TermPtr pre, TermPtr post, std::vector<WeavePoint> points) {
    return WeaveTreePtr(new WeaveTree(true, std::move(pre), std::move(post), std::move(points)));
}

WeaveTreePtr WeaveTree::leaf(TermPtr term) {
    TermPtr copy = term;
    return WeaveTreePtr(new WeaveTree(false, std::move(term), std::move(copy), {}));
}

std::vector<WeavePoint> weave_points(std::span<const EditTree::TaggedChild> pre,
                                     std::span<const EditTree::TaggedChild> post) {
    std::vector<WeavePoint> out;
    std::size_t i = 0, j = 0;
    while (true) {
        const bool l_empty = i == pre.size();
        const bool r_empty = j == post.size();
        const bool l_keep = !l_empty && pre[i].first == EditOp::Keep;
        const bool r_keep = !r_empty && post[j].first == EditOp::Keep;
        if (l_empty && r_empty) break;                                    // row 1
        if (l_keep && r_keep) {                                           // row 2
            out.push_back(WeavePoint::match(weave_matched(pre[i].second, post[j].second)));
            ++i, ++j;
        } else if (!l_empty && !l_keep && !r_empty && !r_keep) {          // row 3
            out.push_back(WeavePoint::mismatch(WeaveTree::leaf(pre[i].second.term()),
                                               WeaveTree::leaf(post[j].second.term())));
            ++i, ++j;
        } else if (!l_empty && !l_keep) {                                 // rows 4 and 6
            out.push_back(WeavePoint::right_hole(WeaveTree::leaf(pre[i].second.term())));
            ++i;
        } else if (!r_empty && !r_keep) {                                 // rows 5 and 7
            out.push_back(WeavePoint::left_hole(WeaveTree::leaf(post[j].second.term())));
            ++j;
        } else {                                                          // rows 8 and 9
            throw WeaveError("weave integrity violation: Keep without partner");
        }
    }
    return out;
}

WeaveTreePtr weave_matched(const EditTree& pre, const EditTree& post) {
    if (!pre.is_node() || !post.is_node())
        throw WeaveError("weave integrity violation: matched pair must be ENodes");
    return WeaveTree::node(pre.term(), post.term(), weave_points(pre.children(), post.children()));
}

WeavePoint weave(const DiffResult& d) {
    if (d.pre.is_node() && d.post.is_node())
        return WeavePoint::match(weave_matched(d.pre, d.post));
    if (!d.pre.is_node() && !d.post.is_node())
        return WeavePoint::mismatch(WeaveTree::leaf(d.pre.term()),
                                    WeaveTree::leaf(d.post.term()));
    throw WeaveError("weave integrity violation: edit tree roots disagree");
}

TermPtr project(const WeaveTreePtr& w, Side side) {
    if (!w->is_node()) return w->term();
    std::vector<TermPtr> children;
    children.reserve(w->points().size());
    for (const auto& point : w->points()) {
        if (auto c = project_point(point, side)) children.push_back(std::move(*c));
    }
    const TermPtr& head = side == Side::Left ? w->pre_term() : w->post_term();
    return with_children(head, std::move(children));
}

std::optional<TermPtr> project_point(const WeavePoint& point, Side side) {
    switch (point.kind()) {
        case WeavePoint::Kind::Match:
            return project(point.subtree(), side);
        case WeavePoint::Kind::Mismatch:
            return project(side == Side::Left ? point.left() : point.right(), side);
        case WeavePoint::Kind::LeftHole:
            // Present only on the right.
            if (side == Side::Right) return point.subtree()->term();
            return std::nullopt;
        case WeavePoint::Kind::RightHole:
            if (side == Side::Left) return point.subtree()->term();
            return std::nullopt;
    }
    return std::nullopt;
}

TermPtr project_root(const WeavePoint& root, Side side) {
    auto t = project_point(root, side);
    if (!t) throw WeaveError("weave root is a hole; cannot project");
    return *t;
}

namespace {

void collect_change_points(const WeavePoint& point, std::vector<std::size_t>& path,
                           std::vector<ChangePoint>& out) {
    if (!point.is_match()) {
        out.push_back(ChangePoint{path, point.kind()});
        return;
    }
    const WeaveTreePtr& w = point.subtree();
    if (!w->is_node()) return;
    for (std::size_t i = 0; i < w->points().size(); ++i) {
        path.push_back(i);
        collect_change_points(w->points()[i], path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<ChangePoint> change_points(const WeavePoint& root) {
    std::vector<ChangePoint> out;
    std::vector<std::size_t> path;
    collect_change_points(root, path, out);
    return out;
}

std::size_t match_count(const WeavePoint& root) {
    if (!root.is_match()) return 0;
    std::size_t n = 1;
    for (const auto& point : root.subtree()->points()) n += match_count(point);
    return n;
}

}  // namespace termweave
