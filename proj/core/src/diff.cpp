#include "termweave/diff.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace termweave {

CompSpec::CompSpec(std::vector<std::set<std::string>> classes) : classes_(std::move(classes)) {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (const auto& label : classes_[i]) {
            auto [it, inserted] = class_of_.emplace(label, i);
            if (!inserted && it->second != i)
                throw std::invalid_argument("label '" + label +
                                            "' appears in two comparability classes");
        }
    }
}

bool CompSpec::comparable(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    auto ia = class_of_.find(a);
    if (ia == class_of_.end()) return false;
    auto ib = class_of_.find(b);
    return ib != class_of_.end() && ia->second == ib->second;
}

bool comparable(const std::string& a, const std::string& b, const CompSpec& spec) {
    return spec.comparable(a, b);
}

EditTree::EditTree(bool is_node, TermPtr term, std::vector<TaggedChild> children)
    : term_(std::move(term)), is_node_(is_node), children_(std::move(children)) {}

EditTree EditTree::node(TermPtr original, std::vector<TaggedChild> children) {
    for (const auto& [op, child] : children) {
        if (op == EditOp::Keep && !child.is_node())
            throw std::invalid_argument("Keep-tagged edit child must be an ENode");
        if (op == EditOp::Delete && child.is_node())
            throw std::invalid_argument("Delete-tagged edit child must be an ELeaf");
    }
    return EditTree(true, std::move(original), std::move(children));
}

EditTree EditTree::leaf(TermPtr original) { return EditTree(false, std::move(original), {}); }

TermPtr edit_tree_term(const EditTree& tree) {
    if (!tree.is_node()) return tree.term();
    std::vector<TermPtr> children;
    children.reserve(tree.children().size());
    for (const auto& [op, child] : tree.children()) children.push_back(edit_tree_term(child));
    return with_children(tree.term(), std::move(children));
}

std::size_t keep_count(const EditTree& tree) {
    if (!tree.is_node()) return 0;
    std::size_t n = 1;  // the ENode itself is a matched node
    for (const auto& [op, child] : tree.children()) n += keep_count(child);
    return n;
}

namespace {

/// Yang-style matcher: memoized subtree similarity over the node pairs of
/// the two inputs plus an order-preserving alignment DP per pair.
class Matcher {
public:
    Matcher(const TermPtr& t1, const TermPtr& t2, const CompSpec& spec) : spec_(spec) {
        index_nodes(t1, index1_);
        index_nodes(t2, index2_);
        memo_.assign(index1_.size() * index2_.size(), -1);
    }

    int sim(const Term* u, const Term* v) {
        std::int64_t& entry = memo_[index1_.at(u) * index2_.size() + index2_.at(v)];
        if (entry >= 0) return static_cast<int>(entry);
        int value = 0;
        if (comparable_nodes(u, v)) value = 1 + align_score(u, v);
        entry = value;
        return value;
    }

    bool comparable_nodes(const Term* u, const Term* v) const {
        if (u->kind() != v->kind()) return false;
        switch (u->kind()) {
            case Term::Kind::Application: return spec_.comparable(u->label(), v->label());
            case Term::Kind::String: return u->string_value() == v->string_value();
            case Term::Kind::Int: return u->int_value() == v->int_value();
            case Term::Kind::Metavar: return u->metavar_name() == v->metavar_name();
            case Term::Kind::Wildcard: return true;
        }
        return false;
    }

    /// Matched child index pairs for a comparable node pair, in increasing
    /// order on both sides. Reconstructed left to right, preferring the
    /// diagonal, then advancing in t1: the leftmost optimal alignment.
    std::vector<std::pair<std::size_t, std::size_t>> align(const Term* u, const Term* v) {
        const auto& cu = u->children();
        const auto& cv = v->children();
        auto m = alignment_matrix(u, v);
        const std::size_t cols = cv.size() + 1;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::size_t i = 0, j = 0;
        while (i < cu.size() && j < cv.size()) {
            int s = sim(cu[i].get(), cv[j].get());
            if (s > 0 && m[i * cols + j] == m[(i + 1) * cols + (j + 1)] + s) {
                pairs.emplace_back(i, j);
                ++i;
                ++j;
                continue;
            }
            if (m[i * cols + j] == m[(i + 1) * cols + j]) {
                ++i;
                continue;
            }
            ++j;
        }
        return pairs;
    }

private:
    const CompSpec& spec_;
    std::unordered_map<const Term*, std::size_t> index1_, index2_;
    std::vector<std::int64_t> memo_;

    static void index_nodes(const TermPtr& t, std::unordered_map<const Term*, std::size_t>& out) {
        out.emplace(t.get(), out.size());
        for (const auto& child : t->children()) index_nodes(child, out);
    }

    /// m[i][j] = best order-preserving alignment score of the child
    /// suffixes cu[i..] and cv[j..].
    std::vector<int> alignment_matrix(const Term* u, const Term* v) {
        const auto& cu = u->children();
        const auto& cv = v->children();
        const std::size_t rows = cu.size() + 1, cols = cv.size() + 1;
        std::vector<int> m(rows * cols, 0);
        for (std::size_t i = cu.size(); i-- > 0;) {
            for (std::size_t j = cv.size(); j-- > 0;) {
                int best = std::max(m[(i + 1) * cols + j], m[i * cols + (j + 1)]);
                int s = sim(cu[i].get(), cv[j].get());
                if (s > 0) best = std::max(best, m[(i + 1) * cols + (j + 1)] + s);
                m[i * cols + j] = best;
            }
        }
        return m;
    }

    int align_score(const Term* u, const Term* v) {
        const auto m = alignment_matrix(u, v);
        return m.front();
    }
};

std::pair<EditTree, EditTree> build_matched(Matcher& matcher, const TermPtr& u, const TermPtr& v) {
    const auto& cu = u->children();
    const auto& cv = v->children();
    auto pairs = matcher.align(u.get(), v.get());

    std::vector<std::optional<std::size_t>> match_of_u(cu.size()), match_of_v(cv.size());
    std::vector<std::optional<std::pair<EditTree, EditTree>>> built(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [a, b] = pairs[k];
        match_of_u[a] = k;
        match_of_v[b] = k;
        built[k] = build_matched(matcher, cu[a], cv[b]);
    }

    std::vector<EditTree::TaggedChild> pre_children, post_children;
    pre_children.reserve(cu.size());
    post_children.reserve(cv.size());
    for (std::size_t i = 0; i < cu.size(); ++i) {
        if (match_of_u[i])
            pre_children.emplace_back(EditOp::Keep, built[*match_of_u[i]]->first);
        else
            pre_children.emplace_back(EditOp::Delete, EditTree::leaf(cu[i]));
    }
    for (std::size_t j = 0; j < cv.size(); ++j) {
        if (match_of_v[j])
            post_children.emplace_back(EditOp::Keep, built[*match_of_v[j]]->second);
        else
            post_children.emplace_back(EditOp::Delete, EditTree::leaf(cv[j]));
    }
    return {EditTree::node(u, std::move(pre_children)),
            EditTree::node(v, std::move(post_children))};
}

}  // namespace

DiffResult diff(const TermPtr& t1, const TermPtr& t2, const CompSpec& spec) {
    Matcher matcher(t1, t2, spec);
    const std::size_t total = node_count(t1) + node_count(t2);
    if (!matcher.comparable_nodes(t1.get(), t2.get()))
        return DiffResult{EditTree::leaf(t1), EditTree::leaf(t2), 0, total};

    auto matched = static_cast<std::size_t>(matcher.sim(t1.get(), t2.get()));
    auto [pre, post] = build_matched(matcher, t1, t2);
    return DiffResult{std::move(pre), std::move(post), matched, total - 2 * matched};
}

}  // namespace termweave
