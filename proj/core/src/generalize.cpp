#include "termweave/generalize.hpp"

namespace termweave {

const std::string& MetavarTable::name_for(const TermPtr& normalized_key) {
    std::string key = print_term(normalized_key);
    auto it = names_.find(key);
    if (it == names_.end())
        it = names_.emplace(std::move(key), "T_" + std::to_string(next_++)).first;
    return it->second;
}

namespace {

/// One (R, S) pass. `under_root` is true for proper descendants of a node
/// whose label is in R; replacement stops the descent (maximal subtrees).
TermPtr apply_step(const TermPtr& t, const GeneralizationStep& step, const LocationLabels& loc,
                   MetavarTable& table, bool under_root) {
    if (!t->is_application()) return t;
    if (under_root && step.replace.count(t->label()))
        return Term::metavar(table.name_for(normalize_locations(t, loc)));
    const bool now_under = under_root || step.roots.count(t->label()) != 0;
    if (t->children().empty()) return t;
    std::vector<TermPtr> children;
    children.reserve(t->children().size());
    bool changed = false;
    for (const auto& child : t->children()) {
        TermPtr replaced = apply_step(child, step, loc, table, now_under);
        changed = changed || replaced.get() != child.get();
        children.push_back(std::move(replaced));
    }
    return changed ? with_children(t, std::move(children)) : t;
}

/// Final pass: remaining location subterms become `_` on the left side and
/// `gen_info()` on the right.
TermPtr replace_locations(const TermPtr& t, const LocationLabels& loc, Side side) {
    if (!t->is_application()) return t;
    if (loc.contains(t->label())) return side == Side::Left ? Term::wildcard() : gen_info();
    if (t->children().empty()) return t;
    std::vector<TermPtr> children;
    children.reserve(t->children().size());
    bool changed = false;
    for (const auto& child : t->children()) {
        TermPtr replaced = replace_locations(child, loc, side);
        changed = changed || replaced.get() != child.get();
        children.push_back(std::move(replaced));
    }
    return changed ? with_children(t, std::move(children)) : t;
}

}  // namespace

TermPtr generalize_term(const TermPtr& t, const GeneralizationSpec& spec,
                        const LocationLabels& loc, MetavarTable& table, Side side) {
    TermPtr pattern = t;
    for (const auto& step : spec.steps) pattern = apply_step(pattern, step, loc, table, false);
    return replace_locations(pattern, loc, side);
}

std::pair<TermPtr, TermPtr> generalize_pair(const TermPtr& left, const TermPtr& right,
                                            const GeneralizationSpec& spec,
                                            const LocationLabels& loc) {
    MetavarTable table;
    TermPtr lhs = generalize_term(left, spec, loc, table, Side::Left);
    TermPtr rhs = generalize_term(right, spec, loc, table, Side::Right);
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace termweave
