#include "termweave/engine.hpp"

#include <stdexcept>

#include "termweave/errors.hpp"

namespace termweave {

namespace {

bool match_into(const TermPtr& pattern, const TermPtr& term, Substitution& subst) {
    switch (pattern->kind()) {
        case Term::Kind::Wildcard:
            return true;
        case Term::Kind::Metavar: {
            auto [it, inserted] = subst.emplace(pattern->metavar_name(), term);
            return inserted || terms_equal(it->second, term);
        }
        case Term::Kind::Application: {
            if (!term->is_application() || pattern->label() != term->label() ||
                pattern->children().size() != term->children().size())
                return false;
            for (std::size_t i = 0; i < pattern->children().size(); ++i)
                if (!match_into(pattern->children()[i], term->children()[i], subst)) return false;
            return true;
        }
        case Term::Kind::String:
            return term->kind() == Term::Kind::String &&
                   pattern->string_value() == term->string_value();
        case Term::Kind::Int:
            return term->kind() == Term::Kind::Int && pattern->int_value() == term->int_value();
    }
    return false;
}

}  // namespace

std::optional<Substitution> match(const TermPtr& pattern, const TermPtr& term) {
    Substitution subst;
    if (!match_into(pattern, term, subst)) return std::nullopt;
    return subst;
}

TermPtr instantiate(const TermPtr& pattern, const Substitution& subst) {
    switch (pattern->kind()) {
        case Term::Kind::Wildcard:
            throw RuleError("cannot instantiate a pattern containing a wildcard");
        case Term::Kind::Metavar: {
            auto it = subst.find(pattern->metavar_name());
            if (it == subst.end())
                throw RuleError("unbound metavariable " + pattern->metavar_name());
            return it->second;
        }
        case Term::Kind::Application: {
            if (pattern->children().empty()) return pattern;
            std::vector<TermPtr> children;
            children.reserve(pattern->children().size());
            for (const auto& child : pattern->children())
                children.push_back(instantiate(child, subst));
            return with_children(pattern, std::move(children));
        }
        case Term::Kind::String:
        case Term::Kind::Int:
            return pattern;
    }
    throw std::logic_error("unreachable");
}

namespace {

/// First rule in sequence order matching at this node.
std::optional<std::pair<const RewriteRule*, Substitution>> match_any(
    const TermPtr& t, std::span<const RewriteRule> rules) {
    for (const auto& rule : rules) {
        if (auto s = match(rule.lhs, t)) return std::make_pair(&rule, std::move(*s));
    }
    return std::nullopt;
}

TermPtr replace_child(const TermPtr& parent, std::size_t index, TermPtr replacement) {
    std::vector<TermPtr> children = parent->children();
    children[index] = std::move(replacement);
    return with_children(parent, std::move(children));
}

struct Rewriter {
    std::span<const RewriteRule> rules;
    std::vector<TraceEntry> trace;
    std::vector<std::size_t> path;

    /// Preorder; stops the whole walk after the first application.
    std::optional<TermPtr> once_top_down(const TermPtr& t) {
        if (auto hit = match_any(t, rules)) {
            trace.push_back({hit->first->name, path});
            return instantiate(hit->first->rhs, hit->second);
        }
        for (std::size_t i = 0; i < t->children().size(); ++i) {
            path.push_back(i);
            auto replaced = once_top_down(t->children()[i]);
            path.pop_back();
            if (replaced) return replace_child(t, i, std::move(*replaced));
        }
        return std::nullopt;
    }

    /// Single preorder pass; each visited node is rewritten at most once and
    /// the walk continues inside replacements.
    TermPtr top_down_all(const TermPtr& t) {
        TermPtr current = t;
        if (auto hit = match_any(current, rules)) {
            trace.push_back({hit->first->name, path});
            current = instantiate(hit->first->rhs, hit->second);
        }
        if (current->children().empty()) return current;
        std::vector<TermPtr> children;
        children.reserve(current->children().size());
        for (std::size_t i = 0; i < current->children().size(); ++i) {
            path.push_back(i);
            children.push_back(top_down_all(current->children()[i]));
            path.pop_back();
        }
        return with_children(current, std::move(children));
    }

    /// Leftmost-innermost redex: children before the node, left to right.
    std::optional<TermPtr> innermost_step(const TermPtr& t) {
        for (std::size_t i = 0; i < t->children().size(); ++i) {
            path.push_back(i);
            auto replaced = innermost_step(t->children()[i]);
            path.pop_back();
            if (replaced) return replace_child(t, i, std::move(*replaced));
        }
        if (auto hit = match_any(t, rules)) {
            trace.push_back({hit->first->name, path});
            return instantiate(hit->first->rhs, hit->second);
        }
        return std::nullopt;
    }
};

}  // namespace

RewriteResult rewrite(const TermPtr& t, std::span<const RewriteRule> rules,
                      const Strategy& strategy) {
    if (strategy.kind == Strategy::Kind::Innermost && strategy.max_steps == 0)
        throw std::invalid_argument("Innermost max_steps must be >= 1");
    Rewriter rewriter{rules, {}, {}};
    switch (strategy.kind) {
        case Strategy::Kind::OnceTopDown: {
            auto replaced = rewriter.once_top_down(t);
            return {replaced ? std::move(*replaced) : t, std::move(rewriter.trace)};
        }
        case Strategy::Kind::TopDownAll:
            return {rewriter.top_down_all(t), std::move(rewriter.trace)};
        case Strategy::Kind::Innermost: {
            TermPtr current = t;
            std::size_t steps = 0;
            while (true) {
                auto replaced = rewriter.innermost_step(current);
                if (!replaced) break;
                if (steps == strategy.max_steps) {
                    throw StepLimitError("innermost rewriting exceeded " +
                                         std::to_string(strategy.max_steps) + " steps");
                }
                ++steps;
                current = std::move(*replaced);
            }
            return {std::move(current), std::move(rewriter.trace)};
        }
    }
    throw std::logic_error("unreachable");
}

TermPtr apply_rule_at(const TermPtr& t, const RewriteRule& rule,
                      std::span<const std::size_t> path) {
    if (path.empty()) {
        auto s = match(rule.lhs, t);
        if (!s) throw RuleError("rule " + rule.name + " does not match at the given path");
        return instantiate(rule.rhs, *s);
    }
    std::size_t index = path.front();
    if (index >= t->children().size())
        throw RuleError("path step out of range while applying rule " + rule.name);
    return replace_child(t, index,
                         apply_rule_at(t->children()[index], rule, path.subspan(1)));
}

}  // namespace termweave
