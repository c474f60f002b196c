#include "termweave/rulegen.hpp"

#include <algorithm>
#include <sstream>

#include "termweave/errors.hpp"

namespace termweave {

Signature::Signature() { constructors_.emplace("gen_info", 0); }

void Signature::add(const std::string& name, std::size_t arity) {
    auto [it, inserted] = constructors_.emplace(name, arity);
    if (!inserted && it->second != arity)
        throw SignatureError("constructor '" + name + "' observed with arities " +
                             std::to_string(it->second) + " and " + std::to_string(arity));
}

void Signature::scan(const TermPtr& t) {
    if (t->is_application() && !t->is_list()) add(t->label(), t->children().size());
    for (const auto& child : t->children()) scan(child);
}

Signature infer_signature(std::span<const TermPtr> terms) {
    Signature sig;
    for (const auto& t : terms) sig.scan(t);
    return sig;
}

namespace {

bool has_wildcard(const TermPtr& t) {
    if (t->kind() == Term::Kind::Wildcard) return true;
    return std::any_of(t->children().begin(), t->children().end(), has_wildcard);
}

void validate_rule(const RewriteRule& rule) {
    if (has_wildcard(rule.rhs))
        throw RuleError("rule " + rule.name + ": wildcard on the right-hand side");
    auto left = metavar_names(rule.lhs);
    for (const auto& name : metavar_names(rule.rhs)) {
        if (!left.count(name))
            throw RuleError("rule " + rule.name + ": right-hand metavariable " + name +
                            " does not occur on the left-hand side");
    }
}

}  // namespace

std::vector<RewriteRule> build_rules(const WeavePoint& root, const GeneralizationSpec& spec,
                                     const ContextSpec& ctx, const LocationLabels& loc) {
    std::vector<RewriteRule> rules;
    std::size_t index = 1;
    for (const auto& site : select_rule_sites(root, ctx)) {
        auto [before, after] = site_terms(site);
        auto [lhs, rhs] = generalize_pair(before, after, spec, loc);
        RewriteRule rule{"R" + std::to_string(index++), std::move(lhs), std::move(rhs)};
        validate_rule(rule);
        rules.push_back(std::move(rule));
    }
    return rules;
}

std::string emit_str(std::span<const RewriteRule> rules, const Signature& sig) {
    std::ostringstream os;
    os << "module generated-rules\n";
    os << "\n";
    os << "signature\n";
    os << "  constructors\n";
    for (const auto& [name, arity] : sig.constructors()) {
        os << "    " << name << " : ";
        for (std::size_t i = 0; i + 1 < arity; ++i) os << "Term * ";
        if (arity > 0) os << "Term -> ";
        os << "Term\n";
    }
    os << "\n";
    os << "rules\n";
    os << "\n";
    for (const auto& rule : rules)
        os << "  " << rule.name << " : " << print_term(rule.lhs) << " -> "
           << print_term(rule.rhs) << "\n";
    return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

/// Position of the top-level " -> " separator, skipping bracketed regions
/// and string literals.
std::size_t find_arrow(std::string_view s, std::size_t line_no) {
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (in_string) {
            if (c == '\\')
                ++i;
            else if (c == '"')
                in_string = false;
            continue;
        }
        if (c == '"') in_string = true;
        else if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (depth == 0 && c == '-' && s[i + 1] == '>')
            return i;
    }
    throw ParseError("rule line has no top-level '->'", line_no, 1);
}

}  // namespace

std::vector<RewriteRule> parse_str_rules(std::string_view text) {
    std::vector<RewriteRule> rules;
    bool in_rules = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty()) continue;
        if (!in_rules) {
            if (line == "rules") in_rules = true;
            continue;
        }
        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("expected 'name : lhs -> rhs' in rules block", line_no, 1);
        std::string name(trim(line.substr(0, colon)));
        if (name.empty()) throw ParseError("rule name missing", line_no, 1);
        std::string_view body = line.substr(colon + 1);
        std::size_t arrow = find_arrow(body, line_no);
        RewriteRule rule{std::move(name), parse_pattern(body.substr(0, arrow)),
                         parse_pattern(body.substr(arrow + 2))};
        validate_rule(rule);
        rules.push_back(std::move(rule));
    }
    if (!in_rules) throw ParseError("no 'rules' block found", line_no, 1);
    return rules;
}

}  // namespace termweave
