#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace termweave::testsupport {

namespace {

std::size_t pick(std::mt19937& rng, std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

bool chance(std::mt19937& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

TermPtr random_leaf(std::mt19937& rng, const TermGenOptions& opts) {
    if (opts.value_leaves && chance(rng, 0.3)) {
        if (chance(rng, 0.5)) return Term::integer(static_cast<long long>(pick(rng, 100)) - 50);
        return Term::string(std::string(1, static_cast<char>('p' + pick(rng, 8))));
    }
    return Term::app(opts.labels[pick(rng, opts.labels.size())], {});
}

TermPtr random_term_at(std::mt19937& rng, const TermGenOptions& opts, std::size_t depth) {
    if (depth >= opts.max_depth || chance(rng, 0.25)) return random_leaf(rng, opts);
    std::size_t arity = pick(rng, opts.max_branch + 1);
    std::vector<TermPtr> children;
    children.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i)
        children.push_back(random_term_at(rng, opts, depth + 1));
    if (chance(rng, 0.12)) return Term::list(std::move(children));
    return Term::app(opts.labels[pick(rng, opts.labels.size())], std::move(children));
}

}  // namespace

TermPtr random_term(std::mt19937& rng, const TermGenOptions& opts) {
    return random_term_at(rng, opts, 0);
}

TermPtr random_term_exact(std::mt19937& rng, std::size_t nodes, const TermGenOptions& opts) {
    if (nodes == 0) throw std::invalid_argument("nodes must be >= 1");
    const std::string& label = opts.labels[pick(rng, opts.labels.size())];
    if (nodes == 1) return Term::app(label, {});
    std::size_t budget = nodes - 1;
    std::size_t arity = 1 + pick(rng, std::min(opts.max_branch, budget));
    // split the remaining node budget into `arity` positive parts
    std::vector<std::size_t> parts(arity, 1);
    for (std::size_t extra = budget - arity; extra > 0; --extra) ++parts[pick(rng, arity)];
    std::vector<TermPtr> children;
    children.reserve(arity);
    for (std::size_t part : parts) children.push_back(random_term_exact(rng, part, opts));
    return Term::app(label, std::move(children));
}

namespace {

void collect_paths(const TermPtr& t, std::vector<std::size_t>& prefix,
                   std::vector<std::vector<std::size_t>>& out) {
    out.push_back(prefix);
    for (std::size_t i = 0; i < t->children().size(); ++i) {
        prefix.push_back(i);
        collect_paths(t->children()[i], prefix, out);
        prefix.pop_back();
    }
}

TermPtr rebuild_at(const TermPtr& t, const std::vector<std::size_t>& path, std::size_t pos,
                   const std::function<TermPtr(const TermPtr&)>& edit) {
    if (pos == path.size()) return edit(t);
    std::vector<TermPtr> children = t->children();
    children[path[pos]] = rebuild_at(children[path[pos]], path, pos + 1, edit);
    return with_children(t, std::move(children));
}

}  // namespace

TermPtr mutate(std::mt19937& rng, const TermPtr& t, const TermGenOptions& opts) {
    TermPtr result = t;
    std::size_t edits = 1 + pick(rng, 3);
    for (std::size_t e = 0; e < edits; ++e) {
        std::vector<std::vector<std::size_t>> paths;
        std::vector<std::size_t> prefix;
        collect_paths(result, prefix, paths);
        const auto& path = paths[pick(rng, paths.size())];
        TermGenOptions small = opts;
        small.max_depth = 2;
        result = rebuild_at(result, path, 0, [&](const TermPtr& node) -> TermPtr {
            std::size_t op = pick(rng, 4);
            if (op == 0 || !node->is_application()) return random_term(rng, small);
            std::vector<TermPtr> children = node->children();
            if (op == 1 && !children.empty()) {  // drop a child
                children.erase(children.begin() + static_cast<long>(pick(rng, children.size())));
            } else if (op == 2) {  // insert a child
                children.insert(children.begin() + static_cast<long>(pick(rng, children.size() + 1)),
                                random_term(rng, small));
            } else if (!node->is_list()) {  // relabel
                return Term::app(opts.labels[pick(rng, opts.labels.size())], std::move(children));
            }
            return with_children(node, std::move(children));
        });
    }
    return result;
}

namespace {

/// Replace random subtrees with metavariables drawn from a small pool so
/// that repeated (nonlinear) occurrences happen regularly.
TermPtr sprinkle_metavars(std::mt19937& rng, const TermPtr& t) {
    if (chance(rng, 0.2)) return Term::metavar("T_" + std::to_string(1 + pick(rng, 4)));
    if (t->children().empty()) return t;
    std::vector<TermPtr> children;
    children.reserve(t->children().size());
    for (const auto& child : t->children()) children.push_back(sprinkle_metavars(rng, child));
    return with_children(t, std::move(children));
}

}  // namespace

std::pair<TermPtr, Substitution> random_pattern(std::mt19937& rng, const TermGenOptions& opts) {
    TermPtr pattern = sprinkle_metavars(rng, random_term(rng, opts));
    Substitution subst;
    TermGenOptions small = opts;
    small.max_depth = 3;
    for (const auto& name : metavar_names(pattern)) subst[name] = random_term(rng, small);
    return {std::move(pattern), std::move(subst)};
}

std::vector<TermPtr> enumerate_trees(std::size_t max_nodes,
                                     const std::vector<std::string>& labels) {
    // by_size[n] holds every tree with exactly n+1 nodes
    std::vector<std::vector<TermPtr>> by_size(max_nodes);
    std::vector<TermPtr> all;

    // child sequences with a total of exactly `total` nodes
    std::function<std::vector<std::vector<TermPtr>>(std::size_t)> sequences =
        [&](std::size_t total) {
            std::vector<std::vector<TermPtr>> out;
            if (total == 0) {
                out.push_back({});
                return out;
            }
            for (std::size_t first = 1; first <= total; ++first) {
                for (const auto& head : by_size[first - 1]) {
                    for (auto& rest : sequences(total - first)) {
                        std::vector<TermPtr> seq;
                        seq.push_back(head);
                        seq.insert(seq.end(), rest.begin(), rest.end());
                        out.push_back(std::move(seq));
                    }
                }
            }
            return out;
        };

    for (std::size_t n = 1; n <= max_nodes; ++n) {
        for (const auto& children : sequences(n - 1)) {
            for (const auto& label : labels) {
                TermPtr t = Term::app(label, children);
                by_size[n - 1].push_back(t);
                all.push_back(std::move(t));
            }
        }
    }
    return all;
}

namespace {

bool oracle_comparable(const TermPtr& a, const TermPtr& b, const CompSpec& spec) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case Term::Kind::Application: return spec.comparable(a->label(), b->label());
        case Term::Kind::String: return a->string_value() == b->string_value();
        case Term::Kind::Int: return a->int_value() == b->int_value();
        default: return false;
    }
}

std::size_t oracle_best(const TermPtr& u, const TermPtr& v, const CompSpec& spec);

/// Enumerate every strictly increasing pair set between the child lists and
/// score it; pairs of incomparable subtrees contribute zero, which never
/// beats leaving them unpaired.
std::size_t best_alignment(const std::vector<TermPtr>& cu, const std::vector<TermPtr>& cv,
                           std::size_t i0, std::size_t j0, const CompSpec& spec) {
    std::size_t best = 0;
    for (std::size_t i = i0; i < cu.size(); ++i) {
        for (std::size_t j = j0; j < cv.size(); ++j) {
            std::size_t score =
                oracle_best(cu[i], cv[j], spec) + best_alignment(cu, cv, i + 1, j + 1, spec);
            best = std::max(best, score);
        }
    }
    return best;
}

std::size_t oracle_best(const TermPtr& u, const TermPtr& v, const CompSpec& spec) {
    if (!oracle_comparable(u, v, spec)) return 0;
    return 1 + best_alignment(u->children(), v->children(), 0, 0, spec);
}

}  // namespace

std::size_t oracle_matched(const TermPtr& t1, const TermPtr& t2, const CompSpec& spec) {
    return oracle_best(t1, t2, spec);
}

namespace {

bool alpha_walk(const TermPtr& a, const TermPtr& b, std::map<std::string, std::string>& fwd,
                std::map<std::string, std::string>& rev) {
    if (a->kind() != b->kind()) return false;
    if (a->kind() == Term::Kind::Metavar) {
        auto fit = fwd.emplace(a->metavar_name(), b->metavar_name()).first;
        auto rit = rev.emplace(b->metavar_name(), a->metavar_name()).first;
        return fit->second == b->metavar_name() && rit->second == a->metavar_name();
    }
    switch (a->kind()) {
        case Term::Kind::Application:
            if (a->label() != b->label()) return false;
            break;
        case Term::Kind::String:
            if (a->string_value() != b->string_value()) return false;
            break;
        case Term::Kind::Int:
            if (a->int_value() != b->int_value()) return false;
            break;
        default: break;
    }
    if (a->children().size() != b->children().size()) return false;
    for (std::size_t i = 0; i < a->children().size(); ++i)
        if (!alpha_walk(a->children()[i], b->children()[i], fwd, rev)) return false;
    return true;
}

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
    std::map<std::string, std::string> fwd, rev;
    return alpha_walk(a, b, fwd, rev);
}

bool alpha_equal_rules(const RewriteRule& a, const RewriteRule& b) {
    std::map<std::string, std::string> fwd, rev;
    return alpha_walk(a.lhs, b.lhs, fwd, rev) && alpha_walk(a.rhs, b.rhs, fwd, rev);
}

bool equal_modulo_wildcards(const TermPtr& a, const TermPtr& b) {
    if (a->kind() == Term::Kind::Wildcard || b->kind() == Term::Kind::Wildcard) return true;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case Term::Kind::Application:
            if (a->label() != b->label()) return false;
            break;
        case Term::Kind::String:
            if (a->string_value() != b->string_value()) return false;
            break;
        case Term::Kind::Int:
            if (a->int_value() != b->int_value()) return false;
            break;
        case Term::Kind::Metavar:
            if (a->metavar_name() != b->metavar_name()) return false;
            break;
        default: break;
    }
    if (a->children().size() != b->children().size()) return false;
    for (std::size_t i = 0; i < a->children().size(); ++i)
        if (!equal_modulo_wildcards(a->children()[i], b->children()[i])) return false;
    return true;
}

TermPtr subst_metavars(const TermPtr& pattern, const Substitution& subst) {
    if (pattern->kind() == Term::Kind::Metavar) {
        auto it = subst.find(pattern->metavar_name());
        if (it == subst.end()) throw std::logic_error("unbound metavariable in test helper");
        return it->second;
    }
    if (pattern->children().empty()) return pattern;
    std::vector<TermPtr> children;
    children.reserve(pattern->children().size());
    for (const auto& child : pattern->children())
        children.push_back(subst_metavars(child, subst));
    return with_children(pattern, std::move(children));
}

TempDir::TempDir() {
    auto base = std::filesystem::temp_directory_path();
    std::random_device rd;
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto candidate = base / ("termweave-test-" + std::to_string(rd()));
        if (std::filesystem::create_directory(candidate)) {
            path_ = candidate;
            return;
        }
    }
    throw std::runtime_error("could not create scratch directory");
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::string TempDir::file(const std::string& name, const std::string& content) const {
    auto full = path_ / name;
    std::ofstream out(full, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("failed writing " + full.string());
    return full.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace termweave::testsupport
