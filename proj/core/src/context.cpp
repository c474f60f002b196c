#include "termweave/context.hpp"

#include <sstream>

#include "termweave/errors.hpp"

namespace termweave {

namespace {

bool contains_change(const WeaveTree& w) {
    if (!w.is_node()) return false;
    for (const auto& point : w.points()) {
        if (!point.is_match()) return true;
        if (contains_change(*point.subtree())) return true;
    }
    return false;
}

std::string format_path(const std::vector<std::size_t>& path) {
    if (path.empty()) return "<root>";
    std::ostringstream os;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) os << '.';
        os << path[i];
    }
    return os.str();
}

[[noreturn]] void fail_uncontextualized(const std::vector<std::size_t>& path,
                                        const std::vector<std::string>& ancestors) {
    std::ostringstream os;
    os << "hole at path " << format_path(path)
       << " is not dominated by any context label; candidate ancestor labels (innermost first): ";
    if (ancestors.empty()) {
        os << "<none>";
    } else {
        for (auto it = ancestors.rbegin(); it != ancestors.rend(); ++it) {
            if (it != ancestors.rbegin()) os << ", ";
            os << *it;
        }
    }
    throw ContextError(os.str());
}

struct SiteCollector {
    const ContextSpec& ctx;
    std::vector<RuleSite> sites;
    std::vector<std::size_t> path;
    std::vector<std::string> ancestors;  // application labels on the way down

    void visit(const WeavePoint& point) {
        switch (point.kind()) {
            case WeavePoint::Kind::Match: {
                const WeaveTreePtr& w = point.subtree();
                if (!w->is_node()) return;
                const TermPtr& head = w->pre_term();
                if (head->is_application() && ctx.contains(head->label()) &&
                    contains_change(*w)) {
                    sites.push_back(RuleSite{RuleSite::Kind::Context, path, point});
                    return;  // absorb everything below
                }
                const bool labeled = head->is_application();
                if (labeled) ancestors.push_back(head->label());
                for (std::size_t i = 0; i < w->points().size(); ++i) {
                    path.push_back(i);
                    visit(w->points()[i]);
                    path.pop_back();
                }
                if (labeled) ancestors.pop_back();
                return;
            }
            case WeavePoint::Kind::Mismatch:
                sites.push_back(RuleSite{RuleSite::Kind::Mismatch, path, point});
                return;
            case WeavePoint::Kind::LeftHole:
            case WeavePoint::Kind::RightHole:
                fail_uncontextualized(path, ancestors);
        }
    }
};

}  // namespace

std::vector<RuleSite> select_rule_sites(const WeavePoint& root, const ContextSpec& ctx) {
    SiteCollector collector{ctx, {}, {}, {}};
    collector.visit(root);
    return collector.sites;
}

std::pair<TermPtr, TermPtr> site_terms(const RuleSite& site) {
    return {project_root(site.point, Side::Left), project_root(site.point, Side::Right)};
}

}  // namespace termweave
