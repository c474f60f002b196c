#include <doctest.h>

#include <random>

#include "support.hpp"
#include "termweave/engine.hpp"
#include "termweave/errors.hpp"

using namespace termweave;
namespace ts = termweave::testsupport;

namespace {

RewriteRule rule(const char* name, const char* lhs, const char* rhs) {
    return RewriteRule{name, parse_pattern(lhs), parse_pattern(rhs)};
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("match: wildcard binds nothing") {
    auto s = match(parse_pattern("_"), parse_term("f(g(),1)"));
    REQUIRE(s.has_value());
    CHECK(s->empty());
}

TEST_CASE("match: nonlinear occurrences must be equal") {
    CHECK_FALSE(match(parse_pattern("f(T_1,T_1)"), parse_term("f(a(),b())")).has_value());
    auto s = match(parse_pattern("f(T_1,T_1)"), parse_term("f(a(),a())"));
    REQUIRE(s.has_value());
    CHECK(print_term(s->at("T_1")) == "a()");
}

TEST_CASE("match: labels, arities and leaf values") {
    CHECK_FALSE(match(parse_pattern("f(T_1)"), parse_term("g(a())")).has_value());
    CHECK_FALSE(match(parse_pattern("f(T_1)"), parse_term("f(a(),b())")).has_value());
    CHECK(match(parse_pattern("f(1,\"s\")"), parse_term("f(1,\"s\")")).has_value());
    CHECK_FALSE(match(parse_pattern("f(1)"), parse_term("f(2)")).has_value());
    CHECK_FALSE(match(parse_pattern("f(\"1\")"), parse_term("f(1)")).has_value());
    CHECK(match(parse_pattern("[T_1,_]"), parse_term("[a(),b()]")).has_value());
    CHECK_FALSE(match(parse_pattern("[T_1]"), parse_term("[a(),b()]")).has_value());
}

TEST_CASE("match: distributive lhs against a concrete expression") {
    TermPtr lhs = parse_pattern("multiply_op(T_1,add_op(T_2,T_3,T_4,_),T_4,_)");
    TermPtr expr = parse_term(
        "multiply_op(var_ref_exp(\"a\"),add_op(var_ref_exp(\"y\"),var_ref_exp(\"z\"),"
        "ann(),file_info(\"d.c\",4,11)),ann(),file_info(\"d.c\",4,8))");
    auto s = match(lhs, expr);
    REQUIRE(s.has_value());
    CHECK(print_term(s->at("T_1")) == "var_ref_exp(\"a\")");
    CHECK(print_term(s->at("T_2")) == "var_ref_exp(\"y\")");
    CHECK(print_term(s->at("T_3")) == "var_ref_exp(\"z\")");
    CHECK(print_term(s->at("T_4")) == "ann()");
}

TEST_CASE("instantiate") {
    Substitution s{{"T_1", parse_term("x()")}};
    CHECK(print_term(instantiate(parse_pattern("T_1"), s)) == "x()");
    CHECK(print_term(instantiate(parse_pattern("f(T_1,gen_info())"), s)) ==
          "f(x(),gen_info())");
    CHECK_THROWS_WITH_AS(instantiate(parse_pattern("T_2"), s),
                         doctest::Contains("unbound metavariable"), RuleError);
    CHECK_THROWS_WITH_AS(instantiate(parse_pattern("f(_)"), s), doctest::Contains("wildcard"),
                         RuleError);
}

TEST_CASE("match/instantiate inverse on random wildcard-free patterns") {
    std::mt19937 rng(828);
    for (int i = 0; i < 200; ++i) {
        auto [pattern, subst] = ts::random_pattern(rng);
        TermPtr t = ts::subst_metavars(pattern, subst);
        auto s = match(pattern, t);
        REQUIRE(s.has_value());
        CHECK(terms_equal(instantiate(pattern, *s), t));
    }
}

TEST_CASE("rewrite: no matching rule leaves the term alone") {
    std::vector<RewriteRule> rules{rule("R1", "zzz()", "yyy()")};
    TermPtr t = parse_term("f(g(),h())");
    RewriteResult r = rewrite(t, rules, Strategy::top_down_all());
    CHECK(terms_equal(r.term, t));
    CHECK(r.trace.empty());
}

TEST_CASE("rewrite: OnceTopDown stops after the first application") {
    std::vector<RewriteRule> rules{rule("R1", "a()", "b()")};
    RewriteResult r = rewrite(parse_term("f(a(),a())"), rules, Strategy::once_top_down());
    CHECK(print_term(r.term) == "f(b(),a())");
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].rule_name == "R1");
    CHECK(r.trace[0].path == std::vector<std::size_t>{0});
}

TEST_CASE("rewrite: TopDownAll rewrites each node at most once in one pass") {
    std::vector<RewriteRule> rules{rule("R1", "a()", "b()")};
    RewriteResult r = rewrite(parse_term("f(a(),g(a()))"), rules, Strategy::top_down_all());
    CHECK(print_term(r.term) == "f(b(),g(b()))");
    CHECK(r.trace.size() == 2);
}

TEST_CASE("rewrite: TopDownAll continues inside replacements") {
    // the replacement introduces a child that is itself a redex for R2
    std::vector<RewriteRule> rules{rule("R1", "a()", "wrap(c())"), rule("R2", "c()", "d()")};
    RewriteResult r = rewrite(parse_term("a()"), rules, Strategy::top_down_all());
    CHECK(print_term(r.term) == "wrap(d())");
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[1].path == std::vector<std::size_t>{0});
}

TEST_CASE("rewrite: rules are tried in sequence order") {
    std::vector<RewriteRule> rules{rule("R1", "a()", "first()"), rule("R2", "a()", "second()")};
    RewriteResult r = rewrite(parse_term("a()"), rules, Strategy::top_down_all());
    CHECK(print_term(r.term) == "first()");
}

TEST_CASE("rewrite: innermost is leftmost-innermost to fixpoint") {
    std::vector<RewriteRule> rules{rule("R1", "f(T_1)", "T_1")};
    RewriteResult r = rewrite(parse_term("g(f(x()),f(f(y())))"), rules, Strategy::innermost());
    CHECK(print_term(r.term) == "g(x(),y())");
    REQUIRE(r.trace.size() == 3);
    CHECK(r.trace[0].path == std::vector<std::size_t>{0});
    CHECK(r.trace[1].path == std::vector<std::size_t>{1, 0});
    CHECK(r.trace[2].path == std::vector<std::size_t>{1});
}

TEST_CASE("rewrite: innermost step budget") {
    std::vector<RewriteRule> rules{rule("R1", "f(T_1)", "T_1")};
    // a tower of four f's takes exactly four steps
    TermPtr tower = parse_term("f(f(f(f(x()))))");
    CHECK_NOTHROW(rewrite(tower, rules, Strategy::innermost(4)));
    CHECK_THROWS_AS(rewrite(tower, rules, Strategy::innermost(3)), StepLimitError);

    std::vector<RewriteRule> diverging{rule("R1", "f(T_1)", "f(f(T_1))")};
    CHECK_THROWS_AS(rewrite(parse_term("f(x())"), diverging, Strategy::innermost(10)),
                    StepLimitError);
}

TEST_CASE("rewrite: trace replay reproduces the result") {
    std::vector<RewriteRule> rules{rule("R1", "a()", "h(c())"), rule("R2", "c()", "d()"),
                                   rule("R3", "k(T_1)", "kk(T_1,T_1)")};
    TermPtr input = parse_term("g(a(),k(c()))");
    for (auto strategy : {Strategy::once_top_down(), Strategy::top_down_all(),
                          Strategy::innermost()}) {
        RewriteResult r = rewrite(input, rules, strategy);
        TermPtr replayed = input;
        for (const auto& entry : r.trace) {
            const RewriteRule* by_name = nullptr;
            for (const auto& candidate : rules)
                if (candidate.name == entry.rule_name) by_name = &candidate;
            REQUIRE(by_name != nullptr);
            replayed = apply_rule_at(replayed, *by_name, entry.path);
        }
        CHECK(terms_equal(replayed, r.term));
    }
}

TEST_CASE("apply_rule_at rejects non-matching paths") {
    RewriteRule r = rule("R1", "a()", "b()");
    CHECK_THROWS_AS(apply_rule_at(parse_term("f(c())"), r, std::vector<std::size_t>{0}),
                    RuleError);
    CHECK_THROWS_AS(apply_rule_at(parse_term("f(a())"), r, std::vector<std::size_t>{7}),
                    RuleError);
}

}  // TEST_SUITE
