#include "termweave/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "termweave/config.hpp"
#include "termweave/diff.hpp"
#include "termweave/engine.hpp"
#include "termweave/errors.hpp"
#include "termweave/rulegen.hpp"
#include "termweave/term.hpp"
#include "termweave/weave.hpp"

namespace termweave {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

Config load_config(const std::string& path) { return parse_config(read_file(path)); }

struct Inference {
    std::vector<RewriteRule> rules;
    std::string str_text;
};

Inference infer_from_files(const std::string& before_path, const std::string& after_path,
                           const Config& config) {
    TermPtr before = parse_term(read_file(before_path));
    TermPtr after = parse_term(read_file(after_path));
    DiffResult d = diff(before, after, config.comparable);
    WeavePoint root = weave(d);
    std::vector<RewriteRule> rules =
        build_rules(root, config.generalization, config.context, config.locations);

    Signature sig;
    sig.scan(before);
    sig.scan(after);
    for (const auto& rule : rules) {
        sig.scan(rule.lhs);
        sig.scan(rule.rhs);
    }
    std::string text = emit_str(rules, sig);
    return Inference{std::move(rules), std::move(text)};
}

const char* point_tag(WeavePoint::Kind kind) {
    switch (kind) {
        case WeavePoint::Kind::Match: return "MATCH";
        case WeavePoint::Kind::Mismatch: return "MISMATCH";
        case WeavePoint::Kind::LeftHole: return "LHOLE";
        case WeavePoint::Kind::RightHole: return "RHOLE";
    }
    return "?";
}

void print_weave_report(std::ostream& out, const WeavePoint& point, std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i) out << "  ";
    out << point_tag(point.kind()) << ' ';
    switch (point.kind()) {
        case WeavePoint::Kind::Match: {
            const WeaveTreePtr& w = point.subtree();
            const TermPtr& head = w->pre_term();
            if (head->is_application())
                out << (w->pre_term()->is_list() ? "[]" : head->label()) << '\n';
            else
                out << print_term(head) << '\n';
            for (const auto& child : w->points()) print_weave_report(out, child, depth + 1);
            return;
        }
        case WeavePoint::Kind::Mismatch:
            out << print_term(point.left()->term()) << " => " << print_term(point.right()->term())
                << '\n';
            return;
        case WeavePoint::Kind::LeftHole:
        case WeavePoint::Kind::RightHole:
            out << print_term(point.subtree()->term()) << '\n';
            return;
    }
}

struct ApplyOptions {
    std::string strategy_name = "topdown";
    std::size_t max_steps = 10000;

    Strategy strategy() const {
        if (strategy_name == "once") return Strategy::once_top_down();
        if (strategy_name == "innermost") return Strategy::innermost(max_steps);
        return Strategy::top_down_all();
    }
};

int cmd_infer(const std::string& before, const std::string& after, const std::string& config_path,
              const std::string& out_path, std::ostream& out) {
    Inference inference = infer_from_files(before, after, load_config(config_path));
    write_file(out_path, inference.str_text);
    out << "wrote " << inference.rules.size() << " rule"
        << (inference.rules.size() == 1 ? "" : "s") << " to " << out_path << '\n';
    return 0;
}

int cmd_apply(const std::string& rules_path, const std::string& input_path,
              const ApplyOptions& options, const std::string& out_path, std::ostream& out) {
    std::vector<RewriteRule> rules = parse_str_rules(read_file(rules_path));
    TermPtr input = parse_term(read_file(input_path));
    RewriteResult result = rewrite(input, rules, options.strategy());
    write_file(out_path, print_term(result.term) + "\n");
    out << "applied " << result.trace.size() << " rewrite"
        << (result.trace.size() == 1 ? "" : "s") << ", result in " << out_path << '\n';
    return 0;
}

int cmd_diff(const std::string& before_path, const std::string& after_path,
             const std::string& config_path, std::ostream& out) {
    Config config = config_path.empty() ? Config{} : load_config(config_path);
    TermPtr before = parse_term(read_file(before_path));
    TermPtr after = parse_term(read_file(after_path));
    WeavePoint root = weave(diff(before, after, config.comparable));
    if (change_points(root).empty()) {
        out << "NO CHANGES\n";
        return 0;
    }
    print_weave_report(out, root, 0);
    return 0;
}

int cmd_check(const std::string& before_path, const std::string& after_path,
              const std::string& config_path, std::ostream& out, std::ostream& err) {
    Config config = load_config(config_path);
    Inference inference = infer_from_files(before_path, after_path, config);
    // Run the emitted text through the rule reader so that check certifies
    // the .str file an infer call would produce, not just the in-memory rules.
    std::vector<RewriteRule> rules = parse_str_rules(inference.str_text);

    TermPtr before = parse_term(read_file(before_path));
    TermPtr after = parse_term(read_file(after_path));
    RewriteResult result = rewrite(before, rules, Strategy::top_down_all());

    TermPtr got = normalize_locations(result.term, config.locations);
    TermPtr want = normalize_locations(after, config.locations);
    if (!terms_equal(got, want)) {
        err << "round-trip FAILED: rewritten before-term does not match the after-term\n";
        err << "  expected: " << print_term(want) << '\n';
        err << "  got:      " << print_term(got) << '\n';
        return 1;
    }
    out << "round-trip OK (" << rules.size() << " rule" << (rules.size() == 1 ? "" : "s")
        << ", " << result.trace.size() << " application"
        << (result.trace.size() == 1 ? "" : "s") << ")\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Infer generalized rewrite rules from a before/after example pair",
                 "termweave"};
    app.require_subcommand(1);

    std::string before, after, config_path, out_path, rules_path, input_path;
    ApplyOptions apply_options;

    auto* infer = app.add_subcommand("infer", "Infer rules and write a .str module");
    infer->add_option("--before", before, "before-example term file")
        ->required()
        ->check(CLI::ExistingFile);
    infer->add_option("--after", after, "after-example term file")
        ->required()
        ->check(CLI::ExistingFile);
    infer->add_option("--config", config_path, "pipeline parameters")
        ->required()
        ->check(CLI::ExistingFile);
    infer->add_option("--out", out_path, "output .str file")->required();

    auto* apply = app.add_subcommand("apply", "Apply rules from a .str module to a term");
    apply->add_option("--rules", rules_path, ".str rule file")
        ->required()
        ->check(CLI::ExistingFile);
    apply->add_option("--input", input_path, "input term file")
        ->required()
        ->check(CLI::ExistingFile);
    apply->add_option("--strategy", apply_options.strategy_name, "once|topdown|innermost")
        ->check(CLI::IsMember({"once", "topdown", "innermost"}));
    apply->add_option("--max-steps", apply_options.max_steps, "innermost step budget")
        ->check(CLI::PositiveNumber);
    apply->add_option("--out", out_path, "output term file")->required();

    auto* diff_cmd = app.add_subcommand("diff", "Print the woven difference of two terms");
    diff_cmd->add_option("--before", before, "before term file")
        ->required()
        ->check(CLI::ExistingFile);
    diff_cmd->add_option("--after", after, "after term file")
        ->required()
        ->check(CLI::ExistingFile);
    diff_cmd->add_option("--config", config_path, "pipeline parameters")
        ->check(CLI::ExistingFile);

    auto* check = app.add_subcommand("check", "Infer rules, apply them, compare the result");
    check->add_option("--before", before, "before-example term file")
        ->required()
        ->check(CLI::ExistingFile);
    check->add_option("--after", after, "after-example term file")
        ->required()
        ->check(CLI::ExistingFile);
    check->add_option("--config", config_path, "pipeline parameters")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        // CLI11's vector overload consumes the arguments back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (infer->parsed()) return cmd_infer(before, after, config_path, out_path, out);
        if (apply->parsed()) return cmd_apply(rules_path, input_path, apply_options, out_path, out);
        if (diff_cmd->parsed()) return cmd_diff(before, after, config_path, out);
        if (check->parsed()) return cmd_check(before, after, config_path, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PipelineError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace termweave
