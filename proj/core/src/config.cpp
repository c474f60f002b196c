#include "termweave/config.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "termweave/errors.hpp"

namespace termweave {

namespace {

bool is_label_char(char c) {
    return c == '_' || c == '@' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
}

bool is_valid_label(const std::string& s) {
    if (s.empty()) return false;
    char first = s[0];
    if (first != '_' && first != '@' && !(first >= 'a' && first <= 'z') &&
        !(first >= 'A' && first <= 'Z'))
        return false;
    return std::all_of(s.begin(), s.end(), is_label_char);
}

std::set<std::string> parse_label_set(const std::string& list, std::size_t line_no) {
    std::set<std::string> labels;
    std::string current;
    std::istringstream stream(list);
    while (std::getline(stream, current, ',')) {
        // labels may be surrounded by spaces
        std::size_t begin = current.find_first_not_of(" \t");
        std::size_t end = current.find_last_not_of(" \t");
        std::string label =
            begin == std::string::npos ? std::string() : current.substr(begin, end - begin + 1);
        if (!is_valid_label(label))
            throw ParseError("malformed label list: '" + list + "'", line_no, 1);
        labels.insert(std::move(label));
    }
    if (labels.empty()) throw ParseError("empty label list", line_no, 1);
    return labels;
}

std::string strip(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

GeneralizationStep parse_generalize_directive(const std::string& args, std::size_t line_no) {
    std::set<std::string> roots, replace;
    bool saw_roots = false, saw_replace = false;
    std::istringstream stream(args);
    std::string field;
    while (stream >> field) {
        std::size_t eq = field.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected roots=... and replace=... after 'generalize'", line_no, 1);
        std::string key = field.substr(0, eq);
        std::string value = field.substr(eq + 1);
        if (key == "roots" && !saw_roots) {
            roots = parse_label_set(value, line_no);
            saw_roots = true;
        } else if (key == "replace" && !saw_replace) {
            replace = parse_label_set(value, line_no);
            saw_replace = true;
        } else {
            throw ParseError("unknown or repeated generalize field '" + key + "'", line_no, 1);
        }
    }
    if (!saw_roots || !saw_replace)
        throw ParseError("generalize needs both roots=... and replace=...", line_no, 1);
    return GeneralizationStep{std::move(roots), std::move(replace)};
}

}  // namespace

Config parse_config(std::string_view text) {
    Config config;
    std::vector<std::set<std::string>> comparable_classes;
    bool saw_context = false, saw_locations = false;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        start = end + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;

        std::size_t space = line.find_first_of(" \t");
        std::string directive = line.substr(0, space);
        std::string args = space == std::string::npos ? std::string() : strip(line.substr(space));

        if (directive == "generalize") {
            config.generalization.steps.push_back(parse_generalize_directive(args, line_no));
        } else if (directive == "context") {
            if (saw_context) throw ParseError("duplicate 'context' directive", line_no, 1);
            saw_context = true;
            config.context.labels = parse_label_set(args, line_no);
        } else if (directive == "locations") {
            if (saw_locations) throw ParseError("duplicate 'locations' directive", line_no, 1);
            saw_locations = true;
            config.locations.labels = parse_label_set(args, line_no);
        } else if (directive == "comparable") {
            comparable_classes.push_back(parse_label_set(args, line_no));
        } else {
            throw ParseError("unknown directive '" + directive + "'", line_no, 1);
        }
    }

    try {
        config.comparable = CompSpec(std::move(comparable_classes));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, 1);
    }
    return config;
}

}  // namespace termweave
