#include "termweave/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "termweave/errors.hpp"

namespace termweave {

namespace {

bool is_ident_start(char c) {
    return c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_bare_label(const std::string& s) {
    if (s.empty() || !is_ident_start(s[0])) return false;
    return std::all_of(s.begin(), s.end(), is_ident_char);
}

bool is_metavar_name(const std::string& s) {
    if (s.size() < 3 || s[0] != 'T' || s[1] != '_') return false;
    return std::all_of(s.begin() + 2, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string canonical_decimal(std::string text) {
    bool negative = !text.empty() && text[0] == '-';
    std::string digits = negative ? text.substr(1) : text;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return "0";
    digits.erase(0, first);
    return negative ? "-" + digits : digits;
}

}  // namespace

Term::Term(Kind kind, std::string text, std::vector<TermPtr> children)
    : kind_(kind), text_(std::move(text)), children_(std::move(children)) {}

TermPtr Term::app(std::string label, std::vector<TermPtr> children) {
    if (label.empty()) throw std::invalid_argument("application label must be nonempty");
    for (const auto& child : children)
        if (!child) throw std::invalid_argument("null child term");
    return TermPtr(new Term(Kind::Application, std::move(label), std::move(children)));
}

TermPtr Term::list(std::vector<TermPtr> children) {
    return app(std::string(list_label), std::move(children));
}

TermPtr Term::string(std::string value) {
    return TermPtr(new Term(Kind::String, std::move(value), {}));
}

TermPtr Term::integer(std::string decimal) {
    return TermPtr(new Term(Kind::Int, canonical_decimal(std::move(decimal)), {}));
}

TermPtr Term::integer(long long value) { return integer(std::to_string(value)); }

TermPtr Term::metavar(std::string name) {
    if (!is_metavar_name(name))
        throw std::invalid_argument("metavariable name must match T_<digits>: '" + name + "'");
    return TermPtr(new Term(Kind::Metavar, std::move(name), {}));
}

TermPtr Term::wildcard() {
    static const TermPtr instance(new Term(Kind::Wildcard, "_", {}));
    return instance;
}

const std::string& Term::label() const {
    if (kind_ != Kind::Application) throw std::logic_error("label() on non-application term");
    return text_;
}

const std::string& Term::string_value() const {
    if (kind_ != Kind::String) throw std::logic_error("string_value() on non-string term");
    return text_;
}

const std::string& Term::int_value() const {
    if (kind_ != Kind::Int) throw std::logic_error("int_value() on non-int term");
    return text_;
}

const std::string& Term::metavar_name() const {
    if (kind_ != Kind::Metavar) throw std::logic_error("metavar_name() on non-metavar term");
    return text_;
}

TermPtr gen_info() {
    static const TermPtr instance = Term::app("gen_info", {});
    return instance;
}

bool terms_equal(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
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
        case Term::Kind::Wildcard:
            break;
    }
    const auto& ca = a->children();
    const auto& cb = b->children();
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!terms_equal(ca[i], cb[i])) return false;
    return true;
}

std::size_t node_count(const TermPtr& t) {
    std::size_t n = 1;
    for (const auto& child : t->children()) n += node_count(child);
    return n;
}

TermPtr with_children(const TermPtr& head, std::vector<TermPtr> children) {
    if (!head->is_application()) {
        if (!children.empty())
            throw std::logic_error("cannot attach children to a leaf term");
        return head;
    }
    return Term::app(head->label(), std::move(children));
}

bool is_ground(const TermPtr& t) {
    if (t->kind() == Term::Kind::Metavar || t->kind() == Term::Kind::Wildcard) return false;
    for (const auto& child : t->children())
        if (!is_ground(child)) return false;
    return true;
}

namespace {
void collect_metavars(const TermPtr& t, std::set<std::string>& out) {
    if (t->kind() == Term::Kind::Metavar) {
        out.insert(t->metavar_name());
        return;
    }
    for (const auto& child : t->children()) collect_metavars(child, out);
}
}  // namespace

std::set<std::string> metavar_names(const TermPtr& t) {
    std::set<std::string> out;
    collect_metavars(t, out);
    return out;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

void print_escaped(std::ostream& os, const std::string& text) {
    for (char c : text) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default: os << c;
        }
    }
}

void print_to(std::ostream& os, const TermPtr& t) {
    switch (t->kind()) {
        case Term::Kind::Application: {
            const char open = t->is_list() ? '[' : '(';
            const char close = t->is_list() ? ']' : ')';
            if (!t->is_list()) {
                if (is_bare_label(t->label())) {
                    os << t->label();
                } else {
                    os << '"';
                    print_escaped(os, t->label());
                    os << '"';
                }
            }
            os << open;
            bool first = true;
            for (const auto& child : t->children()) {
                if (!first) os << ',';
                first = false;
                print_to(os, child);
            }
            os << close;
            break;
        }
        case Term::Kind::String:
            os << '"';
            print_escaped(os, t->string_value());
            os << '"';
            break;
        case Term::Kind::Int:
            os << t->int_value();
            break;
        case Term::Kind::Metavar:
            os << t->metavar_name();
            break;
        case Term::Kind::Wildcard:
            os << '_';
            break;
    }
}

}  // namespace

std::string print_term(const TermPtr& t) {
    std::ostringstream os;
    print_to(os, t);
    return os.str();
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class TermReader {
public:
    TermReader(std::string_view src, bool pattern_mode)
        : src_(src), pattern_(pattern_mode) {}

    TermPtr read_whole() {
        TermPtr t = read_term();
        skip_ws();
        if (!at_end()) {
            if (peek() == '{')
                fail("aterm annotations '{...}' are not supported");
            fail("trailing input after term");
        }
        return t;
    }

private:
    std::string_view src_;
    bool pattern_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(message, line_, column_);
    }

    bool at_end() const { return pos_ >= src_.size(); }

    char peek() const { return src_[pos_]; }

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_ws() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                advance();
            else
                break;
        }
    }

    void expect(char c, const std::string& what) {
        if (at_end() || peek() != c) fail("expected " + what);
        advance();
    }

    TermPtr read_term() {
        skip_ws();
        if (at_end()) fail("unexpected end of input, expected a term");
        char c = peek();
        if (c == '[') return read_list();
        if (c == '"') return read_quoted_or_string();
        if (c == '-' || (c >= '0' && c <= '9')) return read_integer();
        if (is_ident_start(c)) return read_identifier_term();
        if (c == '{') fail("aterm annotations '{...}' are not supported");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::vector<TermPtr> read_argument_list(char close) {
        advance();  // consume the opening bracket
        std::vector<TermPtr> children;
        skip_ws();
        if (at_end()) fail("unbalanced brackets: input ended inside a term");
        if (peek() == close) {
            advance();
            return children;
        }
        while (true) {
            children.push_back(read_term());
            skip_ws();
            if (at_end()) fail("unbalanced brackets: input ended inside a term");
            char c = peek();
            if (c == ',') {
                advance();
                continue;
            }
            if (c == close) {
                advance();
                return children;
            }
            if (c == '{') fail("aterm annotations '{...}' are not supported");
            fail(std::string("expected ',' or '") + close + "'");
        }
    }

    TermPtr read_list() { return Term::list(read_argument_list(']')); }

    TermPtr read_quoted_or_string() {
        std::string text = read_quoted_text();
        skip_ws();
        if (!at_end() && peek() == '(') {
            if (text.empty()) fail("application label must be nonempty");
            if (text == Term::list_label) fail("label '@list' is reserved");
            return Term::app(std::move(text), read_argument_list(')'));
        }
        return Term::string(std::move(text));
    }

    std::string read_quoted_text() {
        advance();  // consume the opening quote
        std::string out;
        while (true) {
            if (at_end()) fail("unterminated string literal");
            char c = advance();
            if (c == '"') return out;
            if (c == '\\') {
                if (at_end()) fail("unterminated string literal");
                char e = advance();
                switch (e) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    default: fail(std::string("unknown escape sequence '\\") + e + "'");
                }
            } else {
                out += c;
            }
        }
    }

    TermPtr read_integer() {
        std::string text;
        if (peek() == '-') {
            text += advance();
            if (at_end() || peek() < '0' || peek() > '9') fail("expected digit after '-'");
        }
        while (!at_end() && peek() >= '0' && peek() <= '9') text += advance();
        return Term::integer(std::move(text));
    }

    TermPtr read_identifier_term() {
        std::string ident;
        while (!at_end() && is_ident_char(peek())) ident += advance();
        skip_ws();
        if (!at_end() && peek() == '(')
            return Term::app(std::move(ident), read_argument_list(')'));
        if (pattern_) {
            if (ident == "_") return Term::wildcard();
            if (is_metavar_name(ident)) return Term::metavar(std::move(ident));
        }
        fail("expected '(' after label '" + ident + "'");
    }
};

}  // namespace

TermPtr parse_term(std::string_view text) { return TermReader(text, false).read_whole(); }

TermPtr parse_pattern(std::string_view text) { return TermReader(text, true).read_whole(); }

TermPtr normalize_locations(const TermPtr& t, const LocationLabels& loc) {
    if (t->is_application() && loc.contains(t->label())) return gen_info();
    if (t->children().empty()) return t;
    std::vector<TermPtr> children;
    children.reserve(t->children().size());
    bool changed = false;
    for (const auto& child : t->children()) {
        TermPtr replaced = normalize_locations(child, loc);
        changed = changed || replaced.get() != child.get();
        children.push_back(std::move(replaced));
    }
    return changed ? with_children(t, std::move(children)) : t;
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

}  // namespace termweave
