#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace termweave {

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Which side of a before/after pair (and of a rewrite rule) a value
/// belongs to. "Left" is the before/pre side throughout.
enum class Side { Left, Right };

/// An immutable labeled ordered tree: the generic program representation.
///
/// Four ground variants exist (Application, String, Int) plus two pattern
/// leaves (Metavar, Wildcard) that only appear in rewrite-rule patterns.
/// Lists are internalized as Applications carrying the reserved label
/// "@list"; they print as `[...]` and are otherwise treated uniformly.
///
/// Terms are values: every operation in this library is a pure function
/// over TermPtr, and instances are safe to share across threads.
class Term {
public:
    enum class Kind { Application, String, Int, Metavar, Wildcard };

    /// Reserved label giving list nodes their uniform Application shape.
    /// Rejected by the parser as a user-written label.
    static constexpr std::string_view list_label = "@list";

    static TermPtr app(std::string label, std::vector<TermPtr> children);
    static TermPtr list(std::vector<TermPtr> children);
    static TermPtr string(std::string value);
    /// Arbitrary-precision signed decimal; accepts `-?[0-9]+` and stores the
    /// canonical form (no leading zeros, no negative zero).
    static TermPtr integer(std::string decimal);
    static TermPtr integer(long long value);
    /// Pattern leaf `T_<k>`; the name must have exactly that shape.
    static TermPtr metavar(std::string name);
    /// Pattern leaf `_`.
    static TermPtr wildcard();

    Kind kind() const noexcept { return kind_; }
    bool is_application() const noexcept { return kind_ == Kind::Application; }
    bool is_list() const noexcept { return kind_ == Kind::Application && text_ == list_label; }

    /// Application label (valid for Application nodes only).
    const std::string& label() const;
    /// String payload (String nodes only).
    const std::string& string_value() const;
    /// Canonical decimal text (Int nodes only).
    const std::string& int_value() const;
    /// Metavariable name (Metavar nodes only).
    const std::string& metavar_name() const;

    /// Child sequence; empty for every non-Application variant.
    const std::vector<TermPtr>& children() const noexcept { return children_; }

private:
    Term(Kind kind, std::string text, std::vector<TermPtr> children);

    Kind kind_;
    std::string text_;
    std::vector<TermPtr> children_;
};

/// The `gen_info()` constant: "generate a fresh source location here".
TermPtr gen_info();

/// Structural equality: variant, label/value and children, recursively.
bool terms_equal(const TermPtr& a, const TermPtr& b);

/// Number of nodes (positions) in the tree.
std::size_t node_count(const TermPtr& t);

/// Copy of `head` with its child list replaced. `head` must be an
/// Application unless `children` is empty, in which case it is returned as is.
TermPtr with_children(const TermPtr& head, std::vector<TermPtr> children);

/// True if the term contains no Metavar or Wildcard leaf.
bool is_ground(const TermPtr& t);

/// All metavariable names occurring in the term, sorted.
std::set<std::string> metavar_names(const TermPtr& t);

/// Canonical rendering: no whitespace, labels quoted only when they are not
/// bare identifiers, lists as `[...]`, metavariables bare, wildcards as `_`.
/// parse_term(print_term(t)) reconstructs t for every ground term.
std::string print_term(const TermPtr& t);

/// Parse aterm source text. Whitespace is permitted between tokens and
/// after the term; anything else trailing is rejected. Throws ParseError
/// with line/column on malformed input.
TermPtr parse_term(std::string_view text);

/// Parse pattern text: the term grammar extended with bare metavariable
/// tokens `T_<digits>` and the wildcard `_`.
TermPtr parse_pattern(std::string_view text);

/// Labels whose subterms stand for source locations.
struct LocationLabels {
    std::set<std::string> labels{"file_info"};

    bool contains(const std::string& label) const { return labels.count(label) != 0; }
};

/// Replace every maximal subterm whose root label is a location label with
/// `gen_info()`. Idempotent.
TermPtr normalize_locations(const TermPtr& t, const LocationLabels& loc);

}  // namespace termweave
