#pragma once

#include <string_view>

#include "termweave/context.hpp"
#include "termweave/diff.hpp"
#include "termweave/generalize.hpp"
#include "termweave/term.hpp"

namespace termweave {

/// Pipeline parameters, normally read from a config file. Defaults: no
/// generalization steps, no context labels, locations = {file_info}, no
/// comparability classes.
struct Config {
    GeneralizationSpec generalization;
    ContextSpec context;
    LocationLabels locations;
    CompSpec comparable;
};

/// Parse the line-oriented config format. One directive per line, `#` starts
/// a comment:
///
///   generalize roots=<l1,l2,...> replace=<l1,l2,...>   (repeatable, ordered)
///   context <l1,l2,...>
///   locations <l1,l2,...>
///   comparable <l1,l2,...>                             (repeatable; one class per line)
///
/// Throws ParseError on unknown directives, malformed label lists, duplicate
/// `context`/`locations` directives, or overlapping comparable classes.
Config parse_config(std::string_view text);

}  // namespace termweave
