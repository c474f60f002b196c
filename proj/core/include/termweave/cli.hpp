#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace termweave {

/// Command-line driver. Subcommands:
///
///   infer --before F --after F --config F --out F      write inferred rules
///   apply --rules F --input F [--strategy S] [--max-steps N] --out F
///   diff  --before F --after F [--config F]            print the weave report
///   check --before F --after F --config F              infer, apply, compare
///
/// Returns 0 on success, 1 on pipeline errors (uncontextualized hole, arity
/// conflict, step limit, failed round-trip), 2 on usage and parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace termweave
