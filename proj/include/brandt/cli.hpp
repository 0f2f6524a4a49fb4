#ifndef BRANDT_CLI_HPP_
#define BRANDT_CLI_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "brandt/congruence.hpp"

namespace brandt::cli {

  enum class Command {
    gen,
    endos,
    congruences,
    rightideals,
    annihilators,
    radicals,
    verify
  };

  enum class OutputFormat { text, json };

  enum ExitCode : int {
    success        = 0,
    check_failed   = 1,
    usage_error    = 2,
    internal_error = 3
  };

  //! Largest n for which tables are built; larger n only gets the size
  //! formula from `gen`.
  inline constexpr std::size_t max_table_n = 4;

  struct RunConfig {
    Command                    command = Command::gen;
    std::size_t                n       = 2;
    CompatibilityMode          mode    = CompatibilityMode::two_sided;
    OutputFormat               output  = OutputFormat::text;
    std::optional<std::string> cache_path;
    bool                       allow_heavy = false;
  };

  //! Execute `config`, writing the report to `out` and diagnostics to `err`.
  int run(RunConfig const& config, std::ostream& out, std::ostream& err);

  //! Parse `args` (without the program name) and run.  Bad flags give
  //! usage_error.
  int main(std::vector<std::string> const& args,
           std::ostream&                   out,
           std::ostream&                   err);

}  // namespace brandt::cli

#endif  // BRANDT_CLI_HPP_
