#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyfun_cli/model_io.hpp"

namespace polyfun::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUnknownName = 2,
  kInvalid = 3,
  kResource = 4,
};

struct Args {
  std::string poly;
  std::string outer;
  std::string inner;
  std::string left;
  std::string right;
  std::string map;
  std::string arg;
  std::optional<std::size_t> n;
  std::optional<std::size_t> size;
  std::vector<Elem> sigma;
  std::optional<std::uint64_t> seed;
  bool dot = false;
};

struct Result {
  Json json;
  std::string dot;  // filled when Args::dot is set
  int exit_code = kOk;
};

const std::vector<std::string>& command_names();

/// Throws UnknownName for an unknown command or name.
Result run_command(const std::string& command, const Model& model, const Args& args,
                   const Budget& budget = {});

/// Parses the model text, runs the command and writes the result (or an
/// error object) to `out`/`err`. Returns the process exit code.
int execute(const std::string& command, const std::string& model_text, const Args& args,
            const Budget& budget, std::ostream& out, std::ostream& err);

/// POLYFUN_MAX_ELEMS, or the default bound.
Budget budget_from_environment();

}  // namespace polyfun::cli
