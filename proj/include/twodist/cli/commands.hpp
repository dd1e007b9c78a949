#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twodist/cli/report.hpp"
#include "twodist/designs/incidence.hpp"
#include "twodist/dioph/auxiliary.hpp"
#include "twodist/exactnum/quadext.hpp"
#include "twodist/geometry/spectrum.hpp"

namespace twodist::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< a mathematical expectation failed
inline constexpr int kExitUsage = 2;    ///< bad arguments, unreadable or malformed input

CommandReport verify_lisonek_report();
CommandReport params_report(long m, long S, long alpha, long beta);

struct EmbedOptions {
  /// Block radius in the simplex frame; the branch root when empty.
  std::optional<exactnum::QuadExt> r2;
  geometry::Branch branch = geometry::Branch::GammaAbove2;
  bool dump_gram = false;
};
CommandReport embed_report(const designs::IncidenceDesign& design, const EmbedOptions& opts);

CommandReport solve_report(long smax, long mmax, bool gate);
CommandReport classify_report(long zmax);
CommandReport regions_report(dioph::AuxG which, const dioph::Box& box);
CommandReport identities_report();

struct Outcome {
  int exit_code = kExitOk;
  std::optional<CommandReport> report;
  bool json = false;
  /// Usage text or the diagnostic of an error that stopped the command.
  std::string message;
};

/// Parses the arguments (without the program name) and runs the command.
Outcome run(const std::vector<std::string>& args);

/// run(), then prints the report (text, or JSON with --json) to out and any
/// diagnostic to err. Returns the exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twodist::cli
