#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hopfkit/presentation.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/rewrite.hpp"

namespace hopfkit
{

struct RunConfig
{
  int order = 3;
  int degree_cap = 12;
  int qybe_order = 2;
  int samples = 1000;
  std::uint64_t seed = 1;
  int pairing_degree = 3;
  ReportFormat format = ReportFormat::text;

  EngineConfig engine(int at_order) const;
  EngineConfig engine() const { return engine(order); }
};

/// HOPFKIT_ORDER when set to a positive integer, otherwise 3.
int default_order();

/// A built-in name, or a path to a presentation file.
Presentation resolve_presentation(const std::string &name_or_path);
/// A built-in scaling name, or a path to a file with one scaling block.
ScalingMap resolve_scaling(const std::string &name_or_path);

/// Checks that make sense for p: consistency always, hopf when Hopf data
/// is present, casimir/rmatrix/pairing for the presentations that carry them.
std::vector<std::string> default_checks(const Presentation &p);

/// One report per requested check group, in request order.
std::vector<Report> run_verify(const Presentation &p, const std::vector<std::string> &checks, const RunConfig &config);

/// Full command-line entry point; returns the process exit code
/// (0 pass, 1 verification failure, 2 usage or parse error, 3 internal limit).
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hopfkit
