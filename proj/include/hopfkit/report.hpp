#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hopfkit
{

/// One verified statement.  A failing check carries its residue rendered
/// canonically; `order` is the truncation order the check was decided at,
/// or for failures the lowest h-power at which the residue is nonzero.
struct Check
{
  std::string id;
  bool pass = true;
  std::string witness;
  int order = 0;
  std::string detail;
};

struct Report
{
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::string> annotations;

  bool pass() const;
  std::vector<std::string> failing_ids() const;
  const Check *find(std::string_view id) const;

  void add(Check c) { checks.push_back(std::move(c)); }
  /// Appends other's checks, prefixing their ids with `prefix` when given.
  void merge(const Report &other, const std::string &prefix = "");
  /// Orders checks by id so that output never depends on evaluation order.
  void sort();
};

enum class ReportFormat
{
  text,
  tree,
};

/// Header line "hopfkit-report v1", then the report body.
std::string format_reports(const std::vector<Report> &reports, ReportFormat format);

} // namespace hopfkit
