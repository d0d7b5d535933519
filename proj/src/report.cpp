#include "hopfkit/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hopfkit
{

bool Report::pass() const
{
  return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::vector<std::string> Report::failing_ids() const
{
  std::vector<std::string> out;
  for (const auto &c : checks)
    if (!c.pass)
      out.push_back(c.id);
  return out;
}

const Check *Report::find(std::string_view id) const
{
  for (const auto &c : checks)
    if (c.id == id)
      return &c;
  return nullptr;
}

void Report::merge(const Report &other, const std::string &prefix)
{
  for (auto c : other.checks)
  {
    if (!prefix.empty())
      c.id = prefix + "." + c.id;
    checks.push_back(std::move(c));
  }
  for (const auto &a : other.annotations)
    if (std::find(annotations.begin(), annotations.end(), a) == annotations.end())
      annotations.push_back(a);
}

void Report::sort()
{
  std::stable_sort(checks.begin(), checks.end(), [](const Check &a, const Check &b) { return a.id < b.id; });
}

namespace
{

std::string format_text(const std::vector<Report> &reports)
{
  std::ostringstream out;
  bool all = true;
  for (const auto &r : reports)
  {
    out << "report " << r.subject << '\n';
    for (const auto &c : r.checks)
    {
      out << "  " << (c.pass ? "PASS " : "FAIL ") << c.id << " order=" << c.order;
      if (!c.detail.empty())
        out << " (" << c.detail << ')';
      out << '\n';
      if (!c.pass)
        out << "    witness: " << (c.witness.empty() ? "-" : c.witness) << '\n';
    }
    for (const auto &a : r.annotations)
      out << "  note: " << a << '\n';
    out << "  result: " << (r.pass() ? "PASS" : "FAIL") << '\n';
    all = all && r.pass();
  }
  out << "overall: " << (all ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string format_tree(const std::vector<Report> &reports)
{
  using json = nlohmann::ordered_json;
  json root = json::object();
  json list = json::array();
  bool all = true;
  for (const auto &r : reports)
  {
    json node = {{"subject", r.subject}, {"status", r.pass() ? "pass" : "fail"}};
    json checks = json::array();
    for (const auto &c : r.checks)
    {
      json cn = {{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"order", c.order}};
      cn["witness"] = c.pass ? json(nullptr) : json(c.witness);
      if (!c.detail.empty())
        cn["detail"] = c.detail;
      checks.push_back(std::move(cn));
    }
    node["checks"] = std::move(checks);
    node["annotations"] = r.annotations;
    list.push_back(std::move(node));
    all = all && r.pass();
  }
  root["reports"] = std::move(list);
  root["overall"] = all ? "pass" : "fail";
  return root.dump(2) + "\n";
}

} // namespace

std::string format_reports(const std::vector<Report> &reports, ReportFormat format)
{
  return "hopfkit-report v1\n" + (format == ReportFormat::text ? format_text(reports) : format_tree(reports));
}

} // namespace hopfkit
