#include "ssr/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ssr {

SetReport make_set_report(const Instance& inst, const IndexSet& indices) {
  SetReport out;
  out.indices.reserve(indices.size());
  out.positions.reserve(indices.size());
  out.values.reserve(indices.size());
  for (int i : indices) {
    out.indices.push_back(i + 1);
    out.positions.push_back(inst.position(i) + 1);
    out.values.push_back(inst.value(i));
  }
  out.sum = inst.sum_of(indices);
  return out;
}

RunReport make_report(const std::string& mode, const Instance& inst,
                      const SolutionPair& pair, std::optional<std::string> epsilon,
                      std::optional<int> p_star_zero_based,
                      std::optional<std::uint64_t> table_cells,
                      std::optional<double> elapsed_ms) {
  RunReport report;
  report.mode = mode;
  report.n = inst.size();
  report.epsilon = std::move(epsilon);
  report.ratio = pair.ratio;
  report.s1 = make_set_report(inst, pair.s1);
  report.s2 = make_set_report(inst, pair.s2);
  if (p_star_zero_based) report.p_star = *p_star_zero_based + 1;
  report.table_cells = table_cells;
  report.elapsed_ms = elapsed_ms;
  return report;
}

namespace {

nlohmann::ordered_json set_json(const SetReport& s) {
  return nlohmann::ordered_json{{"indices", s.indices},
                                {"positions", s.positions},
                                {"values", s.values},
                                {"sum", s.sum}};
}

}  // namespace

std::string report_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["mode"] = report.mode;
  j["n"] = report.n;
  if (report.epsilon)
    j["epsilon"] = *report.epsilon;
  else
    j["epsilon"] = nullptr;
  Ratio r = reduced(report.ratio);
  j["ratio"] = nlohmann::ordered_json{
      {"num", r.num()}, {"den", r.den()}, {"decimal", decimal_string(r)}};
  j["s1"] = set_json(report.s1);
  j["s2"] = set_json(report.s2);
  if (report.p_star)
    j["p_star"] = *report.p_star;
  else
    j["p_star"] = nullptr;
  if (report.elapsed_ms)
    j["elapsed_ms"] = *report.elapsed_ms;
  else
    j["elapsed_ms"] = nullptr;
  if (report.table_cells)
    j["table_cells"] = *report.table_cells;
  else
    j["table_cells"] = nullptr;
  return j.dump() + "\n";
}

std::string report_text(const RunReport& report) {
  std::ostringstream out;
  Ratio r = reduced(report.ratio);
  out << "mode:       " << report.mode << "\n";
  out << "n:          " << report.n << "\n";
  if (report.epsilon) out << "epsilon:    " << *report.epsilon << "\n";
  out << "ratio:      " << decimal_string(r) << " (" << r.num() << "/" << r.den()
      << ")\n";
  auto put_set = [&](const char* name, const SetReport& s) {
    out << name << " indices: ";
    for (std::size_t i = 0; i < s.indices.size(); ++i)
      out << (i ? " " : "") << s.indices[i];
    out << "\n" << name << " values:  ";
    for (std::size_t i = 0; i < s.values.size(); ++i)
      out << (i ? " " : "") << s.values[i];
    out << "\n" << name << " sum:     " << s.sum << "\n";
  };
  put_set("s1", report.s1);
  put_set("s2", report.s2);
  if (report.p_star) out << "p_star:     " << *report.p_star << "\n";
  if (report.table_cells) out << "cells:      " << *report.table_cells << "\n";
  if (report.elapsed_ms) out << "elapsed_ms: " << *report.elapsed_ms << "\n";
  return out.str();
}

}  // namespace ssr
