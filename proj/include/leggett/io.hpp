// io.hpp
// CSV and JSON emission for sweep rows and single bound checks. Both formats
// carry the same field names and 17-significant-digit values, so they parse
// back to identical numbers.

#pragma once

#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "leggett/hvt.hpp"
#include "leggett/inequality.hpp"

namespace leggett {

inline constexpr std::string_view kSweepCsvHeader =
    "delta,av_a,av_b,av_ab_paper,av_ab_oracle,lower,upper,margin_lower,margin_upper,satisfied";

inline constexpr std::string_view kCheckCsvHeader =
    "av_a,av_b,av_ab,lower,upper,margin_lower,margin_upper,satisfied";

inline std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_value(bool v) { return v ? "true" : "false"; }

// Margins grade the primary (paper-formula or Monte Carlo) value; the bounds
// are shared by both reports since they depend only on av_a and av_b.
// `satisfied` requires both the primary and the oracle value to respect them.
inline std::string to_csv_line(const SweepRow& row) {
  std::string line;
  line += format_value(row.delta);
  line += ',';
  line += format_value(row.av_a);
  line += ',';
  line += format_value(row.av_b);
  line += ',';
  line += format_value(row.av_ab_paper);
  line += ',';
  line += format_value(row.av_ab_oracle);
  line += ',';
  line += format_value(row.report_paper.lower);
  line += ',';
  line += format_value(row.report_paper.upper);
  line += ',';
  line += format_value(row.report_paper.margin_lower);
  line += ',';
  line += format_value(row.report_paper.margin_upper);
  line += ',';
  line += format_value(row.report_paper.satisfied && row.report_oracle.satisfied);
  return line;
}

inline std::string to_csv_line(const InequalityReport& r, double av_a, double av_b) {
  std::string line;
  line += format_value(av_a);
  line += ',';
  line += format_value(av_b);
  line += ',';
  line += format_value(r.value);
  line += ',';
  line += format_value(r.lower);
  line += ',';
  line += format_value(r.upper);
  line += ',';
  line += format_value(r.margin_lower);
  line += ',';
  line += format_value(r.margin_upper);
  line += ',';
  line += format_value(r.satisfied);
  return line;
}

inline nlohmann::json to_json(const SweepRow& row) {
  return nlohmann::json{{"delta", row.delta},
                        {"av_a", row.av_a},
                        {"av_b", row.av_b},
                        {"av_ab_paper", row.av_ab_paper},
                        {"av_ab_oracle", row.av_ab_oracle},
                        {"lower", row.report_paper.lower},
                        {"upper", row.report_paper.upper},
                        {"margin_lower", row.report_paper.margin_lower},
                        {"margin_upper", row.report_paper.margin_upper},
                        {"satisfied", row.report_paper.satisfied && row.report_oracle.satisfied}};
}

inline nlohmann::json to_json(const InequalityReport& r, double av_a, double av_b) {
  return nlohmann::json{{"av_a", av_a},
                        {"av_b", av_b},
                        {"av_ab", r.value},
                        {"lower", r.lower},
                        {"upper", r.upper},
                        {"margin_lower", r.margin_lower},
                        {"margin_upper", r.margin_upper},
                        {"satisfied", r.satisfied}};
}

inline nlohmann::json to_json(const EstimateReport& r) {
  return nlohmann::json{{"av_a", r.triple.av_a},
                        {"av_b", r.triple.av_b},
                        {"av_ab", r.triple.av_ab},
                        {"stderr_a", r.stderr_a},
                        {"stderr_b", r.stderr_b},
                        {"stderr_ab", r.stderr_ab},
                        {"samples", r.samples},
                        {"seed", r.seed}};
}

inline void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) out << to_csv_line(row) << '\n';
}

inline void write_json(std::ostream& out, std::span<const SweepRow> rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& row : rows) arr.push_back(to_json(row));
  out << arr.dump(2) << '\n';
}

}  // namespace leggett
