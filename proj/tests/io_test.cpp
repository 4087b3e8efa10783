#include "leggett/io.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "leggett/inequality.hpp"

using namespace leggett;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

}  // namespace

TEST(Format, SeventeenSignificantDigits) {
  EXPECT_EQ(format_value(0.5), "0.5");
  EXPECT_EQ(format_value(-1.0), "-1");
  EXPECT_EQ(format_value(1.0 / 3.0), "0.33333333333333331");
  EXPECT_EQ(format_value(true), "true");
  EXPECT_EQ(format_value(false), "false");
}

TEST(Format, ValuesRoundTripExactly) {
  const double values[] = {std::numbers::pi, -0.12345678901234567, 1e-300, 0.0, 2.0 / 3.0};
  for (double v : values) EXPECT_EQ(std::stod(format_value(v)), v);
}

TEST(Csv, SweepHeaderIsBitExact) {
  EXPECT_EQ(kSweepCsvHeader,
            "delta,av_a,av_b,av_ab_paper,av_ab_oracle,lower,upper,margin_lower,margin_upper,"
            "satisfied");
}

TEST(Csv, SweepRowsHaveTenFieldsAndLfLineEnds) {
  const auto rows = quantum_sweep(CanonicalState::PsiPlus, 8);
  std::ostringstream out;
  write_csv(out, rows);
  const std::string text = out.str();
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');

  std::istringstream in(text);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line, kSweepCsvHeader);
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const auto fields = split(line, ',');
    ASSERT_EQ(fields.size(), 10u);
    EXPECT_TRUE(fields.back() == "true" || fields.back() == "false");
    ++count;
  }
  EXPECT_EQ(count, rows.size());
}

TEST(Csv, CheckLineMatchesReportFields) {
  const InequalityReport r = leggett_check({0.25, -0.25, 0.125});
  const auto fields = split(to_csv_line(r, 0.25, -0.25), ',');
  ASSERT_EQ(fields.size(), 8u);
  EXPECT_EQ(std::stod(fields[0]), 0.25);
  EXPECT_EQ(std::stod(fields[1]), -0.25);
  EXPECT_EQ(std::stod(fields[2]), r.value);
  EXPECT_EQ(std::stod(fields[3]), r.lower);
  EXPECT_EQ(std::stod(fields[4]), r.upper);
  EXPECT_EQ(std::stod(fields[5]), r.margin_lower);
  EXPECT_EQ(std::stod(fields[6]), r.margin_upper);
  EXPECT_EQ(fields[7], "true");
}

TEST(CsvJson, EncodingsCarryIdenticalNumbers) {
  const auto rows = quantum_sweep(CanonicalState::Singlet, 16);

  std::ostringstream csv_out;
  write_csv(csv_out, rows);
  std::istringstream csv_in(csv_out.str());
  std::string line;
  std::getline(csv_in, line);  // header

  std::ostringstream json_out;
  write_json(json_out, rows);
  const nlohmann::json arr = nlohmann::json::parse(json_out.str());
  ASSERT_EQ(arr.size(), rows.size());

  const char* keys[] = {"delta", "av_a", "av_b", "av_ab_paper", "av_ab_oracle",
                        "lower", "upper", "margin_lower", "margin_upper"};
  for (const auto& obj : arr) {
    ASSERT_TRUE(std::getline(csv_in, line));
    const auto fields = split(line, ',');
    ASSERT_EQ(fields.size(), 10u);
    for (int k = 0; k < 9; ++k)
      EXPECT_EQ(std::stod(fields[k]), obj.at(keys[k]).get<double>()) << keys[k];
    EXPECT_EQ(fields[9] == "true", obj.at("satisfied").get<bool>());
  }
}

TEST(Json, SweepRowCarriesAllColumns) {
  const auto rows = quantum_sweep(CanonicalState::PsiMinus, 4);
  const nlohmann::json obj = to_json(rows.front());
  for (const char* key : {"delta", "av_a", "av_b", "av_ab_paper", "av_ab_oracle", "lower",
                          "upper", "margin_lower", "margin_upper", "satisfied"})
    EXPECT_TRUE(obj.contains(key)) << key;
}

TEST(Json, EstimateReportSerializationIsStable) {
  const EstimateReport r{{0.5, -0.5, 0.25}, 0.01, 0.02, 0.03, 1000, 42};
  EXPECT_EQ(to_json(r).dump(), to_json(r).dump());
  EXPECT_EQ(to_json(r)["samples"].get<std::int64_t>(), 1000);
  EXPECT_EQ(to_json(r)["seed"].get<std::uint64_t>(), 42u);
}
