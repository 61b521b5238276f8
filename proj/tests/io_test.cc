#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "bent/errors.h"
#include "bent/io.h"
#include "bent/rng.h"
#include "bent/verify/suite.h"

namespace {

using namespace bent;

BoolFn random_fn(int n, Xorshift64Star& rng) {
  return BoolFn::from(n, [&](std::uint64_t) { return (rng.next() & 1) != 0; });
}

TEST(Hex, Layout) {
  // bit i = bit (i mod 4) of digit i/4
  BoolFn f(3);
  f.set(0, true);
  f.set(5, true);
  EXPECT_EQ(to_hex(f), "12");
  EXPECT_EQ(from_hex(3, "12"), f);
  BoolFn one(1);
  one.set(1, true);
  EXPECT_EQ(to_hex(one), "2");
  EXPECT_EQ(from_hex(1, "2"), one);
  EXPECT_EQ(to_hex(BoolFn(2).complement()), "f");
  EXPECT_THROW(from_hex(3, "1"), ParseError);
  EXPECT_THROW(from_hex(3, "1g"), ParseError);
  EXPECT_THROW(from_hex(1, "4"), ParseError);
}

TEST(TruthTable, RoundTrip) {
  Xorshift64Star rng(1);
  for (int n = 1; n <= 10; ++n) {
    const BoolFn f = random_fn(n, rng);
    std::stringstream ss;
    write_truth_table(ss, f);
    EXPECT_EQ(read_truth_table(ss), f);
  }
}

TEST(TruthTable, ParseErrorsCarryLines) {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_truth_table(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("n=2\nz\n"), 2);
  EXPECT_EQ(line_of("m=2\n6\n"), 1);
  EXPECT_EQ(line_of("n=2\n"), 2);
  EXPECT_EQ(line_of("n=2\n6\nextra\n"), 3);
  EXPECT_EQ(line_of("\nn=2\n\n6\n"), -1);
}

TEST(Formats, RoundTrips) {
  const VecFn v{2, 2, {0, 3, 1, 2}};
  std::stringstream a;
  write_vecfn(a, v);
  const VecFn v2 = read_vecfn(a);
  EXPECT_EQ(v2.table, v.table);
  EXPECT_EQ(v2.k, 2);

  const Subspace s(5, {3, 12});
  std::stringstream b;
  write_subspace(b, s);
  EXPECT_EQ(read_subspace(b), s);

  const PermTable p{2, {0, 2, 3, 1}};
  std::stringstream c;
  write_perm(c, p);
  EXPECT_EQ(c.str(), "m=2\n0\n2\n3\n1\n");
  EXPECT_EQ(read_perm(c).table, p.table);

  const SubfieldFn q{4, 2, {0, 1, 1, 0}};
  std::stringstream d;
  write_subfield_fn(d, q);
  const SubfieldFn q2 = read_subfield_fn(d);
  EXPECT_EQ(q2.k, 2);
  EXPECT_EQ(q2.table, q.table);

  std::istringstream bad("n=2 k=1\n0\n1\n2\n0\n");
  EXPECT_THROW(read_vecfn(bad), ParseError);
}

TEST(Formats, SpectrumCsv) {
  BoolFn f(2);
  f.set(3, true);
  std::ostringstream os;
  write_spectrum_csv(os, walsh_transform(f));
  EXPECT_EQ(os.str(), "b,W\n0,2\n1,2\n2,2\n3,-2\n");
}

TEST(Report, TextAndJson) {
  const BoolFn f = BoolFn::from(4, [](std::uint64_t x) { return ((x & 3) == 3) ^ ((x >> 2) == 3); });
  const DecompositionReport r = classify_decomposition(f, 1, 2);
  std::ostringstream os;
  write_report(os, r);
  EXPECT_NE(os.str().find("classification: AllBent"), std::string::npos);
  const auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["classification"], "AllBent");
  EXPECT_EQ(j["restrictions"].size(), 4u);
  const ScanSummary s = scan_decompositions(f);
  std::ostringstream csv;
  write_scan_csv(csv, s);
  EXPECT_EQ(csv.str().rfind("span_basis1,span_basis2,class\n", 0), 0u);
}

TEST(Files, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "bent_io_test.tt";
  Xorshift64Star rng(2);
  const BoolFn f = random_fn(8, rng);
  save_truth_table(path, f);
  EXPECT_EQ(load_truth_table(path), f);
  std::filesystem::remove(path);
  EXPECT_THROW(load_truth_table(path), ParseError);
}

TEST(SuiteOutput, Formatting) {
  verify::CriterionResult r;
  r.id = 3;
  r.name = "x";
  r.pass = true;
  r.seconds = 1.5;
  r.budget_seconds = 10;
  const std::string line = verify::format_result(r);
  EXPECT_EQ(line.rfind("PASS C03", 0), 0u);
  const auto j = nlohmann::json::parse(verify::results_json({r}));
  EXPECT_EQ(j[0]["id"], 3);
  EXPECT_THROW(verify::run_suite({verify::Level::kFast, 0, {13}}), ParameterError);
}

}  // namespace
