#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace amalgenus::cli;
using Json = nlohmann::json;

namespace {

std::string data(const std::string& f) { return std::string(AMALGENUS_TEST_DATA) + "/" + f; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const RunConfig& c) {
  std::ostringstream out, err;
  int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

Result invoke_args(std::vector<std::string> args) {
  args.insert(args.begin(), "amalgenus");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = main_from_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

RunConfig d8_klein(const std::string& command) {
  RunConfig c;
  c.command = command;
  c.g1 = c.g2 = data("d8.json");
  c.h1 = c.h2 = "klein";
  return c;
}

}  // namespace

TEST(Cli, GenusOnD8Klein) {
  auto r = invoke(d8_klein("genus"));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc.at("schema"), "amalgenus/1");
  EXPECT_EQ(doc.at("genus").at("value"), 1);
  EXPECT_EQ(doc.at("iso_classes").at("count"), 2);
  EXPECT_FALSE(doc.at("genus").at("provenance").empty());
}

TEST(Cli, AutOfKleinFile) {
  RunConfig c;
  c.command = "aut";
  c.group = data("klein.json");
  auto r = invoke(c);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("aut_order"), 6);
}

TEST(Cli, OracleSweepCatalogFile) {
  RunConfig c;
  c.command = "oracle-sweep";
  c.catalog = data("small.json");
  auto r = invoke(c);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Json::parse(r.out).at("all_agree").get<bool>());
}

TEST(Cli, OutputIsByteIdentical) {
  for (const auto& cmd : {"genus", "iso-classes", "conditions", "genus-pushout"}) {
    auto a = invoke(d8_klein(cmd));
    auto b = invoke(d8_klein(cmd));
    ASSERT_EQ(a.code, kExitOk) << cmd << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(Cli, AbstractInputAndPolicies) {
  RunConfig c;
  c.command = "genus";
  c.input = data("abstract/v4_transpositions.json");
  c.nplus = "upper";
  auto r = invoke(c);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("genus").at("value"), 2);
  c.nplus = "lower";
  EXPECT_EQ(Json::parse(invoke(c).out).at("genus").at("value"), 1);
  c.nplus = "sideways";
  EXPECT_EQ(invoke(c).code, kExitValidation);

  RunConfig p;
  p.command = "genus-pushout";
  p.input = data("abstract/v4_pushout_pairs.json");
  auto rp = invoke(p);
  ASSERT_EQ(rp.code, kExitOk) << rp.err;
  EXPECT_EQ(Json::parse(rp.out).at("genus_pushout").at("value"), 4);
}

TEST(Cli, ExitCodes) {
  auto bad = d8_klein("genus");
  bad.h1 = "nope";
  EXPECT_EQ(invoke(bad).code, kExitValidation);

  auto mismatch = d8_klein("iso-classes");
  mismatch.h2 = "c4";
  EXPECT_EQ(invoke(mismatch).code, kExitValidation);

  auto budget = d8_klein("genus");
  budget.aut_budget = 1;
  EXPECT_EQ(invoke(budget).code, kExitBudget);

  auto zero = d8_klein("genus");
  zero.aut_budget = 0;
  EXPECT_EQ(invoke(zero).code, kExitValidation);

  RunConfig missing;
  missing.command = "aut";
  missing.group = data("missing.json");
  EXPECT_EQ(invoke(missing).code, kExitValidation);

  auto fmt = d8_klein("genus");
  fmt.format = "xml";
  EXPECT_EQ(invoke(fmt).code, kExitValidation);
}

TEST(Cli, ArgumentParsing) {
  auto r = invoke_args({"genus", "--g1", "D8", "--h1", "klein", "--g2", "D8", "--h2", "klein",
                        "--format", "text"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("genus = 1"), std::string::npos);
  EXPECT_EQ(invoke_args({}).code, kExitValidation);
  EXPECT_EQ(invoke_args({"aut"}).code, kExitValidation);
  EXPECT_EQ(invoke_args({"frobnicate"}).code, kExitValidation);
  EXPECT_EQ(invoke_args({"--help"}).code, kExitOk);
  auto sub = invoke_args({"iso-classes", "--g1", "D8", "--h1", "[0,1,2]", "--g2", "D8", "--h2", "center"});
  EXPECT_EQ(sub.code, kExitValidation);
}
