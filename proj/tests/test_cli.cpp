#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "sublat/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sublat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json parse(const std::string& s) { return nlohmann::ordered_json::parse(s); }

void expect_diagnostic(const Run& r, int code, const std::string& kind) {
  EXPECT_EQ(r.code, code);
  EXPECT_TRUE(r.out.empty());
  ASSERT_FALSE(r.err.empty());
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
  const auto j = parse(r.err);
  EXPECT_EQ(j["error"], kind);
  EXPECT_EQ(j["exit_code"], code);
}

}  // namespace

TEST(Cli, ClassifyIdeal) {
  const auto r = run({"--format", "json", "classify-ideal", "--ring", "Z", "--gen", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r.out);
  EXPECT_EQ(j["schema_version"], "1.0");
  EXPECT_EQ(j["kind"], "ideal");
  EXPECT_TRUE(j["timestamp"].is_null());
  EXPECT_EQ(j["payload"]["flags"]["strongly_two_irreducible"], true);
  EXPECT_EQ(j["payload"]["flags"].size(), 6u);

  const auto prod = run({"--format", "json", "classify-ideal", "--ring", "Z4*Z9", "--gen", "2,3"});
  ASSERT_EQ(prod.code, 0) << prod.err;
  EXPECT_EQ(parse(prod.out)["payload"]["ideal"]["generators"], nlohmann::ordered_json::parse("[2,3]"));
}

TEST(Cli, ClassifyCyclicSix) {
  const auto r = run({"--format", "json", "classify", "--module", "Z6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse(r.out)["payload"]["submodules"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0]["flags"]["strongly_two_irreducible"], true);
  EXPECT_EQ(rows[0]["flags"]["strongly_irreducible"], false);
}

TEST(Cli, TextAndJsonCarrySameVerdicts) {
  const auto json = parse(run({"--format", "json", "classify", "--module", "Z30"}).out)["payload"];
  const auto text = run({"classify", "--module", "Z30"}).out;
  std::istringstream lines(text);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::size_t id;
    std::uint32_t order;
    if (!(fields >> id >> order)) continue;
    const auto& flags = json["submodules"].at(id)["flags"];
    ASSERT_EQ(json["submodules"].at(id)["order"], order);
    std::size_t k = 0;
    for (auto it = flags.begin(); it != flags.end(); ++it, ++k) {
      std::string mark;
      fields >> mark;
      EXPECT_EQ(mark == "y", it.value().get<bool>()) << line << " " << it.key();
    }
    ++rows;
  }
  EXPECT_EQ(rows, json["submodules"].size());

  const auto ideal_json = parse(run({"--format", "json", "classify-ideal", "--ring", "Z", "--gen", "30"}).out);
  const auto ideal_text = run({"classify-ideal", "--ring", "Z", "--gen", "30"}).out;
  for (auto it = ideal_json["payload"]["flags"].begin(); it != ideal_json["payload"]["flags"].end(); ++it) {
    const auto pos = ideal_text.find(" " + it.key() + " ");
    ASSERT_NE(pos, std::string::npos) << it.key();
    const auto value = ideal_text.substr(ideal_text.find_first_not_of(' ', pos + it.key().size() + 1), 4);
    EXPECT_EQ(value == "true", it.value().get<bool>()) << it.key();
  }
}

TEST(Cli, JsonRoundTripsByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"--format", "json", "classify-ideal", "--ring", "Z", "--gen", "12"},
      {"--format", "json", "classify", "--module", "Z6"},
      {"--format", "json", "classify", "--module", "Z4|Z9", "--ring", "Z4*Z9"},
      {"--format", "json", "lattice", "--module", "Z4xZ2"},
      {"--format", "json", "verify", "--theorem", "T-COLON", "--max-order", "20"},
      {"--format", "json", "verify", "--all", "--max-order", "12", "--noncyclic"},
  };
  for (const auto& c : commands) {
    const auto r = run(c);
    ASSERT_TRUE(r.code == 0 || r.code == 4) << r.err;
    EXPECT_EQ(parse(r.out).dump(2) + "\n", r.out);
    EXPECT_EQ(run(c).out, r.out);
  }
}

TEST(Cli, Lattice) {
  const auto r = run({"--format", "json", "lattice", "--module", "Z12"});
  ASSERT_EQ(r.code, 0);
  const auto p = parse(r.out)["payload"];
  EXPECT_EQ(p["size"], 6);
  EXPECT_EQ(p["submodules"][0]["covers"].size(), 0u);
  EXPECT_EQ(p["submodules"][5]["label"], "<1>");
  EXPECT_NE(run({"lattice", "--module", "Z12"}).out.find("6 submodules"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  const auto ok = run({"verify", "--all", "--max-order", "60"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto j = parse(run({"--format", "json", "verify", "--all", "--max-order", "60"}).out);
  EXPECT_EQ(j["payload"]["totals"]["fail"], 0);

  const auto bad = run({"--format", "json", "verify", "--theorem", "T-EPI", "--max-order", "12", "--noncyclic"});
  EXPECT_EQ(bad.code, 4);
  const auto results = parse(bad.out)["payload"]["results"];
  ASSERT_FALSE(results.empty());
  EXPECT_EQ(results[0]["verdict"], "fail");
  EXPECT_TRUE(results[0].contains("counterexample"));
  EXPECT_FALSE(results[0].contains("elapsed_us"));
}

TEST(Cli, ResourceAndCaps) {
  EXPECT_EQ(run({"classify", "--module", "Z2xZ2xZ2xZ2xZ2"}).code, 0);
  expect_diagnostic(run({"classify", "--module", "Z2xZ2xZ2xZ2xZ2xZ2"}), 3, "resource");
  EXPECT_EQ(run({"--lattice-cap", "3000", "lattice", "--module", "Z2xZ2xZ2xZ2xZ2xZ2"}).code, 0);
  expect_diagnostic(run({"--order-cap", "10", "classify", "--module", "Z12"}), 3, "resource");
  expect_diagnostic(run({"--factor-cap", "100", "classify-ideal", "--ring", "Z", "--gen", "1000"}), 3, "resource");
  expect_diagnostic(run({"classify", "--module", "Z8192"}), 3, "resource");
}

TEST(Cli, UsageAndDomainErrors) {
  expect_diagnostic(run({}), 1, "usage");
  expect_diagnostic(run({"frobnicate"}), 1, "usage");
  expect_diagnostic(run({"classify"}), 1, "usage");
  expect_diagnostic(run({"--format", "xml", "classify", "--module", "Z6"}), 1, "usage");
  expect_diagnostic(run({"verify"}), 1, "usage");
  expect_diagnostic(run({"verify", "--theorem", "T-NOPE"}), 1, "usage");
  expect_diagnostic(run({"verify", "--theorem", "T-DEC", "--all"}), 1, "usage");
  expect_diagnostic(run({"classify", "--module", "Z4", "--ring", "Z6"}), 2, "domain");
  expect_diagnostic(run({"classify", "--module", "Q4"}), 1, "usage");
  expect_diagnostic(run({"classify-ideal", "--ring", "Z", "--gen", "1"}), 2, "domain");
  expect_diagnostic(run({"classify-ideal", "--ring", "Z4*Z9", "--gen", "2"}), 2, "domain");
}

TEST(Cli, HelpAndTimestamp) {
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("classify-ideal"), std::string::npos);
  EXPECT_EQ(run({"verify", "--help"}).code, 0);
  const auto stamped = parse(run({"--format", "json", "--timestamp", "classify", "--module", "Z2"}).out);
  EXPECT_TRUE(stamped["timestamp"].is_string());
  const auto timed = parse(run({"--format", "json", "verify", "--theorem", "T-DEC", "--max-order", "6", "--details",
                                "--timing"})
                               .out);
  EXPECT_TRUE(timed["payload"]["results"][0].contains("elapsed_us"));
}
