#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "sublat/errors.hpp"
#include "sublat/harness.hpp"
#include "sublat/report.hpp"

using namespace sublat;

namespace {

std::vector<std::string> descriptors(const std::vector<ModulePtr>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m->descriptor() + " over " + m->ring().descriptor());
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

InstanceConfig suite(std::int64_t max_order, bool noncyclic) {
  InstanceConfig cfg;
  cfg.max_order = max_order;
  cfg.include_noncyclic = noncyclic;
  return cfg;
}

// "Every proper submodule is strongly 2-irreducible": false, e.g. in Z30.
Theorem false_theorem() {
  Theorem t;
  t.id = "FALSE";
  t.statement = "every proper submodule is strongly 2-irreducible";
  t.hypothesis_failure = [](InstanceContext& ctx) -> std::optional<std::string> {
    if (ctx.module().order() == 1) return "zero module";
    return std::nullopt;
  };
  t.candidates = [](InstanceContext& ctx, const std::function<bool(const Witness&)>& visit) {
    for (auto n : ctx.proper())
      if (!visit({{{"N", n}}, {}})) return;
  };
  t.violated = [](InstanceContext& ctx, const Witness& w) -> std::optional<std::string> {
    if (ctx.holds(w.sub("N"), SubPredicate::StronglyTwoIrreducible)) return std::nullopt;
    return "N is not strongly 2-irreducible";
  };
  return t;
}

}  // namespace

TEST(Instances, CyclicOnly) {
  InstanceConfig cfg;
  cfg.max_order = 6;
  cfg.residue_modules = false;
  cfg.product_modules = false;
  EXPECT_EQ(descriptors(generate_instances(cfg)),
            (std::vector<std::string>{"Z1 over Z", "Z2 over Z", "Z3 over Z", "Z4 over Z", "Z5 over Z", "Z6 over Z"}));
}

TEST(Instances, NoncyclicAndProductFamilies) {
  EXPECT_TRUE(contains(descriptors(generate_instances(suite(4, true))), "Z2xZ2 over Z"));
  EXPECT_FALSE(contains(descriptors(generate_instances(suite(4, false))), "Z2xZ2 over Z"));
  EXPECT_TRUE(contains(descriptors(generate_instances(suite(36, false))), "Z4 | Z9 over Z4*Z9"));
}

TEST(Instances, DeterministicAndDuplicateFree) {
  auto cfg = suite(40, true);
  cfg.sample_count = 10;
  cfg.seed = 99;
  const auto a = descriptors(generate_instances(cfg));
  const auto b = descriptors(generate_instances(cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::set<std::string>(a.begin(), a.end()).size(), a.size());
  for (const auto& m : generate_instances(cfg)) EXPECT_LE(m->order(), 40u);
}

TEST(Instances, RespectsCaps) {
  auto cfg = suite(5000, false);
  EXPECT_THROW(generate_instances(cfg), ResourceError);
}

TEST(Registry, IdsAndLookup) {
  const auto& reg = theorem_registry();
  EXPECT_EQ(reg.size(), 23u);
  std::set<std::string> ids;
  for (const auto& t : reg) {
    EXPECT_FALSE(t.statement.empty());
    ids.insert(t.id);
  }
  EXPECT_EQ(ids.size(), reg.size());
  EXPECT_EQ(find_theorem("T-COLON").id, "T-COLON");
  EXPECT_THROW(find_theorem("T-NOPE"), UsageError);
}

TEST(Harness, FalseTheoremIsCaughtAndReplays) {
  const auto t = false_theorem();
  const auto results = verify(t, {parse_module("Z30"), parse_module("Z12"), parse_module("Z1")});
  ASSERT_EQ(results.size(), 3u);
  EXPECT_EQ(results[0].verdict, Outcome::Fail);
  EXPECT_EQ(results[1].verdict, Outcome::Pass);
  EXPECT_EQ(results[2].verdict, Outcome::HypothesisNotMet);
  ASSERT_TRUE(results[0].counterexample.has_value());
  EXPECT_EQ(results[0].counterexample->submodules.at(0).second, std::vector<Element>{});
  EXPECT_TRUE(replay(t, results[0]));
  EXPECT_FALSE(replay(t, results[1]));
}

TEST(Harness, SpecificInstances) {
  const auto z30 = parse_module("Z30");
  for (const char* id : {"T-3PRIME", "T-EQ4", "T-COLON", "T-DEC"})
    for (const auto& r : verify(find_theorem(id), {z30})) EXPECT_EQ(r.verdict, Outcome::Pass) << id;
  for (const auto& r : verify(find_theorem("T-DEC"), {parse_module("Z2xZ2")})) EXPECT_EQ(r.verdict, Outcome::Pass);
  const auto lat = SubmoduleLattice::enumerate(z30);
  const auto six = lat.index_of(span(z30, std::vector<Element>{{{6}}}));
  EXPECT_TRUE(classify(lat, six, SubPredicate::StronglyTwoIrreducible).holds);
  EXPECT_EQ(lat.meet(lat.index_of(span(z30, std::vector<Element>{{{2}}})),
                     lat.index_of(span(z30, std::vector<Element>{{{3}}}))),
            six);
}

TEST(Harness, ColonTheoremOnCyclicGroups) {
  InstanceConfig cfg;
  cfg.max_order = 120;
  cfg.residue_modules = false;
  cfg.product_modules = false;
  for (const auto& r : verify("T-COLON", cfg)) EXPECT_NE(r.verdict, Outcome::Fail) << r.module;
}

TEST(Harness, EmptyAndHypothesisOnlySuites) {
  std::vector<const Theorem*> all;
  for (const auto& t : theorem_registry()) all.push_back(&t);
  const auto empty = verify_theorems(all, {});
  EXPECT_EQ(empty.instance_count, 0u);
  EXPECT_EQ(empty.totals.total(), 0u);
  EXPECT_TRUE(empty.results.empty());

  InstanceConfig cfg;
  cfg.max_order = 30;
  cfg.residue_modules = false;
  cfg.product_modules = false;
  const auto prod = verify("T-PROD2", cfg);
  ASSERT_FALSE(prod.empty());
  for (const auto& r : prod) EXPECT_EQ(r.verdict, Outcome::HypothesisNotMet);
}

TEST(Harness, CyclicSuiteHasNoFailures) {
  const auto summary = verify_all(suite(60, false));
  EXPECT_EQ(summary.totals.fail, 0u);
  EXPECT_EQ(summary.totals.skipped, 0u);
  for (const auto& id : summary.theorem_ids) EXPECT_GT(summary.per_theorem.at(id).pass, 0u) << id;
}

TEST(Harness, NoncyclicSuiteCoverageAndKnownCounterexamples) {
  const auto summary = verify_all(suite(60, true));
  for (const auto& id : summary.theorem_ids) {
    EXPECT_GT(summary.per_theorem.at(id).pass + summary.per_theorem.at(id).fail, 0u) << id;
    EXPECT_GT(summary.per_theorem.at(id).hypothesis_not_met, 0u) << id;
  }
  std::set<std::string> failing;
  for (const auto& r : summary.results) {
    if (r.verdict != Outcome::Fail) continue;
    failing.insert(r.theorem_id);
    EXPECT_TRUE(replay(find_theorem(r.theorem_id), r)) << r.theorem_id << " " << r.module;
  }
  EXPECT_EQ(failing, (std::set<std::string>{"T-BASIC-c", "T-EPI"}));
}

TEST(Harness, SmallestCounterexamples) {
  const auto m = parse_module("Z6xZ2");
  for (const char* id : {"T-BASIC-c", "T-EPI"}) {
    const auto r = verify(find_theorem(id), {m});
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].verdict, Outcome::Fail) << id;
    EXPECT_TRUE(replay(find_theorem(id), r[0])) << id;
  }
}

TEST(Harness, ThreadCountDoesNotChangeOutput) {
  auto cfg = suite(30, true);
  VerifyOptions opt{cfg, true, false};
  const auto one = to_json(verify_all(cfg, 1), opt).dump();
  const auto three = to_json(verify_all(cfg, 3), opt).dump();
  EXPECT_EQ(one, three);
  EXPECT_EQ(one, to_json(verify_all(cfg, 1), opt).dump());
}
