// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sublat/cli.hpp"
#include "sublat/harness.hpp"
#include "sublat/predicates.hpp"

using namespace sublat;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    ok = false;
    if (notes.size() < 8) notes.push_back(why);
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_s;  // 0 = no bound
  std::function<void(Result&)> body;
};

InstanceConfig default_suite(std::int64_t max_order) {
  InstanceConfig cfg;
  cfg.max_order = max_order;
  cfg.include_noncyclic = true;
  return cfg;
}

ModulePtr cyclic_module(std::int64_t n) { return parse_module("Z" + std::to_string(n)); }

// Runs the theorems over the instances; every theorem must have zero failures
// and at least one instance meeting its hypotheses.
void check_theorems(Result& out, const std::vector<std::string>& ids, const std::vector<ModulePtr>& instances) {
  std::vector<const Theorem*> chosen;
  for (const auto& id : ids) chosen.push_back(&find_theorem(id));
  const auto summary = verify_theorems(chosen, instances);
  for (const auto& id : ids) {
    const auto& c = summary.per_theorem.at(id);
    if (c.fail > 0) out.fail(id + ": " + std::to_string(c.fail) + " failing instance(s)");
    if (c.pass + c.fail == 0) out.fail(id + ": no instance meets the hypotheses");
    if (c.skipped > 0) out.fail(id + ": " + std::to_string(c.skipped) + " skipped instance(s)");
  }
  std::set<std::string> shown;
  for (const auto& r : summary.results) {
    if (r.verdict != Outcome::Fail || !shown.insert(r.theorem_id).second) continue;
    std::string line = "first counterexample for " + r.theorem_id + ": " + r.module + " over " + r.ring;
    if (r.counterexample) {
      line += ", " + r.counterexample->claim;
      for (const auto& [label, gens] : r.counterexample->submodules) {
        line += "; " + label + "=<";
        for (std::size_t i = 0; i < gens.size(); ++i) line += (i ? ", " : "") + element_to_string(gens[i]);
        line += ">";
      }
    }
    out.notes.push_back(line);
  }
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "integer ideals: strong 2-irreducibility fast path vs divisor triples, n <= 1000", 5.0,
       [](Result& out) {
         const Ring z = Ring::integers();
         for (std::int64_t n = 0; n <= 1000; ++n) {
           if (n == 1) continue;
           const bool oracle = oracle::z_strongly_two_irreducible(n);
           if (classify_ideal(Ideal(z, {n}), IdealPredicate::StronglyTwoIrreducible) != oracle)
             out.fail("fast path disagrees with the oracle at n = " + std::to_string(n));
           const bool shape = n == 0 || oracle::primes_of(n).size() <= 2;
           if (oracle != shape) out.fail("oracle set differs from {0, p^t, p^r q^s} at n = " + std::to_string(n));
         }
       }},
      {2, "Z6: zero submodule strongly 2-irreducible, not strongly irreducible", 1.0,
       [](Result& out) {
         const auto lat = SubmoduleLattice::enumerate(cyclic_module(6));
         if (!classify(lat, lat.zero_index(), SubPredicate::StronglyTwoIrreducible).holds)
           out.fail("0 is not strongly 2-irreducible");
         if (classify(lat, lat.zero_index(), SubPredicate::StronglyIrreducible).holds)
           out.fail("0 is strongly irreducible");
       }},
      {3, "Z120: 30Z120 not 2-irreducible; 8Z120 and 15Z120 strongly 2-irreducible", 1.0,
       [](Result& out) {
         const auto m = cyclic_module(120);
         const auto lat = SubmoduleLattice::enumerate(m);
         auto idx = [&](std::int64_t g) { return lat.index_of(span(m, std::vector<Element>{{{g}}})); };
         if (classify(lat, idx(30), SubPredicate::TwoIrreducible).holds) out.fail("30Z120 is 2-irreducible");
         if (!classify(lat, idx(8), SubPredicate::StronglyTwoIrreducible).holds) out.fail("8Z120 is not s2i");
         if (!classify(lat, idx(15), SubPredicate::StronglyTwoIrreducible).holds) out.fail("15Z120 is not s2i");
       }},
      {4, "T-COLON: s2i(N) iff s2i((N:M)) for every proper N of Zn, n <= 120", 10.0,
       [](Result& out) {
         for (std::int64_t n = 1; n <= 120; ++n) {
           const auto lat = SubmoduleLattice::enumerate(cyclic_module(n));
           for (SubmoduleLattice::Index i = 0; i < lat.whole_index(); ++i) {
             const bool sub = classify(lat, i, SubPredicate::StronglyTwoIrreducible).holds;
             const bool ideal = classify_ideal(colon_into(lat[i]), IdealPredicate::StronglyTwoIrreducible);
             if (sub != ideal)
               out.fail("Z" + std::to_string(n) + " " + submodule_to_string(lat[i]) + ": lattice " +
                        (sub ? "true" : "false") + ", colon ideal " + (ideal ? "true" : "false"));
           }
         }
       }},
      {5, "T-ELEM: element criterion equals lattice s2i, default suite up to order 64", 30.0,
       [](Result& out) {
         std::size_t checked = 0;
         for (const auto& m : generate_instances(default_suite(64))) {
           const auto lat = SubmoduleLattice::enumerate(m);
           for (SubmoduleLattice::Index i = 0; i < lat.whole_index(); ++i, ++checked)
             if (classify_via_elements(lat[i]) != classify(lat, i, SubPredicate::StronglyTwoIrreducible).holds)
               out.fail(m->descriptor() + " over " + m->ring().descriptor() + " " + submodule_to_string(lat[i]));
         }
         if (checked == 0) out.fail("no submodules checked");
       }},
      {6, "T-RAD: rad(IN) = rad(N) meet rad(IM), Zn with n <= 60", 10.0,
       [](Result& out) {
         for (std::int64_t n = 1; n <= 60; ++n) {
           const auto m = cyclic_module(n);
           const auto lat = SubmoduleLattice::enumerate(m);
           const auto whole = whole_module(m);
           for (auto d : oracle::divisors_of(n)) {
             const Ideal ideal(Ring::integers(), {d});
             const auto im = lat.index_of(ideal_apply(ideal, whole, IdealAction::Product));
             for (SubmoduleLattice::Index i = 0; i < lat.size(); ++i) {
               const auto in = lat.index_of(ideal_apply(ideal, lat[i], IdealAction::Product));
               if (radical_index(lat, in) != lat.meet(radical_index(lat, i), radical_index(lat, im)))
                 out.fail("Z" + std::to_string(n) + ", I = " + ideal.to_string() + ", N = " +
                          submodule_to_string(lat[i]));
             }
           }
         }
       }},
      {7, "T-DEC: 2-irreducible submodules decompose into at most two irreducibles, default suite", 0.0,
       [](Result& out) { check_theorems(out, {"T-DEC"}, generate_instances(default_suite(60))); }},
      {8, "T-EQ4 and T-PURE3 equivalences, default suite", 0.0,
       [](Result& out) { check_theorems(out, {"T-EQ4", "T-PURE3"}, generate_instances(default_suite(60))); }},
      {9, "T-PROD2 / T-PRODN over product rings, factors of order <= 12", 0.0,
       [](Result& out) {
         InstanceConfig cfg;
         cfg.max_order = 144;
         cfg.max_factor_order = 12;
         cfg.include_noncyclic = true;
         cfg.integer_modules = false;
         cfg.residue_modules = false;
         const auto instances = generate_instances(cfg);
         if (instances.empty()) out.fail("no product-ring instances");
         check_theorems(out, {"T-PROD2", "T-PRODN"}, instances);
       }},
      {10, "T-3PRIME on Z30, Z42, Z70, Z105, Z210; T-MAX2 on the default suite and Z12", 0.0,
       [](Result& out) {
         std::vector<ModulePtr> three;
         for (std::int64_t n : {30, 42, 70, 105, 210}) three.push_back(cyclic_module(n));
         check_theorems(out, {"T-3PRIME"}, three);
         check_theorems(out, {"T-MAX2"}, generate_instances(default_suite(60)));
         const auto z12 = verify(find_theorem("T-MAX2"), {cyclic_module(12)});
         if (z12.at(0).verdict != Outcome::Pass) out.fail("T-MAX2 does not pass on Z12");
       }},
      {11, "T-CHAIN, T-EPI, T-LOC, T-BASIC-a..e, T-MEET, T-2AP, T-DIST, T-3EQ, T-COMULT on the default suite", 0.0,
       [](Result& out) {
         check_theorems(out,
                        {"T-CHAIN", "T-EPI", "T-LOC", "T-BASIC-a", "T-BASIC-b", "T-BASIC-c", "T-BASIC-d",
                         "T-BASIC-e", "T-MEET", "T-2AP", "T-DIST", "T-3EQ", "T-COMULT"},
                        generate_instances(default_suite(60)));
       }},
      {12, "verify --all --max-order 60 --noncyclic: zero failures, byte-deterministic", 60.0,
       [](Result& out) {
         const std::vector<std::string> args = {"--format", "json", "verify", "--all", "--max-order", "60",
                                                "--noncyclic"};
         std::ostringstream first, second, err;
         const int code = cli::run(args, first, err);
         cli::run(args, second, err);
         if (code != 0) out.fail("exit code " + std::to_string(code));
         if (first.str() != second.str()) out.fail("output differs between runs");
         const auto totals = nlohmann::ordered_json::parse(first.str())["payload"]["totals"];
         out.notes.push_back("totals: " + totals.dump());
       }},
  };
  return list;
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    Result out;
    const auto start = Clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s)
      out.fail("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_s) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.number << ": " << (out.ok ? "PASS" : "FAIL") << "  " << c.title << " ("
              << timing << ")\n";
    for (const auto& note : out.notes) std::cout << "    " << note << "\n";
    if (!out.ok) ++failed;
  }
  std::cout << (criteria().size() - failed) << "/" << criteria().size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
