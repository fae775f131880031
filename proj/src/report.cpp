#include "sublat/report.hpp"

#include <iomanip>
#include <sstream>

#include "sublat/errors.hpp"

namespace sublat {

IdealReport report_ideal(const Ideal& ideal, std::int64_t factor_cap) {
  if (ideal.is_unit()) throw DomainError("the whole ring " + ideal.ring().descriptor() + " is not a proper ideal");
  IdealReport r{ideal, {}};
  for (auto p : kAllIdealPredicates) r.flags.emplace_back(p, classify_ideal(ideal, p, factor_cap));
  return r;
}

Json to_json(const Element& e) { return Json(e.residues); }

namespace {

Json generators_json(const std::vector<Element>& gens) {
  Json arr = Json::array();
  for (const auto& g : gens) arr.push_back(to_json(g));
  return arr;
}

std::string generators_text(const std::vector<Element>& gens) {
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + element_to_string(gens[i]);
  return s + ">";
}

std::vector<Index> covers(const SubmoduleLattice& lat, Index i) {
  std::vector<Index> out;
  const auto& down = lat.below(i);
  for (auto j = down.find_first(); j != IndexSet::npos; j = down.find_next(j)) {
    if (j == i) continue;
    bool direct = true;
    for (auto k = down.find_next(j); k != IndexSet::npos && direct; k = down.find_next(k))
      if (k != i && lat.leq(static_cast<Index>(j), static_cast<Index>(k))) direct = false;
    if (direct) out.push_back(static_cast<Index>(j));
  }
  return out;
}

const char* yes(bool b) { return b ? "true" : "false"; }

}  // namespace

Json to_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (auto g : ideal.gens()) gens.push_back(g);
  return Json{{"text", ideal.to_string()}, {"generators", gens}};
}

Json to_json(const IdealReport& report) {
  Json flags = Json::object();
  for (const auto& [p, v] : report.flags) flags[std::string(to_string(p))] = v;
  return Json{{"ring", report.ideal.ring().descriptor()}, {"ideal", to_json(report.ideal)}, {"flags", flags}};
}

Json to_json(const ClassificationReport& report) {
  Json mf = Json::object();
  mf["distributive"] = report.module_flags.distributive;
  mf["multiplication"] = report.module_flags.multiplication;
  mf["comultiplication"] = report.module_flags.comultiplication;
  mf["fully_pure"] = report.module_flags.fully_pure;
  mf["strong_comultiplication"] =
      report.module_flags.strong_comultiplication ? Json(*report.module_flags.strong_comultiplication) : Json();

  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json flags = Json::object();
    for (std::size_t f = 0; f < kRowFlagCount; ++f) flags[std::string(to_string(static_cast<RowFlag>(f)))] = row.flags[f];
    rows.push_back(Json{{"id", row.id},
                        {"order", row.order},
                        {"label", generators_text(row.generators)},
                        {"generators", generators_json(row.generators)},
                        {"flags", flags},
                        {"colon", to_json(row.colon)},
                        {"annihilator", to_json(row.annihilator)},
                        {"radical", row.radical}});
  }
  return Json{{"module", report.module},
              {"ring", report.ring},
              {"order", report.order},
              {"exponent", report.exponent},
              {"module_flags", mf},
              {"submodules", rows}};
}

Json lattice_json(const SubmoduleLattice& lattice) {
  Json subs = Json::array();
  for (Index i = 0; i < lattice.size(); ++i)
    subs.push_back(Json{{"id", i},
                        {"order", lattice[i].order()},
                        {"label", submodule_to_string(lattice[i])},
                        {"generators", generators_json(lattice[i].generators())},
                        {"covers", covers(lattice, i)}});
  const auto& m = lattice.module();
  return Json{{"module", m.descriptor()},
              {"ring", m.ring().descriptor()},
              {"order", m.order()},
              {"size", lattice.size()},
              {"submodules", subs}};
}

Json to_json(const TheoremCheckResult& r, bool timing) {
  Json j{{"theorem", r.theorem_id},
         {"module", r.module},
         {"ring", r.ring},
         {"verdict", std::string(to_string(r.verdict))},
         {"candidates", r.candidates}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.counterexample) {
    Json subs = Json::array();
    for (const auto& [label, gens] : r.counterexample->submodules)
      subs.push_back(Json{{"label", label}, {"generators", generators_json(gens)}});
    Json params = Json::object();
    for (const auto& [label, v] : r.counterexample->params) params[label] = v;
    j["counterexample"] = Json{{"claim", r.counterexample->claim}, {"submodules", subs}, {"params", params}};
  }
  if (timing) j["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count();
  return j;
}

namespace {

Json counts_json(const OutcomeCounts& c) {
  return Json{{"pass", c.pass}, {"fail", c.fail}, {"hypothesis_not_met", c.hypothesis_not_met}, {"skipped", c.skipped}};
}

bool listed(const TheoremCheckResult& r, const VerifyOptions& o) {
  return o.details || r.verdict == Outcome::Fail || r.verdict == Outcome::Skipped;
}

std::string witness_text(const Counterexample& ce) {
  std::string s;
  for (const auto& [label, gens] : ce.submodules) s += " " + label + "=" + generators_text(gens);
  for (const auto& [label, v] : ce.params) s += " " + label + "=" + std::to_string(v);
  return s;
}

}  // namespace

Json to_json(const VerifySummary& summary, const VerifyOptions& options) {
  const auto& c = options.config;
  Json families = Json::array();
  if (c.integer_modules) families.push_back("integer");
  if (c.residue_modules) families.push_back("residue");
  if (c.product_modules) families.push_back("product");
  Json config{{"max_order", c.max_order},
              {"max_lattice", c.max_lattice},
              {"families", families},
              {"noncyclic", c.include_noncyclic},
              {"max_factor_order", c.max_factor_order.value_or(c.max_order / 2)},
              {"samples", c.sample_count},
              {"seed", c.seed}};

  std::map<std::string, std::string> statements;
  for (const auto& t : theorem_registry()) statements[t.id] = t.statement;
  Json theorems = Json::array();
  for (const auto& id : summary.theorem_ids)
    theorems.push_back(Json{{"id", id}, {"statement", statements[id]}, {"counts", counts_json(summary.per_theorem.at(id))}});

  Json results = Json::array();
  for (const auto& r : summary.results)
    if (listed(r, options)) results.push_back(to_json(r, options.timing));

  return Json{{"config", config},
              {"instance_count", summary.instance_count},
              {"theorems", theorems},
              {"totals", counts_json(summary.totals)},
              {"results", results}};
}

std::string to_text(const IdealReport& report) {
  std::ostringstream os;
  os << "ideal " << report.ideal.to_string() << " in " << report.ideal.ring().descriptor() << "\n";
  for (const auto& [p, v] : report.flags) os << "  " << std::left << std::setw(26) << to_string(p) << yes(v) << "\n";
  return os.str();
}

std::string to_text(const ClassificationReport& report) {
  static constexpr const char* kShort[kRowFlagCount] = {"irr", "sirr", "2irr", "s2irr", "ss2irr", "prime",
                                                        "prim", "2abs", "2absp", "rad", "pure", "waist"};
  std::ostringstream os;
  os << report.module << " over " << report.ring << ": order " << report.order << ", exponent " << report.exponent
     << ", " << report.rows.size() << " submodules\n";
  const auto& mf = report.module_flags;
  os << "distributive=" << yes(mf.distributive) << " multiplication=" << yes(mf.multiplication)
     << " comultiplication=" << yes(mf.comultiplication) << " fully_pure=" << yes(mf.fully_pure)
     << " strong_comultiplication="
     << (mf.strong_comultiplication ? yes(*mf.strong_comultiplication) : "n/a") << "\n\n";

  os << std::right << std::setw(4) << "id" << std::setw(7) << "order";
  for (auto s : kShort) os << std::setw(7) << s;
  os << "  " << std::left << std::setw(12) << "colon" << std::setw(12) << "annihilator" << std::setw(5) << "rad"
     << "generators\n";
  for (const auto& row : report.rows) {
    os << std::right << std::setw(4) << row.id << std::setw(7) << row.order;
    for (bool f : row.flags) os << std::setw(7) << (f ? "y" : "-");
    os << "  " << std::left << std::setw(12) << row.colon.to_string() << std::setw(12)
       << row.annihilator.to_string() << std::setw(5) << row.radical << generators_text(row.generators) << "\n";
  }
  os << "\nflags: ";
  for (std::size_t f = 0; f < kRowFlagCount; ++f)
    os << (f ? ", " : "") << kShort[f] << "=" << to_string(static_cast<RowFlag>(f));
  os << "\n";
  return os.str();
}

std::string lattice_text(const SubmoduleLattice& lattice) {
  std::ostringstream os;
  os << lattice.module().descriptor() << " over " << lattice.module().ring().descriptor() << ": " << lattice.size()
     << " submodules\n";
  for (Index i = 0; i < lattice.size(); ++i) {
    os << std::right << std::setw(4) << i << "  order " << std::left << std::setw(6) << lattice[i].order()
       << std::setw(28) << generators_text(lattice[i].generators()) << "covers";
    for (auto c : covers(lattice, i)) os << " " << c;
    os << "\n";
  }
  return os.str();
}

std::string to_text(const VerifySummary& summary, const VerifyOptions& options) {
  std::ostringstream os;
  os << summary.instance_count << " instances, " << summary.theorem_ids.size() << " theorems\n\n";
  os << std::left << std::setw(12) << "theorem" << std::right << std::setw(7) << "pass" << std::setw(7) << "fail"
     << std::setw(7) << "hnm" << std::setw(9) << "skipped" << "\n";
  auto line = [&](const std::string& name, const OutcomeCounts& c) {
    os << std::left << std::setw(12) << name << std::right << std::setw(7) << c.pass << std::setw(7) << c.fail
       << std::setw(7) << c.hypothesis_not_met << std::setw(9) << c.skipped << "\n";
  };
  for (const auto& id : summary.theorem_ids) line(id, summary.per_theorem.at(id));
  line("total", summary.totals);

  bool header = false;
  for (const auto& r : summary.results) {
    if (!listed(r, options)) continue;
    if (!header) {
      os << "\n";
      header = true;
    }
    os << r.theorem_id << " " << to_string(r.verdict) << " " << r.module << " over " << r.ring;
    if (r.counterexample) os << ": " << r.counterexample->claim << ";" << witness_text(*r.counterexample);
    if (!r.note.empty()) os << " (" << r.note << ")";
    if (options.timing)
      os << " [" << std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count() << " us]";
    os << "\n";
  }
  return os.str();
}

Json document(const std::vector<std::string>& command, std::string_view kind, Json payload,
              const std::string& timestamp) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"timestamp", timestamp.empty() ? Json() : Json(timestamp)},
              {"kind", std::string(kind)},
              {"payload", std::move(payload)}};
}

}  // namespace sublat
