#include "sublat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ctime>
#include <optional>

#include "sublat/errors.hpp"
#include "sublat/report.hpp"

namespace sublat::cli {

namespace {

struct Global {
  std::string format = "text";
  Limits limits;
  bool timestamp = false;
};

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void diagnostic(std::ostream& err, std::string_view kind, int code, std::string_view message) {
  Json j{{"error", std::string(kind)}, {"exit_code", code}, {"message", std::string(message)}};
  err << j.dump() << "\n";
}

void emit(std::ostream& out, const Global& g, const std::vector<std::string>& args, std::string_view kind,
          Json payload, const std::string& text) {
  if (g.format == "json")
    out << document(args, kind, std::move(payload), g.timestamp ? utc_now() : std::string()).dump(2) << "\n";
  else
    out << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Submodule lattice classifier and theorem checker", "sublat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "sublat 1.0");

  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--order-cap", g.limits.order_cap, "Largest module order")->capture_default_str();
  app.add_option("--lattice-cap", g.limits.lattice_cap, "Largest submodule lattice")->capture_default_str();
  app.add_option("--factor-cap", g.limits.factor_cap, "Largest integer to factor")->capture_default_str();
  app.add_flag("--timestamp", g.timestamp, "Record UTC time in JSON documents");

  std::string ring_text;
  std::vector<std::int64_t> gens;
  auto* ci = app.add_subcommand("classify-ideal", "The six ideal predicates for one ideal");
  ci->add_option("--ring", ring_text, "Ring: Z, Z<n> or Z<n>*Z<m>*...")->required();
  ci->add_option("--gen", gens, "Generator per ring factor, comma-separated")->required()->delimiter(',');

  std::string module_text;
  std::string module_ring;
  auto* cl = app.add_subcommand("classify", "Classify every submodule of a module");
  cl->add_option("--module", module_text, "Module, e.g. Z6, Z4xZ2, Z4|Z9")->required();
  cl->add_option("--ring", module_ring, "Ring (default: Z, or the product of block exponents)");

  auto* la = app.add_subcommand("lattice", "List the submodule lattice");
  la->add_option("--module", module_text, "Module")->required();
  la->add_option("--ring", module_ring, "Ring");

  std::string theorem;
  bool all = false;
  VerifyOptions vo;
  unsigned threads = 1;
  auto* ve = app.add_subcommand("verify", "Check theorems over generated instances");
  auto* th = ve->add_option("--theorem", theorem, "Theorem id");
  ve->add_flag("--all", all, "Every registered theorem")->excludes(th);
  ve->add_option("--max-order", vo.config.max_order, "Largest instance order")->capture_default_str();
  ve->add_flag("--noncyclic", vo.config.include_noncyclic, "Include two-factor noncyclic groups");
  ve->add_option("--seed", vo.config.seed, "Seed for sampled instances")->capture_default_str();
  ve->add_option("--samples", vo.config.sample_count, "Number of sampled instances")->capture_default_str();
  ve->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  ve->add_flag("--details", vo.details, "List every result, not only failures and skips");
  ve->add_flag("--timing", vo.timing, "Report elapsed time per result");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    diagnostic(err, "usage", kUsage, e.what());
    return kUsage;
  }

  try {
    if (ci->parsed()) {
      const Ring ring = parse_ring(ring_text);
      const auto report = report_ideal(Ideal(ring, gens), g.limits.factor_cap);
      emit(out, g, args, "ideal", to_json(report), to_text(report));
    } else if (cl->parsed() || la->parsed()) {
      const auto module = parse_module(module_text, module_ring, g.limits);
      const auto lattice = SubmoduleLattice::enumerate(module, g.limits.lattice_cap);
      if (cl->parsed()) {
        const auto report = classify_all(lattice);
        emit(out, g, args, "classification", to_json(report), to_text(report));
      } else {
        emit(out, g, args, "lattice", lattice_json(lattice), lattice_text(lattice));
      }
    } else if (ve->parsed()) {
      if (!all && theorem.empty()) throw UsageError("verify needs --theorem <id> or --all");
      vo.config.limits = g.limits;
      vo.config.max_lattice = g.limits.lattice_cap;
      std::vector<const Theorem*> chosen;
      if (all)
        for (const auto& t : theorem_registry()) chosen.push_back(&t);
      else
        chosen.push_back(&find_theorem(theorem));
      const auto instances = generate_instances(vo.config);
      const auto summary = verify_theorems(chosen, instances, vo.config.max_lattice, threads);
      emit(out, g, args, "verification", to_json(summary, vo), to_text(summary, vo));
      if (summary.totals.fail > 0) return kTheoremFailure;
    }
    return kOk;
  } catch (const UsageError& e) {
    diagnostic(err, "usage", kUsage, e.what());
    return kUsage;
  } catch (const DomainError& e) {
    diagnostic(err, "domain", kDomain, e.what());
    return kDomain;
  } catch (const ResourceError& e) {
    diagnostic(err, "resource", kResource, e.what());
    return kResource;
  } catch (const std::exception& e) {
    diagnostic(err, "internal", kInternal, e.what());
    return kInternal;
  }
}

}  // namespace sublat::cli
