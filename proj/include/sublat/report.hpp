#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sublat/classification.hpp"
#include "sublat/harness.hpp"

namespace sublat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

struct IdealReport {
  Ideal ideal;
  std::vector<std::pair<IdealPredicate, bool>> flags;
};

/// All six predicates; DomainError for the whole ring.
IdealReport report_ideal(const Ideal& ideal, std::int64_t factor_cap = kDefaultFactorCap);

struct VerifyOptions {
  InstanceConfig config;
  /// Include every result instead of only failures and skips.
  bool details = false;
  /// Per-result elapsed time (breaks byte-determinism).
  bool timing = false;
};

Json to_json(const Element& e);
Json to_json(const Ideal& ideal);
Json to_json(const IdealReport& report);
Json to_json(const ClassificationReport& report);
Json lattice_json(const SubmoduleLattice& lattice);
Json to_json(const TheoremCheckResult& result, bool timing);
Json to_json(const VerifySummary& summary, const VerifyOptions& options);

std::string to_text(const IdealReport& report);
std::string to_text(const ClassificationReport& report);
std::string lattice_text(const SubmoduleLattice& lattice);
std::string to_text(const VerifySummary& summary, const VerifyOptions& options);

/// The versioned envelope: schema_version, command echo, timestamp (null
/// unless given), kind, payload.
Json document(const std::vector<std::string>& command, std::string_view kind, Json payload,
              const std::string& timestamp = {});

}  // namespace sublat
