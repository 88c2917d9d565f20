#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsg/constructions.hpp"
#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/toric.hpp"

namespace nsg::harness {

using json = nlohmann::ordered_json;

/// 16 hex digits of FNV-1a over the comma-joined sorted generators.
std::string stable_id(std::span<const Integer> generators);

json to_json(const RelativeIdeal& ideal);
json to_json(const Binomial& b);
json to_json(const MonomialOrder& order, bool homogenized);
json to_json(const GroebnerBasis& gb, bool homogenized = false);
json to_json(const ClosureVerdict& verdict);
json to_json(const PredictedInvariants& predicted);
json verification_summary(const VerificationOutcome& outcome);

/// Invariant block shared by `info --json` and scan records: gap profile,
/// pseudo-Frobenius numbers, trace report and, optionally, the closure verdict.
json invariants_json(const NumericalSemigroup& s, const std::optional<ClosureVerdict>& closure);

/// One JSONL row of a scan.
struct ScanRecord {
  std::string id;
  std::vector<Integer> generators;
  json provenance;
  json invariants;
  std::optional<json> verification;
  Integer timestamp = 0;
  std::uint64_t seed = 0;
};

json to_json(const ScanRecord& record);
ScanRecord record_from_json(const json& j);

json provenance_explicit();
json provenance_random();
json provenance_arithmetic(Integer n1, Integer d, Integer e);
json provenance_gluing(const GluingSpec& spec);
json provenance_lifting(const NumericalSemigroup& parent, Integer k);

std::string join(std::span<const Integer> values, std::string_view sep = ", ");

}  // namespace nsg::harness
