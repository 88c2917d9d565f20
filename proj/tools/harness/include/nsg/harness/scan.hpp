#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsg/harness/report.hpp"

namespace nsg::harness {

enum class Family { Random, Arithmetic, Gluing, Lifting };

std::optional<Family> parse_family(std::string_view name);

struct ScanOptions {
  Family family = Family::Random;
  std::uint64_t seed = 0;
  /// Absent: 100 instances for the sampled families, the full grid for arithmetic.
  std::optional<std::size_t> limit;
  Integer max_multiplicity = 12;
  Integer max_step = 5;  // arithmetic family: d ranges over [1, max_step]
  Integer max_k = 7;     // lifting family
  bool verify = false;
  bool toric = false;    // attach the closure verdict when e >= 3
  Integer timestamp = 0;
  unsigned workers = 1;
};

struct ScanSummary {
  std::size_t records = 0;
  std::size_t gorenstein = 0;
  std::size_t nearly_gorenstein = 0;
  std::size_t question_holds = 0;
  std::size_t verification_failures = 0;
};

/// Records sorted by id (stable, so equal ids keep generation order).
std::vector<ScanRecord> run_scan(const ScanOptions& options);

ScanSummary summarize(const std::vector<ScanRecord>& records);
std::string format_summary(const ScanSummary& summary);

}  // namespace nsg::harness
