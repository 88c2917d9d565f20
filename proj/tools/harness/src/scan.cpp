#include "nsg/harness/scan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nsg/harness/parallel.hpp"
#include "nsg/harness/random.hpp"

namespace nsg::harness {

std::optional<Family> parse_family(std::string_view name) {
  if (name == "random") return Family::Random;
  if (name == "arithmetic") return Family::Arithmetic;
  if (name == "gluing") return Family::Gluing;
  if (name == "lifting") return Family::Lifting;
  return std::nullopt;
}

namespace {

struct Instance {
  NumericalSemigroup semigroup;
  json provenance;
  std::optional<PredictedInvariants> predicted;
  bool closure = false;
};

std::vector<Instance> generate(const ScanOptions& o) {
  constexpr std::size_t kDefaultLimit = 100;
  std::vector<Instance> out;
  if (o.family == Family::Arithmetic) {
    const std::size_t cap = o.limit.value_or(SIZE_MAX);
    for (Integer n1 = 3; n1 <= o.max_multiplicity; ++n1) {
      for (Integer d = 1; d <= o.max_step; ++d) {
        if (std::gcd(n1, d) != 1) continue;
        for (Integer e = 3; e <= n1; ++e) {
          if (out.size() >= cap) return out;
          out.push_back({arithmetic_semigroup(n1, d, e), provenance_arithmetic(n1, d, e), std::nullopt, true});
        }
      }
    }
    return out;
  }

  const std::size_t n = o.limit.value_or(kDefaultLimit);
  Rng rng(o.seed);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (o.family) {
      case Family::Random: {
        auto s = random_semigroup(rng, 3, std::max<Integer>(3, o.max_multiplicity));
        out.push_back({s, provenance_random(), std::nullopt, o.toric});
        break;
      }
      case Family::Gluing: {
        auto spec = random_gluing_spec(rng, o.max_multiplicity);
        auto predicted = glued_invariants(spec);
        out.push_back({predicted.built, provenance_gluing(spec), predicted, o.toric});
        break;
      }
      case Family::Lifting: {
        auto [s, k] = random_lifting(rng, o.max_multiplicity, o.max_k);
        auto predicted = lifted_invariants(s, k);
        out.push_back({predicted.built, provenance_lifting(s, k), predicted, o.toric});
        break;
      }
      case Family::Arithmetic:
        break;
    }
  }
  return out;
}

}  // namespace

std::vector<ScanRecord> run_scan(const ScanOptions& o) {
  const auto instances = generate(o);
  std::vector<ScanRecord> records(instances.size());
  parallel_for(instances.size(), o.workers, [&](std::size_t i) {
    const auto& inst = instances[i];
    const auto& s = inst.semigroup;
    std::optional<ClosureVerdict> closure;
    if (inst.closure && s.embedding_dimension() >= 3) closure = projective_ng_verdict(s);
    ScanRecord& r = records[i];
    r.id = stable_id(s.generators());
    r.generators = s.generators();
    r.provenance = inst.provenance;
    r.invariants = invariants_json(s, closure);
    if (o.verify && inst.predicted) r.verification = verification_summary(verify_construction(*inst.predicted, s));
    r.timestamp = o.timestamp;
    r.seed = o.seed;
  });
  std::stable_sort(records.begin(), records.end(),
                   [](const ScanRecord& a, const ScanRecord& b) { return a.id < b.id; });
  return records;
}

ScanSummary summarize(const std::vector<ScanRecord>& records) {
  ScanSummary s;
  s.records = records.size();
  for (const auto& r : records) {
    if (r.invariants.at("gorenstein").get<bool>()) ++s.gorenstein;
    if (r.invariants.at("nearly_gorenstein").get<bool>()) ++s.nearly_gorenstein;
    if (r.invariants.at("question_holds").get<bool>()) ++s.question_holds;
    if (r.verification && !r.verification->at("verified").get<bool>()) ++s.verification_failures;
  }
  return s;
}

std::string format_summary(const ScanSummary& s) {
  std::ostringstream os;
  os << "records: " << s.records << ", gorenstein: " << s.gorenstein
     << ", nearly_gorenstein: " << s.nearly_gorenstein << ", question_holds: " << s.question_holds
     << ", verification_failures: " << s.verification_failures;
  return os.str();
}

}  // namespace nsg::harness
