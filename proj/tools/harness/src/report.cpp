#include "nsg/harness/report.hpp"

#include <algorithm>
#include <cstdio>

namespace nsg::harness {

std::string join(std::span<const Integer> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string stable_id(std::span<const Integer> generators) {
  std::vector<Integer> sorted(generators.begin(), generators.end());
  std::sort(sorted.begin(), sorted.end());
  const auto text = join(sorted, ",");
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

json to_json(const RelativeIdeal& ideal) {
  return json{{"head", ideal.head()}, {"conductor", ideal.conductor()}};
}

json to_json(const Binomial& b) {
  return json{{"plus", b.plus.exponents()},
              {"minus", b.minus.exponents()},
              {"homogeneous", b.is_homogeneous()}};
}

json to_json(const MonomialOrder& order, bool homogenized) {
  const auto n = order.variables();
  json names = json::array();
  for (auto v : order.variable_sequence()) {
    names.push_back(homogenized && v + 1 == n ? std::string("x0") : "x" + std::to_string(v + 1));
  }
  const char* kind =
      order.kind() == MonomialOrder::Kind::Degrevlex ? "degrevlex" : "elimination-block";
  json out{{"kind", kind}, {"variable_sequence", names}};
  if (order.block_split()) out["block_split"] = *order.block_split();
  return out;
}

json to_json(const GroebnerBasis& gb, bool homogenized) {
  json elements = json::array();
  for (const auto& b : gb.elements) elements.push_back(to_json(b));
  return json{{"order", to_json(gb.order, homogenized)}, {"elements", elements}};
}

json to_json(const ClosureVerdict& verdict) {
  json out{{"acm", verdict.acm},
           {"hypothesis", verdict.hypothesis},
           {"applicable", verdict.applicable},
           {"affine_ng", verdict.affine_ng}};
  out["projective_ng"] = verdict.projective_ng ? json(*verdict.projective_ng) : json(nullptr);
  return out;
}

json to_json(const PredictedInvariants& predicted) {
  json out{{"provenance", std::string(to_string(predicted.provenance))},
           {"generators", predicted.built.generators()},
           {"frobenius", predicted.frobenius},
           {"pf", predicted.pf},
           {"trace_min_gens", predicted.trace_min_gens},
           {"residue", predicted.residue},
           {"gap_bound", predicted.gap_bound}};
  if (predicted.trace_set) out["trace_set"] = to_json(*predicted.trace_set);
  return out;
}

json verification_summary(const VerificationOutcome& outcome) {
  return json{{"verified", outcome.verified},
              {"discrepancies", outcome.discrepancies},
              {"predicted", to_json(outcome.predicted)}};
}

json invariants_json(const NumericalSemigroup& s, const std::optional<ClosureVerdict>& closure) {
  const auto profile = gap_profile(s);
  const auto report = trace_and_residue(s);
  const auto pf = s.is_natural() ? PseudoFrobeniusSet{} : pseudo_frobenius(s);
  json out{{"frobenius", profile.frobenius},
           {"gaps", profile.gaps},
           {"genus", profile.genus},
           {"non_gap_count", profile.non_gap_count},
           {"pf", pf.elements},
           {"type", pf.type},
           {"trace", to_json(report.trace)},
           {"trace_min_gens", report.trace_min_gens},
           {"residue", report.residue},
           {"missing", report.missing},
           {"gorenstein", report.gorenstein},
           {"nearly_gorenstein", report.nearly_gorenstein},
           {"gap_bound", report.gap_bound},
           {"question_holds", report.question_holds}};
  if (closure) out["closure"] = to_json(*closure);
  return out;
}

json to_json(const ScanRecord& record) {
  json out{{"id", record.id},
           {"generators", record.generators},
           {"provenance", record.provenance},
           {"invariants_json", record.invariants}};
  out["verification"] = record.verification ? *record.verification : json(nullptr);
  out["timestamp"] = record.timestamp;
  out["seed"] = record.seed;
  return out;
}

ScanRecord record_from_json(const json& j) {
  ScanRecord r;
  r.id = j.at("id").get<std::string>();
  r.generators = j.at("generators").get<std::vector<Integer>>();
  r.provenance = j.at("provenance");
  r.invariants = j.at("invariants_json");
  if (!j.at("verification").is_null()) r.verification = j.at("verification");
  r.timestamp = j.at("timestamp").get<Integer>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

json provenance_explicit() { return json{{"kind", "explicit"}}; }
json provenance_random() { return json{{"kind", "random"}}; }

json provenance_arithmetic(Integer n1, Integer d, Integer e) {
  return json{{"kind", "arithmetic"}, {"n1", n1}, {"d", d}, {"e", e}};
}

json provenance_gluing(const GluingSpec& spec) {
  return json{{"kind", "gluing"},
              {"parents", json::array({stable_id(spec.left.generators()), stable_id(spec.right.generators())})},
              {"left", spec.left.generators()},
              {"right", spec.right.generators()},
              {"lambda", spec.lambda},
              {"mu", spec.mu}};
}

json provenance_lifting(const NumericalSemigroup& parent, Integer k) {
  return json{{"kind", "lifting"},
              {"parent", stable_id(parent.generators())},
              {"parent_generators", parent.generators()},
              {"k", k}};
}

}  // namespace nsg::harness
