#include "nsg/harness/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "nsg/harness/hunt.hpp"
#include "nsg/harness/parallel.hpp"
#include "nsg/harness/report.hpp"
#include "nsg/harness/scan.hpp"

namespace nsg::harness {

std::vector<long long> parse_integer_list(const std::string& text) {
  std::vector<long long> values;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::InvalidArgument, "invalid integer list '" + text + "'");
    item = item.substr(first, last - first + 1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::InvalidArgument, "invalid integer '" + item + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

namespace {

NumericalSemigroup parse_semigroup(const std::string& text) {
  const auto values = parse_integer_list(text);
  std::vector<Integer> gens(values.begin(), values.end());
  return NumericalSemigroup::from_generators(gens);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::optional<ClosureVerdict> closure_if_defined(const NumericalSemigroup& s) {
  if (s.embedding_dimension() < 3) return std::nullopt;
  return projective_ng_verdict(s);
}

void print_closure(std::ostream& out, const NumericalSemigroup& s, const std::optional<ClosureVerdict>& c) {
  if (!c) {
    out << "closure: not applicable (embedding dimension " << s.embedding_dimension() << " < 3)\n";
    return;
  }
  out << "acm: " << yes_no(c->acm) << "\n"
      << "hypothesis: " << yes_no(c->hypothesis) << "\n"
      << "projective_nearly_gorenstein: "
      << (c->projective_ng ? yes_no(*c->projective_ng) : "inconclusive") << "\n";
}

int cmd_info(const std::string& gens, bool as_json, bool toric, std::ostream& out) {
  const auto s = parse_semigroup(gens);
  const auto closure = toric ? closure_if_defined(s) : std::nullopt;
  if (as_json) {
    json j{{"generators", s.generators()}};
    j.update(invariants_json(s, closure));
    if (toric && !closure) j["closure"] = nullptr;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const auto profile = gap_profile(s);
  const auto report = trace_and_residue(s);
  const auto pf = s.is_natural() ? PseudoFrobeniusSet{} : pseudo_frobenius(s);
  out << "generators: " << join(s.generators()) << "\n"
      << "frobenius: " << profile.frobenius << "\n"
      << "gaps: " << join(profile.gaps) << "\n"
      << "genus: " << profile.genus << "\n"
      << "non_gap_count: " << profile.non_gap_count << "\n"
      << "pseudo_frobenius: " << join(pf.elements) << "\n"
      << "type: " << pf.type << "\n"
      << "trace_min_gens: " << join(report.trace_min_gens) << "\n"
      << "residue: " << report.residue << "\n"
      << "missing: " << join(report.missing) << "\n"
      << "gorenstein: " << yes_no(report.gorenstein) << "\n"
      << "nearly_gorenstein: " << yes_no(report.nearly_gorenstein) << "\n"
      << "gap_bound: " << report.gap_bound << "\n"
      << "question_holds: " << yes_no(report.question_holds) << "\n";
  if (toric) print_closure(out, s, closure);
  return kExitOk;
}

int emit_construction(const PredictedInvariants& predicted, bool verify, bool as_json, std::ostream& out,
                      std::ostream& err) {
  std::optional<VerificationOutcome> outcome;
  if (verify) outcome = verify_construction(predicted, predicted.built);
  if (as_json) {
    json j{{"built", predicted.built.generators()}, {"predicted", to_json(predicted)}};
    j["verification"] = outcome ? verification_summary(*outcome) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "built: " << join(predicted.built.generators()) << "\n"
        << "predicted frobenius: " << predicted.frobenius << "\n"
        << "predicted pseudo_frobenius: " << join(predicted.pf) << "\n"
        << "predicted trace_min_gens: " << join(predicted.trace_min_gens) << "\n"
        << "predicted residue: " << predicted.residue << "\n"
        << "predicted gap_bound: " << predicted.gap_bound << "\n";
    if (outcome) {
      out << "verification: " << (outcome->verified ? "confirmed" : "FAILED") << "\n";
    } else {
      out << "verification: skipped\n";
    }
  }
  if (outcome && !outcome->verified) {
    std::string names;
    for (const auto& d : outcome->discrepancies) names += (names.empty() ? "" : ", ") + d;
    err << "verification failed: " << names << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

void print_gb(std::ostream& out, const char* title, const GroebnerBasis& gb, std::string_view h) {
  out << title << " (" << gb.elements.size() << " elements):\n";
  for (const auto& b : gb.elements) out << "  " << to_string(b, h) << "\n";
}

int cmd_toric(const std::string& gens, const std::string& arithmetic, bool as_json, std::ostream& out) {
  std::optional<ArithmeticGb> closed_form;
  NumericalSemigroup s = NumericalSemigroup::from_generators({1});
  if (!arithmetic.empty()) {
    const auto p = parse_integer_list(arithmetic);
    if (p.size() != 3) throw Error(ErrorCode::InvalidArgument, "--arithmetic expects n1,d,e");
    s = arithmetic_semigroup(p[0], p[1], p[2]);
    closed_form = arithmetic_gb(p[0], p[1], p[2]);
  } else if (!gens.empty()) {
    s = parse_semigroup(gens);
  } else {
    throw Error(ErrorCode::InvalidArgument, "toric needs generators or --arithmetic n1,d,e");
  }
  if (s.is_natural()) throw Error(ErrorCode::TrivialSemigroup, "the semigroup is N; its defining ideal is zero");
  const auto gb = toric_groebner_basis(s);
  const auto hgb = homogenized_gb(s);
  const auto closure = closure_if_defined(s);
  if (as_json) {
    json j{{"generators", s.generators()}, {"groebner_basis", to_json(gb)}, {"homogenized", to_json(hgb, true)}};
    j["closure"] = closure ? to_json(*closure) : json(nullptr);
    if (closed_form) {
      json cand = json::array();
      for (const auto& b : closed_form->candidate) cand.push_back(to_json(b));
      j["arithmetic"] = json{{"candidate", cand},
                             {"candidate_accepted", closed_form->candidate_accepted},
                             {"discrepancies", closed_form->discrepancies}};
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "generators: " << join(s.generators()) << "\n";
  print_gb(out, "groebner basis, degrevlex x1 > ... > xe", gb, {});
  print_gb(out, "homogenized basis, x0 last", hgb, "x0");
  print_closure(out, s, closure);
  if (closed_form) {
    out << "closed-form basis: " << (closed_form->candidate_accepted ? "accepted" : "rejected") << "\n";
    for (const auto& d : closed_form->discrepancies) out << "  discrepancy: " << d << "\n";
  }
  return kExitOk;
}

Integer default_timestamp() {
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    Integer v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc{} && ptr == end) return v;
  }
  return 0;
}

int write_lines(const std::vector<json>& rows, const std::string& path, bool append, std::ostream& out,
                std::ostream& err) {
  if (path.empty()) {
    for (const auto& r : rows) out << r.dump() << "\n";
    return kExitOk;
  }
  std::ofstream file(path, append ? std::ios::app : std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  for (const auto& r : rows) file << r.dump() << "\n";
  file.flush();
  if (!file) {
    err << "error: write to '" << path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup invariants, constructions and toric checks", "nsg"};
  app.require_subcommand(1);

  std::string gens, gens2, arithmetic, family, out_path;
  bool as_json = false, toric = false, verify = false, append = false;
  Integer lambda = 0, mu = 0, k = 0, max_genus = 8;
  std::uint64_t seed = 0;
  std::optional<std::size_t> limit;
  std::optional<Integer> timestamp;
  ScanOptions scan;

  auto* info = app.add_subcommand("info", "invariants of one semigroup");
  info->add_option("generators", gens, "comma-separated generators")->required();
  info->add_flag("--json", as_json);
  info->add_flag("--toric", toric, "add the projective closure verdict");

  auto* glue_cmd = app.add_subcommand("glue", "gluing of two semigroups");
  glue_cmd->add_option("left", gens, "generators of the first factor")->required();
  glue_cmd->add_option("right", gens2, "generators of the second factor")->required();
  glue_cmd->add_option("--lambda", lambda)->required();
  glue_cmd->add_option("--mu", mu)->required();
  glue_cmd->add_flag("--verify", verify);
  glue_cmd->add_flag("--json", as_json);

  auto* lift_cmd = app.add_subcommand("lift", "k-lifting of a semigroup");
  lift_cmd->add_option("generators", gens)->required();
  lift_cmd->add_option("-k", k)->required();
  lift_cmd->add_flag("--verify", verify);
  lift_cmd->add_flag("--json", as_json);

  auto* toric_cmd = app.add_subcommand("toric", "Groebner bases of the defining ideal");
  toric_cmd->add_option("generators", gens);
  toric_cmd->add_option("--arithmetic", arithmetic, "n1,d,e for an arithmetic sequence");
  toric_cmd->add_flag("--json", as_json);

  auto* scan_cmd = app.add_subcommand("scan", "seeded family scan to JSONL");
  scan_cmd->add_option("family", family, "random | arithmetic | gluing | lifting")->required();
  scan_cmd->add_option("--seed", seed);
  scan_cmd->add_option("--limit", limit);
  scan_cmd->add_option("--max-multiplicity", scan.max_multiplicity);
  scan_cmd->add_option("--max-step", scan.max_step);
  scan_cmd->add_option("--max-k", scan.max_k);
  scan_cmd->add_option("--out", out_path);
  scan_cmd->add_option("--timestamp", timestamp);
  scan_cmd->add_flag("--verify", scan.verify);
  scan_cmd->add_flag("--toric", scan.toric);
  scan_cmd->add_flag("--append", append, "append instead of truncating --out");

  auto* hunt_cmd = app.add_subcommand("hunt", "genus-tree search for res > g - n");
  hunt_cmd->add_option("--max-genus", max_genus);
  hunt_cmd->add_option("--seed", seed, "accepted for uniformity; the tree walk is deterministic");
  hunt_cmd->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (info->parsed()) return cmd_info(gens, as_json, toric, out);
    if (glue_cmd->parsed()) {
      GluingSpec spec{parse_semigroup(gens), parse_semigroup(gens2), lambda, mu};
      return emit_construction(glued_invariants(spec), verify, as_json, out, err);
    }
    if (lift_cmd->parsed()) {
      return emit_construction(lifted_invariants(parse_semigroup(gens), k), verify, as_json, out, err);
    }
    if (toric_cmd->parsed()) return cmd_toric(gens, arithmetic, as_json, out);
    if (scan_cmd->parsed()) {
      const auto f = parse_family(family);
      if (!f) throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
      scan.family = *f;
      scan.seed = seed;
      scan.limit = limit;
      scan.timestamp = timestamp.value_or(default_timestamp());
      scan.workers = worker_count();
      const auto records = run_scan(scan);
      std::vector<json> rows;
      rows.reserve(records.size());
      for (const auto& r : records) rows.push_back(to_json(r));
      if (int rc = write_lines(rows, out_path, append, out, err); rc != kExitOk) return rc;
      (out_path.empty() ? err : out) << format_summary(summarize(records)) << "\n";
      return kExitOk;
    }
    if (hunt_cmd->parsed()) {
      const auto result = run_hunt(max_genus, worker_count());
      std::vector<json> rows;
      rows.reserve(result.rows.size());
      for (const auto& r : result.rows) rows.push_back(to_json(r));
      if (!out_path.empty()) {
        if (int rc = write_lines(rows, out_path, append, out, err); rc != kExitOk) return rc;
      }
      out << "genus  count\n";
      for (std::size_t g = 0; g < result.counts.size(); ++g) out << g + 1 << "  " << result.counts[g] << "\n";
      out << "slack  count\n";
      for (const auto& [slack, count] : result.slack_histogram) out << slack << "  " << count << "\n";
      out << "violations: " << result.violations.size() << "\n";
      for (const auto& v : result.violations) {
        out << "  <" << join(v.generators) << "> residue " << v.residue << " > gap_bound " << v.gap_bound << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace nsg::harness
