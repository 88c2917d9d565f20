#include "nsg/harness/hunt.hpp"

#include <algorithm>

#include "nsg/harness/parallel.hpp"

namespace nsg::harness {

std::vector<NumericalSemigroup> genus_tree_children(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> children;
  const auto& gens = s.generators();
  const Integer f = s.frobenius();
  for (Integer x : gens) {
    if (x <= f) continue;
    std::vector<Integer> candidate;
    for (Integer g : gens) {
      if (g != x) candidate.push_back(g);
      candidate.push_back(x + g);
    }
    candidate.push_back(2 * x);
    candidate.push_back(3 * x);
    // Anything not minimal in S \ {x} is dropped by the constructor.
    children.push_back(NumericalSemigroup::from_generators(candidate));
  }
  return children;
}

HuntResult run_hunt(Integer max_genus, unsigned workers) {
  if (max_genus < 1) throw Error(ErrorCode::InvalidArgument, "max-genus must be at least 1");
  HuntResult result;
  std::vector<NumericalSemigroup> level{NumericalSemigroup::from_generators({1})};
  for (Integer genus = 1; genus <= max_genus; ++genus) {
    std::vector<std::vector<NumericalSemigroup>> kids(level.size());
    parallel_for(level.size(), workers, [&](std::size_t i) { kids[i] = genus_tree_children(level[i]); });
    std::vector<NumericalSemigroup> next;
    for (auto& k : kids) next.insert(next.end(), k.begin(), k.end());
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.generators() < b.generators(); });

    std::vector<HuntRow> rows(next.size());
    parallel_for(next.size(), workers, [&](std::size_t i) {
      const auto& s = next[i];
      const auto profile = gap_profile(s);
      const auto check = gap_bound_check(s);
      rows[i] = {s.generators(), profile.genus, profile.frobenius, profile.non_gap_count,
                 check.residue, check.gap_bound, check.slack};
    });
    result.counts.push_back(rows.size());
    for (auto& row : rows) {
      ++result.slack_histogram[row.slack];
      if (row.slack < 0) result.violations.push_back(row);
      result.rows.push_back(std::move(row));
    }
    level = std::move(next);
  }
  return result;
}

json to_json(const HuntRow& row) {
  return json{{"id", stable_id(row.generators)},
              {"generators", row.generators},
              {"genus", row.genus},
              {"frobenius", row.frobenius},
              {"non_gap_count", row.non_gap_count},
              {"residue", row.residue},
              {"gap_bound", row.gap_bound},
              {"slack", row.slack}};
}

}  // namespace nsg::harness
