#pragma once

#include <map>
#include <vector>

#include "nsg/harness/report.hpp"

namespace nsg::harness {

struct HuntRow {
  std::vector<Integer> generators;
  Integer genus = 0;
  Integer frobenius = 0;
  Integer non_gap_count = 0;
  Integer residue = 0;
  Integer gap_bound = 0;
  Integer slack = 0;
};

struct HuntResult {
  /// counts[g - 1] = number of semigroups of genus g.
  std::vector<std::size_t> counts;
  std::vector<HuntRow> rows;  // by genus, then generators
  std::vector<HuntRow> violations;
  std::map<Integer, std::size_t> slack_histogram;
};

/// Children of s in the genus tree: s minus x for each minimal generator x > F.
std::vector<NumericalSemigroup> genus_tree_children(const NumericalSemigroup& s);

/// Walks the genus tree from N down to max_genus and checks res <= g - n on
/// every node.
HuntResult run_hunt(Integer max_genus, unsigned workers);

json to_json(const HuntRow& row);

}  // namespace nsg::harness
