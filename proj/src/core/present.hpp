#pragma once

#include "core/table.hpp"

namespace g31 {

// Finite generating set of bounded table-size, closed under inverse.
struct GeneratorSet {
  GroupTag tag;
  size_t bound;
  std::vector<Table> members;
  std::vector<int> inverse_id;  // inverse_id[i] = id of members[i]⁻¹

  int find(const Table& t) const;  // -1 if absent
  // For the mod-3 tag sub-threshold factors are adopted as opaque leaf
  // generators on demand.
  int find_or_add(const Table& t);
};

// All canonical tables of the tag's shape with table-size ≤ bound.
// Supported tags: G31_01_Sharp, G31_Mod3_01_Sharp.
GeneratorSet enumerate_generators(GroupTag tag, size_t bound);

struct Factorization {
  std::vector<int> ids;        // composite (leftmost applied last) equals φ
  size_t max_intermediate = 0; // table-size of the refined factor chain
};

// Higman-style factorization of φ over the set; every inserted row has at
// most ‖φ‖ columns. For the mod-3 tag the recursion stops at table-size 61
// and records sub-threshold tables as new generators.
Factorization factor(const Table& phi, GeneratorSet& gens);

// Composite of generator ids, for round-trip checks.
Table compose_ids(const GeneratorSet& gens, const std::vector<int>& ids);

std::string format_generator_set(const GeneratorSet& g);

}  // namespace g31
