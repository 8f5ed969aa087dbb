#pragma once

#include "core/circuit.hpp"

namespace g31 {

struct WitnessConfig {
  size_t ell = 0;  // max code-word length per table token; 0 = per-token auto
  size_t cap = 21; // longest bit prefix the exhaustive search will try
};

struct Verdict {
  enum Kind { IdentityProven, NotIdentity, IdentityUpTo } kind;
  Word witness;     // NotIdentity
  size_t bound = 0; // IdentityUpTo
  bool operator==(const Verdict&) const = default;
};

std::string format_verdict(const Verdict& v);

// κ-free table decider.
bool wp_table(const GenWord& w);

// HNN normal form over the table dictionary plus K321: scans right to left
// keeping [scanned] = g·κ₃₂₁^e. The word is the identity iff e = 0 and g is.
struct NormalForm {
  Table g;
  int e = 0;
};
NormalForm wp_normal_form(const GenWord& w);

// Witness-bound decider; probes bit words x with x# as argument. The
// complete bound is L* = 3N+1 with N = Σ ℓ(token) over table tokens plus
// 6 · (κ letter count).
size_t witness_bound(const GenWord& w, const WitnessConfig& cfg);
Verdict wp_bounded_witness(const GenWord& w, const WitnessConfig& cfg = {});

// φ fixes every point of 0·{0,1,#}* on which it is defined.
bool is_pfix_zero(const Table& phi);

// An element of pFix({1,#}·A*) ∩ G31_Mod3_01_Sharp that fixes the x-ideal
// and moves y (resp. a point under y). x, y must be prefix-incomparable and
// both in 0{0,1}* or both in 0{0,1}*#.
Table build_separator(const Word& x, const Word& y);

// nullopt iff is_pfix_zero(g); otherwise a witness h ∈ pFix({1,#}A*) with
// g·h ≠ h·g (verified on tables).
std::optional<Table> find_noncommuting_witness(const Table& g);

enum class EquivMode { Oracle, Group, Both };

struct EquivResult {
  bool equivalent;
  std::vector<bool> oracle_witness;  // distinguishing input (oracle side)
  Word group_witness;                // non-fixed 0-region point (group side)
};
EquivResult circuit_equiv(const Circuit& c1, const Circuit& c2, EquivMode mode);

}  // namespace g31
