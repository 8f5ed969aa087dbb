#pragma once

#include <cstdint>

#include "core/circuit.hpp"
#include "core/table.hpp"

namespace g31 {

// Small deterministic generator so test streams are identical across
// platforms and library versions.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ^ 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
  bool coin() { return next() & 1; }
};

// Random maximal binary code with k leaves.
Code random_binary_code(Rng& rng, int k);

// Random element of G31_01_Sharp (mod3 = false) or G31_Mod3_01_Sharp with a
// bit part of k words. fix_zero makes everything under 0 pointwise fixed.
Table random_sharp_table(Rng& rng, int k, bool mod3, bool fix_zero = false);

// Random circuit with at most the given size and input count.
Circuit random_circuit(Rng& rng, int max_size, int max_inputs);

// A differently wired circuit computing the same function (ID padding and
// commutative input swaps).
Circuit equivalent_variant(Rng& rng, const Circuit& c);
// A mutated circuit (AND/OR flip or NOT insertion); usually inequivalent.
Circuit mutated_variant(Rng& rng, const Circuit& c);

GenWord random_genword(Rng& rng, size_t len, bool with_kappa);

}  // namespace g31
