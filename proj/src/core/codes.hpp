#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/words.hpp"

namespace g31 {

// A set of words, kept sorted and unique (canonical order: 0 < 1 < #).
using Code = std::vector<Word>;

Code make_code(std::vector<Word> ws);  // sorts, dedupes

bool is_prefix_code(std::span<const Word> ws);
// Maximal over {0,1,#}: prefix code whose tree is complete.
bool is_maximal_prefix_code(std::span<const Word> ws);
// Maximal over the sub-alphabet {0,1}; all words must be #-free.
bool is_maximal_binary_code(std::span<const Word> ws);

// All strict prefixes of members, as a sorted set.
Code strict_prefixes(std::span<const Word> ws);

struct Mod3Card {
  size_t n0 = 0, n1 = 0, n2 = 0;
  bool operator==(const Mod3Card&) const = default;
};
Mod3Card mod3_cardinality(std::span<const Word> ws);

// P = P1 ∪ P2# with P1 maximal over {0,1} and P2 = strict prefixes of P1.
// Returns (P1, P2); ShapeError if P is not of that form.
std::pair<Code, Code> endmarker_decompose(const Code& p);

// P1 maximal over {0,1}  ->  P1 ∪ {p# : p strict prefix of P1}, maximal over {0,1,#}.
Code complete_with_endmarkers(const Code& p1);

// Tree-fill completion: returns Q such that Q ∪ pins ∪ complement is a
// maximal prefix code, Q in the region spanned by the pins, every prefix of
// the implicit P is a prefix of Q ∪ pins. If target_size is given, Q is grown
// by splitting its lexicographically least leaf until |Q| = target_size.
Code extend_to_maximal(std::span<const Word> pins, std::span<const Word> complement,
                       std::optional<size_t> target_size = std::nullopt);

// Binary-code leaf rearrangement: returns a maximal binary code with the same
// mod-3 cardinality whose inner tree has (distinct) leaves at depths
// congruent to each requested residue.
Code rearrange_leaves_mod3(const Code& q1, const std::vector<int>& residues);

// Inner-tree leaves of a maximal binary code: words u with {u0, u1} in the code.
std::vector<Word> inner_leaves_binary(const Code& p1);
// Inner-tree leaves over {0,1,#}: words u with {u0, u1, u#} in the code.
std::vector<Word> inner_leaves_full(const Code& p);

// Serialization: one word per line, canonical order.
std::string format_code(const Code& c);
Code parse_code(std::string_view text);

}  // namespace g31
