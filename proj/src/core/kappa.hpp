#pragma once

#include <optional>

#include "core/table.hpp"

namespace g31 {

struct GammaTok {
  int idx;   // 0..3
  int sign;  // +1 / -1
  bool operator==(const GammaTok&) const = default;
};
using GammaWord = std::vector<GammaTok>;

// γ_idx^sign as a permutation of ℕ.
uint64_t gamma_apply(int idx, int sign, uint64_t n);
uint64_t gamma_word_apply(const GammaWord& w, uint64_t n);  // rightmost applied first
bool gamma_word_is_identity(const GammaWord& w);

using KappaTok = GammaTok;
using KappaWord = std::vector<KappaTok>;

KappaWord kappa_inverse(const KappaWord& k);
// The block-rotation element used as the HNN stable letter. As a word over
// the literal κ generators it is κ₁⁻¹κ₂⁻¹κ₃⁻¹ (κ₃⁻¹ applied first); on long
// blocks its position map sends 3n+1 -> 3(n-1)+1 etc., which is the action
// all the transposition formulas rely on.
KappaWord kappa_321();
KappaWord kappa_pow(const KappaWord& k, int e);

// Length of the full block permuted by κ_idx on a run of m bits (0 = none).
int kappa_block(int idx, int m);

std::optional<Word> kappa_tok_apply(KappaTok t, const Word& w);
std::optional<Word> kappa_apply(const KappaWord& k, const Word& w);  // rightmost first

// σ with K(x#) = σ(x)# for all x of the given length; σ[j] is where the bit
// at position j ends up.
std::vector<int> kappa_position_perm(const KappaWord& k, int len);

bool kappa_is_identity(const KappaWord& k);

// Canonical table of K·φ·K⁻¹. Requires φ ∈ G31_Mod3_01_Sharp.
Table kappa_conjugate(const Table& phi, const KappaWord& k);

KappaWord parse_kappa_word(std::string_view text);
std::string format_kappa_word(const KappaWord& k);

}  // namespace g31
