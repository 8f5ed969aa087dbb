#pragma once

#include <optional>
#include <variant>

#include "core/kappa.hpp"

namespace g31 {

enum class TokKind { Not, Or, And, F4, Tau, K0, K1, K2, K3, K321 };

struct GenTok {
  TokKind kind;
  int i = 0;     // τ subscript (τ_{i,i+1})
  int sign = 1;  // ±1
  bool operator==(const GenTok&) const = default;
};
using GenWord = std::vector<GenTok>;

// Tables of the named generators.
const Table& phi_not();
const Table& phi_or();
const Table& phi_and();
const Table& phi_zero_fork4();

// τ_{i,i+1}: swaps bit positions i, i+1; on short arguments x# (|x| ≤ i+1)
// τ_{0,1} and τ_{1,2} act as the identity, higher indices act by their
// defining words over {τ_{1,2}, κ₁, κ₂, κ_{321}}.
const Table& adjacent_transposition(int i);
// Same element applied functionally; the canonical table is exponential in
// i, so evaluation never materializes it.
std::optional<Word> apply_adjacent_transposition(int i, const Word& w);
// τ_{i,j} via the adjacent-chain formula; identity when i == j.
Table transposition(int i, int j);

bool is_kappa_kind(TokKind k);
// Finite-table tokens only; throws for κ kinds.
const Table& token_table_base(TokKind kind, int i);
// The κ word a genword κ token stands for. The generator dictionary's κ
// tokens act by the inverse cycle maps (k1 ↦ literal κ₁⁻¹ …): that is the
// convention under which the transposition conjugation formulas hold; see
// the tau-word tests.
KappaWord token_kappa(const GenTok& t);

// Pre-resolved evaluator for repeated application of one word.
class WordEval {
 public:
  explicit WordEval(const GenWord& w);
  std::optional<Word> operator()(const Word& x) const;

 private:
  struct Step {
    const Table* table = nullptr;  // inverse already resolved
    Table owned;                   // storage for inverted tables
    KappaWord kw;
    int tau = -1;  // adjacent transposition, applied functionally
  };
  std::vector<Step> steps_;  // application order (rightmost token first)
};

std::optional<Word> eval_word(const GenWord& w, const Word& x);

GenWord gen_inverse(const GenWord& w);

// Word over {TAU(0), TAU(1), K1, K2, K321} equal to τ_{i,i+1} as an element.
GenWord tau_word_over_finite_gens(int i);

// σ_{i,j} = τ_{j-1,j} τ_{j-2,j-1} … τ_{i,i+1} (left rotation of positions i..j).
GenWord sigma_word(int i, int j);

// Canonical table of a word; κ tokens are allowed if their net effect is
// trivial (decided exactly), otherwise KappaPresent.
Table materialize(const GenWord& w);

// Scan form: [word] = g · (κ-suffix). Used by materialize and the word
// problem deciders.
struct ScanForm {
  Table g;
  KappaWord kappa;
};
ScanForm scan_form(const GenWord& w);

// .gw format: whitespace-separated "not or and f4 t<i> s<i>_<j> k0..k3 K",
// optional ' suffix; '#' starts a comment; leftmost token applied last.
GenWord parse_genword(std::string_view text);
std::string format_genword(const GenWord& w);

size_t unary_length(const GenWord& w);  // τ subscripts counted in unary

}  // namespace g31
