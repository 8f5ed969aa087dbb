#pragma once

#include <optional>
#include <utility>

#include "core/codes.hpp"

namespace g31 {

enum class GroupTag {
  G31,
  G31_01,
  G31_01_Sharp,
  G31_Mod3,
  G31_Mod3_01,
  G31_Mod3_01_Sharp,
};

enum class StabMode { PStab, TStab, PFix, TFix };

// An element of G_{3,1}: the maximally extended bijection between two
// maximal prefix codes over {0,1,#}, entries sorted by domain word.
class Table {
 public:
  using Entry = std::pair<Word, Word>;

  Table() : e_{{Word(), Word()}} {}  // identity

  static Table identity() { return Table(); }
  // Validates that the pairs are a bijection between maximal prefix codes,
  // then reduces to canonical form.
  static Table from_pairs(std::vector<Entry> pairs);

  const std::vector<Entry>& entries() const { return e_; }
  size_t table_size() const { return e_.size(); }
  bool is_identity() const { return e_.size() == 1 && e_[0].first.empty() && e_[0].second.empty(); }

  Code domain_code() const;
  Code image_code() const;
  size_t max_word_len() const;

  std::optional<Word> apply(const Word& w) const;
  std::optional<Word> apply_inverse(const Word& w) const;

  Table inverse() const;

  bool operator==(const Table&) const = default;

  bool member_of(GroupTag tag) const;
  bool stab_fix(const Code& s, StabMode mode) const;

  // For a non-identity table, some domain entry whose image is
  // prefix-incomparable with it; nullopt iff identity.
  std::optional<Entry> noncomparable_entry() const;

  std::string format() const;  // "dom -> img" per line
  static Table parse(std::string_view text);

 private:
  explicit Table(std::vector<Entry> canonical) : e_(std::move(canonical)) {}
  std::vector<Entry> e_;
};

// a∘b: b applied first. Result is the maximal extension of the composite.
Table compose(const Table& a, const Table& b);

inline Table operator*(const Table& a, const Table& b) { return compose(a, b); }

}  // namespace g31
