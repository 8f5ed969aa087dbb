#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"

namespace g31 {

// The three-letter alphabet. The canonical order 0 < 1 < # is the byte order
// of the internal encoding, so plain string comparison sorts words correctly.
enum class Letter : uint8_t { Zero = 0, One = 1, Hash = 2 };

constexpr char letter_char(Letter l) {
  return l == Letter::Zero ? '0' : (l == Letter::One ? '1' : '#');
}

// A finite word over {0,1,#}. Stored as raw bytes 0/1/2.
class Word {
 public:
  Word() = default;

  static Word parse(std::string_view text);  // "@" or "" denotes the empty word

  static Word bits_of(uint64_t bits, int len) {  // MSB-first bit vector
    Word w;
    w.b_.reserve(len);
    for (int i = len - 1; i >= 0; --i) w.b_.push_back(char((bits >> i) & 1));
    return w;
  }

  size_t size() const { return b_.size(); }
  bool empty() const { return b_.empty(); }
  Letter at(size_t i) const { return Letter(uint8_t(b_[i])); }
  void set(size_t i, Letter l) { b_[i] = char(uint8_t(l)); }
  void push_back(Letter l) { b_.push_back(char(uint8_t(l))); }
  void pop_back() { b_.pop_back(); }

  Word& append(const Word& w) {
    b_ += w.b_;
    return *this;
  }
  Word operator+(const Word& w) const {
    Word r = *this;
    r.append(w);
    return r;
  }
  Word operator+(Letter l) const {
    Word r = *this;
    r.push_back(l);
    return r;
  }

  // Suffix starting at position pos.
  Word suffix(size_t pos) const {
    Word r;
    r.b_ = b_.substr(pos);
    return r;
  }
  Word prefix(size_t len) const {
    Word r;
    r.b_ = b_.substr(0, len);
    return r;
  }

  bool starts_with(const Word& p) const {
    return b_.size() >= p.b_.size() && b_.compare(0, p.b_.size(), p.b_) == 0;
  }

  bool is_bits() const { return b_.find(char(2)) == std::string::npos; }
  // Position of the first '#', npos if none.
  size_t first_hash() const { return b_.find(char(2)); }
  // true iff of the form {0,1}*#
  bool is_bits_hash() const {
    return !b_.empty() && uint8_t(b_.back()) == 2 &&
           b_.find(char(2)) == b_.size() - 1;
  }

  std::string str() const;  // "@" for the empty word

  auto operator<=>(const Word&) const = default;

  const std::string& raw() const { return b_; }

 private:
  std::string b_;
};

enum class PrefixRel { StrictPrefix, Equal, StrictExtension, Incomparable };

PrefixRel prefix_compare(const Word& u, const Word& v);

inline bool prefix_comparable(const Word& u, const Word& v) {
  return prefix_compare(u, v) != PrefixRel::Incomparable;
}
// u is a prefix of v (possibly equal)
inline bool is_prefix_of(const Word& u, const Word& v) {
  auto r = prefix_compare(u, v);
  return r == PrefixRel::StrictPrefix || r == PrefixRel::Equal;
}

}  // namespace g31
