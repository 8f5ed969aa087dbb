#include "core/words.hpp"

namespace g31 {

const char* err_name(Err e) {
  switch (e) {
    case Err::Ok: return "ok";
    case Err::Parse: return "parse-error";
    case Err::NotACode: return "not-a-code";
    case Err::NotBijective: return "not-bijective";
    case Err::ShapeError: return "shape-error";
    case Err::PinConflict: return "pin-conflict";
    case Err::SizeError: return "size-error";
    case Err::HypothesisFail: return "hypothesis-fail";
    case Err::NotInSubgroup: return "not-in-subgroup";
    case Err::KappaPresent: return "kappa-present";
    case Err::IndexError: return "index-error";
    case Err::CycleError: return "cycle-error";
    case Err::FanoutError: return "fanout-error";
    case Err::ArityError: return "arity-error";
    case Err::ComparableInput: return "comparable-input";
    case Err::Precondition: return "precondition-error";
    case Err::NotDepthOne: return "not-depth-one";
    case Err::ArityMismatch: return "arity-mismatch";
    case Err::UnsupportedTag: return "unsupported-tag";
    case Err::NotInGroup: return "not-in-group";
    case Err::Budget: return "budget-exceeded";
    case Err::Internal: return "internal-error";
  }
  return "unknown";
}

Word Word::parse(std::string_view text) {
  Word w;
  if (text == "@" || text.empty()) return w;
  w.b_.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': w.b_.push_back(char(0)); break;
      case '1': w.b_.push_back(char(1)); break;
      case '#': w.b_.push_back(char(2)); break;
      default: fail(Err::Parse, std::string("bad letter '") + c + "' in word");
    }
  }
  return w;
}

std::string Word::str() const {
  if (b_.empty()) return "@";
  std::string s;
  s.reserve(b_.size());
  for (char c : b_) s.push_back(letter_char(Letter(uint8_t(c))));
  return s;
}

PrefixRel prefix_compare(const Word& u, const Word& v) {
  size_t n = std::min(u.size(), v.size());
  for (size_t i = 0; i < n; ++i)
    if (u.at(i) != v.at(i)) return PrefixRel::Incomparable;
  if (u.size() == v.size()) return PrefixRel::Equal;
  return u.size() < v.size() ? PrefixRel::StrictPrefix : PrefixRel::StrictExtension;
}

}  // namespace g31
