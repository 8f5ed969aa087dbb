#include <functional>

#include "doctest.h"

#include "core/codes.hpp"
#include "core/randomgen.hpp"

using namespace g31;

namespace {
Code C(std::initializer_list<const char*> ws) {
  std::vector<Word> v;
  for (const char* w : ws) v.push_back(Word::parse(w));
  return make_code(std::move(v));
}
}  // namespace

TEST_CASE("prefix_compare") {
  CHECK(prefix_compare(Word::parse("01"), Word::parse("011")) == PrefixRel::StrictPrefix);
  CHECK(prefix_compare(Word::parse("011"), Word::parse("01")) == PrefixRel::StrictExtension);
  CHECK(prefix_compare(Word::parse("0"), Word::parse("1")) == PrefixRel::Incomparable);
  CHECK(prefix_compare(Word::parse("01#"), Word::parse("01#")) == PrefixRel::Equal);
  CHECK(prefix_compare(Word(), Word::parse("0")) == PrefixRel::StrictPrefix);
}

TEST_CASE("prefix incomparability is stable under extension") {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    auto rand_word = [&](size_t len) {
      Word w;
      for (size_t i = 0; i < len; ++i) w.push_back(Letter(rng.below(3)));
      return w;
    };
    Word x = rand_word(rng.below(5)), y = rand_word(rng.below(5));
    if (prefix_comparable(x, y)) continue;
    Word xu = x + rand_word(rng.below(4)), yv = y + rand_word(rng.below(4));
    CHECK(prefix_compare(xu, yv) == PrefixRel::Incomparable);
  }
}

TEST_CASE("is_maximal_prefix_code") {
  CHECK(is_maximal_prefix_code(C({"0", "1", "#"})));
  CHECK_FALSE(is_maximal_prefix_code(C({"0", "1"})));
  Code p = C({"0", "10", "11", "1#", "#"});
  CHECK(is_maximal_prefix_code(p));
  // brute force: every word of length <= 3 is prefix-comparable to a member
  for (int len = 0; len <= 3; ++len) {
    std::function<void(Word)> rec = [&](Word w) {
      if (int(w.size()) == len) {
        bool cmp = false;
        for (const Word& m : p) cmp |= prefix_comparable(w, m);
        CHECK(cmp);
        return;
      }
      for (int l = 0; l < 3; ++l) rec(w + Letter(l));
    };
    rec(Word());
  }
  CHECK_FALSE(is_prefix_code(C({"0", "01", "1", "#"})));
  CHECK(is_maximal_prefix_code(C({"@"})));  // the trivial code {ε}
}

TEST_CASE("endmarker_decompose") {
  auto [p1, p2] = endmarker_decompose(C({"0", "1", "#"}));
  CHECK(p1 == C({"0", "1"}));
  CHECK(p2 == Code{Word()});
  auto [q1, q2] = endmarker_decompose(C({"00", "01", "10", "11", "0#", "1#", "#"}));
  CHECK(q1 == C({"00", "01", "10", "11"}));
  CHECK(q2 == C({"@", "0", "1"}));
  CHECK_THROWS_AS(endmarker_decompose(C({"0", "1#", "#"})), Error);
  CHECK_THROWS_AS(endmarker_decompose(C({"0", "1#0", "1#1", "1##", "#"})), Error);
}

TEST_CASE("complete_with_endmarkers") {
  CHECK(complete_with_endmarkers(C({"0", "1"})) == C({"0", "1", "#"}));
  CHECK(complete_with_endmarkers(C({"00", "01", "1"})) == C({"00", "01", "1", "#", "0#"}));
  CHECK(complete_with_endmarkers(C({"0", "10", "11"})) == C({"0", "10", "11", "#", "1#"}));
  // round trip on random binary codes
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Code p1 = random_binary_code(rng, 1 + int(rng.below(10)));
    Code full = complete_with_endmarkers(p1);
    CHECK(is_maximal_prefix_code(full));
    auto [back, pref] = endmarker_decompose(full);
    CHECK(back == p1);
    CHECK(full.size() == 2 * p1.size() - 1);  // |P| = 1 + 2·(inner vertices)
  }
}

TEST_CASE("extend_to_maximal") {
  CHECK(extend_to_maximal(C({"0"}), C({"1", "#"})).empty());
  {
    Code q = extend_to_maximal(C({"00", "01#"}), C({"1", "#"}));
    Code all = q;
    all.insert(all.end(), {Word::parse("00"), Word::parse("01#"), Word::parse("1"),
                           Word::parse("#")});
    CHECK(is_maximal_prefix_code(make_code(std::move(all))));
    for (const Word& w : q) CHECK(w.at(0) == Letter::Zero);  // inside the 0-region
  }
  CHECK(extend_to_maximal(C({"0", "1"}), {}) == C({"#"}));
  CHECK_THROWS_AS(extend_to_maximal(C({"0", "01"}), {}), Error);
  CHECK_THROWS_AS(extend_to_maximal(C({"0"}), C({"01"})), Error);
  // target-size growth splits the least leaf
  {
    Code q0 = extend_to_maximal(C({"00"}), C({"1", "#"}));
    Code q = extend_to_maximal(C({"00"}), C({"1", "#"}), q0.size() + 4);
    CHECK(q.size() == q0.size() + 4);
    Code all = q;
    all.push_back(Word::parse("00"));
    all.push_back(Word::parse("1"));
    all.push_back(Word::parse("#"));
    CHECK(is_maximal_prefix_code(make_code(std::move(all))));
    CHECK_THROWS_AS(extend_to_maximal(C({"00"}), C({"1", "#"}), q0.size() + 1), Error);
  }
  // the base completion never exceeds the walk-construction size bound
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    Code compl_ = rng.coin() ? C({"1", "#"}) : C({"11", "1#", "#"});
    Code p = extend_to_maximal({}, compl_);
    std::vector<Word> pins;
    size_t total_len = 0;
    for (const Word& base : p) {
      if (!rng.coin()) continue;
      Word x = base;
      for (uint64_t i = rng.below(3); i; --i) x.push_back(Letter(rng.below(3)));
      bool clash = false;
      for (const Word& q : pins) clash |= prefix_comparable(q, x);
      if (clash) continue;
      pins.push_back(x);
      total_len += x.size();
    }
    if (pins.empty()) continue;
    Code q = extend_to_maximal(pins, compl_);
    CHECK(q.size() <= p.size() - pins.size() + 2 * total_len);
  }
}

TEST_CASE("mod3_cardinality") {
  CHECK(mod3_cardinality(C({"0", "1", "#"})) == Mod3Card{0, 3, 0});
  CHECK(mod3_cardinality(C({"00", "01", "1"})) == Mod3Card{0, 1, 2});
  CHECK(mod3_cardinality(Code{}) == Mod3Card{0, 0, 0});
}

TEST_CASE("rearrange_leaves_mod3") {
  CHECK(rearrange_leaves_mod3(C({"0", "1"}), {0}) == C({"0", "1"}));
  CHECK_THROWS_AS(rearrange_leaves_mod3(C({"0", "1"}), {2}), Error);
  // path-shaped code whose only inner leaf sits at depth ≡ 2; two one-child
  // vertices at depths ≡ 1 provide the transformation
  Code q1 = C({"0", "10", "110", "1110", "11110", "111110", "111111"});
  Code p1 = rearrange_leaves_mod3(q1, {1});
  CHECK(is_maximal_binary_code(p1));
  CHECK(mod3_cardinality(p1) == mod3_cardinality(q1));
  bool found = false;
  for (const Word& u : inner_leaves_binary(p1)) found |= (u.size() % 3 == 1);
  CHECK(found);
  // random codes, random residue lists where the hypothesis holds
  Rng rng(13);
  int applied = 0;
  for (int t = 0; t < 200 && applied < 60; ++t) {
    Code q = random_binary_code(rng, 4 + int(rng.below(12)));
    std::vector<int> rs;
    for (uint64_t i = 1 + rng.below(2); i; --i) rs.push_back(int(rng.below(3)));
    try {
      Code p = rearrange_leaves_mod3(q, rs);
      ++applied;
      CHECK(is_maximal_binary_code(p));
      CHECK(mod3_cardinality(p) == mod3_cardinality(q));
      auto leaves = inner_leaves_binary(p);
      for (int r : rs) {
        bool ok = false;
        for (const Word& u : leaves) ok |= (int(u.size() % 3) == r);
        CHECK(ok);
      }
    } catch (const Error& e) {
      CHECK(e.code == Err::HypothesisFail);
    }
  }
  CHECK(applied >= 30);
}

TEST_CASE("maximal code cardinality facts") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Code p1 = random_binary_code(rng, 1 + int(rng.below(12)));
    Code p = complete_with_endmarkers(p1);
    CHECK(p.size() % 2 == 1);
    size_t maxlen = 0;
    for (const Word& w : p) maxlen = std::max(maxlen, w.size());
    CHECK(p.size() >= maxlen + 1);  // a word of length n forces ≥ n+1 members
  }
}

TEST_CASE("code text round trip") {
  Code p = C({"0", "10", "11", "1#", "#"});
  CHECK(parse_code(format_code(p)) == p);
  CHECK(format_code(C({"@"})) == "@\n");
}
