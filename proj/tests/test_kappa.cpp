#include "doctest.h"

#include "core/gens.hpp"
#include "core/randomgen.hpp"

using namespace g31;

TEST_CASE("gamma cycles") {
  CHECK(gamma_apply(0, 1, 0) == 1);
  CHECK(gamma_apply(0, 1, 2) == 0);
  CHECK(gamma_apply(1, 1, 0) == 0);
  CHECK(gamma_apply(1, 1, 1) == 2);
  CHECK(gamma_apply(2, 1, 5) == 6);
  CHECK(gamma_apply(3, 1, 0) == 0);
  CHECK(gamma_apply(3, 1, 2) == 2);
  CHECK(gamma_apply(3, 1, 3) == 4);
  for (int i = 0; i <= 3; ++i)
    for (uint64_t n = 0; n <= 50; ++n) {
      CHECK(gamma_apply(i, -1, gamma_apply(i, 1, n)) == n);
      if (n >= 3) CHECK(gamma_apply(i, 1, n + 3) == gamma_apply(i, 1, n) + 3);
    }
}

TEST_CASE("gamma words") {
  CHECK(gamma_word_apply({}, 7) == 7);
  GammaWord g0_cubed = {{0, 1}, {0, 1}, {0, 1}};
  CHECK(gamma_word_apply(g0_cubed, 1) == 1);
  CHECK(gamma_word_apply({{1, -1}, {1, 1}}, 4) == 4);
  CHECK(gamma_word_is_identity({}));
  CHECK_FALSE(gamma_word_is_identity({{0, 1}}));
  CHECK_FALSE(gamma_word_is_identity({{3, -1}, {0, 1}}));
  CHECK(gamma_word_is_identity(g0_cubed));
  // decider agrees with exhaustive evaluation on 0..50
  Rng rng(8);
  for (int t = 0; t < 150; ++t) {
    GammaWord w;
    for (uint64_t i = rng.below(8); i; --i)
      w.push_back({int(rng.below(4)), rng.coin() ? 1 : -1});
    bool moved = false;
    for (uint64_t n = 0; n <= 50; ++n) moved |= gamma_word_apply(w, n) != n;
    CHECK(gamma_word_is_identity(w) == !moved);
  }
}

TEST_CASE("kappa_apply") {
  KappaWord k0 = {{0, 1}};
  // all three-bit blocks rotate by γ₀
  for (uint64_t b = 0; b < 8; ++b) {
    Word w = Word::bits_of(b, 3) + Letter::Hash;
    Word want;
    want.push_back(w.at(2));
    want.push_back(w.at(0));
    want.push_back(w.at(1));
    want.push_back(Letter::Hash);
    CHECK(kappa_apply(k0, w) == want);
  }
  CHECK(kappa_apply(k0, Word::parse("01#")) == Word::parse("01#"));  // short block
  CHECK(kappa_apply({{1, 1}}, Word::parse("#11")) == Word::parse("#11"));
  CHECK_FALSE(kappa_apply(k0, Word::parse("0101")).has_value());  // no #
  // properties: length, tail after #, leading bit for κ₁..κ₃ and κ₃₂₁
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    KappaWord k;
    if (rng.coin())
      k = rng.coin() ? kappa_321() : kappa_inverse(kappa_321());
    else
      for (uint64_t i = 1 + rng.below(3); i; --i)
        k.push_back({int(rng.below(4)), rng.coin() ? 1 : -1});
    Word w;
    for (uint64_t i = rng.below(12); i; --i) w.push_back(Letter(rng.below(2)));
    w.push_back(Letter::Hash);
    size_t tail_at = w.size();
    for (uint64_t i = rng.below(4); i; --i) w.push_back(Letter(rng.below(3)));
    auto r = kappa_apply(k, w);
    REQUIRE(r.has_value());
    CHECK(r->size() == w.size());
    for (size_t i = tail_at - 1; i < w.size(); ++i) CHECK(r->at(i) == w.at(i));
    bool fixes_head = true;
    for (auto& tok : k) fixes_head &= tok.idx != 0;
    if (fixes_head && tail_at > 1) CHECK(r->at(0) == w.at(0));
  }
}

TEST_CASE("kappa_position_perm") {
  auto p = kappa_position_perm({{0, 1}}, 3);
  CHECK(p == std::vector<int>{1, 2, 0});
  CHECK(kappa_position_perm({}, 5) == std::vector<int>{0, 1, 2, 3, 4});
  KappaWord k0_cubed = {{0, 1}, {0, 1}, {0, 1}};
  CHECK(kappa_position_perm(k0_cubed, 3) == std::vector<int>{0, 1, 2});
  // agrees with probing unit-vector strings
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    KappaWord k;
    for (uint64_t i = 1 + rng.below(3); i; --i)
      k.push_back({int(rng.below(4)), rng.coin() ? 1 : -1});
    int len = 1 + int(rng.below(12));
    auto perm = kappa_position_perm(k, len);
    for (int j = 0; j < len; ++j) {
      Word w;
      for (int i = 0; i < len; ++i) w.push_back(i == j ? Letter::One : Letter::Zero);
      w.push_back(Letter::Hash);
      auto r = kappa_apply(k, w);
      REQUIRE(r.has_value());
      CHECK(r->at(size_t(perm[size_t(j)])) == Letter::One);
    }
  }
}

TEST_CASE("kappa_is_identity") {
  CHECK(kappa_is_identity({{1, 1}, {1, -1}}));
  CHECK_FALSE(kappa_is_identity({{0, 1}}));
  CHECK(kappa_is_identity({{3, -1}, {2, -1}, {1, -1}, {1, 1}, {2, 1}, {3, 1}}));
  CHECK(kappa_is_identity({{0, 1}, {0, 1}, {0, 1}}));  // γ₀ has order 3 blockwise
}

TEST_CASE("kappa_321 matches its defining block rotation") {
  // on ten bits: x₀x₁…x₉# ↦ x₀ x₄x₅x₁ x₇x₈x₂ …#
  auto p = kappa_position_perm(kappa_321(), 10);
  CHECK(p[0] == 0);
  CHECK(p[4] == 1);
  CHECK(p[5] == 2);
  CHECK(p[1] == 3);
  CHECK(p[7] == 4);
  CHECK(p[8] == 5);
  CHECK(p[2] == 6);
}

TEST_CASE("kappa_conjugate") {
  KappaWord k321 = kappa_321();
  CHECK(kappa_conjugate(Table::identity(), k321) == Table::identity());
  CHECK(kappa_conjugate(adjacent_transposition(1), kappa_inverse(k321)) ==
        adjacent_transposition(4));
  // second application climbs a full period: τ₄,₅ ↦ τ₇,₈
  CHECK(kappa_conjugate(adjacent_transposition(4), kappa_inverse(k321)) ==
        adjacent_transposition(7));
  CHECK_THROWS_AS(
      kappa_conjugate(Table::parse("0 -> 00\n10 -> 01\n11 -> 1\n1# -> 0#\n# -> #\n"), k321),
      Error);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    Table phi = random_sharp_table(rng, 2 + int(rng.below(5)), true);
    KappaWord k;
    for (uint64_t i = 1 + rng.below(2); i; --i)
      k.push_back({int(rng.below(4)), rng.coin() ? 1 : -1});
    Table psi = kappa_conjugate(phi, k);
    CHECK(psi.member_of(GroupTag::G31_Mod3_01_Sharp));
    CHECK(kappa_conjugate(psi, kappa_inverse(k)) == phi);
  }
}

TEST_CASE("kappa_conjugate on deep spine tables") {
  // skinny-deep tables exercise the sparse entry construction: the moved
  // pair sits at the bottom of a long 0-spine while every sibling entry
  // stays shallow
  auto spine_swap = [](int d) {
    std::vector<Table::Entry> e;
    Word p;
    for (int i = 0; i < d; ++i) {
      e.emplace_back(p + Letter::One, p + Letter::One);
      e.emplace_back(p + Letter::Hash, p + Letter::Hash);
      p.push_back(Letter::Zero);
    }
    e.emplace_back(p + Letter::Hash, p + Letter::Hash);
    e.emplace_back(p + Letter::Zero, p + Letter::One);
    e.emplace_back(p + Letter::One, p + Letter::Zero);
    return Table::from_pairs(std::move(e));
  };
  Rng rng(404);
  for (int d = 1; d <= 12; d += 3) {
    Table phi = spine_swap(d);
    REQUIRE(phi.member_of(GroupTag::G31_Mod3_01_Sharp));
    CHECK(phi.table_size() == size_t(2 * d + 3));  // sparse, not 2^d
    for (int idx = 0; idx <= 3; ++idx) {
      KappaWord k{{idx, rng.coin() ? 1 : -1}};
      Table psi = kappa_conjugate(phi, k);
      CHECK(psi.member_of(GroupTag::G31_Mod3_01_Sharp));
      CHECK(psi.table_size() <= 8 * phi.table_size() + 8);
      CHECK(kappa_conjugate(psi, kappa_inverse(k)) == phi);
      for (int probe = 0; probe < 60; ++probe) {
        Word w;
        size_t len = rng.below(uint64_t(d + 9));
        for (size_t i = 0; i < len; ++i) w.push_back(Letter(rng.below(2)));
        w.push_back(Letter::Hash);
        auto direct = psi.apply(w);
        auto x = kappa_apply(kappa_inverse(k), w);
        std::optional<Word> y;
        if (x) y = phi.apply(*x);
        std::optional<Word> chain;
        if (y) chain = kappa_apply(k, *y);
        CHECK(bool(direct) == bool(chain));
        if (direct && chain) CHECK(*direct == *chain);
      }
    }
  }
}

TEST_CASE("kappa word text round trip") {
  KappaWord k = parse_kappa_word("k0 k1' K k3");
  CHECK(k.size() == 3 + 3);  // K expands to three tokens
  CHECK(parse_kappa_word(format_kappa_word(k)) == k);
  CHECK_THROWS_AS(parse_kappa_word("k7"), Error);
}
