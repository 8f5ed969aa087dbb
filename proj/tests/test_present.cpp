#include <set>

#include "doctest.h"

#include "core/present.hpp"
#include "core/randomgen.hpp"

using namespace g31;

TEST_CASE("enumerate_generators small bounds") {
  GeneratorSet g1 = enumerate_generators(GroupTag::G31_01_Sharp, 1);
  CHECK(g1.members.size() == 1);
  CHECK(g1.members[0].is_identity());
  GeneratorSet g3 = enumerate_generators(GroupTag::G31_01_Sharp, 3);
  CHECK(g3.members.size() == 2);  // identity and the bit swap
  bool has_not = false;
  for (const Table& t : g3.members) has_not |= (t == phi_not());
  CHECK(has_not);
  GeneratorSet m3 = enumerate_generators(GroupTag::G31_Mod3_01_Sharp, 3);
  CHECK(m3.members.size() == 2);
  CHECK_THROWS_AS(enumerate_generators(GroupTag::G31, 7), Error);
  CHECK_THROWS_AS(enumerate_generators(GroupTag::G31_01_Sharp, 4), Error);
}

TEST_CASE("generator set of bound 7") {
  GeneratorSet g = enumerate_generators(GroupTag::G31_01_Sharp, 7);
  // five binary tree shapes with four leaves underlie the size-7 tables
  std::set<std::string> shapes;
  for (const Table& t : g.members) {
    if (t.table_size() != 7) continue;
    CHECK(t.member_of(GroupTag::G31_01_Sharp));
    Code bits;
    for (const Word& w : t.domain_code())
      if (w.is_bits()) bits.push_back(w);
    shapes.insert(format_code(bits));
  }
  CHECK(shapes.size() == 5);  // Catalan(3)
  // closure under inverse with consistent ids
  for (size_t i = 0; i < g.members.size(); ++i) {
    int j = g.inverse_id[i];
    REQUIRE(j >= 0);
    CHECK(g.members[size_t(j)] == g.members[i].inverse());
    CHECK(g.inverse_id[size_t(j)] == int(i));
  }
}

TEST_CASE("factor basics") {
  GeneratorSet gens = enumerate_generators(GroupTag::G31_01_Sharp, 7);
  Factorization fid = factor(Table::identity(), gens);
  CHECK(fid.ids.empty());
  Factorization fnot = factor(phi_not(), gens);
  REQUIRE(fnot.ids.size() == 1);
  CHECK(gens.members[size_t(fnot.ids[0])] == phi_not());
  CHECK_THROWS_AS(factor(Table::parse("0 -> #\n1 -> 1\n# -> 0\n"), gens), Error);
}

TEST_CASE("factor round trip") {
  Rng rng(55);
  GeneratorSet gens = enumerate_generators(GroupTag::G31_01_Sharp, 7);
  for (int t = 0; t < 25; ++t) {
    Table phi = random_sharp_table(rng, 2 + int(rng.below(10)), false);
    Factorization f = factor(phi, gens);
    CHECK(compose_ids(gens, f.ids) == phi);
    CHECK(f.max_intermediate <= std::max<size_t>(phi.table_size(), 1));
    for (int id : f.ids) CHECK(gens.members[size_t(id)].member_of(gens.tag));
  }
}

TEST_CASE("factor with the mod-3 tag") {
  Rng rng(56);
  GeneratorSet gens = enumerate_generators(GroupTag::G31_Mod3_01_Sharp, 3);
  // sub-threshold elements become opaque leaf generators
  Table small = random_sharp_table(rng, 5, true);
  Factorization fs = factor(small, gens);
  REQUIRE(fs.ids.size() == 1);
  CHECK(compose_ids(gens, fs.ids) == small);
  // above the 61 threshold the recursion inserts mod-3-aligned rows
  for (int t = 0; t < 3; ++t) {
    Table big = random_sharp_table(rng, 32 + int(rng.below(4)), true);
    REQUIRE(big.table_size() >= 63);
    Factorization f = factor(big, gens);
    CHECK(f.ids.size() >= 2);
    CHECK(compose_ids(gens, f.ids) == big);
    CHECK(f.max_intermediate <= big.table_size());
    for (int id : f.ids) {
      CHECK(gens.members[size_t(id)].member_of(GroupTag::G31_Mod3_01_Sharp));
      CHECK(gens.members[size_t(id)].table_size() <= 61);
    }
  }
}

TEST_CASE("generator set listing") {
  GeneratorSet g = enumerate_generators(GroupTag::G31_01_Sharp, 3);
  std::string text = format_generator_set(g);
  CHECK(text.find("tag g31-01-sharp") != std::string::npos);
  CHECK(text.find("count 2") != std::string::npos);
}
