#include "core/randomgen.hpp"

#include <algorithm>

namespace g31 {

Code random_binary_code(Rng& rng, int k) {
  // split a random leaf until k leaves
  Code c{Word()};
  while (int(c.size()) < k) {
    size_t i = rng.below(c.size());
    Word w = c[i];
    c.erase(c.begin() + long(i));
    c.push_back(w + Letter::Zero);
    c.push_back(w + Letter::One);
  }
  return make_code(std::move(c));
}

Table random_sharp_table(Rng& rng, int k, bool mod3, bool fix_zero) {
  if (fix_zero) {
    // identity under 0; random action on the 1-subtree, # side shuffled
    int k1 = std::max(1, k - 1);
    Code b1 = random_binary_code(rng, k1);
    Code p1{Word::parse("0")}, q1{Word::parse("0")};
    for (const Word& w : b1) p1.push_back(Word::parse("1") + w);
    // image bit part: same code (keeps mod-3 matching trivially)
    q1 = p1;
    p1 = make_code(std::move(p1));
    q1 = make_code(std::move(q1));
    std::vector<Table::Entry> pairs;
    pairs.emplace_back(Word::parse("0"), Word::parse("0"));
    // random residue-preserving bijection of the 1-side
    std::vector<Word> ones(p1.begin(), p1.end());
    ones.erase(std::remove(ones.begin(), ones.end(), Word::parse("0")), ones.end());
    std::vector<Word> img = ones;
    for (size_t i = img.size(); i > 1; --i) {
      // Fisher–Yates within residue classes
      size_t j = rng.below(i);
      if (!mod3 || img[i - 1].size() % 3 == img[j].size() % 3) std::swap(img[i - 1], img[j]);
    }
    for (size_t i = 0; i < ones.size(); ++i) pairs.emplace_back(ones[i], img[i]);
    Code p2 = strict_prefixes(p1);
    std::vector<Word> h2(p2.begin(), p2.end());
    for (size_t i = h2.size(); i > 1; --i) std::swap(h2[i - 1], h2[rng.below(i)]);
    for (size_t i = 0; i < p2.size(); ++i)
      pairs.emplace_back(p2[i] + Letter::Hash, h2[i] + Letter::Hash);
    return Table::from_pairs(std::move(pairs));
  }
  Code p1 = random_binary_code(rng, k);
  Code q1;
  if (mod3) {
    for (int tries = 0;; ++tries) {
      q1 = random_binary_code(rng, k);
      if (mod3_cardinality(q1) == mod3_cardinality(p1)) break;
      if (tries > 2000) {
        q1 = p1;  // always compatible
        break;
      }
    }
  } else {
    q1 = random_binary_code(rng, k);
  }
  std::vector<Table::Entry> pairs;
  // bit bijection, residue-matched when needed
  std::vector<Word> dom(p1.begin(), p1.end()), img(q1.begin(), q1.end());
  if (mod3) {
    std::vector<std::vector<Word>> cls(3);
    for (const Word& w : img) cls[w.size() % 3].push_back(w);
    for (auto& v : cls)
      for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    std::vector<size_t> at{0, 0, 0};
    for (const Word& d : dom) {
      auto& v = cls[d.size() % 3];
      pairs.emplace_back(d, v[at[d.size() % 3]++]);
    }
  } else {
    for (size_t i = img.size(); i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
    for (size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], img[i]);
  }
  Code p2 = strict_prefixes(p1), q2 = strict_prefixes(q1);
  std::vector<Word> h2(q2.begin(), q2.end());
  for (size_t i = h2.size(); i > 1; --i) std::swap(h2[i - 1], h2[rng.below(i)]);
  for (size_t i = 0; i < p2.size(); ++i)
    pairs.emplace_back(p2[i] + Letter::Hash, h2[i] + Letter::Hash);
  return Table::from_pairs(std::move(pairs));
}

Circuit random_circuit(Rng& rng, int max_size, int max_inputs) {
  for (;;) {
    Circuit c;
    c.m = 1 + int(rng.below(uint64_t(max_inputs)));
    std::vector<Src> avail;
    for (int i = 0; i < c.m; ++i) avail.push_back(Src{i, -1, 0});
    int gates = int(rng.below(5));
    for (int g = 0; g < gates; ++g) {
      int kind = int(rng.below(5));
      GateKind k = kind == 0   ? GateKind::Not
                   : kind == 1 ? GateKind::And
                   : kind == 2 ? GateKind::Or
                   : kind == 3 ? GateKind::Fork
                               : GateKind::Id;
      int need = (k == GateKind::And || k == GateKind::Or) ? 2 : 1;
      if (int(avail.size()) < need) break;
      Gate gt{"g" + std::to_string(c.gates.size()), k, {}};
      for (int i = 0; i < need; ++i) {
        size_t p = rng.below(avail.size());
        gt.ins.push_back(avail[p]);
        avail.erase(avail.begin() + long(p));
      }
      int gi = int(c.gates.size());
      c.gates.push_back(std::move(gt));
      for (int p = 0; p < (k == GateKind::Fork ? 2 : 1); ++p)
        avail.push_back(Src{-1, gi, p});
    }
    c.outputs = avail;  // every loose wire is an output
    if (c.outputs.empty()) continue;
    if (c.size() > max_size) continue;
    validate_circuit(c);
    return c;
  }
}

Circuit equivalent_variant(Rng& rng, const Circuit& c) {
  Circuit v = c;
  // swap inputs of a commutative gate
  for (Gate& g : v.gates)
    if ((g.kind == GateKind::And || g.kind == GateKind::Or) && rng.coin())
      std::swap(g.ins[0], g.ins[1]);
  // ID padding on a random output
  size_t oi = rng.below(v.outputs.size());
  int gi = int(v.gates.size());
  v.gates.push_back(Gate{"pad" + std::to_string(gi), GateKind::Id, {v.outputs[oi]}});
  v.outputs[oi] = Src{-1, gi, 0};
  validate_circuit(v);
  return v;
}

Circuit mutated_variant(Rng& rng, const Circuit& c) {
  Circuit v = c;
  std::vector<size_t> flips;
  for (size_t i = 0; i < v.gates.size(); ++i)
    if (v.gates[i].kind == GateKind::And || v.gates[i].kind == GateKind::Or)
      flips.push_back(i);
  if (!flips.empty() && rng.coin()) {
    size_t i = flips[rng.below(flips.size())];
    v.gates[i].kind = v.gates[i].kind == GateKind::And ? GateKind::Or : GateKind::And;
    return v;
  }
  // insert a NOT in front of a random output
  size_t oi = rng.below(v.outputs.size());
  int gi = int(v.gates.size());
  v.gates.push_back(Gate{"mut" + std::to_string(gi), GateKind::Not, {v.outputs[oi]}});
  v.outputs[oi] = Src{-1, gi, 0};
  validate_circuit(v);
  return v;
}

GenWord random_genword(Rng& rng, size_t len, bool with_kappa) {
  static const TokKind plain[] = {TokKind::Not, TokKind::Or, TokKind::And,
                                  TokKind::F4, TokKind::Tau, TokKind::Tau};
  GenWord w;
  for (size_t i = 0; i < len; ++i) {
    int pick = int(rng.below(with_kappa ? 7 : 6));
    GenTok t;
    if (pick == 6) {
      t.kind = TokKind::K321;
    } else {
      t.kind = plain[pick];
      if (t.kind == TokKind::Tau) t.i = pick == 4 ? 0 : 1;
    }
    t.sign = rng.coin() ? 1 : -1;
    w.push_back(t);
  }
  return w;
}

}  // namespace g31
