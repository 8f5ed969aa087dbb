#include "core/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "core/present.hpp"
#include "core/randomgen.hpp"
#include "core/wordproblem.hpp"

namespace g31 {

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool c, const std::string& msg) {
    if (!c && ok) {
      ok = false;
      why = msg;
    }
  }
};

// ---- criterion 1: ‖τ_{i,i+1}‖ = 2^{(i+1)+2} - 1 for i = 0..7 ----------------
void crit_transposition_sizes(Check& c) {
  for (int i = 0; i <= 7; ++i) {
    size_t want = (size_t(1) << (i + 3)) - 1;
    size_t got = adjacent_transposition(i).table_size();
    c.expect(got == want, "tau_" + std::to_string(i) + "," + std::to_string(i + 1) +
                              " has table-size " + std::to_string(got) + ", want " +
                              std::to_string(want));
  }
}

Word probe_input(uint64_t x, int m, const Word& suffix) {
  Word w;
  w.push_back(Letter::Zero);
  for (int i = m - 1; i >= 0; --i) w.push_back(Letter((x >> i) & 1));
  w.append(suffix);
  w.push_back(Letter::Hash);
  return w;
}

Word simulated_output(const Circuit& c, uint64_t x, const Word& suffix) {
  std::vector<bool> in(size_t(c.m));
  for (int i = 0; i < c.m; ++i) in[size_t(i)] = (x >> (c.m - 1 - i)) & 1;
  std::vector<bool> out = eval_circuit(c, in);
  Word w;
  for (int i = 0; i <= pad(int(out.size())); ++i) w.push_back(Letter::Zero);
  for (bool b : out) w.push_back(b ? Letter::One : Letter::Zero);
  for (bool b : in) w.push_back(b ? Letter::One : Letter::Zero);
  w.append(suffix);
  w.push_back(Letter::Hash);
  return w;
}

// ---- criterion 2: simulation contract ---------------------------------------
void crit_simulation(Check& c, std::vector<std::pair<int, size_t>>* sizes = nullptr,
                     Check* bounds = nullptr) {
  Rng rng(1002);
  const Word suffixes[3] = {Word(), Word::parse("0"), Word::parse("11")};
  for (int t = 0; t < 50; ++t) {
    Circuit ct = random_circuit(rng, 10, 4);
    GenWord w = compile_circuit(ct);
    WordEval ev(w);
    for (uint64_t x = 0; x < (uint64_t(1) << ct.m); ++x)
      for (const Word& s : suffixes) {
        auto got = ev(probe_input(x, ct.m, s));
        Word want = simulated_output(ct, x, s);
        c.expect(got && *got == want, "simulation mismatch on circuit #" + std::to_string(t));
        if (!c.ok) return;
      }
    if (sizes) sizes->emplace_back(ct.size(), w.size());
    if (bounds) {
      LayeredCircuit lc = strictify(ct);
      CompileMetrics mt = word_metrics(w);
      bounds->expect(mt.max_tau <= 3 * lc.strict_size * lc.strict_size,
                     "tau subscript " + std::to_string(mt.max_tau) + " exceeds 3|C'|^2");
    }
  }
}

// ---- criterion 3: strong simulation is circuit independent ------------------
void crit_strong_independence(Check& c) {
  Rng rng(1003);
  int pairs = 0;
  while (pairs < 10) {
    Circuit a = random_circuit(rng, 9, 4);
    if (a.m < 2) continue;
    Circuit b = equivalent_variant(rng, a);
    ++pairs;
    GenWord wa = compile_strong(a), wb = compile_strong(b);
    WordEval ea(wa), eb(wb);
    for (int k = 0; k < a.m; ++k)
      for (uint64_t x = 0; x < (uint64_t(1) << k); ++x) {
        Word in;
        in.push_back(Letter::Zero);
        for (int i = k - 1; i >= 0; --i) in.push_back(Letter((x >> i) & 1));
        in.push_back(Letter::Hash);
        auto ra = ea(in), rb = eb(in);
        c.expect(bool(ra) && bool(rb), "strong simulation undefined on a short input");
        if (ra && rb)
          c.expect(*ra == *rb, "short-input outputs differ between equivalent circuits");
        if (!c.ok) return;
      }
  }
}

// ---- criterion 4: compiler bounds -------------------------------------------
void crit_compiler_bounds(Check& c) {
  std::vector<std::pair<int, size_t>> sizes;
  Check sim;
  crit_simulation(sim, &sizes, &c);
  c.expect(sim.ok, "simulation retest failed: " + sim.why);
  // log-log fit of token count against circuit size; slope must be ≤ 4
  std::map<int, std::pair<double, int>> by_size;
  for (auto& [s, tok] : sizes) {
    by_size[s].first += double(tok);
    by_size[s].second += 1;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (auto& [s, acc] : by_size) {
    if (s < 2) continue;
    double lx = std::log(double(s)), ly = std::log(acc.first / acc.second);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  c.expect(n >= 3, "not enough size variety for the growth fit");
  if (n >= 3) {
    double slope = (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
    c.expect(slope <= 4.0, "token growth exponent " + std::to_string(slope) + " > 4");
  }
}

// ---- criterion 5: decider agreement -----------------------------------------
void crit_decider_agreement(Check& c) {
  Rng rng(1005);
  int proven_id = 0, proven_not = 0, conclusive = 0;
  for (int t = 0; t < 500; ++t) {
    GenWord w = random_genword(rng, 1 + rng.below(8), true);
    // drift budget: κ-conjugation grows tables ~8× per unbalanced K321 token
    int e = 0, drift = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      if (it->kind == TokKind::K321) {
        e += it->sign;
        drift = std::max(drift, std::abs(e));
      }
    c.expect(drift <= 6, "sampled word exceeds the documented drift budget");
    if (drift > 6) return;
    NormalForm nf = wp_normal_form(w);
    bool nf_id = nf.e == 0 && nf.g.is_identity();
    Verdict v = wp_bounded_witness(w, WitnessConfig{});
    switch (v.kind) {
      case Verdict::NotIdentity: {
        ++proven_not;
        ++conclusive;
        c.expect(!nf_id, "witness decider contradicts the normal form (not-identity)");
        Word probe = v.witness + Letter::Hash;
        auto r = eval_word(w, probe);
        c.expect(r && *r != probe, "reported witness does not verify");
        break;
      }
      case Verdict::IdentityProven:
        ++proven_id;
        ++conclusive;
        c.expect(nf_id, "witness decider contradicts the normal form (identity)");
        break;
      case Verdict::IdentityUpTo:
        break;  // inconclusive by cap; no contradiction possible
    }
    bool kappa_free = true;
    for (auto& tok : w)
      if (is_kappa_kind(tok.kind)) kappa_free = false;
    if (kappa_free) c.expect(wp_table(w) == nf_id, "table decider disagrees with normal form");
    if (!c.ok) return;
  }
  c.expect(proven_id >= 1, "sample produced no conclusively-proven identity");
  c.expect(proven_not >= 50, "sample produced too few witnessed non-identities");
  c.expect(conclusive >= 100, "sample mostly inconclusive");
}

// ---- criterion 6: commutation test ------------------------------------------
void crit_commutation(Check& c) {
  Rng rng(1006);
  const Code one_hash = {Word::parse("1"), Word::parse("#")};
  for (int t = 0; t < 200; ++t) {
    bool fix = t % 2 == 0;
    Table g = random_sharp_table(rng, 2 + int(rng.below(10)), true, fix);
    if (g.table_size() > 21) {
      --t;
      continue;
    }
    bool fixes = is_pfix_zero(g);
    auto h = find_noncommuting_witness(g);
    c.expect(fixes == !h.has_value(), "commutation test disagrees with the fixator predicate");
    if (h) {
      c.expect(!(g * *h == *h * g), "witness commutes after all");
      c.expect(h->stab_fix(one_hash, StabMode::PFix), "witness moves the {1,#} region");
      c.expect(h->member_of(GroupTag::G31_Mod3_01_Sharp), "witness left the subgroup");
    }
    if (!c.ok) return;
  }
}

// ---- criterion 7: κ word problem --------------------------------------------
// Exhaustive oracle on packed bits, applying each κ token by its definition.
uint32_t oracle_tok(int idx, int sign, uint32_t x, int len) {
  int b = kappa_block(idx, len);
  uint32_t y = x & ~((uint32_t(1) << b) - 1u);
  for (int j = 0; j < b; ++j)
    if ((x >> j) & 1u) y |= uint32_t(1) << gamma_apply(idx, sign, uint64_t(j));
  return y;
}

void crit_kappa_word_problem(Check& c) {
  std::vector<KappaWord> words{{}};
  KappaTok alphabet[6] = {{0, 1}, {0, -1}, {1, 1}, {1, -1}, {2, 1}, {2, -1}};
  size_t first = 0;
  for (int len = 1; len <= 3; ++len) {
    size_t last = words.size();
    for (size_t i = first; i < last; ++i)
      for (auto& t : alphabet) {
        KappaWord w = words[i];
        w.push_back(t);
        words.push_back(std::move(w));
      }
    first = last;
  }
  for (const KappaWord& k : words) {
    int bound = 6 * int(k.size()) + 3;
    bool moved = false;
    for (int len = 1; len <= bound && !moved; ++len)
      for (uint32_t x = 0; x < (uint32_t(1) << len) && !moved; ++x) {
        uint32_t y = x;
        for (auto it = k.rbegin(); it != k.rend(); ++it)
          y = oracle_tok(it->idx, it->sign, y, len);
        if (y != x) moved = true;
      }
    c.expect(kappa_is_identity(k) == !moved, "kappa identity decider disagrees with "
                                             "exhaustive evaluation for " +
                                                 format_kappa_word(k));
    if (!c.ok) return;
  }
}

// ---- criterion 8: conjugation coherence -------------------------------------
void crit_conjugation(Check& c) {
  {
    Table want = adjacent_transposition(4);
    Table got = kappa_conjugate(adjacent_transposition(1), kappa_inverse(kappa_321()));
    c.expect(got == want, "kappa_321-conjugate of tau_1,2 is not tau_4,5");
    if (!c.ok) return;
  }
  Rng rng(1008);
  for (int t = 0; t < 100; ++t) {
    Table phi = random_sharp_table(rng, 2 + int(rng.below(7)), true);
    if (phi.table_size() > 15) {
      --t;
      continue;
    }
    KappaWord k;
    switch (rng.below(4)) {
      case 0: k = {{1, 1}}; break;
      case 1: k = {{2, 1}}; break;
      case 2: k = {{3, 1}}; break;
      default: k = kappa_321(); break;
    }
    if (rng.coin()) k = kappa_inverse(k);
    Table psi = kappa_conjugate(phi, k);
    c.expect(psi.member_of(GroupTag::G31_Mod3_01_Sharp), "conjugate left the subgroup");
    c.expect(kappa_conjugate(psi, kappa_inverse(k)) == phi, "conjugation does not round-trip");
    KappaWord kinv = kappa_inverse(k);
    for (int probe = 0; probe < 500; ++probe) {
      size_t blen = rng.below(psi.max_word_len() + 6);
      Word w;
      for (size_t i = 0; i < blen; ++i) w.push_back(rng.coin() ? Letter::One : Letter::Zero);
      w.push_back(Letter::Hash);
      if (rng.coin()) w.push_back(rng.coin() ? Letter::One : Letter::Zero);
      auto direct = psi.apply(w);
      auto a = kappa_apply(kinv, w);
      std::optional<Word> b;
      if (a) b = phi.apply(*a);
      std::optional<Word> chain;
      if (b) chain = kappa_apply(k, *b);
      if (direct && chain) c.expect(*direct == *chain, "conjugate disagrees pointwise");
      c.expect(bool(direct) == bool(chain), "conjugate domain mismatch");
      if (!c.ok) return;
    }
  }
}

// ---- criterion 9: factorization round trip ----------------------------------
void crit_factorization(Check& c) {
  Rng rng(1009);
  GeneratorSet gens = enumerate_generators(GroupTag::G31_01_Sharp, 7);
  for (int t = 0; t < 100; ++t) {
    Table phi = random_sharp_table(rng, 2 + int(rng.below(10)), false);
    if (phi.table_size() > 21) {
      --t;
      continue;
    }
    Factorization f = factor(phi, gens);
    c.expect(compose_ids(gens, f.ids) == phi, "factor composite differs from the element");
    c.expect(f.max_intermediate <= std::max(phi.table_size(), size_t(1)),
             "intermediate table-size " + std::to_string(f.max_intermediate) + " exceeds " +
                 std::to_string(phi.table_size()));
    if (!c.ok) return;
  }
}

// ---- criterion 10: group/oracle equivalence pipeline ------------------------
void crit_equiv_pipeline(Check& c) {
  Rng rng(1010);
  for (int t = 0; t < 30; ++t) {
    Circuit a = random_circuit(rng, 10, 4);
    Circuit b = t % 2 == 0 ? equivalent_variant(rng, a) : mutated_variant(rng, a);
    EquivResult oracle = circuit_equiv(a, b, EquivMode::Oracle);
    EquivResult group = circuit_equiv(a, b, EquivMode::Group);
    c.expect(oracle.equivalent == group.equivalent, "group mode disagrees with the oracle");
    circuit_equiv(a, b, EquivMode::Both);  // internal agreement assert
    if (t % 2 == 0) c.expect(oracle.equivalent, "equivalent-by-construction pair rejected");
    if (!c.ok) return;
  }
}

}  // namespace

int run_acceptance(const std::function<void(const std::string&)>& out, int only_criterion) {
  struct Item {
    int num;
    const char* name;
    void (*fn)(Check&);
    long budget_ms;
  };
  static const Item items[] = {
      {1, "transposition table-size law", crit_transposition_sizes, 5000},
      {2, "simulation correctness", [](Check& c) { crit_simulation(c); }, 60000},
      {3, "strong simulation circuit-independence", crit_strong_independence, 60000},
      {4, "compiler bounds", crit_compiler_bounds, 10000},
      {5, "decider agreement", crit_decider_agreement, 120000},
      {6, "commutation test", crit_commutation, 60000},
      {7, "kappa word problem", crit_kappa_word_problem, 120000},
      {8, "conjugation coherence", crit_conjugation, 60000},
      {9, "factorization round trip", crit_factorization, 60000},
      {10, "group/oracle equivalence pipeline", crit_equiv_pipeline, 120000},
  };
  int failed = 0;
  for (const Item& it : items) {
    if (only_criterion && it.num != only_criterion) continue;
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      it.fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ms > it.budget_ms)
      c.expect(false, "exceeded the " + std::to_string(it.budget_ms) + " ms budget");
    std::ostringstream os;
    os << "criterion " << it.num << " (" << it.name << "): "
       << (c.ok ? "PASS" : "FAIL") << " [" << ms << " ms]";
    if (!c.ok) os << " -- " << c.why;
    out(os.str());
    if (!c.ok) ++failed;
  }
  return failed;
}

}  // namespace g31
