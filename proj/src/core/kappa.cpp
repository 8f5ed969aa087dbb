#include "core/kappa.hpp"

#include <algorithm>
#include <sstream>

namespace g31 {

// γ₀ = ...(3n|3n+1|3n+2)...(0|1|2)
// γ₁ = ...(3n+1|3n+2|3n+3)...(1|2|3)(0)
// γ₂ = ...(3n+2|3n+3|3n+4)...(2|3|4)(1)(0)
// γ₃ = ...(3n+3|3n+4|3n+5)...(3|4|5)(2)(1)(0)
uint64_t gamma_apply(int idx, int sign, uint64_t n) {
  if (idx < 0 || idx > 3) fail(Err::IndexError, "gamma index out of range");
  if (n < uint64_t(idx)) return n;  // fixed points below the first cycle
  uint64_t r = (n - idx) % 3;
  if (sign > 0) return r < 2 ? n + 1 : n - 2;
  return r > 0 ? n - 1 : n + 2;
}

uint64_t gamma_word_apply(const GammaWord& w, uint64_t n) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) n = gamma_apply(it->idx, it->sign, n);
  return n;
}

bool gamma_word_is_identity(const GammaWord& w) {
  uint64_t bound = 2 * w.size() + 3;
  for (uint64_t n = 0; n <= bound; ++n)
    if (gamma_word_apply(w, n) != n) return false;
  return true;
}

KappaWord kappa_inverse(const KappaWord& k) {
  KappaWord r(k.rbegin(), k.rend());
  for (auto& t : r) t.sign = -t.sign;
  return r;
}

KappaWord kappa_321() { return {{1, -1}, {2, -1}, {3, -1}}; }

KappaWord kappa_pow(const KappaWord& k, int e) {
  if (e < 0) return kappa_pow(kappa_inverse(k), -e);
  KappaWord r;
  for (int i = 0; i < e; ++i) r.insert(r.end(), k.begin(), k.end());
  return r;
}

int kappa_block(int idx, int m) {
  int req = idx % 3;             // block length residue mod 3
  int min = idx == 0 ? 3 : idx + 3;  // 3, 4, 5, 6 -> κ₃ actually starts at 3
  if (idx == 3) min = 3;
  if (m < min) return 0;
  return m - ((m - req) % 3 + 3) % 3;
}

std::optional<Word> kappa_tok_apply(KappaTok t, const Word& w) {
  size_t hp = w.first_hash();
  if (hp == std::string::npos) return std::nullopt;
  int m = int(hp);
  int b = kappa_block(t.idx, m);
  Word out = w;
  for (int j = 0; j < b; ++j) out.set(size_t(gamma_apply(t.idx, t.sign, j)), w.at(j));
  return out;
}

std::optional<Word> kappa_apply(const KappaWord& k, const Word& w) {
  Word cur = w;
  for (auto it = k.rbegin(); it != k.rend(); ++it) {
    auto r = kappa_tok_apply(*it, cur);
    if (!r) return std::nullopt;
    cur = std::move(*r);
  }
  return cur;
}

std::vector<int> kappa_position_perm(const KappaWord& k, int len) {
  std::vector<int> perm(len);
  for (int i = 0; i < len; ++i) perm[i] = i;
  for (auto it = k.rbegin(); it != k.rend(); ++it) {
    int b = kappa_block(it->idx, len);
    for (int i = 0; i < len; ++i)
      if (perm[i] < b) perm[i] = int(gamma_apply(it->idx, it->sign, perm[i]));
  }
  return perm;
}

bool kappa_is_identity(const KappaWord& k) {
  int bound = 6 * int(k.size()) + 3;
  for (int len = 1; len <= bound; ++len) {
    auto p = kappa_position_perm(k, len);
    for (int i = 0; i < len; ++i)
      if (p[i] != i) return false;
  }
  return true;
}

namespace {

// Conjugation by a single κ token, built entry by entry.
//
// For ψ = κ φ κ⁻¹ and a long argument z# (pre-# block length n₀), the inner
// κ⁻¹ permutes z by the fixed map j -> value read from position γ^s(j)
// wherever the block clamp is out of the way, φ rewrites the prefix u -> v,
// and the outer κ permutes back at length n₀+Δ (Δ = |v|-|u| ≡ 0 mod 3).
// Away from small positions the net effect is a plain shift by Δ, so ψ's
// bit entries branch only on positions that feed the φ lookup. The DFS
// below descends exactly while the lookup (or the write-back) still depends
// on unseen positions, then validates the finitely many clamped levels
// (suffixes of length ≤ 5) pointwise.
struct ConjBuilder {
  const Table& phi;
  KappaTok tok;
  KappaTok inv;
  // bit-part trie of domC(phi)
  struct TNode {
    int c[2] = {-1, -1};
    int entry = -1;  // index into phi entries if leaf
  };
  std::vector<TNode> trie;
  std::vector<Table::Entry> out;

  explicit ConjBuilder(const Table& p, KappaTok t) : phi(p), tok(t), inv{t.idx, -t.sign} {
    trie.emplace_back();
    const auto& es = phi.entries();
    for (size_t i = 0; i < es.size(); ++i) {
      if (!es[i].first.is_bits()) continue;
      int cur = 0;
      const Word& u = es[i].first;
      for (size_t j = 0; j < u.size(); ++j) {
        int l = int(u.at(j));
        if (trie[cur].c[l] < 0) {
          trie[cur].c[l] = int(trie.size());
          trie.emplace_back();
        }
        cur = trie[cur].c[l];
      }
      trie[cur].entry = int(i);
    }
  }

  std::optional<Word> psi_point(const Word& w) const {
    auto a = kappa_tok_apply(inv, w);
    if (!a) return std::nullopt;
    auto b = phi.apply(*a);
    if (!b) return std::nullopt;
    return kappa_tok_apply(tok, *b);
  }

  // Attempts an entry at x; returns false if the node must be split.
  bool try_entry(const Word& x) {
    int L = int(x.size());
    // φ lookup along the unclamped read map.
    int cur = 0;
    const Table::Entry* en = nullptr;
    for (int j = 0; trie[cur].entry < 0; ++j) {
      uint64_t p = gamma_apply(tok.idx, tok.sign, uint64_t(j));
      if (p >= uint64_t(L)) return false;
      int l = int(x.at(size_t(p)));
      if (trie[cur].c[l] < 0) fail(Err::Internal, "trie walk fell off the domain code");
      cur = trie[cur].c[l];
    }
    en = &phi.entries()[size_t(trie[cur].entry)];
    const Word& u = en->first;
    const Word& v = en->second;
    int delta = int(v.size()) - int(u.size());
    // Write-back stability: every output position must pull from v or from a
    // known position of x; beyond the entry the net map must be a pure shift.
    int qstop = std::max(L + delta, delta + tok.idx + 12);
    for (int q = 0; q < qstop; ++q) {
      uint64_t src = gamma_apply(tok.idx, -tok.sign, uint64_t(q));
      if (q < L + delta) {
        if (src < v.size()) continue;
        uint64_t zi = src - uint64_t(delta);  // index into z' tail region + |u|
        uint64_t from = gamma_apply(tok.idx, tok.sign, zi);
        if (from >= uint64_t(L)) return false;
      } else {
        if (src < v.size()) return false;
        uint64_t zi = src - uint64_t(delta);
        if (gamma_apply(tok.idx, tok.sign, zi) != uint64_t(q - delta)) return false;
      }
    }
    // Candidate image word from the unclamped net map.
    Word y;
    for (int q = 0; q < L + delta; ++q) {
      uint64_t src = gamma_apply(tok.idx, -tok.sign, uint64_t(q));
      if (src < v.size()) {
        y.push_back(v.at(size_t(src)));
      } else {
        uint64_t from = gamma_apply(tok.idx, tok.sign, src - uint64_t(delta));
        y.push_back(x.at(size_t(from)));
      }
    }
    // Clamped levels: check suffixes of length ≤ 5 pointwise.
    for (int sl = 0; sl <= 5; ++sl) {
      for (uint64_t bits = 0; bits < (uint64_t(1) << sl); ++bits) {
        Word w = x;
        for (int i = sl - 1; i >= 0; --i) w.push_back(Letter((bits >> i) & 1));
        Word expect = y;
        for (int i = sl - 1; i >= 0; --i) expect.push_back(Letter((bits >> i) & 1));
        w.push_back(Letter::Hash);
        expect.push_back(Letter::Hash);
        auto got = psi_point(w);
        if (!got || *got != expect) return false;
      }
    }
    out.emplace_back(x, std::move(y));
    return true;
  }

  void dfs(const Word& x, int dmax) {
    if (int(x.size()) > dmax) fail(Err::Internal, "conjugation depth bound exceeded");
    if (try_entry(x)) return;
    dfs(x + Letter::Zero, dmax);
    dfs(x + Letter::One, dmax);
  }

  Table build() {
    int m = int(phi.max_word_len());
    int dmax = tok.idx + 3 * ((m + 2) / 3) + 9;
    dfs(Word(), dmax);
    Code p1;
    p1.reserve(out.size());
    for (auto& e : out) p1.push_back(e.first);
    for (const Word& w : strict_prefixes(p1)) {
      Word arg = w + Letter::Hash;
      auto val = psi_point(arg);
      if (!val) fail(Err::Internal, "conjugate undefined on a # point");
      out.emplace_back(arg, std::move(*val));
    }
    return Table::from_pairs(std::move(out));
  }
};

}  // namespace

Table kappa_conjugate(const Table& phi, const KappaWord& k) {
  if (!phi.member_of(GroupTag::G31_Mod3_01_Sharp))
    fail(Err::NotInSubgroup, "conjugation needs a bit- and #-preserving mod-3 table");
  Table cur = phi;
  for (auto it = k.rbegin(); it != k.rend(); ++it) {
    if (cur.is_identity()) continue;
    cur = ConjBuilder(cur, *it).build();
  }
  return cur;
}

KappaWord parse_kappa_word(std::string_view text) {
  KappaWord w;
  std::istringstream is{std::string(text)};
  std::string t;
  while (is >> t) {
    if (t[0] == '#') {  // comment to end of line
      std::string rest;
      std::getline(is, rest);
      continue;
    }
    int sign = 1;
    if (t.size() > 1 && t.back() == '\'') {
      sign = -1;
      t.pop_back();
    }
    if (t == "K") {
      KappaWord k = kappa_321();
      if (sign < 0) k = kappa_inverse(k);
      w.insert(w.end(), k.begin(), k.end());
    } else if (t.size() == 2 && t[0] == 'k' && t[1] >= '0' && t[1] <= '3') {
      w.push_back({t[1] - '0', sign});
    } else {
      fail(Err::Parse, "bad kappa token: " + t);
    }
  }
  return w;
}

std::string format_kappa_word(const KappaWord& k) {
  std::ostringstream os;
  bool first = true;
  for (auto& t : k) {
    if (!first) os << ' ';
    first = false;
    os << 'k' << t.idx;
    if (t.sign < 0) os << '\'';
  }
  return os.str();
}

}  // namespace g31
