#include "core/gens.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace g31 {

namespace {

Table build_phi_not() {
  std::vector<Table::Entry> e;
  e.emplace_back(Word::parse("0"), Word::parse("1"));
  e.emplace_back(Word::parse("1"), Word::parse("0"));
  e.emplace_back(Word::parse("#"), Word::parse("#"));
  return Table::from_pairs(std::move(e));
}

Table build_phi_gate(bool is_or) {
  // 0x₁x₂ -> (x₁∘x₂)x₁x₂,  1x₁x₂ -> (¬(x₁∘x₂))x₁x₂,  identity on {0,1}^{≤2}#
  std::vector<Table::Entry> e;
  for (int lead = 0; lead < 2; ++lead)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2) {
        int g = is_or ? (x1 | x2) : (x1 & x2);
        if (lead) g ^= 1;
        Word d = Word::bits_of(uint64_t(lead << 2 | x1 << 1 | x2), 3);
        Word i = Word::bits_of(uint64_t(g << 2 | x1 << 1 | x2), 3);
        e.emplace_back(std::move(d), std::move(i));
      }
  for (int len = 0; len <= 2; ++len)
    for (uint64_t b = 0; b < (uint64_t(1) << len); ++b) {
      Word w = Word::bits_of(b, len) + Letter::Hash;
      e.emplace_back(w, w);
    }
  return Table::from_pairs(std::move(e));
}

Table build_phi_zero_fork4() {
  std::vector<Table::Entry> e;
  auto P = [](const char* a, const char* b) {
    return Table::Entry{Word::parse(a), Word::parse(b)};
  };
  e.push_back(P("0", "0000"));
  e.push_back(P("#", "000#"));
  e.push_back(P("10", "01"));
  e.push_back(P("1#", "0#"));
  e.push_back(P("110", "001"));
  e.push_back(P("11#", "00#"));
  e.push_back(P("1110", "0001"));
  e.push_back(P("111#", "#"));
  e.push_back(P("1111", "1"));
  return Table::from_pairs(std::move(e));
}

std::mutex tau_mu;
std::map<int, Table> tau_cache;

}  // namespace

const Table& phi_not() {
  static Table t = build_phi_not();
  return t;
}
const Table& phi_or() {
  static Table t = build_phi_gate(true);
  return t;
}
const Table& phi_and() {
  static Table t = build_phi_gate(false);
  return t;
}
const Table& phi_zero_fork4() {
  static Table t = build_phi_zero_fork4();
  return t;
}

GenWord tau_word_over_finite_gens(int i) {
  if (i < 0) fail(Err::IndexError, "negative transposition index");
  if (i <= 1) return {GenTok{TokKind::Tau, i, 1}};
  // τ_{3n+1,3n+2} = κ₃₂₁⁻ⁿ τ₁,₂ κ₃₂₁ⁿ
  // τ_{3n+2,3n+3} = κ₁⁻¹ κ₃₂₁⁻ⁿ τ₁,₂ κ₃₂₁ⁿ κ₁
  // τ_{3n+3,3n+4} = κ₂⁻¹ κ₁⁻¹ κ₃₂₁⁻ⁿ τ₁,₂ κ₃₂₁ⁿ κ₁ κ₂
  int n, wrap;  // wrap = how many of κ₁, κ₂ sit outside the κ₃₂₁ powers
  switch (i % 3) {
    case 1: n = (i - 1) / 3; wrap = 0; break;
    case 2: n = (i - 2) / 3; wrap = 1; break;
    default: n = (i - 3) / 3; wrap = 2; break;
  }
  GenWord w;
  if (wrap >= 2) w.push_back({TokKind::K2, 0, -1});
  if (wrap >= 1) w.push_back({TokKind::K1, 0, -1});
  for (int t = 0; t < n; ++t) w.push_back({TokKind::K321, 0, -1});
  w.push_back({TokKind::Tau, 1, 1});
  for (int t = 0; t < n; ++t) w.push_back({TokKind::K321, 0, 1});
  if (wrap >= 1) w.push_back({TokKind::K1, 0, 1});
  if (wrap >= 2) w.push_back({TokKind::K2, 0, 1});
  return w;
}

std::optional<Word> apply_adjacent_transposition(int i, const Word& w) {
  size_t hp = w.first_hash();
  size_t bits = hp == std::string::npos ? w.size() : hp;
  if (bits >= size_t(i) + 2) {
    Word out = w;
    Letter a = out.at(size_t(i));
    out.set(size_t(i), out.at(size_t(i) + 1));
    out.set(size_t(i) + 1, a);
    return out;
  }
  if (hp == std::string::npos) return std::nullopt;  // strict prefix of the domain
  if (i <= 1) return w;  // identity on the short arguments
  // κ-conjugation word; only its τ_{1,2} core needs the rule above
  GenWord def = tau_word_over_finite_gens(i);
  Word cur = w;
  for (auto it = def.rbegin(); it != def.rend(); ++it) {
    if (it->kind == TokKind::Tau) {
      auto r = apply_adjacent_transposition(it->i, cur);
      if (!r) return std::nullopt;
      cur = std::move(*r);
    } else {
      auto r = kappa_apply(token_kappa(*it), cur);
      if (!r) return std::nullopt;
      cur = std::move(*r);
    }
  }
  return cur;
}

const Table& adjacent_transposition(int i) {
  if (i < 0) fail(Err::IndexError, "negative transposition index");
  if (i > 18) fail(Err::Budget, "transposition table has 2^" + std::to_string(i + 3) +
                                    " entries; apply it functionally instead");
  {
    std::lock_guard<std::mutex> lock(tau_mu);
    auto it = tau_cache.find(i);
    if (it != tau_cache.end()) return it->second;
  }
  // Built outside the lock: the defining word for i >= 2 applies τ_{1,2}.
  std::vector<Table::Entry> e;
  // Long arguments: swap bit positions i, i+1 on {0,1}^{i+2}.
  for (uint64_t b = 0; b < (uint64_t(1) << (i + 2)); ++b) {
    Word d = Word::bits_of(b, i + 2);
    Word im = d;
    Letter a = im.at(size_t(i));
    im.set(size_t(i), im.at(size_t(i) + 1));
    im.set(size_t(i) + 1, a);
    e.emplace_back(std::move(d), std::move(im));
  }
  // Short arguments x# with |x| ≤ i+1.
  std::optional<WordEval> defword;
  if (i >= 2) defword.emplace(tau_word_over_finite_gens(i));
  for (int len = 0; len <= i + 1; ++len)
    for (uint64_t b = 0; b < (uint64_t(1) << len); ++b) {
      Word w = Word::bits_of(b, len) + Letter::Hash;
      Word img = w;
      if (defword) {
        auto r = (*defword)(w);
        if (!r) fail(Err::Internal, "transposition word undefined on a # point");
        img = std::move(*r);
      }
      e.emplace_back(std::move(w), std::move(img));
    }
  Table t = Table::from_pairs(std::move(e));
  std::lock_guard<std::mutex> lock(tau_mu);
  auto [pos, ok] = tau_cache.emplace(i, std::move(t));
  return pos->second;
}

Table transposition(int i, int j) {
  if (i < 0 || j < 0) fail(Err::IndexError, "negative transposition index");
  if (i == j) return Table::identity();
  if (i > j) std::swap(i, j);
  // τ_{i,j} = τ_{i,i+1} … τ_{j-2,j-1} τ_{j-1,j} τ_{j-2,j-1} … τ_{i,i+1}
  Table t = adjacent_transposition(j - 1);
  for (int k = j - 2; k >= i; --k) {
    const Table& a = adjacent_transposition(k);
    t = a * t * a;
  }
  return t;
}

bool is_kappa_kind(TokKind k) {
  switch (k) {
    case TokKind::K0:
    case TokKind::K1:
    case TokKind::K2:
    case TokKind::K3:
    case TokKind::K321: return true;
    default: return false;
  }
}

const Table& token_table_base(TokKind kind, int i) {
  switch (kind) {
    case TokKind::Not: return phi_not();
    case TokKind::Or: return phi_or();
    case TokKind::And: return phi_and();
    case TokKind::F4: return phi_zero_fork4();
    case TokKind::Tau: return adjacent_transposition(i);
    default: fail(Err::KappaPresent, "kappa token has no finite table");
  }
}

KappaWord token_kappa(const GenTok& t) {
  switch (t.kind) {
    case TokKind::K0: return {{0, -t.sign}};
    case TokKind::K1: return {{1, -t.sign}};
    case TokKind::K2: return {{2, -t.sign}};
    case TokKind::K3: return {{3, -t.sign}};
    case TokKind::K321: return t.sign > 0 ? kappa_321() : kappa_inverse(kappa_321());
    default: fail(Err::Internal, "not a kappa token");
  }
}

WordEval::WordEval(const GenWord& w) {
  steps_.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Step s;
    if (is_kappa_kind(it->kind)) {
      s.kw = token_kappa(*it);
    } else if (it->kind == TokKind::Tau) {
      s.tau = it->i;  // involution; the sign does not matter
    } else {
      const Table& base = token_table_base(it->kind, it->i);
      if (it->sign > 0) {
        s.table = &base;
      } else {
        s.owned = base.inverse();
        s.table = nullptr;  // fixed after vector stops moving
      }
    }
    steps_.push_back(std::move(s));
  }
  for (auto& s : steps_)
    if (!s.table && s.tau < 0 && s.kw.empty()) s.table = &s.owned;
}

std::optional<Word> WordEval::operator()(const Word& x) const {
  Word cur = x;
  for (const auto& s : steps_) {
    std::optional<Word> r;
    if (s.tau >= 0)
      r = apply_adjacent_transposition(s.tau, cur);
    else if (s.table)
      r = s.table->apply(cur);
    else
      r = kappa_apply(s.kw, cur);
    if (!r) return std::nullopt;
    cur = std::move(*r);
  }
  return cur;
}

std::optional<Word> eval_word(const GenWord& w, const Word& x) { return WordEval(w)(x); }

GenWord gen_inverse(const GenWord& w) {
  GenWord r(w.rbegin(), w.rend());
  for (auto& t : r) t.sign = -t.sign;
  return r;
}

GenWord sigma_word(int i, int j) {
  if (!(0 <= i && i < j)) fail(Err::IndexError, "sigma needs 0 <= i < j");
  GenWord w;
  for (int k = j - 1; k >= i; --k) w.push_back({TokKind::Tau, k, 1});
  return w;
}

ScanForm scan_form(const GenWord& w) {
  // Invariant while scanning right to left: [scanned so far] = g · κ.
  constexpr size_t budget = size_t(1) << 18;
  ScanForm f{Table::identity(), {}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (is_kappa_kind(it->kind)) {
      KappaWord t = token_kappa(*it);
      f.g = kappa_conjugate(f.g, t);
      f.kappa.insert(f.kappa.begin(), t.begin(), t.end());
    } else {
      const Table& base = token_table_base(it->kind, it->i);
      f.g = it->sign > 0 ? base * f.g : base.inverse() * f.g;
    }
    if (f.g.table_size() > budget)
      fail(Err::Budget, "materialized table exceeds the size budget");
  }
  return f;
}

Table materialize(const GenWord& w) {
  bool has_kappa = false;
  for (auto& t : w) {
    if (is_kappa_kind(t.kind)) has_kappa = true;
    // canonical transposition tables are exponential in the subscript, and
    // long words pay a compose per token; refuse early instead of churning
    if (t.kind == TokKind::Tau && t.i > 16)
      fail(Err::Budget, "word touches position " + std::to_string(t.i + 1) +
                            "; its table is beyond the materialization budget");
  }
  if (w.size() > 5000)
    fail(Err::Budget, "word too long for materialization");
  if (!has_kappa) {
    constexpr size_t budget = size_t(1) << 18;
    Table g = Table::identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const Table& base = token_table_base(it->kind, it->i);
      g = it->sign > 0 ? base * g : base.inverse() * g;
      if (g.table_size() > budget)
        fail(Err::Budget, "materialized table exceeds the size budget");
    }
    return g;
  }
  ScanForm f = scan_form(w);
  if (!kappa_is_identity(f.kappa))
    fail(Err::KappaPresent, "word has a nontrivial kappa part; no finite table");
  return f.g;
}

GenWord parse_genword(std::string_view text) {
  GenWord w;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) {
      if (t[0] == '#') break;  // comment to end of line
      int sign = 1;
      if (t.size() > 1 && t.back() == '\'') {
        sign = -1;
        t.pop_back();
      }
      if (t == "not") {
        w.push_back({TokKind::Not, 0, sign});
      } else if (t == "or") {
        w.push_back({TokKind::Or, 0, sign});
      } else if (t == "and") {
        w.push_back({TokKind::And, 0, sign});
      } else if (t == "f4") {
        w.push_back({TokKind::F4, 0, sign});
      } else if (t == "K") {
        w.push_back({TokKind::K321, 0, sign});
      } else if (t == "k0" || t == "k1" || t == "k2" || t == "k3") {
        TokKind k = t == "k0"   ? TokKind::K0
                    : t == "k1" ? TokKind::K1
                    : t == "k2" ? TokKind::K2
                                : TokKind::K3;
        w.push_back({k, 0, sign});
      } else if (t[0] == 't') {
        size_t pos = 0;
        int idx;
        try {
          idx = std::stoi(t.substr(1), &pos);
        } catch (...) {
          fail(Err::Parse, "bad token: " + t);
        }
        if (pos + 1 != t.size() || idx < 0) fail(Err::Parse, "bad tau token: " + t);
        w.push_back({TokKind::Tau, idx, sign});
      } else if (t[0] == 's') {
        // s<i>_<j>: macro, expanded at parse time
        size_t us = t.find('_');
        if (us == std::string::npos) fail(Err::Parse, "bad sigma token: " + t);
        int i, j;
        try {
          i = std::stoi(t.substr(1, us - 1));
          j = std::stoi(t.substr(us + 1));
        } catch (...) {
          fail(Err::Parse, "bad sigma token: " + t);
        }
        GenWord s = sigma_word(i, j);
        if (sign < 0) s = gen_inverse(s);
        w.insert(w.end(), s.begin(), s.end());
      } else {
        fail(Err::Parse, "bad token: " + t);
      }
    }
  }
  return w;
}

std::string format_genword(const GenWord& w) {
  std::ostringstream os;
  bool first = true;
  for (auto& t : w) {
    if (!first) os << ' ';
    first = false;
    switch (t.kind) {
      case TokKind::Not: os << "not"; break;
      case TokKind::Or: os << "or"; break;
      case TokKind::And: os << "and"; break;
      case TokKind::F4: os << "f4"; break;
      case TokKind::Tau: os << 't' << t.i; break;
      case TokKind::K0: os << "k0"; break;
      case TokKind::K1: os << "k1"; break;
      case TokKind::K2: os << "k2"; break;
      case TokKind::K3: os << "k3"; break;
      case TokKind::K321: os << 'K'; break;
    }
    if (t.sign < 0) os << '\'';
  }
  return os.str();
}

size_t unary_length(const GenWord& w) {
  size_t n = 0;
  for (auto& t : w) n += 1 + (t.kind == TokKind::Tau ? size_t(t.i) : 0);
  return n;
}

}  // namespace g31
