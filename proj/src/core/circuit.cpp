#include "core/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace g31 {

namespace {

int arity(GateKind k) { return k == GateKind::And || k == GateKind::Or ? 2 : 1; }
int outs_of(GateKind k) { return k == GateKind::Fork ? 2 : 1; }

}  // namespace

int Circuit::size() const {
  int k1 = 0, k2 = 0;
  for (const Gate& g : gates)
    (g.kind == GateKind::And || g.kind == GateKind::Or) ? ++k2 : ++k1;
  return k1 + 2 * k2 + n();
}

void validate_circuit(const Circuit& c) {
  if (c.m < 1) fail(Err::ArityError, "need at least one input");
  if (c.outputs.empty()) fail(Err::ArityError, "need at least one output");
  // every source consumed exactly once
  std::map<std::pair<int, int>, int> uses;  // (producer: -1-in | gate, port)
  auto key = [&](const Src& s) {
    return s.input >= 0 ? std::pair{-1 - s.input, 0} : std::pair{s.gate, s.port};
  };
  auto touch = [&](const Src& s) {
    if (s.input >= 0) {
      if (s.input >= c.m) fail(Err::Parse, "input index out of range");
    } else {
      if (s.gate < 0 || s.gate >= int(c.gates.size()))
        fail(Err::Parse, "gate reference out of range");
      int op = outs_of(c.gates[s.gate].kind);
      if (s.port < 0 || s.port >= op) fail(Err::Parse, "bad output port");
    }
    ++uses[key(s)];
  };
  for (const Gate& g : c.gates) {
    if (int(g.ins.size()) != arity(g.kind)) fail(Err::ArityError, "gate arity mismatch: " + g.id);
    for (const Src& s : g.ins) touch(s);
  }
  for (const Src& s : c.outputs) touch(s);
  for (int i = 0; i < c.m; ++i)
    if (uses[{-1 - i, 0}] != 1) fail(Err::FanoutError, "input " + std::to_string(i) +
                                                           " used " + std::to_string(uses[{-1 - i, 0}]) + " times");
  for (int gi = 0; gi < int(c.gates.size()); ++gi)
    for (int p = 0; p < outs_of(c.gates[gi].kind); ++p)
      if (uses[{gi, p}] != 1)
        fail(Err::FanoutError, "output of gate " + c.gates[gi].id + " used " +
                                   std::to_string(uses[{gi, p}]) + " times");
  // acyclicity
  std::vector<int> state(c.gates.size(), 0);
  std::vector<int> stack;
  for (int s0 = 0; s0 < int(c.gates.size()); ++s0) {
    if (state[s0]) continue;
    stack.push_back(s0);
    while (!stack.empty()) {
      int g = stack.back();
      if (state[g] == 0) {
        state[g] = 1;
        for (const Src& s : c.gates[g].ins)
          if (s.gate >= 0) {
            if (state[s.gate] == 1) fail(Err::CycleError, "cycle through gate " + c.gates[s.gate].id);
            if (state[s.gate] == 0) stack.push_back(s.gate);
          }
      } else {
        state[g] = 2;
        stack.pop_back();
      }
    }
  }
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  std::map<std::string, int> ids;
  struct PendingGate {
    std::string id;
    GateKind kind;
    std::vector<std::string> srcs;
  };
  std::vector<PendingGate> pend;
  std::vector<std::string> out_srcs;
  bool have_inputs = false;

  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw[0] == '#') continue;
    if (kw == "inputs") {
      if (!(ls >> c.m)) fail(Err::Parse, "bad inputs line");
      have_inputs = true;
    } else if (kw == "gate") {
      PendingGate g;
      std::string kind;
      if (!(ls >> g.id >> kind)) fail(Err::Parse, "bad gate line: " + line);
      if (kind == "NOT") g.kind = GateKind::Not;
      else if (kind == "AND") g.kind = GateKind::And;
      else if (kind == "OR") g.kind = GateKind::Or;
      else if (kind == "FORK") g.kind = GateKind::Fork;
      else if (kind == "ID") g.kind = GateKind::Id;
      else fail(Err::Parse, "unknown gate kind: " + kind);
      std::string s;
      while (ls >> s) g.srcs.push_back(s);
      if (ids.count(g.id)) fail(Err::Parse, "duplicate gate id: " + g.id);
      ids[g.id] = int(pend.size());
      pend.push_back(std::move(g));
    } else if (kw == "outputs") {
      std::string s;
      while (ls >> s) out_srcs.push_back(s);
    } else {
      fail(Err::Parse, "unknown directive: " + kw);
    }
  }
  if (!have_inputs) fail(Err::Parse, "missing inputs line");

  auto resolve = [&](const std::string& s) -> Src {
    if (s.rfind("in.", 0) == 0) {
      try {
        return Src{std::stoi(s.substr(3)), -1, 0};
      } catch (...) {
        fail(Err::Parse, "bad source: " + s);
      }
    }
    std::string base = s;
    int port = 0;
    if (size_t dot = s.rfind('.'); dot != std::string::npos && ids.count(s.substr(0, dot))) {
      base = s.substr(0, dot);
      try {
        port = std::stoi(s.substr(dot + 1));
      } catch (...) {
        fail(Err::Parse, "bad source: " + s);
      }
    }
    auto it = ids.find(base);
    if (it == ids.end()) fail(Err::Parse, "unknown source: " + s);
    if (pend[size_t(it->second)].kind == GateKind::Fork && base == s)
      fail(Err::Parse, "FORK output needs a .0/.1 port: " + s);
    return Src{-1, it->second, port};
  };
  for (auto& g : pend) {
    Gate out{g.id, g.kind, {}};
    for (auto& s : g.srcs) out.ins.push_back(resolve(s));
    c.gates.push_back(std::move(out));
  }
  for (auto& s : out_srcs) c.outputs.push_back(resolve(s));
  validate_circuit(c);
  return c;
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "inputs " << c.m << "\n";
  auto src = [&](const Src& s) {
    if (s.input >= 0) return "in." + std::to_string(s.input);
    std::string r = c.gates[size_t(s.gate)].id;
    if (c.gates[size_t(s.gate)].kind == GateKind::Fork) r += "." + std::to_string(s.port);
    return r;
  };
  for (const Gate& g : c.gates) {
    os << "gate " << g.id << ' ';
    switch (g.kind) {
      case GateKind::Not: os << "NOT"; break;
      case GateKind::And: os << "AND"; break;
      case GateKind::Or: os << "OR"; break;
      case GateKind::Fork: os << "FORK"; break;
      case GateKind::Id: os << "ID"; break;
    }
    for (const Src& s : g.ins) os << ' ' << src(s);
    os << "\n";
  }
  os << "outputs";
  for (const Src& s : c.outputs) os << ' ' << src(s);
  os << "\n";
  return os.str();
}

std::vector<bool> eval_circuit(const Circuit& c, const std::vector<bool>& bits) {
  if (int(bits.size()) != c.m) fail(Err::ArityError, "input width mismatch");
  // topological evaluation
  std::vector<std::vector<bool>> val(c.gates.size());
  std::vector<bool> done(c.gates.size(), false);
  auto src_val = [&](const Src& s) -> bool {
    return s.input >= 0 ? bits[size_t(s.input)] : val[size_t(s.gate)][size_t(s.port)];
  };
  std::vector<int> stack;
  for (int g0 = 0; g0 < int(c.gates.size()); ++g0) {
    if (done[g0]) continue;
    stack.push_back(g0);
    while (!stack.empty()) {
      int g = stack.back();
      bool ready = true;
      for (const Src& s : c.gates[size_t(g)].ins)
        if (s.gate >= 0 && !done[size_t(s.gate)]) {
          stack.push_back(s.gate);
          ready = false;
        }
      if (!ready) continue;
      stack.pop_back();
      if (done[size_t(g)]) continue;
      const Gate& gt = c.gates[size_t(g)];
      bool a = src_val(gt.ins[0]);
      switch (gt.kind) {
        case GateKind::Not: val[size_t(g)] = {!a}; break;
        case GateKind::Id: val[size_t(g)] = {a}; break;
        case GateKind::Fork: val[size_t(g)] = {a, a}; break;
        case GateKind::And: val[size_t(g)] = {a && src_val(gt.ins[1])}; break;
        case GateKind::Or: val[size_t(g)] = {a || src_val(gt.ins[1])}; break;
      }
      done[size_t(g)] = true;
    }
  }
  std::vector<bool> out;
  out.reserve(c.outputs.size());
  for (const Src& s : c.outputs) out.push_back(src_val(s));
  return out;
}

LayeredCircuit strictify(const Circuit& c) {
  validate_circuit(c);
  // levels
  std::vector<int> lvl(c.gates.size(), -1);
  std::vector<int> stack;
  auto src_lvl = [&](const Src& s) { return s.input >= 0 ? 0 : lvl[size_t(s.gate)]; };
  for (int g0 = 0; g0 < int(c.gates.size()); ++g0) {
    if (lvl[g0] >= 0) continue;
    stack.push_back(g0);
    while (!stack.empty()) {
      int g = stack.back();
      bool ready = true;
      for (const Src& s : c.gates[size_t(g)].ins)
        if (s.gate >= 0 && lvl[size_t(s.gate)] < 0) {
          stack.push_back(s.gate);
          ready = false;
        }
      if (!ready) continue;
      stack.pop_back();
      if (lvl[size_t(g)] >= 0) continue;
      int l = 0;
      for (const Src& s : c.gates[size_t(g)].ins) l = std::max(l, src_lvl(s));
      lvl[size_t(g)] = l + 1;
    }
  }
  int depth = 1;
  for (int g = 0; g < int(c.gates.size()); ++g) depth = std::max(depth, lvl[size_t(g)]);
  for (const Src& s : c.outputs) depth = std::max(depth, std::max(1, src_lvl(s)));

  LayeredCircuit lc;
  lc.m = c.m;
  lc.slices.resize(size_t(depth));

  // Interface vectors are built level by level; pos[level] maps a source key
  // to its position in Y^level.
  struct Key {
    int producer, port;  // producer: -1-k for input k
    auto operator<=>(const Key&) const = default;
  };
  auto key_of = [&](const Src& s) {
    return s.input >= 0 ? Key{-1 - s.input, 0} : Key{s.gate, s.port};
  };
  std::vector<std::map<Key, int>> pos(size_t(depth) + 1);
  for (int i = 0; i < c.m; ++i) pos[0][Key{-1 - i, 0}] = i;

  // Gates of the original circuit in id order per level, then ID chains to
  // carry every value that is consumed above the next level.
  for (int level = 1; level <= depth; ++level) {
    Slice& sl = lc.slices[size_t(level - 1)];
    sl.in_count = int(pos[size_t(level - 1)].size());
    auto place = [&](Key k) {
      int p = int(pos[size_t(level)].size());
      pos[size_t(level)][k] = p;
      return p;
    };
    for (int g = 0; g < int(c.gates.size()); ++g) {
      if (lvl[size_t(g)] != level) continue;
      SliceGate sg;
      sg.kind = c.gates[size_t(g)].kind;
      for (const Src& s : c.gates[size_t(g)].ins) {
        auto it = pos[size_t(level - 1)].find(key_of(s));
        if (it == pos[size_t(level - 1)].end()) fail(Err::Internal, "missing carried value");
        sg.in_pos.push_back(it->second);
      }
      for (int p = 0; p < outs_of(sg.kind); ++p) place(Key{g, p});
      sl.gates.push_back(std::move(sg));
    }
    // carry: every value at level-1 consumed at a later level gets an ID gate
    for (auto& [k, p] : pos[size_t(level - 1)]) {
      bool consumed_here = false;
      // consumed at this level iff some gate at this level reads it
      for (int g = 0; g < int(c.gates.size()); ++g) {
        if (lvl[size_t(g)] != level) continue;
        for (const Src& s : c.gates[size_t(g)].ins)
          if (key_of(s) == k) consumed_here = true;
      }
      if (consumed_here) continue;
      bool needed_later = false;
      if (level < depth) {
        for (int g = 0; g < int(c.gates.size()); ++g) {
          if (lvl[size_t(g)] <= level) continue;
          for (const Src& s : c.gates[size_t(g)].ins)
            if (key_of(s) == k) needed_later = true;
        }
      }
      for (const Src& s : c.outputs)
        if (key_of(s) == k) needed_later = true;
      if (!needed_later) continue;
      SliceGate sg;
      sg.kind = GateKind::Id;
      sg.in_pos.push_back(p);
      pos[size_t(level)][k] = int(pos[size_t(level)].size());
      sl.gates.push_back(std::move(sg));
      ++lc.inserted_ids;
    }
    sl.out_count = int(pos[size_t(level)].size());
    int k1 = 0, k2 = 0;
    for (auto& sg : sl.gates)
      (sg.kind == GateKind::And || sg.kind == GateKind::Or) ? ++k2 : ++k1;
    sl.size = k1 + 2 * k2 + sl.out_count;
    lc.strict_size += sl.size;
  }
  // ID chains keep keys alive level by level, but the slice loop above only
  // re-registers a key when it inserts an ID gate, so the map for each level
  // already holds exactly the carried values.
  for (const Src& s : c.outputs) {
    auto it = pos[size_t(depth)].find(key_of(s));
    if (it == pos[size_t(depth)].end()) fail(Err::Internal, "output not carried to top level");
    lc.out_perm.push_back(it->second);
  }
  return lc;
}

std::vector<bool> eval_layered(const LayeredCircuit& lc, const std::vector<bool>& bits) {
  std::vector<bool> cur = bits;
  for (const Slice& sl : lc.slices) {
    std::vector<bool> next;
    for (const SliceGate& g : sl.gates) {
      bool a = cur[size_t(g.in_pos[0])];
      switch (g.kind) {
        case GateKind::Not: next.push_back(!a); break;
        case GateKind::Id: next.push_back(a); break;
        case GateKind::Fork: next.push_back(a); next.push_back(a); break;
        case GateKind::And: next.push_back(a && cur[size_t(g.in_pos[1])]); break;
        case GateKind::Or: next.push_back(a || cur[size_t(g.in_pos[1])]); break;
      }
    }
    cur = std::move(next);
  }
  std::vector<bool> out;
  for (int p : lc.out_perm) out.push_back(cur[size_t(p)]);
  return out;
}

int pad(int n) { return (3 - n % 3) % 3; }

namespace {

// Token sequences are built in application order (first applied first) and
// reversed once at the end, since a GenWord applies its rightmost token first.
struct Emitter {
  std::vector<GenTok> app;

  void tok(TokKind k, int i = 0, int sign = 1) { app.push_back({k, i, sign}); }
  // τ_{a,b} expanded over adjacent transpositions (no-op when a == b).
  void swap2(int a, int b) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    for (int k = a; k < b; ++k) tok(TokKind::Tau, k);
    for (int k = b - 2; k >= a; --k) tok(TokKind::Tau, k);
  }
  // left rotation of positions lo..hi, `times` times
  void rotate(int lo, int hi, int times) {
    for (int t = 0; t < times; ++t)
      for (int k = lo; k < hi; ++k) tok(TokKind::Tau, k);
  }
  // Rearrange the block lo..lo+K-1 so that the element currently at relative
  // position desired[t] ends up at relative position t.
  void perm(int lo, const std::vector<int>& desired) {
    int K = int(desired.size());
    std::vector<int> cur(static_cast<size_t>(K));
    for (int i = 0; i < K; ++i) cur[size_t(i)] = i;
    for (int t = 0; t < K; ++t) {
      int p = t;
      while (cur[size_t(p)] != desired[size_t(t)]) ++p;
      for (int q = p; q > t; --q) {
        tok(TokKind::Tau, lo + q - 1);
        std::swap(cur[size_t(q - 1)], cur[size_t(q)]);
      }
    }
  }
};

// State while a slice's gates execute: string = 0^{1+p} Y_c U_d (unconsumed) …
struct SliceState {
  int p = 0;  // pad zeros behind the leading 0
  int c = 0;  // outputs produced
  int d = 0;  // inputs consumed
};

void emit_gate(Emitter& em, SliceState& st, GateKind kind) {
  int outs = outs_of(kind);
  int P = st.p;
  if ((outs == 1 && P == 0) || (outs == 2 && P <= 1)) {
    em.tok(TokKind::F4);
    P += 3;
  }
  int pos_a = P + st.c + st.d + 1;
  switch (kind) {
    case GateKind::Id:
    case GateKind::Not:
      em.swap2(2, pos_a);
      em.tok(TokKind::Or);
      if (kind == GateKind::Not) em.tok(TokKind::Not);
      em.swap2(2, pos_a);
      break;
    case GateKind::And:
    case GateKind::Or:
      em.swap2(1, pos_a);
      em.swap2(2, pos_a + 1);
      em.tok(kind == GateKind::Or ? TokKind::Or : TokKind::And);
      em.swap2(2, pos_a + 1);
      em.swap2(1, pos_a);
      break;
    case GateKind::Fork:
      em.swap2(2, pos_a);
      em.tok(TokKind::Or);
      em.tok(TokKind::Tau, 0);
      em.tok(TokKind::Or);
      em.swap2(2, pos_a);
      break;
  }
  // rotate the fresh output(s) past the zeros and the previous outputs
  em.rotate(0, P + st.c, outs);
  st.p = P - outs;
  st.c += outs;
  st.d += arity(kind);
}

// ρ + gates + U-restore: 0·Y^{prev}·T ↦ 0^{1+p} Y U(interface order) T
// with p = pad(out_count).
void emit_slice(Emitter& em, const Slice& sl) {
  std::vector<int> cons;
  for (const SliceGate& g : sl.gates)
    for (int ip : g.in_pos) cons.push_back(ip);
  if (int(cons.size()) != sl.in_count) fail(Err::Internal, "slice does not consume its interface");
  em.perm(1, cons);  // consumption order
  SliceState st;
  for (const SliceGate& g : sl.gates) emit_gate(em, st, g.kind);
  // restore U to interface order: content at relative position k is
  // Y^{prev}[cons[k]]; we want Y^{prev}[t] at relative position t.
  std::vector<int> inv(cons.size());
  for (int k = 0; k < int(cons.size()); ++k) inv[size_t(cons[size_t(k)])] = k;
  em.perm(st.p + st.c + 1, inv);
}

void emit_padshift(Emitter& em, int p, int nout) {
  em.rotate(1, p + nout, p);
}

}  // namespace

GenWord compile_slice(const Circuit& s) {
  LayeredCircuit lc = strictify(s);
  if (lc.depth() != 1) fail(Err::NotDepthOne, "circuit has depth > 1");
  Emitter em;
  emit_slice(em, lc.slices[0]);
  // declared output order
  int p = pad(lc.slices[0].out_count);
  em.perm(p + 1, lc.out_perm);
  return GenWord(em.app.rbegin(), em.app.rend());
}

namespace {

std::vector<GenTok> compile_app(const LayeredCircuit& lc) {
  Emitter em;
  int L = lc.depth();
  int m = lc.m, nL = lc.slices[size_t(L - 1)].out_count;
  int pL = pad(nL);

  // forward pass
  std::vector<GenTok> fwd_lower;  // B_1 … B_{L-1}, needed again for the replay
  for (int l = 0; l < L; ++l) {
    Emitter se;
    emit_slice(se, lc.slices[size_t(l)]);
    emit_padshift(se, pad(lc.slices[size_t(l)].out_count), lc.slices[size_t(l)].out_count);
    if (l < L - 1) fwd_lower.insert(fwd_lower.end(), se.app.begin(), se.app.end());
    em.app.insert(em.app.end(), se.app.begin(), se.app.end());
  }
  // declared output order inside the Y^L block
  em.perm(1, lc.out_perm);

  // π₁: junk first
  int full = 0;
  for (int l = 0; l < L; ++l)
    full += lc.slices[size_t(l)].out_count + pad(lc.slices[size_t(l)].out_count);
  full += m;
  em.rotate(1, full, nL + pL);

  // inverse replay of the lower slices
  for (auto it = fwd_lower.rbegin(); it != fwd_lower.rend(); ++it)
    em.app.push_back({it->kind, it->i, -it->sign});

  // π₂: 0·x·Y^L·0^{p_L} ↦ 0^{1+p_L}·Y^L·x
  em.rotate(1, m + nL + pL, m);
  em.rotate(1, nL + pL, nL);
  return std::move(em.app);
}

}  // namespace

GenWord compile_circuit(const Circuit& c) {
  LayeredCircuit lc = strictify(c);
  auto app = compile_app(lc);
  return GenWord(app.rbegin(), app.rend());
}

GenWord compile_strong(const Circuit& c) {
  LayeredCircuit lc = strictify(c);
  int m = lc.m, n = lc.slices.back().out_count, p = pad(n);
  Emitter em;
  // w₀: append 3(n+m) zeros behind the inputs
  int z = 3 * (n + m);
  for (int i = 0; i < n + m; ++i) em.tok(TokKind::F4);
  for (int j = 1; j <= m; ++j) em.swap2(j, z + j);
  // w_C
  auto app = compile_app(lc);
  em.app.insert(em.app.end(), app.begin(), app.end());
  // w_{L+1}: rotate the pad block back to the front, then eat it
  em.rotate(1, p + n + m + z, p + n + m);
  for (int i = 0; i < n + m; ++i) em.tok(TokKind::F4, 0, -1);
  return GenWord(em.app.rbegin(), em.app.rend());
}

CompileMetrics word_metrics(const GenWord& w) {
  CompileMetrics mt;
  mt.tokens = w.size();
  mt.unary_tokens = unary_length(w);
  for (const GenTok& t : w)
    if (t.kind == TokKind::Tau) mt.max_tau = std::max(mt.max_tau, t.i + 1);
  return mt;
}

}  // namespace g31
