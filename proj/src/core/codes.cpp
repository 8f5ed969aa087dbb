#include "core/codes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace g31 {

Code make_code(std::vector<Word> ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

bool is_prefix_code(std::span<const Word> ws) {
  // In sorted order a word that has an extension in the set is immediately
  // followed by one.
  std::vector<Word> s(ws.begin(), ws.end());
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == s[i + 1]) return false;
    if (s[i + 1].starts_with(s[i])) return false;
  }
  return true;
}

namespace {

struct Trie {
  struct Node {
    int c[3] = {-1, -1, -1};
    bool leaf = false;
  };
  std::vector<Node> n;
  Trie() { n.emplace_back(); }
  // Returns false if a word is a prefix of another.
  bool insert(const Word& w) {
    int cur = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (n[cur].leaf) return false;
      int l = int(w.at(i));
      if (n[cur].c[l] < 0) {
        n[cur].c[l] = int(n.size());
        n.emplace_back();
      }
      cur = n[cur].c[l];
    }
    if (n[cur].leaf) return false;
    for (int l = 0; l < 3; ++l)
      if (n[cur].c[l] >= 0) return false;
    n[cur].leaf = true;
    return true;
  }
  bool internal(int i) const {
    return !n[i].leaf && (n[i].c[0] >= 0 || n[i].c[1] >= 0 || n[i].c[2] >= 0);
  }
};

}  // namespace

bool is_maximal_prefix_code(std::span<const Word> ws) {
  if (ws.empty()) return false;
  Trie t;
  for (const Word& w : ws)
    if (!t.insert(w)) return false;
  for (size_t i = 0; i < t.n.size(); ++i) {
    if (t.n[i].leaf) continue;
    for (int l = 0; l < 3; ++l)
      if (t.n[i].c[l] < 0) return false;
  }
  return true;
}

bool is_maximal_binary_code(std::span<const Word> ws) {
  if (ws.empty()) return false;
  Trie t;
  for (const Word& w : ws) {
    if (!w.is_bits()) return false;
    if (!t.insert(w)) return false;
  }
  for (size_t i = 0; i < t.n.size(); ++i) {
    if (t.n[i].leaf) continue;
    if (t.n[i].c[0] < 0 || t.n[i].c[1] < 0) return false;
  }
  return true;
}

Code strict_prefixes(std::span<const Word> ws) {
  std::vector<Word> out;
  for (const Word& w : ws)
    for (size_t l = 0; l < w.size(); ++l) out.push_back(w.prefix(l));
  return make_code(std::move(out));
}

Mod3Card mod3_cardinality(std::span<const Word> ws) {
  Mod3Card c;
  for (const Word& w : ws) {
    switch (w.size() % 3) {
      case 0: ++c.n0; break;
      case 1: ++c.n1; break;
      default: ++c.n2; break;
    }
  }
  return c;
}

std::pair<Code, Code> endmarker_decompose(const Code& p) {
  Code p1, p2;
  for (const Word& w : p) {
    if (w.is_bits()) {
      p1.push_back(w);
    } else if (w.is_bits_hash()) {
      p2.push_back(w.prefix(w.size() - 1));
    } else {
      fail(Err::ShapeError, "member has an interior '#': " + w.str());
    }
  }
  p1 = make_code(std::move(p1));
  p2 = make_code(std::move(p2));
  if (!is_maximal_binary_code(p1))
    fail(Err::ShapeError, "bit part is not a maximal binary prefix code");
  if (p2 != strict_prefixes(p1))
    fail(Err::ShapeError, "'#' part is not the set of strict prefixes of the bit part");
  return {p1, p2};
}

Code complete_with_endmarkers(const Code& p1) {
  if (!is_maximal_binary_code(p1))
    fail(Err::NotACode, "not a maximal binary prefix code");
  Code out = p1;
  for (const Word& p : strict_prefixes(p1)) out.push_back(p + Letter::Hash);
  return make_code(std::move(out));
}

Code extend_to_maximal(std::span<const Word> pins, std::span<const Word> complement,
                       std::optional<size_t> target_size) {
  std::vector<Word> all(pins.begin(), pins.end());
  for (size_t i = 0; i < pins.size(); ++i)
    for (size_t j = i + 1; j < pins.size(); ++j)
      if (prefix_comparable(pins[i], pins[j]))
        fail(Err::PinConflict, "pins are prefix-comparable: " + pins[i].str() +
                                   " / " + pins[j].str());
  for (const Word& p : pins)
    for (const Word& c : complement)
      if (prefix_comparable(p, c))
        fail(Err::PinConflict,
             "pin comparable with complement: " + p.str() + " / " + c.str());
  all.insert(all.end(), complement.begin(), complement.end());

  Trie t;
  for (const Word& w : all)
    if (!t.insert(w)) fail(Err::PinConflict, "inputs are not a prefix code");

  // Fill in every missing sibling along the tree of pins ∪ complement.
  Code q;
  if (all.empty()) q.push_back(Word());
  {
    // Recover the word for each node by DFS.
    struct Item {
      int node;
      Word w;
    };
    std::vector<Item> stack{{0, Word()}};
    while (!stack.empty()) {
      auto [node, w] = stack.back();
      stack.pop_back();
      if (t.n[node].leaf) continue;
      bool internal = t.internal(node);
      if (!internal) continue;  // root of an empty trie
      for (int l = 0; l < 3; ++l) {
        if (t.n[node].c[l] >= 0)
          stack.push_back({t.n[node].c[l], w + Letter(l)});
        else
          q.push_back(w + Letter(l));
      }
    }
  }
  q = make_code(std::move(q));

  if (target_size) {
    size_t tgt = *target_size;
    if (tgt < q.size() || (tgt - q.size()) % 2 != 0)
      fail(Err::SizeError, "target size unreachable from base completion of size " +
                               std::to_string(q.size()));
    while (q.size() < tgt) {
      // Split the lexicographically least leaf into its three children.
      Word leaf = q.front();
      q.erase(q.begin());
      for (int l = 0; l < 3; ++l) q.push_back(leaf + Letter(l));
      q = make_code(std::move(q));
    }
  }
  return q;
}

std::vector<Word> inner_leaves_binary(const Code& p1) {
  std::vector<Word> out;
  for (size_t i = 0; i + 1 < p1.size(); ++i) {
    const Word& a = p1[i];
    const Word& b = p1[i + 1];
    if (a.size() == b.size() && a.size() >= 1 && a.at(a.size() - 1) == Letter::Zero &&
        b.at(b.size() - 1) == Letter::One && a.prefix(a.size() - 1) == b.prefix(b.size() - 1))
      out.push_back(a.prefix(a.size() - 1));
  }
  return out;
}

std::vector<Word> inner_leaves_full(const Code& p) {
  std::vector<Word> out;
  for (size_t i = 0; i + 2 < p.size(); ++i) {
    const Word& a = p[i];
    if (a.empty() || a.at(a.size() - 1) != Letter::Zero) continue;
    Word u = a.prefix(a.size() - 1);
    if (p[i + 1] == u + Letter::One && p[i + 2] == u + Letter::Hash) out.push_back(u);
  }
  return out;
}

namespace {

// Mutable full binary tree for the mod-3 leaf rearrangements.
struct BinTree {
  struct Node {
    int c[2] = {-1, -1};
    int parent = -1;
  };
  std::vector<Node> n;

  static BinTree build(const Code& code) {
    BinTree t;
    t.n.emplace_back();
    for (const Word& w : code) {
      int cur = 0;
      for (size_t i = 0; i < w.size(); ++i) {
        int l = int(w.at(i));
        if (t.n[cur].c[l] < 0) {
          t.n[cur].c[l] = int(t.n.size());
          t.n.emplace_back();
          t.n.back().parent = cur;
        }
        cur = t.n[cur].c[l];
      }
    }
    return t;
  }
  bool is_leaf(int i) const { return n[i].c[0] < 0 && n[i].c[1] < 0; }
  int depth(int i) const {
    int d = 0;
    while (n[i].parent >= 0) {
      i = n[i].parent;
      ++d;
    }
    return d;
  }
  bool is_ancestor(int a, int b) const {  // a strict ancestor of b
    b = n[b].parent;
    while (b >= 0) {
      if (b == a) return true;
      b = n[b].parent;
    }
    return false;
  }
  void leaves(int i, const Word& w, Code& out) const {
    if (is_leaf(i)) {
      out.push_back(w);
      return;
    }
    leaves(n[i].c[0], w + Letter::Zero, out);
    leaves(n[i].c[1], w + Letter::One, out);
  }
};

}  // namespace

Code rearrange_leaves_mod3(const Code& q1, const std::vector<int>& residues) {
  if (!is_maximal_binary_code(q1)) fail(Err::NotACode, "not a maximal binary code");
  BinTree t = BinTree::build(q1);
  std::vector<int> secured;  // node ids of inner-tree leaves already claimed

  auto inner_leaf = [&](int i) {  // both children are code leaves
    return !t.is_leaf(i) && t.is_leaf(t.n[i].c[0]) && t.is_leaf(t.n[i].c[1]);
  };
  auto one_child = [&](int i) {  // exactly one child is internal
    if (t.is_leaf(i)) return -1;
    bool l0 = t.is_leaf(t.n[i].c[0]), l1 = t.is_leaf(t.n[i].c[1]);
    if (l0 == l1) return -1;
    return l0 ? 1 : 0;  // index of the internal child
  };

  for (int r : residues) {
    int found = -1;
    for (size_t i = 0; i < t.n.size() && found < 0; ++i) {
      if (!inner_leaf(int(i)) || t.depth(int(i)) % 3 != ((r % 3) + 3) % 3) continue;
      if (std::find(secured.begin(), secured.end(), int(i)) == secured.end())
        found = int(i);
    }
    if (found >= 0) {
      secured.push_back(found);
      continue;
    }
    // Two one-child vertices at the right depth; move the deeper one's
    // internal subtree into the other's leaf slot.
    std::vector<int> ones;
    for (size_t i = 0; i < t.n.size(); ++i)
      if (one_child(int(i)) >= 0 && t.depth(int(i)) % 3 == ((r % 3) + 3) % 3)
        ones.push_back(int(i));
    int a = -1, b = -1;
    for (size_t i = 0; i < ones.size() && a < 0; ++i)
      for (size_t j = i + 1; j < ones.size() && a < 0; ++j) {
        if (t.is_ancestor(ones[i], ones[j])) {
          a = ones[j];
          b = ones[i];
        } else {
          a = ones[i];
          b = ones[j];
        }
      }
    if (a < 0) fail(Err::HypothesisFail, "no leaf and no one-child vertex pair at residue " +
                                             std::to_string(r));
    int ai = one_child(a);          // a's internal child slot
    int w = t.n[a].c[ai];           // subtree to move
    int bi = one_child(b) == 0 ? 1 : 0;  // b's leaf slot
    int old_leaf = t.n[b].c[bi];
    // a's slot becomes a fresh leaf; b's leaf is replaced by the subtree.
    t.n[a].c[ai] = old_leaf;
    t.n[old_leaf].parent = a;
    t.n[b].c[bi] = w;
    t.n[w].parent = b;
    secured.push_back(a);
  }

  Code out;
  t.leaves(0, Word(), out);
  return make_code(std::move(out));
}

std::string format_code(const Code& c) {
  std::ostringstream os;
  for (const Word& w : c) os << w.str() << "\n";
  return os.str();
}

Code parse_code(std::string_view text) {
  Code out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t b = line.find_first_not_of(' ');
    if (b == std::string::npos) continue;
    out.push_back(Word::parse(std::string_view(line).substr(b)));
  }
  return make_code(std::move(out));
}

}  // namespace g31
