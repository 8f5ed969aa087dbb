#include "core/present.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace g31 {

namespace {

// All maximal binary codes with k leaves (full binary tree shapes).
std::vector<Code> binary_shapes(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<Code>> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::vector<int> todo{k};
  while (!todo.empty()) {
    int t = todo.back();
    if (cache.count(t)) {
      todo.pop_back();
      continue;
    }
    if (t == 1) {
      cache[1] = {Code{Word()}};
      todo.pop_back();
      continue;
    }
    bool ready = true;
    for (int i = 1; i < t; ++i)
      if (!cache.count(i)) {
        todo.push_back(i);
        ready = false;
      }
    if (!ready) continue;
    std::vector<Code> out;
    for (int i = 1; i < t; ++i)
      for (const Code& a : cache[i])
        for (const Code& b : cache[t - i]) {
          Code c;
          for (const Word& w : a) c.push_back(Word::parse("0") + w);
          for (const Word& w : b) c.push_back(Word::parse("1") + w);
          out.push_back(make_code(std::move(c)));
        }
    cache[t] = std::move(out);
    todo.pop_back();
  }
  return cache[k];
}

void permutations(int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> p(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) p[size_t(i)] = i;
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

int GeneratorSet::find(const Table& t) const {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == t) return int(i);
  return -1;
}

int GeneratorSet::find_or_add(const Table& t) {
  int id = find(t);
  if (id >= 0) return id;
  members.push_back(t);
  inverse_id.push_back(-1);
  int a = int(members.size()) - 1;
  Table inv = t.inverse();
  int b = find(inv);
  if (b < 0) {
    members.push_back(inv);
    inverse_id.push_back(a);
    b = int(members.size()) - 1;
  }
  inverse_id[size_t(a)] = b;
  inverse_id[size_t(b)] = a;
  return a;
}

GeneratorSet enumerate_generators(GroupTag tag, size_t bound) {
  if (tag != GroupTag::G31_01_Sharp && tag != GroupTag::G31_Mod3_01_Sharp)
    fail(Err::UnsupportedTag, "enumeration supports the (0,1;#) tags only");
  if (bound % 2 == 0 || bound > 9)
    fail(Err::UnsupportedTag, "bound must be odd and at most 9");
  bool mod3 = tag == GroupTag::G31_Mod3_01_Sharp;
  GeneratorSet gens{tag, bound, {}, {}};
  std::map<std::string, int> seen;
  auto emit = [&](std::vector<Table::Entry> pairs) {
    Table t = Table::from_pairs(std::move(pairs));
    if (t.table_size() > bound) return;
    auto [it, fresh] = seen.emplace(t.format(), int(gens.members.size()));
    if (fresh) {
      gens.members.push_back(std::move(t));
      gens.inverse_id.push_back(-1);
    }
  };
  int kmax = int((bound + 1) / 2);
  for (int k = 1; k <= kmax; ++k) {
    for (const Code& p1 : binary_shapes(k))
      for (const Code& q1 : binary_shapes(k)) {
        if (mod3 && mod3_cardinality(p1) != mod3_cardinality(q1)) continue;
        Code p2 = strict_prefixes(p1), q2 = strict_prefixes(q1);
        // bit bijections (residue-respecting for the mod-3 tag)
        std::vector<std::vector<int>> bit_maps;
        if (!mod3) {
          permutations(k, [&](const std::vector<int>& p) { bit_maps.push_back(p); });
        } else {
          // match residue classes independently
          std::vector<std::vector<int>> cls_p(3), cls_q(3);
          for (int i = 0; i < k; ++i) cls_p[p1[size_t(i)].size() % 3].push_back(i);
          for (int i = 0; i < k; ++i) cls_q[q1[size_t(i)].size() % 3].push_back(i);
          std::vector<std::vector<int>> acc{std::vector<int>(size_t(k), -1)};
          for (int r = 0; r < 3; ++r) {
            std::vector<std::vector<int>> next;
            permutations(int(cls_p[r].size()), [&](const std::vector<int>& p) {
              for (const auto& base : acc) {
                auto v = base;
                for (size_t j = 0; j < cls_p[r].size(); ++j)
                  v[size_t(cls_p[size_t(r)][j])] = cls_q[size_t(r)][size_t(p[j])];
                next.push_back(std::move(v));
              }
            });
            acc = std::move(next);
          }
          bit_maps = std::move(acc);
        }
        std::vector<std::vector<int>> hash_maps;
        permutations(k - 1, [&](const std::vector<int>& p) { hash_maps.push_back(p); });
        for (const auto& bm : bit_maps)
          for (const auto& hm : hash_maps) {
            std::vector<Table::Entry> pairs;
            for (int i = 0; i < k; ++i)
              pairs.emplace_back(p1[size_t(i)], q1[size_t(bm[size_t(i)])]);
            for (int i = 0; i < k - 1; ++i)
              pairs.emplace_back(p2[size_t(i)] + Letter::Hash,
                                 q2[size_t(hm[size_t(i)])] + Letter::Hash);
            emit(std::move(pairs));
          }
      }
  }
  for (size_t i = 0; i < gens.members.size(); ++i) {
    if (gens.inverse_id[i] >= 0) continue;
    Table inv = gens.members[i].inverse();
    int j = gens.find(inv);
    if (j < 0) fail(Err::Internal, "generator set not closed under inverse");
    gens.inverse_id[i] = j;
    gens.inverse_id[size_t(j)] = int(i);
  }
  return gens;
}

namespace {

// Join (common refinement) of two maximal prefix codes.
Code code_join(const Code& a, const Code& b) {
  Code out;
  for (const Word& w : a) {
    bool keep = true;
    for (const Word& v : b)
      if (prefix_compare(w, v) == PrefixRel::StrictPrefix) keep = false;
    if (keep) out.push_back(w);
  }
  for (const Word& v : b) {
    bool deeper = false, dupe = false;
    for (const Word& w : a) {
      auto r = prefix_compare(v, w);
      if (r == PrefixRel::StrictExtension) deeper = true;
      if (r == PrefixRel::Equal) dupe = true;
    }
    if (deeper && !dupe) out.push_back(v);
  }
  return make_code(std::move(out));
}

struct Ctx {
  GeneratorSet& gens;
  bool mod3;
  size_t threshold;
};

// Middle code with two designated sibling pairs aligned to the required
// residues; non-mod-3 builds a spine shape directly.
std::pair<Code, std::pair<Word, Word>> middle_code(const Ctx& cx, const Code& dom_bits,
                                                   int r_u, int r_w) {
  int k = int(dom_bits.size());
  if (!cx.mod3) {
    Code p1;
    Word spine;
    for (int i = 0; i < k - 4; ++i) {
      p1.push_back(spine + Letter::One);
      spine.push_back(Letter::Zero);
    }
    for (int b = 0; b < 4; ++b) {
      Word w = spine;
      w.push_back(Letter(b >> 1 & 1));
      w.push_back(Letter(b & 1));
      p1.push_back(w);
    }
    Word u = spine + Letter::Zero, w = spine + Letter::One;
    return {make_code(std::move(p1)), {u, w}};
  }
  Code p1 = rearrange_leaves_mod3(dom_bits, {r_u, r_w});
  auto leaves = inner_leaves_binary(p1);
  Word u, w;
  bool got_u = false, got_w = false;
  for (const Word& l : leaves) {
    if (!got_u && int(l.size() % 3) == ((r_u % 3) + 3) % 3) {
      u = l;
      got_u = true;
      continue;
    }
    if (!got_w && int(l.size() % 3) == ((r_w % 3) + 3) % 3) {
      w = l;
      got_w = true;
    }
  }
  if (!got_u || !got_w) fail(Err::Internal, "rearranged code lost its leaves");
  return {p1, {u, w}};
}

// Assign the middle code's words to the columns of the current table.
// pin[j] (if nonempty) fixes column j; other columns get kind- and
// residue-matched words in canonical order.
std::vector<Word> assign_columns(const Ctx& cx, const std::vector<Table::Entry>& table,
                                 const Code& mid, std::vector<Word> pin) {
  size_t n = table.size();
  std::vector<Word> row(n);
  std::vector<bool> used(mid.size(), false);
  auto use = [&](const Word& w) {
    for (size_t i = 0; i < mid.size(); ++i)
      if (!used[i] && mid[i] == w) {
        used[i] = true;
        return;
      }
    fail(Err::Internal, "pinned word not in middle code");
  };
  // pins are denoted by nonempty words; ε cannot be a column word of a
  // table of size > 1, so the sentinel is unambiguous.
  for (size_t j = 0; j < n; ++j)
    if (!(pin[j] == Word())) {
      row[j] = pin[j];
      use(pin[j]);
    }
  auto matches = [&](const Word& cand, const Word& domw) {
    bool cb = cand.is_bits(), db = domw.is_bits();
    if (cb != db) return false;
    if (cx.mod3 && cb && cand.size() % 3 != domw.size() % 3) return false;
    return true;
  };
  for (size_t j = 0; j < n; ++j) {
    if (!(row[j] == Word())) continue;
    bool done = false;
    for (size_t i = 0; i < mid.size() && !done; ++i) {
      if (used[i]) continue;
      if (!matches(mid[i], table[j].first)) continue;
      row[j] = mid[i];
      used[i] = true;
      done = true;
    }
    if (!done) fail(Err::Internal, "column assignment starved");
  }
  return row;
}

// One Higman reduction step. Candidate leaf pairs are tried in canonical
// order; a pair is usable when the triples' columns are disjoint (one
// inserted row) or when an aligned spare triple fits outside both column
// sets (two inserted rows). If no pair is usable — possible only at
// table-size 9, or for the mod-3 tag when residues clash — a single
// collapse-only insertion is made and the unreduced cofactor is retried,
// which restores a usable geometry.
void factor_rec(const Ctx& cx, const Table& phi, std::vector<int>& out, int& steps) {
  if (phi.is_identity()) return;
  if (--steps < 0) fail(Err::Internal, "factorization did not terminate");
  if (phi.table_size() <= cx.threshold) {
    int id = cx.mod3 ? cx.gens.find_or_add(phi) : cx.gens.find(phi);
    if (id < 0) fail(Err::Internal, "sub-threshold factor missing from generator set");
    out.push_back(id);
    return;
  }
  const auto& e = phi.entries();
  size_t n = e.size();
  Code dom = phi.domain_code(), img = phi.image_code();
  auto dls = inner_leaves_full(dom), ils = inner_leaves_full(img);
  if (dls.empty() || ils.empty()) fail(Err::Internal, "no inner leaf triple");

  Code dom_bits;
  for (const Word& w : dom)
    if (w.is_bits()) dom_bits.push_back(w);

  auto triple_cols_dom = [&](const Word& x) {
    size_t td = 0;
    while (!(e[td].first == x + Letter::Zero)) ++td;
    return td;
  };
  auto triple_cols_img = [&](const Word& y) {
    std::vector<size_t> tim;
    for (size_t j = 0; j < n; ++j)
      if (e[j].second == y + Letter::Zero || e[j].second == y + Letter::One ||
          e[j].second == y + Letter::Hash)
        tim.push_back(j);
    return tim;
  };

  for (const Word& x : dls) {
    for (const Word& y : ils) {
      size_t td = triple_cols_dom(x);
      std::vector<size_t> tim = triple_cols_img(y);
      bool overlap = false;
      for (size_t j : tim) overlap |= (j >= td && j < td + 3);
      int r_x = int(x.size() % 3), r_y = int(y.size() % 3);

      if (!overlap) {
        // one inserted row: u-triple at the domain columns, w-triple at the
        // image columns
        auto [p1m, uw] = middle_code(cx, dom_bits, r_x, r_y);
        Code mid = complete_with_endmarkers(p1m);
        std::vector<Word> pin(n);
        pin[td] = uw.first + Letter::Zero;
        pin[td + 1] = uw.first + Letter::One;
        pin[td + 2] = uw.first + Letter::Hash;
        for (size_t j : tim) pin[j] = uw.second + e[j].second.at(e[j].second.size() - 1);
        std::vector<Word> row = assign_columns(cx, e, mid, std::move(pin));
        std::vector<Table::Entry> f1, f2;
        for (size_t j = 0; j < n; ++j) {
          f1.emplace_back(e[j].first, row[j]);
          f2.emplace_back(row[j], e[j].second);
        }
        Table t1 = Table::from_pairs(std::move(f1));
        Table t2 = Table::from_pairs(std::move(f2));
        if (t1.table_size() > n - 2 || t2.table_size() > n - 2)
          fail(Err::Internal, "row insertion did not reduce the table");
        factor_rec(cx, t2, out, steps);
        factor_rec(cx, t1, out, steps);
        return;
      }

      // overlapping triples: need a spare aligned triple in free columns
      std::vector<bool> used(n, false);
      for (size_t o = 0; o < 3; ++o) used[td + o] = true;
      for (size_t j : tim) used[j] = true;
      // mod-3: the words displaced from the image columns must fit the
      // residues of the vacated domain columns
      if (cx.mod3) {
        std::vector<int> need, have;
        for (size_t o = 0; o < 3; ++o) {
          size_t j = td + o;
          bool im_here = false;
          for (size_t t : tim) im_here |= (t == j);
          if (!im_here && e[j].first.is_bits()) need.push_back(int(e[j].first.size() % 3));
        }
        for (size_t j : tim) {
          if (j >= td && j < td + 3) continue;
          if (e[j].first.is_bits()) have.push_back(int(e[j].first.size() % 3));
        }
        std::sort(need.begin(), need.end());
        std::sort(have.begin(), have.end());
        if (need != have) continue;
      }
      // pick two free bit columns (same residue class for mod-3) and a free
      // hash column
      std::vector<size_t> fb, fh;
      for (size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        (e[j].first.is_bits() ? fb : fh).push_back(j);
      }
      size_t b1 = n, b2 = n;
      for (size_t i = 0; i < fb.size() && b1 == n; ++i)
        for (size_t k = i + 1; k < fb.size() && b1 == n; ++k)
          if (!cx.mod3 || e[fb[i]].first.size() % 3 == e[fb[k]].first.size() % 3) {
            b1 = fb[i];
            b2 = fb[k];
          }
      if (b1 == n || fh.empty()) continue;  // starved; try another pair
      int r_v = int((e[b1].first.size() + 2) % 3);  // |v| ≡ column − 1

      auto [p1m, uw] = middle_code(cx, dom_bits, r_x, r_v);
      Code mid = complete_with_endmarkers(p1m);
      const Word& u = uw.first;
      const Word& v = uw.second;
      std::vector<Word> pin(n);
      pin[td] = u + Letter::Zero;
      pin[td + 1] = u + Letter::One;
      pin[td + 2] = u + Letter::Hash;
      pin[b1] = v + Letter::Zero;
      pin[b2] = v + Letter::One;
      pin[fh[0]] = v + Letter::Hash;
      std::vector<Word> row2 = assign_columns(cx, e, mid, std::move(pin));
      std::vector<Word> row3 = row2;
      // u moves to the image columns; the words it displaces refill the
      // vacated domain columns kind- and residue-wise
      std::vector<Word> displaced;
      for (size_t j : tim) {
        if (!(j >= td && j < td + 3)) displaced.push_back(row2[j]);
        row3[j] = u + e[j].second.at(e[j].second.size() - 1);
      }
      for (size_t o = 0; o < 3; ++o) {
        size_t j = td + o;
        bool im_here = false;
        for (size_t t : tim) im_here |= (t == j);
        if (im_here) continue;
        bool placed = false;
        for (size_t i = 0; i < displaced.size() && !placed; ++i) {
          const Word& z = displaced[i];
          if (z.is_bits() != e[j].first.is_bits()) continue;
          if (cx.mod3 && z.is_bits() && z.size() % 3 != e[j].first.size() % 3) continue;
          row3[j] = z;
          displaced.erase(displaced.begin() + long(i));
          placed = true;
        }
        if (!placed) fail(Err::Internal, "displaced words do not fit the vacated columns");
      }
      std::vector<Table::Entry> f1, f2, f3;
      for (size_t j = 0; j < n; ++j) {
        f1.emplace_back(e[j].first, row2[j]);
        f2.emplace_back(row2[j], row3[j]);
        f3.emplace_back(row3[j], e[j].second);
      }
      Table t1 = Table::from_pairs(std::move(f1));
      Table t2 = Table::from_pairs(std::move(f2));
      Table t3 = Table::from_pairs(std::move(f3));
      if (t1.table_size() > n - 2 || t2.table_size() > n - 2 || t3.table_size() > n - 2)
        fail(Err::Internal, "row insertion did not reduce the table");
      factor_rec(cx, t3, out, steps);
      factor_rec(cx, t2, out, steps);
      factor_rec(cx, t1, out, steps);
      return;
    }
  }

  // fallback: collapse-only insertion; the cofactor acquires usable geometry
  {
    const Word& x = dls.front();
    size_t td = triple_cols_dom(x);
    int r_x = int(x.size() % 3);
    auto [p1m, uw] = middle_code(cx, dom_bits, r_x, r_x);
    Code mid = complete_with_endmarkers(p1m);
    std::vector<Word> pin(n);
    pin[td] = uw.first + Letter::Zero;
    pin[td + 1] = uw.first + Letter::One;
    pin[td + 2] = uw.first + Letter::Hash;
    std::vector<Word> row = assign_columns(cx, e, mid, std::move(pin));
    // guard against the degenerate case row == dom, which would recurse on
    // the unchanged element: swapping two compatible free entries breaks it
    bool same = true;
    for (size_t j = 0; j < n; ++j) same &= row[j] == e[j].first;
    if (same) {
      bool swapped = false;
      for (size_t a = 0; a < n && !swapped; ++a) {
        if (a >= td && a < td + 3) continue;
        for (size_t b = a + 1; b < n && !swapped; ++b) {
          if (b >= td && b < td + 3) continue;
          if (row[a].is_bits() != row[b].is_bits()) continue;
          if (cx.mod3 && row[a].is_bits() && row[a].size() % 3 != row[b].size() % 3)
            continue;
          std::swap(row[a], row[b]);
          swapped = true;
        }
      }
      if (!swapped) fail(Err::Internal, "collapse-only insertion made no progress");
    }
    std::vector<Table::Entry> f1, f2;
    for (size_t j = 0; j < n; ++j) {
      f1.emplace_back(e[j].first, row[j]);
      f2.emplace_back(row[j], e[j].second);
    }
    Table t1 = Table::from_pairs(std::move(f1));
    Table t2 = Table::from_pairs(std::move(f2));
    if (t1.table_size() > n - 2) fail(Err::Internal, "collapse insertion failed");
    factor_rec(cx, t2, out, steps);
    factor_rec(cx, t1, out, steps);
  }
}

}  // namespace

Factorization factor(const Table& phi, GeneratorSet& gens) {
  if (!phi.member_of(gens.tag)) fail(Err::NotInGroup, "element is outside the tagged subgroup");
  Ctx cx{gens, gens.tag == GroupTag::G31_Mod3_01_Sharp,
         gens.tag == GroupTag::G31_Mod3_01_Sharp ? size_t(61) : gens.bound};
  Factorization f;
  int steps = 1 << 20;
  factor_rec(cx, phi, f.ids, steps);
  // verify the factors stay inside the subgroup (the column-alignment claim)
  for (int id : f.ids)
    if (!gens.members[size_t(id)].member_of(gens.tag))
      fail(Err::Internal, "factor left the subgroup");
  // table-size of the factor sequence: join of the partial-composite domains
  Code j{Word()};
  Table g = Table::identity();
  for (auto it = f.ids.rbegin(); it != f.ids.rend(); ++it) {
    g = gens.members[size_t(*it)] * g;
    j = code_join(j, g.domain_code());
  }
  f.max_intermediate = j.size();
  return f;
}

Table compose_ids(const GeneratorSet& gens, const std::vector<int>& ids) {
  Table g = Table::identity();
  for (auto it = ids.rbegin(); it != ids.rend(); ++it) g = gens.members[size_t(*it)] * g;
  return g;
}

std::string format_generator_set(const GeneratorSet& g) {
  std::ostringstream os;
  os << "tag " << (g.tag == GroupTag::G31_Mod3_01_Sharp ? "g31-mod3-01-sharp" : "g31-01-sharp")
     << "\nbound " << g.bound << "\ncount " << g.members.size() << "\n";
  for (size_t i = 0; i < g.members.size(); ++i) {
    os << "generator " << i << " inverse " << g.inverse_id[i] << "\n"
       << g.members[i].format();
  }
  return os.str();
}

}  // namespace g31
