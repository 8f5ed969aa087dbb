#include "core/table.hpp"

#include <algorithm>
#include <sstream>

namespace g31 {

namespace {

// One pass of maximal extension over entries sorted by domain word: whenever
// three consecutive entries are u0,u1,u# -> v0,v1,v# they fold into u -> v.
// A stack pass suffices because the folded entry (u, v) still sorts after
// everything below it, and folding can cascade only at the stack top.
void collapse(std::vector<Table::Entry>& e) {
  std::vector<Table::Entry> st;
  st.reserve(e.size());
  auto foldable = [&]() {
    if (st.size() < 3) return false;
    const auto& [d0, i0] = st[st.size() - 3];
    const auto& [d1, i1] = st[st.size() - 2];
    const auto& [d2, i2] = st[st.size() - 1];
    if (d0.empty() || d1.empty() || d2.empty()) return false;
    if (i0.empty() || i1.empty() || i2.empty()) return false;
    if (d0.at(d0.size() - 1) != Letter::Zero || d1.at(d1.size() - 1) != Letter::One ||
        d2.at(d2.size() - 1) != Letter::Hash)
      return false;
    if (i0.at(i0.size() - 1) != Letter::Zero || i1.at(i1.size() - 1) != Letter::One ||
        i2.at(i2.size() - 1) != Letter::Hash)
      return false;
    Word du = d0.prefix(d0.size() - 1);
    if (d1.prefix(d1.size() - 1) != du || d2.prefix(d2.size() - 1) != du) return false;
    Word iu = i0.prefix(i0.size() - 1);
    if (i1.prefix(i1.size() - 1) != iu || i2.prefix(i2.size() - 1) != iu) return false;
    return true;
  };
  for (auto& en : e) {
    st.push_back(std::move(en));
    while (foldable()) {
      Word du = st[st.size() - 3].first.prefix(st[st.size() - 3].first.size() - 1);
      Word iu = st[st.size() - 3].second.prefix(st[st.size() - 3].second.size() - 1);
      st.resize(st.size() - 3);
      st.emplace_back(std::move(du), std::move(iu));
    }
  }
  e = std::move(st);
}

}  // namespace

Table Table::from_pairs(std::vector<Entry> pairs) {
  if (pairs.empty()) fail(Err::NotACode, "empty table");
  std::sort(pairs.begin(), pairs.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  {
    Code dom;
    dom.reserve(pairs.size());
    for (auto& p : pairs) dom.push_back(p.first);
    for (size_t i = 0; i + 1 < dom.size(); ++i)
      if (dom[i] == dom[i + 1]) fail(Err::NotBijective, "duplicate domain word " + dom[i].str());
    if (!is_maximal_prefix_code(dom))
      fail(Err::NotACode, "domain is not a maximal prefix code");
    Code img;
    img.reserve(pairs.size());
    for (auto& p : pairs) img.push_back(p.second);
    std::sort(img.begin(), img.end());
    for (size_t i = 0; i + 1 < img.size(); ++i)
      if (img[i] == img[i + 1]) fail(Err::NotBijective, "duplicate image word " + img[i].str());
    if (!is_maximal_prefix_code(img))
      fail(Err::NotACode, "image is not a maximal prefix code");
  }
  collapse(pairs);
  return Table(std::move(pairs));
}

Code Table::domain_code() const {
  Code c;
  c.reserve(e_.size());
  for (auto& p : e_) c.push_back(p.first);
  return c;
}

Code Table::image_code() const {
  Code c;
  c.reserve(e_.size());
  for (auto& p : e_) c.push_back(p.second);
  std::sort(c.begin(), c.end());
  return c;
}

size_t Table::max_word_len() const {
  size_t m = 0;
  for (auto& p : e_) m = std::max({m, p.first.size(), p.second.size()});
  return m;
}

namespace {

// Index of the entry whose domain word is a prefix of w, or -1. The entries
// are sorted by domain; the prefix, if present, is the predecessor of the
// upper bound of w.
int find_covering(const std::vector<Table::Entry>& e, const Word& w,
                  bool by_domain) {
  int lo = 0, hi = int(e.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    const Word& k = by_domain ? e[mid].first : e[mid].second;
    if (k <= w)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == 0) return -1;
  const Word& k = by_domain ? e[lo - 1].first : e[lo - 1].second;
  return is_prefix_of(k, w) ? lo - 1 : -1;
}

}  // namespace

std::optional<Word> Table::apply(const Word& w) const {
  int i = find_covering(e_, w, true);
  if (i < 0) return std::nullopt;
  return e_[i].second + w.suffix(e_[i].first.size());
}

std::optional<Word> Table::apply_inverse(const Word& w) const {
  // entries are not sorted by image; linear prefix scan
  for (auto& p : e_)
    if (is_prefix_of(p.second, w)) return p.first + w.suffix(p.second.size());
  return std::nullopt;
}

Table Table::inverse() const {
  std::vector<Entry> inv;
  inv.reserve(e_.size());
  for (auto& p : e_) inv.emplace_back(p.second, p.first);
  std::sort(inv.begin(), inv.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  // The canonical form has no foldable triple and foldability is symmetric,
  // so the inverse is already canonical.
  return Table(std::move(inv));
}

Table compose(const Table& a, const Table& b) {
  // Refine b's entries against a's domain: for b-entry (u, v) either some
  // a-entry covers v, or v is a strict prefix of several a-domain words.
  std::vector<Table::Entry> out;
  const auto& ae = a.entries();
  for (const auto& [u, v] : b.entries()) {
    int i = find_covering(ae, v, true);
    if (i >= 0) {
      out.emplace_back(u, ae[i].second + v.suffix(ae[i].first.size()));
      continue;
    }
    // Split: every a-domain word extending v contributes one entry.
    for (const auto& [c, d] : ae)
      if (c.starts_with(v)) out.emplace_back(u + c.suffix(v.size()), d);
  }
  return Table::from_pairs(std::move(out));
}

bool Table::member_of(GroupTag tag) const {
  bool need_01 = tag == GroupTag::G31_01 || tag == GroupTag::G31_01_Sharp ||
                 tag == GroupTag::G31_Mod3_01 || tag == GroupTag::G31_Mod3_01_Sharp;
  bool need_sharp = tag == GroupTag::G31_01_Sharp || tag == GroupTag::G31_Mod3_01_Sharp;
  bool need_mod3 = tag == GroupTag::G31_Mod3 || tag == GroupTag::G31_Mod3_01 ||
                   tag == GroupTag::G31_Mod3_01_Sharp;
  for (const auto& [u, v] : e_) {
    bool ub = u.is_bits(), vb = v.is_bits();
    if (need_01 && ub != vb) return false;
    if (need_sharp && !ub && !(u.is_bits_hash() && v.is_bits_hash())) return false;
    if (need_mod3 && ub && u.size() % 3 != v.size() % 3) return false;
  }
  return true;
}

bool Table::stab_fix(const Code& s, StabMode mode) const {
  if (!is_prefix_code(s)) fail(Err::Precondition, "S is not a prefix code");
  size_t depth = 0;
  for (const Word& w : s) depth = std::max(depth, w.size());
  // Refine every entry until its domain word is in S·A* or incomparable
  // with all of S.
  std::vector<Entry> refined;
  std::vector<Entry> work(e_.begin(), e_.end());
  auto status = [&](const Word& w) {
    // 0 = incomparable with all of S, 1 = has a prefix in S, 2 = strict prefix of some member
    for (const Word& m : s) {
      auto r = prefix_compare(m, w);
      if (r == PrefixRel::Equal || r == PrefixRel::StrictPrefix) return 1;
      if (r == PrefixRel::StrictExtension) return 2;
    }
    return 0;
  };
  while (!work.empty()) {
    Entry en = std::move(work.back());
    work.pop_back();
    if (status(en.first) == 2 || status(en.second) == 2) {
      for (int l = 0; l < 3; ++l)
        work.emplace_back(en.first + Letter(l), en.second + Letter(l));
      continue;
    }
    refined.push_back(std::move(en));
  }
  bool pstab = true, pfix = true;
  for (const auto& [u, v] : refined) {
    bool su = status(u) == 1, sv = status(v) == 1;
    if (su != sv) pstab = false;
    if (su && u != v) pfix = false;
  }
  // S ⊆ Dom ∩ Im: every member of S has a prefix in the domain code and in
  // the image code.
  auto total = [&]() {
    for (const Word& m : s) {
      if (find_covering(e_, m, true) < 0) return false;
      bool im_cov = false;
      for (const auto& p : e_)
        if (is_prefix_of(p.second, m)) {
          im_cov = true;
          break;
        }
      if (!im_cov) return false;
    }
    return true;
  };
  switch (mode) {
    case StabMode::PStab: return pstab;
    case StabMode::TStab: return pstab && total();
    case StabMode::PFix: return pfix;
    case StabMode::TFix: return pfix && total();
  }
  return false;
}

std::optional<Table::Entry> Table::noncomparable_entry() const {
  for (const auto& en : e_)
    if (!prefix_comparable(en.first, en.second)) return en;
  return std::nullopt;
}

std::string Table::format() const {
  std::ostringstream os;
  for (const auto& [u, v] : e_) os << u.str() << " -> " << v.str() << "\n";
  return os.str();
}

Table Table::parse(std::string_view text) {
  std::vector<Entry> pairs;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string d, arrow, i;
    if (!(ls >> d)) continue;
    if (d[0] == '%') continue;  // comment line
    if (!(ls >> arrow >> i) || arrow != "->") fail(Err::Parse, "bad table line: " + line);
    pairs.emplace_back(Word::parse(d), Word::parse(i));
  }
  return from_pairs(std::move(pairs));
}

}  // namespace g31
