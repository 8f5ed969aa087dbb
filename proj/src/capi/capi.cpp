#include "g31/g31.h"

#include <cstdio>
#include <cstring>
#include <string>

#include "core/present.hpp"
#include "core/selftest.hpp"
#include "core/wordproblem.hpp"

using namespace g31;

struct g31_genword {
  GenWord w;
};
struct g31_circuit {
  Circuit c;
};
struct g31_table {
  Table t;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(malloc(s.size() + 1));
  memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

g31_status status_of(const Error& e) {
  g_last_error = std::string(err_name(e.code)) + ": " + e.what();
  switch (e.code) {
    case Err::Parse: return G31_ERR_PARSE;
    case Err::Internal: return G31_ERR_INTERNAL;
    default: return G31_ERR_DOMAIN;
  }
}

template <typename F>
g31_status guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return G31_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* g31_last_error(void) { return g_last_error.c_str(); }

void g31_string_free(char* s) { free(s); }

g31_status g31_genword_parse(const char* text, g31_genword** out) {
  return guarded([&] {
    *out = new g31_genword{parse_genword(text)};
    return G31_OK;
  });
}

void g31_genword_free(g31_genword* w) { delete w; }

g31_status g31_genword_format(const g31_genword* w, char** out) {
  return guarded([&] {
    *out = dup_string(format_genword(w->w));
    return G31_OK;
  });
}

g31_status g31_genword_apply(const g31_genword* w, const char* input, char** out) {
  return guarded([&] {
    auto r = eval_word(w->w, Word::parse(input));
    if (!r) {
      g_last_error = "word is undefined on the argument";
      return G31_ERR_UNDEFINED;
    }
    *out = dup_string(r->str());
    return G31_OK;
  });
}

g31_status g31_genword_metrics(const g31_genword* w, size_t* tokens, int* max_tau,
                               size_t* unary_tokens) {
  return guarded([&] {
    CompileMetrics m = word_metrics(w->w);
    if (tokens) *tokens = m.tokens;
    if (max_tau) *max_tau = m.max_tau;
    if (unary_tokens) *unary_tokens = m.unary_tokens;
    return G31_OK;
  });
}

g31_status g31_genword_table(const g31_genword* w, g31_table** out) {
  return guarded([&] {
    *out = new g31_table{materialize(w->w)};
    return G31_OK;
  });
}

g31_status g31_circuit_parse(const char* text, g31_circuit** out) {
  return guarded([&] {
    *out = new g31_circuit{parse_circuit(text)};
    return G31_OK;
  });
}

void g31_circuit_free(g31_circuit* c) { delete c; }

g31_status g31_circuit_info(const g31_circuit* c, int* inputs, int* outputs, int* size) {
  return guarded([&] {
    if (inputs) *inputs = c->c.m;
    if (outputs) *outputs = c->c.n();
    if (size) *size = c->c.size();
    return G31_OK;
  });
}

g31_status g31_circuit_eval(const g31_circuit* c, const char* bits, char** out) {
  return guarded([&] {
    std::vector<bool> in;
    for (const char* p = bits; *p; ++p) {
      if (*p != '0' && *p != '1') fail(Err::Parse, "input bits must be 0/1");
      in.push_back(*p == '1');
    }
    std::vector<bool> r = eval_circuit(c->c, in);
    std::string s;
    for (bool b : r) s.push_back(b ? '1' : '0');
    *out = dup_string(s);
    return G31_OK;
  });
}

g31_status g31_compile(const g31_circuit* c, int strong, g31_genword** out) {
  return guarded([&] {
    *out = new g31_genword{strong ? compile_strong(c->c) : compile_circuit(c->c)};
    return G31_OK;
  });
}

g31_status g31_circuit_equiv(const g31_circuit* a, const g31_circuit* b, g31_equiv_mode mode,
                             int* equivalent, char** witness) {
  return guarded([&] {
    EquivMode m = mode == G31_EQUIV_ORACLE   ? EquivMode::Oracle
                  : mode == G31_EQUIV_GROUP  ? EquivMode::Group
                                             : EquivMode::Both;
    EquivResult r = circuit_equiv(a->c, b->c, m);
    *equivalent = r.equivalent ? 1 : 0;
    if (witness) {
      std::string w;
      if (!r.equivalent) {
        if (!r.oracle_witness.empty()) {
          for (bool bit : r.oracle_witness) w.push_back(bit ? '1' : '0');
        } else {
          w = r.group_witness.str();
        }
      }
      *witness = dup_string(w);
    }
    return G31_OK;
  });
}

g31_status g31_word_problem(const g31_genword* w, g31_wp_method method, size_t cap,
                            int* is_identity, char** verdict) {
  return guarded([&] {
    std::string text;
    bool id = false;
    switch (method) {
      case G31_WP_TABLE: {
        id = wp_table(w->w);
        text = id ? "identity-proven" : "not-identity";
        break;
      }
      case G31_WP_NORMAL_FORM: {
        NormalForm nf = wp_normal_form(w->w);
        id = nf.e == 0 && nf.g.is_identity();
        text = id ? "identity-proven" : "not-identity";
        break;
      }
      case G31_WP_WITNESS: {
        WitnessConfig cfg;
        if (cap) cfg.cap = cap;
        Verdict v = wp_bounded_witness(w->w, cfg);
        id = v.kind == Verdict::IdentityProven;
        text = format_verdict(v);
        break;
      }
    }
    if (is_identity) *is_identity = id ? 1 : 0;
    if (verdict) *verdict = dup_string(text);
    return G31_OK;
  });
}

g31_status g31_table_parse(const char* text, g31_table** out) {
  return guarded([&] {
    *out = new g31_table{Table::parse(text)};
    return G31_OK;
  });
}

void g31_table_free(g31_table* t) { delete t; }

g31_status g31_table_format(const g31_table* t, char** out) {
  return guarded([&] {
    *out = dup_string(t->t.format());
    return G31_OK;
  });
}

g31_status g31_table_size(const g31_table* t, size_t* out) {
  return guarded([&] {
    *out = t->t.table_size();
    return G31_OK;
  });
}

g31_status g31_table_apply(const g31_table* t, const char* input, char** out) {
  return guarded([&] {
    auto r = t->t.apply(Word::parse(input));
    if (!r) {
      g_last_error = "table is undefined on the argument";
      return G31_ERR_UNDEFINED;
    }
    *out = dup_string(r->str());
    return G31_OK;
  });
}

g31_status g31_factor(const g31_table* t, const char* tag, size_t bound, char** ids,
                      char** gens) {
  return guarded([&] {
    GroupTag gt;
    std::string tg = tag ? tag : "g31-01-sharp";
    if (tg == "g31-01-sharp") gt = GroupTag::G31_01_Sharp;
    else if (tg == "g31-mod3-01-sharp") gt = GroupTag::G31_Mod3_01_Sharp;
    else fail(Err::UnsupportedTag, "unknown tag: " + tg);
    GeneratorSet gs = enumerate_generators(gt, bound ? bound : 7);
    Factorization f = factor(t->t, gs);
    std::string seq;
    for (size_t i = 0; i < f.ids.size(); ++i) {
      if (i) seq.push_back(' ');
      seq += std::to_string(f.ids[i]);
    }
    if (ids) *ids = dup_string(seq);
    if (gens) *gens = dup_string(format_generator_set(gs));
    return G31_OK;
  });
}

g31_status g31_selftest(int only_criterion, int* failures) {
  return guarded([&] {
    int failed = run_acceptance([](const std::string& line) { puts(line.c_str()); },
                                only_criterion);
    if (failures) *failures = failed;
    return G31_OK;
  });
}

}  // extern "C"
