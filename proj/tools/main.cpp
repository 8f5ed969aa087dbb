// g31 command line: circuit compilation to group words, word-problem
// deciders, equivalence checking, factorization. Talks to the shared
// library through the C interface only.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "g31/g31.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

[[noreturn]] void die(g31_status) {
  std::cerr << "error: " << g31_last_error() << "\n";
  std::exit(2);
}

void check(g31_status st) {
  if (st != G31_OK) die(st);
}

struct Str {
  char* p = nullptr;
  ~Str() { g31_string_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G_{3,1} toolkit: prefix-code tables, circuit simulation, word problems"};
  app.require_subcommand(1);
  int exit_code = 0;

  // apply <word.gw> <input>
  std::string a_word, a_input;
  auto* apply = app.add_subcommand("apply", "apply a generator word to a word over {0,1,#}");
  apply->add_option("word", a_word, "generator word file (.gw)")->required();
  apply->add_option("input", a_input, "argument word; @ is the empty word")->required();
  apply->callback([&] {
    g31_genword* w = nullptr;
    check(g31_genword_parse(slurp(a_word).c_str(), &w));
    Str out;
    g31_status st = g31_genword_apply(w, a_input.c_str(), &out.p);
    if (st == G31_ERR_UNDEFINED) {
      std::cout << "undefined\n";
      exit_code = 1;
    } else {
      check(st);
      std::cout << out.p << "\n";
    }
    g31_genword_free(w);
  });

  // compile <in.ckt> [-o out.gw] [--strong]
  std::string c_in, c_out;
  bool c_strong = false;
  auto* compile = app.add_subcommand("compile", "compile a circuit to a generator word");
  compile->add_option("circuit", c_in, "circuit file (.ckt)")->required();
  compile->add_option("-o,--output", c_out, "write the word here instead of stdout");
  compile->add_flag("--strong", c_strong, "strong simulation (defined on short inputs)");
  compile->callback([&] {
    g31_circuit* c = nullptr;
    check(g31_circuit_parse(slurp(c_in).c_str(), &c));
    g31_genword* w = nullptr;
    check(g31_compile(c, c_strong ? 1 : 0, &w));
    Str text;
    check(g31_genword_format(w, &text.p));
    if (c_out.empty()) {
      std::cout << text.p << "\n";
    } else {
      std::ofstream f(c_out, std::ios::binary);
      f << text.p << "\n";
    }
    g31_genword_free(w);
    g31_circuit_free(c);
  });

  // equiv <a.ckt> <b.ckt> --mode oracle|group|both
  std::string e_a, e_b, e_mode = "both";
  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two circuits");
  equiv->add_option("a", e_a)->required();
  equiv->add_option("b", e_b)->required();
  equiv->add_option("--mode", e_mode, "oracle | group | both (default both)");
  equiv->callback([&] {
    g31_equiv_mode m;
    if (e_mode == "oracle") m = G31_EQUIV_ORACLE;
    else if (e_mode == "group") m = G31_EQUIV_GROUP;
    else if (e_mode == "both") m = G31_EQUIV_BOTH;
    else throw CLI::ValidationError("bad mode: " + e_mode);
    g31_circuit* a = nullptr;
    g31_circuit* b = nullptr;
    check(g31_circuit_parse(slurp(e_a).c_str(), &a));
    check(g31_circuit_parse(slurp(e_b).c_str(), &b));
    int eq = 0;
    Str witness;
    check(g31_circuit_equiv(a, b, m, &eq, &witness.p));
    if (eq) {
      std::cout << "equivalent\n";
    } else {
      std::cout << "inequivalent";
      if (witness.p && *witness.p) std::cout << " " << witness.p;
      std::cout << "\n";
      exit_code = 1;
    }
    g31_circuit_free(a);
    g31_circuit_free(b);
  });

  // wp <in.gw> --method table|normal-form|witness [--cap N]
  std::string w_in, w_method = "normal-form";
  size_t w_cap = 0;
  auto* wp = app.add_subcommand("wp", "word problem for a generator word");
  wp->add_option("word", w_in)->required();
  wp->add_option("--method", w_method, "table | normal-form | witness");
  wp->add_option("--cap", w_cap, "witness search cap (bits)");
  wp->callback([&] {
    g31_wp_method m;
    if (w_method == "table") m = G31_WP_TABLE;
    else if (w_method == "normal-form") m = G31_WP_NORMAL_FORM;
    else if (w_method == "witness") m = G31_WP_WITNESS;
    else throw CLI::ValidationError("bad method: " + w_method);
    g31_genword* w = nullptr;
    check(g31_genword_parse(slurp(w_in).c_str(), &w));
    int id = 0;
    Str verdict;
    check(g31_word_problem(w, m, w_cap, &id, &verdict.p));
    std::cout << verdict.p << "\n";
    if (!id) exit_code = 1;
    g31_genword_free(w);
  });

  // factor <table-file> [--tag ...] [--bound N] [--print-gens]
  std::string f_in, f_tag = "g31-01-sharp";
  size_t f_bound = 7;
  bool f_gens = false;
  auto* fac = app.add_subcommand("factor", "factor a table over the bounded generating set");
  fac->add_option("table", f_in)->required();
  fac->add_option("--tag", f_tag, "g31-01-sharp | g31-mod3-01-sharp");
  fac->add_option("--bound", f_bound, "generator table-size bound (default 7)");
  fac->add_flag("--print-gens", f_gens, "also print the indexed generator set");
  fac->callback([&] {
    g31_table* t = nullptr;
    check(g31_table_parse(slurp(f_in).c_str(), &t));
    Str ids, gens;
    check(g31_factor(t, f_tag.c_str(), f_bound, &ids.p, f_gens ? &gens.p : nullptr));
    std::cout << ids.p << "\n";
    if (f_gens) std::cout << gens.p;
    g31_table_free(t);
  });

  // metrics <in.ckt>
  std::string m_in;
  bool m_strong = false, m_unary = false;
  auto* metrics = app.add_subcommand("metrics", "compiled-word statistics for a circuit");
  metrics->add_option("circuit", m_in)->required();
  metrics->add_flag("--strong", m_strong, "measure the strong-simulation word");
  metrics->add_flag("--unary-length", m_unary, "also count tau subscripts in unary");
  metrics->callback([&] {
    g31_circuit* c = nullptr;
    g31_genword* w = nullptr;
    if (m_in.size() > 3 && m_in.rfind(".gw") == m_in.size() - 3) {
      check(g31_genword_parse(slurp(m_in).c_str(), &w));
    } else {
      check(g31_circuit_parse(slurp(m_in).c_str(), &c));
      check(g31_compile(c, m_strong ? 1 : 0, &w));
    }
    size_t tokens = 0, unary = 0;
    int max_tau = 0;
    check(g31_genword_metrics(w, &tokens, &max_tau, &unary));
    std::cout << "tokens " << tokens << "\n";
    std::cout << "max-tau-subscript " << max_tau << "\n";
    if (m_unary) std::cout << "unary-length " << unary << "\n";
    g31_table* t = nullptr;
    if (g31_genword_table(w, &t) == G31_OK) {
      size_t ts = 0;
      g31_table_size(t, &ts);
      std::cout << "table-size " << ts << "\n";
      g31_table_free(t);
    }
    g31_genword_free(w);
    if (c) g31_circuit_free(c);
  });

  // selftest [--criterion N]
  int s_crit = 0;
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_option("--criterion", s_crit, "run a single criterion (1..10)");
  self->callback([&] {
    int failures = 0;
    check(g31_selftest(s_crit, &failures));
    if (failures) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }
  return exit_code;
}
