// Exercises the shared-library C surface end to end.
#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "g31/g31.h"

#define REQUIRE(cond)                                                  \
  do {                                                                 \
    if (!(cond)) {                                                     \
      std::fprintf(stderr, "FAILED at %s:%d: %s (last error: %s)\n",   \
                   __FILE__, __LINE__, #cond, g31_last_error());       \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main() {
  // generator words
  g31_genword* w = nullptr;
  REQUIRE(g31_genword_parse("not not", &w) == G31_OK);
  char* out = nullptr;
  REQUIRE(g31_genword_apply(w, "0110", &out) == G31_OK);
  REQUIRE(std::string(out) == "0110");
  g31_string_free(out);
  int id = 0;
  char* verdict = nullptr;
  REQUIRE(g31_word_problem(w, G31_WP_TABLE, 0, &id, &verdict) == G31_OK);
  REQUIRE(id == 1);
  REQUIRE(std::string(verdict) == "identity-proven");
  g31_string_free(verdict);
  REQUIRE(g31_word_problem(w, G31_WP_WITNESS, 0, &id, &verdict) == G31_OK);
  REQUIRE(id == 1);
  g31_string_free(verdict);
  g31_genword_free(w);

  g31_genword* bad = nullptr;
  REQUIRE(g31_genword_parse("zap", &bad) == G31_ERR_PARSE);

  // the conjugation formula through the C layer
  g31_genword* conj = nullptr;
  REQUIRE(g31_genword_parse("K' t1 K t4'", &conj) == G31_OK);
  REQUIRE(g31_word_problem(conj, G31_WP_NORMAL_FORM, 0, &id, &verdict) == G31_OK);
  REQUIRE(id == 1);
  g31_string_free(verdict);
  g31_genword_free(conj);

  // undefined application
  g31_genword* k = nullptr;
  REQUIRE(g31_genword_parse("K", &k) == G31_OK);
  REQUIRE(g31_genword_apply(k, "0101", &out) == G31_ERR_UNDEFINED);
  g31_genword_free(k);

  // circuits
  g31_circuit* c1 = nullptr;
  g31_circuit* c2 = nullptr;
  REQUIRE(g31_circuit_parse("inputs 2\ngate g OR in.0 in.1\noutputs g\n", &c1) == G31_OK);
  REQUIRE(g31_circuit_parse("inputs 2\ngate g AND in.0 in.1\noutputs g\n", &c2) == G31_OK);
  int m = 0, n = 0, size = 0;
  REQUIRE(g31_circuit_info(c1, &m, &n, &size) == G31_OK);
  REQUIRE(m == 2 && n == 1 && size == 3);
  REQUIRE(g31_circuit_eval(c1, "01", &out) == G31_OK);
  REQUIRE(std::string(out) == "1");
  g31_string_free(out);

  g31_genword* wc = nullptr;
  REQUIRE(g31_compile(c1, 0, &wc) == G31_OK);
  size_t tokens = 0, unary = 0;
  int max_tau = 0;
  REQUIRE(g31_genword_metrics(wc, &tokens, &max_tau, &unary) == G31_OK);
  REQUIRE(tokens > 0 && max_tau > 0 && unary >= tokens);
  REQUIRE(g31_genword_apply(wc, "001#", &out) == G31_OK);
  REQUIRE(std::string(out) == "000101#");
  g31_string_free(out);
  g31_table* tc = nullptr;
  REQUIRE(g31_genword_table(wc, &tc) == G31_OK);
  size_t ts = 0;
  REQUIRE(g31_table_size(tc, &ts) == G31_OK);
  REQUIRE(ts > 1);
  g31_table_free(tc);
  g31_genword_free(wc);

  int eq = 0;
  char* witness = nullptr;
  REQUIRE(g31_circuit_equiv(c1, c2, G31_EQUIV_BOTH, &eq, &witness) == G31_OK);
  REQUIRE(eq == 0);
  REQUIRE(witness && *witness);
  g31_string_free(witness);
  REQUIRE(g31_circuit_equiv(c1, c1, G31_EQUIV_GROUP, &eq, &witness) == G31_OK);
  REQUIRE(eq == 1);
  g31_string_free(witness);
  g31_circuit_free(c1);
  g31_circuit_free(c2);

  // tables and factorization
  g31_table* t = nullptr;
  REQUIRE(g31_table_parse("0 -> 1\n1 -> 0\n# -> #\n", &t) == G31_OK);
  REQUIRE(g31_table_apply(t, "011", &out) == G31_OK);
  REQUIRE(std::string(out) == "111");
  g31_string_free(out);
  char* ids = nullptr;
  char* gens = nullptr;
  REQUIRE(g31_factor(t, "g31-01-sharp", 7, &ids, &gens) == G31_OK);
  REQUIRE(std::strlen(ids) > 0);
  REQUIRE(std::strstr(gens, "generator") != nullptr);
  g31_string_free(ids);
  g31_string_free(gens);
  g31_table_free(t);

  // a single fast acceptance criterion through the C layer
  int failures = -1;
  REQUIRE(g31_selftest(1, &failures) == G31_OK);
  REQUIRE(failures == 0);

  std::puts("capi: all checks passed");
  return 0;
}
