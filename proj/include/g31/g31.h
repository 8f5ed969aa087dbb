/* C interface to the G_{3,1} toolkit: prefix-code tables, the circuit
 * compiler, word-problem deciders and factorization. Objects are opaque
 * handles; every function returns a g31_status (G31_OK == 0) and reports
 * results through out-parameters. Strings returned through char** are
 * heap-allocated and must be released with g31_string_free(). */
#ifndef G31_H
#define G31_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g31_status {
  G31_OK = 0,
  G31_ERR_PARSE,
  G31_ERR_DOMAIN,    /* invalid input for the operation */
  G31_ERR_UNDEFINED, /* partial map undefined on the argument */
  G31_ERR_INTERNAL
} g31_status;

typedef struct g31_genword g31_genword; /* word over the generator alphabet */
typedef struct g31_circuit g31_circuit; /* acyclic boolean circuit */
typedef struct g31_table g31_table;     /* element of G_{3,1} */

const char* g31_last_error(void); /* message for the most recent failure */
void g31_string_free(char* s);

/* ---- generator words (.gw format) ---- */
g31_status g31_genword_parse(const char* text, g31_genword** out);
void g31_genword_free(g31_genword* w);
g31_status g31_genword_format(const g31_genword* w, char** out);
/* Applies the word to a word over {0,1,#} ('@' = empty). G31_ERR_UNDEFINED
 * when some stage is undefined. */
g31_status g31_genword_apply(const g31_genword* w, const char* input, char** out);
g31_status g31_genword_metrics(const g31_genword* w, size_t* tokens, int* max_tau,
                               size_t* unary_tokens);
/* Canonical table when the word has one (kappa part trivial). */
g31_status g31_genword_table(const g31_genword* w, g31_table** out);

/* ---- circuits (.ckt format) ---- */
g31_status g31_circuit_parse(const char* text, g31_circuit** out);
void g31_circuit_free(g31_circuit* c);
g31_status g31_circuit_info(const g31_circuit* c, int* inputs, int* outputs, int* size);
/* bits as '0'/'1' strings, MSB-first = in.0 first */
g31_status g31_circuit_eval(const g31_circuit* c, const char* bits, char** out);
g31_status g31_compile(const g31_circuit* c, int strong, g31_genword** out);

typedef enum g31_equiv_mode { G31_EQUIV_ORACLE, G31_EQUIV_GROUP, G31_EQUIV_BOTH } g31_equiv_mode;
/* *equivalent set to 0/1; witness (may be NULL) receives a distinguishing
 * input (oracle) or a non-fixed 0-region point (group). */
g31_status g31_circuit_equiv(const g31_circuit* a, const g31_circuit* b, g31_equiv_mode mode,
                             int* equivalent, char** witness);

/* ---- word problem ---- */
typedef enum g31_wp_method { G31_WP_TABLE, G31_WP_NORMAL_FORM, G31_WP_WITNESS } g31_wp_method;
/* verdict: "identity-proven", "not-identity <w>", or "identity-up-to <L>";
 * *is_identity is 1 for a proven identity, 0 otherwise. cap 0 = default. */
g31_status g31_word_problem(const g31_genword* w, g31_wp_method method, size_t cap,
                            int* is_identity, char** verdict);

/* ---- tables and factorization ---- */
g31_status g31_table_parse(const char* text, g31_table** out);
void g31_table_free(g31_table* t);
g31_status g31_table_format(const g31_table* t, char** out);
g31_status g31_table_size(const g31_table* t, size_t* out);
g31_status g31_table_apply(const g31_table* t, const char* input, char** out);

/* tag: "g31-01-sharp" or "g31-mod3-01-sharp". ids receives a space-separated
 * generator id sequence (leftmost applied last); gens (may be NULL) receives
 * the indexed generator-set listing. */
g31_status g31_factor(const g31_table* t, const char* tag, size_t bound, char** ids,
                      char** gens);

/* ---- acceptance suite ---- */
/* Prints one line per criterion to stdout; returns the number of failures
 * through *failures. only_criterion 0 = all. */
g31_status g31_selftest(int only_criterion, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* G31_H */
