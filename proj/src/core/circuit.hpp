#pragma once

#include <string>

#include "core/gens.hpp"

namespace g31 {

enum class GateKind { Not, And, Or, Fork, Id };

// A source is either circuit input k or output port of a gate.
struct Src {
  int input = -1;  // >= 0: input index
  int gate = -1;   // >= 0: gate index
  int port = 0;    // 0, or 1 for the second FORK half
  bool operator==(const Src&) const = default;
};

struct Gate {
  std::string id;
  GateKind kind;
  std::vector<Src> ins;
};

struct Circuit {
  int m = 0;  // inputs
  std::vector<Gate> gates;
  std::vector<Src> outputs;

  int n() const { return int(outputs.size()); }
  // |C| = k₁ + 2k₂ + n  (NOT/FORK/ID count once, AND/OR twice)
  int size() const;
};

Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit& c);
void validate_circuit(const Circuit& c);  // acyclic, single-use, arities

std::vector<bool> eval_circuit(const Circuit& c, const std::vector<bool>& bits);

// Strictly layered form: slice ℓ reads only the interface vector of slice ℓ-1.
struct SliceGate {
  GateKind kind;
  std::vector<int> in_pos;  // positions in the previous interface vector
};
struct Slice {
  std::vector<SliceGate> gates;
  int in_count = 0;
  int out_count = 0;  // interface size produced by this slice
  int size = 0;       // |C_ℓ|
};
struct LayeredCircuit {
  int m = 0;
  std::vector<Slice> slices;
  std::vector<int> out_perm;  // position in Y^L of declared output j
  int inserted_ids = 0;
  int strict_size = 0;  // Σ |C_ℓ|
  int depth() const { return int(slices.size()); }
};

LayeredCircuit strictify(const Circuit& c);
std::vector<bool> eval_layered(const LayeredCircuit& lc, const std::vector<bool>& bits);

// Residue making n + pad(n) ≡ 0 mod 3: the number of extra 0s in front of
// the computed outputs.
int pad(int n);

// Word implementing 0·x ↦ 0^{1+pad(n)}·f_S(x)·x for a depth-1 circuit.
GenWord compile_slice(const Circuit& s);

// Word simulating the circuit: eval(w, 0·x·s·#) = 0^{1+pad(n)}·f_C(x)·x·s·#.
GenWord compile_circuit(const Circuit& c);
// Strong simulation: additionally defined (and circuit-independent) on all
// short inputs 0·x₁…x_k·# with k < m.
GenWord compile_strong(const Circuit& c);

struct CompileMetrics {
  size_t tokens = 0;
  int max_tau = 0;  // largest j over τ_{j-1,j}
  size_t unary_tokens = 0;
};
CompileMetrics word_metrics(const GenWord& w);

}  // namespace g31
