// Random query circuits over the exact gate set, shared by the unit tests and
// the acceptance binary.
#pragma once

#include <random>

#include "qquery/circuit.hpp"

namespace testing_support {

inline qquery::Gate random_gate(std::mt19937_64& rng, int m) {
  using qquery::GateKind;
  static const GateKind kinds[] = {GateKind::H, GateKind::X, GateKind::Z, GateKind::S,
                                   GateKind::T, GateKind::CNOT, GateKind::CCNOT, GateKind::CZ};
  GateKind kind;
  do {
    kind = kinds[rng() % 8];
  } while (qquery::gate_arity(kind) > m);
  std::vector<int> qubits(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) qubits[static_cast<std::size_t>(q)] = q;
  std::shuffle(qubits.begin(), qubits.end(), rng);
  qubits.resize(static_cast<std::size_t>(qquery::gate_arity(kind)));
  return {kind, qubits, {}};
}

/// n in 1..max_n, m in [ceil(log2 n) + 1, max_m], exactly `queries` oracle
/// calls with up to `gates_per_layer` gates around each.
inline qquery::Circuit random_circuit(std::mt19937_64& rng, int max_n, int max_m, int queries,
                                      int gates_per_layer = 4) {
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
  const int min_m = qquery::ceil_log2(n) + 1;
  const int m = min_m + static_cast<int>(rng() % static_cast<unsigned>(max_m - min_m + 1));
  qquery::Circuit c(m, n);
  for (int layer = 0; layer <= queries; ++layer) {
    const int gates = static_cast<int>(rng() % static_cast<unsigned>(gates_per_layer + 1));
    for (int g = 0; g < gates; ++g) c.add(random_gate(rng, m));
    if (layer < queries) c.oracle();
  }
  return c;
}

}  // namespace testing_support
