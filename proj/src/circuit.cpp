#include "qquery/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "qquery/errors.hpp"

namespace qquery {

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CCNOT: return "CCNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::CUSTOM: return "CUSTOM";
  }
  return "?";
}

std::optional<GateKind> parse_gate(const std::string& name) {
  for (auto k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::T, GateKind::CNOT,
                 GateKind::CCNOT, GateKind::CZ, GateKind::CUSTOM}) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ: return 2;
    case GateKind::CCNOT: return 3;
    case GateKind::CUSTOM: return 0;
    default: return 1;
  }
}

Matrix Matrix::identity(int dim) {
  Matrix m{dim, std::vector<std::complex<double>>(static_cast<std::size_t>(dim) * dim)};
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_unitary(double tol) const {
  if (data.size() != static_cast<std::size_t>(dim) * dim) return false;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      std::complex<double> acc = 0;
      for (int k = 0; k < dim; ++k) acc += std::conj(at(k, r)) * at(k, c);
      const double expect = r == c ? 1.0 : 0.0;
      if (std::abs(acc - expect) > tol) return false;
    }
  }
  return true;
}

int ceil_log2(int n) {
  int bits = 0;
  while ((1 << bits) < n) ++bits;
  return bits;
}

Circuit::Circuit(int m, int n) : m_(m), n_(n) {
  if (n < 1) throw ValidationError("circuit needs n >= 1");
  if (m < 1 || m > kMaxQubits) {
    throw ValidationError("qubit count " + std::to_string(m) + " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

int Circuit::index_width() const { return ceil_log2(n_); }

void Circuit::check_gate(const Gate& gate) const {
  const int arity = gate_arity(gate.kind);
  if (gate.kind == GateKind::CUSTOM) {
    if (gate.targets.empty()) throw ValidationError("CUSTOM gate needs at least one target");
    if (!gate.matrix) throw ValidationError("CUSTOM gate needs a matrix");
    const int dim = 1 << gate.targets.size();
    if (gate.matrix->dim != dim || gate.matrix->data.size() != static_cast<std::size_t>(dim) * dim) {
      throw ValidationError("CUSTOM matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!gate.matrix->is_unitary()) throw ValidationError("CUSTOM matrix is not unitary within 1e-9");
  } else {
    if (static_cast<int>(gate.targets.size()) != arity) {
      throw ValidationError(gate_name(gate.kind) + " needs " + std::to_string(arity) + " target(s)");
    }
    if (gate.matrix) throw ValidationError(gate_name(gate.kind) + " does not take a matrix");
  }
  for (std::size_t i = 0; i < gate.targets.size(); ++i) {
    const int q = gate.targets[i];
    if (q < 0 || q >= m_) throw ValidationError("qubit " + std::to_string(q) + " out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.targets[j] == q) throw ValidationError("gate targets must be distinct");
    }
  }
}

Circuit& Circuit::add(Gate gate) {
  check_gate(gate);
  ops_.emplace_back(std::move(gate));
  return *this;
}

Circuit& Circuit::oracle() {
  if (m_ < index_width() + 1) {
    throw ValidationError("oracle needs m >= ceil(log2 n) + 1 = " + std::to_string(index_width() + 1));
  }
  ops_.emplace_back(OracleCall{});
  return *this;
}

Circuit& Circuit::custom(std::vector<int> targets, Matrix matrix) {
  return add({GateKind::CUSTOM, std::move(targets), std::move(matrix)});
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.m_ != m_ || other.n_ != n_) throw ValidationError("append: circuit shapes differ");
  for (const auto& op : other.ops_) ops_.push_back(op);
  return *this;
}

int Circuit::query_count() const {
  return static_cast<int>(std::count_if(ops_.begin(), ops_.end(),
                                        [](const Op& op) { return std::holds_alternative<OracleCall>(op); }));
}

bool Circuit::uses_custom_gates() const {
  return std::any_of(ops_.begin(), ops_.end(), [](const Op& op) {
    const auto* g = std::get_if<Gate>(&op);
    return g && g->kind == GateKind::CUSTOM;
  });
}

void Circuit::validate() const {
  if (n_ < 1) throw ValidationError("circuit needs n >= 1");
  if (m_ < 1 || m_ > kMaxQubits) throw ValidationError("qubit count out of range");
  for (const auto& op : ops_) {
    if (const auto* g = std::get_if<Gate>(&op)) {
      check_gate(*g);
    } else if (m_ < index_width() + 1) {
      throw ValidationError("oracle needs m >= ceil(log2 n) + 1");
    }
  }
}

int query_count(const Circuit& c) { return c.query_count(); }

}  // namespace qquery
