#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qquery {

inline constexpr int kMaxQubits = 22;

enum class GateKind { H, X, Z, S, T, CNOT, CCNOT, CZ, CUSTOM };

std::string gate_name(GateKind kind);
std::optional<GateKind> parse_gate(const std::string& name);
/// Number of target qubits the kind acts on; 0 for CUSTOM (any).
int gate_arity(GateKind kind);

/// Dense 2^k x 2^k matrix, row-major. Row/column bit k-1 (the most
/// significant) belongs to targets[0].
struct Matrix {
  int dim = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& at(int r, int c) { return data[static_cast<std::size_t>(r * dim + c)]; }
  const std::complex<double>& at(int r, int c) const { return data[static_cast<std::size_t>(r * dim + c)]; }
  static Matrix identity(int dim);
  bool is_unitary(double tol = 1e-9) const;
};

/// For controlled kinds the targets list controls first: CNOT = [control,
/// target], CCNOT = [c1, c2, target]; CZ is symmetric.
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> targets;
  std::optional<Matrix> matrix;
};

struct OracleCall {
  friend bool operator==(const OracleCall&, const OracleCall&) = default;
};

using Op = std::variant<Gate, OracleCall>;

/// A T-query network U_0, O, U_1, ..., O, U_T on m qubits.
///
/// Qubit q is character q of the basis-state string read left to right, so it
/// is bit (m - 1 - q) of the basis-state number. The oracle maps |i, b, z> to
/// |i, b xor x_i, z>: the index i sits on qubits 0..L-1 with qubit 0 the least
/// significant bit (L = ceil(log2 n)), b is qubit L, and z is the rest. The
/// output bit is the rightmost qubit m - 1; in zero-error semantics qubit
/// m - 2 is the "conclusive" flag. Indices i >= n leave the state unchanged.
class Circuit {
 public:
  Circuit(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Op>& ops() const { return ops_; }

  int index_width() const;
  int target_qubit() const { return index_width(); }
  int output_qubit() const { return m_ - 1; }
  std::uint64_t qubit_mask(int q) const { return std::uint64_t{1} << (m_ - 1 - q); }

  Circuit& add(Gate gate);
  Circuit& oracle();
  Circuit& h(int q) { return add({GateKind::H, {q}, {}}); }
  Circuit& x(int q) { return add({GateKind::X, {q}, {}}); }
  Circuit& z(int q) { return add({GateKind::Z, {q}, {}}); }
  Circuit& s(int q) { return add({GateKind::S, {q}, {}}); }
  Circuit& t(int q) { return add({GateKind::T, {q}, {}}); }
  Circuit& cnot(int control, int target) { return add({GateKind::CNOT, {control, target}, {}}); }
  Circuit& ccnot(int c1, int c2, int target) { return add({GateKind::CCNOT, {c1, c2, target}, {}}); }
  Circuit& cz(int a, int b) { return add({GateKind::CZ, {a, b}, {}}); }
  Circuit& swap(int a, int b) { return cnot(a, b).cnot(b, a).cnot(a, b); }
  Circuit& custom(std::vector<int> targets, Matrix matrix);
  /// Appends every op of `other` (same m and n).
  Circuit& append(const Circuit& other);

  int query_count() const;
  bool uses_custom_gates() const;

  /// Re-checks every structural invariant; throws ValidationError.
  void validate() const;

 private:
  void check_gate(const Gate& gate) const;

  int m_;
  int n_;
  std::vector<Op> ops_;
};

int query_count(const Circuit& c);

int ceil_log2(int n);

}  // namespace qquery
