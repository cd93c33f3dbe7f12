#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qquery/boolfn.hpp"

namespace qquery {

inline constexpr int kMaxBsVars = 12;
inline constexpr int kMaxCertVars = 10;
inline constexpr int kMaxTreeVars = 12;
inline constexpr int kMaxAlgorithmAVars = 10;

/// bs(f) together with an input and disjoint sensitive blocks achieving it.
struct BsWitness {
  int value = 0;
  std::uint32_t input = 0;
  std::vector<std::uint32_t> blocks;
};

BsWitness block_sensitivity(const TruthTable& f);

/// Minimal sensitive blocks of f at x (every sensitive block contains one).
std::vector<std::uint32_t> minimal_sensitive_blocks(const TruthTable& f, std::uint32_t x);

/// Partial assignment: the variables in `vars` take the bits of `values`
/// (values is always a subset of vars).
struct Certificate {
  std::uint32_t vars = 0;
  std::uint32_t values = 0;

  int size() const;
  bool agrees_with(std::uint32_t x) const { return ((x ^ values) & vars) == 0; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Shortlex order: size, then the sorted index list, then the assigned
/// values read in index order.
bool certificate_less(const Certificate& a, const Certificate& b);

/// True iff f is constant on the subcube fixed by c.
bool is_certificate(const TruthTable& f, const Certificate& c);

struct CertReport {
  int c = 0;
  int c0 = 0;
  int c1 = 0;
  /// A smallest certificate for every input, indexed by input.
  std::vector<Certificate> per_input;
};

CertReport certificate_complexity(const TruthTable& f);

/// All minimal 1-certificates (prime implicants) of f, sorted with
/// certificate_less.
std::vector<Certificate> minimal_one_certificates(const TruthTable& f);

/// Depth of an optimal decision tree, by memoised minimax over subcubes.
int decision_tree_depth(const TruthTable& f);

/// Classical procedure that queries at most C1(f) * bs(f) variables: repeatedly
/// query the first consistent minimal 1-certificate, then fall back to the
/// smallest consistent input.
class AlgorithmA {
 public:
  enum class Exit { CertificateMatched, NoCertificate, Fallback };

  struct Stage {
    Certificate certificate;
    std::vector<int> queried;
    bool matched = false;
  };

  struct Result {
    bool value = false;
    int queries = 0;
    std::vector<Stage> stages;
    Exit exit = Exit::Fallback;
    std::uint32_t fallback_input = 0;
  };

  explicit AlgorithmA(TruthTable f);

  Result run(std::uint32_t x) const;

  int stage_limit() const { return stage_limit_; }
  const std::vector<Certificate>& certificates() const { return certificates_; }

 private:
  TruthTable f_;
  std::vector<Certificate> certificates_;
  int stage_limit_ = 0;
};

AlgorithmA::Result algorithm_A(const TruthTable& f, std::uint32_t x);

enum class AdegMode { Auto, General, Symmetric, Omit };

struct InequalityCheck {
  std::string name;
  bool holds = false;
};

/// Every measure of one function plus the named inequality checks between
/// them. Lower bounds are constant-free evaluations of the formulas, not
/// verified claims.
struct BoundReport {
  int n = 0;
  int deg = 0;
  std::optional<int> adeg;
  int bs = 0;
  int c = 0;
  int c0 = 0;
  int c1 = 0;
  int d = 0;
  bool monotone = false;
  std::optional<int> gamma;

  /// max(deg/2, sqrt(bs/8))
  double q_exact_lower = 0;
  /// max(adeg/2, sqrt(bs/16)); adeg term dropped when adeg is absent
  double q_bounded_lower = 0;
  /// Arithmetic from D <= 32 Q_E^4 and D <= 4096 Q_2^6 (and D <= 256 Q_2^4
  /// when monotone). Reported only.
  double q_exact_from_d = 0;
  double q_bounded_from_d = 0;
  /// sqrt(n (n - Gamma)) for symmetric non-constant f; Theta-constant omitted.
  std::optional<double> symmetric_bounded_bound;

  std::vector<InequalityCheck> checks;

  bool all_hold() const;
};

BoundReport bound_report(const TruthTable& f, AdegMode mode = AdegMode::Auto);

/// Like bound_report but with adeg supplied by the caller (the exhaustive
/// suite caches it per equivalence class).
BoundReport bound_report_with_adeg(const TruthTable& f, std::optional<int> adeg);

/// sqrt(M (n - M + 1)), the THRESHOLD_M query-complexity scale.
double threshold_bound(int n, int m);

}  // namespace qquery
