#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qquery {

/// Largest supported variable count for a truth table.
inline constexpr int kMaxVars = 20;

/// A total Boolean function f : {0,1}^n -> {0,1}.
///
/// Entry X of the table is f(X), where bit i of the integer X is the value of
/// variable x_i (little-endian). Every module shares this convention, and so
/// do bitstrings: character i of "1101" is x_i.
///
/// n = 0 is allowed and denotes a constant; it shows up as the result of
/// restricting a one-variable function.
class TruthTable {
 public:
  TruthTable() = default;
  TruthTable(int n, std::vector<std::uint8_t> bits);

  static TruthTable constant(int n, bool value);
  static TruthTable from_predicate(int n,
                                   const std::function<bool(std::uint32_t)>& pred);

  int n() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(bits_.size()); }
  bool operator[](std::uint32_t x) const { return bits_[x] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  bool is_constant() const;
  std::uint32_t weight() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_{0};
};

enum class Family { Or, And, Parity, Majority, Threshold };

std::optional<Family> parse_family(std::string_view name);
std::string family_name(Family family);

/// Named function. MAJORITY is the strict rule |X| > n/2; THRESHOLD_m is
/// |X| >= m and needs 1 <= m <= n.
TruthTable from_family(Family family, int n, std::optional<int> m = std::nullopt);

/// Bitstring helpers. Character i is x_i.
std::uint32_t parse_bits(std::string_view bits, int n);
std::string format_bits(std::uint32_t x, int n);

bool evaluate(const TruthTable& f, std::string_view x);

/// f_0..f_n for a function that depends only on Hamming weight.
struct SymmetricProfile {
  int n = 0;
  std::vector<std::uint8_t> values;

  bool is_constant() const;
  bool operator[](int k) const { return values[static_cast<std::size_t>(k)] != 0; }
  friend bool operator==(const SymmetricProfile&, const SymmetricProfile&) = default;
};

std::optional<SymmetricProfile> symmetric_profile(const TruthTable& f);
TruthTable from_profile(const SymmetricProfile& profile);

/// min |2k - n + 1| over the weights k where f_k != f_{k+1}.
/// Throws DomainError for a constant profile.
int gamma(const SymmetricProfile& profile);

/// Integer weights t with (n - Gamma)/2 <= t <= (n + Gamma - 2)/2. On this band
/// the profile is constant. Empty when Gamma is odd and small.
std::vector<int> gamma_band(const SymmetricProfile& profile);

/// Fix x_i := b; the result has n - 1 variables with the remaining ones
/// renumbered in order.
TruthTable restrict(const TruthTable& f, int i, bool b);

bool is_monotone(const TruthTable& f);

/// AND_n embedded into MAJORITY_{2n-1} by fixing the first n - 1 inputs to 0.
struct AndMajorityReduction {
  TruthTable majority;
  int fixed_zeros = 0;

  /// Maps an input of AND_n to the corresponding MAJORITY input.
  std::uint32_t embed(std::uint32_t x) const { return x << fixed_zeros; }
};

AndMajorityReduction and_to_majority(int n);

/// Packs a table with n <= 6 into a word (bit X is f(X)), and back.
std::uint64_t to_word(const TruthTable& f);
TruthTable from_word(int n, std::uint64_t word);

/// For every table word on n <= 4 variables, the smallest word in its class
/// under permuting inputs, negating inputs and negating the output.
std::vector<std::uint32_t> npn_class_ids(int n);

}  // namespace qquery
