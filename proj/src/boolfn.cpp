#include "qquery/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "qquery/errors.hpp"

namespace qquery {

namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxVars) {
    throw ParameterError("variable count " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxVars) + "]");
  }
}

}  // namespace

TruthTable::TruthTable(int n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
  check_n(n);
  if (bits_.size() != (std::size_t{1} << n)) {
    throw ParameterError("truth table for n = " + std::to_string(n) + " needs " +
                         std::to_string(std::size_t{1} << n) + " entries, got " +
                         std::to_string(bits_.size()));
  }
  for (auto b : bits_) {
    if (b > 1) throw ParameterError("truth table entries must be 0 or 1");
  }
}

TruthTable TruthTable::constant(int n, bool value) {
  check_n(n);
  return TruthTable(n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0));
}

TruthTable TruthTable::from_predicate(int n, const std::function<bool(std::uint32_t)>& pred) {
  check_n(n);
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < bits.size(); ++x) bits[x] = pred(x) ? 1 : 0;
  return TruthTable(n, std::move(bits));
}

bool TruthTable::is_constant() const {
  return std::all_of(bits_.begin(), bits_.end(), [&](auto b) { return b == bits_.front(); });
}

std::uint32_t TruthTable::weight() const {
  return static_cast<std::uint32_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::optional<Family> parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "or") return Family::Or;
  if (lower == "and") return Family::And;
  if (lower == "parity" || lower == "xor") return Family::Parity;
  if (lower == "majority") return Family::Majority;
  if (lower == "threshold") return Family::Threshold;
  return std::nullopt;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Or: return "OR";
    case Family::And: return "AND";
    case Family::Parity: return "PARITY";
    case Family::Majority: return "MAJORITY";
    case Family::Threshold: return "THRESHOLD";
  }
  return "?";
}

TruthTable from_family(Family family, int n, std::optional<int> m) {
  if (n < 1 || n > kMaxVars) {
    throw ParameterError("family functions need 1 <= n <= " + std::to_string(kMaxVars));
  }
  if (family == Family::Threshold && (!m || *m < 1 || *m > n)) {
    throw ParameterError("THRESHOLD needs 1 <= m <= n");
  }
  const int threshold = m.value_or(0);
  return TruthTable::from_predicate(n, [&](std::uint32_t x) {
    const int w = std::popcount(x);
    switch (family) {
      case Family::Or: return w > 0;
      case Family::And: return w == n;
      case Family::Parity: return (w & 1) == 1;
      case Family::Majority: return 2 * w > n;
      case Family::Threshold: return w >= threshold;
    }
    return false;
  });
}

std::uint32_t parse_bits(std::string_view bits, int n) {
  if (static_cast<int>(bits.size()) != n) {
    throw ParameterError("bitstring '" + std::string(bits) + "' has length " +
                         std::to_string(bits.size()) + ", expected " + std::to_string(n));
  }
  std::uint32_t x = 0;
  for (int i = 0; i < n; ++i) {
    const char c = bits[static_cast<std::size_t>(i)];
    if (c != '0' && c != '1') throw ParameterError("bitstring must contain only 0 and 1");
    if (c == '1') x |= 1u << i;
  }
  return x;
}

std::string format_bits(std::uint32_t x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((x >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

bool evaluate(const TruthTable& f, std::string_view x) { return f[parse_bits(x, f.n())]; }

bool SymmetricProfile::is_constant() const {
  return std::all_of(values.begin(), values.end(), [&](auto v) { return v == values.front(); });
}

std::optional<SymmetricProfile> symmetric_profile(const TruthTable& f) {
  const int n = f.n();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, -1);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    auto& slot = seen[static_cast<std::size_t>(std::popcount(x))];
    const int v = f[x] ? 1 : 0;
    if (slot < 0) {
      slot = v;
    } else if (slot != v) {
      return std::nullopt;
    }
  }
  SymmetricProfile p{n, {}};
  p.values.reserve(seen.size());
  for (int v : seen) p.values.push_back(static_cast<std::uint8_t>(v));
  return p;
}

TruthTable from_profile(const SymmetricProfile& profile) {
  if (profile.values.size() != static_cast<std::size_t>(profile.n) + 1) {
    throw ParameterError("profile length must be n + 1");
  }
  return TruthTable::from_predicate(profile.n,
                                    [&](std::uint32_t x) { return profile[std::popcount(x)]; });
}

int gamma(const SymmetricProfile& profile) {
  const int n = profile.n;
  int best = std::numeric_limits<int>::max();
  for (int k = 0; k < n; ++k) {
    if (profile[k] != profile[k + 1]) best = std::min(best, std::abs(2 * k - n + 1));
  }
  if (best == std::numeric_limits<int>::max()) {
    throw DomainError("Gamma is undefined for a constant profile");
  }
  return best;
}

std::vector<int> gamma_band(const SymmetricProfile& profile) {
  const int n = profile.n;
  const int g = gamma(profile);
  std::vector<int> band;
  for (int t = 0; t <= n; ++t) {
    // (n - g)/2 <= t <= (n + g - 2)/2, kept in integers
    if (n - g <= 2 * t && 2 * t <= n + g - 2) band.push_back(t);
  }
  return band;
}

TruthTable restrict(const TruthTable& f, int i, bool b) {
  const int n = f.n();
  if (i < 0 || i >= n) {
    throw ParameterError("restrict: index " + std::to_string(i) + " out of range for n = " +
                         std::to_string(n));
  }
  const std::uint32_t low = (1u << i) - 1;
  return TruthTable::from_predicate(n - 1, [&](std::uint32_t y) {
    const std::uint32_t x = (y & low) | (b ? 1u << i : 0u) | ((y & ~low) << 1);
    return f[x];
  });
}

bool is_monotone(const TruthTable& f) {
  bool up = true;
  bool down = true;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    for (int i = 0; i < f.n(); ++i) {
      if ((x >> i) & 1u) continue;
      const bool lo = f[x];
      const bool hi = f[x | (1u << i)];
      if (lo && !hi) up = false;
      if (!lo && hi) down = false;
    }
  }
  return up || down;
}

AndMajorityReduction and_to_majority(int n) {
  if (n < 1) throw ParameterError("and_to_majority needs n >= 1");
  return {from_family(Family::Majority, 2 * n - 1), n - 1};
}

std::uint64_t to_word(const TruthTable& f) {
  if (f.n() > 6) throw CapabilityError("to_word supports n <= 6");
  std::uint64_t w = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (f[x]) w |= std::uint64_t{1} << x;
  }
  return w;
}

TruthTable from_word(int n, std::uint64_t word) {
  if (n < 0 || n > 6) throw CapabilityError("from_word supports n <= 6");
  return TruthTable::from_predicate(n, [&](std::uint32_t x) { return (word >> x) & 1u; });
}

std::vector<std::uint32_t> npn_class_ids(int n) {
  if (n < 1 || n > 4) throw CapabilityError("npn_class_ids supports 1 <= n <= 4");
  const std::uint32_t inputs = 1u << n;
  const std::uint64_t count = std::uint64_t{1} << inputs;
  const std::uint64_t all = count - 1;

  auto permute_input = [&](std::uint64_t table, auto&& map) {
    std::uint64_t out = 0;
    for (std::uint32_t x = 0; x < inputs; ++x) {
      if ((table >> x) & 1u) out |= std::uint64_t{1} << map(x);
    }
    return out;
  };
  auto swap_vars = [&](std::uint64_t t, int i) {
    return permute_input(t, [&](std::uint32_t x) {
      const std::uint32_t a = (x >> i) & 1u;
      const std::uint32_t b = (x >> (i + 1)) & 1u;
      if (a == b) return x;
      return x ^ ((1u << i) | (1u << (i + 1)));
    });
  };
  auto negate_var0 = [&](std::uint64_t t) {
    return permute_input(t, [](std::uint32_t x) { return x ^ 1u; });
  };

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> ids(count, kUnset);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (ids[start] != kUnset) continue;
    const auto rep = static_cast<std::uint32_t>(start);
    ids[start] = rep;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::uint64_t t = stack.back();
      stack.pop_back();
      std::vector<std::uint64_t> next{negate_var0(t), t ^ all};
      for (int i = 0; i + 1 < n; ++i) next.push_back(swap_vars(t, i));
      for (auto u : next) {
        if (ids[u] == kUnset) {
          ids[u] = rep;
          stack.push_back(u);
        }
      }
    }
  }
  return ids;
}

}  // namespace qquery
