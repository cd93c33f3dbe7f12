#include "qquery/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qquery/errors.hpp"
#include "qquery/polynomial.hpp"

namespace qquery {

namespace {

constexpr std::uint8_t kMixed = 2;

// cube[F << n | X] is f's value on the subcube through X whose free
// variables are F, or kMixed when f is not constant there.
std::vector<std::uint8_t> subcube_values(const TruthTable& f) {
  const int n = f.n();
  const std::uint32_t size = f.size();
  std::vector<std::uint8_t> cube(std::size_t{size} * size);
  for (std::uint32_t x = 0; x < size; ++x) cube[x] = f[x] ? 1 : 0;
  for (std::uint32_t free = 1; free < size; ++free) {
    const std::uint32_t v = free & (~free + 1);
    const std::uint32_t rest = free ^ v;
    const std::uint8_t* prev = &cube[std::size_t{rest} << n];
    std::uint8_t* cur = &cube[std::size_t{free} << n];
    for (std::uint32_t x = 0; x < size; ++x) {
      const std::uint8_t a = prev[x];
      cur[x] = (a == prev[x ^ v]) ? a : kMixed;
    }
  }
  return cube;
}

int max_packing(const std::vector<std::vector<std::uint32_t>>& by_low, std::uint32_t avail,
                std::vector<std::int8_t>& memo) {
  if (avail == 0) return 0;
  auto& slot = memo[avail];
  if (slot >= 0) return slot;
  const int v = std::countr_zero(avail);
  int best = max_packing(by_low, avail & (avail - 1), memo);
  for (const auto blk : by_low[static_cast<std::size_t>(v)]) {
    if ((blk & ~avail) == 0) best = std::max(best, 1 + max_packing(by_low, avail & ~blk, memo));
  }
  slot = static_cast<std::int8_t>(best);
  return best;
}

std::vector<std::uint32_t> packing_blocks(const std::vector<std::vector<std::uint32_t>>& by_low,
                                          std::uint32_t avail, std::vector<std::int8_t>& memo) {
  std::vector<std::uint32_t> chosen;
  while (avail != 0) {
    const int target = max_packing(by_low, avail, memo);
    if (target == 0) break;
    const int v = std::countr_zero(avail);
    const std::uint32_t skip = avail & (avail - 1);
    if (max_packing(by_low, skip, memo) == target) {
      avail = skip;
      continue;
    }
    for (const auto blk : by_low[static_cast<std::size_t>(v)]) {
      if ((blk & ~avail) == 0 && 1 + max_packing(by_low, avail & ~blk, memo) == target) {
        chosen.push_back(blk);
        avail &= ~blk;
        break;
      }
    }
  }
  return chosen;
}

}  // namespace

std::vector<std::uint32_t> minimal_sensitive_blocks(const TruthTable& f, std::uint32_t x) {
  const int n = f.n();
  const std::uint32_t size = f.size();
  const bool fx = f[x];
  // has_sensitive_subset[B]: some nonempty B' subset-or-equal of B is sensitive.
  std::vector<std::uint8_t> covered(size, 0);
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 1; b < size; ++b) {
    bool below = false;
    for (int i = 0; i < n && !below; ++i) {
      if ((b >> i) & 1u) below = covered[b ^ (1u << i)] != 0;
    }
    const bool sensitive = f[x ^ b] != fx;
    if (sensitive && !below) out.push_back(b);
    covered[b] = (sensitive || below) ? 1 : 0;
  }
  return out;
}

BsWitness block_sensitivity(const TruthTable& f) {
  const int n = f.n();
  require_capability(n <= kMaxBsVars, "block_sensitivity", n, kMaxBsVars);
  BsWitness best;
  std::vector<std::int8_t> memo;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const auto blocks = minimal_sensitive_blocks(f, x);
    std::uint32_t support = 0;
    for (auto b : blocks) support |= b;
    if (std::popcount(support) <= best.value) continue;

    std::vector<std::vector<std::uint32_t>> by_low(static_cast<std::size_t>(std::max(n, 1)));
    for (auto b : blocks) by_low[static_cast<std::size_t>(std::countr_zero(b))].push_back(b);
    memo.assign(f.size(), -1);
    const int value = max_packing(by_low, support, memo);
    if (value > best.value) {
      best.value = value;
      best.input = x;
      best.blocks = packing_blocks(by_low, support, memo);
      if (best.value == n) break;
    }
  }
  return best;
}

int Certificate::size() const { return std::popcount(vars); }

bool certificate_less(const Certificate& a, const Certificate& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.vars != b.vars) {
    // Sorted index lists compared lexicographically: the first differing
    // position is the lowest bit of the symmetric difference, and the list
    // holding that index is the smaller one.
    const std::uint32_t diff = a.vars ^ b.vars;
    const std::uint32_t low = diff & (~diff + 1);
    return (a.vars & low) != 0;
  }
  if (a.values != b.values) {
    const std::uint32_t diff = a.values ^ b.values;
    const std::uint32_t low = diff & (~diff + 1);
    return (a.values & low) == 0;
  }
  return false;
}

bool is_certificate(const TruthTable& f, const Certificate& c) {
  const std::uint32_t free = ~c.vars & (f.size() - 1);
  const bool v = f[c.values];
  for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
    if (f[c.values | sub] != v) return false;
    if (sub == 0) break;
  }
  return true;
}

CertReport certificate_complexity(const TruthTable& f) {
  const int n = f.n();
  require_capability(n <= kMaxCertVars, "certificate_complexity", n, kMaxCertVars);
  const std::uint32_t size = f.size();
  const std::uint32_t all = size - 1;
  const auto cube = subcube_values(f);

  CertReport report;
  std::vector<int> best(size, n + 1);
  report.per_input.assign(size, Certificate{});
  // Fewer free variables means a larger certificate; walk free sets from the
  // largest so the first hit per input is a smallest certificate.
  std::vector<std::uint32_t> frees(size);
  for (std::uint32_t i = 0; i < size; ++i) frees[i] = i;
  std::stable_sort(frees.begin(), frees.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  for (const auto free : frees) {
    const std::uint8_t* row = &cube[std::size_t{free} << n];
    const int cert_size = n - std::popcount(free);
    for (std::uint32_t x = 0; x < size; ++x) {
      if (row[x] != kMixed && cert_size < best[x]) {
        best[x] = cert_size;
        report.per_input[x] = {all & ~free, x & ~free};
      }
    }
  }
  for (std::uint32_t x = 0; x < size; ++x) {
    report.c = std::max(report.c, best[x]);
    int& side = f[x] ? report.c1 : report.c0;
    side = std::max(side, best[x]);
  }
  return report;
}

std::vector<Certificate> minimal_one_certificates(const TruthTable& f) {
  const int n = f.n();
  require_capability(n <= kMaxCertVars, "minimal_one_certificates", n, kMaxCertVars);
  const std::uint32_t size = f.size();
  const std::uint32_t all = size - 1;
  const auto cube = subcube_values(f);
  auto value = [&](std::uint32_t free, std::uint32_t x) { return cube[(std::size_t{free} << n) | x]; };

  std::vector<Certificate> out;
  for (std::uint32_t vars = 0; vars < size; ++vars) {
    const std::uint32_t free = all & ~vars;
    for (std::uint32_t vals = vars;; vals = (vals - 1) & vars) {
      if (value(free, vals) == 1) {
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i) {
          const std::uint32_t bit = 1u << i;
          if (vars & bit) minimal = value(free | bit, vals & ~bit) != 1;
        }
        if (minimal) out.push_back({vars, vals});
      }
      if (vals == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), certificate_less);
  return out;
}

int decision_tree_depth(const TruthTable& f) {
  const int n = f.n();
  require_capability(n <= kMaxTreeVars, "decision_tree_depth", n, kMaxTreeVars);
  // Ternary digit i of a state: 0 or 1 when x_i is fixed, 2 when free.
  // Replacing a 2 by 0 or 1 lowers the index, so one increasing sweep
  // sees every child before its parent.
  std::vector<std::uint32_t> pow3(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) pow3[static_cast<std::size_t>(i)] = pow3[static_cast<std::size_t>(i) - 1] * 3;
  const std::uint32_t states = pow3[static_cast<std::size_t>(n)];
  std::vector<std::uint8_t> val(states);
  std::vector<std::uint8_t> depth(states);
  std::vector<int> free_vars;
  free_vars.reserve(static_cast<std::size_t>(n));
  for (std::uint32_t s = 0; s < states; ++s) {
    free_vars.clear();
    std::uint32_t x = 0;
    std::uint32_t rem = s;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t digit = rem % 3;
      rem /= 3;
      if (digit == 2) {
        free_vars.push_back(i);
      } else if (digit == 1) {
        x |= 1u << i;
      }
    }
    if (free_vars.empty()) {
      val[s] = f[x] ? 1 : 0;
      depth[s] = 0;
      continue;
    }
    const auto p0 = pow3[static_cast<std::size_t>(free_vars.front())];
    const std::uint8_t a = val[s - 2 * p0];
    const std::uint8_t b = val[s - p0];
    val[s] = (a == b) ? a : kMixed;
    if (val[s] != kMixed) {
      depth[s] = 0;
      continue;
    }
    int best = n;
    for (int i : free_vars) {
      const auto p = pow3[static_cast<std::size_t>(i)];
      best = std::min(best, 1 + std::max<int>(depth[s - 2 * p], depth[s - p]));
    }
    depth[s] = static_cast<std::uint8_t>(best);
  }
  return depth[states - 1];
}

AlgorithmA::AlgorithmA(TruthTable f) : f_(std::move(f)) {
  require_capability(f_.n() <= kMaxAlgorithmAVars, "algorithm_A", f_.n(), kMaxAlgorithmAVars);
  certificates_ = minimal_one_certificates(f_);
  // A constant-1 function has bs = 0 but still needs one stage to accept
  // its empty certificate.
  stage_limit_ = std::max(block_sensitivity(f_).value, 1);
}

AlgorithmA::Result AlgorithmA::run(std::uint32_t x) const {
  if (x >= f_.size()) throw ParameterError("algorithm_A: input out of range");
  Result result;
  std::uint32_t known = 0;
  for (int stage = 0; stage < stage_limit_; ++stage) {
    const auto it = std::find_if(certificates_.begin(), certificates_.end(), [&](const Certificate& c) {
      return ((c.values ^ x) & c.vars & known) == 0;
    });
    if (it == certificates_.end()) {
      result.value = false;
      result.exit = Exit::NoCertificate;
      return result;
    }
    Stage st;
    st.certificate = *it;
    const std::uint32_t fresh = it->vars & ~known;
    for (int i = 0; i < f_.n(); ++i) {
      if ((fresh >> i) & 1u) st.queried.push_back(i);
    }
    known |= fresh;
    result.queries += std::popcount(fresh);
    st.matched = it->agrees_with(x);
    result.stages.push_back(st);
    if (st.matched) {
      result.value = true;
      result.exit = Exit::CertificateMatched;
      return result;
    }
  }
  // The numerically smallest input consistent with everything queried.
  result.fallback_input = x & known;
  result.value = f_[result.fallback_input];
  result.exit = Exit::Fallback;
  return result;
}

AlgorithmA::Result algorithm_A(const TruthTable& f, std::uint32_t x) { return AlgorithmA(f).run(x); }

bool BoundReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

double threshold_bound(int n, int m) {
  if (m < 1 || m > n) throw ParameterError("threshold_bound needs 1 <= m <= n");
  return std::sqrt(static_cast<double>(m) * (n - m + 1));
}

BoundReport bound_report_with_adeg(const TruthTable& f, std::optional<int> adeg) {
  BoundReport r;
  r.n = f.n();
  r.deg = interpolate(f).degree();
  r.adeg = adeg;
  const auto bs = block_sensitivity(f);
  const auto cert = certificate_complexity(f);
  r.bs = bs.value;
  r.c = cert.c;
  r.c0 = cert.c0;
  r.c1 = cert.c1;
  r.d = decision_tree_depth(f);
  r.monotone = is_monotone(f);

  const long bs2 = static_cast<long>(r.bs) * r.bs;
  auto add = [&](std::string name, bool holds) { r.checks.push_back({std::move(name), holds}); };
  add("C1<=C", r.c1 <= r.c);
  add("C<=bs^2", r.c <= bs2);
  add("D<=C1*bs", r.d <= r.c1 * r.bs);
  add("D<=bs^3", r.d <= bs2 * r.bs);
  add("deg<=D", r.deg <= r.d);
  add("D<=n", r.d <= r.n);
  add("D<=2*deg^4", r.d <= 2L * r.deg * r.deg * r.deg * r.deg);
  if (adeg) {
    const long a = *adeg;
    add("adeg<=deg", a <= r.deg);
    add("bs<=6*adeg^2", r.bs <= 6 * a * a);
    add("adeg<=D", a <= r.d);
    add("D<=216*adeg^6", r.d <= 216 * a * a * a * a * a * a);
  }
  if (r.monotone) add("bs=C", r.bs == r.c);

  r.q_exact_lower = std::max(r.deg / 2.0, std::sqrt(r.bs / 8.0));
  r.q_bounded_lower = std::sqrt(r.bs / 16.0);
  if (adeg) r.q_bounded_lower = std::max(r.q_bounded_lower, *adeg / 2.0);
  r.q_exact_from_d = std::pow(r.d / 32.0, 0.25);
  r.q_bounded_from_d = r.monotone ? std::pow(r.d / 256.0, 0.25) : std::pow(r.d / 4096.0, 1.0 / 6.0);

  if (auto profile = symmetric_profile(f); profile && !profile->is_constant()) {
    r.gamma = gamma(*profile);
    r.symmetric_bounded_bound = std::sqrt(static_cast<double>(r.n) * (r.n - *r.gamma));
  }
  return r;
}

BoundReport bound_report(const TruthTable& f, AdegMode mode) {
  std::optional<int> adeg;
  const auto profile = symmetric_profile(f);
  switch (mode) {
    case AdegMode::General:
      adeg = approx_degree(f);
      break;
    case AdegMode::Symmetric:
      if (!profile) throw DomainError("symmetric adeg requested for a non-symmetric function");
      adeg = symmetric_approx_degree(*profile);
      break;
    case AdegMode::Auto:
      if (profile && profile->n <= kMaxSymmetricLpVars) {
        adeg = symmetric_approx_degree(*profile);
      } else if (f.n() <= kMaxLpVars) {
        adeg = approx_degree(f);
      }
      break;
    case AdegMode::Omit:
      break;
  }
  return bound_report_with_adeg(f, adeg);
}

}  // namespace qquery
