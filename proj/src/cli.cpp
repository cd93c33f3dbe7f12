#include "qquery/cli.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <ctime>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qquery/algorithms.hpp"
#include "qquery/errors.hpp"
#include "qquery/measures.hpp"
#include "qquery/polynomial.hpp"
#include "qquery/qsim.hpp"

namespace qquery {

namespace {

constexpr int kMaxSampledVars = kMaxCertVars;
constexpr int kMaxTableVars = 12;
constexpr int kMaxWitnessVars = 4;

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string source_name(FunctionSource s) {
  switch (s) {
    case FunctionSource::Exhaustive: return "exhaustive";
    case FunctionSource::Families: return "families";
    case FunctionSource::Sampled: return "sampled";
  }
  return "?";
}

std::vector<std::pair<std::string, TruthTable>> family_tables(int n) {
  std::vector<std::pair<std::string, TruthTable>> out;
  for (auto fam : {Family::Or, Family::And, Family::Parity, Family::Majority}) {
    out.emplace_back(family_name(fam), from_family(fam, n));
  }
  for (int m = 1; m <= n; ++m) {
    out.emplace_back("threshold_" + std::to_string(m), from_family(Family::Threshold, n, m));
  }
  return out;
}

TruthTable random_table(int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  for (std::size_t x = 0; x < bits.size(); x += 64) {
    const std::uint64_t word = rng();
    for (std::size_t k = 0; k < 64 && x + k < bits.size(); ++k) bits[x + k] = (word >> k) & 1;
  }
  return TruthTable(n, std::move(bits));
}

/// The report body plus what goes into the stderr summary.
struct Outcome {
  std::string body;
  bool pass = true;
  Json summary = Json::object();
};

struct FunctionSpec {
  std::string family;
  int n = -1;
  std::optional<int> m;
  std::string table;
  std::string bits;
};

void add_function_options(CLI::App* sub, FunctionSpec& spec) {
  sub->add_option("--family", spec.family, "or, and, parity (xor), majority, threshold");
  sub->add_option("--n", spec.n, "number of variables");
  sub->add_option("--m", spec.m, "threshold parameter");
  sub->add_option("--table", spec.table, "truth-table JSON file");
  sub->add_option("--bits", spec.bits, "truth table as hex (with --n)");
}

std::pair<std::string, TruthTable> load_function(const FunctionSpec& spec) {
  const int given = (!spec.family.empty()) + (!spec.table.empty()) + (!spec.bits.empty());
  if (given != 1) throw ParameterError("give exactly one of --family, --table, --bits");
  if (!spec.table.empty()) {
    const auto f = truth_table_from_json(read_json_file(spec.table));
    return {spec.table, f};
  }
  if (spec.n < 0) throw ParameterError("--n is required with --family and --bits");
  if (!spec.bits.empty()) return {"bits:" + spec.bits, truth_table_from_hex(spec.n, spec.bits)};
  const auto family = parse_family(spec.family);
  if (!family) throw ParameterError("unknown family \"" + spec.family + "\"");
  std::string label = family_name(*family) + "_" + std::to_string(spec.n);
  if (spec.m) label += "_m" + std::to_string(*spec.m);
  return {label, from_family(*family, spec.n, spec.m)};
}

std::string json_body(Json j, const GlobalOptions& g) {
  if (g.timestamp) j["generated"] = utc_timestamp();
  return j.dump(2) + "\n";
}

std::string md_footer(const GlobalOptions& g) { return g.timestamp ? "\nGenerated " + utc_timestamp() + "\n" : ""; }

// ---------------------------------------------------------------- measures

AdegMode parse_adeg_mode(const std::string& s) {
  if (s == "auto") return AdegMode::Auto;
  if (s == "general") return AdegMode::General;
  if (s == "symmetric") return AdegMode::Symmetric;
  if (s == "omit") return AdegMode::Omit;
  throw ParameterError("--adeg must be auto, general, symmetric or omit");
}

Outcome cmd_measures(const FunctionSpec& spec, const std::string& adeg_mode, bool polys, const GlobalOptions& g) {
  const auto [label, f] = load_function(spec);
  const auto report = bound_report(f, parse_adeg_mode(adeg_mode));
  const auto profile = symmetric_profile(f);
  std::optional<double> threshold;
  if (parse_family(spec.family) == Family::Threshold && spec.m) threshold = threshold_bound(f.n(), *spec.m);

  Outcome o;
  o.pass = report.all_hold();
  o.summary = {{"function", label}, {"checks", report.checks.size()}};
  const auto format = g.format.value_or(OutputFormat::Markdown);
  if (format == OutputFormat::Csv) throw ParameterError("measures supports --format md or json");
  if (format == OutputFormat::Json) {
    Json j{{"function", label}, {"table", truth_table_to_json(f)}, {"report", bound_report_to_json(report)}};
    if (profile) {
      j["profile"] = profile->values;
      j["gamma_band"] = profile->is_constant() ? Json(nullptr) : Json(gamma_band(*profile));
    }
    if (threshold) j["threshold_bound"] = {{"value", *threshold}, {"kind", "bound (constant-free)"}};
    if (polys) {
      const auto p = interpolate(f);
      j["polynomial"] = poly_to_json(p);
      if (profile) j["symmetrized"] = univariate_to_json(symmetrize(p));
    }
    o.body = json_body(j, g);
    return o;
  }
  std::ostringstream os;
  os << "# Measures of " << label << "\n\n" << bound_report_markdown_header() << "\n"
     << bound_report_markdown_row(label, report) << "\n\n";
  if (profile) {
    os << "- profile f_0..f_n: ";
    for (auto v : profile->values) os << int(v);
    os << "\n- Gamma: " << (report.gamma ? std::to_string(*report.gamma) : "undefined (constant)") << "\n";
  }
  if (report.symmetric_bounded_bound) {
    os << "- sqrt(n (n - Gamma)), bound (constant-free): " << format_double(*report.symmetric_bounded_bound) << "\n";
  }
  if (threshold) os << "- sqrt(m (n - m + 1)), bound (constant-free): " << format_double(*threshold) << "\n";
  os << "- D from Q_E, reported only: " << format_double(report.q_exact_from_d)
     << "; D from Q_2, reported only: " << format_double(report.q_bounded_from_d) << "\n";
  for (const auto& c : report.checks) os << "- " << c.name << ": " << (c.holds ? "holds" : "VIOLATED") << "\n";
  if (polys) {
    const auto p = interpolate(f);
    os << "\nrepresenting polynomial: " << poly_to_json(p).dump() << "\n";
    if (profile) os << "symmetrized: " << symmetrize(p).to_string() << "\n";
  }
  o.body = os.str() + md_footer(g);
  return o;
}

// --------------------------------------------------------------- enumerate

Outcome cmd_enumerate(const SuiteConfig& config, const GlobalOptions& g) {
  const auto result = run_enumeration(config);
  Outcome o;
  o.pass = result.total_violations() == 0;
  Json violations = Json::object();
  for (const auto& [name, count] : result.violations) violations[name] = count;
  Json head{{"n", config.n},
            {"source", source_name(config.source)},
            {"functions", result.functions},
            {"adeg", config.include_adeg},
            {"violations", violations},
            {"total_violations", result.total_violations()}};
  if (config.source == FunctionSource::Sampled) head["seed"] = config.seed;
  o.summary = head;
  switch (g.format.value_or(OutputFormat::Csv)) {
    case OutputFormat::Csv: {
      std::ostringstream os;
      const auto cols = enumeration_csv_columns();
      for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
      os << "\n";
      for (const auto& row : result.rows) os << row << "\n";
      o.body = os.str();
      break;
    }
    case OutputFormat::Json:
      o.body = json_body(head, g);
      break;
    case OutputFormat::Markdown: {
      std::ostringstream os;
      os << "# Enumeration, n = " << config.n << ", " << source_name(config.source) << "\n\n"
         << "- functions: " << result.functions << "\n";
      if (config.source == FunctionSource::Sampled) os << "- seed: " << config.seed << "\n";
      os << "\n| inequality | violations |\n|---|---|\n";
      for (const auto& [name, count] : result.violations) os << "| " << name << " | " << count << " |\n";
      o.body = os.str() + md_footer(g);
      break;
    }
  }
  return o;
}

// ------------------------------------------------------------------ table1

Outcome cmd_table1(int n, const GlobalOptions& g) {
  const auto rows = table1_rows(n);
  Outcome o;
  for (const auto& r : rows) o.pass = o.pass && r.consistent() && (!r.upper || r.verified);
  o.summary = {{"n", n}, {"rows", rows.size()}};
  const auto format = g.format.value_or(OutputFormat::Markdown);
  if (format == OutputFormat::Csv) throw ParameterError("table1 supports --format md or json");
  if (format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"function", r.function},
                     {"setting", setting_name(r.setting)},
                     {"n", r.n},
                     {"lower", r.lower},
                     {"lower_basis", r.lower_basis},
                     {"upper", r.upper ? Json(*r.upper) : Json("reported only")},
                     {"upper_basis", r.upper_basis},
                     {"verified", r.verified},
                     {"tight", r.tight()},
                     {"bound_constant_free", r.reported_bound ? Json(*r.reported_bound) : Json(nullptr)}});
    }
    o.body = json_body(Json{{"n", n}, {"rows", arr}}, g);
    return o;
  }
  std::ostringstream os;
  os << "# Quantum query complexities, n = " << n << "\n\n"
     << "| function | setting | lower | lower basis | upper | upper basis | verified | tight | bound (constant-free) "
        "|\n|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.function << " | " << setting_name(r.setting) << " | " << format_double(r.lower) << " | "
       << r.lower_basis << " | " << (r.upper ? std::to_string(*r.upper) : "reported only") << " | " << r.upper_basis
       << " | " << (r.upper ? (r.verified ? "yes" : "NO") : "-") << " | " << (r.tight() ? "yes" : "no") << " | "
       << (r.reported_bound ? format_double(*r.reported_bound) : "-") << " |\n";
  }
  o.body = os.str() + md_footer(g);
  return o;
}

// ---------------------------------------------------------------- simulate

Semantics parse_semantics(const std::string& s) {
  if (s == "exact") return Semantics::Exact;
  if (s == "zero") return Semantics::ZeroError;
  if (s == "bounded") return Semantics::Bounded;
  throw ParameterError("--semantics must be exact, zero or bounded");
}

Outcome cmd_simulate(const std::string& circuit_path, const FunctionSpec& spec, Semantics semantics, bool symbolic,
                     const GlobalOptions& g) {
  const auto c = circuit_from_json(read_json_file(circuit_path));
  const auto [label, f] = load_function(spec);
  CheckResult r;
  switch (semantics) {
    case Semantics::Exact: r = check_exact(c, f); break;
    case Semantics::ZeroError: r = check_zero_error(c, f); break;
    case Semantics::Bounded: r = check_bounded_error(c, f); break;
  }
  Json j = check_result_to_json(r);
  j["queries"] = c.query_count();
  Outcome o;
  o.pass = r.pass;
  if (symbolic) {
    const auto state = symbolic_run(c);
    const auto p = acceptance_polynomial(state, output_is(c, true));
    const int t = state.queries;
    const bool verdict = state.max_degree() <= t && p.degree() <= 2 * t;
    Json s{{"max_amplitude_degree", state.max_degree()},
           {"amplitude_bound", t},
           {"acceptance_degree", p.degree()},
           {"bound", 2 * t},
           {"verdict", verdict ? "pass" : "fail"}};
    if (auto rational = to_rational(p)) {
      s["acceptance_polynomial"] = poly_to_json(*rational);
    } else {
      s["acceptance_polynomial"] = real_poly_to_json(p);
    }
    j["symbolic"] = s;
    o.pass = o.pass && verdict;
  }
  o.summary = {{"function", label}, {"semantics", semantics_name(semantics)}, {"check_pass", r.pass}};
  const auto format = g.format.value_or(OutputFormat::Json);
  if (format == OutputFormat::Csv) throw ParameterError("simulate supports --format md or json");
  if (format == OutputFormat::Json) {
    o.body = json_body(j, g);
    return o;
  }
  std::ostringstream os;
  os << "# Simulation of " << circuit_path << " against " << label << "\n\n"
     << "- semantics: " << semantics_name(semantics) << "\n- pass: " << (r.pass ? "yes" : "no")
     << "\n- worst input: " << format_bits(r.worst_x, r.n) << "\n- value: " << format_double(r.value)
     << "\n- queries: " << c.query_count() << "\n";
  if (symbolic) {
    const auto& s = j["symbolic"];
    os << "- amplitude degree: " << s["max_amplitude_degree"].get<int>() << " (bound " << s["amplitude_bound"].get<int>()
       << ")\n- acceptance degree: " << s["acceptance_degree"].get<int>() << " (bound 2T = " << s["bound"].get<int>()
       << ")\n- verdict: " << s["verdict"].get<std::string>() << "\n";
  }
  o.body = os.str() + md_footer(g);
  return o;
}

// ------------------------------------------------------------ circuit-dump

struct DumpOptions {
  std::string kind;
  int n = 2;
  int i = 0;
  int j = 1;
  int iterations = 1;
  std::optional<int> precision;
};

Outcome cmd_circuit_dump(const DumpOptions& d, const GlobalOptions& g) {
  const auto format = g.format.value_or(OutputFormat::Json);
  std::optional<CountingCircuit> counting;
  std::optional<Circuit> circuit;
  if (d.kind == "xor") {
    circuit = xor_circuit(d.n, d.i, d.j);
  } else if (d.kind == "parity") {
    circuit = parity_circuit(d.n);
  } else if (d.kind == "zero-error-or") {
    circuit = zero_error_or_circuit(d.n);
  } else if (d.kind == "grover") {
    circuit = grover_or_circuit(d.n, shipped_grover_schedule(d.n));
  } else if (d.kind == "grover-run") {
    circuit = grover_run_circuit(d.n, d.iterations);
  } else if (d.kind == "counting") {
    counting = counting_circuit(d.n, d.precision);
    circuit = counting->circuit;
  } else {
    throw ParameterError("--kind must be xor, parity, zero-error-or, grover, grover-run or counting");
  }
  Outcome o;
  o.summary = {{"kind", d.kind}, {"n", d.n}, {"m", circuit->m()}, {"queries", circuit->query_count()}};
  switch (format) {
    case OutputFormat::Json:
      o.body = circuit_to_json(*circuit).dump() + "\n";
      break;
    case OutputFormat::Csv:
      if (!counting) throw ParameterError("CSV output is the counting decoder table; use --kind counting");
      o.body = decoder_csv(counting->decoder);
      break;
    case OutputFormat::Markdown: {
      std::ostringstream os;
      os << "# Circuit " << d.kind << ", n = " << d.n << "\n\n- qubits: " << circuit->m()
         << "\n- queries: " << circuit->query_count() << "\n- ops: " << circuit->ops().size()
         << "\n- custom gates: " << (circuit->uses_custom_gates() ? "yes" : "no") << "\n";
      if (counting) os << "- precision qubits: " << counting->precision << "\n";
      o.body = os.str() + md_footer(g);
      break;
    }
  }
  return o;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "md") return OutputFormat::Markdown;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw ParameterError("--format must be md, json or csv");
}

FunctionSource parse_source(const std::string& s) {
  if (s == "exhaustive") return FunctionSource::Exhaustive;
  if (s == "families") return FunctionSource::Families;
  if (s == "sampled") return FunctionSource::Sampled;
  throw ParameterError("--source must be exhaustive, families or sampled");
}

}  // namespace

void SuiteConfig::validate() const {
  if (n < 1) throw ParameterError("enumerate needs n >= 1");
  switch (source) {
    case FunctionSource::Exhaustive:
      if (n > kMaxLpVars) throw ParameterError("exhaustive source supports n <= 4");
      break;
    case FunctionSource::Families:
      if (n > kMaxCertVars) throw ParameterError("families source supports n <= 10");
      break;
    case FunctionSource::Sampled:
      if (n > kMaxSampledVars) throw ParameterError("sampled source supports n <= 10");
      if (include_adeg && n > kMaxLpVars) throw ParameterError("adeg on sampled functions needs n <= 4");
      break;
  }
}

std::size_t EnumerationResult::total_violations() const {
  std::size_t total = 0;
  for (const auto& [name, count] : violations) total += count;
  return total;
}

EnumerationResult run_enumeration(const SuiteConfig& config) {
  config.validate();
  std::vector<TruthTable> tables;
  std::vector<std::uint64_t> indices;
  switch (config.source) {
    case FunctionSource::Exhaustive: {
      const std::uint64_t count = std::uint64_t{1} << (1u << config.n);
      for (std::uint64_t w = 0; w < count; ++w) {
        tables.push_back(from_word(config.n, w));
        indices.push_back(w);
      }
      break;
    }
    case FunctionSource::Families:
      for (auto& [name, f] : family_tables(config.n)) {
        indices.push_back(tables.size());
        tables.push_back(std::move(f));
      }
      break;
    case FunctionSource::Sampled: {
      std::mt19937_64 rng(config.seed);
      for (std::size_t k = 0; k < config.samples; ++k) {
        tables.push_back(random_table(config.n, rng));
        indices.push_back(k);
      }
      break;
    }
  }

  // adeg is invariant under permuting and negating inputs and negating the
  // output, so general LPs are solved once per class.
  std::vector<std::optional<int>> adeg(tables.size());
  if (config.include_adeg) {
    if (config.source == FunctionSource::Families) {
      parallel_for(tables.size(), config.workers, [&](std::size_t k) {
        adeg[k] = symmetric_approx_degree(*symmetric_profile(tables[k]));
      });
    } else {
      const auto classes = npn_class_ids(config.n);
      std::vector<std::uint32_t> reps;
      for (const auto& f : tables) reps.push_back(classes[to_word(f)]);
      std::vector<std::uint32_t> distinct = reps;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      std::vector<int> class_adeg(distinct.size());
      parallel_for(distinct.size(), config.workers, [&](std::size_t k) {
        class_adeg[k] = approx_degree(from_word(config.n, distinct[k]));
      });
      for (std::size_t k = 0; k < tables.size(); ++k) {
        const auto it = std::lower_bound(distinct.begin(), distinct.end(), reps[k]);
        adeg[k] = class_adeg[static_cast<std::size_t>(it - distinct.begin())];
      }
    }
  }

  std::vector<BoundReport> reports(tables.size());
  parallel_for(tables.size(), config.workers,
               [&](std::size_t k) { reports[k] = bound_report_with_adeg(tables[k], adeg[k]); });

  EnumerationResult result;
  result.functions = tables.size();
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> order;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    result.rows.push_back(enumeration_csv_row(indices[k], tables[k], reports[k]));
    for (const auto& c : reports[k].checks) {
      if (!counts.contains(c.name)) order.push_back(c.name);
      counts[c.name] += c.holds ? 0 : 1;
    }
  }
  const auto columns = enumeration_csv_columns();
  std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    return std::find(columns.begin(), columns.end(), a) < std::find(columns.begin(), columns.end(), b);
  });
  for (const auto& name : order) result.violations.emplace_back(name, counts[name]);
  return result;
}

std::string setting_name(Setting s) {
  switch (s) {
    case Setting::Exact: return "exact";
    case Setting::ZeroError: return "zero-error";
    case Setting::Bounded: return "bounded-error";
  }
  return "?";
}

std::vector<Table1Row> table1_rows(int n) {
  if (n < 2 || n > kMaxTableVars) throw ParameterError("table1 supports 2 <= n <= 12");
  std::vector<Table1Row> rows;

  const auto parity = from_family(Family::Parity, n);
  const int parity_deg = interpolate(parity).degree();
  const int parity_adeg = symmetric_approx_degree(*symmetric_profile(parity));
  const auto pc = parity_circuit(n);
  const int pq = pc.query_count();
  rows.push_back({"PARITY", Setting::Exact, n, parity_deg / 2.0, "deg/2", pq, "parity circuit, exact check",
                  check_exact(pc, parity).pass, std::nullopt});
  rows.push_back({"PARITY", Setting::ZeroError, n, parity_adeg / 2.0, "adeg/2", pq,
                  "parity circuit with conclusive flag, zero-error check",
                  check_zero_error(with_conclusive_flag(pc), parity).pass, std::nullopt});
  rows.push_back({"PARITY", Setting::Bounded, n, parity_adeg / 2.0, "adeg/2", pq,
                  "parity circuit, bounded-error check", check_bounded_error(pc, parity).pass, std::nullopt});

  const auto orf = from_family(Family::Or, n);
  const auto or_profile = *symmetric_profile(orf);
  const int or_deg = interpolate(orf).degree();
  const int or_adeg = symmetric_approx_degree(or_profile);
  for (auto setting : {Setting::Exact, Setting::ZeroError}) {
    Table1Row row{"OR", setting, n, or_deg / 2.0, "deg/2", std::nullopt, "classical n, reported only", false,
                  std::nullopt};
    if (n <= kMaxWitnessVars) {
      const auto zc = zero_error_or_circuit(n);
      const auto witness = zero_error_witness_poly(zc, orf);
      if (witness.represents_or) {
        row.lower = witness.degree;
        row.lower_basis = "zero-error witness polynomial degree";
      }
      row.upper = zc.query_count();
      row.upper_basis = "reference OR circuit";
      row.verified = setting == Setting::Exact ? check_exact(zc, orf).pass : check_zero_error(zc, orf).pass;
    }
    rows.push_back(row);
  }
  {
    Table1Row row{"OR", Setting::Bounded, n, or_adeg / 2.0, "adeg/2", std::nullopt, "reported only", false,
                  std::sqrt(static_cast<double>(n) * (n - gamma(or_profile)))};
    if (n == 4 || n == 8 || n == 16) {
      const GroverOr grover(n);
      double worst = 1.0;
      for (std::uint32_t x = 0; x < (1u << n); ++x) worst = std::min(worst, grover.success_probability(x));
      row.upper = grover.queries();
      row.upper_basis = "Grover driver, min success " + format_double(worst);
      row.verified = worst >= 2.0 / 3.0 - kSimTolerance;
    }
    rows.push_back(row);
  }

  const auto maj = from_family(Family::Majority, n);
  const auto maj_profile = *symmetric_profile(maj);
  const double maj_bound = std::sqrt(static_cast<double>(n) * (n - gamma(maj_profile)));
  rows.push_back({"MAJORITY", Setting::Exact, n, interpolate(maj).degree() / 2.0, "deg/2", std::nullopt,
                  "classical n, reported only", false, std::nullopt});
  {
    Table1Row row{"MAJORITY", Setting::Bounded, n, symmetric_approx_degree(maj_profile) / 2.0, "adeg/2",
                  std::nullopt, "reported only", false, maj_bound};
    if (n == 4 || n == 8) {
      const SymmetricEvaluator eval(maj_profile);
      std::mt19937_64 rng(0);
      double worst = 1.0;
      int queries = 0;
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        const auto r = eval.evaluate(x, rng);
        worst = std::min(worst, r.success);
        queries = r.queries;
      }
      row.upper = queries;
      row.upper_basis = "counting strategy, min success " + format_double(worst);
      row.verified = worst >= 2.0 / 3.0 - kSimTolerance;
    }
    rows.push_back(row);
  }
  return rows;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum query complexity and Boolean function measures", "qquery"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::string format;
  bool no_timestamp = false;
  g.workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--format", format, "md, json or csv")->check(CLI::IsMember({"md", "json", "csv"}));
  app.add_option("--workers", g.workers, "worker threads for enumerate")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for sampled functions and drivers");
  app.add_flag("--no-timestamp", no_timestamp, "omit the generated-at field");
  app.add_option("--out", g.out_path, "write the report here instead of stdout");

  FunctionSpec fspec;
  std::string adeg_mode = "auto";
  bool polys = false;
  auto* measures = app.add_subcommand("measures", "all measures and inequality checks for one function");
  add_function_options(measures, fspec);
  measures->add_option("--adeg", adeg_mode, "auto, general, symmetric or omit");
  measures->add_flag("--polys", polys, "include the representing and symmetrized polynomials");

  SuiteConfig suite;
  std::string source = "exhaustive";
  auto* enumerate = app.add_subcommand("enumerate", "inequality suite over many functions");
  enumerate->add_option("--n", suite.n, "number of variables")->required();
  enumerate->add_option("--source", source, "exhaustive, families or sampled");
  enumerate->add_option("--samples", suite.samples, "functions drawn by the sampled source");
  enumerate->add_flag("--adeg", suite.include_adeg, "include approximate degree (LP)");

  int table_n = 4;
  auto* table1 = app.add_subcommand("table1", "lower and verified upper bounds for PARITY, OR, MAJORITY");
  table1->add_option("--n", table_n, "number of variables");

  std::string circuit_path;
  std::string semantics = "exact";
  bool symbolic = false;
  auto* simulate = app.add_subcommand("simulate", "check a circuit file against a function");
  simulate->add_option("--circuit", circuit_path, "circuit JSON file")->required();
  add_function_options(simulate, fspec);
  simulate->add_option("--semantics", semantics, "exact, zero or bounded");
  simulate->add_flag_callback("--exact", [&] { semantics = "exact"; }, "exact semantics");
  simulate->add_flag_callback("--zero", [&] { semantics = "zero"; }, "zero-error semantics");
  simulate->add_flag_callback("--bounded", [&] { semantics = "bounded"; }, "bounded-error semantics");
  simulate->add_flag("--symbolic", symbolic, "exact symbolic amplitudes and acceptance polynomial");

  DumpOptions dump;
  auto* circuit_dump = app.add_subcommand("circuit-dump", "emit a constructed circuit");
  circuit_dump->add_option("--kind", dump.kind, "xor, parity, zero-error-or, grover, grover-run, counting")
      ->required();
  circuit_dump->add_option("--n", dump.n, "number of variables");
  circuit_dump->add_option("--i", dump.i, "first index for xor");
  circuit_dump->add_option("--j", dump.j, "second index for xor");
  circuit_dump->add_option("--iterations", dump.iterations, "Grover iterations for grover-run");
  circuit_dump->add_option("--precision", dump.precision, "ancillas for counting");

  std::string command = "qquery";
  auto summarize = [&](int code, const Outcome* o, const std::string& error) {
    Json s{{"command", command}, {"pass", code == 0}, {"exit", code}};
    if (o) {
      for (auto it = o->summary.begin(); it != o->summary.end(); ++it) s[it.key()] = it.value();
    }
    if (!error.empty()) s["error"] = error;
    err << s.dump() << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage text for --help goes to `out`; parse errors are reported only
    // through the summary so stderr stays a single JSON line.
    std::ostringstream discard;
    const int code = app.exit(e, out, discard);
    return summarize(code == 0 ? 0 : 2, nullptr, code == 0 ? "" : e.what());
  }

  try {
    if (!format.empty()) g.format = parse_format(format);
    g.timestamp = !no_timestamp;
    Outcome o;
    if (measures->parsed()) {
      command = "measures";
      o = cmd_measures(fspec, adeg_mode, polys, g);
    } else if (enumerate->parsed()) {
      command = "enumerate";
      suite.source = parse_source(source);
      suite.seed = g.seed;
      suite.workers = g.workers;
      o = cmd_enumerate(suite, g);
    } else if (table1->parsed()) {
      command = "table1";
      o = cmd_table1(table_n, g);
    } else if (simulate->parsed()) {
      command = "simulate";
      o = cmd_simulate(circuit_path, fspec, parse_semantics(semantics), symbolic, g);
    } else {
      command = "circuit-dump";
      o = cmd_circuit_dump(dump, g);
    }
    if (g.out_path.empty()) {
      out << o.body;
    } else {
      std::ofstream file(g.out_path);
      if (!file) throw ParameterError("cannot write " + g.out_path);
      file << o.body;
    }
    return summarize(o.pass ? 0 : 1, &o, "");
  } catch (const std::exception& e) {
    return summarize(2, nullptr, e.what());
  }
}

}  // namespace qquery
