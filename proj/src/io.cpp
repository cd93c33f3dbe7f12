#include "qquery/io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qquery/errors.hpp"

namespace qquery {

namespace {

constexpr std::array<const char*, 12> kCheckColumns = {
    "C1<=C",  "C<=bs^2",   "D<=C1*bs",     "D<=bs^3", "deg<=D",        "D<=n",
    "D<=2*deg^4", "adeg<=deg", "bs<=6*adeg^2", "adeg<=D", "D<=216*adeg^6", "bs=C"};

int hex_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

template <class T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(where + ": bad \"" + key + "\": " + e.what());
  }
}

Rational parse_rational(const std::string& num, const std::string& den, const std::string& where) {
  try {
    BigInt a(num, 10);
    BigInt b(den, 10);
    if (b == 0) throw ValidationError(where + ": zero denominator");
    Rational r(a, b);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ValidationError(where + ": malformed integer in \"" + num + "/" + den + "\"");
  }
}

std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::string truth_table_hex(const TruthTable& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = std::max<std::size_t>(1, f.size() / 4);
  std::string out(digits, '0');
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (f[x]) {
      auto& ch = out[x / 4];
      ch = kDigits[hex_value(ch) | (1 << (x % 4))];
    }
  }
  return out;
}

TruthTable truth_table_from_hex(int n, const std::string& hex) {
  if (n < 0 || n > kMaxVars) throw ParameterError("n = " + std::to_string(n) + " outside [0, 20]");
  const std::size_t size = std::size_t{1} << n;
  const std::size_t digits = std::max<std::size_t>(1, size / 4);
  if (hex.size() != digits) {
    throw ValidationError("bits: expected " + std::to_string(digits) + " hex digits for n = " + std::to_string(n) +
                          ", got " + std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> bits(size);
  for (std::size_t k = 0; k < digits; ++k) {
    const int v = hex_value(hex[k]);
    if (v < 0) throw ValidationError(std::string("bits: bad hex digit '") + hex[k] + "'");
    for (int j = 0; j < 4; ++j) {
      const std::size_t x = 4 * k + static_cast<std::size_t>(j);
      if ((v >> j) & 1) {
        if (x >= size) throw ValidationError("bits: set bit beyond 2^n entries");
        bits[x] = 1;
      }
    }
  }
  return TruthTable(n, std::move(bits));
}

Json truth_table_to_json(const TruthTable& f) { return Json{{"n", f.n()}, {"bits", truth_table_hex(f)}}; }

TruthTable truth_table_from_json(const Json& j) {
  const std::string where = "truth table";
  if (j.is_object() && j.contains("family")) {
    const auto name = field<std::string>(j, "family", where);
    const auto family = parse_family(name);
    if (!family) throw ValidationError(where + ": unknown family \"" + name + "\"");
    std::optional<int> m;
    if (j.contains("m") && !j.at("m").is_null()) m = field<int>(j, "m", where);
    return from_family(*family, field<int>(j, "n", where), m);
  }
  return truth_table_from_hex(field<int>(j, "n", where), field<std::string>(j, "bits", where));
}

Json poly_to_json(const MultilinearPoly& p) {
  Json terms = Json::array();
  for (const auto& [mask, c] : p.terms()) {
    terms.push_back({{"mask", mask}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return Json{{"n", p.n()}, {"terms", terms}};
}

MultilinearPoly poly_from_json(const Json& j) {
  const std::string where = "polynomial";
  const int n = field<int>(j, "n", where);
  if (n < 0 || n > kMaxVars) throw ValidationError(where + ": n out of range");
  MultilinearPoly p(n);
  const auto terms = field<Json>(j, "terms", where);
  if (!terms.is_array()) throw ValidationError(where + ": \"terms\" must be an array");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string at = where + " term " + std::to_string(k);
    const auto mask = field<std::uint32_t>(terms[k], "mask", at);
    if (n < 32 && (mask >> n) != 0) throw ValidationError(at + ": mask uses variables beyond n");
    p.add_term(mask, parse_rational(field<std::string>(terms[k], "num", at),
                                    field<std::string>(terms[k], "den", at), at));
  }
  return p;
}

Json univariate_to_json(const UnivariatePoly& q) {
  Json coeffs = Json::array();
  for (const auto& c : q.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return Json{{"coeffs", coeffs}};
}

UnivariatePoly univariate_from_json(const Json& j) {
  const std::string where = "univariate polynomial";
  const auto coeffs = field<Json>(j, "coeffs", where);
  if (!coeffs.is_array()) throw ValidationError(where + ": \"coeffs\" must be an array");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& pair = coeffs[k];
    const std::string at = where + " coefficient " + std::to_string(k);
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw ValidationError(at + ": expected [\"num\", \"den\"]");
    }
    out.push_back(parse_rational(pair[0].get<std::string>(), pair[1].get<std::string>(), at));
  }
  return UnivariatePoly(std::move(out));
}

Json real_poly_to_json(const RealPoly& p) {
  Json terms = Json::array();
  for (const auto& [mask, c] : p.terms()) terms.push_back({{"mask", mask}, {"coeff", c.to_string()}});
  return Json{{"n", p.n()}, {"terms", terms}};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim; ++c) row.push_back({m.at(r, c).real(), m.at(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("matrix must be an array of rows");
  const int dim = static_cast<int>(j.size());
  Matrix m{dim, std::vector<std::complex<double>>(static_cast<std::size_t>(dim) * dim)};
  for (int r = 0; r < dim; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ValidationError("matrix row " + std::to_string(r) + " must have " + std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ValidationError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ") must be [re, im]");
      }
      m.at(r, c) = {e[0].get<double>(), e[1].get<double>()};
    }
  }
  return m;
}

Json circuit_to_json(const Circuit& c) {
  Json ops = Json::array();
  for (const auto& op : c.ops()) {
    if (std::holds_alternative<OracleCall>(op)) {
      ops.push_back({{"oracle", true}});
      continue;
    }
    const auto& g = std::get<Gate>(op);
    Json o{{"gate", gate_name(g.kind)}, {"targets", g.targets}};
    if (g.matrix) o["matrix"] = matrix_to_json(*g.matrix);
    ops.push_back(o);
  }
  return Json{{"m", c.m()}, {"n", c.n()}, {"ops", ops}};
}

Circuit circuit_from_json(const Json& j) {
  const std::string where = "circuit";
  Circuit c(field<int>(j, "m", where), field<int>(j, "n", where));
  const auto ops = field<Json>(j, "ops", where);
  if (!ops.is_array()) throw ValidationError(where + ": \"ops\" must be an array");
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const std::string at = "op " + std::to_string(k);
    const auto& o = ops[k];
    try {
      if (o.is_object() && o.contains("oracle")) {
        if (o.at("oracle") != true) throw ValidationError("\"oracle\" must be true");
        c.oracle();
        continue;
      }
      const auto name = field<std::string>(o, "gate", at);
      const auto kind = parse_gate(name);
      if (!kind) throw ValidationError("unknown gate \"" + name + "\"");
      Gate g{*kind, field<std::vector<int>>(o, "targets", at), std::nullopt};
      if (o.contains("matrix")) g.matrix = matrix_from_json(o.at("matrix"));
      c.add(std::move(g));
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      throw ValidationError(msg.rfind(at, 0) == 0 ? msg : at + ": " + msg);
    }
  }
  return c;
}

Json check_result_to_json(const CheckResult& r) {
  Json j{{"semantics", semantics_name(r.semantics)},
         {"pass", r.pass},
         {"worst_x", format_bits(r.worst_x, r.n)},
         {"value", r.value}};
  if (r.semantics == Semantics::ZeroError) j["max_wrong"] = r.max_wrong;
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json checks = Json::object();
  for (const auto& c : r.checks) checks[c.name] = c.holds;
  Json j{{"n", r.n},
         {"deg", r.deg},
         {"adeg", r.adeg ? Json(*r.adeg) : Json(nullptr)},
         {"bs", r.bs},
         {"C", r.c},
         {"C0", r.c0},
         {"C1", r.c1},
         {"D", r.d},
         {"monotone", r.monotone},
         {"gamma", r.gamma ? Json(*r.gamma) : Json(nullptr)},
         {"q_exact_lower", r.q_exact_lower},
         {"q_bounded_lower", r.q_bounded_lower},
         {"q_exact_from_D", r.q_exact_from_d},
         {"q_bounded_from_D", r.q_bounded_from_d},
         {"symmetric_bounded_bound",
          r.symmetric_bounded_bound ? Json(*r.symmetric_bounded_bound) : Json(nullptr)},
         {"checks", checks},
         {"all_hold", r.all_hold()}};
  return j;
}

std::string bound_report_markdown_header() {
  return "| function | n | deg | adeg | bs | C | C0 | C1 | D | monotone | Gamma | Q_E lower | Q_2 lower | checks |\n"
         "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|";
}

std::string bound_report_markdown_row(const std::string& name, const BoundReport& r) {
  std::ostringstream os;
  std::size_t held = 0;
  for (const auto& c : r.checks) held += c.holds ? 1 : 0;
  os << "| " << name << " | " << r.n << " | " << r.deg << " | " << (r.adeg ? std::to_string(*r.adeg) : "-")
     << " | " << r.bs << " | " << r.c << " | " << r.c0 << " | " << r.c1 << " | " << r.d << " | "
     << (r.monotone ? "yes" : "no") << " | " << (r.gamma ? std::to_string(*r.gamma) : "undefined") << " | "
     << format_double(r.q_exact_lower) << " | " << format_double(r.q_bounded_lower) << " | " << held << "/"
     << r.checks.size() << " |";
  return os.str();
}

std::vector<std::string> enumeration_csv_columns() {
  std::vector<std::string> cols{"index", "n", "deg", "adeg", "bs", "C", "C0", "C1", "D", "monotone", "gamma"};
  for (const char* name : kCheckColumns) cols.emplace_back(name);
  cols.emplace_back("bits");
  return cols;
}

std::string enumeration_csv_row(std::uint64_t index, const TruthTable& f, const BoundReport& r) {
  std::ostringstream os;
  os << index << ',' << r.n << ',' << r.deg << ',' << optional_int(r.adeg) << ',' << r.bs << ',' << r.c << ','
     << r.c0 << ',' << r.c1 << ',' << r.d << ',' << (r.monotone ? 1 : 0) << ',' << optional_int(r.gamma);
  for (const char* name : kCheckColumns) {
    os << ',';
    for (const auto& c : r.checks) {
      if (c.name == name) os << (c.holds ? 1 : 0);
    }
  }
  os << ',' << truth_table_hex(f);
  return os.str();
}

std::string decoder_csv(const std::vector<int>& decoder) {
  std::ostringstream os;
  os << "y,t_hat\n";
  for (std::size_t y = 0; y < decoder.size(); ++y) os << y << ',' << decoder[y] << '\n';
  return os.str();
}

}  // namespace qquery
