#include "fhpt/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fhpt/coherent.hpp"
#include "fhpt/errors.hpp"
#include "fhpt/quadrature.hpp"
#include "fhpt/su11.hpp"
#include "fhpt/verify.hpp"

namespace fhpt::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxStateIndex = 200;
constexpr int kMaxResolutionIndex = 20;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("not a real number: '" + text + "'");
  }
  return v;
}

const char* interval_name(model::IntervalMode m) {
  return m == model::IntervalMode::kFull ? "full" : "paper";
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["tool"] = std::string("fhpt ") + kToolVersion;
  j["subcommand"] = c.subcommand;
  j["A"] = c.params.A;
  j["c1"] = c.params.c1;
  j["m0"] = c.params.m0;
  j["c"] = c.params.c;
  j["hbar"] = c.params.hbar;
  j["radicand_factor"] = c.params.radicand_factor;
  j["nmax"] = c.nmax;
  j["n"] = c.n;
  j["z"] = format_complex(c.z);
  j["interval"] = interval_name(c.interval);
  j["quad_order"] = c.quad_order;
  if (c.tol) {
    j["tol"] = *c.tol;
  } else {
    j["tol"] = nullptr;
  }
  j["points"] = c.points;
  return j;
}

// Rows of a table, emitted either as CSV (header line then rows) or as a
// JSON array of objects keyed by the header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<ordered_json>> rows;
  ordered_json summary = ordered_json::object();
};

std::string csv_cell(const ordered_json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

void emit_table(const RunConfig& c, const Table& t, std::ostream& out) {
  if (c.format == OutputFormat::kJson) {
    ordered_json doc;
    doc["version"] = kSchemaVersion;
    doc["config"] = config_json(c);
    if (!t.summary.empty()) doc["summary"] = t.summary;
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json obj;
      for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : t.summary.items()) {
    out << "# " << key << '=' << csv_cell(value) << '\n';
  }
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    out << (i ? "," : "") << t.header[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_cell(row[i]);
    }
    out << '\n';
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void check_config(const RunConfig& c) {
  model::validate(c.params);
  require(c.nmax >= 0, "nmax must be >= 0");
  require(c.n >= 0 && c.n <= kMaxStateIndex, "n must be in [0, 200]");
  require(c.quad_order >= 1 && c.quad_order <= quadrature::kMaxOrder,
          "quad-order must be in [1, 4096]");
  require(c.points >= 3, "points must be >= 3");
  if (c.tol) require(*c.tol > 0.0 && *c.tol <= 1e-3, "tol must be in (0, 1e-3]");
  require(std::isfinite(c.z.real()) && std::isfinite(c.z.imag()),
          "z must be finite");
}

Table cmd_spectrum(const RunConfig& c) {
  Table t;
  t.header = {"n", "P_n", "A_prime", "L"};
  const double a_prime = model::derive_a_prime(c.params);
  const double rep = model::representation_index(c.params);
  for (int n = 0; n <= c.nmax; ++n) {
    t.rows.push_back({n, model::momentum_level(n, c.params), a_prime, rep});
  }
  return t;
}

Table cmd_wavefunction(const RunConfig& c) {
  Table t;
  t.header = {"tau", "psi"};
  const auto state = model::build_basis_state(c.n, c.params, c.interval);
  const double half_pi = 0.5 * std::numbers::pi;
  const double lo = c.interval == model::IntervalMode::kFull ? -half_pi : 0.0;
  for (int i = 0; i < c.points; ++i) {
    const double tau = i + 1 == c.points
                           ? half_pi
                           : lo + (half_pi - lo) * i / (c.points - 1);
    // The envelope cos^{A'/2} vanishes at +-pi/2.
    const double psi = std::abs(tau) >= half_pi ? 0.0 : state(tau);
    t.rows.push_back({tau, psi});
  }
  t.summary["n"] = c.n;
  t.summary["L"] = state.rep_index();
  t.summary["norm"] = state.norm();
  return t;
}

Table cmd_coherent(const RunConfig& c) {
  const double rep = model::representation_index(c.params);
  const auto cs = coherent::build_coherent_state(c.z, rep);
  Table t;
  t.header = {"n", "weight", "phase"};
  for (std::size_t n = 0; n < cs.coeffs.size(); ++n) {
    t.rows.push_back({static_cast<int>(n), std::norm(cs.coeffs[n]),
                      std::arg(cs.coeffs[n])});
  }
  t.summary["truncation"] = cs.truncation;
  t.summary["tail_bound"] = cs.tail_bound;
  t.summary["norm_squared"] = coherent::norm_squared(cs);
  t.summary["mean_n"] =
      coherent::expectation_diagonal(cs, [](int n) { return double(n); });
  t.summary["mean_gamma0"] = coherent::expectation_diagonal(
      cs, [rep](int n) { return n + rep + 0.5; });
  t.summary["eigenstate_residual"] = coherent::lowering_eigenstate_residual(cs);
  return t;
}

Table cmd_resolution(const RunConfig& c) {
  if (c.nmax > kMaxResolutionIndex) {
    throw DomainError("resolution: nmax must be <= 20");
  }
  const double rep = model::representation_index(c.params);
  const auto rule = quadrature::gauss_legendre(c.quad_order);
  Table t;
  t.header = {"n", "n_prime", "value", "radial_integral", "radial_closed_form"};
  bool warned = false;
  for (int n = 0; n <= c.nmax; ++n) {
    for (int np = 0; np <= c.nmax; ++np) {
      const auto e = coherent::resolution_of_identity_check(n, np, rep, rule);
      warned = warned || e.tail_warning;
      t.rows.push_back(
          {n, np, e.value, e.radial_integral, e.radial_closed_form});
    }
  }
  t.summary["L"] = rep;
  t.summary["tail_warning"] = warned;
  return t;
}

Table cmd_expect(const RunConfig& c) {
  const double rep = model::representation_index(c.params);
  const auto cs = coherent::build_coherent_state(c.z, rep);
  Table t;
  t.header = {"observable", "re", "im", "closed_re", "closed_im"};
  const auto diag = [&](auto f) { return coherent::expectation_diagonal(cs, f); };
  const double mean_n = coherent::mean_number_closed_form(c.z, rep);
  const ordered_json none = nullptr;
  t.rows.push_back({"identity", diag([](int) { return 1.0; }), 0.0, 1.0, 0.0});
  t.rows.push_back({"n", diag([](int n) { return double(n); }), 0.0, mean_n, 0.0});
  t.rows.push_back({"gamma0", diag([rep](int n) { return n + rep + 0.5; }), 0.0,
                    mean_n + rep + 0.5, 0.0});
  t.rows.push_back({"n_squared", diag([](int n) { return double(n) * n; }), 0.0,
                    none, none});
  t.rows.push_back({"momentum",
                    diag([&](int n) { return model::momentum_level(n, c.params); }),
                    0.0, none, none});
  // Off-diagonal ladder observables through the full double sum.
  const auto raising = coherent::general_expectation(cs, [rep](int np, int n) {
    return np == n + 1
               ? coherent::Complex(su11::ladder_coefficients(n, rep).raise_eig)
               : coherent::Complex(0.0);
  });
  const auto lowering = coherent::general_expectation(cs, [rep](int np, int n) {
    return np + 1 == n
               ? coherent::Complex(su11::ladder_coefficients(n, rep).lower_eig)
               : coherent::Complex(0.0);
  });
  t.rows.push_back({"raising", raising.real(), raising.imag(), c.z.real(),
                    0.0 - c.z.imag()});
  t.rows.push_back({"lowering", lowering.real(), lowering.imag(), c.z.real(),
                    c.z.imag()});
  t.summary["truncation"] = cs.truncation;
  t.summary["tail_bound"] = cs.tail_bound;
  return t;
}

ordered_json report_json(const RunConfig& c,
                         const std::vector<verify::Check>& checks) {
  ordered_json doc;
  doc["version"] = kSchemaVersion;
  doc["config"] = config_json(c);
  ordered_json list = ordered_json::array();
  for (const auto& ch : checks) {
    ordered_json j;
    j["name"] = ch.name;
    j["paper_eq"] = ch.identity;
    j["residual"] = ch.residual;
    j["tol"] = ch.tol;
    j["pass"] = ch.pass;
    list.push_back(std::move(j));
  }
  doc["checks"] = std::move(list);
  doc["pass"] = verify::all_pass(checks);
  return doc;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  verify::SuiteOptions o;
  o.params = c.params;
  o.nmax = c.nmax;
  o.interval = c.interval;
  o.quad_order = c.quad_order;
  o.z = c.z;
  o.tol = c.tol;
  const auto checks = verify::run_suite(o);
  if (c.format == OutputFormat::kJson) {
    out << report_json(c, checks).dump(2) << '\n';
  } else {
    out << "name,paper_eq,residual,tol,pass\n";
    for (const auto& ch : checks) {
      out << ch.name << ",\"" << ch.identity << "\"," << format_double(ch.residual)
          << ',' << format_double(ch.tol) << ',' << (ch.pass ? "true" : "false")
          << '\n';
    }
  }
  for (const auto& ch : checks) {
    if (!ch.pass) {
      err << "FAIL " << ch.name << ": residual " << format_double(ch.residual)
          << " > tol " << format_double(ch.tol) << '\n';
    }
  }
  return verify::all_pass(checks) ? static_cast<int>(ExitCode::kOk)
                                  : static_cast<int>(ExitCode::kVerificationFailed);
}

void add_common_options(CLI::App& sub, RunConfig& c, std::string& z_text,
                        std::string& interval_text, std::string& format_text,
                        std::optional<double>& tol) {
  sub.add_option("--A", c.params.A, "Potential strength A");
  sub.add_option("--c1", c.params.c1, "Frequency c1 (1/time)");
  sub.add_option("--m0", c.params.m0, "Mass m0");
  sub.add_option("--c", c.params.c, "Speed of light c");
  sub.add_option("--hbar", c.params.hbar, "Reduced Planck constant");
  sub.add_option("--radicand-factor", c.params.radicand_factor,
                 "k in A' = 1 + sqrt(1 + k A(A-1)/(c1^2 M))");
  sub.add_option("--nmax", c.nmax, "Highest quantum number");
  sub.add_option("--n", c.n, "Quantum number of a single state");
  sub.add_option("--z", z_text, "Coherent-state label, a+bi or r@theta");
  sub.add_option("--interval", interval_text, "Normalization interval")
      ->check(CLI::IsMember({"full", "paper"}));
  sub.add_option("--quad-order", c.quad_order, "Gauss-Legendre order");
  sub.add_option("--tol", tol, "Tolerance applied to every check");
  sub.add_option("--points", c.points, "Samples in the wavefunction grid");
  sub.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--out", c.out_path, "Write data to PATH instead of stdout");
}

}  // namespace

std::complex<double> parse_complex(const std::string& raw) {
  std::string text;
  for (const char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  }
  if (text.empty()) throw std::invalid_argument("empty complex number");
  if (const auto at = text.find('@'); at != std::string::npos) {
    return std::polar(parse_real(text.substr(0, at)),
                      parse_real(text.substr(at + 1)));
  }
  if (text.back() != 'i' && text.back() != 'j') return {parse_real(text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag_part = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split)), imag_part(body.substr(split))};
}

std::string format_complex(std::complex<double> z) {
  std::string s = format_double(z.real());
  const std::string im = format_double(std::abs(z.imag()));
  s += std::signbit(z.imag()) ? "-" : "+";
  return s + im + "i";
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  std::string z_text;
  std::string interval_text = "full";
  std::string format_text = "csv";

  CLI::App app{"Quantized-momentum Poschl-Teller states and their "
               "Barut-Girardello coherent states"};
  app.name("fhpt");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  const char* names[][2] = {
      {"spectrum", "Quantized momentum levels P_n"},
      {"wavefunction", "Samples of psi_n(tau)"},
      {"verify", "Run the identity checks and write a report"},
      {"coherent", "Coherent-state coefficients"},
      {"resolution", "Resolution-of-identity matrix elements"},
      {"expect", "Coherent-state expectation values"},
  };
  for (const auto& [name, help] : names) {
    auto* sub = app.add_subcommand(name, help);
    add_common_options(*sub, c, z_text, interval_text, format_text, c.tol);
    sub->callback([&c, sub] { c.subcommand = sub->get_name(); });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(ExitCode::kOk);
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return static_cast<int>(ExitCode::kOk);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  }

  try {
    if (!z_text.empty()) c.z = parse_complex(z_text);
    c.interval = interval_text == "paper" ? model::IntervalMode::kHalf
                                          : model::IntervalMode::kFull;
    c.format = format_text == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
    check_config(c);
  } catch (const std::exception& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "cannot open output file: " << c.out_path << '\n';
      return static_cast<int>(ExitCode::kUsage);
    }
    sink = &file;
  }

  try {
    if (c.subcommand == "verify") return cmd_verify(c, *sink, err);
    Table t;
    if (c.subcommand == "spectrum") t = cmd_spectrum(c);
    if (c.subcommand == "wavefunction") t = cmd_wavefunction(c);
    if (c.subcommand == "coherent") t = cmd_coherent(c);
    if (c.subcommand == "resolution") t = cmd_resolution(c);
    if (c.subcommand == "expect") t = cmd_expect(c);
    emit_table(c, t, *sink);
  } catch (const std::domain_error& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  } catch (const std::overflow_error& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kVerificationFailed);
  }
  return static_cast<int>(ExitCode::kOk);
}

}  // namespace fhpt::cli
