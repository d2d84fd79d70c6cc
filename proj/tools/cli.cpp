#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "lgf/errors.hpp"
#include "lgf/green.hpp"
#include "lgf/green_table.hpp"
#include "lgf/sphere.hpp"
#include "lgf/theta.hpp"
#include "lgf/theta_data.hpp"

namespace lgf::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMinNodes = 16;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string backend = "sphere";
  std::string lambda_text = "2+2i";
  std::string target_text = "0,0";
  int window = 4;
  int nodes = kDefaultNodes;
  double tol = 1e-8;
  std::string format = "csv";
  std::string out;
  bool g0 = false;
  bool flip_orientation = false;

  // quasimomentum-map
  double re_min = -3.0, re_max = 3.0, im_min = -3.0, im_max = 3.0;
  int grid = 61;
  std::vector<std::string> contour_lambdas{"2+2i", "3", "1+i/2"};
  std::string contours_out;
};

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

// "[+-][x]i", "[+-][x]i/y"
double parse_imag(std::string s) {
  double sign = 1.0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') sign = -1.0;
    s.erase(0, 1);
  }
  const std::size_t at = s.find('i');
  if (at == std::string::npos) throw std::invalid_argument("missing 'i' in imaginary part");
  const std::string coef = s.substr(0, at);
  const std::string rest = s.substr(at + 1);
  double v = coef.empty() ? 1.0 : parse_real(coef);
  if (!rest.empty()) {
    if (rest[0] != '/' || !coef.empty()) throw std::invalid_argument("malformed imaginary part");
    v /= parse_real(rest.substr(1));
  }
  return sign * v;
}

LatticeIndex parse_target(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("target must be 'mu,nu'");
  try {
    std::size_t a = 0, b = 0;
    const std::string s0 = text.substr(0, comma), s1 = text.substr(comma + 1);
    const int mu = std::stoi(s0, &a);
    const int nu = std::stoi(s1, &b);
    if (a != s0.size() || b != s1.size()) throw std::invalid_argument("");
    return {mu, nu};
  } catch (const std::exception&) {
    throw std::invalid_argument("target must be two integers 'mu,nu'");
  }
}

int env_nodes() {
  const char* env = std::getenv("GREEN_NODES");
  if (env == nullptr || *env == '\0') return kDefaultNodes;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("GREEN_NODES is not an integer: '") + env + "'");
}

void validate(const RunConfig& cfg) {
  if (cfg.window < 0) throw std::invalid_argument("--window must be >= 0");
  if (cfg.nodes < kMinNodes) throw std::invalid_argument("node count must be >= 16");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
}

// Writes through `body` to --out, or to `out` when no path was given.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoFailure("cannot open output file " + path);
  body(file);
  file.flush();
  if (!file) throw IoFailure("write failed for " + path);
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// --- green-table -----------------------------------------------------------

int cmd_green_table(const RunConfig& cfg, std::ostream& out) {
  if (cfg.backend != "sphere") {
    throw std::invalid_argument("green-table needs the sphere backend; theta data carries no contour construction");
  }
  const sphere::SphereBackend backend;
  const GreenTable table = make_green_table(backend, parse_lambda(cfg.lambda_text), Window::square(cfg.window),
                                            parse_target(cfg.target_text),
                                            cfg.g0 ? GreenKind::unnormalized : GreenKind::normalized, cfg.nodes);
  emit(cfg.out, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      write_json(os, table);
    } else {
      write_csv(os, table);
    }
  });
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct Check {
  std::string name;
  double value;
  double limit;
  bool pass() const { return value < limit; }
};

double relative_lattice_residual(const SpherePoint& z, int half, bool five_point) {
  const LatticeField psi = LatticeField::sample(Window::square(half), [&](int m, int n) { return sphere::psi(z, m, n); });
  double scale = 0.0;
  for (int m = -half; m <= half; ++m)
    for (int n = -half; n <= half; ++n) scale = std::max(scale, std::abs(psi.at(m, n)));
  const LatticeFunction one = [](int, int) { return 1.0; };
  return (five_point ? check_five_point_diagonal(psi, one) : check_four_point(psi, one)) / scale;
}

std::vector<Check> sphere_checks(const RunConfig& cfg) {
  const sphere::SphereBackend backend;
  const SpherePoint lambda = parse_lambda(cfg.lambda_text);
  const LatticeIndex target = parse_target(cfg.target_text);
  std::vector<Check> checks;

  const SpherePoint samples[] = {Complex(0.3, 0.7), Complex(-1.2, 0.4), Complex(2.5, -0.5)};
  double four = 0.0, five = 0.0;
  for (const SpherePoint& z : samples) {
    four = std::max(four, relative_lattice_residual(z, 6, false));
    five = std::max(five, relative_lattice_residual(z, 6, true));
  }
  checks.push_back({"four-point equation", four, 1e-12});
  checks.push_back({"five-point equation", five, 1e-12});

  const Contour contour = backend.c_contour(lambda, cfg.nodes);
  double diag = 0.0;
  for (int mu = -3; mu <= 3; ++mu)
    for (int nu = -3; nu <= 3; ++nu)
      for (int d = -2; d <= 2; ++d)
        diag = std::max(diag, std::abs(kernel_K(backend, contour, {mu, nu}, {mu + d, nu + d})));
  checks.push_back({"kernel diagonal vanishing", diag, std::min(cfg.tol, 1e-10)});
  checks.push_back({"kernel L-annihilation", kernel_L_residual(backend, contour, Window::square(3), target), cfg.tol});

  double res_q = 0.0, res_p = 0.0;
  for (int mu = -2; mu <= 2; ++mu) {
    for (int nu = -2; nu <= 2; ++nu) {
      res_q = std::max(res_q, std::abs(residue_lemma_Q(backend, mu, nu) - Complex(0.0, 1.0)));
      res_p = std::max(res_p, residue_lemma_P(backend, {mu, nu}, {mu + 1, nu + 1}));
    }
  }
  checks.push_back({"residue lemma at Q+", res_q, std::min(cfg.tol, 1e-9)});
  checks.push_back({"residue lemma at P+", res_p, std::min(cfg.tol, 1e-9)});

  const GreenFunction g(backend, lambda, cfg.nodes);
  const Window window = Window::square(cfg.window);
  checks.push_back({"delta property G", verify_delta(g, window, target, GreenKind::normalized), cfg.tol});
  checks.push_back({"delta property G0", verify_delta(g, window, target, GreenKind::unnormalized), cfg.tol});

  double orient = 0.0;
  const Differential dp_n = [&](Complex z) { return backend.dp_n(SpherePoint::from_chart(z)); };
  for (const Contour& c : {contour, sphere::c_contour_radius(0.5, cfg.nodes), g.contour()}) {
    const Contour used = cfg.flip_orientation ? c.reversed() : c;
    orient = std::max(orient, std::abs(integrate(dp_n, used) - kTwoPi));
  }
  checks.push_back({"contour orientation", orient, 1e-10});

  const double r4 = growth_check(g, Window::square(4), target, INFINITY).r1;
  const double r8 = growth_check(g, Window::square(8), target, INFINITY).r1;
  checks.push_back({"growth stabilization R1(8)/R1(4)", r8 / r4, 1.05});
  return checks;
}

std::vector<Check> theta_checks(const RunConfig& cfg) {
  {
    std::ifstream probe(cfg.backend);
    if (!probe) throw IoFailure("cannot open theta data file " + cfg.backend);
  }
  const theta::JacobianSpectralData data = theta::load_data(cfg.backend);
  const int g = data.genus();
  std::vector<Check> checks;

  double quasi = 0.0, even = 0.0;
  for (int s = 0; s < 3; ++s) {
    theta::CVector z(g);
    for (int k = 0; k < g; ++k) z[k] = Complex(0.1 * (k + 1) + 0.17 * s, 0.05 * (s - 1) - 0.03 * k);
    const Complex base = theta::theta(z, data.b);
    even = std::max(even, std::abs(theta::theta(-z, data.b) - base) / std::abs(base));
    for (int k = 0; k < g; ++k) {
      theta::CVector zp = z, zb = z;
      zp[k] += 1.0;
      zb += data.b.matrix().col(k);
      quasi = std::max(quasi, std::abs(theta::theta(zp, data.b) - base) / std::abs(base));
      const Complex expect = theta::theta_quasi_period_factor(z, data.b, k) * base;
      quasi = std::max(quasi, std::abs(theta::theta(zb, data.b) - expect) / std::abs(expect));
    }
  }
  checks.push_back({"theta quasi-periodicity", quasi, std::min(cfg.tol, 1e-10)});
  checks.push_back({"theta evenness", even, std::min(cfg.tol, 1e-10)});
  checks.push_back({"b-period relation", data.b_period_residual(), 1e-9});

  double mono = 0.0;
  for (const theta::PathSample& s : data.samples) {
    for (int k = 0; k < g; ++k) {
      theta::IVector shift = theta::IVector::Zero(g);
      shift[k] = 1;
      const Complex e = data.exp_increment(s, 1, 1);
      const double scale = std::max(1.0, std::abs(theta::psi_theta(data, s.abel, e, 1, 1)));
      mono = std::max(mono, theta::monodromy_check(data, s.abel, e, 1, 1, shift) / scale);
    }
  }
  checks.push_back({"monodromy consistency", mono, 1e-9});
  return checks;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<Check> checks = cfg.backend == "sphere" ? sphere_checks(cfg) : theta_checks(cfg);
  bool ok = true;
  emit(cfg.out, out, [&](std::ostream& os) {
    for (const Check& c : checks) {
      char line[160];
      std::snprintf(line, sizeof line, "%-34s %12.3e  < %9.2e  %s\n", c.name.c_str(), c.value, c.limit,
                    c.pass() ? "PASS" : "FAIL");
      os << line;
      ok = ok && c.pass();
    }
    os << (ok ? "all checks passed\n" : "some checks FAILED\n");
  });
  return ok ? kOk : kCheckFailed;
}

// --- quasimomentum-map -----------------------------------------------------

int cmd_quasimomentum_map(const RunConfig& cfg, std::ostream& out) {
  if (cfg.backend != "sphere") throw std::invalid_argument("quasimomentum-map needs the sphere backend");
  if (cfg.grid < 2) throw std::invalid_argument("--grid must be >= 2");
  if (!(cfg.re_max > cfg.re_min) || !(cfg.im_max > cfg.im_min)) throw std::invalid_argument("empty grid rectangle");
  std::vector<SpherePoint> lambdas;
  for (const std::string& s : cfg.contour_lambdas) lambdas.push_back(parse_lambda(s));

  const double eps = 1e-12 * std::max({std::abs(cfg.re_min), std::abs(cfg.re_max), std::abs(cfg.im_min),
                                       std::abs(cfg.im_max), 1.0});
  emit(cfg.out, out, [&](std::ostream& os) {
    os << "re,im,im_p_m,im_p_n,singular_m,singular_n\n";
    for (int a = 0; a < cfg.grid; ++a) {
      const double re = cfg.re_min + (cfg.re_max - cfg.re_min) * a / (cfg.grid - 1);
      for (int b = 0; b < cfg.grid; ++b) {
        const double im = cfg.im_min + (cfg.im_max - cfg.im_min) * b / (cfg.grid - 1);
        const Complex z(re, im);
        const bool sm = std::abs(z - 1.0) < eps || std::abs(z + 1.0) < eps;
        const bool sn = std::abs(z - Complex(0, 1)) < eps || std::abs(z + Complex(0, 1)) < eps;
        const double pm = sm ? (std::abs(z - 1.0) < eps ? -INFINITY : INFINITY) : sphere::im_p_m(z);
        const double pn = sn ? (std::abs(z - Complex(0, 1)) < eps ? -INFINITY : INFINITY) : sphere::im_p_n(z);
        os << fmt("%.17g", re) << ',' << fmt("%.17g", im) << ',' << fmt("%.17g", pm) << ',' << fmt("%.17g", pn)
           << ',' << int(sm) << ',' << int(sn) << '\n';
      }
    }
  });

  if (!cfg.contours_out.empty()) {
    constexpr int kSamples = 256;
    emit(cfg.contours_out, out, [&](std::ostream& os) {
      os << "lambda_re,lambda_im,piece,k,re,im\n";
      for (const SpherePoint& lambda : lambdas) {
        const double r = sphere::level_radius(lambda);
        if (!(r > 0.0) || !std::isfinite(r)) throw DegenerateContourError("degenerate contour at lambda = " + lambda.to_string());
        const std::string lre = lambda.is_infinity() ? "inf" : fmt("%.17g", lambda.value().real());
        const std::string lim = lambda.is_infinity() ? "0" : fmt("%.17g", lambda.value().imag());
        int piece = 0, k_in_piece = 0;
        for (int k = 0; k <= kSamples; ++k) {
          const Complex w = std::polar(r, -kTwoPi * (k % kSamples) / kSamples);
          const SpherePoint z = sphere::from_w(std::abs(r - 1.0) < 1e-12 && k % kSamples == 0 ? SpherePoint(1.0) : w);
          if (z.is_infinity()) {
            if (k_in_piece > 0) ++piece;
            k_in_piece = 0;
            continue;
          }
          os << lre << ',' << lim << ',' << piece << ',' << k_in_piece++ << ',' << fmt("%.17g", z.value().real())
             << ',' << fmt("%.17g", z.value().imag()) << '\n';
        }
      }
    });
  }
  return kOk;
}

}  // namespace

SpherePoint parse_lambda(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  if (s.empty()) throw std::invalid_argument("empty lambda");
  if (s == "inf" || s == "infinity") return SpherePoint::infinity();
  if (const std::size_t comma = s.find(','); comma != std::string::npos) {
    return Complex(parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1)));
  }
  if (s.find('i') == std::string::npos) return Complex(parse_real(s), 0.0);
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Complex(0.0, parse_imag(s));
  return Complex(parse_real(s.substr(0, split)), parse_imag(s.substr(split)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice Green's functions of the five-point operator"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool nodes_given = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--backend", cfg.backend, "'sphere' or the path of a theta-data JSON file");
    sub->add_option("--lambda", cfg.lambda_text, "spectral parameter: a+bi, 're,im' or 'inf'");
    sub->add_option("--target", cfg.target_text, "target site 'mu,nu'");
    sub->add_option("--window", cfg.window, "window half-size N: |mu|, |nu| <= N");
    sub->add_option_function<int>(
        "--nodes", [&](int n) { cfg.nodes = n, nodes_given = true; }, "quadrature nodes per contour");
    sub->add_option("--tol", cfg.tol, "residual tolerance");
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
  };

  CLI::App* table = app.add_subcommand("green-table", "tabulate G (or G0) over a window");
  common(table);
  table->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--g0", cfg.g0, "tabulate the unnormalized G0");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant checks");
  common(verify);
  verify->add_flag("--flip-orientation", cfg.flip_orientation, "fault injection: reverse the checked contours");

  CLI::App* map = app.add_subcommand("quasimomentum-map", "Im p_m, Im p_n grid and C_lambda polylines");
  map->add_option("--backend", cfg.backend, "must be 'sphere'");
  map->add_option("--re-min", cfg.re_min);
  map->add_option("--re-max", cfg.re_max);
  map->add_option("--im-min", cfg.im_min);
  map->add_option("--im-max", cfg.im_max);
  map->add_option("--grid", cfg.grid, "grid points per axis");
  map->add_option("--lambda", cfg.contour_lambdas, "lambda values for the C_lambda polylines");
  map->add_option("--contours", cfg.contours_out, "polyline CSV output file");
  map->add_option("--out", cfg.out, "grid CSV output file (default: stdout)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (!nodes_given) cfg.nodes = env_nodes();
    validate(cfg);
    if (table->parsed()) return cmd_green_table(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_quasimomentum_map(cfg, out);
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const lgf::Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace lgf::cli
