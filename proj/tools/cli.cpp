#include "cli.hpp"

#include "CLI11.hpp"
#include "kummerlab/blanc.hpp"
#include "kummerlab/error.hpp"
#include "kummerlab/io.hpp"
#include "kummerlab/kernels.hpp"
#include "kummerlab/rigidity.hpp"
#include "kummerlab/spectral.hpp"
#include "kummerlab/wehler_action.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace kummerlab::cli {

namespace {

using io::json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --tol.<name>: accepted range per tolerance
struct TolRange {
  double WehlerTolerances::*field;
  double lo, hi;
};

const std::map<std::string, TolRange>& tolerance_table() {
  static const std::map<std::string, TolRange> t = {
      {"membership", {&WehlerTolerances::membership, 1e-14, 1e-6}},
      {"newton_accept", {&WehlerTolerances::newton_accept, 1e-15, 1e-6}},
      {"dedup", {&WehlerTolerances::dedup, 1e-12, 1e-3}},
      {"replay", {&WehlerTolerances::replay, 1e-13, 1e-5}},
      {"off_surface", {&WehlerTolerances::off_surface, 1e-12, 1e-4}},
      {"degenerate_fiber", {&WehlerTolerances::degenerate_fiber, 1e-18, 1e-8}},
      {"chart", {&WehlerTolerances::chart, 1e-14, 1e-4}},
  };
  return t;
}

struct Config {
  std::string command;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string out;
  std::map<std::string, double> tol;
  WehlerTolerances wtol;

  // inputs
  std::string matrix, file, gram, poly, tau, quotient = "none";
  std::string surface, cubic, ensemble;
  bool random = false, real = false;

  // numbers
  unsigned n = 2;
  int nmax = 5, seeds = 2000, kmax = 3, radii = 10, trials = 200, l = 1, points = 0;
  long long steps = 10000, orbit_n = 100, cap = 1000000, bound = 10000, iters = 200000;
  std::size_t samples = 100000, probes = 200;
  double rmax = 0.5, rmin = 0.05;
  std::string proj = "xy", csv;
};

struct Run {
  Config cfg;
  std::vector<std::pair<std::string, double>> stages;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::ostream* out;
  std::ostream* err;

  template <class F>
  auto stage(const std::string& name, F&& f) {
    const auto t0 = Clock::now();
    auto r = f();
    stages.emplace_back(name, std::chrono::duration<double>(Clock::now() - t0).count());
    return r;
  }

  std::string load(const std::string& path) {
    std::string s = io::read_file(path);
    inputs.emplace_back(path, io::hex64(io::fnv1a64(s)));
    return s;
  }

  json parse_inline(const std::string& text, const char* what) {
    try {
      return json::parse(text);
    } catch (const json::exception&) {
      throw UsageError(std::string("malformed JSON for ") + what);
    }
  }

  json load_json(const std::string& path) {
    const std::string s = load(path);
    try {
      return json::parse(s);
    } catch (const json::exception&) {
      throw UsageError("malformed JSON in " + path);
    }
  }
};

void emit(Run& run, const std::string& body, double wall, const std::vector<std::string>& argv) {
  if (run.cfg.out.empty()) {
    *run.out << body;
    return;
  }
  io::write_file(run.cfg.out, body);
  json m;
  json tol = json::object();
  for (const auto& [k, v] : run.cfg.tol) tol[k] = v;
  m["config"] = {{"command", run.cfg.command}, {"argv", argv},   {"rng_seed", std::to_string(run.cfg.seed)},
                 {"worker_count", run.cfg.workers}, {"output_path", run.cfg.out}, {"overrides", tol}};
  m["version"] = kVersion;
  m["wall_time_s"] = wall;
  json st = json::array();
  for (const auto& [k, v] : run.stages) st.push_back({{"stage", k}, {"seconds", v}});
  m["stages"] = st;
  json in = json::array();
  for (const auto& [p, d] : run.inputs) in.push_back({{"path", p}, {"fnv1a64", d}});
  m["inputs"] = in;
  m["output_fnv1a64"] = io::hex64(io::fnv1a64(body));
  io::write_file(run.cfg.out + ".manifest.json", m.dump(2) + "\n");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- lattice ---------------------------------------------------------------

IntMatrix input_matrix(Run& run, const char* fallback = nullptr) {
  const auto& c = run.cfg;
  if (!c.file.empty()) {
    json j = run.load_json(c.file);
    return io::parse_matrix(j.is_object() && j.contains("matrix") ? j.at("matrix") : j);
  }
  if (!c.matrix.empty()) return io::parse_matrix(run.parse_inline(c.matrix, "--matrix"));
  if (fallback) return io::parse_matrix(json::parse(fallback));
  throw UsageError("a matrix is required (--matrix or --file)");
}

std::string lattice_degree(Run& run) {
  const IntMatrix m = input_matrix(run);
  json j = io::to_json(run.stage("degree", [&] { return dynamical_degree(m); }));
  if (!run.cfg.gram.empty()) {
    QuadraticLattice lat(io::parse_matrix(run.parse_inline(run.cfg.gram, "--gram")));
    j["splitting"] = io::to_json(nf_splitting(m, lat));
  }
  return dump(j);
}

std::string lattice_salem(Run& run) {
  std::string p = run.cfg.poly;
  IntPolynomial poly;
  if (p == "lehmer")
    poly = lehmer_polynomial();
  else if (p == "pisot")
    poly = IntPolynomial{-1, -1, 0, 1};
  else if (!p.empty())
    poly = io::parse_polynomial(run.parse_inline(p, "--poly"));
  else
    throw UsageError("--poly is required (coefficients constant term first, or lehmer|pisot)");
  const SpectralReport r = run.stage("salem", [&] { return polynomial_report(poly); });
  return dump(io::to_json(r));
}

std::string lattice_rank2(Run& run) {
  if (run.cfg.gram.empty()) throw UsageError("--gram is required");
  QuadraticLattice lat(io::parse_matrix(run.parse_inline(run.cfg.gram, "--gram")));
  Rank2Options opt;
  opt.search_bound = run.cfg.bound;
  json j = io::to_json(run.stage("rank2", [&] { return rank2_analysis(lat, opt); }));
  j["gram"] = io::matrix_json(lat.gram());
  return dump(j);
}

std::string lattice_wehler_action(Run& run) {
  const WehlerAction a = wehler_cohomology_action();
  json j;
  const IntMatrix* ms[3] = {&a.m1, &a.m2, &a.m3};
  const IntMatrix id = IntMatrix::identity(3);
  json inv = json::array(), iso = json::array(), mats = json::array();
  for (const IntMatrix* m : ms) {
    mats.push_back(io::matrix_json(*m));
    inv.push_back((*m) * (*m) == id);
    iso.push_back(isometry_check(*m, a.lattice));
  }
  const IntMatrix p = wehler_product(a);
  j["gram"] = io::matrix_json(a.lattice.gram());
  j["involutions"] = mats;
  j["involution_check"] = inv;
  j["isometry_check"] = iso;
  j["product"] = io::matrix_json(p);
  j["report"] = io::to_json(run.stage("degree", [&] { return dynamical_degree(p); }));
  j["splitting"] = io::to_json(nf_splitting(p, a.lattice));
  return dump(j);
}

std::string lattice_enriques(Run&) {
  const QuadraticLattice e = enriques_lattice();
  json j = {{"rank", e.rank()}, {"signature", io::to_json(signature(e))}, {"determinant", io::integer(e.determinant())},
            {"even", e.is_even()}, {"gram", io::matrix_json(e.gram())}};
  return dump(j);
}

// ---- torus -----------------------------------------------------------------

TorusAutomorphism input_automorphism(Run& run) {
  const auto& c = run.cfg;
  if (!c.file.empty()) return io::parse_automorphism(run.load_json(c.file));
  std::complex<double> tau(0, 1);
  if (!c.tau.empty()) {
    std::istringstream is(c.tau);
    double re = 0, im = 0;
    char comma = 0;
    if (!(is >> re >> comma >> im) || comma != ',') throw UsageError("--tau expects re,im");
    tau = {re, im};
  }
  const IntMatrix m = input_matrix(run, "[[2,1],[1,1]]");
  return TorusAutomorphism(m, TorusLattice(tau), parse_quotient(c.quotient));
}

std::string torus_lyapunov(Run& run) {
  const TorusAutomorphism f = input_automorphism(run);
  json j;
  j["exact"] = io::to_json(run.stage("exact", [&] { return lyapunov_exact(f); }));
  j["qr_orbit"] =
      io::to_json(run.stage("qr", [&] { return lyapunov_qr_orbit(f, {0.1234, 0.5678, 0.9012, 0.3456}, run.cfg.steps); }));
  return dump(j);
}

std::string torus_fix_count(Run& run) {
  const TorusAutomorphism f = input_automorphism(run);
  return dump({{"n", run.cfg.n}, {"count", io::integer(fix_count(f, run.cfg.n))}});
}

std::string torus_fix_enum(Run& run) {
  const TorusAutomorphism f = input_automorphism(run);
  const PeriodicEnsemble e = run.stage("enumerate", [&] { return fix_enumerate(f, run.cfg.n, run.cfg.cap); });
  return io::ensemble_csv(e);
}

std::string torus_equidist(Run& run) {
  PeriodicEnsemble e;
  if (!run.cfg.ensemble.empty()) {
    e = io::parse_ensemble_csv(run.load(run.cfg.ensemble));
  } else {
    const TorusAutomorphism f = input_automorphism(run);
    e = fix_enumerate(f, run.cfg.n, run.cfg.cap);
  }
  const WeylReport w = run.stage("weyl", [&] { return equidistribution_test(e, run.cfg.kmax); });
  json j = io::to_json(w);
  j["period"] = e.period;
  j["points"] = io::integer(e.count);
  return dump(j);
}

TorusRigidityOptions torus_options(const Config& c) {
  TorusRigidityOptions o;
  o.samples = c.samples;
  o.probes = c.probes;
  o.r_max = c.rmax;
  o.r_min = c.rmin;
  o.radii = c.radii;
  o.qr_steps = c.steps;
  o.seed = c.seed;
  return o;
}

std::string torus_dimension(Run& run) {
  const TorusAutomorphism f = input_automorphism(run);
  const auto o = torus_options(run.cfg);
  auto samples = run.stage("samples", [&] { return kernels::haar_samples_parallel(o.seed, o.samples); });
  if (f.quotient() == Quotient::Kummer)
    for (auto& p : samples) p = kummer_project(p);
  else if (f.quotient() == Quotient::EtaTau)
    for (auto& p : samples) p = eta_tau_project(p, f.lattice());
  const auto radii = log_spaced_radii(o.r_max, o.r_min, o.radii);
  const DimensionEstimate d = run.stage("dimension", [&] {
    return local_dimension_estimate(
        samples, [&f](const TorusPoint& a, const TorusPoint& b) { return quotient_distance(f, a, b); }, radii, o.probes,
        o.seed, true);
  });
  json j = io::to_json(d);
  j["radii"] = radii;
  return dump(j);
}

std::string torus_rigidity(Run& run) {
  const TorusAutomorphism f = input_automorphism(run);
  const RigidityReport r = run.stage("rigidity", [&] { return torus_rigidity_report(f, torus_options(run.cfg)); });
  json j = io::to_json(r);
  j["automorphism"] = io::automorphism_json(f);
  return dump(j);
}

// ---- wehler ----------------------------------------------------------------

WehlerSurface input_surface(Run& run) {
  if (!run.cfg.surface.empty()) return io::parse_surface(run.load_json(run.cfg.surface));
  return random_surface(run.cfg.seed, run.cfg.real);
}

NewtonOptions newton_options(const Config& c) {
  NewtonOptions o;
  o.tol = c.wtol;
  o.max_period = std::max(o.max_period, c.nmax);
  return o;
}

WehlerRigidityOptions wehler_options(const Config& c) {
  if (c.nmax < 1 || c.nmax > 8) throw UsageError("--nmax must be in 1..8");
  if (c.seeds < 1) throw UsageError("--seeds must be positive");
  WehlerRigidityOptions o;
  o.n_max = c.nmax;
  o.seeds = c.seeds;
  o.rng_seed = c.seed;
  o.probes = c.probes;
  o.radii = c.radii;
  o.newton = newton_options(c);
  return o;
}

std::vector<SaddleOrbit> census(Run& run, const WehlerSurface& s, const WehlerRigidityOptions& o) {
  std::vector<SaddleOrbit> all;
  for (int n = 1; n <= o.n_max; ++n) {
    auto v = run.stage("newton_n" + std::to_string(n), [&] { return newton_periodic(s, n, o.seeds, o.rng_seed, o.newton); });
    all.insert(all.end(), v.begin(), v.end());
  }
  // Postcondition replay: every reported orbit must close.
  for (const auto& orb : all) {
    const SurfacePoint q = wehler_iterate(s, orb.point, orb.period, o.newton.tol);
    if (point_distance(q, orb.point) > o.newton.tol.replay)
      throw Error(ErrorCode::InternalInvariant, "saddle replay failed at period " + std::to_string(orb.period));
  }
  return all;
}

std::string wehler_orbit(Run& run) {
  const WehlerSurface s = input_surface(run);
  SurfacePoint p = random_surface_point(s, run.cfg.seed, 0, run.cfg.wtol);
  std::ostringstream os;
  os.precision(17);
  os << "index,ux,vx,uy,vy,uz,vz,residual\n";
  const long long n = run.cfg.orbit_n;
  for (long long i = 0; i <= n; ++i) {
    os << i;
    for (int a = 0; a < 3; ++a)
      os << ',' << p.p[a].u.real() << ';' << p.p[a].u.imag() << ',' << p.p[a].v.real() << ';' << p.p[a].v.imag();
    os << ',' << p.residual << '\n';
    if (i < n) p = wehler_map(s, p, run.cfg.wtol);
  }
  return os.str();
}

std::string wehler_saddles(Run& run) {
  const WehlerSurface s = input_surface(run);
  const auto o = wehler_options(run.cfg);
  return io::saddles_csv(census(run, s, o));
}

std::string wehler_lyapunov(Run& run) {
  const WehlerSurface s = input_surface(run);
  const auto o = wehler_options(run.cfg);
  const auto all = census(run, s, o);
  json j = io::to_json(lyapunov_from_saddles(all));
  j["orbits"] = all.size();
  return dump(j);
}

std::string wehler_rigidity(Run& run) {
  const WehlerSurface s = input_surface(run);
  const auto o = wehler_options(run.cfg);
  const auto all = census(run, s, o);
  const RigidityReport r = run.stage("report", [&] { return wehler_rigidity_from_saddles(all, o); });
  json j = io::to_json(r);
  j["surface_seed"] = run.cfg.surface.empty() ? json(std::to_string(run.cfg.seed)) : json(nullptr);
  j["n_max"] = o.n_max;
  j["newton_seeds"] = o.seeds;
  return dump(j);
}

std::string wehler_probe(Run& run) {
  const WehlerSurface s = input_surface(run);
  const auto sus = run.stage("probe", [&] { return singularity_probe(s, run.cfg.trials, run.cfg.seed); });
  json list = json::array();
  for (const auto& x : sus) {
    json pt = json::array();
    for (int a = 0; a < 3; ++a) pt.push_back({io::complex_pair(x.point.p[a].u), io::complex_pair(x.point.p[a].v)});
    list.push_back({{"point", pt}, {"residual", x.point.residual}, {"gradient", x.gradient}});
  }
  return dump({{"trials", run.cfg.trials}, {"suspects", list}, {"advisory", true}});
}

std::string wehler_density(Run& run) {
  const WehlerSurface s = input_surface(run);
  const std::string& pr = run.cfg.proj;
  auto axis = [](char ch) {
    switch (ch) {
      case 'x': return Axis::X;
      case 'y': return Axis::Y;
      case 'z': return Axis::Z;
    }
    throw UsageError("--proj expects two of x, y, z");
  };
  if (pr.size() != 2 || pr[0] == pr[1]) throw UsageError("--proj expects two distinct letters among x, y, z");
  const Axis a = axis(pr[0]), b = axis(pr[1]);
  const SurfacePoint p0 = random_surface_point(s, run.cfg.seed, 0, run.cfg.wtol);
  return run.stage("density", [&] { return orbit_density_pgm(s, p0, run.cfg.iters, a, b, 512, run.cfg.wtol); });
}

// ---- blanc -----------------------------------------------------------------

BlancMap input_blanc(Run& run) {
  std::optional<PlaneCubic> cubic;
  std::vector<P2Point> base;
  if (!run.cfg.cubic.empty()) {
    const json j = run.load_json(run.cfg.cubic);
    cubic = io::parse_cubic(j);
    if (j.is_object() && j.contains("base_points")) base = io::parse_base_points(j);
  } else {
    cubic = random_cubic(run.cfg.seed);
  }
  if (base.empty()) {
    if (run.cfg.l < 1) throw UsageError("--l must be at least 1");
    for (int i = 0; i < run.cfg.l; ++i) base.push_back(random_cubic_point(*cubic, run.cfg.seed, static_cast<std::uint64_t>(i)));
  }
  return BlancMap(*cubic, base);
}

struct Defects {
  std::vector<std::pair<std::size_t, double>> rows;
  std::size_t skipped = 0;
  double max = 0;
};

std::string defect_report(Run& run, const std::string& check, const BlancMap& b, const Defects& d, double tolerance) {
  if (!run.cfg.csv.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "index,defect\n";
    for (const auto& [i, v] : d.rows) os << i << ',' << v << '\n';
    io::write_file(run.cfg.csv, os.str());
  }
  json base = json::array();
  for (const auto& q : b.base_points()) base.push_back(io::point_json(q));
  return dump({{"check", check},
               {"l", b.length()},
               {"points", d.rows.size()},
               {"skipped", d.skipped},
               {"max_defect", d.max},
               {"tolerance", tolerance},
               {"pass", d.max <= tolerance},
               {"base_points", base}});
}

template <class Draw, class Eval>
Defects collect(std::size_t want, Draw draw, Eval eval) {
  Defects d;
  for (std::size_t i = 0; d.rows.size() < want && i < 20 * want; ++i) {
    try {
      const double v = eval(draw(i));
      d.rows.emplace_back(i, v);
      d.max = std::max(d.max, v);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Indeterminate && e.code() != ErrorCode::OnCubic && e.code() != ErrorCode::ChartFailure) throw;
      ++d.skipped;
    }
  }
  return d;
}

std::string blanc_check_involution(Run& run) {
  const BlancMap b = input_blanc(run);
  const std::size_t n = run.cfg.points ? run.cfg.points : 1000;
  // each sigma_{q_i} separately, and the composed map against its inverse
  const Defects d = run.stage("involution", [&] {
    return collect(
        n, [&](std::size_t i) { return random_plane_point(run.cfg.seed ^ 0x1a2b, i); },
        [&](const P2Point& p) {
          double m = chordal(blanc_inverse(b, blanc_compose(b, p)), p);
          for (const auto& q : b.base_points()) m = std::max(m, chordal(sigma_q(b.cubic(), q, sigma_q(b.cubic(), q, p)), p));
          return m;
        });
  });
  return defect_report(run, "involution", b, d, 1e-10);
}

std::string blanc_check_fixed_cubic(Run& run) {
  const BlancMap b = input_blanc(run);
  const std::size_t n = run.cfg.points ? run.cfg.points : 100;
  const Defects d = run.stage("fixed_cubic", [&] {
    return collect(
        n, [&](std::size_t i) { return random_cubic_point(b.cubic(), run.cfg.seed ^ 0x3c4d, i); },
        [&](const P2Point& p) { return chordal(blanc_compose(b, p), p); });
  });
  return defect_report(run, "fixed_cubic", b, d, 1e-9);
}

std::string blanc_check_two_form(Run& run) {
  const BlancMap b = input_blanc(run);
  const std::size_t n = run.cfg.points ? run.cfg.points : 100;
  const Defects d = run.stage("two_form", [&] {
    return collect(
        n, [&](std::size_t i) { return random_plane_point(run.cfg.seed ^ 0x5e6f, i); },
        [&](const P2Point& p) { return two_form_check(b, p); });
  });
  return defect_report(run, "two_form", b, d, b.length() == 1 ? 1e-6 : 1e-5);
}

std::string blanc_orbit(Run& run) {
  const BlancMap b = input_blanc(run);
  P2Point p = random_plane_point(run.cfg.seed ^ 0x7a8b, 0);
  std::ostringstream os;
  os.precision(17);
  os << "index,x0,x1,x2\n";
  const long long n = run.cfg.orbit_n;
  for (long long i = 0; i < n; ++i) {
    os << i;
    for (const Cx& z : p.x) os << ',' << z.real() << ';' << z.imag();
    os << '\n';
    if (i + 1 < n) p = blanc_compose(b, p);
  }
  return os.str();
}

int resolve_workers(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("KUMMERLAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 4096) throw UsageError("KUMMERLAB_WORKERS must be a positive integer");
    return static_cast<int>(v);
  }
  return kernels::thread_count();
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  Run run;
  run.out = &out;
  run.err = &err;
  Config& c = run.cfg;
  std::vector<std::string> args;
  try {
    // --tol.<name> VALUE or --tol.<name>=VALUE, handled ahead of the parser
    for (std::size_t i = 0; i < args_in.size(); ++i) {
      const std::string& a = args_in[i];
      if (a.rfind("--tol.", 0) != 0) {
        args.push_back(a);
        continue;
      }
      std::string key = a.substr(6), value;
      if (const auto eq = key.find('='); eq != std::string::npos) {
        value = key.substr(eq + 1);
        key = key.substr(0, eq);
      } else if (i + 1 < args_in.size()) {
        value = args_in[++i];
      } else {
        throw UsageError("--tol." + key + " needs a value");
      }
      const auto& table = tolerance_table();
      const auto it = table.find(key);
      if (it == table.end()) throw UsageError("unknown tolerance '" + key + "'");
      char* end = nullptr;
      const double v = std::strtod(value.c_str(), &end);
      if (end == value.c_str() || *end != '\0' || !(v >= it->second.lo && v <= it->second.hi)) {
        std::ostringstream os;
        os << "--tol." << key << " must lie in [" << it->second.lo << ", " << it->second.hi << "]";
        throw UsageError(os.str());
      }
      c.tol[key] = v;
      c.wtol.*(it->second.field) = v;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Automorphism dynamics laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_option("--seed", c.seed, "RNG seed");
  app.add_option("--workers", c.workers, "worker threads (default: KUMMERLAB_WORKERS or all cores)")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "write the result here, with a manifest next to it");

  std::map<CLI::App*, std::function<std::string(Run&)>> handlers;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<std::string(Run&)> h) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    handlers[s] = std::move(h);
    return s;
  };

  CLI::App* lattice = app.add_subcommand("lattice", "cohomological invariants")->require_subcommand(1);
  CLI::App* torus = app.add_subcommand("torus", "linear maps of complex tori and their quotients")->require_subcommand(1);
  CLI::App* wehler = app.add_subcommand("wehler", "dynamics on (2,2,2) surfaces")->require_subcommand(1);
  CLI::App* blanc = app.add_subcommand("blanc", "Cremona involutions fixing a plane cubic")->require_subcommand(1);
  for (CLI::App* g : {lattice, torus, wehler, blanc}) g->fallthrough();

  auto matrix_opts = [&](CLI::App* s) {
    s->add_option("--matrix", c.matrix, "integer matrix as JSON");
    s->add_option("--file", c.file, "JSON file with the matrix");
  };
  {
    auto* s = leaf(lattice, "degree", "dynamical degree of an integer matrix", lattice_degree);
    matrix_opts(s);
    s->add_option("--gram", c.gram, "Gram matrix; adds the splitting of the characteristic polynomial");
  }
  leaf(lattice, "salem", "classify a polynomial", lattice_salem)->add_option("--poly", c.poly, "coefficients, or lehmer | pisot");
  {
    auto* s = leaf(lattice, "rank2", "rank-2 lattice analysis", lattice_rank2);
    s->add_option("--gram", c.gram, "2x2 Gram matrix as JSON");
    s->add_option("--bound", c.bound, "search bound")->check(CLI::PositiveNumber);
  }
  leaf(lattice, "wehler-action", "action of the three involutions on (2,2,2) classes", lattice_wehler_action);
  leaf(lattice, "enriques", "the lattice U + (-E8)", lattice_enriques);

  auto torus_opts = [&](CLI::App* s) {
    matrix_opts(s);
    s->add_option("--tau", c.tau, "lattice parameter re,im");
    s->add_option("--quotient", c.quotient, "none | kummer | eta_tau");
  };
  auto dim_opts = [&](CLI::App* s) {
    s->add_option("--samples", c.samples);
    s->add_option("--probes", c.probes);
    s->add_option("--rmax", c.rmax);
    s->add_option("--rmin", c.rmin);
    s->add_option("--radii", c.radii);
  };
  {
    auto* s = leaf(torus, "lyapunov", "exact and QR Lyapunov exponents", torus_lyapunov);
    torus_opts(s);
    s->add_option("--steps", c.steps, "QR orbit length");
  }
  {
    auto* s = leaf(torus, "fix-count", "number of fixed points of f^n", torus_fix_count);
    torus_opts(s);
    s->add_option("--n", c.n);
  }
  {
    auto* s = leaf(torus, "fix-enum", "enumerate Fix(f^n) exactly (CSV)", torus_fix_enum);
    torus_opts(s);
    s->add_option("--n", c.n);
    s->add_option("--cap", c.cap);
  }
  {
    auto* s = leaf(torus, "equidist", "Weyl sums over a periodic ensemble", torus_equidist);
    torus_opts(s);
    s->add_option("--n", c.n);
    s->add_option("--kmax", c.kmax);
    s->add_option("--ensemble", c.ensemble, "CSV written by fix-enum");
    s->add_option("--cap", c.cap);
  }
  {
    auto* s = leaf(torus, "dimension", "local dimension of Haar measure", torus_dimension);
    torus_opts(s);
    dim_opts(s);
  }
  {
    auto* s = leaf(torus, "rigidity", "rigidity report for the exact control", torus_rigidity);
    torus_opts(s);
    dim_opts(s);
    s->add_option("--steps", c.steps, "QR orbit length");
  }

  auto surface_opts = [&](CLI::App* s) {
    s->add_option("--surface", c.surface, "surface JSON file");
    s->add_flag("--random", c.random, "random surface from --seed (default without --surface)");
    s->add_flag("--real", c.real, "random surface with real coefficients");
  };
  auto newton_opts = [&](CLI::App* s, int nmax) {
    c.nmax = nmax;
    s->add_option("--nmax", c.nmax, "largest period");
    s->add_option("--seeds", c.seeds, "Newton starts per period");
  };
  // defaults of --nmax differ per subcommand; resolved after parsing
  int saddles_nmax_default = 3;
  {
    auto* s = leaf(wehler, "orbit", "forward orbit as CSV", wehler_orbit);
    surface_opts(s);
    s->add_option("--n", c.orbit_n, "iterations");
  }
  CLI::App* saddles = leaf(wehler, "saddles", "periodic points by Newton (CSV)", wehler_saddles);
  surface_opts(saddles);
  newton_opts(saddles, 5);
  for (const char* name : {"lyapunov", "rigidity"}) {
    auto* s = leaf(wehler, name, name == std::string("lyapunov") ? "Lyapunov exponents from saddles" : "rigidity report",
                   name == std::string("lyapunov") ? wehler_lyapunov : wehler_rigidity);
    surface_opts(s);
    newton_opts(s, 5);
    s->add_option("--probes", c.probes);
    s->add_option("--radii", c.radii);
  }
  {
    auto* s = leaf(wehler, "probe", "advisory singularity search", wehler_probe);
    surface_opts(s);
    s->add_option("--trials", c.trials);
  }
  {
    auto* s = leaf(wehler, "density", "orbit density image (PGM)", wehler_density);
    surface_opts(s);
    s->add_option("--proj", c.proj, "coordinate pair: xy | xz | yz");
    s->add_option("--iters", c.iters);
  }

  auto blanc_opts = [&](CLI::App* s) {
    s->add_option("--cubic", c.cubic, "cubic JSON file (coeffs, optional base_points)");
    s->add_option("--l", c.l, "number of random base points");
    s->add_option("--points", c.points, "test points");
    s->add_option("--csv", c.csv, "per-point defects as CSV");
  };
  blanc_opts(leaf(blanc, "check-involution", "sigma_q twice is the identity", blanc_check_involution));
  blanc_opts(leaf(blanc, "check-fixed-cubic", "points of the cubic are fixed", blanc_check_fixed_cubic));
  blanc_opts(leaf(blanc, "check-two-form", "invariance of dx dy / P", blanc_check_two_form));
  {
    auto* s = leaf(blanc, "orbit", "orbit as CSV", blanc_orbit);
    blanc_opts(s);
    s->add_option("--n", c.orbit_n, "points");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = nullptr;
  for (auto& [sub, h] : handlers)
    if (sub->parsed()) chosen = sub;
  if (!chosen) {
    err << "error: no command given\n";
    return 2;
  }
  c.command = chosen->get_parent()->get_name() + " " + chosen->get_name();
  if (chosen == saddles && saddles->count("--nmax") == 0) c.nmax = saddles_nmax_default;

  const auto t0 = Clock::now();
  try {
    c.workers = resolve_workers(c.workers);
    kernels::set_thread_count(c.workers);
    const std::string body = handlers[chosen](run);
    emit(run, body, std::chrono::duration<double>(Clock::now() - t0).count(), args);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalInvariant ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace kummerlab::cli
