#include "kummerlab/io.hpp"

#include "kummerlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace kummerlab::io {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string decimal15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string decimal15(long double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  return buf;
}

json integer(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (boost::multiprecision::abs(v) <= limit) return v.convert_to<long long>();
  return v.str();
}

json complex_pair(Cx z) { return json::array({z.real(), z.imag()}); }

Cx parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object() && j.contains("re")) return {j.at("re").get<double>(), j.value("im", 0.0)};
  throw Error(ErrorCode::InvalidInput, "expected a complex number as [re, im]");
}

namespace {

BigInt parse_integer(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const bool neg = !s.empty() && s[0] == '-';
    if (s.empty() || s.find_first_not_of("0123456789", neg ? 1 : 0) != std::string::npos || s.size() == (neg ? 1u : 0u))
      throw Error(ErrorCode::InvalidInput, "malformed integer \"" + s + "\"");
    return BigInt(s);
  }
  throw Error(ErrorCode::InvalidInput, "expected an integer entry");
}

}  // namespace

IntMatrix parse_matrix(const json& j) {
  const json* rows = &j;
  std::size_t dim = 0;
  if (j.is_object()) {
    if (!j.contains("entries")) throw Error(ErrorCode::InvalidInput, "matrix object needs \"entries\"");
    rows = &j.at("entries");
    if (j.contains("dim")) {
      if (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() <= 0) throw Error(ErrorCode::InvalidInput, "bad \"dim\"");
      dim = j.at("dim").get<std::size_t>();
    }
  }
  if (!rows->is_array() || rows->empty()) throw Error(ErrorCode::InvalidInput, "matrix entries must be a non-empty array of rows");
  if (dim == 0) dim = rows->size();
  if (rows->size() != dim) throw Error(ErrorCode::DimensionMismatch, "row count differs from dim");
  std::vector<std::vector<BigInt>> r;
  for (const auto& row : *rows) {
    if (!row.is_array() || row.size() != dim) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    std::vector<BigInt> v;
    for (const auto& e : row) v.push_back(parse_integer(e));
    r.push_back(std::move(v));
  }
  return IntMatrix::from_rows(r);
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(integer(e));
    rows.push_back(jr);
  }
  return {{"dim", m.dim()}, {"entries", rows}};
}

IntPolynomial parse_polynomial(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidInput, "polynomial must be a coefficient list, constant term first");
  std::vector<BigInt> c;
  for (const auto& e : j) c.push_back(parse_integer(e));
  IntPolynomial p(c);
  if (p.is_zero()) throw Error(ErrorCode::InvalidInput, "zero polynomial");
  return p;
}

json polynomial_json(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(integer(c));
  return a;
}

json to_json(const SpectralReport& r) {
  return {{"char_poly", polynomial_json(r.char_poly)},
          {"lambda_f", decimal15(r.lambda_f_ld)},
          {"classification", to_string(r.classification)},
          {"min_poly", polynomial_json(r.min_poly)},
          {"min_poly_degree", r.min_poly_degree},
          {"kummer_possible", r.kummer_possible},
          {"measure_verdict", entropy_measure_verdict(r)}};
}

json to_json(const Splitting& s) {
  return {{"psi", polynomial_json(s.psi)},
          {"cyclotomic_part", polynomial_json(s.cyclotomic_part)},
          {"cyclotomic_orders", s.cyclotomic_orders},
          {"all_cyclotomic", s.all_cyclotomic}};
}

json to_json(const Rank2Analysis& r) {
  json j = {{"represents_zero", r.represents_zero},
            {"represents_minus_two", r.represents_minus_two},
            {"aut_infinite", r.aut_infinite},
            {"minus_two_complete", r.minus_two_complete},
            {"searched_bound", r.searched_bound}};
  j["lambda_psi"] = r.lambda_psi ? json(decimal15(*r.lambda_psi)) : json(nullptr);
  j["fundamental_isometry"] = r.fundamental_isometry ? matrix_json(*r.fundamental_isometry) : json(nullptr);
  j["minus_two_witness"] =
      r.minus_two_witness ? json::array({integer(r.minus_two_witness->first), integer(r.minus_two_witness->second)}) : json(nullptr);
  return j;
}

json to_json(const Signature& s) { return {{"pos", s.pos}, {"neg", s.neg}, {"zero", s.zero}}; }

json to_json(const LyapunovReport& r) {
  return {{"lambda_u", r.lambda_u},     {"lambda_s", r.lambda_s},       {"method", to_string(r.method)},
          {"std_error", r.std_error},   {"std_error_u", r.std_error_u}, {"std_error_s", r.std_error_s},
          {"samples", r.samples}};
}

json to_json(const WeylReport& r) {
  json triv = json::array();
  for (const auto& k : r.trivial) triv.push_back(k);
  return {{"k_max", r.k_max},
          {"frequency_count", r.frequency_count},
          {"max_abs", r.max_abs},
          {"max_abs_nontrivial_free", r.max_abs_nontrivial_free},
          {"max_deviation", r.max_deviation},
          {"trivial_count", r.trivial.size()},
          {"trivial_fraction", r.trivial_fraction},
          {"trivial", triv}};
}

json to_json(const DimensionEstimate& d) {
  return {{"dimension", d.dimension}, {"std_error", d.std_error}, {"probes_used", d.probes_used}, {"empty_probes", d.empty_probes}};
}

json to_json(const RigidityReport& r) {
  json j;
  j["lambda_f"] = decimal15(r.lambda_f);
  j["half_log_lambda_f"] = r.half_log_lambda_f;
  j["lyapunov"] = r.lyapunov ? to_json(*r.lyapunov) : json(nullptr);
  j["cross_check"] = r.cross_check ? to_json(*r.cross_check) : json(nullptr);
  j["dimension"] = r.dimension ? to_json(*r.dimension) : json(nullptr);
  j["gap_u"] = {{"value", r.gap_u.value}, {"sigma", r.gap_u.sigma}};
  j["gap_s"] = {{"value", r.gap_s.value}, {"sigma", r.gap_s.sigma}};
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  j["saddle_count"] = r.saddle_count;
  json c = json::array();
  for (const auto& p : r.census)
    c.push_back({{"period", p.period}, {"found", p.found}, {"saddles", p.saddles}, {"lefschetz", integer(p.lefschetz)}});
  j["census"] = c;
  return j;
}

TorusAutomorphism parse_automorphism(const json& j) {
  if (!j.is_object()) return TorusAutomorphism(parse_matrix(j));
  const json& m = j.contains("matrix") ? j.at("matrix") : j;
  std::complex<double> tau(0, 1);
  if (j.contains("tau")) tau = parse_complex(j.at("tau"));
  Quotient q = Quotient::None;
  if (j.contains("quotient")) q = parse_quotient(j.at("quotient").get<std::string>());
  return TorusAutomorphism(parse_matrix(m), TorusLattice(tau), q);
}

json automorphism_json(const TorusAutomorphism& f) {
  json m = json::array();
  for (int i = 0; i < 2; ++i) m.push_back({f.entry(i, 0), f.entry(i, 1)});
  return {{"matrix", m},
          {"tau", {{"re", f.lattice().tau().real()}, {"im", f.lattice().tau().imag()}}},
          {"quotient", to_string(f.quotient())}};
}

std::string ensemble_csv(const PeriodicEnsemble& e) {
  std::ostringstream os;
  os << "period,x1,y1,x2,y2\n";
  for (const auto& p : e.points) {
    os << e.period;
    for (int i = 0; i < 4; ++i) os << ',' << p.coord_string(i);
    os << '\n';
  }
  return os.str();
}

PeriodicEnsemble parse_ensemble_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  PeriodicEnsemble e;
  std::vector<std::array<std::pair<long long, long long>, 4>> rows;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("period", 0) == 0) continue;
    }
    std::array<std::pair<long long, long long>, 4> c{};
    std::istringstream ls(line);
    std::string cell;
    try {
      if (!std::getline(ls, cell, ',')) throw Error(ErrorCode::InvalidInput, "bad ensemble row");
      e.period = static_cast<unsigned>(std::stoul(cell));
      for (auto& v : c) {
        if (!std::getline(ls, cell, ',')) throw Error(ErrorCode::InvalidInput, "ensemble row needs 4 coordinates");
        const auto slash = cell.find('/');
        v.first = std::stoll(cell.substr(0, slash));
        v.second = slash == std::string::npos ? 1 : std::stoll(cell.substr(slash + 1));
        if (v.second <= 0) throw Error(ErrorCode::InvalidInput, "non-positive denominator");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidInput, "malformed ensemble row: " + line);
    }
    rows.push_back(c);
  }
  if (rows.empty()) throw Error(ErrorCode::EmptyEnsemble, "no points in ensemble file");
  // points of one ensemble share a denominator
  long long den = 1;
  for (const auto& c : rows)
    for (const auto& v : c) den = std::lcm(den, v.second);
  for (const auto& c : rows) {
    RationalTorusPoint p;
    p.den = den;
    for (int i = 0; i < 4; ++i) p.num[i] = c[i].first * (den / c[i].second);
    e.points.push_back(p);
  }
  std::sort(e.points.begin(), e.points.end());
  e.count = e.points.size();
  return e;
}

WehlerSurface parse_surface(const json& j) {
  const json& c = j.is_object() ? j.at("coeffs") : j;
  WehlerSurface::Coeffs k{};
  if (!c.is_array() || c.size() != 3) throw Error(ErrorCode::InvalidInput, "coeffs must be a 3x3x3 array");
  for (int a = 0; a < 3; ++a) {
    if (!c[a].is_array() || c[a].size() != 3) throw Error(ErrorCode::InvalidInput, "coeffs must be a 3x3x3 array");
    for (int b = 0; b < 3; ++b) {
      if (!c[a][b].is_array() || c[a][b].size() != 3) throw Error(ErrorCode::InvalidInput, "coeffs must be a 3x3x3 array");
      for (int d = 0; d < 3; ++d) k[a][b][d] = parse_complex(c[a][b][d]);
    }
  }
  return WehlerSurface(k);
}

json surface_json(const WehlerSurface& s) {
  json c = json::array();
  for (int a = 0; a < 3; ++a) {
    json ja = json::array();
    for (int b = 0; b < 3; ++b) {
      json jb = json::array();
      for (int d = 0; d < 3; ++d) jb.push_back(complex_pair(s.c(a, b, d)));
      ja.push_back(jb);
    }
    c.push_back(ja);
  }
  return {{"coeffs", c}};
}

std::string saddles_csv(const std::vector<SaddleOrbit>& orbits) {
  std::ostringstream os;
  os.precision(17);
  auto cx = [&](Cx z) { os << z.real() << ';' << z.imag(); };
  os << "period,ux,vx,uy,vy,uz,vz,m1,m2,type\n";
  for (const auto& o : orbits) {
    os << o.period;
    for (int a = 0; a < 3; ++a) {
      os << ',';
      cx(o.point.p[a].u);
      os << ',';
      cx(o.point.p[a].v);
    }
    os << ',';
    cx(o.multipliers[0]);
    os << ',';
    cx(o.multipliers[1]);
    os << ',' << to_string(o.type) << '\n';
  }
  return os.str();
}

PlaneCubic parse_cubic(const json& j) {
  const json& c = j.is_object() ? j.at("coeffs") : j;
  if (!c.is_array() || c.size() != 10) throw Error(ErrorCode::InvalidInput, "cubic needs 10 coefficients");
  PlaneCubic::Coeffs k;
  for (int i = 0; i < 10; ++i) k[i] = parse_complex(c[i]);
  return PlaneCubic(k);
}

std::vector<P2Point> parse_base_points(const json& j) {
  const json& b = j.is_object() ? j.at("base_points") : j;
  if (!b.is_array()) throw Error(ErrorCode::InvalidInput, "base_points must be an array of triples");
  std::vector<P2Point> out;
  for (const auto& t : b) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::InvalidInput, "base point must be a homogeneous triple");
    out.emplace_back(Vec3{parse_complex(t[0]), parse_complex(t[1]), parse_complex(t[2])});
  }
  return out;
}

json cubic_json(const PlaneCubic& c) {
  json a = json::array();
  for (const Cx& z : c.coefficients()) a.push_back(complex_pair(z));
  return {{"coeffs", a}};
}

json point_json(const P2Point& p) { return json::array({complex_pair(p.x[0]), complex_pair(p.x[1]), complex_pair(p.x[2])}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << content;
}

}  // namespace kummerlab::io
