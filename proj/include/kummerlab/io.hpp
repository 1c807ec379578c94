#pragma once

#include "kummerlab/blanc.hpp"
#include "kummerlab/lattice.hpp"
#include "kummerlab/periodic.hpp"
#include "kummerlab/rigidity.hpp"
#include "kummerlab/spectral.hpp"
#include "kummerlab/torus.hpp"
#include "kummerlab/wehler.hpp"
#include "kummerlab/wehler_newton.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kummerlab::io {

using nlohmann::json;

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

/// 15 significant digits.
std::string decimal15(double v);
std::string decimal15(long double v);

/// Exact integer: JSON number when |v| <= 2^53, decimal string otherwise.
json integer(const BigInt& v);
json complex_pair(Cx z);
Cx parse_complex(const json& j);

/// Accepts {"dim": n, "entries": [[...]]} or a bare array of rows. Entries
/// may be integers or decimal strings.
IntMatrix parse_matrix(const json& j);
json matrix_json(const IntMatrix& m);
IntPolynomial parse_polynomial(const json& j);  // constant term first
json polynomial_json(const IntPolynomial& p);

json to_json(const SpectralReport& r);
json to_json(const Splitting& s);
json to_json(const Rank2Analysis& r);
json to_json(const Signature& s);
json to_json(const LyapunovReport& r);
json to_json(const WeylReport& r);
json to_json(const DimensionEstimate& d);
json to_json(const RigidityReport& r);

/// {"matrix": [[a,b],[c,d]], "tau": {"re":..,"im":..}, "quotient": "none"}
TorusAutomorphism parse_automorphism(const json& j);
json automorphism_json(const TorusAutomorphism& f);

/// period,x1,y1,x2,y2 with "p/q" coordinates
std::string ensemble_csv(const PeriodicEnsemble& e);
PeriodicEnsemble parse_ensemble_csv(const std::string& text);

/// {"coeffs": [i][j][k] -> [re, im]}, i,j,k exponents of u_x,u_y,u_z.
WehlerSurface parse_surface(const json& j);
json surface_json(const WehlerSurface& s);

/// Complex numbers in CSV cells are written "re;im".
std::string saddles_csv(const std::vector<SaddleOrbit>& orbits);

/// {"coeffs": [[re,im] x 10]} (graded-lex), optional "base_points": [[[re,im] x 3], ...]
PlaneCubic parse_cubic(const json& j);
std::vector<P2Point> parse_base_points(const json& j);
json cubic_json(const PlaneCubic& c);
json point_json(const P2Point& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace kummerlab::io
