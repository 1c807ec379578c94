#include "doctest.h"

#include "cli.hpp"
#include "kummerlab/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

using kummerlab::io::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kummerlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("kummerlab_test_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("lattice degree") {
  const Result r = cli({"lattice", "degree", "--matrix", "[[2,1],[1,1]]"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["lambda_f"] == "2.61803398874989");
  CHECK(j["classification"] == "RECIPROCAL_QUADRATIC");
  CHECK(j["char_poly"] == json::array({1, -3, 1}));
  CHECK(j["kummer_possible"] == true);
}

TEST_CASE("object form of the matrix and large coefficients") {
  const Result r = cli({"lattice", "degree", "--matrix", R"({"dim":2,"entries":[[100000000,1],[0,100000000]]})"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["char_poly"][0] == "10000000000000000");
  CHECK(j["char_poly"][1] == -200000000);
}

TEST_CASE("lattice wehler-action") {
  const Result r = cli({"lattice", "wehler-action"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["report"]["lambda_f"] == "17.9442719099992");
  CHECK(j["report"]["kummer_possible"] == true);
  CHECK(j["report"]["min_poly_degree"] == 2);
  CHECK(j["involution_check"] == json::array({true, true, true}));
  CHECK(j["splitting"]["psi"] == json::array({1, -18, 1}));
}

TEST_CASE("lattice salem lehmer") {
  const Result r = cli({"lattice", "salem", "--poly", "lehmer"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["classification"] == "SALEM");
  CHECK(j["kummer_possible"] == false);
  CHECK(j["min_poly_degree"] == 10);
  CHECK(j["measure_verdict"] == "μ_f singular");
}

TEST_CASE("lattice rank2 and enriques") {
  Result r = cli({"lattice", "rank2", "--gram", "[[2,11],[11,2]]"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["represents_zero"] == false);
  CHECK(j["aut_infinite"] == true);
  r = cli({"lattice", "enriques"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["signature"]["pos"] == 1);
  CHECK(j["signature"]["neg"] == 9);
  CHECK(j["determinant"] == -1);
}

TEST_CASE("malformed input exits 2 with one line") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"lattice", "degree", "--matrix", "[[2,1],[1"},
                                                                {"lattice", "degree", "--matrix", "[[1,2],[3]]"},
                                                                {"lattice", "degree", "--matrix", "[[1,2],[2,4]]"},
                                                                {"lattice", "salem"},
                                                                {"torus", "fix-count", "--matrix", "[[1,1],[0,1]]"},
                                                                {"nosuch"}}) {
    const Result r = cli(args);
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
  }
  const Result r = cli({"lattice", "degree", "--matrix", "[[2,1],[1"});
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("tolerance overrides") {
  CHECK(cli({"--tol.membership", "1", "lattice", "enriques"}).code == 2);
  CHECK(cli({"--tol.nonsense=1e-9", "lattice", "enriques"}).code == 2);
  CHECK(cli({"--tol.membership=1e-9", "lattice", "enriques"}).code == 0);
  CHECK(cli({"lattice", "enriques", "--tol.replay", "1e-10"}).code == 0);
}

TEST_CASE("worker count from the environment") {
  setenv("KUMMERLAB_WORKERS", "zero", 1);
  CHECK(cli({"lattice", "enriques"}).code == 2);
  setenv("KUMMERLAB_WORKERS", "2", 1);
  CHECK(cli({"lattice", "enriques"}).code == 0);
  unsetenv("KUMMERLAB_WORKERS");
  CHECK(cli({"--workers", "0", "lattice", "enriques"}).code == 2);
}

TEST_CASE("torus fix-count and fix-enum / equidist pipeline with manifest") {
  Result r = cli({"torus", "fix-count", "--matrix", "[[2,1],[1,1]]", "--n", "3"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 256);

  const std::string csv = temp_path("ens.csv");
  r = cli({"--out", csv, "torus", "fix-enum", "--n", "2"});
  REQUIRE(r.code == 0);
  const std::string body = kummerlab::io::read_file(csv);
  CHECK(body.rfind("period,x1,y1,x2,y2\n", 0) == 0);
  CHECK(std::count(body.begin(), body.end(), '\n') == 26);
  const json m = json::parse(kummerlab::io::read_file(csv + ".manifest.json"));
  CHECK(m["output_fnv1a64"] == kummerlab::io::hex64(kummerlab::io::fnv1a64(body)));
  CHECK(m["config"]["command"] == "torus fix-enum");
  CHECK(m.contains("wall_time_s"));

  r = cli({"torus", "equidist", "--ensemble", csv, "--kmax", "3"});
  REQUIRE(r.code == 0);
  const json w = json::parse(r.out);
  CHECK(w["max_deviation"].get<double>() <= 1e-10);
  CHECK(w["points"] == 25);
  std::filesystem::remove(csv);
  std::filesystem::remove(csv + ".manifest.json");
}

TEST_CASE("torus quotients") {
  Result r = cli({"torus", "lyapunov", "--quotient", "kummer"});
  INFO(r.err);
  REQUIRE(r.code == 0);
  r = cli({"torus", "fix-count", "--matrix", "[[0,1],[-1,0]]", "--quotient", "eta_tau", "--tau", "0.3,1.1", "--n", "1"});
  CHECK(r.code == 2);
  r = cli({"torus", "lyapunov", "--quotient", "sideways"});
  CHECK(r.code == 2);
}

TEST_CASE("wehler subcommands") {
  Result r = cli({"--seed", "3", "wehler", "orbit", "--n", "20"});
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 22);
  r = cli({"--seed", "3", "wehler", "saddles", "--nmax", "2", "--seeds", "100"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("period,ux,vx,uy,vy,uz,vz,m1,m2,type\n", 0) == 0);
  r = cli({"--seed", "3", "wehler", "density", "--proj", "xz", "--iters", "1000"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("P5 512 512 255\n", 0) == 0);
  CHECK(cli({"wehler", "density", "--proj", "xx"}).code == 2);
  CHECK(cli({"wehler", "rigidity", "--nmax", "12"}).code == 2);
}

TEST_CASE("surface file round trip") {
  const std::string path = temp_path("surface.json");
  kummerlab::io::write_file(path, kummerlab::io::surface_json(kummerlab::random_surface(5)).dump());
  const Result a = cli({"--seed", "5", "wehler", "orbit", "--surface", path, "--n", "5"});
  const Result b = cli({"--seed", "5", "wehler", "orbit", "--n", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::filesystem::remove(path);
}

TEST_CASE("blanc subcommands") {
  Result r = cli({"blanc", "check-two-form", "--l", "1"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["points"] == 100);
  CHECK(j["max_defect"].get<double>() <= 1e-6);
  r = cli({"blanc", "check-fixed-cubic"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["max_defect"].get<double>() <= 1e-9);
  r = cli({"blanc", "check-involution", "--l", "2", "--points", "200"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["pass"] == true);
  r = cli({"blanc", "orbit", "--n", "100"});
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 101);
  CHECK(r.out.find("nan") == std::string::npos);
  CHECK(r.out.find("inf") == std::string::npos);
}

TEST_CASE("blanc base point off the cubic") {
  const std::string path = temp_path("cubic.json");
  json c = kummerlab::io::cubic_json(kummerlab::random_cubic(2));
  c["base_points"] = json::array({json::array({json::array({1.0, 0.0}), json::array({2.0, 0.0}), json::array({3.0, 0.0})})});
  kummerlab::io::write_file(path, c.dump());
  const Result r = cli({"blanc", "check-involution", "--cubic", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("not on the cubic") != std::string::npos);
  std::filesystem::remove(path);
}

}
