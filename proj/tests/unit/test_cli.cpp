#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hom3lie/cli.hpp"
#include "hom3lie/fixtures.hpp"
#include "hom3lie/io.hpp"

using namespace hom3lie;
using hom3lie::io::json;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = HOM3LIE_FIXTURE_DIR;
const fs::path kExamples = kFixtures.parent_path() / "examples";

struct Run {
  int code;
  std::string out;
  std::string err;
  json verdict() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fix(const char* name) { return (kFixtures / name).string(); }
std::string ex(const char* name) { return (kExamples / name).string(); }

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("hom3lie-cli-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("verify") {
  const Run ok = run({"--json", "verify", fix("A4.json")});
  CHECK(ok.code == 0);
  const json v = ok.verdict();
  CHECK(v["command"] == "verify");
  CHECK(v["flags"]["hom_jacobi"] == true);
  CHECK(v["flags"]["multiplicative"] == true);
  CHECK(v["exit_code"] == 0);

  const Run broken = run({"--json", "verify", ex("A4-broken.json")});
  CHECK(broken.code == 1);
  CHECK(broken.verdict()["flags"]["hom_jacobi"] == false);
  CHECK(broken.verdict()["witness_count"].get<int>() > 0);
  CHECK(broken.verdict()["witnesses"].size() <= 16);

  const Run text = run({"verify", fix("L3.json")});
  CHECK(text.code == 0);
  CHECK(text.out.rfind("verify: PASS", 0) == 0);

  TempDir tmp;
  const std::string empty = (tmp.path / "empty.json").string();
  io::write_file_atomic(empty, "{\"dim\": 3, \"brackets\": []}\n");
  CHECK(run({"verify", empty}).code == 0);

  CHECK(run({"verify", ex("L3h0.json"), "--checks", "regular"}).code == 1);
  CHECK(run({"verify", ex("L3h0.json"), "--checks", "skew,jacobi"}).code == 0);
  CHECK(run({"verify", fix("L3.json"), "--checks", "bogus"}).code == 2);
}

TEST_CASE("malformed input and usage errors") {
  const Run bad = run({"--json", "verify", ex("malformed.json")});
  CHECK(bad.code == 2);
  CHECK(bad.verdict()["error"]["code"] == "parse-error");
  CHECK(run({"verify", (kExamples / "absent.json").string()}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--json", "--text", "verify", fix("L3.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"extend", "t-star", fix("L3.json")}).code == 2);
  // rep file over a different algebra
  CHECK(run({"extend", "t-star", fix("N4.json"), ex("L3-theta0.json")}).code == 2);
}

TEST_CASE("derivations") {
  const Run r = run({"--json", "derivations", fix("L3.json"), "--k", "0", "--inner"});
  CHECK(r.code == 0);
  const json v = r.verdict();
  REQUIRE(v["data"]["derivations"].size() == 1);
  CHECK(v["data"]["derivations"][0]["dim"] == 6);
  CHECK(v["flags"]["basis_verified"] == true);
  CHECK(v["flags"]["inner_contained"] == true);

  CHECK(run({"--json", "derivations", fix("AB3.json"), "--k", "0"}).verdict()["data"]["derivations"][0]["basis"].size() == 9);

  const Run all = run({"--json", "--max-k", "2", "derivations", fix("AB3s.json")});
  CHECK(all.code == 0);
  CHECK(all.verdict()["data"]["derivations"].size() == 3);

  const Run neg = run({"--json", "derivations", fix("AB3s.json"), "--k", "-1"});
  CHECK(neg.code == 0);
  CHECK(neg.verdict()["data"]["derivations"][0]["dim"] == 3);

  const Run nonreg = run({"--json", "derivations", ex("L3h0.json"), "--k", "-1"});
  CHECK(nonreg.code == 1);
  CHECK(nonreg.verdict()["error"]["code"] == "not-regular");
  CHECK(run({"derivations", fix("L3.json"), "--k", "5"}).code == 1);
}

TEST_CASE("extend") {
  TempDir tmp;
  const std::string out = (tmp.path / "sum.json").string();
  const Run sum = run({"extend", "direct-sum", fix("L3.json"), fix("N4.json"), "--out", out});
  CHECK(sum.code == 0);
  CHECK(io::load_algebra(out) == direct_sum(fixtures::l3(), fixtures::n4()));

  const Run ab = run({"--json", "extend", "direct-sum", fix("AB3.json"), fix("AB3.json")});
  CHECK(ab.code == 0);
  const Hom3LieAlgebra ab6 = io::algebra_from_json(ab.verdict()["data"]["algebra"]);
  CHECK(ab6.dim() == 6);
  CHECK(ab6.is_abelian());

  const Run semi = run({"--json", "extend", "semidirect", fix("L3.json"), "adjoint"});
  CHECK(semi.code == 0);
  CHECK(io::algebra_from_json(semi.verdict()["data"]["algebra"]).dim() == 6);

  const std::string tstar = (tmp.path / "t.json").string();
  const std::string form = (tmp.path / "q.json").string();
  const Run t = run({"--json", "extend", "t-star", fix("L3.json"), ex("L3-theta0.json"), "--out",
                     tstar, "--out-form", form});
  CHECK(t.code == 0);
  CHECK(io::load_form(form) == hyperbolic_form(3));
  CHECK(run({"metric", tstar, form}).code == 0);

  const std::string d = (tmp.path / "d.json").string();
  io::write_file_atomic(d, io::dump(io::matrix_file_to_json(Mat::identity(3))));
  const Run der = run({"--json", "extend", "derivation", fix("L3.json"), d});
  CHECK(der.verdict()["data"]["is_alpha_derivation"] == false);
  CHECK(der.code == 1);
}

TEST_CASE("series and metric") {
  const Run s = run({"--json", "series", fix("N4.json"), "--kind", "central-descending"});
  CHECK(s.code == 0);
  CHECK(s.verdict()["data"]["dims"] == json({4, 1, 0}));
  CHECK(s.verdict()["data"]["length"] == 2);
  const Run a = run({"--json", "series", fix("A4.json")});
  CHECK(a.verdict()["data"]["length"].is_null());
  CHECK(a.verdict()["data"]["stabilized"] == true);

  CHECK(run({"metric", ex("N4-tstar.json"), ex("q8.json")}).code == 0);
  const Run m = run({"--json", "metric", ex("N4-tstar-noncyclic.json"), ex("q8.json")});
  CHECK(m.code == 1);
  CHECK(m.verdict()["flags"]["invariant"] == false);
  CHECK(run({"metric", fix("L3.json"), ex("q8.json")}).code == 2);
}

TEST_CASE("reconstruct bundle") {
  TempDir tmp;
  const Run r = run({"--json", "reconstruct", ex("N4-tstar.json"), ex("q8.json"),
                     ex("N4-tstar-ideal.json"), "--out-dir", tmp.path.string()});
  CHECK(r.code == 0);
  CHECK(r.verdict()["flags"]["isometry"] == true);
  CHECK(r.verdict()["data"]["quotient_dim"] == 4);
  for (const char* f : {"quotient.json", "cocycle.json", "tstar.json", "tstar_form.json",
                        "sigma.json", "complement.json", "verdict.json"}) {
    CAPTURE(f);
    CHECK(fs::exists(tmp.path / f));
  }
  CHECK(io::load_algebra(tmp.path / "quotient.json") == fixtures::n4());
  const auto c = io::load_cocycle(tmp.path / "cocycle.json");
  CHECK(c.base.algebra == fixtures::n4());
  CHECK(theta_cyclic_ok(c.base.algebra, c.theta));
  CHECK(run({"metric", (tmp.path / "tstar.json").string(), (tmp.path / "tstar_form.json").string()})
            .code == 0);

  const Run bad = run({"reconstruct", ex("N4-tstar.json"), ex("q8.json"), ex("N4-tstar-ideal.json"),
                       ex("N4-tstar-ideal.json")});
  CHECK(bad.code == 1);
}

TEST_CASE("output is deterministic") {
  for (const char* name : {"L3.json", "A4.json", "N4.json"}) {
    const std::vector<std::string> args{"--json", "derivations", fix(name), "--inner"};
    CHECK(run(args).out == run(args).out);
  }
  TempDir a, b;
  CHECK(run({"fixtures", "--out-dir", a.path.string()}).code == 0);
  CHECK(run({"fixtures", "--out-dir", b.path.string()}).code == 0);
  for (const auto& f : fixtures::catalog()) {
    const std::string file = f.name + ".json";
    CAPTURE(file);
    CHECK(io::dump(io::read_json_file(a.path / file)) == io::dump(io::read_json_file(b.path / file)));
    CHECK(io::load_algebra(a.path / file) == f.algebra);
    CHECK(io::load_algebra(kFixtures / file) == f.algebra);
  }
}
