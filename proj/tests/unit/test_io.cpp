#include <doctest.h>

#include <filesystem>
#include <functional>
#include <iterator>
#include <fstream>
#include <random>
#include <string>

#include "generators.hpp"
#include "helpers.hpp"
#include "hom3lie/error.hpp"
#include "hom3lie/fixtures.hpp"
#include "hom3lie/io.hpp"

using namespace hom3lie;
using hom3lie::io::json;
using hom3lie::testing::diag;
using hom3lie::testing::e;
using hom3lie::testing::vec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("hom3lie-io-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string parse_message(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::parse_error);
    return err.what();
  }
  FAIL("no parse error");
  return {};
}

void write(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
}

}  // namespace

TEST_CASE("rationals and matrices") {
  CHECK(io::to_json(Rat(-3, 4)) == json("-3/4"));
  CHECK(io::to_json(Rat(5)) == json("5"));
  CHECK(io::rat_from_json(json(7), "") == 7);
  CHECK(io::rat_from_json(json("6/8"), "") == Rat(3, 4));
  parse_message([] { (void)io::rat_from_json(json(1.5), "/x"); });
  parse_message([] { (void)io::rat_from_json(json("1/0"), "/x"); });

  const Mat m = diag({1, 2});
  CHECK(io::mat_from_json(io::to_json(m), "") == m);
  CHECK(io::mat_from_json(json::array(), "", 3).cols() == 3);
  const std::string msg = parse_message([] {
    (void)io::mat_from_json(json::parse(R"([["1","2"],["3"]])"), "/gram");
  });
  CHECK(msg.find("/gram") != std::string::npos);
}

TEST_CASE("algebra round trip") {
  testgen::Rng rng(31);
  for (const auto& f : fixtures::catalog()) {
    CAPTURE(f.name);
    const json j = io::algebra_to_json(f.algebra);
    CHECK(io::algebra_from_json(j) == f.algebra);
    CHECK(io::dump(j) == io::dump(io::algebra_to_json(io::algebra_from_json(json::parse(io::dump(j))))));
  }
  Hom3LieAlgebra L(4, testgen::random_mat(rng, 4, 4));
  L.set_bracket(0, 2, 3, testgen::random_vec(rng, 4));
  CHECK(io::algebra_from_json(io::algebra_to_json(L)) == L);
}

TEST_CASE("algebra schema") {
  const json ok = json::parse(R"({"dim": 3, "brackets": [{"args": [1, 2, 3], "value": {"1": 1}}]})");
  CHECK(io::algebra_from_json(ok) == fixtures::l3());

  auto bad = [](const char* text) {
    return parse_message([&] { (void)io::algebra_from_json(json::parse(text)); });
  };
  CHECK(bad(R"({"brackets": []})").find("dim") != std::string::npos);
  CHECK(bad(R"({"dim": 3, "brackets": [{"args": [2, 1, 3], "value": {}}]})")
            .find("/brackets/0/args") != std::string::npos);
  CHECK(bad(R"({"dim": 3, "brackets": [{"args": [1, 2, 4], "value": {}}]})")
            .find("/brackets/0/args/2") != std::string::npos);
  CHECK(bad(R"({"dim": 3, "brackets": [{"args": [1, 2, 3], "value": {"4": 1}}]})")
            .find("/brackets/0/value") != std::string::npos);
  bad(R"({"dim": 3, "brackets": [{"args": [1, 2, 3], "value": {}}, {"args": [1, 2, 3], "value": {}}]})");
  bad(R"({"dim": 3, "alpha": [["1", "0"], ["0", "1"]]})");
  bad(R"({"dim": -1})");
  bad(R"([1, 2])");
}

TEST_CASE("representation and cocycle files") {
  TempDir tmp;
  const auto L = fixtures::l3();
  write(tmp.path / "L3.json", io::dump(io::algebra_to_json(L)));

  const Representation R = coadjoint_rep(L);
  const json rj = io::representation_to_json(R, json("L3.json"));
  write(tmp.path / "rep.json", io::dump(rj));
  const auto rf = io::load_representation(tmp.path / "rep.json");
  CHECK(rf.rep == R);
  CHECK(rf.base.algebra == L);
  REQUIRE(rf.base.path);
  CHECK(io::algebra_field(rf.base) == json("L3.json"));

  const json embedded = io::representation_to_json(R, io::algebra_to_json(L));
  const auto ef = io::representation_from_json(embedded, tmp.path);
  CHECK(ef.base.algebra == L);
  CHECK_FALSE(ef.base.path);

  Cocycle th(3, 3);
  th.set(0, 1, 2, vec({1, 0, -2}));
  write(tmp.path / "theta.json", io::dump(io::cocycle_to_json(th, json("L3.json"))));
  const auto cf = io::load_cocycle(tmp.path / "theta.json");
  CHECK(cf.theta == th);
  CHECK(cf.base.algebra == L);

  json wrong = rj;
  wrong["rho"][0]["matrix"] = json::parse(R"([["1"]])");
  const std::string msg = parse_message([&] { (void)io::representation_from_json(wrong, tmp.path); });
  CHECK(msg.find("/rho/0/matrix") != std::string::npos);
  json missing = rj;
  missing["algebra"] = "nope.json";
  parse_message([&] { (void)io::representation_from_json(missing, tmp.path); });
}

TEST_CASE("forms, subspaces and matrix files") {
  const BilinForm q = hyperbolic_form(2);
  CHECK(io::form_from_json(io::form_to_json(q)) == q);
  const json nonsym = json::parse(R"({"dim": 2, "gram": [[1, 1], [0, 1]]})");
  parse_message([&] { (void)io::form_from_json(nonsym); });
  CHECK(io::gram_from_json(nonsym)(0, 1) == 1);

  const Subspace S = Subspace::span(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  CHECK(io::subspace_from_json(io::subspace_to_json(S)) == S);
  const json dup = json::parse(R"({"ambient_dim": 2, "basis": [[1, 0], [2, 0]]})");
  CHECK(io::subspace_from_json(dup).dim() == 1);

  testgen::Rng rng(32);
  const Mat m = testgen::random_mat(rng, 2, 3);
  CHECK(io::matrix_file_from_json(io::matrix_file_to_json(m)) == m);
  parse_message([] {
    (void)io::matrix_file_from_json(json::parse(R"({"rows": 2, "cols": 1, "matrix": [[1]]})"));
  });
}

TEST_CASE("files") {
  TempDir tmp;
  const fs::path p = tmp.path / "A4.json";
  const std::string text = io::dump(io::algebra_to_json(fixtures::a4()));
  io::write_file_atomic(p, text);
  CHECK(io::load_algebra(p) == fixtures::a4());
  CHECK_FALSE(fs::exists(tmp.path / "A4.json.tmp"));
  io::write_file_atomic(p, text);
  std::ifstream in(p, std::ios::binary);
  const std::string back((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(back == text);
  CHECK(text.back() == '\n');

  write(tmp.path / "broken.json", "{\"dim\": 3,");
  const std::string msg = parse_message([&] { (void)io::load_algebra(tmp.path / "broken.json"); });
  CHECK(msg.find("broken.json") != std::string::npos);
  parse_message([&] { (void)io::load_algebra(tmp.path / "absent.json"); });

  write(tmp.path / "bad.json", R"({"dim": 2, "brackets": [{"args": [1, 2], "value": {}}]})");
  const std::string where = parse_message([&] { (void)io::load_algebra(tmp.path / "bad.json"); });
  CHECK(where.find("bad.json:/brackets/0/args") != std::string::npos);
}
