#include "hom3lie/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "hom3lie/error.hpp"

namespace hom3lie::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::parse_error, (where.empty() ? std::string("/") : where) + ": " + msg);
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t natural(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return j.get<std::size_t>();
  fail(where, "expected a non-negative integer");
}

/// 1-based index in 1..n, returned 0-based.
std::size_t index(const json& j, std::size_t n, const std::string& where) {
  const std::size_t i = natural(j, where);
  if (i < 1 || i > n) fail(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return i - 1;
}

std::vector<std::size_t> increasing_args(const json& j, std::size_t count, std::size_t n,
                                         const std::string& where) {
  if (!j.is_array() || j.size() != count) {
    fail(where, "expected " + std::to_string(count) + " indices");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(index(j[i], n, at(where, i)));
    if (i > 0 && out[i] <= out[i - 1]) fail(where, "indices must be strictly increasing");
  }
  return out;
}

/// {"l": rat, ...} with 1-based keys.
Vec sparse_from_json(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object of index -> rational");
  Vec v(n);
  for (const auto& [key, value] : j.items()) {
    std::size_t pos = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != key.size() || key.empty() || idx < 1 || idx > n) {
      fail(at(where, key), "key must be an index in 1.." + std::to_string(n));
    }
    v[idx - 1] = rat_from_json(value, at(where, key));
  }
  return v;
}

json sparse_to_json(const Vec& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out[std::to_string(i + 1)] = to_json(v[i]);
  return out;
}

json triples_to_json(const AlternatingTrilinear& t) {
  json out = json::array();
  for (const auto& [tr, value] : t.stored()) {
    out.push_back({{"args", {tr[0] + 1, tr[1] + 1, tr[2] + 1}}, {"value", sparse_to_json(value)}});
  }
  return out;
}

AlternatingTrilinear triples_from_json(const json& j, std::size_t n, std::size_t m,
                                       const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  AlternatingTrilinear t(n, m);
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string w = at(where, e);
    const auto args = increasing_args(field(j[e], "args", w), 3, n, at(w, "args"));
    if (!seen.insert(args).second) fail(w, "repeated triple");
    t.set(args[0], args[1], args[2], sparse_from_json(field(j[e], "value", w), m, at(w, "value")));
  }
  return t;
}

AlgebraRef algebra_ref_from_json(const json& j, const fs::path& dir, const std::string& where) {
  if (j.is_string()) {
    const std::string p = j.get<std::string>();
    const fs::path full = fs::path(p).is_absolute() ? fs::path(p) : dir / p;
    return {load_algebra(full), p};
  }
  return {algebra_from_json(j, where), std::nullopt};
}

}  // namespace

json to_json(const Rat& r) { return to_string(r); }

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rat(std::to_string(j.get<unsigned long long>()))
                                  : Rat(std::to_string(j.get<long long>()));
  }
  if (!j.is_string()) fail(where, "expected a rational string or an integer");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Vec vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rationals");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rat_from_json(j[i], at(where, i));
  return v;
}

Mat mat_from_json(const json& j, const std::string& where, std::optional<std::size_t> cols) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  const std::size_t c = cols ? *cols : (j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0));
  Mat m(j.size(), c);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Vec row = vec_from_json(j[i], at(where, i));
    if (row.size() != c) {
      fail(at(where, i), "row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(c));
    }
    for (std::size_t k = 0; k < c; ++k) m(i, k) = row[k];
  }
  return m;
}

json algebra_to_json(const Hom3LieAlgebra& L) {
  return {{"dim", L.dim()}, {"alpha", to_json(L.alpha())},
          {"brackets", triples_to_json(L.brackets())}};
}

Hom3LieAlgebra algebra_from_json(const json& j, const std::string& where) {
  const std::size_t n = natural(field(j, "dim", where), at(where, "dim"));
  Mat alpha = Mat::identity(n);
  if (j.contains("alpha")) {
    alpha = mat_from_json(j["alpha"], at(where, "alpha"), n);
    if (alpha.rows() != n) fail(at(where, "alpha"), "alpha must be " + std::to_string(n) + "x" +
                                                        std::to_string(n));
  }
  AlternatingTrilinear br(n, n);
  if (j.contains("brackets")) br = triples_from_json(j["brackets"], n, n, at(where, "brackets"));
  return Hom3LieAlgebra(std::move(br), std::move(alpha));
}

json algebra_field(const AlgebraRef& ref) {
  if (ref.path) return *ref.path;
  return algebra_to_json(ref.algebra);
}

json representation_to_json(const Representation& R, const json& algebra) {
  json rho = json::array();
  for (const auto& [p, m] : R.stored()) {
    rho.push_back({{"args", {p[0] + 1, p[1] + 1}}, {"matrix", to_json(m)}});
  }
  return {{"algebra", algebra}, {"module_dim", R.module_dim()}, {"A", to_json(R.A())},
          {"rho", rho}};
}

RepresentationFile representation_from_json(const json& j, const fs::path& dir,
                                            const std::string& where) {
  AlgebraRef base = algebra_ref_from_json(field(j, "algebra", where), dir, at(where, "algebra"));
  const std::size_t n = base.algebra.dim();
  const std::size_t m = natural(field(j, "module_dim", where), at(where, "module_dim"));
  Mat A = Mat::identity(m);
  if (j.contains("A")) {
    A = mat_from_json(j["A"], at(where, "A"), m);
    if (A.rows() != m) fail(at(where, "A"), "A must be " + std::to_string(m) + "x" +
                                                std::to_string(m));
  }
  Representation R(n, std::move(A));
  if (j.contains("rho")) {
    const json& rho = j["rho"];
    const std::string rw = at(where, "rho");
    if (!rho.is_array()) fail(rw, "expected an array");
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t e = 0; e < rho.size(); ++e) {
      const std::string w = at(rw, e);
      const auto args = increasing_args(field(rho[e], "args", w), 2, n, at(w, "args"));
      if (!seen.insert(args).second) fail(w, "repeated pair");
      const Mat mat = mat_from_json(field(rho[e], "matrix", w), at(w, "matrix"), m);
      if (mat.rows() != m) fail(at(w, "matrix"), "matrix must be " + std::to_string(m) + "x" +
                                                     std::to_string(m));
      R.set_rho(args[0], args[1], mat);
    }
  }
  return {std::move(base), std::move(R)};
}

json cocycle_to_json(const Cocycle& theta, const json& algebra) {
  return {{"algebra", algebra}, {"module_dim", theta.module_dim()},
          {"theta", triples_to_json(theta.table())}};
}

CocycleFile cocycle_from_json(const json& j, const fs::path& dir, const std::string& where) {
  AlgebraRef base = algebra_ref_from_json(field(j, "algebra", where), dir, at(where, "algebra"));
  const std::size_t n = base.algebra.dim();
  const std::size_t m = natural(field(j, "module_dim", where), at(where, "module_dim"));
  AlternatingTrilinear t(n, m);
  if (j.contains("theta")) t = triples_from_json(j["theta"], n, m, at(where, "theta"));
  return {std::move(base), Cocycle(std::move(t))};
}

json form_to_json(const BilinForm& B) { return {{"dim", B.dim()}, {"gram", to_json(B.gram())}}; }

Mat gram_from_json(const json& j, const std::string& where) {
  const std::size_t n = natural(field(j, "dim", where), at(where, "dim"));
  Mat g = mat_from_json(field(j, "gram", where), at(where, "gram"), n);
  if (g.rows() != n) fail(at(where, "gram"), "gram must be " + std::to_string(n) + "x" +
                                                 std::to_string(n));
  return g;
}

BilinForm form_from_json(const json& j, const std::string& where) {
  Mat g = gram_from_json(j, where);
  if (g != g.transpose()) fail(at(where, "gram"), "gram must be symmetric");
  return BilinForm(std::move(g));
}

json subspace_to_json(const Subspace& S) {
  return {{"ambient_dim", S.ambient_dim()}, {"basis", to_json(S.basis_matrix())}};
}

Subspace subspace_from_json(const json& j, const std::string& where) {
  const std::size_t n = natural(field(j, "ambient_dim", where), at(where, "ambient_dim"));
  const Mat gens = mat_from_json(field(j, "basis", where), at(where, "basis"), n);
  return Subspace::row_space(gens);
}

json matrix_file_to_json(const Mat& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"matrix", to_json(m)}};
}

Mat matrix_file_from_json(const json& j, const std::string& where) {
  const std::size_t r = natural(field(j, "rows", where), at(where, "rows"));
  const std::size_t c = natural(field(j, "cols", where), at(where, "cols"));
  Mat m = mat_from_json(field(j, "matrix", where), at(where, "matrix"), c);
  if (m.rows() != r) fail(at(where, "matrix"), "expected " + std::to_string(r) + " rows");
  return m;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail(path.string(), e.what());
  }
}

Hom3LieAlgebra load_algebra(const fs::path& path) {
  return algebra_from_json(read_json_file(path), path.string() + ":");
}

RepresentationFile load_representation(const fs::path& path) {
  return representation_from_json(read_json_file(path), path.parent_path(), path.string() + ":");
}

CocycleFile load_cocycle(const fs::path& path) {
  return cocycle_from_json(read_json_file(path), path.parent_path(), path.string() + ":");
}

BilinForm load_form(const fs::path& path) {
  return form_from_json(read_json_file(path), path.string() + ":");
}

Mat load_gram(const fs::path& path) {
  return gram_from_json(read_json_file(path), path.string() + ":");
}

Subspace load_subspace(const fs::path& path) {
  return subspace_from_json(read_json_file(path), path.string() + ":");
}

Mat load_matrix(const fs::path& path) {
  return matrix_file_from_json(read_json_file(path), path.string() + ":");
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

}  // namespace hom3lie::io
