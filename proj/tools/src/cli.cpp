#include "hom3lie/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "hom3lie/derivations.hpp"
#include "hom3lie/error.hpp"
#include "hom3lie/extensions.hpp"
#include "hom3lie/fixtures.hpp"
#include "hom3lie/io.hpp"
#include "hom3lie/representation.hpp"
#include "hom3lie/structure.hpp"
#include "hom3lie/verdict.hpp"

namespace hom3lie::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  int max_k = 3;
  std::size_t max_steps = kDefaultMaxSteps;
};

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorCode::parse_error, msg); }

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error:
    case ErrorCode::shape_mismatch:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::ambient_mismatch:
    case ErrorCode::invalid_index:
      return kMalformed;
    default:
      return kFail;
  }
}

void write_json(Verdict& v, const fs::path& path, const json& j) {
  io::write_file_atomic(path, io::dump(j));
  v.outputs.push_back(path.string());
}

void set_exit(Verdict& v) {
  v.exit_code = kPass;
  for (const auto& [name, ok] : v.flags)
    if (!ok) v.exit_code = kFail;
}

// ---------------------------------------------------------------------------

Verdict cmd_verify(const std::string& file, std::vector<std::string> checks) {
  Verdict v;
  v.command = "verify";
  v.inputs = {file};
  const Hom3LieAlgebra L = io::load_algebra(file);
  if (checks.empty()) checks = {"skew", "jacobi", "multiplicative"};
  const std::set<std::string> want(checks.begin(), checks.end());
  v.data["dim"] = L.dim();
  if (want.count("skew")) {
    const auto r = verify_skew(L);
    v.flags["skew"] = r.skew_ok;
    v.add_witnesses(r.violations, r.violation_count);
  }
  if (want.count("jacobi")) {
    const auto r = verify_hom_jacobi(L);
    v.flags["hom_jacobi"] = r.hom_jacobi_ok;
    v.add_witnesses(r.violations, r.violation_count);
  }
  if (want.count("multiplicative")) {
    const auto r = verify_multiplicative(L);
    v.flags["multiplicative"] = r.multiplicative_ok;
    v.add_witnesses(r.violations, r.violation_count);
  }
  if (want.count("regular")) {
    const auto r = verify_regular(L);
    v.flags["regular"] = r.regular_ok;
    v.add_witnesses(r.violations, r.violation_count);
  }
  set_exit(v);
  return v;
}

json space_json(const DerivationSpace& s) {
  json basis = json::array();
  for (const auto& m : s.basis) basis.push_back(io::to_json(m));
  return {{"k", s.k}, {"dim", s.dim()}, {"basis", basis}};
}

Verdict cmd_derivations(const Options& opt, const std::string& file, std::optional<int> k,
                        bool inner, const std::string& out) {
  Verdict v;
  v.command = "derivations";
  v.inputs = {file};
  const Hom3LieAlgebra L = io::load_algebra(file);
  std::vector<int> grades;
  if (k) {
    if (std::abs(*k) > opt.max_k) {
      throw Error(ErrorCode::out_of_range, "grade " + std::to_string(*k) + " exceeds --max-k " +
                                               std::to_string(opt.max_k));
    }
    grades.push_back(*k);
  } else {
    for (int g = 0; g <= opt.max_k; ++g) grades.push_back(g);
  }
  json spaces = json::array();
  json inners = json::array();
  bool verified = true;
  bool inner_contained = true;
  for (int g : grades) {
    const DerivationSpace s = derivation_space(L, g);
    for (const auto& D : s.basis) verified = verified && is_alpha_k_derivation(L, D, g);
    spaces.push_back(space_json(s));
    if (inner && g >= 1) {
      const DerivationSpace in = inner_space(L, g);
      inner_contained = inner_contained && subspace_leq(in.vectorized, s.vectorized);
      inners.push_back(space_json(in));
    }
  }
  v.flags["basis_verified"] = verified;
  v.data["derivations"] = spaces;
  if (inner) {
    v.flags["inner_contained"] = inner_contained;
    v.data["inner"] = inners;
  }
  if (!out.empty()) {
    json payload = {{"derivations", spaces}};
    if (inner) payload["inner"] = inners;
    write_json(v, out, payload);
  }
  set_exit(v);
  return v;
}

Representation resolve_rep(const Hom3LieAlgebra& L, const std::string& arg) {
  if (arg == "adjoint") return adjoint_rep(L);
  if (arg == "coadjoint") return coadjoint_rep(L);
  auto f = io::load_representation(arg);
  if (!(f.base.algebra == L)) {
    throw Error(ErrorCode::shape_mismatch, arg + " is a module over a different algebra");
  }
  return std::move(f.rep);
}

Cocycle resolve_cocycle(const Hom3LieAlgebra& L, const std::string& arg) {
  auto f = io::load_cocycle(arg);
  if (!(f.base.algebra == L)) {
    throw Error(ErrorCode::shape_mismatch, arg + " is a cocycle on a different algebra");
  }
  return std::move(f.theta);
}

void require_arity(const std::string& kind, const std::vector<std::string>& in, std::size_t n) {
  if (in.size() != n) {
    usage("extend " + kind + " takes " + std::to_string(n) + " inputs, got " +
          std::to_string(in.size()));
  }
}

json table_json(const DerivationExtension& ext) {
  const std::size_t N = ext.table.domain_dim();
  json entries = json::array();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        const Vec& val = ext.table.at(i, j, k);
        if (val.is_zero()) continue;
        json value = json::object();
        for (std::size_t l = 0; l < val.size(); ++l)
          if (val[l] != 0) value[std::to_string(l + 1)] = io::to_json(val[l]);
        entries.push_back({{"args", {i + 1, j + 1, k + 1}}, {"value", value}});
      }
  return {{"dim", N}, {"alpha", io::to_json(ext.twist)}, {"table", entries}};
}

Verdict cmd_extend(const std::string& kind, const std::vector<std::string>& in,
                   const std::string& out, const std::string& out_form) {
  Verdict v;
  v.command = "extend " + kind;
  v.inputs = in;
  std::optional<Hom3LieAlgebra> result;
  if (kind == "direct-sum") {
    require_arity(kind, in, 2);
    result = direct_sum(io::load_algebra(in[0]), io::load_algebra(in[1]));
  } else if (kind == "derivation") {
    require_arity(kind, in, 2);
    const Hom3LieAlgebra L = io::load_algebra(in[0]);
    const DerivationExtension ext = derivation_extension(L, io::load_matrix(in[1]));
    v.flags["skew"] = ext.report.skew_ok;
    v.flags["hom_jacobi"] = ext.report.hom_jacobi_ok;
    v.flags["multiplicative"] = ext.report.multiplicative_ok;
    v.add_witnesses(ext.report.violations, ext.report.violation_count);
    v.data["full_table_hom_jacobi"] = ext.full_table_hom_jacobi_ok;
    v.data["full_table_violation_count"] = ext.full_table_violation_count;
    v.data["is_alpha_derivation"] = is_alpha_k_derivation(L, ext.derivation, 1);
    if (!out.empty()) write_json(v, out, table_json(ext));
    // The literal bracket is never skew for nonzero D, so skew is reported
    // but does not decide the exit code.
    v.exit_code = ext.report.hom_jacobi_ok && ext.report.multiplicative_ok ? kPass : kFail;
    return v;
  } else if (kind == "semidirect") {
    require_arity(kind, in, 2);
    const Hom3LieAlgebra L = io::load_algebra(in[0]);
    result = semidirect_product(L, resolve_rep(L, in[1]));
  } else if (kind == "t-theta") {
    require_arity(kind, in, 3);
    const Hom3LieAlgebra L = io::load_algebra(in[0]);
    result = t_theta_extension(L, resolve_rep(L, in[1]), resolve_cocycle(L, in[2])).algebra;
  } else if (kind == "t-star") {
    require_arity(kind, in, 2);
    const Hom3LieAlgebra L = io::load_algebra(in[0]);
    const Cocycle theta = resolve_cocycle(L, in[1]);
    TStarExtension ext = t_star_extension(L, theta);
    v.data["form"] = io::form_to_json(ext.form);
    v.data["theta_cyclic"] = theta_cyclic_ok(L, theta);
    if (!out_form.empty()) write_json(v, out_form, io::form_to_json(ext.form));
    result = std::move(ext.algebra);
  } else {
    usage("unknown extension kind " + kind);
  }
  const AlgebraReport r = verify_algebra(*result);
  v.flags["skew"] = r.skew_ok;
  v.flags["hom_jacobi"] = r.hom_jacobi_ok;
  v.flags["multiplicative"] = r.multiplicative_ok;
  v.add_witnesses(r.violations, r.violation_count);
  v.data["dim"] = result->dim();
  if (out.empty()) {
    v.data["algebra"] = io::algebra_to_json(*result);
  } else {
    write_json(v, out, io::algebra_to_json(*result));
  }
  set_exit(v);
  return v;
}

SeriesKind parse_kind(const std::string& s) {
  if (s == "derived") return SeriesKind::derived;
  if (s == "central-descending") return SeriesKind::central_descending;
  if (s == "central-ascending") return SeriesKind::central_ascending;
  usage("unknown series kind " + s);
}

Verdict cmd_series(const Options& opt, const std::string& file, const std::string& kind) {
  Verdict v;
  v.command = "series";
  v.inputs = {file};
  const Hom3LieAlgebra L = io::load_algebra(file);
  const SeriesResult s = series(L, parse_kind(kind), opt.max_steps);
  json terms = json::array();
  json dims = json::array();
  for (const auto& t : s.terms) {
    terms.push_back(io::subspace_to_json(t));
    dims.push_back(t.dim());
  }
  v.data["kind"] = series_kind_name(s.kind);
  v.data["terms"] = terms;
  v.data["dims"] = dims;
  v.data["stabilized"] = s.stabilized;
  v.data["length"] = s.length ? json(*s.length) : json(nullptr);
  v.exit_code = kPass;
  return v;
}

Verdict cmd_metric(const std::string& file, const std::string& form_file) {
  Verdict v;
  v.command = "metric";
  v.inputs = {file, form_file};
  const Hom3LieAlgebra G = io::load_algebra(file);
  const Mat gram = io::load_gram(form_file);
  const MetricReport r = verify_metric(G, gram);
  v.flags["symmetric"] = r.symmetric;
  v.flags["nondegenerate"] = r.nondegenerate;
  v.flags["invariant"] = r.invariant;
  v.data["alpha_compatible"] = r.alpha_compatible;
  v.add_witnesses(r.violations, r.violation_count);
  set_exit(v);
  return v;
}

Verdict cmd_reconstruct(const std::string& file, const std::string& form_file,
                        const std::string& ideal_file, const std::string& complement_file,
                        const std::string& out_dir) {
  Verdict v;
  v.command = "reconstruct";
  v.inputs = {file, form_file, ideal_file};
  if (!complement_file.empty()) v.inputs.push_back(complement_file);
  const Hom3LieAlgebra G = io::load_algebra(file);
  const BilinForm B = io::load_form(form_file);
  const Subspace I = io::load_subspace(ideal_file);
  std::optional<Subspace> L0;
  if (!complement_file.empty()) L0 = io::load_subspace(complement_file);
  const ReconstructionResult r = reconstruct_t_star(G, B, I, L0);
  v.flags["isometry"] = r.isometry_ok;
  v.data["quotient_dim"] = r.quotient.algebra.dim();
  v.data["theta_zero"] = r.theta.is_zero();
  v.data["theta_cyclic"] = theta_cyclic_ok(r.quotient.algebra, r.theta);
  v.data["sigma"] = io::to_json(r.sigma);
  v.data["complement"] = io::subspace_to_json(r.complement);
  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    write_json(v, dir / "quotient.json", io::algebra_to_json(r.quotient.algebra));
    write_json(v, dir / "cocycle.json", io::cocycle_to_json(r.theta, "quotient.json"));
    write_json(v, dir / "tstar.json", io::algebra_to_json(r.tstar));
    write_json(v, dir / "tstar_form.json", io::form_to_json(r.tstar_form));
    write_json(v, dir / "sigma.json", io::matrix_file_to_json(r.sigma));
    write_json(v, dir / "complement.json", io::subspace_to_json(r.complement));
  }
  set_exit(v);
  if (!out_dir.empty()) {
    const fs::path p = fs::path(out_dir) / "verdict.json";
    v.outputs.push_back(p.string());
    io::write_file_atomic(p, render_json(v));
  }
  return v;
}

Verdict cmd_fixtures(const std::string& out_dir) {
  Verdict v;
  v.command = "fixtures";
  const fs::path dir(out_dir.empty() ? "." : out_dir);
  fs::create_directories(dir);
  json names = json::array();
  for (const auto& f : fixtures::catalog()) {
    const AlgebraReport r = verify_algebra(f.algebra);
    v.flags[f.name] = r.all_ok();
    names.push_back(f.name);
    write_json(v, dir / (f.name + ".json"), io::algebra_to_json(f.algebra));
  }
  v.data["fixtures"] = names;
  set_exit(v);
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with finite-dimensional hom 3-Lie algebras", "hom3lie"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  bool as_json = false;
  bool as_text = false;
  app.add_flag("--json", as_json, "Emit the verdict as JSON");
  app.add_flag("--text", as_text, "Emit the verdict as text (default)");
  app.add_option("--max-k", opt.max_k, "Largest |k| for derivation grades")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-steps", opt.max_steps, "Safety bound on series length")
      ->check(CLI::PositiveNumber);

  std::string file, second, third, fourth, out_file, out_form, out_dir, kind;
  std::vector<std::string> checks, inputs;
  std::optional<int> k;
  bool inner = false;

  auto* verify = app.add_subcommand("verify", "Check the algebra axioms");
  verify->add_option("file", file, "Algebra file")->required();
  verify->add_option("--checks", checks, "Comma separated subset of skew,jacobi,multiplicative,regular")
      ->delimiter(',')
      ->check(CLI::IsMember({"skew", "jacobi", "multiplicative", "regular"}));

  auto* derivs = app.add_subcommand("derivations", "Bases of alpha^k-derivation spaces");
  derivs->add_option("file", file, "Algebra file")->required();
  derivs->add_option("--k", k, "Single grade (default: 0..max-k)");
  derivs->add_flag("--inner", inner, "Also emit inner derivation spaces");
  derivs->add_option("--out", out_file, "Write the bases to this file");

  auto* extend = app.add_subcommand("extend", "Build an extension");
  extend->add_option("kind", kind, "direct-sum | derivation | semidirect | t-theta | t-star")
      ->required()
      ->check(CLI::IsMember({"direct-sum", "derivation", "semidirect", "t-theta", "t-star"}));
  extend->add_option("inputs", inputs, "Input files (module may be adjoint/coadjoint)")
      ->required();
  extend->add_option("--out", out_file, "Write the constructed algebra here");
  extend->add_option("--out-form", out_form, "t-star: write the canonical form here");

  auto* ser = app.add_subcommand("series", "Derived and central series");
  ser->add_option("file", file, "Algebra file")->required();
  kind = "derived";
  ser->add_option("--kind", kind, "derived | central-descending | central-ascending")
      ->check(CLI::IsMember({"derived", "central-descending", "central-ascending"}));

  auto* metric = app.add_subcommand("metric", "Check a bilinear form for invariance");
  metric->add_option("file", file, "Algebra file")->required();
  metric->add_option("form", second, "Form file")->required();

  auto* recon = app.add_subcommand("reconstruct", "Rebuild a metric algebra as a T*-extension");
  recon->add_option("file", file, "Algebra file")->required();
  recon->add_option("form", second, "Form file")->required();
  recon->add_option("ideal", third, "Isotropic ideal (subspace file)")->required();
  recon->add_option("complement", fourth, "Isotropic complement (subspace file)");
  recon->add_option("--out-dir", out_dir, "Write the reconstruction bundle here");

  auto* fix = app.add_subcommand("fixtures", "Write the fixture catalog");
  fix->add_option("--out-dir", out_dir, "Target directory (default: .)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kMalformed;
  }
  if (as_json && as_text) {
    err << "--json and --text are exclusive\n";
    return kMalformed;
  }

  Verdict v;
  try {
    if (*verify) {
      v = cmd_verify(file, checks);
    } else if (*derivs) {
      v = cmd_derivations(opt, file, k, inner, out_file);
    } else if (*extend) {
      v = cmd_extend(kind, inputs, out_file, out_form);
    } else if (*ser) {
      v = cmd_series(opt, file, kind);
    } else if (*metric) {
      v = cmd_metric(file, second);
    } else if (*recon) {
      v = cmd_reconstruct(file, second, third, fourth, out_dir);
    } else {
      v = cmd_fixtures(out_dir);
    }
  } catch (const Error& e) {
    v = Verdict{};
    v.command = app.get_subcommands().front()->get_name();
    v.error_code = std::string(e.name());
    v.error_message = e.what();
    v.exit_code = exit_for(e.code());
  } catch (const std::exception& e) {
    v = Verdict{};
    v.command = app.get_subcommands().front()->get_name();
    v.error_code = "io-error";
    v.error_message = e.what();
    v.exit_code = kFail;
  }
  out << (as_json ? render_json(v) : render_text(v));
  out.flush();
  return v.exit_code;
}

}  // namespace hom3lie::cli
