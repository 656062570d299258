#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "hom3lie/algebra.hpp"
#include "hom3lie/extensions.hpp"
#include "hom3lie/representation.hpp"

// JSON codecs. Files use 1-based basis indices and rationals as strings;
// integers are accepted on input. Any schema violation throws parse_error
// with a JSON pointer to the offending value.
namespace hom3lie::io {

using json = nlohmann::json;

json to_json(const Rat& r);
json to_json(const Vec& v);
json to_json(const Mat& m);

Rat rat_from_json(const json& j, const std::string& where);
Vec vec_from_json(const json& j, const std::string& where);
/// Rows of equal length. `cols` disambiguates empty matrices.
Mat mat_from_json(const json& j, const std::string& where, std::optional<std::size_t> cols = {});

json algebra_to_json(const Hom3LieAlgebra& L);
Hom3LieAlgebra algebra_from_json(const json& j, const std::string& where = "");

/// The algebra a module or cocycle file refers to: either a path (resolved
/// against the referring file's directory) or an embedded object.
struct AlgebraRef {
  Hom3LieAlgebra algebra;
  std::optional<std::string> path;
};

struct RepresentationFile {
  AlgebraRef base;
  Representation rep;
};

struct CocycleFile {
  AlgebraRef base;
  Cocycle theta;
};

json representation_to_json(const Representation& R, const json& algebra_field);
RepresentationFile representation_from_json(const json& j, const std::filesystem::path& dir,
                                            const std::string& where = "");

json cocycle_to_json(const Cocycle& theta, const json& algebra_field);
CocycleFile cocycle_from_json(const json& j, const std::filesystem::path& dir,
                              const std::string& where = "");

json algebra_field(const AlgebraRef& ref);

json form_to_json(const BilinForm& B);
BilinForm form_from_json(const json& j, const std::string& where = "");
/// The Gram matrix of a form file without the symmetry check.
Mat gram_from_json(const json& j, const std::string& where = "");

json subspace_to_json(const Subspace& S);
Subspace subspace_from_json(const json& j, const std::string& where = "");

json matrix_file_to_json(const Mat& m);
Mat matrix_file_from_json(const json& j, const std::string& where = "");

/// Two-space indented dump with a trailing newline; keys come out sorted.
std::string dump(const json& j);

json read_json_file(const std::filesystem::path& path);
Hom3LieAlgebra load_algebra(const std::filesystem::path& path);
RepresentationFile load_representation(const std::filesystem::path& path);
CocycleFile load_cocycle(const std::filesystem::path& path);
BilinForm load_form(const std::filesystem::path& path);
Mat load_gram(const std::filesystem::path& path);
Subspace load_subspace(const std::filesystem::path& path);
Mat load_matrix(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hom3lie::io
