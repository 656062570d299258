#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hom3lie/report.hpp"

namespace hom3lie::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kMalformed = 2 };

/// Result record of one command. Serializes with sorted keys and canonical
/// rationals, so equal inputs give byte-identical output.
struct Verdict {
  std::string command;
  std::vector<std::string> inputs;
  std::map<std::string, bool> flags;
  std::vector<Violation> witnesses;
  std::size_t witness_count = 0;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::string> outputs;
  std::optional<std::string> error_code;
  std::string error_message;
  int exit_code = kPass;

  /// Appends witnesses up to kDefaultMaxWitnesses and adds `total` to the count.
  void add_witnesses(const std::vector<Violation>& v, std::size_t total);
};

nlohmann::json violation_to_json(const Violation& v);
nlohmann::json verdict_to_json(const Verdict& v);
std::string render_json(const Verdict& v);
std::string render_text(const Verdict& v);

}  // namespace hom3lie::cli
