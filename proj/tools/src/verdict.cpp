#include "hom3lie/verdict.hpp"

#include <sstream>

#include "hom3lie/io.hpp"

namespace hom3lie::cli {

using nlohmann::json;

void Verdict::add_witnesses(const std::vector<Violation>& v, std::size_t total) {
  for (const auto& w : v)
    if (witnesses.size() < kDefaultMaxWitnesses) witnesses.push_back(w);
  witness_count += total;
}

json violation_to_json(const Violation& v) {
  return {{"identity", v.identity}, {"indices", v.indices}, {"lhs", io::to_json(v.lhs)},
          {"rhs", io::to_json(v.rhs)}};
}

json verdict_to_json(const Verdict& v) {
  json w = json::array();
  for (const auto& x : v.witnesses) w.push_back(violation_to_json(x));
  json out = {{"command", v.command},   {"inputs", v.inputs},
              {"flags", v.flags},       {"witnesses", w},
              {"witness_count", v.witness_count}, {"data", v.data},
              {"outputs", v.outputs},   {"exit_code", v.exit_code}};
  if (v.error_code) out["error"] = {{"code", *v.error_code}, {"message", v.error_message}};
  return out;
}

std::string render_json(const Verdict& v) { return io::dump(verdict_to_json(v)); }

namespace {

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

std::string render_text(const Verdict& v) {
  std::ostringstream os;
  const char* status = v.error_code ? "ERROR" : v.exit_code == kPass ? "PASS" : "FAIL";
  os << v.command << ": " << status << "\n";
  if (!v.inputs.empty()) {
    os << "  inputs:";
    for (const auto& i : v.inputs) os << " " << i;
    os << "\n";
  }
  if (v.error_code) os << "  error: " << *v.error_code << ": " << v.error_message << "\n";
  for (const auto& [name, ok] : v.flags) os << "  " << name << ": " << (ok ? "yes" : "no") << "\n";
  if (v.witness_count > 0) {
    os << "  violations: " << v.witness_count << " (showing " << v.witnesses.size() << ")\n";
    for (const auto& w : v.witnesses) {
      os << "    " << w.identity << " at (";
      for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i];
      os << "): " << vec_text(w.lhs) << " != " << vec_text(w.rhs) << "\n";
    }
  }
  for (const auto& [key, value] : v.data.items()) {
    os << "  " << key << ": " << value.dump() << "\n";
  }
  for (const auto& o : v.outputs) os << "  wrote " << o << "\n";
  return os.str();
}

}  // namespace hom3lie::cli
