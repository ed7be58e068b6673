#include "qphase/io.hpp"

#include <cstdio>
#include <fstream>

namespace qphase::io {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string kind_name(OpKind kind) {
  return kind == OpKind::Add ? "add" : "subtract";
}

OpKind kind_from_name(const std::string& name) {
  if (name == "add") return OpKind::Add;
  if (name == "subtract") return OpKind::Subtract;
  throw InvalidSpecError("unknown kind '" + name + "' (expected add|subtract)");
}

nlohmann::json spec_to_json(const StateSpec& spec) {
  return {{"kind", kind_name(spec.kind)},
          {"count", spec.count},
          {"n", spec.fock_n},
          {"alpha_mag", spec.alpha_mag},
          {"alpha_phase", spec.alpha_phase}};
}

StateSpec spec_from_json(const nlohmann::json& j) {
  StateSpec spec;
  spec.kind = kind_from_name(j.at("kind").get<std::string>());
  spec.count = j.at("count").get<unsigned>();
  spec.fock_n = j.at("n").get<unsigned>();
  spec.alpha_mag = j.at("alpha_mag").get<double>();
  spec.alpha_phase = j.value("alpha_phase", 0.0);
  return spec;
}

std::string to_csv(const Table& table) {
  std::string out = "# " + table.header.dump() + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::json j;
  j["header"] = table.header;
  j["columns"] = table.columns;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) j["rows"].push_back(row);
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace qphase::io
