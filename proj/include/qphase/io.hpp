#ifndef QPHASE_IO_HPP
#define QPHASE_IO_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "qphase/states.hpp"

namespace qphase::io {

// 12 significant digits, locale-independent.
std::string format_double(double value);

std::string kind_name(OpKind kind);
OpKind kind_from_name(const std::string& name);

nlohmann::json spec_to_json(const StateSpec& spec);
StateSpec spec_from_json(const nlohmann::json& j);

// Figure-ready dataset: a JSON header plus uniform rows. CSV output carries
// the header as a single '#'-prefixed line; all line endings are LF.
struct Table {
  nlohmann::json header;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

void write_file(const std::string& path, const std::string& content);

}  // namespace qphase::io

#endif
