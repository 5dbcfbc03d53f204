#pragma once

// Deterministic report output: sorted keys, doubles with 17 significant digits.

#include <iosfwd>
#include <string>
#include <vector>

#include "stickylab/funcspace.hpp"

namespace stickylab::report {

// Non-finite numbers are written as null.
std::string dump(const json& j, int indent = 2);
void write_json(const std::string& path, const json& j);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;  // numbers or strings
};
std::string to_csv(const Table& t);
void write_csv(const std::string& path, const Table& t);

}  // namespace stickylab::report
