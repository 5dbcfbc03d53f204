#include "stickylab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stickylab::report {

namespace {

std::string number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const json& j, std::ostringstream& out, int indent, int depth) {
  const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map keeps keys sorted
        if (!first) out << ',';
        first = false;
        out << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
        emit(it.value(), out, indent, depth + 1);
      }
      out << close << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ',';
        out << pad;
        emit(j[i], out, indent, depth + 1);
      }
      out << close << ']';
      return;
    }
    case json::value_t::number_float: out << number(j.get<double>()); return;
    default: out << j.dump(); return;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!f) throw Error("write failed for '" + path + "'");
}

std::string cell(const json& v) {
  if (v.is_number_float()) return number(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string dump(const json& j, int indent) {
  std::ostringstream out;
  emit(j, out, indent, 0);
  out << '\n';
  return out.str();
}

void write_json(const std::string& path, const json& j) { write_file(path, dump(j)); }

std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + cell(t.columns[i]);
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + cell(row[i]);
    s += '\n';
  }
  return s;
}

void write_csv(const std::string& path, const Table& t) { write_file(path, to_csv(t)); }

}  // namespace stickylab::report
