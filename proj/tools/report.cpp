#include "report.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <vector>

namespace report {

using a1c::json::Json;

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_table(const Json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

struct Line {
  std::string key;
  std::string value;
  const Json* table = nullptr;
};

void flatten(const std::string& prefix, const Json& obj, std::vector<Line>& out) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object() && !v.empty())
      flatten(key, v, out);
    else if (is_table(v))
      out.push_back({key, "", &v});
    else
      out.push_back({key, cell(v), nullptr});
  }
}

void write_table(std::ostream& os, const Json& rows) {
  std::vector<std::string> cols;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) cols.push_back(it.key());
  std::vector<std::vector<std::string>> grid;
  grid.push_back(cols);
  for (const Json& r : rows) {
    std::vector<std::string> line;
    for (const auto& c : cols) line.push_back(r.contains(c) ? cell(r[c]) : "");
    grid.push_back(line);
  }
  std::vector<std::size_t> width(cols.size(), 0);
  for (const auto& line : grid)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : grid) {
    os << "  ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << "\n";
  }
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return is_flat(e); });
}

void write_json(std::ostream& os, const Json& v, int indent) {
  const std::string pad(indent + 2, ' ');
  if (v.is_object() && !v.empty()) {
    os << "{\n";
    for (auto it = v.begin(); it != v.end(); ++it) {
      os << pad << Json(it.key()).dump() << ": ";
      write_json(os, it.value(), indent + 2);
      os << (std::next(it) == v.end() ? "\n" : ",\n");
    }
    os << std::string(indent, ' ') << "}";
  } else if (v.is_array() && !is_flat(v)) {
    os << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << pad;
      write_json(os, v[i], indent + 2);
      os << (i + 1 == v.size() ? "\n" : ",\n");
    }
    os << std::string(indent, ' ') << "]";
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string render_json(const Json& report) {
  std::ostringstream os;
  write_json(os, report, 0);
  os << "\n";
  return os.str();
}

std::string render_table(const Json& report) {
  std::vector<Line> lines;
  flatten("", report, lines);
  std::size_t width = 0;
  for (const Line& l : lines)
    if (!l.table) width = std::max(width, l.key.size());
  std::ostringstream os;
  for (const Line& l : lines) {
    if (l.table) {
      os << l.key << ":\n";
      write_table(os, *l.table);
    } else {
      os << l.key << std::string(width - l.key.size() + 2, ' ') << l.value << "\n";
    }
  }
  return os.str();
}

}  // namespace report
