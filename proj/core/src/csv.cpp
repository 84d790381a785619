#include "tcprio/csv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "tcprio/error.hpp"
#include "tcprio/fsio.hpp"
#include "tcprio/num_format.hpp"

namespace tcprio {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.emplace_back(trim(std::string_view(line).substr(start)));
      break;
    }
    cells.emplace_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

bool is_missing_token(std::string_view cell) {
  return cell.empty() || cell == "NA" || cell == "na" || cell == "NaN" || cell == "nan" ||
         cell == "null";
}

Verdict parse_verdict(std::string_view token, std::size_t line_no) {
  if (token == "failed" || token == "fail" || token == "1") return Verdict::failed;
  if (token == "passed" || token == "pass" || token == "0") return Verdict::passed;
  throw DataError("line " + std::to_string(line_no) + ": unknown verdict token '" +
                  std::string(token) + "'");
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& msg) {
  throw DataError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Dataset parse_csv(std::istream& in, const IngestOptions& options) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty CSV input");
  const auto header = split_line(line);

  // Required columns located by name; every other column is a feature.
  std::map<std::string, std::size_t> positions;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i].empty()) fail_line(1, "empty column name in header");
    if (!positions.emplace(header[i], i).second) fail_line(1, "duplicate column '" + header[i] + "'");
  }
  const char* required[] = {"build", "test", "verdict", "exec_time"};
  std::size_t col_of[4];
  for (std::size_t i = 0; i < 4; ++i) {
    auto it = positions.find(required[i]);
    if (it == positions.end()) fail_line(1, std::string("missing required column '") + required[i] + "'");
    col_of[i] = it->second;
  }

  Dataset ds;
  std::vector<std::size_t> feature_cols;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i != col_of[0] && i != col_of[1] && i != col_of[2] && i != col_of[3]) {
      feature_cols.push_back(i);
      ds.schema.names.push_back(header[i]);
    }
  }
  if (feature_cols.empty()) fail_line(1, "no feature columns after build,test,verdict,exec_time");
  validate(ds.schema);

  std::map<std::int64_t, BuildGroup> groups;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != header.size()) {
      fail_line(line_no, "expected " + std::to_string(header.size()) + " columns, got " +
                             std::to_string(cells.size()));
    }
    TestCaseRecord rec;
    const auto build = parse_int(cells[col_of[0]]);
    if (!build) fail_line(line_no, "build id '" + cells[col_of[0]] + "' is not an integer");
    rec.build_id = *build;
    rec.test_id = cells[col_of[1]];
    if (rec.test_id.empty()) fail_line(line_no, "empty test id");
    rec.verdict = parse_verdict(cells[col_of[2]], line_no);
    const auto exec = parse_double(cells[col_of[3]]);
    if (!exec || !std::isfinite(*exec)) fail_line(line_no, "exec_time '" + cells[col_of[3]] + "' is not a number");
    if (*exec < 0) fail_line(line_no, "negative exec_time");
    rec.execution_time = *exec;

    rec.features.reserve(feature_cols.size());
    for (std::size_t f = 0; f < feature_cols.size(); ++f) {
      const std::string& cell = cells[feature_cols[f]];
      const auto value = parse_double(cell);
      const bool missing = is_missing_token(cell) || (value && !std::isfinite(*value));
      if (missing) {
        if (options.missing == MissingValuePolicy::reject) {
          fail_line(line_no, "missing value in feature '" + ds.schema.names[f] + "'");
        }
        rec.features.push_back(0.0);
        ++ds.imputed_cells;
        continue;
      }
      if (!value) fail_line(line_no, "feature '" + ds.schema.names[f] + "' value '" + cell + "' is not numeric");
      rec.features.push_back(*value);
    }

    auto& group = groups[rec.build_id];
    group.build_id = rec.build_id;
    group.records.push_back(std::move(rec));
  }
  if (groups.empty()) throw DataError("CSV contains a header but no records");

  ds.builds.reserve(groups.size());
  for (auto& [id, group] : groups) {
    group.time_index = ds.builds.size();
    ds.builds.push_back(std::move(group));
  }
  validate(ds);
  return ds;
}

Dataset parse_csv_string(const std::string& text, const IngestOptions& options) {
  std::istringstream in(text);
  return parse_csv(in, options);
}

Dataset parse_csv_file(const std::filesystem::path& path, const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_csv(in, options);
}

void emit_csv(const Dataset& ds, std::ostream& out) {
  out << "build,test,verdict,exec_time";
  for (const auto& name : ds.schema.names) out << ',' << name;
  out << '\n';
  for (const auto& build : ds.builds) {
    for (const auto& rec : build.records) {
      out << rec.build_id << ',' << rec.test_id << ',' << to_string(rec.verdict) << ','
          << format_double(rec.execution_time);
      for (double v : rec.features) out << ',' << format_double(v);
      out << '\n';
    }
  }
}

std::string to_csv(const Dataset& ds) {
  std::ostringstream out;
  emit_csv(ds, out);
  return out.str();
}

void write_csv_file(const Dataset& ds, const std::filesystem::path& path) {
  write_file_atomic(path, to_csv(ds));
}

}  // namespace tcprio
