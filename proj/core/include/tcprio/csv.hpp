#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tcprio/dataset.hpp"

namespace tcprio {

enum class MissingValuePolicy { impute_zero, reject };

struct IngestOptions {
  MissingValuePolicy missing = MissingValuePolicy::impute_zero;
};

/// Canonical dialect: comma separated, '.' decimal, UTF-8, no quoting, header
/// with `build`, `test`, `verdict`, `exec_time` columns plus >=1 feature column.
/// Builds come out grouped and chronologically ordered by build id.
Dataset parse_csv(std::istream& in, const IngestOptions& options = {});
Dataset parse_csv_string(const std::string& text, const IngestOptions& options = {});
Dataset parse_csv_file(const std::filesystem::path& path, const IngestOptions& options = {});

void emit_csv(const Dataset& ds, std::ostream& out);
std::string to_csv(const Dataset& ds);
void write_csv_file(const Dataset& ds, const std::filesystem::path& path);

}  // namespace tcprio
