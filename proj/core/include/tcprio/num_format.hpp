#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace tcprio {

/// Shortest decimal form that round-trips the exact double. Emitted files are
/// byte-reproducible because this is the only float formatter used for output.
std::string format_double(double v);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

std::string_view trim(std::string_view s);

}  // namespace tcprio
