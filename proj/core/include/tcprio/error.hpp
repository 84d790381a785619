#pragma once

#include <stdexcept>
#include <string>

namespace tcprio {

/// Error categories aligned with the CLI exit codes: usage=1, data=2, internal=3.
class Error : public std::runtime_error {
 public:
  enum class Kind { usage = 1, data = 2, internal = 3 };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  Kind kind_;
};

/// Bad flags, bad config values, parameter ranges.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(Kind::usage, what) {}
};

/// Malformed or inconsistent input data, unmet data preconditions.
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(Kind::data, what) {}
};

/// Broken internal invariant; always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(Kind::internal, what) {}
};

namespace detail {
inline void require_internal(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}
}  // namespace detail

}  // namespace tcprio
