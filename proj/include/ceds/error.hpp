#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ceds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  enum class Kind { SelfLoop, DuplicateEdge, Disconnected, Empty };

  GraphError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// G[s] is not connected where a connected edge set was required.
class NotConnectedError : public Error {
 public:
  using Error::Error;
};

class NotCedsError : public Error {
 public:
  using Error::Error;
};

class NotPendantError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds the brute-force oracle's edge cap.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ceds
