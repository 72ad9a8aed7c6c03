#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entropart {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the `.wfn` reader; carries the source name and 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::string record,
             const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": [" + record + "] " + what),
        source_(std::move(source)),
        line_(line),
        record_(std::move(record)) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& record() const noexcept { return record_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string record_;
};

}  // namespace entropart
