#pragma once

#include <stdexcept>
#include <string>

namespace homq {

// Every failure raised by the library carries a short machine-readable kind
// ("syntax", "pole", "rejected", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::string kind, std::size_t position, const std::string& message)
      : Error(std::move(kind), "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace homq
