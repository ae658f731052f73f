#ifndef NOET_ERRORS_HPP
#define NOET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noet {

// Every failure carries a stable machine-readable code plus a human message.
// Codes are the ones named in per-operation error contracts; CLI maps them
// to exit status 1 (usage/parse) or 2 (check failed).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

// Parse errors keep the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(size_t position, const std::string& message)
      : Error("SyntaxError", "at offset " + std::to_string(position) + ": " + message),
        position_(position) {}

  size_t position() const { return position_; }

 private:
  size_t position_;
};

}  // namespace noet

#endif
