#pragma once

#include <stdexcept>
#include <string>

namespace gt {

enum class Errc {
  Parse = 1,     // malformed input document
  Invalid = 2,   // argument or precondition violation
  Domain = 3,    // input outside the operation's family, or property fails
  Limit = 4,     // configured size cap exceeded
  Internal = 5,  // postcondition self-check failed; worth reporting
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace gt
