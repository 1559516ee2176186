#pragma once

#include <stdexcept>
#include <string>

namespace ramrec {

// Failure classes surfaced by the library.  The CLI maps Resource to exit
// code 2 and everything else to exit code 1.
enum class Errc {
  Range,        // index out of range (level, coercion subscript, ...)
  Arity,        // mismatched chain lengths / argument counts
  Type,         // ill-typed term construction
  Shape,        // tuple shape does not match an object profile
  Strictness,   // T-image of an arrow that the fragment cannot express
  Resource,     // fuel exhausted
  Parse,        // malformed input text
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const { return code_; }

  // Steps consumed before a Resource failure; -1 otherwise.
  long long steps = -1;

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ramrec
