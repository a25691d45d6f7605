#ifndef OPERADIX_COMMON_HPP
#define OPERADIX_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace operadix {

// Exit codes used by the CLI; library code throws, the CLI maps to codes.
enum class ErrorClass : int {
  parse = 2,
  invariant = 3,
  finiteness = 4,
  cap = 5,
};

struct Error : std::runtime_error {
  ErrorClass cls;
  Error(ErrorClass c, const std::string& msg) : std::runtime_error(msg), cls(c) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorClass::parse, m) {}
};
struct InvariantError : Error {
  explicit InvariantError(const std::string& m) : Error(ErrorClass::invariant, m) {}
};
struct FinitenessError : Error {
  explicit FinitenessError(const std::string& m) : Error(ErrorClass::finiteness, m) {}
};
struct CapError : Error {
  explicit CapError(const std::string& m) : Error(ErrorClass::cap, m) {}
};

// Global symmetric-group degree limit. Every Young product constructed by the
// engine has total degree at most this bound. Overridable via the
// OPERADIX_MAX_DEGREE environment variable or set_max_degree().
int max_degree();
void set_max_degree(int d);

// Hard ceiling on the number of points/basis vectors of any single
// constructed object; constructions beyond it fail with CapError instead of
// exhausting memory.
constexpr std::int64_t kMaxObjectSize = 2'000'000;

}  // namespace operadix

#endif
