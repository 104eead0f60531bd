#ifndef LAGCORR_ERRORS_HPP
#define LAGCORR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lag {

// Validation errors: the input violates a documented precondition.
// Callers (and the CLI) may catch these and report exit code 1.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Invariant violations: an internal consistency check failed.  These
// indicate a bug or corrupted input and must never be downgraded; the
// CLI maps them to exit code 2.
class InvariantViolation : public std::runtime_error {
public:
  InvariantViolation(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define LAG_CHECK(cond, code, msg)                      \
  do {                                                  \
    if (!(cond)) throw ::lag::ValidationError(code, msg); \
  } while (0)

#define LAG_ASSERT(cond, code, msg)                        \
  do {                                                     \
    if (!(cond)) throw ::lag::InvariantViolation(code, msg); \
  } while (0)

}  // namespace lag

#endif
