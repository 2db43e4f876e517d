#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xmodcat {

enum class ErrorKind { invalid_input, invariant_failure, numerical_degeneracy };

// Every library failure carries a stable code (e.g. "PeifferViolation") and
// the integer witnesses named by the calling context, so callers can react
// without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message,
        std::vector<long long> witness = {})
      : std::runtime_error(code + ": " + message),
        kind_(kind),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }
  const std::vector<long long>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::string code_;
  std::vector<long long> witness_;
};

[[noreturn]] inline void fail_invalid(const std::string& code, const std::string& msg,
                                      std::vector<long long> witness = {}) {
  throw Error(ErrorKind::invalid_input, code, msg, std::move(witness));
}

[[noreturn]] inline void fail_invariant(const std::string& code, const std::string& msg,
                                        std::vector<long long> witness = {}) {
  throw Error(ErrorKind::invariant_failure, code, msg, std::move(witness));
}

[[noreturn]] inline void fail_degenerate(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::numerical_degeneracy, code, msg);
}

}  // namespace xmodcat
