#ifndef COFULL_ERROR_HPP
#define COFULL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cofull {

// Error classes map onto process exit codes:
//   Parse -> 2, Precondition -> 3, Internal -> 4.
enum class ErrorClass { Parse, Precondition, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, std::string code, const std::string& msg)
      : std::runtime_error(msg), cls_(cls), code_(std::move(code)) {}

  ErrorClass error_class() const { return cls_; }
  // Stable machine-readable identifier, e.g. "E_RING_MISMATCH".
  const std::string& code() const { return code_; }
  int exit_code() const {
    switch (cls_) {
      case ErrorClass::Parse: return 2;
      case ErrorClass::Precondition: return 3;
      case ErrorClass::Internal: return 4;
    }
    return 4;
  }

private:
  ErrorClass cls_;
  std::string code_;
};

[[noreturn]] inline void fail_parse(const std::string& code, const std::string& msg) {
  throw Error(ErrorClass::Parse, code, msg);
}
[[noreturn]] inline void fail_pre(const std::string& code, const std::string& msg) {
  throw Error(ErrorClass::Precondition, code, msg);
}
[[noreturn]] inline void fail_internal(const std::string& code, const std::string& msg) {
  throw Error(ErrorClass::Internal, code, msg);
}

}  // namespace cofull

#endif
