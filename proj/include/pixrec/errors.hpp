#ifndef PIXREC_ERRORS_HPP
#define PIXREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pixrec {

// All recoverable failures carry a stable machine-readable code
// (e.g. "invalid-resolution", "index-error", "non-generic-line").
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pixrec

#endif
