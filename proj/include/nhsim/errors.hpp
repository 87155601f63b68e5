#ifndef NHSIM_ERRORS_HPP
#define NHSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nhsim {

enum class Errc {
  validation,   // malformed input or broken invariant
  conflict,     // duplicate identifier / resource already owned
  not_found,
  exhausted,    // allocator ran out (sd space, ip pool, ...)
  precondition, // operation called in the wrong state
  io,
  usage,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::validation:   return "validation";
    case Errc::conflict:     return "conflict";
    case Errc::not_found:    return "not-found";
    case Errc::exhausted:    return "exhausted";
    case Errc::precondition: return "precondition";
    case Errc::io:           return "io";
    case Errc::usage:        return "usage";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace nhsim

#endif  // NHSIM_ERRORS_HPP
