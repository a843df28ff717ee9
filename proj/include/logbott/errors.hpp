#pragma once

#include <stdexcept>
#include <string>

namespace logbott {

// Base of every error raised by the library. `kind()` is a stable short tag
// used in structured CLI output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LOGBOTT_DEFINE_ERROR(Name, tag)                                  \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(tag, what) {}         \
  };

LOGBOTT_DEFINE_ERROR(InputError, "input")
LOGBOTT_DEFINE_ERROR(ConfluenceError, "confluence")
LOGBOTT_DEFINE_ERROR(NonInvertibleError, "non_invertible")
LOGBOTT_DEFINE_ERROR(PresentationIncompleteError, "presentation_incomplete")
LOGBOTT_DEFINE_ERROR(RingMismatchError, "ring_mismatch")
LOGBOTT_DEFINE_ERROR(NondegeneracyError, "nondegeneracy")
LOGBOTT_DEFINE_ERROR(ConsistencyError, "consistency")
LOGBOTT_DEFINE_ERROR(ConstraintError, "constraint")
LOGBOTT_DEFINE_ERROR(TubeError, "tube_parametrization")

#undef LOGBOTT_DEFINE_ERROR

}  // namespace logbott
