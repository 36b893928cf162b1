#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

// Failure categories surfaced by the library.  The CLI maps these to exit
// codes: parameter/input problems exit 1, numerical-domain problems exit 2.
enum class errc {
  invalid_params,      // precondition on scalar parameters violated
  infinite_set,        // index-set predicate does not define a finite set
  length_mismatch,     // sample vector length does not match 2m+1
  dimension_mismatch,  // operands live in different dimensions
  overflow,            // an integer count would exceed 64 bits
  not_solid,           // index set is not downward closed
  too_large,           // requested object exceeds the supported desk scale
  validity_window,     // study levels exhaust the test function's band
  degenerate,          // regression input carries no usable spread
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& what);

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) raise(code, what);
}

}  // namespace sgr
