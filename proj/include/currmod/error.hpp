#ifndef CURRMOD_ERROR_HPP
#define CURRMOD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace currmod {

/// Machine-checkable reasons for refusing an operation.
enum class ErrorCode {
  unsupported_type,
  structure_constants_unavailable,
  too_large,
  not_a_partition,
  closure_violation,
  duplicate_point,
  mismatched_algebra,
  dimension_mismatch,
  size_limit,
  non_dominant,
  reducible_parameters,
  repeated_point,
  untagged_factor,
  out_of_window,
  height_mismatch,
  window_too_small,
  bad_descriptor,
  invalid_argument,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace currmod

#endif
