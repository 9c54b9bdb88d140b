#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ycnn {

enum class ErrorCode {
  shape_mismatch,
  non_finite,
  infeasible_shape,
  bad_magic,
  version_mismatch,
  truncated_file,
  degenerate_box,
  no_admissible_pair,
  bad_config,
  missing_input,
  io_failure,
  bad_argument,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::shape_mismatch: return "shape_mismatch";
    case ErrorCode::non_finite: return "non_finite";
    case ErrorCode::infeasible_shape: return "infeasible_shape";
    case ErrorCode::bad_magic: return "bad_magic";
    case ErrorCode::version_mismatch: return "version_mismatch";
    case ErrorCode::truncated_file: return "truncated_file";
    case ErrorCode::degenerate_box: return "degenerate_box";
    case ErrorCode::no_admissible_pair: return "no_admissible_pair";
    case ErrorCode::bad_config: return "bad_config";
    case ErrorCode::missing_input: return "missing_input";
    case ErrorCode::io_failure: return "io_failure";
    case ErrorCode::bad_argument: return "bad_argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// Counters backing the inference-purity checks: tracking must never touch
// the backward path or mutate parameters.
namespace instrument {

inline std::atomic<std::uint64_t>& gradient_ops() {
  static std::atomic<std::uint64_t> n{0};
  return n;
}

inline std::atomic<std::uint64_t>& param_updates() {
  static std::atomic<std::uint64_t> n{0};
  return n;
}

inline void note_gradient_op() { gradient_ops().fetch_add(1, std::memory_order_relaxed); }
inline void note_param_update() { param_updates().fetch_add(1, std::memory_order_relaxed); }

inline void reset() {
  gradient_ops().store(0);
  param_updates().store(0);
}

}  // namespace instrument

}  // namespace ycnn
