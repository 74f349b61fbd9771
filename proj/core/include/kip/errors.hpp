#pragma once

#include <stdexcept>
#include <string>

namespace kip {

enum class errc {
  not_positive_definite,
  convergence_failure,
  domain_error,
  zero_norm_input,
  shape_mismatch,
  non_finite_gradient,
  diverged_loss,
  insufficient_class_examples,
  bad_magic,
  count_mismatch,
  truncated_file,
  degenerate_distances,
  degenerate_covariance,
  singular_kernel,
  worker_failure,
  assembly_aborted,
  protocol_error,
  io_error,
  config_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace kip
