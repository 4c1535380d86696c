#pragma once

#include <stdexcept>
#include <string>

namespace rtt {

/// Error codes shared across the library; the CLI maps most of them to
/// usage errors (exit code 2).
enum class errc {
  unknown_ring,
  not_prime,
  modulus_too_large,
  division_by_zero,
  not_invertible,
  syntax_error,
  index_out_of_range,
  bad_coefficient,
  rank_mismatch,
  ring_mismatch,
  degree_out_of_range,
  incompatible_spans,
  generators_in_degree_zero,
  too_large,
  bad_n,
  unsupported_ring,
  bad_argument,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace rtt
