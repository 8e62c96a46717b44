#pragma once

#include <stdexcept>
#include <string>

namespace symdet {

enum class errc {
  non_prime,
  even_characteristic,
  degree_out_of_range,
  division_by_zero,
  length_mismatch,
  size_mismatch,
  invalid_rank_type_pair,
  range_error,
  guard_exceeded,
  inexact_division,
  cross_check_mismatch,
  uniformity_violation,
  stratum_weight_violation,
  io_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc c, const std::string& msg);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc c, const std::string& msg);

}  // namespace symdet
