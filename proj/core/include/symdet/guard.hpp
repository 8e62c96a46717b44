#pragma once

#include <cstdint>

namespace symdet {

// Guardrails for exhaustive enumeration. enum_limit bounds the number of
// matrices visited by a single scan; op_limit bounds pairwise work such as
// codewords x evaluation points. The SYMDET_GUARD_OPS environment variable
// overrides both limits with one value; force bypasses the checks entirely.
struct GuardPolicy {
  std::uint64_t enum_limit = 100'000'000ULL;
  std::uint64_t op_limit = 1'000'000'000ULL;
  bool force = false;

  static GuardPolicy from_env();

  // predicted costs are doubles: they routinely overflow 64 bits before the
  // guard gets a chance to reject them.
  void check_enum(double predicted, const char* what) const;
  void check_ops(double predicted, const char* what) const;
};

}  // namespace symdet
