#include "symdet/errors.hpp"

namespace symdet {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_prime: return "NonPrime";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::degree_out_of_range: return "DegreeOutOfRange";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::invalid_rank_type_pair: return "InvalidRankTypePair";
    case errc::range_error: return "RangeError";
    case errc::guard_exceeded: return "GuardExceeded";
    case errc::inexact_division: return "InexactDivision";
    case errc::cross_check_mismatch: return "CrossCheckMismatch";
    case errc::uniformity_violation: return "UniformityViolation";
    case errc::stratum_weight_violation: return "StratumWeightViolation";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

Error::Error(errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace symdet
