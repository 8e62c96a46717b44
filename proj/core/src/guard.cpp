#include "symdet/guard.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "symdet/errors.hpp"

namespace symdet {

namespace {

void reject(double predicted, std::uint64_t limit, const char* what,
            const char* kind) {
  std::ostringstream os;
  os << what << " predicted " << kind << " cost " << predicted
     << " exceeds guard limit " << limit
     << " (set SYMDET_GUARD_OPS or pass --force to override)";
  fail(errc::guard_exceeded, os.str());
}

}  // namespace

GuardPolicy GuardPolicy::from_env() {
  GuardPolicy g;
  if (const char* env = std::getenv("SYMDET_GUARD_OPS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) {
      g.enum_limit = v;
      g.op_limit = v;
    }
  }
  return g;
}

void GuardPolicy::check_enum(double predicted, const char* what) const {
  if (!force && predicted > static_cast<double>(enum_limit))
    reject(predicted, enum_limit, what, "enumeration");
}

void GuardPolicy::check_ops(double predicted, const char* what) const {
  if (!force && predicted > static_cast<double>(op_limit))
    reject(predicted, op_limit, what, "operation");
}

}  // namespace symdet
