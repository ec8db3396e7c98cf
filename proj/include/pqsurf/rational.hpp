#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace pqsurf {

// All invariant arithmetic is exact; integrality is asserted, never rounded.
using Rat = boost::rational<std::int64_t>;

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::int64_t to_int(const Rat& r) { return r.numerator() / r.denominator(); }

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace pqsurf
