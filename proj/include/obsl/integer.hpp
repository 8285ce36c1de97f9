// Arbitrary-precision integer type used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace obsl {

// Exact arithmetic everywhere: twist exponents may be large and Smith normal
// form intermediates grow quickly, so fixed-width overflow is a correctness
// bug, not a performance concern.
using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& x) { return x.sign(); }

}  // namespace obsl
