#pragma once

#include <gmpxx.h>

#include <string>

namespace fibtop {

using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace fibtop
