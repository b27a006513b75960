#pragma once

#include <gmpxx.h>

namespace klazar {

using BigInt = mpz_class;
using Rational = mpq_class;

}  // namespace klazar
