#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace guchar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int int_pow(const Int& base, unsigned e);
Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// binomial coefficient with arbitrary integer top:
//   top (top-1) ... (top-k+1) / k!
// Integral for every integer top, also negative ones.
Int gen_binomial(const Int& top, unsigned k);

std::string int_str(const Int& v);
std::string rat_str(const Rat& v);  // "n" when the denominator is 1, else "n/d"

Int int_parse(const std::string& s);
Rat rat_parse(const std::string& s);

}  // namespace guchar
