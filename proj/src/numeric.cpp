#include "guchar/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace guchar {

Int int_pow(const Int& base, unsigned e) {
  Int acc = 1;
  Int b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Int factorial(unsigned n) {
  Int acc = 1;
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return acc;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= n - i;
    acc /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return acc;
}

Int gen_binomial(const Int& top, unsigned k) {
  Int num = 1;
  for (unsigned i = 0; i < k; ++i) num *= top - i;
  Int den = factorial(k);
  Int quo = num / den;
  if (quo * den != num) throw std::logic_error("gen_binomial: non-integral quotient");
  return quo;
}

std::string int_str(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string rat_str(const Rat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Int int_parse(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
}

Rat rat_parse(const std::string& s) {
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

}  // namespace guchar
