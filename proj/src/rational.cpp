#include "pidx/rational.hpp"

#include <stdexcept>

namespace pidx {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // Multiply before dividing; each prefix product is divisible because every
  // run of i consecutive integers contains a multiple of i.
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string decimal_string(const Rational& value, int places) {
  if (places < 0 || places > 30) {
    throw std::invalid_argument("decimal places must be between 0 and 30");
  }
  const bool negative = value < 0;
  BigInt num = boost::multiprecision::numerator(value);
  if (negative) num = -num;
  const BigInt den = boost::multiprecision::denominator(value);

  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // Round half away from zero on the magnitude: floor((2ns + d) / 2d).
  const BigInt scaled = (2 * num * scale + den) / (2 * den);

  const BigInt whole = scaled / scale;
  const BigInt frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (places > 0) {
    std::string digits = frac.str();
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

}  // namespace pidx
