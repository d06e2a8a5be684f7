#pragma once

// Extended-precision reference values used only by the tests.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace oracle {

using mp = boost::multiprecision::cpp_bin_float_50;

// E_nu(-s) by its Taylor series carried in 50 digits. Only sensible while
// the largest term stays well below 1e30, i.e. s^{1/nu} up to about 50.
inline double ml_taylor(double nu, double s) {
  const mp x = -mp(s);
  mp sum = 0, power = 1;
  for (int k = 0; k < 4000; ++k) {
    const mp term = power / boost::math::tgamma(mp(nu) * k + 1);
    sum += term;
    if (k > 10 && abs(term) < mp(1e-40)) break;
    power *= x;
  }
  return static_cast<double>(sum);
}

// E_{1/2}(-s) = exp(s^2) erfc(s), any s >= 0.
inline double ml_half(double s) {
  const mp x = s;
  return static_cast<double>(exp(x * x) * boost::math::erfc(x));
}

// (j+1)^nu - 2 j^nu + (j-1)^nu in 50 digits.
inline double second_difference(double nu, long j) {
  const mp v = nu;
  const mp J = j;
  return static_cast<double>(pow(J + 1, v) - 2 * pow(J, v) + pow(J - 1, v));
}

}  // namespace oracle
