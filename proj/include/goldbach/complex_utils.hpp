#pragma once

#include <cmath>
#include <complex>

namespace goldbach {

using cd = std::complex<double>;

// exp(z) - 1 without cancellation for small |z|.
inline cd expm1c(cd z) {
  if (std::abs(z) > 0.5) return std::exp(z) - 1.0;
  // Horner form of sum_{k>=1} z^k/k!
  cd acc = 0.0;
  for (int k = 18; k >= 2; --k) acc = (acc + 1.0) * (z / static_cast<double>(k));
  return z * (1.0 + acc);
}

// b^w for real b >= 0. At b == 0 the value is taken to be 0 when Re w > 0,
// matching the limit convention used throughout.
inline cd pow_real(double b, cd w) {
  if (b == 0.0) return (w.real() > 0.0) ? cd(0.0) : cd(HUGE_VAL, 0.0);
  return std::exp(w * std::log(b));
}

// sin(pi z)/(pi z), stable for small |z| (z may be complex).
inline cd sinc_pi(cd z) {
  cd t = M_PI * z;
  if (std::abs(t) < 1e-2) {
    cd t2 = t * t;
    return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0));
  }
  return std::sin(t) / t;
}

// tan(pi s / 2) without overflow for any |Im s|.
inline cd tan_half_pi(cd s) {
  cd theta = 0.5 * M_PI * s;
  if (theta.imag() >= 0.0) {
    cd q = std::exp(cd(0.0, 2.0) * theta);  // |q| <= 1
    return cd(0.0, -1.0) * (q - 1.0) / (q + 1.0);
  }
  cd p = std::exp(cd(0.0, -2.0) * theta);  // |p| < 1
  return cd(0.0, -1.0) * (1.0 - p) / (1.0 + p);
}

// cot(pi s) without overflow for any |Im s|.
inline cd cot_pi(cd s) {
  cd theta = M_PI * s;
  if (theta.imag() >= 0.0) {
    cd q = std::exp(cd(0.0, 2.0) * theta);
    return cd(0.0, 1.0) * (q + 1.0) / (q - 1.0);
  }
  cd p = std::exp(cd(0.0, -2.0) * theta);
  return cd(0.0, 1.0) * (1.0 + p) / (1.0 - p);
}

// log(sin(pi z)) up to a multiple of 2*pi*i, exp-correct and overflow-free.
inline cd log_sin_pi(cd z) {
  const cd i(0.0, 1.0);
  if (z.imag() > 0.0) {
    // sin(pi z) = -e^{-i pi z}(1 - e^{2 i pi z})/(2 i)
    cd q = std::exp(2.0 * i * M_PI * z);  // |q| < 1
    return -i * M_PI * z + std::log(1.0 - q) - std::log(2.0) + i * M_PI / 2.0;
  }
  cd q = std::exp(-2.0 * i * M_PI * z);  // |q| <= 1
  return i * M_PI * z + std::log(1.0 - q) - std::log(2.0) - i * M_PI / 2.0;
}

// (pi/2) cot(pi x / 2) - 1/x, the regular remainder used when splitting off a
// simple pole; series for small x, direct otherwise.
inline cd half_pi_cot_half_pi_minus_inv(cd x) {
  cd theta = 0.5 * M_PI * x;
  if (std::abs(theta) < 0.5) {
    cd t2 = theta * theta;
    // cot(t) - 1/t = -t/3 - t^3/45 - 2 t^5/945 - t^7/4725 - 2 t^9/93555 - ...
    cd series = -theta / 3.0 - theta * t2 / 45.0 - 2.0 * theta * t2 * t2 / 945.0 -
                theta * t2 * t2 * t2 / 4725.0 -
                2.0 * theta * t2 * t2 * t2 * t2 / 93555.0;
    return 0.5 * M_PI * series;
  }
  return 0.5 * M_PI * cot_pi(0.5 * x) - 1.0 / x;
}

// Compensated (Kahan-Neumaier) accumulator for complex doubles. Zero-sum
// accumulation uses it so results are insensitive to benign reorderings.
class CompensatedSum {
 public:
  void add(cd x) {
    add_part(x.real(), re_, re_c_);
    add_part(x.imag(), im_, im_c_);
  }
  cd value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double x, double& s, double& c) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double re_ = 0.0, re_c_ = 0.0;
  double im_ = 0.0, im_c_ = 0.0;
};

inline bool is_nonpositive_integer(cd z, double tol = 0.0) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  if (r > 0.0) return false;
  double n = std::nearbyint(r);
  return std::abs(r - n) <= tol;
}

}  // namespace goldbach
