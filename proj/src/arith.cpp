#include "goldbach/arith.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace goldbach::arith {

namespace {

// Minimal iterative radix-2 FFT; sizes are always powers of two here.
void fft(std::vector<std::complex<double>>& a, bool inverse) {
  size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? -1.0 : 1.0);
    std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

}  // namespace

LambdaTable sieve_lambda(long limit) {
  if (limit < 2) throw std::invalid_argument("sieve_lambda: limit >= 2 required");
  LambdaTable t;
  t.limit = limit;
  t.values.assign(limit + 1, 0.0);
  std::vector<bool> composite(limit + 1, false);
  for (long p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (long q = 2 * p; q <= limit; q += p) composite[q] = true;
    double lp = std::log(static_cast<double>(p));
    for (long pk = p;; pk *= p) {
      t.values[pk] = lp;
      if (pk > limit / p) break;
    }
  }
  return t;
}

RepresentationTable representation_table(const LambdaTable& lambda,
                                         bool use_transform) {
  if (lambda.limit < 4)
    throw std::invalid_argument("representation_table: limit >= 4 required");
  long N = lambda.limit;
  RepresentationTable t;
  t.limit = N;
  t.r.assign(N + 1, 0.0);
  if (!use_transform) {
    for (long n = 4; n <= N; ++n) {
      double acc = 0.0;
      long half = n / 2;
      for (long m = 2; m <= half; ++m) {
        double prod = lambda.values[m] * lambda.values[n - m];
        acc += (2 * m == n) ? prod : 2.0 * prod;
      }
      t.r[n] = acc;
    }
    return t;
  }
  size_t sz = 1;
  while (sz < static_cast<size_t>(2 * N + 1)) sz <<= 1;
  std::vector<std::complex<double>> buf(sz, 0.0);
  for (long n = 2; n <= N; ++n) buf[n] = lambda.values[n];
  fft(buf, false);
  for (auto& x : buf) x *= x;
  fft(buf, true);
  for (long n = 4; n <= N; ++n) t.r[n] = buf[n].real();
  return t;
}

double g0_direct(const RepresentationTable& r, long N) {
  if (N < 2 || N > r.limit)
    throw std::invalid_argument("g0_direct: N out of table range");
  double acc = 0.0;
  for (long n = 2; n <= N; ++n) acc += r.r[n];
  return acc - 0.5 * r.r[N];
}

double gk_direct(const RepresentationTable& r, long N, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("gk_direct: k > 0 required");
  if (N < 4 || N > r.limit)
    throw std::invalid_argument("gk_direct: N out of table range");
  double acc = 0.0;
  double dn = static_cast<double>(N);
  for (long n = N - 1; n >= 4; --n)
    if (r.r[n] != 0.0) acc += r.r[n] * std::pow(1.0 - n / dn, k);
  return acc / std::tgamma(k + 1.0);
}

double gk_nested(const LambdaTable& lambda, long N, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("gk_nested: k > 0 required");
  if (N < 4 || N > lambda.limit)
    throw std::invalid_argument("gk_nested: N out of table range");
  double outer = 0.0;
  double dn = static_cast<double>(N);
  for (long m = 2; m < N; ++m) {
    if (lambda.values[m] == 0.0) continue;
    long M = N - m;
    double inner = 0.0;
    double dm = static_cast<double>(M);
    for (long n = 2; n < M; ++n)
      if (lambda.values[n] != 0.0)
        inner += lambda.values[n] * std::pow(1.0 - n / dm, k);
    outer += lambda.values[m] * std::pow(1.0 - m / dn, k) * inner;
  }
  return outer / std::tgamma(k + 1.0);
}

}  // namespace goldbach::arith
