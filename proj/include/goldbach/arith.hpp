#pragma once

#include <vector>

namespace goldbach::arith {

// values[n] = Lambda(n) for 1 <= n <= limit (values[0] unused, = 0).
struct LambdaTable {
  long limit = 0;
  std::vector<double> values;
};

// r[n] = sum_{m=1}^{n-1} Lambda(m) Lambda(n-m) for 2 <= n <= limit.
struct RepresentationTable {
  long limit = 0;
  std::vector<double> r;
};

LambdaTable sieve_lambda(long limit);

// Additive self-convolution of Lambda. The direct O(N^2) double loop is the
// default; use_transform switches to an FFT-based path that must agree with
// the direct one to 1e-9 relative (checked in tests).
RepresentationTable representation_table(const LambdaTable& lambda,
                                         bool use_transform = false);

// sum_{n<=N} r(n) - r(N)/2 (integer N, so the halving always applies).
double g0_direct(const RepresentationTable& r, long N);

// (1/Gamma(k+1)) sum_{n<N} r(n) (1 - n/N)^k
double gk_direct(const RepresentationTable& r, long N, double k);

// Same quantity through the rearranged double sum over Lambda; independent
// oracle for gk_direct.
double gk_nested(const LambdaTable& lambda, long N, double k);

}  // namespace goldbach::arith
