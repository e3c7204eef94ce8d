// Reference values computed offline with mpmath (dps=30); see
// fixtures/generate_reference_values.py. Do not edit by hand.
#pragma once
#include <complex>

namespace ref {
using cd = std::complex<double>;

inline constexpr cd log_gamma_3_4i = {-1.7566267846037841, 4.7426644380346579};
inline constexpr cd log_gamma_0p5_14i = {-21.072210041923880, 22.949779692295985};
inline constexpr cd log_gamma_12p3_m7i = {16.270924485894086, -17.651511200949357};
inline constexpr cd digamma_0p5_10i = {2.3021676932743471, 1.5707963267948966};
inline constexpr cd digamma_m2p5_1p5i = {1.2124201004669808, 2.6803467438096722};
inline constexpr cd gamma_ratio_rho_example = {-0.0049247785275436207, -0.00069946097822347552};
inline constexpr cd zeta_1p5_37i = {0.99619000538369499, -0.35019557219128012};
inline constexpr cd zeta_prime_1p5_37i = {0.22635400355184211, 0.37383935970899902};
inline constexpr double zld_2 = -0.56996099309453281;
inline constexpr double zld_3 = -0.16482268215827724;
inline constexpr double zld_2p5 = -0.28874068555819310;
inline constexpr cd zld_1p25_3i = {0.26807361306402100, 0.013485192766018171};
inline constexpr cd zld_1p5_m30i = {0.28791635428540959, -0.46569785503183711};
inline constexpr cd zld_m0p5_30i = {-1.8517457655120089, 0.43237377838646082};
inline constexpr double zld_m1 = 1.9850537244054112;
inline constexpr double zld_m3 = 0.64542916293291614;
inline constexpr double zld_m5 = 0.14439246701005607;
inline constexpr double zld_m7 = -0.17487424323821776;
inline constexpr cd zeta_1p25_200i = {2.1241032861537150, -0.65108989788137243};
inline constexpr cd mellin_rhs_x0p25_z2_1i = {0.11235417517500227, -0.32200922650399815};
inline constexpr double euler_gamma = 0.57721566490153286;
inline constexpr double log_two_pi = 1.8378770664093455;
inline constexpr double minus_zld_const_at_m2 = -1.0799154134691556;
inline constexpr double minus_zld_const_at_m4 = -0.35931559016907548;
inline constexpr double minus_zld_const_at_m6 = 0.028923710118483260;

}  // namespace ref
