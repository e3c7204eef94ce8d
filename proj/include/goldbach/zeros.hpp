#pragma once

#include <string>
#include <vector>

#include "goldbach/complex_utils.hpp"

namespace goldbach::zeros {

// Ordinates of nontrivial zeta zeros (positive imaginary parts, ascending),
// as loaded from a table file. All zeros are taken on the critical line.
struct ZeroSet {
  std::vector<double> ordinates;
  std::string source;
  double max_height = 0.0;
};

// One zero rho = beta + i*gamma_ord. The enumeration below emits conjugate
// pairs so that sums with real-coefficient symmetry come out real.
struct Rho {
  double beta;
  double gamma_ord;
  cd value() const { return {beta, gamma_ord}; }
};

// Plain text, one positive decimal ordinate per line, ascending; '#' starts a
// comment. Errors: IoError (unreadable), FormatError (non-ascending,
// nonpositive, duplicate within 1e-9, or unparsable entry; carries the line),
// SanityError (first ordinate outside (14, 14.2)).
ZeroSet load_zeros(const std::string& path);

// All rho = 1/2 +- i*gamma with gamma <= T, ascending |gamma|, each positive
// ordinate immediately followed by its conjugate. Throws InsufficientData
// (carrying max_height) when T exceeds the table.
std::vector<Rho> zeros_up_to(const ZeroSet& zs, double T);

}  // namespace goldbach::zeros
