#include "goldbach/zeros.hpp"

#include <cstdlib>
#include <fstream>

#include "goldbach/errors.hpp"

namespace goldbach::zeros {

ZeroSet load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero table: " + path);
  ZeroSet zs;
  zs.source = path;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r\n");
    std::string tok = line.substr(b, e - b + 1);
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      throw FormatError("unparsable ordinate '" + tok + "'", lineno);
    if (!(v > 0.0)) throw FormatError("nonpositive ordinate", lineno);
    if (!zs.ordinates.empty()) {
      double prev = zs.ordinates.back();
      if (v <= prev) throw FormatError("non-ascending ordinate", lineno);
      if (v - prev <= 1e-9) throw FormatError("duplicate ordinate within 1e-9", lineno);
    }
    zs.ordinates.push_back(v);
  }
  if (in.bad()) throw IoError("read error on zero table: " + path);
  if (!zs.ordinates.empty()) {
    double first = zs.ordinates.front();
    if (!(first > 14.0 && first < 14.2))
      throw SanityError("first ordinate outside (14, 14.2): " + std::to_string(first));
    zs.max_height = zs.ordinates.back();
  }
  return zs;
}

std::vector<Rho> zeros_up_to(const ZeroSet& zs, double T) {
  if (T > zs.max_height)
    throw InsufficientData(
        "zero table only reaches height " + std::to_string(zs.max_height) +
            " but T=" + std::to_string(T) + " was requested",
        zs.max_height);
  std::vector<Rho> out;
  for (double g : zs.ordinates) {
    if (g > T) break;
    out.push_back({0.5, g});
    out.push_back({0.5, -g});
  }
  return out;
}

}  // namespace goldbach::zeros
