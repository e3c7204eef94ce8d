#pragma once

#include <stdexcept>
#include <string>

namespace goldbach {

// Evaluation at a pole of the requested function.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument lies in a region the implementation deliberately does not cover.
class UnsupportedDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument is too close to a pole for a meaningful double-precision value.
class PoleProximity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A quadrature or series failed to reach the requested tolerance. Carries the
// error estimate that was actually achieved.
class ToleranceNotMet : public std::runtime_error {
 public:
  ToleranceNotMet(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " +
                           std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

// A zero-sum truncation height exceeds the loaded table. Carries the table's
// maximum height so callers can report what would be needed.
class InsufficientData : public std::runtime_error {
 public:
  InsufficientData(const std::string& what, double max_height)
      : std::runtime_error(what), max_height_(max_height) {}
  double max_height() const { return max_height_; }

 private:
  double max_height_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed zero-table input. Carries the 1-based offending line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, long line)
      : std::runtime_error(what + " at line " + std::to_string(line)),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

class SanityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace goldbach
