#pragma once

#include <stdexcept>
#include <string>

namespace mknf {

// Kleene iteration ran past its bound; the step is non-monotone or the
// bound was too small for the lattice.
struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A candidate-space enumeration was refused because the signature exceeds
// the configured cap.
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

// The truth-table oracle was asked to sweep more atoms than its cap allows.
struct SignatureTooLarge : std::runtime_error {
  explicit SignatureTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// A property-check sample did not satisfy the check's precondition.
struct InvalidSample : std::runtime_error {
  explicit InvalidSample(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace mknf
