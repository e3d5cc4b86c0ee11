#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gmorse {

/// Input outside the mathematical domain of an operation (r <= 0, x <= 0, ...).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Spectroscopic label cannot be parsed or is internally inconsistent.
class label_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The energy window contains no root satisfying the bound-state filters.
class no_bound_state_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// More than one filter-valid root survived; candidates are surfaced, not guessed at.
class ambiguous_root_error : public std::runtime_error {
public:
  ambiguous_root_error(const std::string &msg, std::vector<double> cands)
      : std::runtime_error(msg), candidates(std::move(cands)) {}
  std::vector<double> candidates;
};

/// A solution violates the constraints required for normalizable wavefunctions.
class unphysical_solution_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Division by a vanishing (Mc^2 + E - C_s)-type denominator.
class singularity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An iterative scheme failed to converge.
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Leading polynomial coefficient is zero.
class degenerate_degree_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace gmorse
