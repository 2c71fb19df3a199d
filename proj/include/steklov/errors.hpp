#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

// Bad arguments or evaluation outside a warp's admissible interval.
class domain_error : public std::runtime_error {
  public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive integration gave up; carries the radius reached when known.
class solver_error : public std::runtime_error {
  public:
    explicit solver_error(const std::string& what, double radius_reached = 0.0)
        : std::runtime_error(what), radius_reached_(radius_reached) {}

    double radius_reached() const { return radius_reached_; }

  private:
    double radius_reached_;
};

// Quadrature or root finding failed to converge.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Bisection bracket does not straddle a sign change.
class bracket_error : public std::runtime_error {
  public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling exhausted its attempt budget.
class sampling_error : public std::runtime_error {
  public:
    explicit sampling_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace steklov
