#ifndef MIKFLOW_BUMP_HPP
#define MIKFLOW_BUMP_HPP

#include <array>

namespace mikflow {

// The C_c^infinity unit bump B(t) = exp(-s/(t(1-t))) on (0,1), zero outside,
// with analytic derivatives up to order 4. All cutoffs and Mikado profiles
// are built from it.
class Bump {
  public:
    explicit Bump(double shape = 0.5) : s_(shape) {}

    double shape() const { return s_; }
    double operator()(double t) const { return value(t); }
    double value(double t) const;
    // k-th derivative, 0 <= k <= 4
    double deriv(double t, int k) const;

  private:
    std::array<double, 5> g_derivs(double t) const; // g = -s/(t(1-t)) and derivatives
    double s_;
};

// Smoothstep S(u) = B(u) / (B(u) + B(1-u)): 0 for u <= 0, 1 for u >= 1,
// C^infinity transition in between.
double smoothstep(double u, double shape = 0.5);
double smoothstep_deriv(double u, int k, double shape = 0.5); // k <= 2, via bump derivatives

} // namespace mikflow

#endif
