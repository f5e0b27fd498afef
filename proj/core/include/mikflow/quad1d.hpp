#ifndef MIKFLOW_QUAD1D_HPP
#define MIKFLOW_QUAD1D_HPP

#include <complex>
#include <functional>
#include <vector>

namespace mikflow {

// Gauss-Legendre nodes/weights on [0,1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

const GaussRule& gauss_rule(int order); // cached, order <= 64

// Composite Gauss-Legendre over [a,b] with `panels` equal panels.
template <class F>
double integrate(F&& f, double a, double b, int panels = 32, int order = 16) {
    const GaussRule& r = gauss_rule(order);
    const double h = (b - a) / panels;
    double s = 0.0;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        for (std::size_t q = 0; q < r.x.size(); ++q) s += r.w[q] * f(lo + h * r.x[q]);
    }
    return s * h;
}

template <class F>
std::complex<double> integrate_c(F&& f, double a, double b, int panels = 32, int order = 16) {
    const GaussRule& r = gauss_rule(order);
    const double h = (b - a) / panels;
    std::complex<double> s = 0.0;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        for (std::size_t q = 0; q < r.x.size(); ++q) s += r.w[q] * f(lo + h * r.x[q]);
    }
    return s * h;
}

// Least-squares slope of log(y) vs log(x); returns {slope, intercept, max
// relative fit residual}.
struct LogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};
LogFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace mikflow

#endif
