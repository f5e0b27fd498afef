#include "mikflow/spectral.hpp"

#include <cmath>
#include <numbers>

namespace mikflow {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SpectralCoeffs spectral_derivative(const SpectralCoeffs& c, int axis, int order) {
    SpectralCoeffs out = c;
    const int N = c.grid().N;
    out.transform([&](const int* k, std::complex<double>& z) {
        int ka = k[axis];
        if ((order % 2) != 0 && std::abs(ka) == N / 2) {
            z = 0.0;
            return;
        }
        std::complex<double> m = std::pow(std::complex<double>(0.0, kTwoPi * ka), order);
        z *= m;
    });
    return out;
}

ScalarField derivative(const ScalarField& f, int axis, int order) {
    return inverse_fft(spectral_derivative(forward_fft(f), axis, order));
}

VectorField gradient(const ScalarField& f) {
    VectorField out(f.grid());
    SpectralCoeffs hat = forward_fft(f);
    for (int a = 0; a < f.grid().d; ++a) out.comp(a) = inverse_fft(spectral_derivative(hat, a, 1));
    return out;
}

ScalarField divergence(const VectorField& v) {
    const GridSpec& g = v.grid();
    SpectralCoeffs acc(g);
    for (int a = 0; a < g.d; ++a) {
        SpectralCoeffs da = spectral_derivative(forward_fft(v.comp(a)), a, 1);
        for (std::size_t i = 0; i < acc.size(); ++i) acc.data()[i] += da.data()[i];
    }
    acc.data()[0] = 0.0; // divergence has zero mean
    return inverse_fft(acc);
}

ScalarField laplacian(const ScalarField& f) {
    SpectralCoeffs hat = forward_fft(f);
    hat.transform([&](const int* k, std::complex<double>& z) {
        double k2 = 0.0;
        for (int a = 0; a < f.grid().d; ++a) k2 += static_cast<double>(k[a]) * k[a];
        z *= -kTwoPi * kTwoPi * k2;
    });
    return inverse_fft(hat);
}

void require_zero_mean(const ScalarField& g, const char* who) {
    double m = field_mean(g);
    double scale = lp_norm(g, 2.0);
    if (std::abs(m) > kMeanTolRel * std::max(scale, 1e-300))
        throw NonZeroMean(std::string(who) + ": |mean| = " + std::to_string(std::abs(m)));
}

namespace {

SpectralCoeffs inv_lap_hat(SpectralCoeffs hat) {
    hat.transform([&](const int* k, std::complex<double>& z) {
        double k2 = 0.0;
        for (int a = 0; a < hat.grid().d; ++a) k2 += static_cast<double>(k[a]) * k[a];
        if (k2 == 0.0)
            z = 0.0;
        else
            z /= -kTwoPi * kTwoPi * k2;
    });
    return hat;
}

} // namespace

ScalarField inverse_laplacian(const ScalarField& g) {
    require_zero_mean(g, "inverse_laplacian");
    return inverse_fft(inv_lap_hat(forward_fft(g)));
}

VectorField std_antidivergence(const ScalarField& g) {
    require_zero_mean(g, "std_antidivergence");
    SpectralCoeffs pot = inv_lap_hat(forward_fft(g));
    VectorField out(g.grid());
    for (int a = 0; a < g.grid().d; ++a) out.comp(a) = inverse_fft(spectral_derivative(pot, a, 1));
    return out;
}

VectorField std_antidivergence_rescaled(const ScalarField& g, int lambda) {
    VectorField base = std_antidivergence(g);
    VectorField out(g.grid());
    for (int a = 0; a < g.grid().d; ++a) {
        out.comp(a) = rescale(base.comp(a), lambda);
        for (double& v : out.comp(a).data()) v /= lambda;
    }
    return out;
}

VectorField improved_antidivergence(const ScalarField& f, const ScalarField& g, int lambda) {
    require_zero_mean(g, "improved_antidivergence(g)");
    const GridSpec& gr = f.grid();
    VectorField ag = std_antidivergence_rescaled(g, lambda);

    // mean(f g_lambda) must vanish for div u = f g_lambda to be solvable
    ScalarField glam = rescale(g, lambda);
    ScalarField prod(gr);
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = f[i] * glam[i];
    require_zero_mean(prod, "improved_antidivergence(f*g_lambda)");

    VectorField grad_f = gradient(f);
    ScalarField inner(gr);
    for (std::size_t i = 0; i < inner.size(); ++i) {
        double s = 0.0;
        for (int a = 0; a < gr.d; ++a) s += grad_f.comp(a)[i] * ag.comp(a)[i];
        inner[i] = s;
    }
    // inner = div(f ag) - f g_lambda has zero mean analytically; enforce exactly
    double im = field_mean(inner);
    for (double& v : inner.data()) v -= im;
    VectorField corr = std_antidivergence(inner);

    VectorField u(gr);
    for (int a = 0; a < gr.d; ++a)
        for (std::size_t i = 0; i < u.comp(a).size(); ++i)
            u.comp(a)[i] = f[i] * ag.comp(a)[i] - corr.comp(a)[i];
    return u;
}

VectorField improved_antidivergence(const VectorField& f, const VectorField& g, int lambda) {
    const GridSpec& gr = f.grid();
    VectorField sum_fa(gr); // sum_m f_m grad(Delta^-1)(g_m)_lambda
    ScalarField inner(gr, 0.0);
    for (int m = 0; m < gr.d; ++m) {
        if (lp_norm(g.comp(m), 2.0) == 0.0) continue;
        require_zero_mean(g.comp(m), "improved_antidivergence(vector g)");
        VectorField ag = std_antidivergence_rescaled(g.comp(m), lambda);
        VectorField gf = gradient(f.comp(m));
        for (std::size_t i = 0; i < inner.size(); ++i) {
            double s = 0.0;
            for (int b = 0; b < gr.d; ++b) {
                sum_fa.comp(b)[i] += f.comp(m)[i] * ag.comp(b)[i];
                s += gf.comp(b)[i] * ag.comp(b)[i];
            }
            inner[i] += s;
        }
    }
    double im = field_mean(inner);
    for (double& v : inner.data()) v -= im;
    VectorField corr = std_antidivergence(inner);
    VectorField u(gr);
    for (int a = 0; a < gr.d; ++a)
        for (std::size_t i = 0; i < u.comp(a).size(); ++i)
            u.comp(a)[i] = sum_fa.comp(a)[i] - corr.comp(a)[i];
    return u;
}

} // namespace mikflow
