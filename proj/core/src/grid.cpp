#include "mikflow/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "mikflow/spectral.hpp"

namespace mikflow {

double field_mean(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.data()) s += v;
    return s / static_cast<double>(f.size());
}

double lp_norm(const ScalarField& f, double p) {
    if (!(p >= 1.0)) throw InvalidExponent("lp_norm requires p >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : f.data()) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    if (p == 1.0) {
        for (double v : f.data()) s += std::abs(v);
    } else if (p == 2.0) {
        for (double v : f.data()) s += v * v;
    } else {
        for (double v : f.data()) s += std::pow(std::abs(v), p);
    }
    return std::pow(s / static_cast<double>(f.size()), 1.0 / p);
}

double lp_norm(const VectorField& f, double p) {
    if (!(p >= 1.0)) throw InvalidExponent("lp_norm requires p >= 1");
    const int d = f.dim();
    const std::size_t n = f.comp(0).size();
    double s = 0.0, m = 0.0;
    const bool inf = std::isinf(p);
    for (std::size_t i = 0; i < n; ++i) {
        double q = 0.0;
        for (int a = 0; a < d; ++a) {
            double v = f.comp(a)[i];
            q += v * v;
        }
        double mag = std::sqrt(q);
        if (inf)
            m = std::max(m, mag);
        else if (p == 1.0)
            s += mag;
        else if (p == 2.0)
            s += q;
        else
            s += std::pow(mag, p);
    }
    if (inf) return m;
    return std::pow(s / static_cast<double>(n), 1.0 / p);
}

namespace {

// Accumulate |d^alpha f|^2 pointwise over all multi-indices of given order.
void add_order_sq(const SpectralCoeffs& hat, int order, std::vector<double>& acc) {
    const GridSpec& g = hat.grid();
    const int d = g.d;
    std::vector<int> alpha(d, 0);
    // iterate over compositions of `order` into d parts
    std::function<void(int, int)> rec = [&](int axis, int rem) {
        if (axis == d - 1) {
            alpha[axis] = rem;
            SpectralCoeffs c = hat;
            for (int a = 0; a < d; ++a)
                if (alpha[a] > 0) c = spectral_derivative(c, a, alpha[a]);
            ScalarField da = inverse_fft(c);
            // multinomial multiplicity so the sum equals |D^k f|_F^2
            double mult = 1.0;
            int rest = order;
            for (int a = 0; a < d; ++a) {
                for (int j = 0; j < alpha[a]; ++j) mult *= static_cast<double>(rest - j);
                double fact = 1.0;
                for (int j = 2; j <= alpha[a]; ++j) fact *= j;
                mult /= fact;
                rest -= alpha[a];
            }
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += mult * da[i] * da[i];
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            alpha[axis] = v;
            rec(axis + 1, rem - v);
        }
    };
    rec(0, order);
}

} // namespace

double ck_norm(const ScalarField& f, int k) {
    if (k < 0) throw ValidationError("ck_norm: k >= 0");
    double best = lp_norm(f, std::numeric_limits<double>::infinity());
    if (k == 0) return best;
    SpectralCoeffs hat = forward_fft(f);
    for (int m = 1; m <= k; ++m) {
        std::vector<double> acc(f.size(), 0.0);
        add_order_sq(hat, m, acc);
        double mx = 0.0;
        for (double v : acc) mx = std::max(mx, v);
        best = std::max(best, std::sqrt(mx));
    }
    return best;
}

double wkp_norm(const ScalarField& f, int k, double p) {
    if (std::isinf(p)) return ck_norm(f, k);
    double acc = std::pow(lp_norm(f, p), p);
    if (k > 0) {
        SpectralCoeffs hat = forward_fft(f);
        for (int m = 1; m <= k; ++m) {
            std::vector<double> sq(f.size(), 0.0);
            add_order_sq(hat, m, sq);
            ScalarField mag(f.grid());
            for (std::size_t i = 0; i < sq.size(); ++i) mag[i] = std::sqrt(sq[i]);
            acc += std::pow(lp_norm(mag, p), p);
        }
    }
    return std::pow(acc, 1.0 / p);
}

double wkp_norm(const VectorField& f, int k, double p) {
    double acc = 0.0;
    for (int a = 0; a < f.dim(); ++a) acc += std::pow(wkp_norm(f.comp(a), k, p), p);
    return std::pow(acc, 1.0 / p);
}

int max_active_frequency(const ScalarField& f, double rel_tol) {
    SpectralCoeffs hat = forward_fft(f);
    double mx = 0.0;
    for (const auto& z : hat.data()) mx = std::max(mx, std::abs(z));
    if (mx == 0.0) return 0;
    int kmax = 0;
    hat.for_each([&](const int*, const int* k, const std::complex<double>& z) {
        if (std::abs(z) <= rel_tol * mx) return;
        int m = 0;
        for (int a = 0; a < hat.grid().d; ++a) m = std::max(m, std::abs(k[a]));
        kmax = std::max(kmax, m);
    });
    return kmax;
}

ScalarField rescale(const ScalarField& g, int lambda) {
    if (lambda < 1) throw ValidationError("rescale: lambda must be a positive integer");
    const GridSpec& gr = g.grid();
    const int kact = max_active_frequency(g);
    if (kact > 0 && gr.N < 4 * lambda * kact)
        throw ResolutionTooCoarse("rescale: N < 4*lambda*max_active_frequency");
    ScalarField out(gr);
    const int d = gr.d, N = gr.N;
    int idx[kMaxDim] = {0};
    for (std::size_t i = 0; i < out.size(); ++i) {
        int src[kMaxDim];
        for (int a = 0; a < d; ++a) src[a] = static_cast<int>((static_cast<long long>(lambda) * idx[a]) % N);
        out[i] = g[flat_index(gr, src)];
        int a = d - 1;
        while (a >= 0) {
            ++idx[a];
            if (idx[a] < N) break;
            idx[a] = 0;
            --a;
        }
    }
    if (g.has_evaluator()) {
        PointEval base = g.evaluator();
        int lam = lambda;
        out.set_evaluator([base, lam, d](const double* x) {
            double y[kMaxDim];
            for (int a = 0; a < d; ++a) {
                double t = lam * x[a];
                y[a] = t - std::floor(t);
            }
            return base(y);
        });
    }
    return out;
}

} // namespace mikflow
