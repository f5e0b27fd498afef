#include "mikflow/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace mikflow {

SpectralCoeffs::SpectralCoeffs(const GridSpec& g) : grid_(g) {
    std::size_t n = 1;
    for (int a = 0; a < g.d - 1; ++a) n *= static_cast<std::size_t>(g.N);
    n *= static_cast<std::size_t>(g.N / 2 + 1);
    c_.assign(n, {0.0, 0.0});
}

std::complex<double> SpectralCoeffs::at_freq(const int* k) const {
    const int d = grid_.d, N = grid_.N, L = N / 2 + 1;
    int kk[kMaxDim];
    bool conj = false;
    for (int a = 0; a < d; ++a) kk[a] = k[a];
    // wrap to principal band; out-of-band frequencies carry no content
    for (int a = 0; a < d; ++a)
        if (kk[a] > N / 2 || kk[a] < -N / 2) return {0.0, 0.0};
    if (kk[d - 1] < 0) {
        conj = true;
        for (int a = 0; a < d; ++a) kk[a] = -kk[a];
    }
    std::size_t flat = 0;
    for (int a = 0; a < d - 1; ++a) {
        int idx = kk[a] >= 0 ? kk[a] : kk[a] + N;
        if (idx == N) idx = 0;
        flat = flat * N + static_cast<std::size_t>(idx);
    }
    flat = flat * L + static_cast<std::size_t>(kk[d - 1]);
    return conj ? std::conj(c_[flat]) : c_[flat];
}

std::complex<double>& SpectralCoeffs::at_index(const int* idx) {
    const int d = grid_.d, N = grid_.N, L = N / 2 + 1;
    std::size_t flat = 0;
    for (int a = 0; a < d - 1; ++a) flat = flat * N + static_cast<std::size_t>(idx[a]);
    flat = flat * L + static_cast<std::size_t>(idx[d - 1]);
    return c_[flat];
}

namespace {

struct PlanKey {
    int d;
    int N;
    bool forward;
    bool operator<(const PlanKey& o) const {
        if (d != o.d) return d < o.d;
        if (N != o.N) return N < o.N;
        return forward < o.forward;
    }
};

// Plans built once, shared afterwards; execution with distinct arrays is
// thread-safe via fftw_execute_dft_r2c.
class PlanPool {
  public:
    static PlanPool& instance() {
        static PlanPool p;
        return p;
    }

    fftw_plan get(int d, int N, bool forward) {
        std::lock_guard<std::mutex> lk(mu_);
        PlanKey key{d, N, forward};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::vector<int> dims(d, N);
        std::size_t nr = 1;
        for (int a = 0; a < d - 1; ++a) nr *= static_cast<std::size_t>(N);
        std::size_t nc = nr * static_cast<std::size_t>(N / 2 + 1);
        nr *= static_cast<std::size_t>(N);

        double* r = fftw_alloc_real(nr);
        fftw_complex* c = fftw_alloc_complex(nc);
        fftw_plan p;
        if (forward)
            p = fftw_plan_dft_r2c(d, dims.data(), r, c, FFTW_MEASURE);
        else
            p = fftw_plan_dft_c2r(d, dims.data(), c, r, FFTW_MEASURE);
        fftw_free(r);
        fftw_free(c);
        plans_[key] = p;
        return p;
    }

  private:
    std::mutex mu_;
    std::map<PlanKey, fftw_plan> plans_;
};

} // namespace

SpectralCoeffs forward_fft(const ScalarField& f) {
    const GridSpec& g = f.grid();
    SpectralCoeffs out(g);
    fftw_plan p = PlanPool::instance().get(g.d, g.N, true);
    std::vector<double> work(f.data()); // r2c destroys input
    fftw_execute_dft_r2c(p, work.data(), reinterpret_cast<fftw_complex*>(out.data().data()));
    const double scale = 1.0 / static_cast<double>(g.points());
    for (auto& z : out.data()) z *= scale;
    return out;
}

ScalarField inverse_fft(const SpectralCoeffs& c) {
    const GridSpec& g = c.grid();
    ScalarField out(g);
    fftw_plan p = PlanPool::instance().get(g.d, g.N, false);
    std::vector<std::complex<double>> work(c.data()); // c2r destroys input
    fftw_execute_dft_c2r(p, reinterpret_cast<fftw_complex*>(work.data()), out.data().data());
    return out;
}

} // namespace mikflow
