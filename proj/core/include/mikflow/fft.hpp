#ifndef MIKFLOW_FFT_HPP
#define MIKFLOW_FFT_HPP

#include <complex>
#include <vector>

#include "mikflow/grid.hpp"

namespace mikflow {

// Normalized Fourier coefficients of a real field on the N^d grid, half-complex
// r2c layout: the last axis holds frequencies 0..N/2, the others -N/2..N/2-1
// (wrapped). Convention: f(x) = sum_k fhat(k) e^{2 pi i k.x}, so fhat(0) is the
// mean and Hermitian symmetry is implicit in the layout.
class SpectralCoeffs {
  public:
    SpectralCoeffs() = default;
    explicit SpectralCoeffs(const GridSpec& g);

    const GridSpec& grid() const { return grid_; }
    std::vector<std::complex<double>>& data() { return c_; }
    const std::vector<std::complex<double>>& data() const { return c_; }
    int last_n() const { return grid_.N / 2 + 1; }
    std::size_t size() const { return c_.size(); }

    // Integer frequency of index along axis a (wrapped to [-N/2, N/2)).
    int freq(int a, int idx) const {
        if (a == grid_.d - 1) return idx;
        return idx <= grid_.N / 2 ? idx : idx - grid_.N;
    }

    std::complex<double> at_freq(const int* k) const; // arbitrary integer freq, uses symmetry
    std::complex<double>& at_index(const int* idx);

    template <class F>
    void for_each(F&& f) const { // f(idx[], k[], value)
        iterate([&](const int* idx, const int* k, std::size_t flat) { f(idx, k, c_[flat]); });
    }
    template <class F>
    void transform(F&& f) { // f(k[], value&) mutates coefficients
        iterate([&](const int*, const int* k, std::size_t flat) { f(k, c_[flat]); });
    }

  private:
    template <class F>
    void iterate(F&& f) const {
        const int d = grid_.d, N = grid_.N, L = grid_.N / 2 + 1;
        int idx[kMaxDim] = {0};
        int k[kMaxDim] = {0};
        std::size_t flat = 0;
        while (true) {
            for (int a = 0; a < d; ++a) k[a] = (a == d - 1) ? idx[a] : (idx[a] <= N / 2 ? idx[a] : idx[a] - N);
            f(idx, k, flat);
            ++flat;
            int a = d - 1;
            while (a >= 0) {
                ++idx[a];
                if (idx[a] < ((a == d - 1) ? L : N)) break;
                idx[a] = 0;
                --a;
            }
            if (a < 0) break;
        }
    }

    GridSpec grid_;
    std::vector<std::complex<double>> c_;
};

// FFT plans are cached in a process-wide read-only pool keyed by (d, N).
SpectralCoeffs forward_fft(const ScalarField& f);
ScalarField inverse_fft(const SpectralCoeffs& c);

// Plane (d-1 dimensional) helpers reuse the same machinery via GridSpec{d-1,P}.

} // namespace mikflow

#endif
