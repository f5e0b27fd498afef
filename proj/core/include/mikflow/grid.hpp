#ifndef MIKFLOW_GRID_HPP
#define MIKFLOW_GRID_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "mikflow/errors.hpp"

namespace mikflow {

constexpr int kMaxDim = 5;

// Uniform periodic grid on [0,1)^d, x_i = i/N per axis.
struct GridSpec {
    int d = 3;
    int N = 64;
    int n_t = 2; // time samples on [0,1], t_k = k/(n_t-1)

    GridSpec() = default;
    GridSpec(int d_, int N_, int n_t_ = 2) : d(d_), N(N_), n_t(n_t_) {
        if (d < 2 || d > kMaxDim) throw ValidationError("GridSpec: d out of range");
        if (N < 8 || (N & (N - 1)) != 0) throw ValidationError("GridSpec: N must be a power of two >= 8");
        if (n_t < 2) throw ValidationError("GridSpec: n_t >= 2");
    }

    std::size_t points() const {
        std::size_t n = 1;
        for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(N);
        return n;
    }
    double dt() const { return 1.0 / (n_t - 1); }
    double time(int k) const { return static_cast<double>(k) / (n_t - 1); }
    bool operator==(const GridSpec& o) const { return d == o.d && N == o.N && n_t == o.n_t; }
};

using PointEval = std::function<double(const double* x)>; // x has grid.d entries in [0,1)

// One time slice of a periodic scalar field. Optionally carries a closed-form
// evaluator so composites with unresolvable oscillations can still be sampled
// pointwise.
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(const GridSpec& g) : grid_(g), v_(g.points(), 0.0) {}
    ScalarField(const GridSpec& g, double fill) : grid_(g), v_(g.points(), fill) {}

    const GridSpec& grid() const { return grid_; }
    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }
    double& operator[](std::size_t i) { return v_[i]; }
    double operator[](std::size_t i) const { return v_[i]; }
    std::size_t size() const { return v_.size(); }

    void set_evaluator(PointEval e) { eval_ = std::move(e); }
    const PointEval& evaluator() const { return eval_; }
    bool has_evaluator() const { return static_cast<bool>(eval_); }

    // Fill grid values from a callable taking the point coordinates.
    template <class F>
    void sample(F&& f) {
        std::array<double, kMaxDim> x{};
        std::array<int, kMaxDim> idx{};
        const int d = grid_.d, N = grid_.N;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            std::size_t r = i;
            for (int a = d - 1; a >= 0; --a) { idx[a] = static_cast<int>(r % N); r /= N; }
            for (int a = 0; a < d; ++a) x[a] = static_cast<double>(idx[a]) / N;
            v_[i] = f(x.data());
        }
    }

  private:
    GridSpec grid_;
    std::vector<double> v_;
    PointEval eval_;
};

// d components on a shared grid.
class VectorField {
  public:
    VectorField() = default;
    explicit VectorField(const GridSpec& g) : grid_(g), comps_(g.d, ScalarField(g)) {}

    const GridSpec& grid() const { return grid_; }
    int dim() const { return grid_.d; }
    ScalarField& comp(int m) { return comps_[m]; }
    const ScalarField& comp(int m) const { return comps_[m]; }

  private:
    GridSpec grid_;
    std::vector<ScalarField> comps_;
};

// Time-dependent fields are arrays of slices; time is a parameter.
using TimeScalar = std::vector<ScalarField>;
using TimeVector = std::vector<VectorField>;

// Row-major index helpers.
inline std::size_t flat_index(const GridSpec& g, const int* idx) {
    std::size_t i = 0;
    for (int a = 0; a < g.d; ++a) i = i * g.N + static_cast<std::size_t>(idx[a]);
    return i;
}

double field_mean(const ScalarField& f);
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& f, double p);
double ck_norm(const ScalarField& f, int k);           // spectral derivatives, grid max
double wkp_norm(const ScalarField& f, int k, double p); // (sum_{|a|<=k} ||d^a f||_p^p)^{1/p}, max-form at p=inf
double wkp_norm(const VectorField& f, int k, double p);

// Largest active frequency magnitude (inf-norm over axes) with relative
// spectral threshold; used for Nyquist checks.
int max_active_frequency(const ScalarField& f, double rel_tol = 1e-12);

// g_lambda(x) = g(lambda x mod 1): exact re-indexing for integer lambda.
// Requires N >= 4*lambda*max_active_frequency(g) unless g is constant.
ScalarField rescale(const ScalarField& g, int lambda);

} // namespace mikflow

#endif
