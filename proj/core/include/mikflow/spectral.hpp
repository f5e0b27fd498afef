#ifndef MIKFLOW_SPECTRAL_HPP
#define MIKFLOW_SPECTRAL_HPP

#include "mikflow/fft.hpp"
#include "mikflow/grid.hpp"

namespace mikflow {

// Spectral partial derivative along one axis. Odd-order multipliers zero the
// Nyquist plane to keep real output exact.
SpectralCoeffs spectral_derivative(const SpectralCoeffs& c, int axis, int order = 1);

ScalarField derivative(const ScalarField& f, int axis, int order = 1);
VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
ScalarField laplacian(const ScalarField& f);

// Default relative mean tolerance for the zero-mean preconditions.
inline constexpr double kMeanTolRel = 1e-10;

void require_zero_mean(const ScalarField& g, const char* who);

// Unique zero-mean h with Laplacian h = g (spectral).
ScalarField inverse_laplacian(const ScalarField& g);

// Standard antidivergence grad(Delta^-1) g; div(result) = g spectrally.
VectorField std_antidivergence(const ScalarField& g);

// grad(Delta^-1) of g_lambda via the rescaling identity
//   grad Delta^-1 (g_lambda) (x) = lambda^-1 (grad Delta^-1 g)(lambda x),
// so the cost is independent of lambda.
VectorField std_antidivergence_rescaled(const ScalarField& g, int lambda);

// Improved antidivergence of Lemma-2.3 shape:
//   u = f grad(Delta^-1) g_lambda - grad(Delta^-1)( grad f . grad(Delta^-1) g_lambda )
// for scalar f,g with mean(g) = 0 and mean(f g_lambda) = 0. div u = f g_lambda.
VectorField improved_antidivergence(const ScalarField& f, const ScalarField& g, int lambda);

// Vector version solving div u = f . g_lambda (componentwise sum).
VectorField improved_antidivergence(const VectorField& f, const VectorField& g, int lambda);

} // namespace mikflow

#endif
