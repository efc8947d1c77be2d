#pragma once

// Discrete Clifford Fourier transform on periodic lattices.
//
//   F(w_k) = Sum_n f(x_n) exp(-i3 w_k . x_n) dV_x
//   f(x_n) = (2 pi)^-3 Sum_k F(w_k) exp(+i3 w_k . x_n) dV_w
//
// The frequency lattice has spacing dw = 2 pi / (n dx) per axis and is
// centered (signed index in [-n/2, n/2)), so dV_x dV_w n^3 / (2 pi)^3 = 1 and
// the pair above is an exact inverse, for any space origin.
//
// Because i3 is central and squares to -1, f(x) exp(-i3 theta) is the
// ordinary complex rotation exp(-i theta) in each of the four complex
// channels. cftFast uses that to run four complex FFTs; cftDirect evaluates
// the sum exactly as written and is the reference oracle.

#include "cl3/field.hpp"

namespace cl3 {

// O(N^2) reference transform. Throws ArgumentError unless f is a space field.
MultivectorField cftDirect(const MultivectorField& f);

// The Riemann sum Sum_n f(x_n) exp(-i3 w . x_n) dV at an arbitrary frequency
// (w need not lie on the lattice). Throws ArgumentError unless `omega` is
// grade-1 and f is a space field.
Multivector cftAt(const MultivectorField& f, const Multivector& omega);

// FFT-backed transform, same output as cftDirect up to rounding.
MultivectorField cftFast(const MultivectorField& f);

// Inverse transform onto the space lattice recorded in the spectrum's grid.
// Throws ArgumentError unless F is a frequency field.
MultivectorField cftInverse(const MultivectorField& spectrum);

// O(N^2) reference inverse.
MultivectorField cftInverseDirect(const MultivectorField& spectrum);

// Periodic convolution (f * g)(x) = Sum_y f(y) g(x - y) dV. The operand
// order is fixed: f on the left. Requires identical space lattices that
// contain the coordinate origin (origin / dx integral on every axis);
// otherwise ArgumentError.
//
// convolve goes through the spectrum, cftInverse(F{f} F{g}); convolveDirect
// is the O(N^2) reference sum.
MultivectorField convolve(const MultivectorField& f, const MultivectorField& g);
MultivectorField convolveDirect(const MultivectorField& f, const MultivectorField& g);

// Pointwise (i3 w)^m F{f}(w), transformed back. m must be 1 or 2, otherwise
// UnsupportedOrderError. For m = 1 the vector i3 w multiplies from the left.
MultivectorField spectralDerivative(const MultivectorField& f, int m);

// Solves d_t f = laplacian f on the periodic box with the spectral multiplier
// exp(-|w|^2 t). Throws ArgumentError for t < 0 or non-finite t.
MultivectorField heatPropagate(const MultivectorField& f0, double t);

}  // namespace cl3
