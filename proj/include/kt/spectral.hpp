#pragma once

#include <vector>

#include "kt/graph.hpp"

namespace kt {

/// Dense real symmetric matrix; symmetry holds by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order);
  int order() const { return order_; }
  double at(int i, int j) const { return a_[index(i, j)]; }
  void set(int i, int j, double value);

 private:
  std::size_t index(int i, int j) const;
  int order_ = 0;
  std::vector<double> a_;
};

/// Q(G) = D(G) + A(G).
SymMatrix signless_laplacian(const Graph& g);
/// L(G) = D(G) - A(G); used as an independent cross-check for k = 1.
SymMatrix laplacian(const Graph& g);

struct SpectralResult {
  std::vector<double> eigenvalues;  // sorted descending
  std::vector<double> perron;       // unit eigenvector of the top eigenvalue
  double residual = 0.0;            // max-norm of Q x - q1 x
  int iterations = 0;               // Jacobi sweeps
};

/// Full spectrum by cyclic Jacobi rotations; order <= 256, deterministic.
SpectralResult spectrum(const SymMatrix& m);

/// Spectrum of Q(G); checks the Perron vector is strictly positive when the
/// graph is connected.
SpectralResult graph_spectrum(const Graph& g);

double q1(const Graph& g);

enum class Comparison { Less, Greater, Tie };

/// Three-way q1 comparison; a |difference| <= gap_tol is reported as Tie,
/// never silently resolved.
Comparison compare_q1(const Graph& a, const Graph& b, double gap_tol);

/// 1e-8 unless overridden by the KTREE_GAP_TOL environment variable.
double default_gap_tol();

}  // namespace kt
