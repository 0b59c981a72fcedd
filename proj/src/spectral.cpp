#include "kt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kt {

SymMatrix::SymMatrix(int order)
    : order_(order),
      a_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {
  if (order < 0) throw std::invalid_argument("matrix order must be non-negative");
}

std::size_t SymMatrix::index(int i, int j) const {
  if (i < 0 || i >= order_ || j < 0 || j >= order_)
    throw std::invalid_argument("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
         static_cast<std::size_t>(j);
}

void SymMatrix::set(int i, int j, double value) {
  a_[index(i, j)] = value;
  a_[index(j, i)] = value;
}

SymMatrix signless_laplacian(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("signless laplacian needs n >= 1");
  SymMatrix q(g.order());
  for (int v = 0; v < g.order(); ++v) {
    q.set(v, v, static_cast<double>(g.degree(v)));
    for (int w : g.neighbors(v))
      if (v < w) q.set(v, w, 1.0);
  }
  return q;
}

SymMatrix laplacian(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("laplacian needs n >= 1");
  SymMatrix l(g.order());
  for (int v = 0; v < g.order(); ++v) {
    l.set(v, v, static_cast<double>(g.degree(v)));
    for (int w : g.neighbors(v))
      if (v < w) l.set(v, w, -1.0);
  }
  return l;
}

namespace {
constexpr double kOffTol = 1e-12;
constexpr int kMaxSweeps = 64;
}  // namespace

SpectralResult spectrum(const SymMatrix& m) {
  int n = m.order();
  if (n < 1) throw std::invalid_argument("spectrum needs order >= 1");
  if (n > 256) throw std::invalid_argument("spectrum supports order <= 256");
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double x = m.at(i, j);
      if (!std::isfinite(x)) throw std::invalid_argument("non-finite matrix entry");
      a[static_cast<std::size_t>(i * n + j)] = x;
    }
  std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + i)] = 1.0;

  auto at = [&](std::vector<double>& mat, int i, int j) -> double& {
    return mat[static_cast<std::size_t>(i * n + j)];
  };

  int sweeps = 0;
  for (; sweeps < kMaxSweeps; ++sweeps) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(a, p, q) * at(a, p, q);
    off = std::sqrt(2.0 * off);
    if (off < kOffTol) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(a, p, q);
        if (apq == 0.0) continue;
        double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double app = at(a, p, p), aqq = at(a, q, q);
        at(a, p, p) = app - t * apq;
        at(a, q, q) = aqq + t * apq;
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i != p && i != q) {
            double aip = at(a, i, p), aiq = at(a, i, q);
            at(a, i, p) = aip - s * (aiq + tau * aip);
            at(a, p, i) = at(a, i, p);
            at(a, i, q) = aiq + s * (aip - tau * aiq);
            at(a, q, i) = at(a, i, q);
          }
          double vip = at(v, i, p), viq = at(v, i, q);
          at(v, i, p) = vip - s * (viq + tau * vip);
          at(v, i, q) = viq + s * (vip - tau * viq);
        }
      }
    }
  }
  if (sweeps == kMaxSweeps) throw std::runtime_error("jacobi eigensolver did not converge");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    double di = at(a, i, i), dj = at(a, j, j);
    return di != dj ? di > dj : i < j;
  });

  SpectralResult r;
  r.iterations = sweeps;
  r.eigenvalues.reserve(static_cast<std::size_t>(n));
  for (int i : order) r.eigenvalues.push_back(at(a, i, i));

  int top = order[0];
  r.perron.resize(static_cast<std::size_t>(n));
  int arg = 0;
  for (int i = 0; i < n; ++i) {
    r.perron[static_cast<std::size_t>(i)] = at(v, i, top);
    if (std::abs(r.perron[static_cast<std::size_t>(i)]) >
        std::abs(r.perron[static_cast<std::size_t>(arg)]))
      arg = i;
  }
  if (r.perron[static_cast<std::size_t>(arg)] < 0.0)
    for (double& x : r.perron) x = -x;
  double norm = 0.0;
  for (double x : r.perron) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : r.perron) x /= norm;

  double lambda = r.eigenvalues[0];
  for (int i = 0; i < n; ++i) {
    double acc = -lambda * r.perron[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) acc += m.at(i, j) * r.perron[static_cast<std::size_t>(j)];
    r.residual = std::max(r.residual, std::abs(acc));
  }
  return r;
}

SpectralResult graph_spectrum(const Graph& g) {
  SpectralResult r = spectrum(signless_laplacian(g));
  if (r.residual > 1e-10) throw std::runtime_error("perron residual above tolerance");
  if (is_connected(g)) {
    for (double x : r.perron)
      if (!(x > 0.0))
        throw std::runtime_error("perron vector not strictly positive on connected graph");
  }
  return r;
}

double q1(const Graph& g) { return graph_spectrum(g).eigenvalues[0]; }

Comparison compare_q1(const Graph& a, const Graph& b, double gap_tol) {
  double d = q1(a) - q1(b);
  if (d > gap_tol) return Comparison::Greater;
  if (d < -gap_tol) return Comparison::Less;
  return Comparison::Tie;
}

double default_gap_tol() {
  static const double tol = [] {
    if (const char* env = std::getenv("KTREE_GAP_TOL")) {
      try {
        double v = std::stod(env);
        if (v > 0.0) return v;
      } catch (...) {
      }
    }
    return 1e-8;
  }();
  return tol;
}

}  // namespace kt
