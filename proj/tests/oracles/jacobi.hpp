#pragma once

// Cyclic Jacobi eigenvalue iteration for dense symmetric matrices. Slow and
// simple on purpose: it shares no code with the library's Krylov solver.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

struct JacobiResult {
  std::vector<double> values;   // unsorted
  Dense vectors;                // vectors[i] is the eigenvector of values[i]
  int sweeps = 0;
};

inline JacobiResult jacobi(Dense a, int max_sweeps = 100) {
  const std::size_t n = a.size();
  Dense v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  JacobiResult out;
  for (out.sweeps = 0; out.sweeps < max_sweeps; ++out.sweeps) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        total += a[i][j] * a[i][j];
        if (i != j) off += a[i][j] * a[i][j];
      }
    }
    if (off <= 1e-30 * total || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a[i][i];
    for (std::size_t k = 0; k < n; ++k) out.vectors[i][k] = v[k][i];
  }
  return out;
}

inline double jacobi_top(const Dense& a) {
  const auto r = jacobi(a);
  double best = -INFINITY;
  for (double x : r.values) best = x > best ? x : best;
  return best;
}

}  // namespace oracle
