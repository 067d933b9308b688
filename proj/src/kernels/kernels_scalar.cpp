#include <cmath>

#include "narrowpass/kernels.hpp"

namespace narrowpass::kernels {
namespace {

void gemm_nt(const double* a, const double* b, double* c, int m, int n, int k) {
  for (int i = 0; i < m; ++i) {
    const double* ai = a + static_cast<long>(i) * k;
    for (int j = 0; j < n; ++j) {
      const double* bj = b + static_cast<long>(j) * k;
      double acc = 0.0;
      for (int l = 0; l < k; ++l) acc += ai[l] * bj[l];
      c[static_cast<long>(i) * n + j] = acc;
    }
  }
}

void gemm_nn(const double* a, const double* b, double* c, int m, int n, int k) {
  for (int i = 0; i < m; ++i) {
    double* ci = c + static_cast<long>(i) * k;
    for (int l = 0; l < k; ++l) ci[l] = 0.0;
    const double* ai = a + static_cast<long>(i) * n;
    for (int j = 0; j < n; ++j) {
      const double aij = ai[j];
      const double* bj = b + static_cast<long>(j) * k;
      for (int l = 0; l < k; ++l) ci[l] += aij * bj[l];
    }
  }
}

void gemm_tn(const double* a, const double* b, double* c, int m, int n, int k) {
  for (int j = 0; j < n; ++j) {
    double* cj = c + static_cast<long>(j) * k;
    for (int l = 0; l < k; ++l) cj[l] = 0.0;
  }
  for (int i = 0; i < m; ++i) {
    const double* ai = a + static_cast<long>(i) * n;
    const double* bi = b + static_cast<long>(i) * k;
    for (int j = 0; j < n; ++j) {
      const double aij = ai[j];
      double* cj = c + static_cast<long>(j) * k;
      for (int l = 0; l < k; ++l) cj[l] += aij * bi[l];
    }
  }
}

void add_bias_rows(double* y, const double* bias, int rows, int cols) {
  for (int i = 0; i < rows; ++i) {
    double* yi = y + static_cast<long>(i) * cols;
    for (int j = 0; j < cols; ++j) yi[j] += bias[j];
  }
}

void col_sums(const double* a, double* out, int rows, int cols) {
  for (int j = 0; j < cols; ++j) out[j] = 0.0;
  for (int i = 0; i < rows; ++i) {
    const double* ai = a + static_cast<long>(i) * cols;
    for (int j = 0; j < cols; ++j) out[j] += ai[j];
  }
}

void relu_forward(const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward(const double* x, const double* dy, double* dx, int n) {
  for (int i = 0; i < n; ++i) dx[i] = x[i] > 0.0 ? dy[i] : 0.0;
}

void adam_step(double* p, const double* g, double* m, double* v, int n, double lr, double beta1,
               double beta2, double inv_c1, double inv_c2, double eps) {
  for (int i = 0; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    p[i] -= lr * (m[i] * inv_c1) / (std::sqrt(v[i] * inv_c2) + eps);
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{gemm_nt, gemm_nn,      gemm_tn,       add_bias_rows,
                         col_sums, relu_forward, relu_backward, adam_step};
  return table;
}

}  // namespace narrowpass::kernels
