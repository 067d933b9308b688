#pragma once

#include <string>

namespace narrowpass::kernels {

// Dense double-precision primitives behind the network/optimizer hot loops.
// Two implementations of the same table: a scalar reference and an AVX2+FMA
// variant picked at runtime. All matrices are row-major. SIMD variants may
// reassociate sums, so cross-backend results agree to rounding, not bitwise;
// a fixed backend is bitwise deterministic.
struct Ops {
  // C[m x n] = A[m x k] * B[n x k]^T
  void (*gemm_nt)(const double* a, const double* b, double* c, int m, int n, int k);
  // C[m x k] = A[m x n] * B[n x k]
  void (*gemm_nn)(const double* a, const double* b, double* c, int m, int n, int k);
  // C[n x k] = A[m x n]^T * B[m x k]
  void (*gemm_tn)(const double* a, const double* b, double* c, int m, int n, int k);
  // Y[i, :] += bias
  void (*add_bias_rows)(double* y, const double* bias, int rows, int cols);
  // out[j] = sum_i A[i, j]
  void (*col_sums)(const double* a, double* out, int rows, int cols);
  void (*relu_forward)(const double* x, double* y, int n);
  // dx[i] = x[i] > 0 ? dy[i] : 0
  void (*relu_backward)(const double* x, const double* dy, double* dx, int n);
  // Bias-corrected adaptive-moment update; corrections are passed in as
  // inv_c1 = 1/(1-beta1^t), inv_c2 = 1/(1-beta2^t):
  //   m = beta1*m + (1-beta1)*g
  //   v = beta2*v + (1-beta2)*g*g
  //   p -= lr * (m*inv_c1) / (sqrt(v*inv_c2) + eps)
  void (*adam_step)(double* p, const double* g, double* m, double* v, int n, double lr,
                    double beta1, double beta2, double inv_c1, double inv_c2, double eps);
};

enum class Backend { kScalar, kAvx2 };

bool avx2_available();

// Best backend the CPU supports; used as the initial selection.
Backend detect_backend();

Backend active_backend();

// Returns false (and leaves the selection unchanged) if the requested backend
// is not supported on this CPU.
bool set_backend(Backend b);

// Honors the NARROWPASS_KERNELS environment variable ("scalar"/"avx2") once,
// then returns the active table.
const Ops& ops();

// Specific table, for equivalence tests. Must be supported.
const Ops& ops_for(Backend b);

std::string backend_name(Backend b);

}  // namespace narrowpass::kernels
