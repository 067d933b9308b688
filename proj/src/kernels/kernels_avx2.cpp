// AVX2+FMA variants of the kernel table. Compiled with -mavx2 -mfma; only
// reached through the runtime dispatcher when the CPU reports support.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "narrowpass/kernels.hpp"

namespace narrowpass::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double dot_tail(const double* x, const double* y, int n) {
  double acc = 0.0;
  for (int l = 0; l < n; ++l) acc += x[l] * y[l];
  return acc;
}

void gemm_nt(const double* a, const double* b, double* c, int m, int n, int k) {
  const int k4 = k & ~3;
  int i = 0;
  for (; i + 2 <= m; i += 2) {
    const double* a0 = a + static_cast<long>(i) * k;
    const double* a1 = a0 + k;
    int j = 0;
    for (; j + 4 <= n; j += 4) {
      const double* b0 = b + static_cast<long>(j) * k;
      const double* b1 = b0 + k;
      const double* b2 = b1 + k;
      const double* b3 = b2 + k;
      __m256d acc00 = _mm256_setzero_pd(), acc01 = acc00, acc02 = acc00, acc03 = acc00;
      __m256d acc10 = acc00, acc11 = acc00, acc12 = acc00, acc13 = acc00;
      for (int l = 0; l < k4; l += 4) {
        const __m256d va0 = _mm256_loadu_pd(a0 + l);
        const __m256d va1 = _mm256_loadu_pd(a1 + l);
        __m256d vb = _mm256_loadu_pd(b0 + l);
        acc00 = _mm256_fmadd_pd(va0, vb, acc00);
        acc10 = _mm256_fmadd_pd(va1, vb, acc10);
        vb = _mm256_loadu_pd(b1 + l);
        acc01 = _mm256_fmadd_pd(va0, vb, acc01);
        acc11 = _mm256_fmadd_pd(va1, vb, acc11);
        vb = _mm256_loadu_pd(b2 + l);
        acc02 = _mm256_fmadd_pd(va0, vb, acc02);
        acc12 = _mm256_fmadd_pd(va1, vb, acc12);
        vb = _mm256_loadu_pd(b3 + l);
        acc03 = _mm256_fmadd_pd(va0, vb, acc03);
        acc13 = _mm256_fmadd_pd(va1, vb, acc13);
      }
      const int rem = k - k4;
      double* c0 = c + static_cast<long>(i) * n + j;
      double* c1 = c0 + n;
      c0[0] = hsum(acc00) + dot_tail(a0 + k4, b0 + k4, rem);
      c0[1] = hsum(acc01) + dot_tail(a0 + k4, b1 + k4, rem);
      c0[2] = hsum(acc02) + dot_tail(a0 + k4, b2 + k4, rem);
      c0[3] = hsum(acc03) + dot_tail(a0 + k4, b3 + k4, rem);
      c1[0] = hsum(acc10) + dot_tail(a1 + k4, b0 + k4, rem);
      c1[1] = hsum(acc11) + dot_tail(a1 + k4, b1 + k4, rem);
      c1[2] = hsum(acc12) + dot_tail(a1 + k4, b2 + k4, rem);
      c1[3] = hsum(acc13) + dot_tail(a1 + k4, b3 + k4, rem);
    }
    for (; j < n; ++j) {
      const double* bj = b + static_cast<long>(j) * k;
      for (int r = 0; r < 2; ++r) {
        const double* ar = r == 0 ? a0 : a1;
        __m256d acc = _mm256_setzero_pd();
        for (int l = 0; l < k4; l += 4)
          acc = _mm256_fmadd_pd(_mm256_loadu_pd(ar + l), _mm256_loadu_pd(bj + l), acc);
        c[static_cast<long>(i + r) * n + j] = hsum(acc) + dot_tail(ar + k4, bj + k4, k - k4);
      }
    }
  }
  for (; i < m; ++i) {
    const double* ai = a + static_cast<long>(i) * k;
    for (int j = 0; j < n; ++j) {
      const double* bj = b + static_cast<long>(j) * k;
      __m256d acc = _mm256_setzero_pd();
      for (int l = 0; l < k4; l += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(ai + l), _mm256_loadu_pd(bj + l), acc);
      c[static_cast<long>(i) * n + j] = hsum(acc) + dot_tail(ai + k4, bj + k4, k - k4);
    }
  }
}

// Shared inner pattern of gemm_nn / gemm_tn: accumulate rank-1 updates
// C[rows 2][tile] += coeff_r * B_row[tile] over a sequence of B rows.
// NV = number of 4-wide vectors per tile.
template <int NV>
inline void rank1_tile_2rows(const double* b, long ldb, int count, const double* coeff0,
                             const double* coeff1, long coeff_stride, double* c0, double* c1) {
  __m256d acc0[NV], acc1[NV];
  for (int t = 0; t < NV; ++t) {
    acc0[t] = _mm256_setzero_pd();
    acc1[t] = _mm256_setzero_pd();
  }
  for (int s = 0; s < count; ++s) {
    const __m256d w0 = _mm256_set1_pd(coeff0[static_cast<long>(s) * coeff_stride]);
    const __m256d w1 = _mm256_set1_pd(coeff1[static_cast<long>(s) * coeff_stride]);
    const double* brow = b + static_cast<long>(s) * ldb;
    for (int t = 0; t < NV; ++t) {
      const __m256d vb = _mm256_loadu_pd(brow + 4 * t);
      acc0[t] = _mm256_fmadd_pd(w0, vb, acc0[t]);
      acc1[t] = _mm256_fmadd_pd(w1, vb, acc1[t]);
    }
  }
  for (int t = 0; t < NV; ++t) {
    _mm256_storeu_pd(c0 + 4 * t, acc0[t]);
    _mm256_storeu_pd(c1 + 4 * t, acc1[t]);
  }
}

template <int NV>
inline void rank1_tile_1row(const double* b, long ldb, int count, const double* coeff,
                            long coeff_stride, double* c0) {
  __m256d acc[NV];
  for (int t = 0; t < NV; ++t) acc[t] = _mm256_setzero_pd();
  for (int s = 0; s < count; ++s) {
    const __m256d w = _mm256_set1_pd(coeff[static_cast<long>(s) * coeff_stride]);
    const double* brow = b + static_cast<long>(s) * ldb;
    for (int t = 0; t < NV; ++t)
      acc[t] = _mm256_fmadd_pd(w, _mm256_loadu_pd(brow + 4 * t), acc[t]);
  }
  for (int t = 0; t < NV; ++t) _mm256_storeu_pd(c0 + 4 * t, acc[t]);
}

// rows of C indexed by r0/r1; coefficients picked by `coeff(s, row)`;
// B rows indexed by s. Covers both nn (row = i of A, coeff stride 1 along n)
// and tn (row = j of A column, coeff stride n along m).
void rank1_product(const double* coeff_base0, const double* coeff_base1, long coeff_stride,
                   const double* b, long ldb, int count, double* c0, double* c1, int width) {
  int l = 0;
  for (; l + 16 <= width; l += 16)
    rank1_tile_2rows<4>(b + l, ldb, count, coeff_base0, coeff_base1, coeff_stride, c0 + l, c1 + l);
  for (; l + 4 <= width; l += 4)
    rank1_tile_2rows<1>(b + l, ldb, count, coeff_base0, coeff_base1, coeff_stride, c0 + l, c1 + l);
  for (; l < width; ++l) {
    double s0 = 0.0, s1 = 0.0;
    for (int s = 0; s < count; ++s) {
      const double bv = b[static_cast<long>(s) * ldb + l];
      s0 += coeff_base0[static_cast<long>(s) * coeff_stride] * bv;
      s1 += coeff_base1[static_cast<long>(s) * coeff_stride] * bv;
    }
    c0[l] = s0;
    c1[l] = s1;
  }
}

void rank1_product_1row(const double* coeff_base, long coeff_stride, const double* b, long ldb,
                        int count, double* c0, int width) {
  int l = 0;
  for (; l + 16 <= width; l += 16)
    rank1_tile_1row<4>(b + l, ldb, count, coeff_base, coeff_stride, c0 + l);
  for (; l + 4 <= width; l += 4)
    rank1_tile_1row<1>(b + l, ldb, count, coeff_base, coeff_stride, c0 + l);
  for (; l < width; ++l) {
    double s0 = 0.0;
    for (int s = 0; s < count; ++s)
      s0 += coeff_base[static_cast<long>(s) * coeff_stride] * b[static_cast<long>(s) * ldb + l];
    c0[l] = s0;
  }
}

void gemm_nn(const double* a, const double* b, double* c, int m, int n, int k) {
  int i = 0;
  for (; i + 2 <= m; i += 2) {
    rank1_product(a + static_cast<long>(i) * n, a + static_cast<long>(i + 1) * n, 1, b, k, n,
                  c + static_cast<long>(i) * k, c + static_cast<long>(i + 1) * k, k);
  }
  for (; i < m; ++i)
    rank1_product_1row(a + static_cast<long>(i) * n, 1, b, k, n, c + static_cast<long>(i) * k, k);
}

void gemm_tn(const double* a, const double* b, double* c, int m, int n, int k) {
  int j = 0;
  for (; j + 2 <= n; j += 2) {
    rank1_product(a + j, a + j + 1, n, b, k, m, c + static_cast<long>(j) * k,
                  c + static_cast<long>(j + 1) * k, k);
  }
  for (; j < n; ++j)
    rank1_product_1row(a + j, n, b, k, m, c + static_cast<long>(j) * k, k);
}

void add_bias_rows(double* y, const double* bias, int rows, int cols) {
  const int c4 = cols & ~3;
  for (int i = 0; i < rows; ++i) {
    double* yi = y + static_cast<long>(i) * cols;
    int j = 0;
    for (; j < c4; j += 4)
      _mm256_storeu_pd(yi + j, _mm256_add_pd(_mm256_loadu_pd(yi + j), _mm256_loadu_pd(bias + j)));
    for (; j < cols; ++j) yi[j] += bias[j];
  }
}

void col_sums(const double* a, double* out, int rows, int cols) {
  const int c4 = cols & ~3;
  int j = 0;
  for (; j < c4; j += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (int i = 0; i < rows; ++i)
      acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + static_cast<long>(i) * cols + j));
    _mm256_storeu_pd(out + j, acc);
  }
  for (; j < cols; ++j) {
    double acc = 0.0;
    for (int i = 0; i < rows; ++i) acc += a[static_cast<long>(i) * cols + j];
    out[j] = acc;
  }
}

void relu_forward(const double* x, double* y, int n) {
  const __m256d zero = _mm256_setzero_pd();
  const int n4 = n & ~3;
  int i = 0;
  for (; i < n4; i += 4) _mm256_storeu_pd(y + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
  for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward(const double* x, const double* dy, double* dx, int n) {
  const __m256d zero = _mm256_setzero_pd();
  const int n4 = n & ~3;
  int i = 0;
  for (; i < n4; i += 4) {
    const __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(x + i), zero, _CMP_GT_OQ);
    _mm256_storeu_pd(dx + i, _mm256_and_pd(_mm256_loadu_pd(dy + i), mask));
  }
  for (; i < n; ++i) dx[i] = x[i] > 0.0 ? dy[i] : 0.0;
}

void adam_step(double* p, const double* g, double* m, double* v, int n, double lr, double beta1,
               double beta2, double inv_c1, double inv_c2, double eps) {
  const __m256d vb1 = _mm256_set1_pd(beta1);
  const __m256d vb1c = _mm256_set1_pd(1.0 - beta1);
  const __m256d vb2 = _mm256_set1_pd(beta2);
  const __m256d vb2c = _mm256_set1_pd(1.0 - beta2);
  const __m256d vlr = _mm256_set1_pd(lr);
  const __m256d vc1 = _mm256_set1_pd(inv_c1);
  const __m256d vc2 = _mm256_set1_pd(inv_c2);
  const __m256d veps = _mm256_set1_pd(eps);
  const int n4 = n & ~3;
  int i = 0;
  for (; i < n4; i += 4) {
    const __m256d vg = _mm256_loadu_pd(g + i);
    __m256d vm = _mm256_loadu_pd(m + i);
    __m256d vv = _mm256_loadu_pd(v + i);
    vm = _mm256_fmadd_pd(vb1, vm, _mm256_mul_pd(vb1c, vg));
    vv = _mm256_fmadd_pd(vb2, vv, _mm256_mul_pd(vb2c, _mm256_mul_pd(vg, vg)));
    _mm256_storeu_pd(m + i, vm);
    _mm256_storeu_pd(v + i, vv);
    const __m256d mhat = _mm256_mul_pd(vm, vc1);
    const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(_mm256_mul_pd(vv, vc2)), veps);
    const __m256d step = _mm256_div_pd(_mm256_mul_pd(vlr, mhat), denom);
    _mm256_storeu_pd(p + i, _mm256_sub_pd(_mm256_loadu_pd(p + i), step));
  }
  for (; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    p[i] -= lr * (m[i] * inv_c1) / (std::sqrt(v[i] * inv_c2) + eps);
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops table{gemm_nt, gemm_nn,      gemm_tn,       add_bias_rows,
                         col_sums, relu_forward, relu_backward, adam_step};
  return table;
}

}  // namespace narrowpass::kernels

#endif  // x86_64
