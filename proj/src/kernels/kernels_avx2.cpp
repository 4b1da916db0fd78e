#include "posetforge/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define PF_HAVE_X86 1
#include <immintrin.h>
#else
#define PF_HAVE_X86 0
#endif

namespace pf::kernels {

#if PF_HAVE_X86
namespace {

__attribute__((target("avx2"))) bool axpy_bounded_avx2(
    std::span<std::int64_t> dst, std::span<const std::int64_t> src,
    std::int64_t q) {
  const std::size_t n = dst.size();
  const __m256i qv = _mm256_set1_epi64x(q);
  const __m256i hi = _mm256_set1_epi64x(kBound);
  const __m256i lo = _mm256_set1_epi64x(-kBound);
  __m256i bad = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&src[i]));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&dst[i]));
    // |s|,|q| < 2^31, so the signed 32x32->64 product is exact.
    __m256i r = _mm256_sub_epi64(d, _mm256_mul_epi32(s, qv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&dst[i]), r);
    bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(r, hi));
    bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(lo, r));
  }
  bool ok = _mm256_testz_si256(bad, bad) != 0;
  for (; i < n; ++i) {
    std::int64_t v = dst[i] - q * src[i];
    dst[i] = v;
    ok &= (v <= kBound) & (v >= -kBound);
  }
  return ok;
}

__attribute__((target("avx2"))) std::size_t argmin_abs_nonzero_avx2(
    std::span<const std::int64_t> x) {
  const std::size_t n = x.size();
  const __m256i zero = _mm256_setzero_si256();
  const __m256i none = _mm256_set1_epi64x(INT64_MAX);
  __m256i best = none;
  __m256i best_idx = _mm256_set1_epi64x(-1);
  __m256i idx = _mm256_setr_epi64x(0, 1, 2, 3);
  const __m256i step = _mm256_set1_epi64x(4);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&x[i]));
    __m256i sign = _mm256_cmpgt_epi64(zero, v);
    __m256i a = _mm256_sub_epi64(_mm256_xor_si256(v, sign), sign);
    a = _mm256_blendv_epi8(a, none, _mm256_cmpeq_epi64(v, zero));
    // strict comparison keeps the earliest index within each lane
    __m256i take = _mm256_cmpgt_epi64(best, a);
    best = _mm256_blendv_epi8(best, a, take);
    best_idx = _mm256_blendv_epi8(best_idx, idx, take);
    idx = _mm256_add_epi64(idx, step);
  }
  alignas(32) std::int64_t bv[4];
  alignas(32) std::int64_t bi[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(bv), best);
  _mm256_store_si256(reinterpret_cast<__m256i*>(bi), best_idx);
  std::size_t result = n;
  std::int64_t result_abs = INT64_MAX;
  for (int lane = 0; lane < 4; ++lane) {
    if (bi[lane] < 0) continue;
    auto li = static_cast<std::size_t>(bi[lane]);
    if (bv[lane] < result_abs || (bv[lane] == result_abs && li < result)) {
      result = li;
      result_abs = bv[lane];
    }
  }
  for (; i < n; ++i) {
    std::int64_t a = x[i] < 0 ? -x[i] : x[i];
    if (a != 0 && a < result_abs) {
      result = i;
      result_abs = a;
    }
  }
  return result;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2", &axpy_bounded_avx2,
                                 &argmin_abs_nonzero_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace pf::kernels
