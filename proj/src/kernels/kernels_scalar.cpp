#include "posetforge/kernels.hpp"

#include <cstdlib>

namespace pf::kernels {
namespace {

bool axpy_bounded_scalar(std::span<std::int64_t> dst,
                         std::span<const std::int64_t> src, std::int64_t q) {
  bool ok = true;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    std::int64_t v = dst[i] - q * src[i];
    dst[i] = v;
    ok &= (v <= kBound) & (v >= -kBound);
  }
  return ok;
}

std::size_t argmin_abs_nonzero_scalar(std::span<const std::int64_t> x) {
  std::size_t best = x.size();
  std::int64_t best_abs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t a = x[i] < 0 ? -x[i] : x[i];
    if (a != 0 && (best == x.size() || a < best_abs)) {
      best = i;
      best_abs = a;
    }
  }
  return best;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", &axpy_bounded_scalar,
                                 &argmin_abs_nonzero_scalar};
  return table;
}

}  // namespace pf::kernels
