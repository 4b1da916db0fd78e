#pragma once

// Data-parallel inner loops of the small-integer Smith normal form engine.
//
// Every kernel exists as a portable scalar reference and, on x86-64, as an
// AVX2 variant.  The variant is chosen once at runtime from the CPU feature
// set; POSET_FORGE_KERNELS=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace pf::kernels {

/// Entries handled by the int64 engine satisfy |x| <= kBound so that a
/// product of two of them fits comfortably in 63 bits.
inline constexpr std::int64_t kBound = (std::int64_t{1} << 31) - 1;

struct KernelTable {
  std::string_view name;

  /// dst[i] -= q * src[i] for all i.  Inputs must satisfy |dst|,|src|,|q| <=
  /// kBound.  Returns false when some result leaves the bound (the results
  /// are still exact in that case, only no longer safe for further steps).
  bool (*axpy_bounded)(std::span<std::int64_t> dst,
                       std::span<const std::int64_t> src, std::int64_t q);

  /// Index of the entry with the least nonzero absolute value, lowest index
  /// on ties; returns x.size() when every entry is zero.
  std::size_t (*argmin_abs_nonzero)(std::span<const std::int64_t> x);
};

const KernelTable& scalar_table();
/// nullptr when the binary or the CPU lacks AVX2.
const KernelTable* avx2_table();

/// The table selected for this process.
const KernelTable& active();

}  // namespace pf::kernels
