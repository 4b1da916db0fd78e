#include <cstdlib>
#include <string_view>

#include "posetforge/kernels.hpp"

namespace pf::kernels {

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("POSET_FORGE_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") {
      return scalar_table();
    }
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace pf::kernels
