#include "hlts/config.hpp"

#include <cstdlib>
#include <string>

#include "hlts/error.hpp"

namespace hlts {

int dim_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("HLTS_DIM_CAP")) {
      try {
        int v = std::stoi(env);
        if (v > 0) return v;
      } catch (...) {
      }
    }
    return 8;
  }();
  return cap;
}

void require_within_dim_cap(int dim, const char* what) {
  if (dim > dim_cap())
    throw error(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds cap " +
                std::to_string(dim_cap()) + " (set HLTS_DIM_CAP to raise)");
}

}  // namespace hlts
