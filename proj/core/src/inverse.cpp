#include "radix2/inverse.hpp"

namespace radix2 {

std::string_view to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::kRecursive:
      return "recursive";
    case Engine::kButterfly:
      return "butterfly";
    case Engine::kIterative:
      return "iterative";
  }
  return "unknown";
}

}  // namespace radix2
