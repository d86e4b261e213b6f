#include "tricensus/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tricensus {

unsigned default_thread_count() {
  if (const char* env = std::getenv("TRICENSUS_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

}  // namespace tricensus
