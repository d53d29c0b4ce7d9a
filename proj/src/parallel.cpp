#include "hurwitz/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hurwitz {

unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HURWITZ_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // Ignore unparsable values and keep the hardware default.
    }
  }
  return n;
}

}  // namespace hurwitz
