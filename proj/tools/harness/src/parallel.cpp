#include "nsg/harness/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace nsg::harness {

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("NSG_THREADS")) {
    unsigned cap = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, cap);
    if (ec == std::errc{} && ptr == end && cap > 0 && cap < n) n = cap;
  }
  return n;
}

}  // namespace nsg::harness
