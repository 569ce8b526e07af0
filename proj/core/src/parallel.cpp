#include "copgeo/parallel.hpp"

#include <atomic>

namespace copgeo {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_default_threads(unsigned threads) noexcept { g_threads.store(threads); }

unsigned default_threads() noexcept {
  const unsigned t = g_threads.load();
  if (t != 0) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace copgeo
