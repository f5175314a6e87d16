#include "thinlab/cli/config.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace thinlab {

void RunConfig::validate() const {
  if (element_cap == 0) throw std::invalid_argument("element cap must be positive");
  if (coset_cap == 0) throw std::invalid_argument("coset cap must be positive");
  if (max_iterations == 0) throw std::invalid_argument("iteration cap must be positive");
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("tolerance must lie in (0, 1)");
  if (prime_min > prime_max) throw std::invalid_argument("empty prime range");
  if (threads == 0) throw std::invalid_argument("thread count must be positive");
}

std::size_t default_threads() {
  if (const char* env = std::getenv("THINLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 2); p <= hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace thinlab
