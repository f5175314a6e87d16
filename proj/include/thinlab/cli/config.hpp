#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "thinlab/image/group_image.hpp"
#include "thinlab/probes/coset_enum.hpp"

namespace thinlab {

// Settings shared by the subcommands. Loaded from flags, a flat key = value file (--config)
// and THINLAB_THREADS, in increasing order of precedence: file, environment, flags.
struct RunConfig {
  std::size_t element_cap = kDefaultElementCap;
  std::size_t coset_cap = kDefaultCosetCap;
  std::size_t max_iterations = 20000;
  double tol = 1e-8;
  std::uint64_t prime_min = 3;
  std::uint64_t prime_max = 50;
  bool psl = false;
  std::size_t threads = 1;
  bool timings = false;  // off keeps JSON and CSV byte-identical across runs

  // Throws std::invalid_argument naming the offending setting.
  void validate() const;
};

// THINLAB_THREADS when set and positive, else the hardware concurrency (at least 1).
std::size_t default_threads();

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

}  // namespace thinlab
