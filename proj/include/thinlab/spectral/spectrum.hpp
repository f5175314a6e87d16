#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thinlab/core/word.hpp"
#include "thinlab/spectral/cayley_graph.hpp"

namespace thinlab {

inline constexpr std::size_t kDenseVertexLimit = 5000;

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t iterations, double residual)
      : std::runtime_error(what), iterations_(iterations), residual_(residual) {}
  std::size_t iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

struct SpectralReport {
  std::uint64_t prime = 0;  // 0 when the graph did not come from a congruence image
  std::size_t vertices = 0;
  std::size_t degree = 0;
  bool psl = false;
  std::vector<double> eigenvalues;  // ascending; complete for dense, partial for iterative
  double lambda1 = 0.0;
  std::string method;  // "dense" or "lanczos"
  double residual = 0.0;
  std::size_t iterations = 0;
  double seconds = 0.0;
};

// Full spectrum of I - A/k through a dense symmetric eigensolver; V <= kDenseVertexLimit.
SpectralReport laplacian_spectrum_dense(const CayleyGraph& g);

struct LanczosOptions {
  double tol = 1e-8;
  std::size_t max_iterations = 20000;  // total operator applications
  std::size_t basis_size = 80;         // Krylov basis length before a restart
  std::size_t keep = 24;               // Ritz vectors kept across a restart
};

// Smallest Laplacian eigenvalue on the complement of the constant vector: a thick-restart
// (Krylov-Schur) Lanczos iteration with full reorthogonalization and the constant vector
// deflated. Throws ConvergenceError when the residual target is not met within budget.
SpectralReport lambda1_iterative(const CayleyGraph& g, const LanczosOptions& opts = {});

struct ScanRow {
  std::uint64_t prime = 0;
  bool image_complete = false;
  std::optional<SpectralReport> report;
  std::string error;  // set when the prime failed
};

struct ScanOptions {
  bool psl = false;
  double tol = 1e-8;
  std::size_t max_iterations = 20000;
  std::size_t element_cap = std::size_t{1} << 24;
  std::size_t dense_limit = 1024;  // vertex count at or below which the dense path is used
  std::size_t threads = 1;
};

std::vector<ScanRow> spectral_scan(const GeneratorSet& gens, const std::vector<std::uint64_t>& primes,
                                   const ScanOptions& opts = {});

// CSV with header p,V,lambda1,method,seconds; rows whose prime failed or whose image was
// incomplete carry the method "incomplete" or "error".
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace thinlab
