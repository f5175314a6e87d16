#include "thinlab/spectral/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

namespace thinlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double residual_norm(const CayleyGraph& g, const Eigen::VectorXd& x, double lambda) {
  Eigen::VectorXd y(x.size());
  g.apply_laplacian({x.data(), static_cast<std::size_t>(x.size())},
                    {y.data(), static_cast<std::size_t>(y.size())});
  return (y - lambda * x).norm() / x.norm();
}

// Deterministic start vector from a splitmix sequence.
Eigen::VectorXd start_vector(std::size_t n) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < n; ++i) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    v[static_cast<Eigen::Index>(i)] = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
  }
  return v;
}

}  // namespace

SpectralReport laplacian_spectrum_dense(const CayleyGraph& g) {
  const std::size_t n = g.vertices();
  if (n > kDenseVertexLimit) {
    throw std::invalid_argument("graph has " + std::to_string(n) +
                                " vertices; the dense path is limited to " +
                                std::to_string(kDenseVertexLimit));
  }
  const auto t0 = Clock::now();
  const double inv_k = 1.0 / static_cast<double>(g.degree());
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(dim, dim);
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : g.neighbors(v)) lap(static_cast<Eigen::Index>(v), w) -= inv_k;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed", 0, 0.0);

  SpectralReport r;
  r.vertices = n;
  r.degree = g.degree();
  r.psl = g.psl();
  r.method = "dense";
  r.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  r.lambda1 = n > 1 ? r.eigenvalues[1] : 0.0;
  for (Eigen::Index idx : {Eigen::Index{0}, std::min<Eigen::Index>(1, dim - 1), dim - 1}) {
    r.residual = std::max(r.residual, residual_norm(g, solver.eigenvectors().col(idx), r.eigenvalues[static_cast<std::size_t>(idx)]));
  }
  r.seconds = seconds_since(t0);
  return r;
}

SpectralReport lambda1_iterative(const CayleyGraph& g, const LanczosOptions& opts) {
  const std::size_t n = g.vertices();
  if (n < 2) throw std::invalid_argument("graph needs at least two vertices");
  if (opts.tol <= 0.0 || opts.tol >= 1.0) throw std::invalid_argument("tolerance must lie in (0, 1)");
  const auto t0 = Clock::now();
  const auto dim = static_cast<Eigen::Index>(n);
  const auto m = static_cast<Eigen::Index>(std::min<std::size_t>(opts.basis_size, n - 1));
  const auto keep = std::min<Eigen::Index>(static_cast<Eigen::Index>(opts.keep), m - 1);

  const Eigen::VectorXd ones = Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(n)));
  auto deflate = [&](Eigen::VectorXd& w) { w -= ones.dot(w) * ones; };

  Eigen::MatrixXd basis(dim, m + 1);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd w(dim);

  Eigen::VectorXd v0 = start_vector(n);
  deflate(v0);
  basis.col(0) = v0.normalized();

  Eigen::Index kept = 0;
  std::size_t applications = 0;
  double beta = 0.0;
  double estimate = 1.0;
  Eigen::VectorXd theta;
  Eigen::MatrixXd ritz;

  for (;;) {
    Eigen::Index j = kept;
    for (; j < m; ++j) {
      g.apply_laplacian({basis.col(j).data(), n}, {w.data(), n});
      ++applications;
      const auto cols = j + 1;
      Eigen::VectorXd coeff = basis.leftCols(cols).transpose() * w;
      w -= basis.leftCols(cols) * coeff;
      deflate(w);
      Eigen::VectorXd again = basis.leftCols(cols).transpose() * w;
      w -= basis.leftCols(cols) * again;
      deflate(w);
      coeff += again;
      for (Eigen::Index i = 0; i <= j; ++i) {
        h(i, j) = coeff[i];
        h(j, i) = coeff[i];
      }
      beta = w.norm();
      if (beta < 1e-13) {
        ++j;
        break;  // invariant subspace reached
      }
      basis.col(j + 1) = w / beta;
    }
    const Eigen::Index active = std::min(j, m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(h.topLeftCorner(active, active));
    theta = small.eigenvalues();
    ritz = small.eigenvectors();
    estimate = std::abs(beta * ritz(active - 1, 0));
    if (beta < 1e-13) estimate = 0.0;

    const bool budget_spent = applications >= opts.max_iterations;
    const bool collapsed = active < m;
    if (estimate <= opts.tol || budget_spent || collapsed) {
      const Eigen::VectorXd x = basis.leftCols(active) * ritz.col(0);
      const double true_residual = residual_norm(g, x, theta[0]);
      if (true_residual <= opts.tol) {
        SpectralReport r;
        r.vertices = n;
        r.degree = g.degree();
        r.psl = g.psl();
        r.method = "lanczos";
        r.eigenvalues.push_back(0.0);
        for (Eigen::Index i = 0; i < std::min<Eigen::Index>(active, 4); ++i) r.eigenvalues.push_back(theta[i]);
        r.lambda1 = theta[0];
        r.residual = true_residual;
        r.iterations = applications;
        r.seconds = seconds_since(t0);
        return r;
      }
      if (budget_spent || collapsed) {
        throw ConvergenceError("Lanczos did not reach residual " + std::to_string(opts.tol) +
                                   " (achieved " + std::to_string(true_residual) + ")",
                               applications, true_residual);
      }
      // The estimate was optimistic; continue with another restart cycle.
    }

    // Thick restart: keep the `keep` smallest Ritz vectors plus the residual direction.
    Eigen::MatrixXd kept_vectors = basis.leftCols(m) * ritz.leftCols(keep);
    basis.leftCols(keep) = kept_vectors;
    basis.col(keep) = basis.col(m);
    h.setZero();
    for (Eigen::Index i = 0; i < keep; ++i) h(i, i) = theta[i];
    kept = keep;
  }
}

std::vector<ScanRow> spectral_scan(const GeneratorSet& gens, const std::vector<std::uint64_t>& primes,
                                   const ScanOptions& opts) {
  std::vector<ScanRow> rows(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      ScanRow& row = rows[i];
      row.prime = primes[i];
      const auto t0 = Clock::now();
      try {
        auto image = std::make_shared<const GroupImage>(GroupImage::enumerate(gens, primes[i], opts.element_cap));
        row.image_complete = image->complete();
        if (!row.image_complete) {
          row.error = "element cap reached before closure";
          continue;
        }
        const CayleyGraph graph = CayleyGraph::build(image, opts.psl);
        SpectralReport rep;
        if (graph.vertices() <= opts.dense_limit) {
          rep = laplacian_spectrum_dense(graph);
        } else {
          LanczosOptions lo;
          lo.tol = opts.tol;
          lo.max_iterations = opts.max_iterations;
          rep = lambda1_iterative(graph, lo);
        }
        rep.prime = primes[i];
        rep.seconds = seconds_since(t0);
        row.report = std::move(rep);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(opts.threads, primes.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "p,V,lambda1,method,seconds\n";
  char buf[64];
  for (const auto& row : rows) {
    os << row.prime << ',';
    if (row.report) {
      std::snprintf(buf, sizeof buf, "%.12f", row.report->lambda1);
      os << row.report->vertices << ',' << buf << ',' << row.report->method << ',';
      std::snprintf(buf, sizeof buf, "%.3f", row.report->seconds);
      os << buf << '\n';
    } else {
      os << ",," << (row.image_complete ? "error" : "incomplete") << ",\n";
    }
  }
  return os.str();
}

}  // namespace thinlab
