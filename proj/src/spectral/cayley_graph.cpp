#include "thinlab/spectral/cayley_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace thinlab {

CayleyGraph CayleyGraph::build(std::shared_ptr<const GroupImage> image, bool psl) {
  if (!image) throw std::invalid_argument("null image");
  if (!image->complete()) throw std::invalid_argument("Cayley graph needs a complete image");
  const GroupImage& img = *image;
  const std::size_t n = img.dim();
  const std::size_t order = img.order();
  const std::uint64_t m = img.modulus();

  CayleyGraph g;
  g.psl_ = psl;
  g.k_ = img.symbol_matrices().size();
  g.vertex_of_.assign(order, 0);

  std::vector<Residue> cur(n * n), next(n * n);
  if (psl) {
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    std::fill(g.vertex_of_.begin(), g.vertex_of_.end(), kUnset);
    for (std::size_t e = 0; e < order; ++e) {
      if (g.vertex_of_[e] != kUnset) continue;
      const auto vertex = static_cast<std::uint32_t>(g.rep_.size());
      g.rep_.push_back(static_cast<std::uint32_t>(e));
      g.vertex_of_[e] = vertex;
      img.element_into(e, cur);
      for (auto& r : cur) r = r == 0 ? 0 : static_cast<Residue>(m - r);
      if (auto neg = img.index_of(cur)) g.vertex_of_[*neg] = vertex;
    }
  } else {
    g.rep_.resize(order);
    std::iota(g.rep_.begin(), g.rep_.end(), 0u);
    std::iota(g.vertex_of_.begin(), g.vertex_of_.end(), 0u);
  }

  g.v_ = g.rep_.size();
  g.adj_.resize(g.v_ * g.k_);
  for (std::size_t v = 0; v < g.v_; ++v) {
    img.element_into(g.rep_[v], cur);
    for (std::size_t s = 0; s < g.k_; ++s) {
      mod_mul_into(cur, img.symbol_matrices()[s].entries(), n, m, next);
      const auto j = img.index_of(next);
      if (!j) throw std::logic_error("complete image is not closed under a generator");
      g.adj_[v * g.k_ + s] = g.vertex_of_[*j];
    }
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(v * g.k_),
              g.adj_.begin() + static_cast<std::ptrdiff_t>((v + 1) * g.k_));
  }
  g.image_ = std::move(image);
  return g;
}

CayleyGraph CayleyGraph::from_neighbors(std::size_t vertices, std::size_t k,
                                        std::vector<std::uint32_t> neighbors) {
  if (neighbors.size() != vertices * k) throw std::invalid_argument("neighbor slot count must be V*k");
  for (auto w : neighbors)
    if (w >= vertices) throw std::invalid_argument("neighbor index out of range");
  CayleyGraph g;
  g.v_ = vertices;
  g.k_ = k;
  g.adj_ = std::move(neighbors);
  for (std::size_t v = 0; v < vertices; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(v * k),
              g.adj_.begin() + static_cast<std::ptrdiff_t>((v + 1) * k));
  }
  if (!g.is_symmetric()) throw std::invalid_argument("neighbor relation is not symmetric");
  return g;
}

bool CayleyGraph::is_symmetric() const {
  // Compare slot multiplicities v->w and w->v over the sorted lists.
  for (std::size_t v = 0; v < v_; ++v) {
    auto nv = neighbors(v);
    for (std::size_t i = 0; i < k_;) {
      std::size_t j = i;
      while (j < k_ && nv[j] == nv[i]) ++j;
      const std::uint32_t w = nv[i];
      auto nw = neighbors(w);
      const auto back = static_cast<std::size_t>(std::count(nw.begin(), nw.end(), static_cast<std::uint32_t>(v)));
      if (back != j - i) return false;
      i = j;
    }
  }
  return true;
}

std::size_t CayleyGraph::component_count() const {
  std::vector<std::uint32_t> parent(v_);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = v_;
  for (std::size_t v = 0; v < v_; ++v) {
    for (auto w : neighbors(v)) {
      auto a = find(static_cast<std::uint32_t>(v));
      auto b = find(w);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

void CayleyGraph::apply_laplacian(std::span<const double> x, std::span<double> y) const {
  const double inv_k = 1.0 / static_cast<double>(k_);
  for (std::size_t v = 0; v < v_; ++v) {
    double acc = 0.0;
    const std::uint32_t* nb = adj_.data() + v * k_;
    for (std::size_t s = 0; s < k_; ++s) acc += x[nb[s]];
    y[v] = x[v] - inv_k * acc;
  }
}

}  // namespace thinlab
