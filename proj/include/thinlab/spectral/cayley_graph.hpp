#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "thinlab/image/group_image.hpp"

namespace thinlab {

// k-regular multigraph stored as k neighbor slots per vertex, sorted per vertex. Each slot is
// one edge endpoint: parallel edges keep separate slots, and a loop from a collapsed
// generator fills one slot for s and one for s^-1, so loops count twice. A(v, w) is the
// number of slots of v pointing at w.
class CayleyGraph {
 public:
  // Right-multiplication Cayley graph g -- g s for s in {g_i^{+-1}} of a complete image.
  // With psl set, g and -g are first identified.
  static CayleyGraph build(std::shared_ptr<const GroupImage> image, bool psl);
  // Arbitrary regular multigraph given by neighbor slots (for sanity inputs and tests).
  static CayleyGraph from_neighbors(std::size_t vertices, std::size_t k,
                                    std::vector<std::uint32_t> neighbors);

  std::size_t vertices() const { return v_; }
  std::size_t degree() const { return k_; }
  bool psl() const { return psl_; }
  std::span<const std::uint32_t> neighbors(std::size_t v) const {
    return {adj_.data() + v * k_, k_};
  }

  // Image element index representing vertex v (only for graphs built from an image).
  std::size_t representative(std::size_t v) const { return rep_.at(v); }
  // Vertex for an image element index.
  std::size_t vertex_of(std::size_t element) const { return vertex_of_.at(element); }
  const GroupImage* image() const { return image_.get(); }

  bool is_symmetric() const;
  std::size_t component_count() const;

  // y = (I - A/k) x
  void apply_laplacian(std::span<const double> x, std::span<double> y) const;

 private:
  std::size_t v_ = 0;
  std::size_t k_ = 0;
  bool psl_ = false;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> rep_;
  std::vector<std::uint32_t> vertex_of_;
  std::shared_ptr<const GroupImage> image_;
};

inline CayleyGraph build_cayley(std::shared_ptr<const GroupImage> image, bool psl) {
  return CayleyGraph::build(std::move(image), psl);
}

}  // namespace thinlab
