#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mmtp/multimatroid.hpp"
#include "mmtp/poly.hpp"

namespace mmtp {

// One of the two arrows of an edge, lying on a circle. `reversed` says the
// arrow points against the circle's traversal orientation.
struct Arrow {
  std::string edge;
  int slot = 1;  // 1 or 2
  bool reversed = false;

  bool operator==(const Arrow& other) const = default;
};

// Circles as cyclic sequences of arrows. Every edge label occurs exactly
// twice, once per slot. Empty circles are isolated vertices.
class ArrowPresentation {
 public:
  ArrowPresentation() = default;
  ArrowPresentation(std::vector<std::vector<Arrow>> circles, std::map<std::string, int> distinguished = {});

  const std::vector<std::vector<Arrow>>& circles() const { return circles_; }
  const std::map<std::string, int>& distinguished() const { return distinguished_; }
  void set_distinguished(const std::string& edge, int slot);

  std::vector<std::string> edges() const;  // sorted
  std::size_t edge_count() const;
  bool has_edge(const std::string& edge) const;

  int boundary_components() const;  // b
  int component_count() const;      // k

  ArrowPresentation delete_edge(const std::string& edge) const;
  ArrowPresentation contract_edge(const std::string& edge) const;
  ArrowPresentation petrial(const std::string& edge, int slot = 1) const;
  ArrowPresentation delete_edges(const std::set<std::string>& edges) const;
  ArrowPresentation petrial_set(const std::set<std::string>& edges, int slot = 1) const;

  bool is_loop(const std::string& edge) const;    // both arrows on one circle
  bool is_bridge(const std::string& edge) const;  // deletion disconnects
  bool is_trivial_loop(const std::string& edge) const;
  // bridge or trivial loop; matches singularity of the edge's skew class
  bool is_singular_edge(const std::string& edge) const;

  bool structurally_equal(const ArrowPresentation& other) const;

 private:
  std::vector<std::vector<Arrow>> circles_;
  std::map<std::string, int> distinguished_;
};

// Topological transition polynomial over ordered 3-partitions (X,Y,Z) of the
// edges, in variables u.<e>, v.<e>, w.<e> and t; the t-exponent is the number
// of boundary components after half-twisting Z and deleting Y.
MultiPoly ribbon_transition(const ArrowPresentation& g);

// The induced 3-matroid: classes e = {e_dot < e_bar < e_hat}, bases the
// 3-partitions that keep the boundary count at k.
Multimatroid ribbon_to_multimatroid(const ArrowPresentation& g);

// Splice along distinguished arrows; falls back to slot 1 when an edge has no
// recorded distinguished slot.
ArrowPresentation ribbon_two_sum(const ArrowPresentation& g, const std::string& f,
                                 const ArrowPresentation& h, const std::string& e);
// Iterated two-sum of a fresh copy of h (edge b renamed b@g_edge) along every
// edge of g.
ArrowPresentation ribbon_tensor(const ArrowPresentation& g, const ArrowPresentation& h,
                                const std::string& e);

struct RibbonTensorCheck {
  bool polynomial_identity = false;
  bool component_count_identity = false;
  bool linear_system_identity = false;
  bool ok() const { return polynomial_identity && component_count_identity && linear_system_identity; }
};

// Checks the tensor-product substitution formula for the topological
// transition polynomial, including the t^(e(g)(k(h)-1)) prefactor and the
// component-count identity. Hypotheses (no bridges or trivial loops among the
// summed edges) are enforced.
RibbonTensorCheck verify_ribbon_tensor(const ArrowPresentation& g, const ArrowPresentation& h,
                                       const std::string& e);

}  // namespace mmtp
