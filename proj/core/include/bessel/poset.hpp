#pragma once

// The poset of forests on a label set and the construction gamma(F, V).
//
// F' <= F when F' arises from F by keeping a subset V of the inner vertices
// and re-joining every kept vertex with its ancestor leaves.  gamma(F, V)
// lists those F' together with the identification of V(F') with V.

#include <string>
#include <vector>

#include "bessel/forest.hpp"

namespace bessel::poset {

struct GammaImage {
  Forest forest;
  VertexMap phi;  // V(forest) -> V

  friend bool operator==(const GammaImage&, const GammaImage&) = default;
  friend auto operator<=>(const GammaImage& a, const GammaImage& b) {
    if (auto c = a.forest <=> b.forest; c != 0) return c;
    return a.phi < b.phi ? std::strong_ordering::less
                         : (b.phi < a.phi ? std::strong_ordering::greater
                                          : std::strong_ordering::equal);
  }
};

// Sorted.  Throws DomainError unless V ⊆ V(F).
std::vector<GammaImage> gamma(const Forest& f, const std::vector<VertexId>& v);

// Brute force over all forests with |V| inner vertices and all bijections
// onto V, filtered by ancestor containment, branch separation and order
// preservation.  Sorted.
std::vector<GammaImage> gamma_oracle(const Forest& f, const std::vector<VertexId>& v);

// The identification of `lower` inside gamma(f, V) for some V, if any.
std::optional<GammaImage> find_image(const Forest& lower, const Forest& f);

bool leq(const Forest& lower, const Forest& upper);

// Every Z with lower <= Z <= upper, sorted.  Throws when lower is not <= upper.
std::vector<Forest> interval(const Forest& lower, const Forest& upper);

struct Edge {
  Forest lower;
  Forest upper;
};

// Cover relations among the forests on `labels`.
std::vector<Edge> hasse(const LabelSet& labels);
// Cover relations among the given forests.
std::vector<Edge> hasse(const std::vector<Forest>& forests);

std::vector<Forest> maximal_elements(const LabelSet& labels);

// One node per forest in the given order, edges from lower to upper.
std::string to_dot(const std::vector<Forest>& nodes, const std::vector<Edge>& edges);

}  // namespace bessel::poset
