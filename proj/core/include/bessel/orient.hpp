#pragma once

// Sign calculus for orientations.
//
// An orientation is a top exterior power of a finite set of symbols, stored
// as a signed word.  Global orientations of a forest use the auxiliary
// symbol R together with its inner vertices; local orientations order the
// three half-edges at one inner vertex.  Outer orientations (a wedge of the
// labels tensored with a wedge of the roots) are converted to inner ones by
// cancelling leaf/root pairs, inserting pairs for inner edges, and grouping
// the half-edges vertex by vertex.
//
// Canonical conventions:
//  * symbols sort as R-type symbols, then vertices (by VertexId), then
//    half-edges;
//  * the canonical global orientation of F is R ^ v1 ^ ... ^ vk with
//    vertices sorted;
//  * the reference local triple at v is (down, up over the branch holding
//    the minimal label of v, other up).

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bessel/forest.hpp"

namespace bessel::orient {

// R-type symbols.  Distinct instances model R_1, R_2, R', R'' and splice
// markers r, r', ... within one computation.
struct Aux {
  enum class Kind { R, Splice };
  Kind kind = Kind::R;
  int instance = 0;

  friend auto operator<=>(const Aux&, const Aux&) = default;
};

struct VertexSym {
  VertexId id;
  friend auto operator<=>(const VertexSym&, const VertexSym&) = default;
};

// A leaf label in an orientation of I; inside a nontrivial tree it names the
// half-edge at the parent of that leaf.
struct LeafSym {
  Label label;
  friend auto operator<=>(const LeafSym&, const LeafSym&) = default;
};

// The root of the tree whose minimal label is `tree`; inside a nontrivial
// tree it names the downward half-edge of the bottom vertex.
struct RootSym {
  Label tree;
  friend auto operator<=>(const RootSym&, const RootSym&) = default;
};

// Half-edges of the inner edge below vertex `upper`.
struct EdgeSym {
  VertexId upper;
  bool lower = false;  // false: the half-edge at `upper`, true: at its parent
  friend auto operator<=>(const EdgeSym&, const EdgeSym&) = default;
};

using Symbol = std::variant<Aux, VertexSym, LeafSym, RootSym, EdgeSym>;

inline Symbol R(int instance = 0) { return Aux{Aux::Kind::R, instance}; }
inline Symbol splice(int instance = 0) { return Aux{Aux::Kind::Splice, instance}; }
inline Symbol vertex(VertexId id) { return VertexSym{std::move(id)}; }

bool is_R(const Symbol& s);
std::string to_string(const Symbol& s);

// sign * (s_1 ^ ... ^ s_n).  sign == 0 encodes the zero word.
struct OrientationWord {
  int sign = 1;
  std::vector<Symbol> symbols;

  bool is_zero() const noexcept { return sign == 0; }
  // Number of wedge signs.
  int degree() const noexcept { return static_cast<int>(symbols.size()) - 1; }

  friend bool operator==(const OrientationWord&, const OrientationWord&) = default;
};

// Debug form, e.g. "+R^v{1,2}^v{1,2,3}".
std::string to_string(const OrientationWord& w);

// Sign of the permutation taking `from` to `to`; both must hold the same
// distinct symbols.
int permutation_sign(const std::vector<Symbol>& from, const std::vector<Symbol>& to);

// Sorted word with the permutation parity folded into the sign; a repeated
// symbol yields the zero word.
OrientationWord normalize(const OrientationWord& w);

// Canonical global orientation +R ^ v1 ^ ... ^ vk of F.
OrientationWord canonical_global(const Forest& f, int r_instance = 0);

// o1 ^ r ^ o2 with R1 ^ r ^ R2 replaced by R.  Each input holds exactly one
// R symbol; the result is normalized with R instance 0.
OrientationWord collapse_disjoint(const OrientationWord& o1, const OrientationWord& o2);

// (-1)^deg(o1) o1 ^ o2 with R1 ^ R2 replaced by R ^ v; normalized.
OrientationWord collapse_vee(const OrientationWord& o1, const OrientationWord& o2,
                             const VertexId& v);

struct SplitResult {
  int sign = 1;
  OrientationWord left;   // +R' ^ (V' sorted), R' = R(1)
  OrientationWord right;  // +R'' ^ (V'' sorted), R'' = R(2)
};

// Decomposes o along V(F) = V' ⊔ V'' so that collapse_disjoint(sign * left,
// right) == normalize(o).
SplitResult split(const OrientationWord& o, const std::vector<VertexId>& left_vertices,
                  const std::vector<VertexId>& right_vertices);

// --- half-edges --------------------------------------------------------------

Symbol down_half_edge(const Forest& f, const VertexId& v);
// Half-edge at v pointing up into `branch`.
Symbol up_half_edge(const Branch& branch);
std::array<Symbol, 3> reference_triple(const Forest& f, const VertexId& v);

// sign * (triple[0] ^ triple[1] ^ triple[2]) at `vertex`.
struct LocalOrientation {
  VertexId vertex;
  std::array<Symbol, 3> triple;
  int sign = 1;

  friend bool operator==(const LocalOrientation&, const LocalOrientation&) = default;
};

// Sign relative to the reference triple.  Cyclic rotations are sign-neutral.
int local_sign(const Forest& f, const LocalOrientation& lo);

struct InnerOrientation {
  OrientationWord global;
  std::vector<LocalOrientation> locals;  // sorted by vertex
};

InnerOrientation canonical_inner(const Forest& f);
// s such that io == s * canonical_inner(f).  Throws on malformed input.
int canonical_sign(const Forest& f, const InnerOrientation& io);

// o1 spans the labels (LeafSym), o2 the roots (RootSym, one per tree).
struct OuterOrientation {
  OrientationWord labels;
  OrientationWord roots;

  int sign() const noexcept { return labels.sign * roots.sign; }
};

// Sorted labels and sorted roots, both with sign +1.
OuterOrientation canonical_outer(const Forest& f);
// s such that o == s * canonical_outer(f).
int canonical_sign(const Forest& f, const OuterOrientation& o);

// The three-step conversion to an inner orientation, returned in the form
// sign * canonical_inner(f).
InnerOrientation outer_to_inner(const OuterOrientation& outer, const Forest& f);
int outer_to_inner_sign(const OuterOrientation& outer, const Forest& f);

// Inverse conversion: labels = sign * (sorted labels), roots = +(sorted roots).
OuterOrientation inner_to_outer(const InnerOrientation& inner, const Forest& f);

// Carries local orientations of `f` along the identification `phi` of the
// inner vertices of `image` with vertices of `f`.  Throws DomainError when a
// branch of an image vertex does not sit inside a single branch of its
// partner, or both branches land in the same one.
std::vector<LocalOrientation> transport_locals(const Forest& f, const Forest& image,
                                               const VertexMap& phi,
                                               const std::vector<LocalOrientation>& locals);

// s such that the restriction of the canonical orientation of f to the image
// of phi (global R ^ (vertices sorted in f) with reference locals carried
// along phi) equals s * canonical_inner(image).
int restriction_sign(const Forest& f, const Forest& image, const VertexMap& phi);

}  // namespace bessel::orient
