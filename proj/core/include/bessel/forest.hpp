#pragma once

// Leaf-labeled rooted binary trees and forests of such trees.
//
// Trees are non-planar: every node stores the child holding the smaller
// minimal label first, so structural equality coincides with equality of
// the canonical text.  Forests keep their trees sorted by minimal label and
// always mention every label of their label set.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bessel/rational.hpp"

namespace bessel {

// A leaf name.  Labels compare byte-lexicographically.
class Label {
 public:
  explicit Label(std::string value);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

 private:
  std::string value_;
};

// True when `text` can be used as a label.
bool is_valid_label(std::string_view text) noexcept;

// Sorted, duplicate-free.
using LabelSet = std::vector<Label>;

LabelSet make_label_set(std::vector<Label> labels);
// "1,2,3" -> {1,2,3}.  Rejects empty lists and duplicates.
LabelSet parse_label_list(std::string_view text);
// {"1", ..., "n"}.
LabelSet numbered_labels(std::size_t n);

bool contains(const LabelSet& set, const Label& label);
bool is_subset(const LabelSet& small, const LabelSet& big);
bool are_disjoint(const LabelSet& a, const LabelSet& b);
LabelSet set_union(const LabelSet& a, const LabelSet& b);
LabelSet set_difference(const LabelSet& a, const LabelSet& b);
std::string to_string(const LabelSet& set);

// An inner vertex, identified by the leaves above it.
struct VertexId {
  LabelSet leaves;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(const VertexId& v);

using VertexMap = std::map<VertexId, VertexId>;

class Tree {
 public:
  static Tree leaf(Label label);
  // Throws DomainError when the leaf sets overlap.
  static Tree graft(const Tree& a, const Tree& b);

  bool is_leaf() const noexcept;
  // Leaf only.
  const Label& label() const;
  // Inner nodes only; left() holds the minimal label.
  const Tree& left() const;
  const Tree& right() const;

  const LabelSet& leaves() const noexcept;
  const Label& min_label() const noexcept { return leaves().front(); }
  const std::string& text() const noexcept;
  std::size_t inner_count() const noexcept;

  Tree relabeled(const std::map<Label, Label>& sigma) const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.text() == b.text(); }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.text().compare(b.text()) <=> 0;
  }

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Tree make_leaf(std::string_view label);
Tree graft(const Tree& a, const Tree& b);

// One of the two upward branches at an inner vertex.
struct Branch {
  LabelSet leaves;
  bool is_leaf = false;

  const Label& leaf_label() const { return leaves.front(); }
  VertexId vertex() const { return VertexId{leaves}; }
};

struct VertexInfo {
  VertexId id;
  std::optional<VertexId> parent;  // empty at the bottom vertex of a tree
  Label tree;                      // minimal label of the containing tree
  std::array<Branch, 2> up;        // up[0] carries the minimal ancestor label

  bool is_bottom() const noexcept { return !parent.has_value(); }
};

class Forest {
 public:
  // Trees must have pairwise disjoint leaf sets; at least one tree.
  explicit Forest(std::vector<Tree> trees);

  // The forest of single leaves on `labels`.
  static Forest minimum(const LabelSet& labels);

  const std::vector<Tree>& trees() const noexcept;
  const LabelSet& labels() const noexcept;
  const std::string& text() const noexcept;

  // Number of inner vertices.
  std::size_t degree() const noexcept;
  std::size_t tree_count() const noexcept { return trees().size(); }

  // Sorted by VertexId.
  const std::vector<VertexInfo>& vertices() const noexcept;
  const VertexInfo& vertex(const VertexId& id) const;
  bool has_vertex(const VertexId& id) const;

  // Index of the tree holding `label`.
  std::size_t tree_index(const Label& label) const;

  Forest relabeled(const std::map<Label, Label>& sigma) const;

  friend bool operator==(const Forest& a, const Forest& b) { return a.text() == b.text(); }
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    return a.text().compare(b.text()) <=> 0;
  }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// Formal integer/rational combination of forests (no orientation data).
struct FormalForestSum {
  std::map<Forest, Rational> terms;

  void add(const Forest& f, const Rational& c);
  std::size_t size() const noexcept { return terms.size(); }
};

Forest disjoint_union(const Forest& a, const Forest& b);

// Sum over every (tree of a, tree of b) pair, the pair replaced by its graft.
FormalForestSum vee(const Forest& a, const Forest& b);

std::vector<VertexId> inner_vertices(const Forest& f);

// Leaves whose path to the root crosses an inner vertex.
LabelSet support(const Forest& f);

// Every tree on `labels`, once each, sorted by canonical text.
std::vector<Tree> enumerate_trees(const LabelSet& labels);

// Every forest on `labels` (with exactly `degree` inner vertices when given),
// sorted by canonical text.
std::vector<Forest> enumerate_forests(const LabelSet& labels,
                                      std::optional<std::size_t> degree = std::nullopt);

// Recurrence-based counts; independent of enumeration.
Integer count_trees(std::size_t n);
Integer count_forests(std::size_t n);
// Entry k counts forests with k inner vertices, k = 0..n-1.
std::vector<Integer> count_by_degree(std::size_t n);

// The comb (((l1,l2),l3),...) on the sorted labels.
Tree comb_tree(const LabelSet& labels);

Tree parse_tree(std::string_view text);
Forest parse_forest(std::string_view text);
inline const std::string& format(const Forest& f) { return f.text(); }

}  // namespace bessel
