#pragma once

// The Bessel operad on inner-oriented forests.
//
// Bess is generated by E (symmetric, degree 0: two single leaves) and
// Omega (antisymmetric, degree 1: the two-leaf tree).  E acts by disjoint
// union and Omega by grafting over every pair of trees; general
// composition substitutes into a generator decomposition of the outer
// argument, with Koszul signs whenever the substituted element moves past
// another operand.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bessel/element.hpp"
#include "bessel/forest.hpp"

namespace bessel::operad {

// Operadic unit on {s}.
Element identity(const Label& s);

Element gen_E(const Label& i, const Label& j);
Element gen_Omega(const Label& i, const Label& j);

// E_{*,#} o_* x o_# y and Omega_{*,#} o_* x o_# y on disjoint label sets.
Element act_E(const Element& x, const Element& y);
Element act_Omega(const Element& x, const Element& y);

// Expression in the generators whose leaves are slots.
class GeneratorWord {
 public:
  enum class Op { Slot, E, Omega };

  static GeneratorWord slot(Label label);
  static GeneratorWord apply(Op op, GeneratorWord left, GeneratorWord right);

  Op op() const noexcept;
  const Label& label() const;  // Slot only
  const GeneratorWord& left() const;
  const GeneratorWord& right() const;

  // Number of Omega nodes.
  std::size_t degree() const noexcept;
  const LabelSet& labels() const noexcept;
  // e.g. "E(O(1,2),3)"
  std::string text() const;

 private:
  struct Node;
  explicit GeneratorWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Element evaluate(const GeneratorWord& w);

// Evaluation of w with slot `slot` replaced by y.
Element substitute(const GeneratorWord& w, const Label& slot, const Element& y);

struct Decomposition {
  int sign = 1;  // basis forest == sign * evaluate(word)
  GeneratorWord word;
};

// Canonical decomposition: trees nested left to right under E, each tree
// Omega of its canonical children.
Decomposition decompose(const Forest& f);

// Every decomposition: all ordered E-splits of the tree set, both child
// orders under every Omega.
std::vector<Decomposition> all_decompositions(const Forest& f);

// x o_slot y.
Element compose(const Element& x, const Label& slot, const Element& y);

// Renames leaves along a bijection defined on the labels of x.
Element relabel(const std::map<Label, Label>& sigma, const Element& x);

// Number of basis forests on `labels` with k inner vertices.
Integer dimension(const LabelSet& labels, std::size_t k);

}  // namespace bessel::operad
