#include "bessel/boperad.hpp"

#include <algorithm>
#include <map>

#include "bessel/operad.hpp"
#include "bessel/orient.hpp"

namespace bessel::boperad {

namespace {

std::vector<orient::Symbol> root_word(const Forest& f) {
  std::vector<orient::Symbol> out;
  for (const auto& t : f.trees()) out.push_back(orient::RootSym{t.min_label()});
  return out;
}

std::vector<orient::Symbol> leaf_word(const LabelSet& labels) {
  std::vector<orient::Symbol> out;
  for (const auto& l : labels) out.push_back(orient::LeafSym{l});
  return out;
}

int suspension_sign(const Forest& f) {
  return orient::outer_to_inner_sign(orient::canonical_outer(f), f);
}

template <class Fn>
BElement bilinear(const BElement& x, const BElement& y, Fn&& fn) {
  if (!are_disjoint(x.labels(), y.labels()))
    throw DomainError("B action on overlapping label sets");
  BElement out(set_union(x.labels(), y.labels()));
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      const auto [f, s] = fn(a, b);
      out.add(f, ca * cb * s);
    }
  return out;
}

}  // namespace

std::string to_string(const BElement& x) {
  if (x.is_zero()) return "0";
  Element shadow(x.labels());
  for (const auto& [f, c] : x.terms()) shadow.add(f, c);
  return bessel::to_string(shadow);
}

std::size_t degree(const Forest& f) { return f.tree_count() - 1; }

BElement identity(const Label& s) { return BElement::basis(Forest({Tree::leaf(s)})); }

BElement gen_e(const Label& i, const Label& j) {
  if (i == j) throw DomainError("gen_e needs distinct labels");
  return BElement::basis(Forest({Tree::leaf(i), Tree::leaf(j)}), i < j ? 1 : -1);
}

BElement gen_omega(const Label& i, const Label& j) {
  if (i == j) throw DomainError("gen_omega needs distinct labels");
  return BElement::basis(Forest({Tree::graft(Tree::leaf(i), Tree::leaf(j))}));
}

BElement b_act_e(const BElement& x, const BElement& y) {
  return bilinear(x, y, [](const Forest& a, const Forest& b) {
    const Forest f = disjoint_union(a, b);
    auto word = root_word(a);
    const auto wb = root_word(b);
    word.insert(word.end(), wb.begin(), wb.end());
    const int sign = koszul(degree(a), 1) * orient::permutation_sign(word, root_word(f));
    return std::pair{f, sign};
  });
}

BElement b_act_omega(const BElement& x, const BElement& y) {
  return bilinear(x, y, [](const Forest& a, const Forest& b) {
    if (a.tree_count() != 1 || b.tree_count() != 1)
      throw DomainError("omega acts on trees only");
    return std::pair{Forest({Tree::graft(a.trees()[0], b.trees()[0])}), 1};
  });
}

Element suspend(const BElement& x) {
  Element out(x.labels());
  for (const auto& [f, c] : x.terms()) out.add(f, c * suspension_sign(f));
  return out;
}

BElement desuspend(const Element& x) {
  BElement out(x.labels());
  for (const auto& [f, c] : x.terms()) out.add(f, c * suspension_sign(f));
  return out;
}

int det_compose_sign(const LabelSet& outer, const Label& slot, const LabelSet& inner) {
  if (!contains(outer, slot))
    throw DomainError("slot " + slot.str() + " is not a label of " + bessel::to_string(outer));
  if (!are_disjoint(set_difference(outer, {slot}), inner))
    throw DomainError("label sets overlap in composition");
  // Move the slot to the end, then append d_J in its place.
  std::vector<orient::Symbol> word;
  for (const auto& l : outer)
    if (l != slot) word.push_back(orient::LeafSym{l});
  const int move = (outer.end() - std::upper_bound(outer.begin(), outer.end(), slot)) % 2 ? -1 : 1;
  const auto tail = leaf_word(inner);
  word.insert(word.end(), tail.begin(), tail.end());
  return move * orient::permutation_sign(word, leaf_word(set_union(set_difference(outer, {slot}),
                                                                    inner)));
}

BElement compose(const BElement& x, const Label& slot, const BElement& y) {
  if (!contains(x.labels(), slot))
    throw DomainError("slot " + slot.str() + " is not a label of " + bessel::to_string(x.labels()));
  const int delta = det_compose_sign(x.labels(), slot, y.labels());
  const std::size_t dj = y.labels().size() - 1;
  // (d_I ⊗ x) o_s (d_J ⊗ y) = (-1)^{|x||d_J|} (d_I o_s d_J) ⊗ (x o_s y), so
  // x is split by degree first.
  std::map<std::size_t, BElement> parts;
  for (const auto& [f, c] : x.terms()) {
    auto [it, _] = parts.emplace(degree(f), BElement(x.labels()));
    it->second.add(f, c);
  }
  BElement out(set_union(set_difference(x.labels(), {slot}), y.labels()));
  for (const auto& [d, part] : parts) {
    const BElement piece = desuspend(operad::compose(suspend(part), slot, suspend(y)));
    out += Rational(delta * koszul(d, dj)) * piece;
  }
  return out;
}

}  // namespace bessel::boperad
