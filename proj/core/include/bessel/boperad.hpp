#pragma once

// The operad B of root-oriented forests.
//
// A basis forest stands for the sorted wedge of its roots tensored with the
// forest.  Generators are e (antisymmetric, degree 1, acting by disjoint
// union) and omega (symmetric, degree 0, grafting two trees).  General
// composition goes through the suspension Bess = Det ⊗ B.

#include "bessel/element.hpp"
#include "bessel/forest.hpp"

namespace bessel::boperad {

using BElement = Combination<RootOrientedTag>;

std::string to_string(const BElement& x);

// Number of roots minus one.
std::size_t degree(const Forest& f);

BElement identity(const Label& s);
// i ^ j ⊗ {i;j}
BElement gen_e(const Label& i, const Label& j);
// The two-leaf tree with its unique root orientation.
BElement gen_omega(const Label& i, const Label& j);

// e_{*,#} o_* x o_# y = (-1)^{o1} o1 ^ o2 ⊗ (F1 ⊔ F2)
BElement b_act_e(const BElement& x, const BElement& y);
// omega_{*,#} o_* x o_# y on trees.  Throws DomainError on a term with more
// than one tree.
BElement b_act_omega(const BElement& x, const BElement& y);

// d_I ⊗ x with d_I the sorted wedge of the labels, as an inner-oriented
// element of Bess(I), and its inverse.
Element suspend(const BElement& x);
BElement desuspend(const Element& x);

// Sign of the Det composition d_I o_s d_J against d_{(I - s) ⊔ J}.
int det_compose_sign(const LabelSet& outer, const Label& slot, const LabelSet& inner);

BElement compose(const BElement& x, const Label& slot, const BElement& y);

}  // namespace bessel::boperad
