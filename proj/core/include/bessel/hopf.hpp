#pragma once

// Coproduct, counit and tensor operations on Bess.
//
// Delta of a basis forest sums over ordered splittings V(F) = V' ⊔ V'' of
// its inner vertices, each side contributing gamma(F, V') with the
// restricted orientation.  The generator recursion computes the same map
// from Delta(E) = E ⊗ E, Delta(Omega) = E ⊗ Omega + Omega ⊗ E and the
// morphism property.

#include "bessel/element.hpp"

namespace bessel::hopf {

TensorElement tensor(const Element& a, const Element& b);

// Explicit splitting formula.
TensorElement coproduct(const Element& x);
// Memoized; the reference stays valid for the lifetime of the program.
const TensorElement& coproduct(const Forest& f);

// Generator recursion through operad::decompose.
TensorElement coproduct_via_generators(const Element& x);

// Coefficient of the degree-0 forest.
Rational counit(const Element& x);
// The degree-0 forest on `labels`.
Element augmentation(const LabelSet& labels);

// (a ⊗ b) o_s (c ⊗ d) = (-1)^{|b||c|} (a o_s c) ⊗ (b o_s d)
TensorElement compose(const TensorElement& x, const Label& slot, const TensorElement& y);

// a ⊗ b -> (-1)^{|a||b|} b ⊗ a
TensorElement swap(const TensorElement& x);

Tensor<3> coproduct_left(const TensorElement& x);   // (Delta ⊗ id)
Tensor<3> coproduct_right(const TensorElement& x);  // (id ⊗ Delta)

Element counit_left(const TensorElement& x);   // (eps ⊗ id)
Element counit_right(const TensorElement& x);  // (id ⊗ eps)

}  // namespace bessel::hopf
