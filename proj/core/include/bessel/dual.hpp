#pragma once

// The algebras Bess*(I): the dual basis, the opposite of the dual product,
// the generators Y(i,j) and their relations.

#include <string>
#include <vector>

#include "bessel/element.hpp"

namespace bessel::dual {

Rational pairing(const Element& x, const DualElement& d);

// F* for a basis forest F.
DualElement basis(const Forest& f, const Rational& coeff = 1);
// The degree-0 dual forest, the unit of the product.
DualElement unit(const LabelSet& labels);

// Direct enumeration: forests F with the right degree and support, every
// splitting V(F) = V1 ⊔ V2 with F1 in gamma(F, V1) and F2 in gamma(F, V2).
DualElement product(const DualElement& a, const DualElement& b);
// By pairing against the coproduct of every basis forest of the target
// degree.
DualElement product_via_duality(const DualElement& a, const DualElement& b);

// The cherry (i,j) with singletons elsewhere; Y(j,i) = -Y(i,j).
DualElement Y(const LabelSet& labels, const Label& i, const Label& j);

// F* x Y(i,j) by grafting j onto the path from i to the root.  Requires
// j outside the support of F.
DualElement product_with_Y(const Forest& f, const Label& i, const Label& j);

// Y(a1,a2) x Y(a2,a3) x ... along a path of labels.
DualElement path_product(const LabelSet& labels, const std::vector<Label>& path);

bool verify_triangle(const LabelSet& labels, const Label& i, const Label& j, const Label& k);
// Sum of the path products over the 12 total orders of {i,j,k,l} taken up
// to reversal.
DualElement twelve_term_sum(const LabelSet& labels, const Label& i, const Label& j,
                            const Label& k, const Label& l);
bool verify_12term(const LabelSet& labels, const Label& i, const Label& j, const Label& k,
                   const Label& l);

// Terms of Y(i,j) x Y(j,k) x Y(k,l), grouped by the shape of their tree on
// {i,j,k,l}.  LLL(a,b,c,d) is the coefficient of the caterpillar
// (((c,d),b),a) in Y(a,b) x Y(b,c) x Y(c,d); YYY(a,b,c,d) is the
// coefficient of ((a,b),(c,d)) in the same product.
struct ShapeTerm {
  Forest forest;
  Rational coeff;
  bool balanced = false;
  // For caterpillars, the arguments (a,b,c,d) of the LLL naming the term.
  std::vector<Label> name;
};

struct ShapeReport {
  std::vector<ShapeTerm> terms;
  std::size_t caterpillars = 0;
  std::size_t balanced = 0;
  // The four caterpillar terms and the balanced term agree with LLL and YYY
  // evaluated at the permuted arguments of the expansion.
  bool expansion_consistent = false;
  bool lll_antisymmetric = false;  // LLL(i,j,k,l) = -LLL(i,j,l,k)
  bool yyy_antisymmetric = false;  // YYY(i,j,k,l) = -YYY(i,j,l,k)
  bool yyy_symmetric = false;      // YYY(i,j,k,l) = YYY(k,l,i,j)
};

// Coefficients, as defined above.
Rational LLL(const LabelSet& labels, const Label& a, const Label& b, const Label& c,
             const Label& d);
Rational YYY(const LabelSet& labels, const Label& a, const Label& b, const Label& c,
             const Label& d);

ShapeReport degree3_shape_analysis(const LabelSet& labels, const Label& i, const Label& j,
                                   const Label& k, const Label& l);

struct RankReport {
  LabelSet labels;
  std::size_t degree = 0;
  Integer dim;
  std::size_t rank = 0;
  std::vector<std::string> monomials;
};

// Rank of the span of all products of k distinct Y generators in degree k.
RankReport generation_rank(const LabelSet& labels, std::size_t k);

}  // namespace bessel::dual
