#include "bessel/hopf.hpp"

#include <mutex>
#include <unordered_map>

#include "bessel/operad.hpp"
#include "bessel/orient.hpp"
#include "bessel/poset.hpp"

namespace bessel::hopf {

namespace {

TensorElement basis_coproduct(const Forest& f) {
  TensorElement out(f.labels());
  const auto vs = inner_vertices(f);
  const auto o = orient::canonical_global(f);
  for (std::size_t mask = 0; mask < (std::size_t{1} << vs.size()); ++mask) {
    std::vector<VertexId> left, right;
    for (std::size_t i = 0; i < vs.size(); ++i) (mask >> i & 1 ? left : right).push_back(vs[i]);
    const int sign = orient::split(o, left, right).sign;
    const auto lefts = poset::gamma(f, left);
    const auto rights = poset::gamma(f, right);
    for (const auto& a : lefts) {
      const int sa = orient::restriction_sign(f, a.forest, a.phi);
      for (const auto& b : rights)
        out.add({a.forest, b.forest}, sign * sa * orient::restriction_sign(f, b.forest, b.phi));
    }
  }
  return out;
}

struct Cache {
  std::mutex mutex;
  std::unordered_map<std::string, TensorElement> map;
};

Cache& cache() {
  static Cache c;
  return c;
}

template <std::size_t N>
void add_scaled(Tensor<N>& out, const Tensor<N>& x, const Rational& c) {
  for (const auto& [k, v] : x.terms()) out.add(k, c * v);
}

using Op = operad::GeneratorWord::Op;

TensorElement word_coproduct(const operad::GeneratorWord& w) {
  if (w.op() == Op::Slot) {
    const Forest leaf({Tree::leaf(w.label())});
    TensorElement out(leaf.labels());
    out.add({leaf, leaf}, 1);
    return out;
  }
  const TensorElement dx = word_coproduct(w.left());
  const TensorElement dy = word_coproduct(w.right());
  TensorElement out(w.labels());
  for (const auto& [kx, cx] : dx.terms())
    for (const auto& [ky, cy] : dy.terms()) {
      const Element x1 = Element::basis(kx[0]), x2 = Element::basis(kx[1]);
      const Element y1 = Element::basis(ky[0]), y2 = Element::basis(ky[1]);
      const std::size_t d1 = kx[0].degree(), d2 = kx[1].degree(), e1 = ky[0].degree();
      const Rational c = cx * cy * koszul(d2, e1);
      if (w.op() == Op::E) {
        add_scaled(out, tensor(operad::act_E(x1, y1), operad::act_E(x2, y2)), c);
      } else {
        add_scaled(out, tensor(operad::act_Omega(x1, y1), operad::act_E(x2, y2)), c);
        add_scaled(out, tensor(operad::act_E(x1, y1), operad::act_Omega(x2, y2)),
                   c * koszul(1, d1 + e1));
      }
    }
  return out;
}

}  // namespace

TensorElement tensor(const Element& a, const Element& b) {
  if (a.labels() != b.labels()) throw DomainError("tensor factors on different label sets");
  TensorElement out(a.labels());
  for (const auto& [fa, ca] : a.terms())
    for (const auto& [fb, cb] : b.terms()) out.add({fa, fb}, ca * cb);
  return out;
}

const TensorElement& coproduct(const Forest& f) {
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.map.find(f.text()); it != c.map.end()) return it->second;
  }
  TensorElement d = basis_coproduct(f);
  std::lock_guard lock(c.mutex);
  return c.map.emplace(f.text(), std::move(d)).first->second;
}

TensorElement coproduct(const Element& x) {
  TensorElement out(x.labels());
  for (const auto& [f, c] : x.terms()) add_scaled(out, coproduct(f), c);
  return out;
}

TensorElement coproduct_via_generators(const Element& x) {
  TensorElement out(x.labels());
  for (const auto& [f, c] : x.terms()) {
    const auto d = operad::decompose(f);
    add_scaled(out, word_coproduct(d.word), c * d.sign);
  }
  return out;
}

Rational counit(const Element& x) { return x.coefficient(Forest::minimum(x.labels())); }

Element augmentation(const LabelSet& labels) { return Element::basis(Forest::minimum(labels)); }

TensorElement compose(const TensorElement& x, const Label& slot, const TensorElement& y) {
  TensorElement out(set_union(set_difference(x.labels(), {slot}), y.labels()));
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      const Element a = operad::compose(Element::basis(kx[0]), slot, Element::basis(ky[0]));
      const Element b = operad::compose(Element::basis(kx[1]), slot, Element::basis(ky[1]));
      add_scaled(out, tensor(a, b), cx * cy * koszul(kx[1].degree(), ky[0].degree()));
    }
  return out;
}

TensorElement swap(const TensorElement& x) {
  TensorElement out(x.labels());
  for (const auto& [k, c] : x.terms())
    out.add({k[1], k[0]}, c * koszul(k[0].degree(), k[1].degree()));
  return out;
}

Tensor<3> coproduct_left(const TensorElement& x) {
  Tensor<3> out(x.labels());
  for (const auto& [k, c] : x.terms())
    for (const auto& [d, cd] : coproduct(k[0]).terms()) out.add({d[0], d[1], k[1]}, c * cd);
  return out;
}

Tensor<3> coproduct_right(const TensorElement& x) {
  Tensor<3> out(x.labels());
  for (const auto& [k, c] : x.terms())
    for (const auto& [d, cd] : coproduct(k[1]).terms()) out.add({k[0], d[0], d[1]}, c * cd);
  return out;
}

Element counit_left(const TensorElement& x) {
  Element out(x.labels());
  const Forest m = Forest::minimum(x.labels());
  for (const auto& [k, c] : x.terms())
    if (k[0] == m) out.add(k[1], c);
  return out;
}

Element counit_right(const TensorElement& x) {
  Element out(x.labels());
  const Forest m = Forest::minimum(x.labels());
  for (const auto& [k, c] : x.terms())
    if (k[1] == m) out.add(k[0], c);
  return out;
}

}  // namespace bessel::hopf
