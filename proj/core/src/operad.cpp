#include "bessel/operad.hpp"

#include <algorithm>

#include "bessel/error.hpp"
#include "bessel/orient.hpp"

namespace bessel::operad {

namespace {

Forest single_leaf(const Label& s) { return Forest({Tree::leaf(s)}); }

// Sign of the E-product of two canonical basis forests.
int union_sign(const Forest& a, const Forest& b, const Forest& result) {
  const auto o = orient::collapse_disjoint(orient::canonical_global(a), orient::canonical_global(b));
  auto inner = orient::canonical_inner(result);
  inner.global = o;
  return orient::canonical_sign(result, inner);
}

Element act_E_basis(const Forest& a, const Forest& b) {
  const Forest f = disjoint_union(a, b);
  return Element::basis(f, union_sign(a, b, f));
}

Element act_Omega_basis(const Forest& a, const Forest& b) {
  Element out(set_union(a.labels(), b.labels()));
  const auto oa = orient::canonical_global(a);
  const auto ob = orient::canonical_global(b);
  for (std::size_t i = 0; i < a.trees().size(); ++i) {
    for (std::size_t j = 0; j < b.trees().size(); ++j) {
      const Tree& ta = a.trees()[i];
      const Tree& tb = b.trees()[j];
      std::vector<Tree> trees{Tree::graft(ta, tb)};
      for (std::size_t k = 0; k < a.trees().size(); ++k)
        if (k != i) trees.push_back(a.trees()[k]);
      for (std::size_t k = 0; k < b.trees().size(); ++k)
        if (k != j) trees.push_back(b.trees()[k]);
      const Forest f(std::move(trees));
      const VertexId v{set_union(ta.leaves(), tb.leaves())};

      // Existing local orientations become the reference ones of f; only the
      // new vertex carries (down, up towards a, up towards b).
      const auto& info = f.vertex(v);
      const auto& up_a = info.up[0].leaves == ta.leaves() ? info.up[0] : info.up[1];
      const auto& up_b = info.up[0].leaves == ta.leaves() ? info.up[1] : info.up[0];
      auto inner = orient::canonical_inner(f);
      inner.global = orient::collapse_vee(oa, ob, v);
      for (auto& lo : inner.locals)
        if (lo.vertex == v)
          lo.triple = {orient::down_half_edge(f, v), orient::up_half_edge(up_a),
                       orient::up_half_edge(up_b)};
      out.add(f, orient::canonical_sign(f, inner));
    }
  }
  return out;
}

template <class Fn>
Element bilinear(const Element& x, const Element& y, Fn&& fn) {
  if (!are_disjoint(x.labels(), y.labels()))
    throw DomainError("generator action on overlapping label sets " + to_string(x.labels()) +
                      " and " + to_string(y.labels()));
  Element out(set_union(x.labels(), y.labels()));
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      const Element ab = fn(a, b);
      for (const auto& [f, c] : ab.terms()) out.add(f, ca * cb * c);
    }
  return out;
}

}  // namespace

Element identity(const Label& s) { return Element::basis(single_leaf(s)); }

Element gen_E(const Label& i, const Label& j) {
  if (i == j) throw DomainError("gen_E needs distinct labels");
  return act_E(identity(i), identity(j));
}

Element gen_Omega(const Label& i, const Label& j) {
  if (i == j) throw DomainError("gen_Omega needs distinct labels");
  return act_Omega(identity(i), identity(j));
}

Element act_E(const Element& x, const Element& y) { return bilinear(x, y, act_E_basis); }
Element act_Omega(const Element& x, const Element& y) { return bilinear(x, y, act_Omega_basis); }

// ---------------------------------------------------------------------------

struct GeneratorWord::Node {
  Op op = Op::Slot;
  std::optional<Label> label;
  std::optional<GeneratorWord> left, right;
  LabelSet labels;
  std::size_t degree = 0;
};

GeneratorWord GeneratorWord::slot(Label label) {
  auto n = std::make_shared<Node>();
  n->labels = {label};
  n->label = std::move(label);
  return GeneratorWord(std::move(n));
}

GeneratorWord GeneratorWord::apply(Op op, GeneratorWord left, GeneratorWord right) {
  if (op == Op::Slot) throw DomainError("apply needs a generator");
  if (!are_disjoint(left.labels(), right.labels()))
    throw DomainError("generator word with repeated slot labels");
  auto n = std::make_shared<Node>();
  n->op = op;
  n->labels = set_union(left.labels(), right.labels());
  n->degree = left.degree() + right.degree() + (op == Op::Omega ? 1 : 0);
  n->left = std::move(left);
  n->right = std::move(right);
  return GeneratorWord(std::move(n));
}

GeneratorWord::Op GeneratorWord::op() const noexcept { return node_->op; }

const Label& GeneratorWord::label() const {
  if (op() != Op::Slot) throw DomainError("label() on a generator node");
  return *node_->label;
}
const GeneratorWord& GeneratorWord::left() const {
  if (op() == Op::Slot) throw DomainError("left() on a slot");
  return *node_->left;
}
const GeneratorWord& GeneratorWord::right() const {
  if (op() == Op::Slot) throw DomainError("right() on a slot");
  return *node_->right;
}
std::size_t GeneratorWord::degree() const noexcept { return node_->degree; }
const LabelSet& GeneratorWord::labels() const noexcept { return node_->labels; }

std::string GeneratorWord::text() const {
  if (op() == Op::Slot) return label().str();
  return std::string(op() == Op::E ? "E(" : "O(") + left().text() + "," + right().text() + ")";
}

Element evaluate(const GeneratorWord& w) {
  switch (w.op()) {
    case GeneratorWord::Op::Slot:
      return identity(w.label());
    case GeneratorWord::Op::E:
      return act_E(evaluate(w.left()), evaluate(w.right()));
    case GeneratorWord::Op::Omega:
      return act_Omega(evaluate(w.left()), evaluate(w.right()));
  }
  return {};
}

namespace {

Element act(GeneratorWord::Op op, const Element& a, const Element& b) {
  return op == GeneratorWord::Op::E ? act_E(a, b) : act_Omega(a, b);
}

// y homogeneous of degree `deg_y`.
Element substitute_homogeneous(const GeneratorWord& w, const Label& slot, const Element& y,
                               std::size_t deg_y) {
  if (w.op() == GeneratorWord::Op::Slot) return y;
  if (contains(w.left().labels(), slot)) {
    const int sign = koszul(w.right().degree(), deg_y);
    return Rational(sign) * act(w.op(), substitute_homogeneous(w.left(), slot, y, deg_y),
                                evaluate(w.right()));
  }
  return act(w.op(), evaluate(w.left()), substitute_homogeneous(w.right(), slot, y, deg_y));
}

}  // namespace

Element substitute(const GeneratorWord& w, const Label& slot, const Element& y) {
  if (!contains(w.labels(), slot))
    throw DomainError("slot " + slot.str() + " does not occur in " + w.text());
  const auto rest = set_difference(w.labels(), {slot});
  if (!are_disjoint(rest, y.labels()))
    throw DomainError("composition: label sets " + to_string(rest) + " and " +
                      to_string(y.labels()) + " overlap");
  Element out(set_union(rest, y.labels()));
  std::map<std::size_t, Element> parts;
  for (const auto& [f, c] : y.terms()) {
    auto [it, _] = parts.emplace(f.degree(), Element(y.labels()));
    it->second.add(f, c);
  }
  for (const auto& [d, part] : parts) out += substitute_homogeneous(w, slot, part, d);
  return out;
}

namespace {

GeneratorWord tree_word(const Tree& t) {
  if (t.is_leaf()) return GeneratorWord::slot(t.label());
  return GeneratorWord::apply(GeneratorWord::Op::Omega, tree_word(t.left()), tree_word(t.right()));
}

int sign_by_evaluation(const Forest& f, const GeneratorWord& w) {
  const Element e = evaluate(w);
  if (e.size() != 1 || e.terms().begin()->first != f)
    throw DomainError("decomposition of " + f.text() + " does not evaluate to it");
  const Rational& c = e.terms().begin()->second;
  if (c != 1 && c != -1) throw DomainError("decomposition evaluates with a non-unit coefficient");
  return sgn(c);
}

std::vector<GeneratorWord> tree_words(const Tree& t);

std::vector<GeneratorWord> forest_words(const std::vector<Tree>& trees) {
  if (trees.size() == 1) return tree_words(trees.front());
  std::vector<GeneratorWord> out;
  const std::size_t m = trees.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
    std::vector<Tree> a, b;
    for (std::size_t i = 0; i < m; ++i) (mask >> i & 1 ? a : b).push_back(trees[i]);
    for (const auto& wa : forest_words(a))
      for (const auto& wb : forest_words(b))
        out.push_back(GeneratorWord::apply(GeneratorWord::Op::E, wa, wb));
  }
  return out;
}

std::vector<GeneratorWord> tree_words(const Tree& t) {
  if (t.is_leaf()) return {GeneratorWord::slot(t.label())};
  std::vector<GeneratorWord> out;
  const auto ls = tree_words(t.left());
  const auto rs = tree_words(t.right());
  for (const auto& l : ls)
    for (const auto& r : rs) {
      out.push_back(GeneratorWord::apply(GeneratorWord::Op::Omega, l, r));
      out.push_back(GeneratorWord::apply(GeneratorWord::Op::Omega, r, l));
    }
  return out;
}

}  // namespace

Decomposition decompose(const Forest& f) {
  const auto& trees = f.trees();
  GeneratorWord w = tree_word(trees.front());
  for (std::size_t i = 1; i < trees.size(); ++i)
    w = GeneratorWord::apply(GeneratorWord::Op::E, w, tree_word(trees[i]));
  return {sign_by_evaluation(f, w), w};
}

std::vector<Decomposition> all_decompositions(const Forest& f) {
  std::vector<Decomposition> out;
  for (const auto& w : forest_words(f.trees())) out.push_back({sign_by_evaluation(f, w), w});
  return out;
}

Element compose(const Element& x, const Label& slot, const Element& y) {
  if (!contains(x.labels(), slot))
    throw DomainError("slot " + slot.str() + " is not a label of " + to_string(x.labels()));
  const auto rest = set_difference(x.labels(), {slot});
  if (!are_disjoint(rest, y.labels()))
    throw DomainError("composition: label sets " + to_string(rest) + " and " +
                      to_string(y.labels()) + " overlap");
  Element out(set_union(rest, y.labels()));
  for (const auto& [f, c] : x.terms()) {
    const auto d = decompose(f);
    out += Rational(c * d.sign) * substitute(d.word, slot, y);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

LabelSet image_of(const LabelSet& s, const std::map<Label, Label>& sigma) {
  std::vector<Label> out;
  for (const auto& l : s) out.push_back(sigma.at(l));
  return make_label_set(std::move(out));
}

orient::Symbol rename(const Forest& f, const std::map<Label, Label>& sigma,
                      const orient::Symbol& s) {
  struct Visitor {
    const Forest& f;
    const std::map<Label, Label>& sigma;
    orient::Symbol operator()(const orient::Aux& a) const { return a; }
    orient::Symbol operator()(const orient::VertexSym& v) const {
      return orient::VertexSym{VertexId{image_of(v.id.leaves, sigma)}};
    }
    orient::Symbol operator()(const orient::LeafSym& l) const {
      return orient::LeafSym{sigma.at(l.label)};
    }
    orient::Symbol operator()(const orient::RootSym& r) const {
      const auto& tree = f.trees()[f.tree_index(r.tree)];
      return orient::RootSym{image_of(tree.leaves(), sigma).front()};
    }
    orient::Symbol operator()(const orient::EdgeSym& e) const {
      return orient::EdgeSym{VertexId{image_of(e.upper.leaves, sigma)}, e.lower};
    }
  };
  return std::visit(Visitor{f, sigma}, s);
}

}  // namespace

Element relabel(const std::map<Label, Label>& sigma, const Element& x) {
  std::vector<Label> targets;
  for (const auto& l : x.labels()) {
    auto it = sigma.find(l);
    if (it == sigma.end()) throw DomainError("relabel: no image for label " + l.str());
    targets.push_back(it->second);
  }
  const LabelSet image = make_label_set(targets);  // throws unless injective
  Element out(image);
  for (const auto& [f, c] : x.terms()) {
    const Forest g = f.relabeled(sigma);
    const auto canon = orient::canonical_inner(f);
    orient::InnerOrientation moved;
    moved.global.sign = canon.global.sign;
    for (const auto& s : canon.global.symbols) moved.global.symbols.push_back(rename(f, sigma, s));
    for (const auto& lo : canon.locals)
      moved.locals.push_back({VertexId{image_of(lo.vertex.leaves, sigma)},
                              {rename(f, sigma, lo.triple[0]), rename(f, sigma, lo.triple[1]),
                               rename(f, sigma, lo.triple[2])},
                              lo.sign});
    out.add(g, c * orient::canonical_sign(g, moved));
  }
  return out;
}

Integer dimension(const LabelSet& labels, std::size_t k) {
  if (labels.empty()) throw DomainError("dimension: empty label set");
  if (k >= labels.size()) throw DomainError("dimension: degree out of range");
  return count_by_degree(labels.size())[k];
}

}  // namespace bessel::operad
