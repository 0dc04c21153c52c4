#include "bessel/dual.hpp"

#include <algorithm>
#include <map>

#include "bessel/error.hpp"
#include "bessel/hopf.hpp"
#include "bessel/linalg.hpp"
#include "bessel/operad.hpp"
#include "bessel/orient.hpp"
#include "bessel/poset.hpp"

namespace bessel::dual {

namespace {

void require_same(const LabelSet& a, const LabelSet& b) {
  if (a != b)
    throw DomainError("label sets differ: " + to_string(a) + " vs " + to_string(b));
}

void require_distinct(std::vector<Label> ls) {
  std::sort(ls.begin(), ls.end());
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
    throw DomainError("labels must be distinct");
}

void require_member(const LabelSet& labels, const Label& l) {
  if (!contains(labels, l)) throw DomainError("label " + l.str() + " not in " + to_string(labels));
}

// Forests on `labels` with `degree` inner vertices and support exactly `s`.
std::vector<Forest> forests_with_support(const LabelSet& labels, const LabelSet& s,
                                         std::size_t degree) {
  std::vector<Forest> out;
  if (s.empty()) {
    if (degree == 0) out.push_back(Forest::minimum(labels));
    return out;
  }
  if (degree + 1 > s.size()) return out;
  std::vector<Tree> singles;
  for (const auto& l : set_difference(labels, s)) singles.push_back(Tree::leaf(l));
  for (const auto& g : enumerate_forests(s, degree)) {
    if (std::any_of(g.trees().begin(), g.trees().end(), [](const Tree& t) { return t.is_leaf(); }))
      continue;
    std::vector<Tree> trees = g.trees();
    trees.insert(trees.end(), singles.begin(), singles.end());
    out.emplace_back(std::move(trees));
  }
  return out;
}

const poset::GammaImage* find(const std::vector<poset::GammaImage>& images, const Forest& f) {
  for (const auto& img : images)
    if (img.forest == f) return &img;
  return nullptr;
}

// Coefficient of F in F1* x F2*.
Rational basis_product_coefficient(const Forest& f, const Forest& f1, const Forest& f2) {
  const auto vs = inner_vertices(f);
  const auto o = orient::canonical_global(f);
  Rational total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << vs.size()); ++mask) {
    std::vector<VertexId> v1, v2;
    for (std::size_t i = 0; i < vs.size(); ++i) (mask >> i & 1 ? v1 : v2).push_back(vs[i]);
    if (v1.size() != f1.degree()) continue;
    const auto g1 = poset::gamma(f, v1);
    const auto* a = find(g1, f1);
    if (!a) continue;
    const auto g2 = poset::gamma(f, v2);
    const auto* b = find(g2, f2);
    if (!b) continue;
    total += orient::split(o, v1, v2).sign * orient::restriction_sign(f, f1, a->phi) *
             orient::restriction_sign(f, f2, b->phi);
  }
  return total;
}

DualElement basis_product(const Forest& f1, const Forest& f2) {
  DualElement out(f1.labels());
  const LabelSet s = set_union(support(f1), support(f2));
  for (const auto& f : forests_with_support(f1.labels(), s, f1.degree() + f2.degree()))
    out.add(f, basis_product_coefficient(f, f1, f2));
  return out;
}

}  // namespace

Rational pairing(const Element& x, const DualElement& d) {
  require_same(x.labels(), d.labels());
  Rational out = 0;
  for (const auto& [f, c] : x.terms()) out += c * d.coefficient(f);
  return out;
}

DualElement basis(const Forest& f, const Rational& coeff) { return DualElement::basis(f, coeff); }

DualElement unit(const LabelSet& labels) { return basis(Forest::minimum(labels)); }

DualElement product(const DualElement& a, const DualElement& b) {
  require_same(a.labels(), b.labels());
  DualElement out(a.labels());
  for (const auto& [f1, c1] : a.terms())
    for (const auto& [f2, c2] : b.terms()) out += (c1 * c2) * basis_product(f1, f2);
  return out;
}

DualElement product_via_duality(const DualElement& a, const DualElement& b) {
  require_same(a.labels(), b.labels());
  DualElement out(a.labels());
  std::map<std::size_t, std::vector<Forest>> by_degree;
  for (const auto& [f1, c1] : a.terms())
    for (const auto& [f2, c2] : b.terms()) {
      const std::size_t d = f1.degree() + f2.degree();
      if (d >= a.labels().size()) continue;
      auto it = by_degree.find(d);
      if (it == by_degree.end()) it = by_degree.emplace(d, enumerate_forests(a.labels(), d)).first;
      for (const auto& f : it->second) {
        // <F1* ⊗ F2*, Delta F> carries (-1)^{|F1||F2|}; the opposite product
        // removes it again.
        const auto& delta = hopf::coproduct(f);
        const Rational paired =
            delta.coefficient({f1, f2}) * koszul(f1.degree(), f2.degree());
        out.add(f, c1 * c2 * paired * koszul(f1.degree(), f2.degree()));
      }
    }
  return out;
}

DualElement Y(const LabelSet& labels, const Label& i, const Label& j) {
  if (i == j) throw DomainError("Y needs distinct labels");
  require_member(labels, i);
  require_member(labels, j);
  std::vector<Tree> trees{Tree::graft(Tree::leaf(i), Tree::leaf(j))};
  for (const auto& l : labels)
    if (l != i && l != j) trees.push_back(Tree::leaf(l));
  return basis(Forest(std::move(trees)), i < j ? 1 : -1);
}

namespace {

// Copies of `t` with a new vertex carrying leaf j inserted on each edge of
// the path from i down to the root.
void graft_on_path(const Tree& t, const Label& i, const Tree& j, std::vector<Tree>& out) {
  if (!t.is_leaf()) {
    const bool left = contains(t.left().leaves(), i);
    const Tree& on = left ? t.left() : t.right();
    const Tree& off = left ? t.right() : t.left();
    std::vector<Tree> sub;
    graft_on_path(on, i, j, sub);
    for (const auto& s : sub) out.push_back(Tree::graft(s, off));
  }
  out.push_back(Tree::graft(t, j));
}

}  // namespace

DualElement product_with_Y(const Forest& f, const Label& i, const Label& j) {
  if (i == j) throw DomainError("product_with_Y needs distinct labels");
  require_member(f.labels(), i);
  require_member(f.labels(), j);
  if (contains(support(f), j))
    throw DomainError("label " + j.str() + " lies in the support of " + f.text());
  const DualElement y = Y(f.labels(), i, j);
  const Forest& fy = y.terms().begin()->first;
  const Rational cy = y.terms().begin()->second;
  const Tree leaf_j = Tree::leaf(j);
  const std::size_t ti = f.tree_index(i);

  DualElement out(f.labels());
  std::vector<Tree> grafted;
  graft_on_path(f.trees()[ti], i, leaf_j, grafted);
  for (const auto& g : grafted) {
    std::vector<Tree> trees{g};
    for (std::size_t k = 0; k < f.trees().size(); ++k)
      if (k != ti && !(f.trees()[k].is_leaf() && f.trees()[k].label() == j))
        trees.push_back(f.trees()[k]);
    const Forest h(std::move(trees));
    // The vertex of h above {i, j} is the new one; every other vertex of h
    // comes from f, gaining j when it lies below the new vertex.
    VertexMap phi1, phi2;
    VertexId fresh;
    for (const auto& v : h.vertices()) {
      if (contains(v.id.leaves, j) && v.up[0].leaves != LabelSet{j} &&
          v.up[1].leaves != LabelSet{j}) {
        phi1.emplace(VertexId{set_difference(v.id.leaves, {j})}, v.id);
      } else if (contains(v.id.leaves, j)) {
        fresh = v.id;
      } else {
        phi1.emplace(v.id, v.id);
      }
    }
    phi2.emplace(VertexId{make_label_set({i, j})}, fresh);
    std::vector<VertexId> v1, v2{fresh};
    for (const auto& [from, to] : phi1) v1.push_back(to);
    std::sort(v1.begin(), v1.end());
    const int sign = orient::split(orient::canonical_global(h), v1, v2).sign *
                     orient::restriction_sign(h, f, phi1) * orient::restriction_sign(h, fy, phi2);
    out.add(h, cy * sign);
  }
  return out;
}

DualElement path_product(const LabelSet& labels, const std::vector<Label>& path) {
  if (path.size() < 2) throw DomainError("path product needs at least two labels");
  require_distinct(path);
  DualElement acc = Y(labels, path[0], path[1]);
  for (std::size_t k = 2; k < path.size(); ++k) acc = product(acc, Y(labels, path[k - 1], path[k]));
  return acc;
}

bool verify_triangle(const LabelSet& labels, const Label& i, const Label& j, const Label& k) {
  require_distinct({i, j, k});
  return product(path_product(labels, {i, j, k}), Y(labels, k, i)).is_zero();
}

DualElement twelve_term_sum(const LabelSet& labels, const Label& i, const Label& j,
                            const Label& k, const Label& l) {
  require_distinct({i, j, k, l});
  std::vector<Label> order{i, j, k, l};
  std::sort(order.begin(), order.end());
  DualElement out(labels);
  do {
    if (order.front() < order.back()) out += path_product(labels, order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

bool verify_12term(const LabelSet& labels, const Label& i, const Label& j, const Label& k,
                   const Label& l) {
  return twelve_term_sum(labels, i, j, k, l).is_zero();
}

namespace {

Tree leaf(const Label& l) { return Tree::leaf(l); }

Forest with_singletons(const LabelSet& labels, Tree t) {
  std::vector<Tree> trees{t};
  for (const auto& l : set_difference(labels, t.leaves())) trees.push_back(Tree::leaf(l));
  return Forest(std::move(trees));
}

Forest caterpillar(const LabelSet& labels, const Label& a, const Label& b, const Label& c,
                   const Label& d) {
  return with_singletons(labels,
                         Tree::graft(Tree::graft(Tree::graft(leaf(c), leaf(d)), leaf(b)), leaf(a)));
}

Forest balanced(const LabelSet& labels, const Label& a, const Label& b, const Label& c,
                const Label& d) {
  return with_singletons(labels,
                         Tree::graft(Tree::graft(leaf(a), leaf(b)), Tree::graft(leaf(c), leaf(d))));
}

}  // namespace

Rational LLL(const LabelSet& labels, const Label& a, const Label& b, const Label& c,
             const Label& d) {
  require_distinct({a, b, c, d});
  return path_product(labels, {a, b, c, d}).coefficient(caterpillar(labels, a, b, c, d));
}

Rational YYY(const LabelSet& labels, const Label& a, const Label& b, const Label& c,
             const Label& d) {
  require_distinct({a, b, c, d});
  return path_product(labels, {a, b, c, d}).coefficient(balanced(labels, a, b, c, d));
}

ShapeReport degree3_shape_analysis(const LabelSet& labels, const Label& i, const Label& j,
                                   const Label& k, const Label& l) {
  require_distinct({i, j, k, l});
  const DualElement p = path_product(labels, {i, j, k, l});
  // Named terms of the expansion: four caterpillars and one balanced tree.
  const std::vector<std::vector<Label>> names{{i, j, k, l}, {i, l, j, k}, {l, i, k, j}, {l, k, j, i}};
  ShapeReport r;
  bool consistent = p.size() == 5;
  for (const auto& [f, c] : p.terms()) {
    ShapeTerm t{f, c, false, {}};
    const Tree* big = nullptr;
    for (const auto& tr : f.trees())
      if (!tr.is_leaf()) big = &tr;
    t.balanced = big && big->inner_count() == 3 && !big->left().is_leaf() && !big->right().is_leaf();
    if (t.balanced) {
      ++r.balanced;
      consistent = consistent && f == balanced(labels, i, j, k, l);
    } else {
      ++r.caterpillars;
      for (const auto& n : names)
        if (caterpillar(labels, n[0], n[1], n[2], n[3]) == f) t.name = n;
      consistent = consistent && !t.name.empty() &&
                   c == LLL(labels, t.name[0], t.name[1], t.name[2], t.name[3]);
    }
    r.terms.push_back(std::move(t));
  }
  consistent = consistent && r.balanced == 1 && r.caterpillars == 4;
  r.expansion_consistent = consistent;
  const Rational lll = LLL(labels, i, j, k, l);
  const Rational yyy = YYY(labels, i, j, k, l);
  r.lll_antisymmetric = lll != 0 && lll == -LLL(labels, i, j, l, k);
  r.yyy_antisymmetric = yyy != 0 && yyy == -YYY(labels, i, j, l, k);
  r.yyy_symmetric = yyy != 0 && yyy == YYY(labels, k, l, i, j);
  return r;
}

RankReport generation_rank(const LabelSet& labels, std::size_t k) {
  if (labels.empty()) throw DomainError("generation_rank: empty label set");
  if (k >= labels.size()) throw DomainError("generation_rank: degree out of range");
  RankReport r;
  r.labels = labels;
  r.degree = k;
  r.dim = count_by_degree(labels.size())[k];

  const auto basis_forests = enumerate_forests(labels, k);
  std::map<Forest, std::size_t> column;
  for (const auto& f : basis_forests) column.emplace(f, column.size());

  std::vector<std::pair<Label, Label>> pairs;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) pairs.emplace_back(labels[a], labels[b]);

  linalg::RationalMatrix rows;
  std::vector<std::size_t> pick(k);
  // Subsets of k distinct pairs in lexicographic order.
  auto emit = [&]() {
    DualElement acc = unit(labels);
    std::string name;
    for (std::size_t t = 0; t < k; ++t) {
      const auto& [a, b] = pairs[pick[t]];
      acc = product(acc, Y(labels, a, b));
      name += (t ? "x" : "") + std::string("Y(") + a.str() + "," + b.str() + ")";
    }
    if (k == 0) name = "1";
    r.monomials.push_back(name);
    std::vector<Rational> row(basis_forests.size());
    for (const auto& [f, c] : acc.terms()) row[column.at(f)] = c;
    rows.push_back(std::move(row));
  };
  if (k > pairs.size()) {
    r.rank = 0;
    return r;
  }
  for (std::size_t t = 0; t < k; ++t) pick[t] = t;
  while (true) {
    emit();
    std::size_t t = k;
    while (t > 0 && pick[t - 1] == pairs.size() - k + t - 1) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
  }
  r.rank = linalg::rank(rows);
  return r;
}

}  // namespace bessel::dual
