#include "bessel/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bessel/error.hpp"

namespace bessel::poset {

namespace {

using VertexSet = std::vector<VertexId>;

struct Partial {
  std::vector<Tree> trees;
  VertexMap phi;
};

std::vector<Partial> product(const std::vector<Partial>& a, const std::vector<Partial>& b) {
  std::vector<Partial> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Partial p = x;
      p.trees.insert(p.trees.end(), y.trees.begin(), y.trees.end());
      p.phi.insert(y.phi.begin(), y.phi.end());
      out.push_back(std::move(p));
    }
  return out;
}

std::vector<Partial> tree_gamma(const Tree& t, const VertexSet& v) {
  if (t.is_leaf()) return {Partial{{t}, {}}};
  const auto left = tree_gamma(t.left(), v);
  const auto right = tree_gamma(t.right(), v);
  const VertexId bottom{t.leaves()};
  if (!std::binary_search(v.begin(), v.end(), bottom)) return product(left, right);
  std::vector<Partial> out;
  for (const auto& x : left)
    for (const auto& y : right)
      for (std::size_t i = 0; i < x.trees.size(); ++i)
        for (std::size_t j = 0; j < y.trees.size(); ++j) {
          Partial p;
          const Tree g = Tree::graft(x.trees[i], y.trees[j]);
          p.trees.push_back(g);
          for (std::size_t k = 0; k < x.trees.size(); ++k)
            if (k != i) p.trees.push_back(x.trees[k]);
          for (std::size_t k = 0; k < y.trees.size(); ++k)
            if (k != j) p.trees.push_back(y.trees[k]);
          p.phi = x.phi;
          p.phi.insert(y.phi.begin(), y.phi.end());
          p.phi.emplace(VertexId{g.leaves()}, bottom);
          out.push_back(std::move(p));
        }
  return out;
}

VertexSet checked_subset(const Forest& f, const VertexSet& v) {
  VertexSet sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("repeated vertex in subset");
  for (const auto& id : sorted)
    if (!f.has_vertex(id))
      throw DomainError("vertex " + to_string(id) + " is not an inner vertex of " + f.text());
  return sorted;
}

// Strictly below: the ancestor set of `upper` is a proper subset.
bool below(const VertexId& lower, const VertexId& upper) {
  return lower.leaves.size() > upper.leaves.size() && is_subset(upper.leaves, lower.leaves);
}

bool accepts(const Forest& f, const Forest& g, const VertexMap& psi) {
  for (const auto& [vg, vf] : psi) {
    if (!is_subset(vg.leaves, vf.leaves)) return false;
    const auto& ig = g.vertex(vg);
    const auto& jf = f.vertex(vf);
    int hit[2] = {-1, -1};
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (is_subset(ig.up[b].leaves, jf.up[c].leaves)) hit[b] = c;
    if (hit[0] < 0 || hit[1] < 0 || hit[0] == hit[1]) return false;
  }
  for (const auto& [a, fa] : psi)
    for (const auto& [b, fb] : psi)
      if (below(a, b) && !below(fa, fb)) return false;
  return true;
}

}  // namespace

std::vector<GammaImage> gamma(const Forest& f, const std::vector<VertexId>& v) {
  const VertexSet sorted = checked_subset(f, v);
  std::vector<Partial> acc{Partial{}};
  for (const auto& t : f.trees()) acc = product(acc, tree_gamma(t, sorted));
  std::vector<GammaImage> out;
  out.reserve(acc.size());
  for (auto& p : acc) out.push_back({Forest(std::move(p.trees)), std::move(p.phi)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GammaImage> gamma_oracle(const Forest& f, const std::vector<VertexId>& v) {
  const VertexSet sorted = checked_subset(f, v);
  std::vector<GammaImage> out;
  for (const auto& g : enumerate_forests(f.labels(), sorted.size())) {
    const auto vg = inner_vertices(g);
    std::vector<std::size_t> perm(sorted.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      VertexMap psi;
      for (std::size_t i = 0; i < vg.size(); ++i) psi.emplace(vg[i], sorted[perm[i]]);
      if (accepts(f, g, psi)) out.push_back({g, std::move(psi)});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<GammaImage> find_image(const Forest& lower, const Forest& f) {
  if (lower.labels() != f.labels()) throw DomainError("poset comparison across label sets");
  const std::size_t k = lower.degree();
  const auto vf = inner_vertices(f);
  if (k > vf.size()) return std::nullopt;
  // Subsets of size k in lexicographic order.
  std::vector<bool> pick(vf.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    VertexSet v;
    for (std::size_t i = 0; i < vf.size(); ++i)
      if (pick[i]) v.push_back(vf[i]);
    for (auto& img : gamma(f, v))
      if (img.forest == lower) return std::move(img);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

bool leq(const Forest& lower, const Forest& upper) {
  return find_image(lower, upper).has_value();
}

std::vector<Forest> interval(const Forest& lower, const Forest& upper) {
  if (!leq(lower, upper))
    throw DomainError(lower.text() + " is not below " + upper.text());
  std::vector<Forest> out;
  for (const auto& z : enumerate_forests(lower.labels()))
    if (z.degree() >= lower.degree() && z.degree() <= upper.degree() && leq(lower, z) &&
        leq(z, upper))
      out.push_back(z);
  return out;
}

std::vector<Edge> hasse(const std::vector<Forest>& forests) {
  std::map<std::size_t, std::vector<const Forest*>> by_rank;
  for (const auto& f : forests) by_rank[f.degree()].push_back(&f);
  std::vector<Edge> out;
  for (const auto& lo : forests) {
    auto it = by_rank.find(lo.degree() + 1);
    if (it == by_rank.end()) continue;
    for (const Forest* hi : it->second)
      if (leq(lo, *hi)) out.push_back({lo, *hi});
  }
  return out;
}

std::vector<Edge> hasse(const LabelSet& labels) { return hasse(enumerate_forests(labels)); }

std::vector<Forest> maximal_elements(const LabelSet& labels) {
  const auto all = enumerate_forests(labels);
  std::vector<Forest> out;
  for (const auto& f : all) {
    bool maximal = true;
    for (const auto& g : all)
      if (g.degree() == f.degree() + 1 && leq(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::string to_dot(const std::vector<Forest>& nodes, const std::vector<Edge>& edges) {
  std::map<Forest, std::size_t> index;
  std::string out = "digraph forests {\n  rankdir=BT;\n";
  for (const auto& f : nodes) {
    const std::size_t id = index.size();
    if (!index.emplace(f, id).second) continue;
    out += "  n" + std::to_string(id) + " [label=\"" + f.text() + "\"];\n";
  }
  for (const auto& e : edges) {
    auto a = index.find(e.lower);
    auto b = index.find(e.upper);
    if (a == index.end() || b == index.end())
      throw DomainError("edge endpoint missing from the node list");
    out += "  n" + std::to_string(a->second) + " -> n" + std::to_string(b->second) + ";\n";
  }
  return out + "}\n";
}

}  // namespace bessel::poset
