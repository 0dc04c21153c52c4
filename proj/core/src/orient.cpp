#include "bessel/orient.hpp"

#include <algorithm>

#include "bessel/error.hpp"

namespace bessel::orient {

namespace {

// Private R instances used while collapsing, so that both operands may
// arrive with the same R symbol.
constexpr int kLeftR = 1001;
constexpr int kRightR = 1002;

std::vector<Symbol> rename_R(const std::vector<Symbol>& symbols, int instance, Symbol* found) {
  std::vector<Symbol> out;
  out.reserve(symbols.size());
  int count = 0;
  for (const auto& s : symbols) {
    if (is_R(s)) {
      ++count;
      out.push_back(R(instance));
    } else {
      out.push_back(s);
    }
  }
  if (count != 1) throw DomainError("orientation word must contain exactly one R symbol");
  if (found) *found = R(instance);
  return out;
}

std::vector<Symbol> without_R(const std::vector<Symbol>& symbols) {
  std::vector<Symbol> out;
  for (const auto& s : symbols)
    if (!is_R(s)) out.push_back(s);
  return out;
}

bool has_duplicates(std::vector<Symbol> symbols) {
  std::sort(symbols.begin(), symbols.end());
  return std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end();
}

std::vector<Symbol> vertex_symbols(const std::vector<VertexId>& vs) {
  std::vector<Symbol> out;
  for (const auto& v : vs) out.push_back(vertex(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_R(const Symbol& s) {
  const auto* a = std::get_if<Aux>(&s);
  return a && a->kind == Aux::Kind::R;
}

std::string to_string(const Symbol& s) {
  struct Visitor {
    std::string operator()(const Aux& a) const {
      const std::string base = a.kind == Aux::Kind::R ? "R" : "r";
      return a.instance == 0 ? base : base + std::to_string(a.instance);
    }
    std::string operator()(const VertexSym& v) const { return bessel::to_string(v.id); }
    std::string operator()(const LeafSym& l) const { return l.label.str(); }
    std::string operator()(const RootSym& r) const { return "root[" + r.tree.str() + "]"; }
    std::string operator()(const EdgeSym& e) const {
      return std::string(e.lower ? "e-" : "e+") + bessel::to_string(e.upper.leaves);
    }
  };
  return std::visit(Visitor{}, s);
}

std::string to_string(const OrientationWord& w) {
  if (w.is_zero()) return "0";
  std::string out = w.sign > 0 ? "+" : "-";
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    if (i) out += '^';
    out += to_string(w.symbols[i]);
  }
  return out;
}

int permutation_sign(const std::vector<Symbol>& from, const std::vector<Symbol>& to) {
  if (from.size() != to.size()) throw DomainError("permutation_sign: length mismatch");
  std::vector<std::size_t> pos(from.size());
  std::vector<bool> used(to.size(), false);
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    if (it == to.end()) throw DomainError("permutation_sign: symbol " + to_string(from[i]) +
                                          " missing from target word");
    const auto p = static_cast<std::size_t>(it - to.begin());
    if (used[p]) throw DomainError("permutation_sign: repeated symbol");
    used[p] = true;
    pos[i] = p;
  }
  int sign = 1;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (pos[i] > pos[j]) sign = -sign;
  return sign;
}

OrientationWord normalize(const OrientationWord& w) {
  if (w.is_zero()) return {0, {}};
  OrientationWord out{w.sign, w.symbols};
  std::sort(out.symbols.begin(), out.symbols.end());
  if (std::adjacent_find(out.symbols.begin(), out.symbols.end()) != out.symbols.end())
    return {0, {}};
  out.sign *= permutation_sign(w.symbols, out.symbols);
  return out;
}

OrientationWord canonical_global(const Forest& f, int r_instance) {
  OrientationWord out{1, {R(r_instance)}};
  for (const auto& v : f.vertices()) out.symbols.push_back(vertex(v.id));
  return out;
}

OrientationWord collapse_disjoint(const OrientationWord& o1, const OrientationWord& o2) {
  if (o1.is_zero() || o2.is_zero()) return {0, {}};
  Symbol r1, r2;
  auto a = rename_R(o1.symbols, kLeftR, &r1);
  auto b = rename_R(o2.symbols, kRightR, &r2);
  std::vector<Symbol> word = a;
  word.push_back(splice());
  word.insert(word.end(), b.begin(), b.end());
  if (has_duplicates(word)) return {0, {}};

  auto rest = without_R(a);
  auto rest_b = without_R(b);
  rest.insert(rest.end(), rest_b.begin(), rest_b.end());
  std::sort(rest.begin(), rest.end());

  std::vector<Symbol> target{r1, splice(), r2};
  target.insert(target.end(), rest.begin(), rest.end());
  OrientationWord out{o1.sign * o2.sign * permutation_sign(word, target), {R()}};
  out.symbols.insert(out.symbols.end(), rest.begin(), rest.end());
  return out;
}

OrientationWord collapse_vee(const OrientationWord& o1, const OrientationWord& o2,
                             const VertexId& v) {
  if (o1.is_zero() || o2.is_zero()) return {0, {}};
  Symbol r1, r2;
  auto a = rename_R(o1.symbols, kLeftR, &r1);
  auto b = rename_R(o2.symbols, kRightR, &r2);
  std::vector<Symbol> word = a;
  word.insert(word.end(), b.begin(), b.end());
  if (has_duplicates(word)) return {0, {}};

  auto rest = without_R(a);
  auto rest_b = without_R(b);
  rest.insert(rest.end(), rest_b.begin(), rest_b.end());
  std::sort(rest.begin(), rest.end());
  if (std::binary_search(rest.begin(), rest.end(), vertex(v)))
    throw DomainError("collapse_vee: new vertex " + bessel::to_string(v) + " already present");

  std::vector<Symbol> target{r1, r2};
  target.insert(target.end(), rest.begin(), rest.end());
  const int parity = (o1.degree() % 2 == 0) ? 1 : -1;
  OrientationWord replaced{o1.sign * o2.sign * parity * permutation_sign(word, target),
                           {R(), vertex(v)}};
  replaced.symbols.insert(replaced.symbols.end(), rest.begin(), rest.end());
  return normalize(replaced);
}

SplitResult split(const OrientationWord& o, const std::vector<VertexId>& left_vertices,
                  const std::vector<VertexId>& right_vertices) {
  if (o.is_zero()) throw DomainError("split: zero orientation");
  auto all = without_R(o.symbols);
  auto parts = vertex_symbols(left_vertices);
  auto right_syms = vertex_symbols(right_vertices);
  parts.insert(parts.end(), right_syms.begin(), right_syms.end());
  std::sort(all.begin(), all.end());
  std::sort(parts.begin(), parts.end());
  if (all != parts || has_duplicates(parts))
    throw DomainError("split: the two vertex sets do not partition the orientation");
  if (o.symbols.size() != all.size() + 1)
    throw DomainError("split: orientation must contain exactly one R symbol");

  SplitResult out;
  out.left = {1, {R(1)}};
  for (const auto& s : vertex_symbols(left_vertices)) out.left.symbols.push_back(s);
  out.right = {1, {R(2)}};
  for (const auto& s : vertex_symbols(right_vertices)) out.right.symbols.push_back(s);

  const auto glued = collapse_disjoint(out.left, out.right);
  auto target = o;
  target.symbols = rename_R(o.symbols, 0, nullptr);
  const auto n = normalize(target);
  out.sign = n.sign * glued.sign;
  return out;
}

// ---------------------------------------------------------------------------

Symbol down_half_edge(const Forest& f, const VertexId& v) {
  const auto& info = f.vertex(v);
  if (info.is_bottom()) return RootSym{info.tree};
  return EdgeSym{v, false};
}

Symbol up_half_edge(const Branch& branch) {
  if (branch.is_leaf) return LeafSym{branch.leaf_label()};
  return EdgeSym{branch.vertex(), true};
}

std::array<Symbol, 3> reference_triple(const Forest& f, const VertexId& v) {
  const auto& info = f.vertex(v);
  return {down_half_edge(f, v), up_half_edge(info.up[0]), up_half_edge(info.up[1])};
}

int local_sign(const Forest& f, const LocalOrientation& lo) {
  const auto ref = reference_triple(f, lo.vertex);
  return lo.sign * permutation_sign({lo.triple.begin(), lo.triple.end()}, {ref.begin(), ref.end()});
}

InnerOrientation canonical_inner(const Forest& f) {
  InnerOrientation out{canonical_global(f), {}};
  for (const auto& v : f.vertices()) out.locals.push_back({v.id, reference_triple(f, v.id), 1});
  return out;
}

int canonical_sign(const Forest& f, const InnerOrientation& io) {
  if (io.global.is_zero()) throw DomainError("canonical_sign: zero global orientation");
  OrientationWord g{io.global.sign, rename_R(io.global.symbols, 0, nullptr)};
  const auto n = normalize(g);
  if (n.is_zero() || n.symbols != canonical_global(f).symbols)
    throw DomainError("global orientation does not span R and the inner vertices of " +
                      f.text());
  if (io.locals.size() != f.degree())
    throw DomainError("expected one local orientation per inner vertex");
  int sign = n.sign;
  std::vector<VertexId> seen;
  for (const auto& lo : io.locals) {
    seen.push_back(lo.vertex);
    sign *= local_sign(f, lo);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw DomainError("two local orientations at the same vertex");
  return sign;
}

OuterOrientation canonical_outer(const Forest& f) {
  OuterOrientation out{{1, {}}, {1, {}}};
  for (const auto& l : f.labels()) out.labels.symbols.push_back(LeafSym{l});
  for (const auto& t : f.trees()) out.roots.symbols.push_back(RootSym{t.min_label()});
  return out;
}

int canonical_sign(const Forest& f, const OuterOrientation& o) {
  const auto ref = canonical_outer(f);
  const auto a = normalize(o.labels);
  const auto b = normalize(o.roots);
  if (a.is_zero() || b.is_zero() || a.symbols != ref.labels.symbols ||
      b.symbols != ref.roots.symbols)
    throw DomainError("outer orientation does not span the labels and roots of " + f.text());
  return a.sign * b.sign;
}

int outer_to_inner_sign(const OuterOrientation& outer, const Forest& f) {
  canonical_sign(f, outer);  // validates the spans
  int sign = outer.sign();
  // R leads the word, so that a single leaf (the unit) converts to +R.  Writing
  // it between the two wedges instead costs (-1)^|I|.
  std::vector<Symbol> word{R()};
  word.insert(word.end(), outer.labels.symbols.begin(), outer.labels.symbols.end());
  word.insert(word.end(), outer.roots.symbols.begin(), outer.roots.symbols.end());

  // Cancel each leaf with its own root when the tree is a single leaf.
  for (const auto& t : f.trees()) {
    if (!t.is_leaf()) continue;
    const Symbol leaf = LeafSym{t.label()};
    const Symbol root = RootSym{t.label()};
    std::vector<Symbol> target{leaf, root};
    for (const auto& s : word)
      if (s != leaf && s != root) target.push_back(s);
    sign *= permutation_sign(word, target);
    word.assign(target.begin() + 2, target.end());
  }
  // Insert e+ ^ e- for every inner edge.
  for (const auto& v : f.vertices()) {
    if (v.is_bottom()) continue;
    word.insert(word.begin(), {EdgeSym{v.id, false}, EdgeSym{v.id, true}});
  }
  // Group half-edges into reference triples, vertex by vertex.
  std::vector<Symbol> target{R()};
  for (const auto& v : f.vertices()) {
    const auto ref = reference_triple(f, v.id);
    target.insert(target.end(), ref.begin(), ref.end());
  }
  sign *= permutation_sign(word, target);
  return sign;
}

InnerOrientation outer_to_inner(const OuterOrientation& outer, const Forest& f) {
  auto out = canonical_inner(f);
  out.global.sign = outer_to_inner_sign(outer, f);
  return out;
}

OuterOrientation inner_to_outer(const InnerOrientation& inner, const Forest& f) {
  auto out = canonical_outer(f);
  out.labels.sign = canonical_sign(f, inner) * outer_to_inner_sign(out, f);
  return out;
}

std::vector<LocalOrientation> transport_locals(const Forest& f, const Forest& image,
                                               const VertexMap& phi,
                                               const std::vector<LocalOrientation>& locals) {
  std::vector<LocalOrientation> out;
  for (const auto& vi : image.vertices()) {
    auto target = phi.find(vi.id);
    if (target == phi.end())
      throw DomainError("transport: vertex " + bessel::to_string(vi.id) + " is not identified");
    const auto& v = target->second;
    const auto& vf = f.vertex(v);
    auto lo = std::find_if(locals.begin(), locals.end(),
                           [&](const LocalOrientation& l) { return l.vertex == v; });
    if (lo == locals.end())
      throw DomainError("transport: no local orientation at " + bessel::to_string(v));

    // Which branch of v holds each branch of the image vertex.
    std::array<int, 2> slot{-1, -1};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (is_subset(vi.up[i].leaves, vf.up[j].leaves)) {
          if (slot[i] != -1) throw DomainError("transport: ambiguous branch");
          slot[i] = j;
        }
      }
      if (slot[i] == -1)
        throw DomainError("transport: branch " + bessel::to_string(vi.up[i].leaves) + " of " +
                          bessel::to_string(vi.id) + " is not inside a branch of " +
                          bessel::to_string(v));
    }
    if (slot[0] == slot[1])
      throw DomainError("transport: both branches of " + bessel::to_string(vi.id) +
                        " map into one branch of " + bessel::to_string(v));

    auto map_symbol = [&](const Symbol& s) -> Symbol {
      if (s == down_half_edge(f, v)) return down_half_edge(image, vi.id);
      for (int j = 0; j < 2; ++j)
        if (s == up_half_edge(vf.up[j])) return up_half_edge(vi.up[slot[0] == j ? 0 : 1]);
      throw DomainError("transport: " + to_string(s) + " is not a half-edge at " +
                        bessel::to_string(v));
    };
    out.push_back({vi.id,
                   {map_symbol(lo->triple[0]), map_symbol(lo->triple[1]), map_symbol(lo->triple[2])},
                   lo->sign});
  }
  return out;
}

int restriction_sign(const Forest& f, const Forest& image, const VertexMap& phi) {
  if (phi.size() != image.degree())
    throw DomainError("restriction_sign: identification must cover every image vertex");
  std::map<VertexId, VertexId> inverse;
  for (const auto& [a, b] : phi) {
    if (!f.has_vertex(b)) throw DomainError("restriction_sign: unknown vertex " + bessel::to_string(b));
    if (!inverse.emplace(b, a).second)
      throw DomainError("restriction_sign: identification is not injective");
  }
  // inverse is keyed in f's vertex order.
  std::vector<Symbol> word{R()};
  for (const auto& [b, a] : inverse) word.push_back(vertex(a));
  int sign = permutation_sign(word, canonical_global(image).symbols);
  for (const auto& lo : transport_locals(f, image, phi, canonical_inner(f).locals))
    sign *= local_sign(image, lo);
  return sign;
}

}  // namespace bessel::orient
