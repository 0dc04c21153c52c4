#include "bessel/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "bessel/boperad.hpp"
#include "bessel/dual.hpp"
#include "bessel/hopf.hpp"
#include "bessel/operad.hpp"
#include "bessel/orient.hpp"
#include "bessel/poset.hpp"

namespace bessel::verify {

namespace {

class Check {
 public:
  explicit Check(CheckResult& r) : r_(r) {}

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.counterexample = describe();
    }
  }

 private:
  CheckResult& r_;
};

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void run(const std::string& check, const std::function<void(Check&)>& body) {
    report_.push_back({name_, check, 0, true, {}});
    Check c(report_.back());
    try {
      body(c);
    } catch (const std::exception& e) {
      report_.back().passed = false;
      report_.back().counterexample = std::string("exception: ") + e.what();
    }
  }

  Report take() { return std::move(report_); }

 private:
  std::string name_;
  Report report_;
};

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// Fisher-Yates with pick(), so seeded runs agree across standard libraries.
template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[pick(rng, i)]);
}

LabelSet prefixed(const std::string& prefix, std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(prefix + std::to_string(i));
  return make_label_set(std::move(out));
}

const std::vector<Forest>& forests_on(const LabelSet& labels) {
  static std::map<LabelSet, std::vector<Forest>> cache;
  auto it = cache.find(labels);
  if (it == cache.end()) it = cache.emplace(labels, enumerate_forests(labels)).first;
  return it->second;
}

Forest random_forest(const LabelSet& labels, Rng& rng) {
  const auto& all = forests_on(labels);
  return all[pick(rng, all.size())];
}

// One to three basis forests with small nonzero integer coefficients.
Element random_element(const LabelSet& labels, Rng& rng) {
  Element x(labels);
  const std::size_t terms = 1 + pick(rng, 3);
  for (std::size_t t = 0; t < terms; ++t) {
    const long c = static_cast<long>(pick(rng, 4)) - 2;
    x.add(random_forest(labels, rng), c >= 0 ? c + 1 : c);
  }
  return x;
}

DualElement random_dual(const LabelSet& labels, Rng& rng) {
  DualElement x(labels);
  const std::size_t terms = 1 + pick(rng, 3);
  for (std::size_t t = 0; t < terms; ++t) {
    const long c = static_cast<long>(pick(rng, 4)) - 2;
    x.add(random_forest(labels, rng), c >= 0 ? c + 1 : c);
  }
  return x;
}

std::vector<VertexId> subset(const std::vector<VertexId>& vs, std::size_t mask) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (mask >> i & 1) out.push_back(vs[i]);
  return out;
}

std::string show(const Element& x) { return to_string(x); }

// Ordered tuples of distinct labels.
void for_each_tuple(const LabelSet& labels, std::size_t k,
                    const std::function<void(const std::vector<Label>&)>& fn) {
  std::vector<Label> cur;
  std::vector<bool> used(labels.size(), false);
  std::function<void()> rec = [&]() {
    if (cur.size() == k) {
      fn(cur);
      return;
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(labels[i]);
      rec();
      cur.pop_back();
      used[i] = false;
    }
  };
  rec();
}

std::string join(const std::vector<Label>& ls) {
  std::string out;
  for (const auto& l : ls) out += (out.empty() ? "" : ",") + l.str();
  return out;
}

const Label kStar("*");
const Label kHash("#");

Integer double_factorial(long n) {
  Integer out = 1;
  for (long k = n; k > 1; k -= 2) out *= k;
  return out;
}

int wedge_sign(const std::vector<Label>& word) {
  std::vector<orient::Symbol> from, to;
  for (const auto& l : word) from.push_back(orient::LeafSym{l});
  to = from;
  std::sort(to.begin(), to.end());
  return orient::permutation_sign(from, to);
}

std::vector<Label> concat(const LabelSet& a, const LabelSet& b) {
  std::vector<Label> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Report counting(const Options& opt) {
  Suite s("counting");
  const std::size_t top = opt.max_size + 2;
  s.run("enumeration matches the recurrence", [&](Check& c) {
    for (std::size_t n = 1; n <= top; ++n) {
      const auto all = enumerate_forests(numbered_labels(n));
      c.expect(Integer(static_cast<unsigned long>(all.size())) == count_forests(n),
               [&] { return "n=" + std::to_string(n); });
    }
  });
  s.run("degree counts sum to the total", [&](Check& c) {
    for (std::size_t n = 1; n <= top; ++n) {
      const auto by = count_by_degree(n);
      Integer sum = std::accumulate(by.begin(), by.end(), Integer(0));
      c.expect(sum == count_forests(n), [&] { return "n=" + std::to_string(n); });
      for (std::size_t k = 0; k < n; ++k)
        c.expect(Integer(static_cast<unsigned long>(
                     enumerate_forests(numbered_labels(n), k).size())) == by[k],
                 [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  });
  s.run("tree counts are (2n-3)!!", [&](Check& c) {
    for (std::size_t n = 2; n <= top; ++n) {
      const auto trees = enumerate_trees(numbered_labels(n));
      c.expect(count_trees(n) == double_factorial(2 * static_cast<long>(n) - 3) &&
                   Integer(static_cast<unsigned long>(trees.size())) == count_trees(n),
               [&] { return "n=" + std::to_string(n); });
    }
  });
  s.run("vertices plus trees equals labels", [&](Check& c) {
    for (std::size_t n = 1; n <= top; ++n)
      for (const auto& f : forests_on(numbered_labels(n)))
        c.expect(f.degree() + f.tree_count() == n, [&] { return f.text(); });
  });
  return s.take();
}

// ---------------------------------------------------------------------------

Report orient(const Options& opt) {
  Suite s("orient");
  const std::size_t top = opt.max_size + 1;
  Rng rng(opt.seed);
  s.run("outer and inner conversions are inverse", [&](Check& c) {
    for (std::size_t n = 1; n <= top; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) {
        const auto inner = orient::canonical_inner(f);
        const auto outer = orient::inner_to_outer(inner, f);
        const auto back = orient::outer_to_inner(outer, f);
        c.expect(orient::canonical_sign(f, back) == 1, [&] { return f.text(); });
        // A shuffled outer orientation keeps its sign through the round trip.
        auto shuffled = orient::canonical_outer(f);
        shuffle(shuffled.labels.symbols, rng);
        shuffle(shuffled.roots.symbols, rng);
        const int sign = orient::canonical_sign(f, shuffled);
        const auto again = orient::inner_to_outer(orient::outer_to_inner(shuffled, f), f);
        c.expect(orient::canonical_sign(f, again) == sign, [&] { return f.text() + " shuffled"; });
      }
  });
  s.run("parse and format are inverse", [&](Check& c) {
    for (std::size_t n = 1; n <= top; ++n)
      for (const auto& f : forests_on(numbered_labels(n)))
        c.expect(parse_forest(f.text()) == f && parse_forest(f.text()).text() == f.text(),
                 [&] { return f.text(); });
  });
  s.run("generator anchors", [&](Check& c) {
    const Label i("i"), j("j");
    // E = (j ^ i) ⊗ (r_i ^ r_j) is +R on two single leaves.
    const Forest e({Tree::leaf(i), Tree::leaf(j)});
    orient::OuterOrientation oe{{1, {orient::LeafSym{j}, orient::LeafSym{i}}},
                                {1, {orient::RootSym{i}, orient::RootSym{j}}}};
    c.expect(orient::outer_to_inner_sign(oe, e) == 1, [] { return std::string("E_{i,j}"); });
    // Omega = (i ^ j) ⊗ root is +R ^ v with local orientation (root, e_i, e_j).
    const Forest w({Tree::graft(Tree::leaf(i), Tree::leaf(j))});
    orient::OuterOrientation ow{{1, {orient::LeafSym{i}, orient::LeafSym{j}}},
                                {1, {orient::RootSym{i}}}};
    const VertexId v{w.labels()};
    const orient::LocalOrientation lo{
        v, {orient::RootSym{i}, orient::LeafSym{i}, orient::LeafSym{j}}, 1};
    c.expect(orient::outer_to_inner_sign(ow, w) == 1 && orient::local_sign(w, lo) == 1,
             [] { return std::string("Omega_{i,j}"); });
    const Forest single({Tree::leaf(i)});
    c.expect(orient::outer_to_inner_sign(orient::canonical_outer(single), single) == 1,
             [] { return std::string("single leaf"); });
  });
  s.run("split then collapse reproduces the word", [&](Check& c) {
    for (std::size_t n = 1; n <= top; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) {
        if (f.degree() > 4) continue;
        const auto vs = inner_vertices(f);
        auto o = orient::canonical_global(f);
        shuffle(o.symbols, rng);
        const auto norm = orient::normalize(o);
        for (std::size_t m = 0; m < (std::size_t{1} << vs.size()); ++m) {
          std::vector<VertexId> a, b;
          for (std::size_t i = 0; i < vs.size(); ++i) (m >> i & 1 ? a : b).push_back(vs[i]);
          const auto sp = orient::split(o, a, b);
          auto left = sp.left;
          left.sign *= sp.sign;
          c.expect(orient::collapse_disjoint(left, sp.right) == norm,
                   [&] { return f.text() + " mask " + std::to_string(m); });
        }
      }
  });
  s.run("restriction along the identity is trivial", [&](Check& c) {
    for (std::size_t n = 1; n <= top; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) {
        VertexMap id;
        for (const auto& v : inner_vertices(f)) id.emplace(v, v);
        c.expect(orient::restriction_sign(f, f, id) == 1, [&] { return f.text(); });
      }
  });
  return s.take();
}

// ---------------------------------------------------------------------------

Report operad(const Options& opt) {
  Suite s("operad");
  Rng rng(opt.seed);
  const std::size_t small = std::min<std::size_t>(3, opt.max_size);

  s.run("generator symmetries", [&](Check& c) {
    const Label i("1"), j("2");
    c.expect(operad::gen_E(i, j) == operad::gen_E(j, i), [] { return std::string("E"); });
    c.expect(operad::gen_Omega(i, j) == -operad::gen_Omega(j, i), [] { return std::string("Omega"); });
    const std::map<Label, Label> swap{{i, j}, {j, i}};
    c.expect(operad::relabel(swap, operad::gen_E(i, j)) == operad::gen_E(i, j),
             [] { return std::string("relabel E"); });
    c.expect(operad::relabel(swap, operad::gen_Omega(i, j)) == -operad::gen_Omega(i, j),
             [] { return std::string("relabel Omega"); });
  });

  s.run("decompositions agree", [&](Check& c) {
    const std::vector<Element> ys{operad::gen_E(Label("y1"), Label("y2")),
                                 operad::gen_Omega(Label("y1"), Label("y2"))};
    for (std::size_t n = 1; n <= opt.max_size; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) {
        if (f.degree() > 3) continue;
        const auto ds = operad::all_decompositions(f);
        for (const auto& slot : f.labels())
          for (const auto& y : ys) {
            const Element ref = operad::compose(Element::basis(f), slot, y);
            for (const auto& d : ds)
              c.expect(Rational(d.sign) * operad::substitute(d.word, slot, y) == ref,
                       [&] { return f.text() + " via " + d.word.text() + " at " + slot.str(); });
          }
      }
  });

  s.run("unit laws", [&](Check& c) {
    for (std::size_t n = 1; n <= small; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) {
        const Element x = Element::basis(f);
        for (const auto& l : f.labels())
          c.expect(operad::compose(x, l, operad::identity(l)) == x, [&] { return f.text() + " right"; });
        const Label u("u");
        c.expect(operad::compose(operad::identity(u), u, x) == x, [&] { return f.text() + " left"; });
      }
  });

  auto sequential = [&](Check& c, const Element& x, const Label& s1, const Element& y,
                        const Label& t, const Element& z) {
    const Element lhs = operad::compose(operad::compose(x, s1, y), t, z);
    const Element rhs = operad::compose(x, s1, operad::compose(y, t, z));
    c.expect(lhs == rhs, [&] {
      return "x=" + show(x) + " s=" + s1.str() + " y=" + show(y) + " t=" + t.str() + " z=" + show(z);
    });
  };
  s.run("sequential associativity", [&](Check& c) {
    for (std::size_t a = 1; a <= small; ++a)
      for (std::size_t b = 1; b <= small; ++b)
        for (std::size_t k = 1; k <= small; ++k) {
          const LabelSet I = prefixed("a", a), J = prefixed("b", b), K = prefixed("c", k);
          for (const auto& fx : forests_on(I))
            for (const auto& fy : forests_on(J))
              for (const auto& fz : forests_on(K))
                sequential(c, Element::basis(fx), I.back(), Element::basis(fy), J.front(),
                           Element::basis(fz));
        }
    for (std::size_t r = 0; r < opt.samples; ++r) {
      const LabelSet I = prefixed("a", 4), J = prefixed("b", 1 + pick(rng, 4)),
                     K = prefixed("c", 1 + pick(rng, 4));
      sequential(c, random_element(I, rng), I[pick(rng, I.size())], random_element(J, rng),
                 J[pick(rng, J.size())], random_element(K, rng));
    }
  });

  auto parallel = [&](Check& c, const Element& x, const Label& s1, const Element& y,
                      const Label& t, const Element& z) {
    const Element lhs = operad::compose(operad::compose(x, s1, y), t, z);
    Element rhs(lhs.labels());
    for (std::size_t dy = 0; dy < y.labels().size(); ++dy)
      for (std::size_t dz = 0; dz < z.labels().size(); ++dz)
        rhs += Rational(koszul(dy, dz)) *
               operad::compose(operad::compose(x, t, z.degree_part(dz)), s1, y.degree_part(dy));
    c.expect(lhs == rhs, [&] {
      return "x=" + show(x) + " s=" + s1.str() + " y=" + show(y) + " t=" + t.str() + " z=" + show(z);
    });
  };
  s.run("parallel composition", [&](Check& c) {
    for (std::size_t a = 2; a <= small; ++a)
      for (std::size_t b = 1; b <= small; ++b)
        for (std::size_t k = 1; k <= small; ++k) {
          const LabelSet I = prefixed("a", a), J = prefixed("b", b), K = prefixed("c", k);
          for (const auto& fx : forests_on(I))
            for (const auto& fy : forests_on(J))
              for (const auto& fz : forests_on(K))
                parallel(c, Element::basis(fx), I.front(), Element::basis(fy), I.back(),
                         Element::basis(fz));
        }
    for (std::size_t r = 0; r < opt.samples; ++r) {
      const LabelSet I = prefixed("a", 4), J = prefixed("b", 1 + pick(rng, 3)),
                     K = prefixed("c", 1 + pick(rng, 3));
      const std::size_t p = pick(rng, 4);
      const std::size_t q = (p + 1 + pick(rng, 3)) % 4;
      parallel(c, random_element(I, rng), I[p], random_element(J, rng), I[q],
               random_element(K, rng));
    }
  });

  s.run("equivariance", [&](Check& c) {
    for (std::size_t r = 0; r < opt.samples; ++r) {
      const LabelSet I = prefixed("a", 1 + pick(rng, 3)), J = prefixed("b", 1 + pick(rng, 3));
      const Element x = random_element(I, rng), y = random_element(J, rng);
      const Label slot = I[pick(rng, I.size())];
      const LabelSet all = set_union(I, J);
      std::vector<Label> image(all);
      shuffle(image, rng);
      std::map<Label, Label> sigma, sx, sy, sxy;
      for (std::size_t i = 0; i < all.size(); ++i) sigma.emplace(all[i], image[i]);
      for (const auto& l : I) sx.emplace(l, sigma.at(l));
      for (const auto& l : J) sy.emplace(l, sigma.at(l));
      for (const auto& l : set_union(set_difference(I, {slot}), J)) sxy.emplace(l, sigma.at(l));
      const Element lhs = operad::relabel(sxy, operad::compose(x, slot, y));
      const Element rhs =
          operad::compose(operad::relabel(sx, x), sigma.at(slot), operad::relabel(sy, y));
      c.expect(lhs == rhs, [&] { return "x=" + show(x) + " s=" + slot.str() + " y=" + show(y); });
    }
  });

  s.run("graded (anti)symmetry of the actions", [&](Check& c) {
    for (std::size_t a = 1; a <= small; ++a)
      for (std::size_t b = 1; b <= small; ++b) {
        const LabelSet I = prefixed("a", a), J = prefixed("b", b);
        for (const auto& fx : forests_on(I))
          for (const auto& fy : forests_on(J)) {
            const Element x = Element::basis(fx), y = Element::basis(fy);
            const int k = koszul(fx.degree(), fy.degree());
            c.expect((operad::act_Omega(x, y) + Rational(k) * operad::act_Omega(y, x)).is_zero(),
                     [&] { return "Omega " + fx.text() + " " + fy.text(); });
            c.expect(operad::act_E(x, y) == Rational(k) * operad::act_E(y, x),
                     [&] { return "E " + fx.text() + " " + fy.text(); });
          }
      }
  });

  s.run("B actions agree with Bess through the suspension", [&](Check& c) {
    for (std::size_t a = 1; a <= small; ++a)
      for (std::size_t b = 1; b <= small; ++b) {
        const LabelSet I = prefixed("a", a), J = prefixed("b", b);
        const int perm = wedge_sign(concat(I, J));
        for (const auto& fx : forests_on(I))
          for (const auto& fy : forests_on(J)) {
            const boperad::BElement x = boperad::BElement::basis(fx);
            const boperad::BElement y = boperad::BElement::basis(fy);
            const std::size_t dx = boperad::degree(fx);
            // (alpha ⊗ beta) o (d_I ⊗ x) o (d_J ⊗ y) with E = (# ^ *) ⊗ e and
            // Omega = (* ^ #) ⊗ omega.
            const int se = koszul(1, a - 1) * koszul(1, b - 1) * koszul(dx, b - 1) *
                           koszul(a, 1) * perm;
            c.expect(operad::act_E(boperad::suspend(x), boperad::suspend(y)) ==
                         Rational(se) * boperad::suspend(boperad::b_act_e(x, y)),
                     [&] { return "e " + fx.text() + " " + fy.text(); });
            const auto via_e = boperad::compose(
                boperad::compose(boperad::gen_e(kStar, kHash), kStar, x), kHash, y);
            c.expect(via_e == boperad::b_act_e(x, y),
                     [&] { return "e composite " + fx.text() + " " + fy.text(); });
            if (fx.tree_count() == 1 && fy.tree_count() == 1) {
              // * ^ # reorders to # ^ * before I is placed, then # moves past I.
              const int so = koszul(1, a - 1) * koszul(dx, b - 1) * perm;
              c.expect(operad::act_Omega(boperad::suspend(x), boperad::suspend(y)) ==
                           Rational(so) * boperad::suspend(boperad::b_act_omega(x, y)),
                       [&] { return "omega " + fx.text() + " " + fy.text(); });
              const auto via_o = boperad::compose(
                  boperad::compose(boperad::gen_omega(kStar, kHash), kStar, x), kHash, y);
              c.expect(via_o == boperad::b_act_omega(x, y),
                       [&] { return "omega composite " + fx.text() + " " + fy.text(); });
            }
          }
      }
  });

  s.run("dimensions", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n)
      for (std::size_t k = 0; k < n; ++k)
        c.expect(operad::dimension(numbered_labels(n), k) ==
                     Integer(static_cast<unsigned long>(
                         enumerate_forests(numbered_labels(n), k).size())),
                 [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
  });
  return s.take();
}

// ---------------------------------------------------------------------------

Report relations(const Options& opt) {
  Suite s("relations");
  const std::size_t top = opt.max_size + 1;
  using namespace operad;

  s.run("E cyclic relation", [&](Check& c) {
    for (std::size_t n = 3; n <= opt.max_size; ++n)
      for_each_tuple(numbered_labels(n), 3, [&](const std::vector<Label>& t) {
        const auto lhs = compose(gen_E(t[0], kStar), kStar, gen_E(t[1], t[2]));
        const auto rhs = compose(gen_E(t[2], kStar), kStar, gen_E(t[0], t[1]));
        c.expect(lhs == rhs, [&] { return join(t); });
      });
  });
  s.run("Omega over E relation", [&](Check& c) {
    for (std::size_t n = 3; n <= opt.max_size; ++n)
      for_each_tuple(numbered_labels(n), 3, [&](const std::vector<Label>& t) {
        const auto lhs = compose(gen_Omega(t[0], kStar), kStar, gen_E(t[1], t[2]));
        const auto rhs = compose(gen_E(t[1], kStar), kStar, gen_Omega(t[0], t[2])) +
                         compose(gen_E(t[2], kStar), kStar, gen_Omega(t[0], t[1]));
        c.expect(lhs == rhs, [&] { return join(t); });
      });
  });
  s.run("Det relation in B", [&](Check& c) {
    for (std::size_t n = 3; n <= opt.max_size; ++n)
      for_each_tuple(numbered_labels(n), 3, [&](const std::vector<Label>& t) {
        const auto lhs = boperad::compose(boperad::gen_e(t[0], kStar), kStar, boperad::gen_e(t[1], t[2]));
        const auto rhs = boperad::compose(boperad::gen_e(t[2], kStar), kStar, boperad::gen_e(t[0], t[1]));
        c.expect(lhs == rhs, [&] { return join(t); });
      });
  });
  s.run("distributive law in B", [&](Check& c) {
    for (std::size_t n = 3; n <= opt.max_size; ++n)
      for_each_tuple(numbered_labels(n), 3, [&](const std::vector<Label>& t) {
        using boperad::gen_e, boperad::gen_omega;
        const auto lhs = boperad::compose(gen_omega(t[0], kStar), kStar, gen_e(t[1], t[2]));
        const auto rhs = boperad::compose(gen_e(t[1], kStar), kStar, gen_omega(t[0], t[2])) -
                         boperad::compose(gen_e(t[2], kStar), kStar, gen_omega(t[0], t[1]));
        c.expect(lhs == rhs, [&] { return join(t); });
      });
  });
  s.run("triangle relation", [&](Check& c) {
    for (std::size_t n = 3; n <= top; ++n)
      for_each_tuple(numbered_labels(n), 3, [&](const std::vector<Label>& t) {
        c.expect(dual::verify_triangle(numbered_labels(n), t[0], t[1], t[2]),
                 [&] { return "n=" + std::to_string(n) + " " + join(t); });
      });
  });
  s.run("path products are reversal invariant", [&](Check& c) {
    for (std::size_t n = 4; n <= top; ++n)
      for_each_tuple(numbered_labels(n), 4, [&](const std::vector<Label>& t) {
        if (!(t.front() < t.back())) return;
        const std::vector<Label> r(t.rbegin(), t.rend());
        c.expect(dual::path_product(numbered_labels(n), t) == dual::path_product(numbered_labels(n), r),
                 [&] { return "n=" + std::to_string(n) + " " + join(t); });
      });
  });
  s.run("twelve-term relation", [&](Check& c) {
    for (std::size_t n = 4; n <= top; ++n) {
      const LabelSet I = numbered_labels(n);
      for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        if (std::popcount(m) != 4) continue;
        std::vector<Label> q;
        for (std::size_t i = 0; i < n; ++i)
          if (m >> i & 1) q.push_back(I[i]);
        c.expect(dual::verify_12term(I, q[0], q[1], q[2], q[3]),
                 [&] { return "n=" + std::to_string(n) + " " + join(q); });
      }
    }
  });
  s.run("five-term expansion and its symmetries", [&](Check& c) {
    for (std::size_t n = 4; n <= opt.max_size; ++n)
      for_each_tuple(numbered_labels(n), 4, [&](const std::vector<Label>& t) {
        const auto r = dual::degree3_shape_analysis(numbered_labels(n), t[0], t[1], t[2], t[3]);
        c.expect(r.terms.size() == 5 && r.caterpillars == 4 && r.balanced == 1 &&
                     r.expansion_consistent && r.lll_antisymmetric && r.yyy_antisymmetric &&
                     r.yyy_symmetric,
                 [&] { return "n=" + std::to_string(n) + " " + join(t); });
      });
  });
  return s.take();
}

// ---------------------------------------------------------------------------

Report hopf(const Options& opt) {
  Suite s("hopf");
  Rng rng(opt.seed);
  const LabelSet big = numbered_labels(opt.max_size + 1);

  auto for_cases = [&](Check& c, const std::function<void(Check&, const Element&)>& fn) {
    for (std::size_t n = 1; n <= opt.max_size; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) fn(c, Element::basis(f));
    for (std::size_t r = 0; r < opt.samples; ++r) fn(c, random_element(big, rng));
  };

  s.run("explicit coproduct equals the generator recursion", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) {
        const Element x = Element::basis(f);
        c.expect(hopf::coproduct(x) == hopf::coproduct_via_generators(x), [&] { return f.text(); });
      }
  });
  s.run("generator coproducts", [&](Check& c) {
    const Label i("1"), j("2");
    const Element e = operad::gen_E(i, j), w = operad::gen_Omega(i, j);
    c.expect(hopf::coproduct(e) == hopf::tensor(e, e), [] { return std::string("E"); });
    c.expect(hopf::coproduct(w) == hopf::tensor(e, w) + hopf::tensor(w, e),
             [] { return std::string("Omega"); });
  });
  s.run("coassociativity", [&](Check& c) {
    for_cases(c, [](Check& c, const Element& x) {
      const auto d = hopf::coproduct(x);
      c.expect(hopf::coproduct_left(d) == hopf::coproduct_right(d), [&] { return show(x); });
    });
  });
  s.run("cocommutativity", [&](Check& c) {
    for_cases(c, [](Check& c, const Element& x) {
      const auto d = hopf::coproduct(x);
      c.expect(hopf::swap(d) == d, [&] { return show(x); });
    });
  });
  s.run("counit laws", [&](Check& c) {
    for_cases(c, [](Check& c, const Element& x) {
      const auto d = hopf::coproduct(x);
      c.expect(hopf::counit_left(d) == x && hopf::counit_right(d) == x, [&] { return show(x); });
    });
  });
  s.run("degree-0 forest is grouplike", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size + 1; ++n) {
      const Element a = hopf::augmentation(numbered_labels(n));
      c.expect(hopf::coproduct(a) == hopf::tensor(a, a) && hopf::counit(a) == 1,
               [&] { return "n=" + std::to_string(n); });
    }
  });
  s.run("degrees add up", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n)
      for (const auto& f : forests_on(numbered_labels(n)))
        for (const auto& [k, v] : hopf::coproduct(f).terms())
          c.expect(k[0].degree() + k[1].degree() == f.degree(),
                   [&] { return f.text() + " -> " + k[0].text() + " x " + k[1].text(); });
  });
  s.run("coproduct is an operad morphism", [&](Check& c) {
    for (std::size_t r = 0; r < opt.samples; ++r) {
      const LabelSet I = prefixed("a", 1 + pick(rng, 3)), J = prefixed("b", 1 + pick(rng, 3));
      const Element x = random_element(I, rng), y = random_element(J, rng);
      const Label slot = I[pick(rng, I.size())];
      const auto lhs = hopf::coproduct(operad::compose(x, slot, y));
      const auto rhs = hopf::compose(hopf::coproduct(x), slot, hopf::coproduct(y));
      c.expect(lhs == rhs, [&] { return "x=" + show(x) + " s=" + slot.str() + " y=" + show(y); });
    }
  });
  return s.take();
}

// ---------------------------------------------------------------------------

Report gamma(const Options& opt) {
  Suite s("gamma");
  Rng rng(opt.seed);

  auto compare = [](Check& c, const Forest& f, const std::vector<VertexId>& v) {
    const auto g = poset::gamma(f, v);
    c.expect(g == poset::gamma_oracle(f, v), [&] {
      std::string out = f.text() + " V={";
      for (const auto& id : v) out += to_string(id);
      return out + "}";
    });
    // No two images share a forest.
    for (std::size_t i = 1; i < g.size(); ++i)
      c.expect(g[i - 1].forest != g[i].forest, [&] { return f.text() + " repeated image"; });
  };
  s.run("gamma equals the topological-map oracle", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) {
        const auto vs = inner_vertices(f);
        for (std::size_t m = 0; m < (std::size_t{1} << vs.size()); ++m) compare(c, f, subset(vs, m));
      }
    const LabelSet big = numbered_labels(opt.max_size + 1);
    for (std::size_t r = 0; r < opt.samples; ++r) {
      const Forest f = random_forest(big, rng);
      const auto vs = inner_vertices(f);
      compare(c, f, subset(vs, pick(rng, std::size_t{1} << vs.size())));
    }
  });
  s.run("extreme subsets", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) {
        const auto full = poset::gamma(f, inner_vertices(f));
        const auto empty = poset::gamma(f, {});
        c.expect(full.size() == 1 && full[0].forest == f, [&] { return f.text() + " full"; });
        c.expect(empty.size() == 1 && empty[0].forest == Forest::minimum(f.labels()),
                 [&] { return f.text() + " empty"; });
      }
  });
  s.run("order axioms", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n) {
      const auto& all = forests_on(numbered_labels(n));
      const std::size_t m = all.size();
      std::vector<std::vector<bool>> le(m, std::vector<bool>(m));
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) le[a][b] = poset::leq(all[a], all[b]);
      for (std::size_t a = 0; a < m; ++a) {
        c.expect(le[a][a], [&] { return all[a].text() + " not reflexive"; });
        for (std::size_t b = 0; b < m; ++b) {
          if (a != b)
            c.expect(!(le[a][b] && le[b][a]),
                     [&] { return all[a].text() + " and " + all[b].text(); });
          if (!le[a][b]) continue;
          c.expect(all[a].degree() <= all[b].degree(), [&] { return all[a].text() + " rank"; });
          for (std::size_t k = 0; k < m; ++k)
            if (le[b][k])
              c.expect(le[a][k], [&] {
                return all[a].text() + " <= " + all[b].text() + " <= " + all[k].text();
              });
        }
      }
    }
  });
  s.run("comb intervals have Bell cardinality", [&](Check& c) {
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203};
    for (std::size_t n = 1; n <= opt.max_size && n < bell.size(); ++n) {
      const LabelSet I = numbered_labels(n);
      c.expect(poset::interval(Forest::minimum(I), Forest({comb_tree(I)})).size() == bell[n],
               [&] { return "n=" + std::to_string(n); });
    }
  });
  s.run("maximal elements are the trees", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n) {
      const auto max = poset::maximal_elements(numbered_labels(n));
      std::vector<Forest> trees;
      for (const auto& t : enumerate_trees(numbered_labels(n))) trees.push_back(Forest({t}));
      std::sort(trees.begin(), trees.end());
      c.expect(max == trees, [&] { return "n=" + std::to_string(n); });
    }
  });
  s.run("cover edges raise rank by one", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n)
      for (const auto& e : poset::hasse(numbered_labels(n)))
        c.expect(e.upper.degree() == e.lower.degree() + 1,
                 [&] { return e.lower.text() + " -> " + e.upper.text(); });
  });
  return s.take();
}

// ---------------------------------------------------------------------------

Report dual(const Options& opt) {
  Suite s("dual");
  Rng rng(opt.seed);

  s.run("pairing with the dual basis", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n) {
      const auto& all = forests_on(numbered_labels(n));
      for (const auto& f : all)
        for (const auto& g : all)
          c.expect(dual::pairing(Element::basis(f), dual::basis(g)) == (f == g ? 1 : 0),
                   [&] { return f.text() + " " + g.text(); });
    }
  });
  s.run("product equals the dual of the coproduct", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n) {
      const auto& all = forests_on(numbered_labels(n));
      for (const auto& f : all)
        for (const auto& g : all) {
          const auto a = dual::basis(f), b = dual::basis(g);
          c.expect(dual::product(a, b) == dual::product_via_duality(a, b),
                   [&] { return f.text() + " x " + g.text(); });
        }
    }
  });
  s.run("unit", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n)
      for (const auto& f : forests_on(numbered_labels(n))) {
        const auto u = dual::unit(f.labels()), d = dual::basis(f);
        c.expect(dual::product(u, d) == d && dual::product(d, u) == d, [&] { return f.text(); });
      }
  });
  s.run("graded commutativity and support", [&](Check& c) {
    for (std::size_t n = 1; n <= opt.max_size; ++n) {
      const auto& all = forests_on(numbered_labels(n));
      for (const auto& f : all)
        for (const auto& g : all) {
          const auto p = dual::product(dual::basis(f), dual::basis(g));
          const auto q = dual::product(dual::basis(g), dual::basis(f));
          c.expect(p == Rational(koszul(f.degree(), g.degree())) * q,
                   [&] { return f.text() + " x " + g.text(); });
          const LabelSet s = set_union(support(f), support(g));
          for (const auto& [h, v] : p.terms())
            c.expect(support(h) == s, [&] { return f.text() + " x " + g.text() + " -> " + h.text(); });
          if (are_disjoint(support(f), support(g)))
            c.expect(p.size() <= 1, [&] { return f.text() + " x " + g.text() + " disjoint"; });
        }
    }
  });
  s.run("associativity", [&](Check& c) {
    for (std::size_t r = 0; r < opt.samples; ++r) {
      const LabelSet I = numbered_labels(1 + pick(rng, opt.max_size));
      const auto a = random_dual(I, rng), b = random_dual(I, rng), d = random_dual(I, rng);
      c.expect(dual::product(dual::product(a, b), d) == dual::product(a, dual::product(b, d)),
               [&] { return to_string(a) + " | " + to_string(b) + " | " + to_string(d); });
    }
  });
  s.run("path grafting matches the product", [&](Check& c) {
    for (std::size_t n = 2; n <= opt.max_size; ++n) {
      const LabelSet I = numbered_labels(n);
      for (const auto& f : forests_on(I))
        for (const auto& i : I)
          for (const auto& j : I) {
            if (i == j || contains(support(f), j)) continue;
            c.expect(dual::product_with_Y(f, i, j) == dual::product(dual::basis(f), dual::Y(I, i, j)),
                     [&] { return f.text() + " x Y(" + i.str() + "," + j.str() + ")"; });
          }
    }
  });
  s.run("odd squares vanish", [&](Check& c) {
    for (std::size_t n = 2; n <= opt.max_size; ++n) {
      const LabelSet I = numbered_labels(n);
      for_each_tuple(I, 2, [&](const std::vector<Label>& t) {
        const auto y = dual::Y(I, t[0], t[1]);
        c.expect(dual::product(y, y).is_zero(), [&] { return join(t); });
        c.expect(dual::Y(I, t[1], t[0]) == -y, [&] { return join(t) + " antisymmetry"; });
      });
    }
  });
  return s.take();
}

Report all(const Options& opt) {
  Report out;
  for (auto* fn : {&counting, &orient, &operad, &relations, &hopf, &gamma, &dual}) {
    auto r = fn(opt);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

bool passed(const Report& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace bessel::verify
