// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bessel/boperad.hpp"
#include "bessel/dual.hpp"
#include "bessel/error.hpp"
#include "bessel/hopf.hpp"
#include "bessel/io.hpp"
#include "bessel/operad.hpp"
#include "bessel/orient.hpp"
#include "bessel/poset.hpp"
#include "bessel_cli/cli.hpp"
#include "oracles.hpp"

using namespace bessel;
using nlohmann::json;

namespace {

const Label kStar("*");

class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& where) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = where();
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }
  void fail(std::string why) {
    if (failure_.empty()) failure_ = std::move(why);
  }

  std::size_t cases() const { return cases_; }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t cases_ = 0;
  std::string failure_;
  std::vector<std::string> notes_;
};

std::string join(const std::vector<Label>& t) {
  std::string out;
  for (const auto& l : t) out += (out.empty() ? "" : ",") + l.str();
  return out;
}

// Injective tuples of length k drawn from `labels`.
void for_each_tuple(const LabelSet& labels, std::size_t k,
                    const std::function<void(const std::vector<Label>&)>& fn) {
  std::vector<Label> cur;
  std::vector<bool> used(labels.size());
  std::function<void()> rec = [&] {
    if (cur.size() == k) return fn(cur);
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

LabelSet prefixed(const std::string& p, std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(p + std::to_string(i));
  return make_label_set(std::move(out));
}

template <class Combo>
Combo random_combo(const LabelSet& labels, std::mt19937_64& rng) {
  const auto all = enumerate_forests(labels);
  Combo x(labels);
  for (int t = 0, n = 1 + static_cast<int>(rng() % 3); t < n; ++t)
    x.add(all[rng() % all.size()], static_cast<long>(rng() % 7) - 3);
  return x;
}

// --- 1 ---------------------------------------------------------------------

void counting(Check& c) {
  const std::vector<long> expected{1, 2, 7, 37, 266, 2431};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto tag = [n] { return "n=" + std::to_string(n); };
    const Integer want(expected[n - 1]);
    c.expect(count_forests(n) == want, tag);
    const auto grafted = oracle::forests_by_grafting(numbered_labels(n));
    c.expect(Integer(static_cast<unsigned long>(grafted.size())) == want, tag);
    const auto all = enumerate_forests(numbered_labels(n));
    std::vector<std::string> texts;
    for (const auto& f : all) texts.push_back(f.text());
    std::sort(texts.begin(), texts.end());
    c.expect(texts == grafted, [&] { return "enumeration differs from grafting, " + tag(); });
    c.expect(count_trees(n) == oracle::odd_double_factorial(n), tag);
    c.expect(Integer(static_cast<unsigned long>(enumerate_trees(numbered_labels(n)).size())) ==
                 oracle::odd_double_factorial(n),
             tag);
  }
}

// --- 2 ---------------------------------------------------------------------

void relations(Check& c) {
  using operad::gen_E, operad::gen_Omega;
  using boperad::gen_e, boperad::gen_omega;
  for (std::size_t n = 3; n <= 4; ++n)
    for_each_tuple(numbered_labels(n), 3, [&](const std::vector<Label>& t) {
      const auto& [i, j, k] = std::tie(t[0], t[1], t[2]);
      const auto where = [&] { return join(t); };
      c.expect((operad::compose(gen_E(i, kStar), kStar, gen_E(j, k)) -
                operad::compose(gen_E(k, kStar), kStar, gen_E(i, j)))
                   .is_zero(),
               where);
      c.expect((operad::compose(gen_Omega(i, kStar), kStar, gen_E(j, k)) -
                operad::compose(gen_E(j, kStar), kStar, gen_Omega(i, k)) -
                operad::compose(gen_E(k, kStar), kStar, gen_Omega(i, j)))
                   .is_zero(),
               where);
      c.expect((boperad::compose(gen_e(i, kStar), kStar, gen_e(j, k)) -
                boperad::compose(gen_e(k, kStar), kStar, gen_e(i, j)))
                   .is_zero(),
               where);
      c.expect((boperad::compose(gen_omega(i, kStar), kStar, gen_e(j, k)) -
                boperad::compose(gen_e(j, kStar), kStar, gen_omega(i, k)) +
                boperad::compose(gen_e(k, kStar), kStar, gen_omega(i, j)))
                   .is_zero(),
               where);
    });
}

// --- 3 ---------------------------------------------------------------------

void hopf_axioms_on(Check& c, const Element& x, const std::string& tag) {
  const auto d = hopf::coproduct(x);
  c.expect(hopf::coproduct_left(d) == hopf::coproduct_right(d), [&] { return "coassoc " + tag; });
  c.expect(hopf::swap(d) == d, [&] { return "cocomm " + tag; });
  c.expect(hopf::counit_left(d) == x, [&] { return "left counit " + tag; });
  c.expect(hopf::counit_right(d) == x, [&] { return "right counit " + tag; });
}

void hopf_axioms(Check& c) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& f : enumerate_forests(numbered_labels(n)))
      hopf_axioms_on(c, Element::basis(f), f.text());
    const Element a = hopf::augmentation(numbered_labels(n));
    c.expect(hopf::coproduct(a) == hopf::tensor(a, a), [n] { return "grouplike n=" + std::to_string(n); });
  }
  std::mt19937_64 rng(2024);
  const LabelSet I = numbered_labels(5);
  for (int r = 0; r < 100; ++r) {
    const auto x = random_combo<Element>(I, rng);
    hopf_axioms_on(c, x, to_string(x));
  }
  const Element a = hopf::augmentation(I);
  c.expect(hopf::coproduct(a) == hopf::tensor(a, a), [] { return "grouplike n=5"; });
}

// --- 4 ---------------------------------------------------------------------

void coproduct_oracle(Check& c) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(numbered_labels(n))) {
      const Element x = Element::basis(f);
      c.expect(hopf::coproduct(x) == hopf::coproduct_via_generators(x), [&] { return f.text(); });
    }
}

// --- 5 ---------------------------------------------------------------------

void morphism(Check& c) {
  std::mt19937_64 rng(5);
  for (int r = 0; r < 100; ++r) {
    const LabelSet I = prefixed("a", 1 + rng() % 3), J = prefixed("b", 1 + rng() % 3);
    const auto x = random_combo<Element>(I, rng), y = random_combo<Element>(J, rng);
    const Label s = I[rng() % I.size()];
    c.expect(hopf::coproduct(operad::compose(x, s, y)) ==
                 hopf::compose(hopf::coproduct(x), s, hopf::coproduct(y)),
             [&] { return to_string(x) + " o_" + s.str() + " " + to_string(y); });
  }
}

// --- 6 ---------------------------------------------------------------------

void poset_checks(Check& c) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = enumerate_forests(numbered_labels(n));
    for (const auto& f : all) {
      const auto vs = inner_vertices(f);
      for (std::size_t m = 0; m < (std::size_t{1} << vs.size()); ++m) {
        std::vector<VertexId> v;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if (m >> i & 1) v.push_back(vs[i]);
        c.expect(poset::gamma(f, v) == poset::gamma_oracle(f, v),
                 [&] { return "gamma " + f.text() + " mask " + std::to_string(m); });
      }
    }
    std::vector<std::vector<bool>> le(all.size(), std::vector<bool>(all.size()));
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b) le[a][b] = poset::leq(all[a], all[b]);
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b) {
        if (!le[a][b]) continue;
        for (std::size_t d = 0; d < all.size(); ++d)
          if (le[b][d])
            c.expect(le[a][d], [&] {
              return "transitivity " + all[a].text() + " " + all[b].text() + " " + all[d].text();
            });
      }
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    const LabelSet I = numbered_labels(n);
    const auto size = poset::interval(Forest::minimum(I), Forest({comb_tree(I)})).size();
    c.expect(size == (n == 3 ? 5u : 15u), [&] { return "interval n=" + std::to_string(n); });
    c.expect(size == oracle::bell(n), [&] { return "bell n=" + std::to_string(n); });
  }
}

// --- 7 ---------------------------------------------------------------------

void dual_checks(Check& c) {
  using namespace dual;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = enumerate_forests(numbered_labels(n));
    for (const auto& f : all)
      for (const auto& g : all)
        c.expect(product(basis(f), basis(g)) == product_via_duality(basis(f), basis(g)),
                 [&] { return "duality " + f.text() + " x " + g.text(); });
  }

  std::mt19937_64 rng(7);
  for (int r = 0; r < 100; ++r) {
    const LabelSet I = numbered_labels(2 + rng() % 4);
    const auto a = random_combo<DualElement>(I, rng), b = random_combo<DualElement>(I, rng),
               d = random_combo<DualElement>(I, rng);
    c.expect(product(product(a, b), d) == product(a, product(b, d)),
             [&] { return "assoc " + to_string(a) + " " + to_string(b) + " " + to_string(d); });
    // Graded commutativity on homogeneous pieces.
    const auto all = enumerate_forests(I);
    const Forest f = all[rng() % all.size()], g = all[rng() % all.size()];
    c.expect(product(basis(f), basis(g)) ==
                 Rational(koszul(f.degree(), g.degree())) * product(basis(g), basis(f)),
             [&] { return "comm " + f.text() + " " + g.text(); });
  }

  for (std::size_t n = 3; n <= 5; ++n) {
    const LabelSet I = numbered_labels(n);
    for_each_tuple(I, 3, [&](const std::vector<Label>& t) {
      c.expect(verify_triangle(I, t[0], t[1], t[2]), [&] { return "triangle " + join(t); });
    });
  }
  for (std::size_t n = 4; n <= 5; ++n) {
    const LabelSet I = numbered_labels(n);
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      if (std::popcount(m) != 4) continue;
      std::vector<Label> q;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1) q.push_back(I[i]);
      c.expect(twelve_term_sum(I, q[0], q[1], q[2], q[3]).is_zero(),
               [&] { return "12-term n=" + std::to_string(n) + " " + join(q); });
    }
  }

  for (std::size_t n = 2; n <= 5; ++n) {
    const LabelSet I = numbered_labels(n);
    for (const auto& f : enumerate_forests(I)) {
      const auto sup = support(f);
      for (const auto& i : I)
        for (const auto& j : I)
          if (i != j && !contains(sup, j))
            c.expect(product_with_Y(f, i, j) == product(basis(f), Y(I, i, j)),
                     [&] { return "Y-path " + f.text() + " " + i.str() + "," + j.str(); });
    }
  }

  for (std::size_t n = 4; n <= 5; ++n) {
    const LabelSet I = numbered_labels(n);
    for_each_tuple(I, 4, [&](const std::vector<Label>& t) {
      const auto r = degree3_shape_analysis(I, t[0], t[1], t[2], t[3]);
      c.expect(r.terms.size() == 5 && r.caterpillars == 4 && r.balanced == 1 &&
                   r.expansion_consistent && r.lll_antisymmetric && r.yyy_antisymmetric &&
                   r.yyy_symmetric,
               [&] { return "five-term n=" + std::to_string(n) + " " + join(t); });
    });
  }
}

// --- 8 ---------------------------------------------------------------------

void round_trips(Check& c) {
  using namespace orient;
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : enumerate_forests(numbered_labels(n))) {
      const auto tag = [&] { return f.text(); };
      const auto outer = inner_to_outer(canonical_inner(f), f);
      c.expect(canonical_sign(f, outer_to_inner(outer, f)) == 1, tag);
      for (int flip : {1, -1}) {
        auto o = canonical_outer(f);
        auto& syms = o.labels.symbols;
        for (std::size_t k = syms.size(); k > 1; --k) std::swap(syms[k - 1], syms[rng() % k]);
        o.roots.sign = flip;
        const auto back = inner_to_outer(outer_to_inner(o, f), f);
        c.expect(canonical_sign(f, back) == canonical_sign(f, o), tag);
      }
      c.expect(parse_forest(format(f)) == f, tag);
      c.expect(io::parse_element(to_string(Element::basis(f, -2))) == Element::basis(f, -2), tag);
    }

  const Label i("1"), j("2");
  const Forest e({Tree::leaf(i), Tree::leaf(j)});
  const OuterOrientation oe{{1, {LeafSym{j}, LeafSym{i}}}, {1, {RootSym{i}, RootSym{j}}}};
  const auto ie = outer_to_inner(oe, e);
  c.expect(ie.global.sign == 1 && ie.global.symbols.size() == 1 && is_R(ie.global.symbols[0]) &&
               ie.locals.empty(),
           [] { return "E anchor"; });
  c.expect(operad::gen_E(i, j) == Element::basis(e), [] { return "E generator"; });

  const Forest w({Tree::graft(Tree::leaf(i), Tree::leaf(j))});
  const OuterOrientation ow{{1, {LeafSym{i}, LeafSym{j}}}, {1, {RootSym{i}}}};
  const auto iw = outer_to_inner(ow, w);
  c.expect(iw.global.sign == 1 && iw.global.symbols.size() == 2 && is_R(iw.global.symbols[0]),
           [] { return "Omega anchor"; });
  const LocalOrientation lo{w.vertices().front().id, {RootSym{i}, LeafSym{i}, LeafSym{j}}, 1};
  c.expect(local_sign(w, lo) == 1, [] { return "Omega local triple"; });
  c.expect(operad::gen_Omega(i, j) == Element::basis(w), [] { return "Omega generator"; });
}

// --- 9 ---------------------------------------------------------------------

void generation_rank(Check& c) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const LabelSet I = numbered_labels(n);
    std::ostringstream out, err;
    const int code = cli::run({"--json", "experiment", "generation-rank", "--labels", join(I)}, out, err);
    if (code != cli::kOk) {
      c.fail("exit " + std::to_string(code) + ": " + err.str());
      return;
    }
    json j = json::parse(out.str());
    if (j.is_object()) j = json::array({j});
    c.expect(j.size() == n, [&] { return "degree count n=" + std::to_string(n); });
    std::string line = "n=" + std::to_string(n) + ":";
    for (std::size_t k = 0; k < j.size(); ++k) {
      const auto r = io::rank_report_from_json(j[k]);
      const auto tag = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };
      c.expect(r.labels == I && r.degree == k, tag);
      c.expect(r.dim == operad::dimension(I, k), tag);
      c.expect(Integer(static_cast<unsigned long>(r.rank)) <= r.dim, tag);
      c.expect(r.rank <= oracle::binomial(oracle::binomial(n, 2), k), tag);
      if (k == 1) c.expect(r.rank == oracle::binomial(n, 2), tag);
      line += " d" + std::to_string(k) + " " + std::to_string(r.rank) + "/" + r.dim.get_str();
    }
    c.note(line);
  }
}

struct Criterion {
  int id;
  const char* name;
  void (*body)(Check&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "counting", counting},
      {2, "presentation relations", relations},
      {3, "Hopf axioms", hopf_axioms},
      {4, "coproduct oracle", coproduct_oracle},
      {5, "Hopf-operad morphism", morphism},
      {6, "poset", poset_checks},
      {7, "dual algebra", dual_checks},
      {8, "round trips", round_trips},
      {9, "generation rank (recorded)", generation_rank},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << cr.id << " (" << cr.name
              << "): " << c.cases() << " checks, " << timing;
    if (!c.ok()) std::cout << ", first failure: " << c.failure();
    std::cout << '\n';
    for (const auto& n : c.notes()) std::cout << "    " << n << '\n';
    if (!c.ok()) ++failed;
  }
  std::cout << (failed ? "FAILED " : "PASSED ") << criteria.size() - failed << "/"
            << criteria.size() << '\n';
  return failed ? 1 : 0;
}
