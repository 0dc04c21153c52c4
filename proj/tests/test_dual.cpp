#include <catch_amalgamated.hpp>

#include <random>

#include "bessel/dual.hpp"
#include "bessel/error.hpp"
#include "bessel/hopf.hpp"
#include "oracles.hpp"

using namespace bessel;
using namespace bessel::dual;

namespace {

Forest F(const char* text) { return parse_forest(text); }
DualElement D(const char* text, long c = 1) { return basis(F(text), c); }
Label L(const char* s) { return Label(s); }

std::vector<Label> labels_of(std::initializer_list<const char*> xs) {
  std::vector<Label> out;
  for (const char* x : xs) out.emplace_back(x);
  return out;
}

DualElement random_dual(const LabelSet& labels, std::mt19937_64& rng) {
  const auto all = enumerate_forests(labels);
  DualElement x(labels);
  for (int t = 0, n = 1 + static_cast<int>(rng() % 3); t < n; ++t)
    x.add(all[rng() % all.size()], static_cast<long>(rng() % 5) - 2);
  return x;
}

}  // namespace

TEST_CASE("pairing") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = enumerate_forests(numbered_labels(n));
    for (const auto& f : all)
      for (const auto& g : all)
        CHECK(pairing(Element::basis(f), basis(g)) == (f == g ? 1 : 0));
  }
  CHECK(pairing(Element::basis(F("(1,2)"), -1), D("(1,2)")) == -1);
  CHECK(pairing(Element::basis(F("(1,2)"), 3), D("(1,2)", 2)) == 6);
}

TEST_CASE("generators Y") {
  const LabelSet I = numbered_labels(3);
  CHECK(Y(I, L("1"), L("2")) == D("(1,2);3"));
  CHECK(Y(I, L("2"), L("1")) == -Y(I, L("1"), L("2")));
  CHECK(Y(I, L("1"), L("2")).homogeneous_degree() == 1);
  CHECK_THROWS_AS(Y(I, L("1"), L("1")), DomainError);
  CHECK_THROWS_AS(Y(I, L("1"), L("7")), DomainError);
}

TEST_CASE("small products") {
  const LabelSet I = numbered_labels(3);
  const auto p = product(Y(I, L("1"), L("2")), Y(I, L("2"), L("3")));
  CHECK(p.size() == 2);
  CHECK(abs(p.coefficient(F("((1,2),3)"))) == 1);
  CHECK(abs(p.coefficient(F("((2,3),1)"))) == 1);
  CHECK(p.coefficient(F("((1,3),2)")) == 0);
  CHECK(product(Y(I, L("1"), L("2")), Y(I, L("1"), L("2"))).is_zero());
  const DualElement d = D("((1,3),2)") - D("(1,2);3", 2);
  CHECK(product(unit(I), d) == d);
  CHECK(product(d, unit(I)) == d);
}

TEST_CASE("product is dual to the coproduct") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = enumerate_forests(numbered_labels(n));
    for (const auto& f : all)
      for (const auto& g : all) {
        const auto p = product(basis(f), basis(g));
        CHECK(p == product_via_duality(basis(f), basis(g)));
        // Each coefficient is read off the coproduct of its forest.
        for (const auto& [h, c] : p.terms())
          CHECK(abs(c) == abs(hopf::coproduct(h).coefficient({f, g})));
      }
  }
}

TEST_CASE("associativity and graded commutativity") {
  std::mt19937_64 rng(31);
  for (int r = 0; r < 30; ++r) {
    const LabelSet I = numbered_labels(2 + rng() % 3);
    const auto a = random_dual(I, rng), b = random_dual(I, rng), c = random_dual(I, rng);
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
  }
  for (const auto& f : enumerate_forests(numbered_labels(4)))
    for (const auto& g : enumerate_forests(numbered_labels(4)))
      CHECK(product(basis(f), basis(g)) ==
            Rational(koszul(f.degree(), g.degree())) * product(basis(g), basis(f)));
}

TEST_CASE("products with Y along the path to the root") {
  CHECK(product_with_Y(F("(1,2);3"), L("2"), L("3")).size() == 2);
  CHECK(product_with_Y(F("((1,2),3);4"), L("1"), L("4")).size() == 3);
  // Disjoint supports: the only forest with both cherries.
  const auto q = product_with_Y(F("(1,2);3;4"), L("3"), L("4"));
  REQUIRE(q.size() == 1);
  CHECK(q.terms().begin()->first == F("(1,2);(3,4)"));
  CHECK_THROWS_AS(product_with_Y(F("(1,2);3"), L("3"), L("2")), DomainError);
  for (std::size_t n = 2; n <= 4; ++n) {
    const LabelSet I = numbered_labels(n);
    for (const auto& f : enumerate_forests(I))
      for (const auto& i : I)
        for (const auto& j : I)
          if (i != j && !contains(support(f), j))
            CHECK(product_with_Y(f, i, j) == product(basis(f), Y(I, i, j)));
  }
}

TEST_CASE("triangle and twelve-term relations") {
  CHECK(verify_triangle(numbered_labels(3), L("1"), L("2"), L("3")));
  CHECK(verify_12term(numbered_labels(4), L("1"), L("2"), L("3"), L("4")));
  CHECK(twelve_term_sum(numbered_labels(5), L("1"), L("3"), L("2"), L("5")).is_zero());
  const LabelSet I = numbered_labels(4);
  const auto fwd = path_product(I, labels_of({"1", "2", "3", "4"}));
  const auto rev = path_product(I, labels_of({"4", "3", "2", "1"}));
  CHECK(fwd == rev);
  CHECK(fwd == product(product(Y(I, L("1"), L("2")), Y(I, L("2"), L("3"))), Y(I, L("3"), L("4"))));
}

TEST_CASE("five-term expansion") {
  const LabelSet I = numbered_labels(4);
  const auto r = degree3_shape_analysis(I, L("1"), L("2"), L("3"), L("4"));
  CHECK(r.terms.size() == 5);
  CHECK(r.caterpillars == 4);
  CHECK(r.balanced == 1);
  CHECK(r.expansion_consistent);
  CHECK(r.lll_antisymmetric);
  CHECK(r.yyy_antisymmetric);
  CHECK(r.yyy_symmetric);

  // The named coefficients, read directly off the product.
  const auto p = path_product(I, labels_of({"1", "2", "3", "4"}));
  CHECK(LLL(I, L("1"), L("2"), L("3"), L("4")) == p.coefficient(F("(((3,4),2),1)")));
  CHECK(YYY(I, L("1"), L("2"), L("3"), L("4")) == p.coefficient(F("((1,2),(3,4))")));
  CHECK(LLL(I, L("1"), L("2"), L("3"), L("4")) == -LLL(I, L("1"), L("2"), L("4"), L("3")));
  CHECK(YYY(I, L("1"), L("2"), L("3"), L("4")) == YYY(I, L("3"), L("4"), L("1"), L("2")));
}

TEST_CASE("generation rank") {
  const auto r12 = generation_rank(numbered_labels(2), 1);
  CHECK(r12.rank == 1);
  CHECK(r12.dim == 1);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto r = generation_rank(numbered_labels(n), 1);
    CHECK(r.rank == oracle::binomial(n, 2));
    CHECK(r.dim == static_cast<unsigned long>(oracle::binomial(n, 2)));
  }

  // Degree 2 on {1,2,3}, rebuilt with plain elimination.
  const LabelSet I = numbered_labels(3);
  const auto r = generation_rank(I, 2);
  const auto target = enumerate_forests(I, 2);
  std::vector<std::vector<Rational>> rows;
  const std::vector<std::pair<const char*, const char*>> pairs{{"1", "2"}, {"1", "3"}, {"2", "3"}};
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto p = product(Y(I, L(pairs[a].first), L(pairs[a].second)),
                             Y(I, L(pairs[b].first), L(pairs[b].second)));
      std::vector<Rational> row;
      for (const auto& f : target) row.push_back(p.coefficient(f));
      rows.push_back(row);
    }
  CHECK(r.dim == 3);
  CHECK(r.monomials.size() == 3);
  CHECK(r.rank == oracle::rank(rows));
  CHECK(r.rank <= 3);
}
