#include <catch_amalgamated.hpp>

#include <random>

#include "bessel/error.hpp"
#include "bessel/operad.hpp"
#include "oracles.hpp"

using namespace bessel;
using namespace bessel::operad;

namespace {

Forest F(const char* text) { return parse_forest(text); }
Element B(const char* text, long c = 1) { return Element::basis(F(text), c); }
const Label star("*");

LabelSet prefixed(const std::string& p, std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(p + std::to_string(i));
  return make_label_set(std::move(out));
}

Element random_element(const LabelSet& labels, std::mt19937_64& rng) {
  const auto all = enumerate_forests(labels);
  Element x(labels);
  for (int t = 0, n = 1 + static_cast<int>(rng() % 3); t < n; ++t)
    x.add(all[rng() % all.size()], static_cast<long>(rng() % 5) - 2);
  return x;
}

// Homogeneous random element, for the Koszul sign in parallel composition.
Element random_homogeneous(const LabelSet& labels, std::mt19937_64& rng, std::size_t& degree) {
  degree = rng() % labels.size();
  const auto all = enumerate_forests(labels, degree);
  Element x(labels);
  for (int t = 0, n = 1 + static_cast<int>(rng() % 2); t < n; ++t)
    x.add(all[rng() % all.size()], 1 + static_cast<long>(rng() % 3));
  return x;
}

}  // namespace

TEST_CASE("generators") {
  const Label a("1"), b("2");
  CHECK(gen_E(a, b) == B("1;2"));
  CHECK(gen_E(b, a) == gen_E(a, b));
  CHECK(gen_Omega(a, b) == B("(1,2)"));
  CHECK(gen_Omega(b, a) == -gen_Omega(a, b));
  CHECK(identity(a) == B("1"));
  CHECK_THROWS_AS(gen_E(a, a), DomainError);
}

TEST_CASE("E acts by disjoint union") {
  CHECK(act_E(B("1"), B("2")) == B("1;2"));
  CHECK(act_E(B("1;3"), B("2;4")) == B("1;2;3;4"));
  // R1 ^ u ^ r ^ R2 ^ w: u passes r and R2, locals untouched.
  CHECK(act_E(B("(1,2)"), B("(3,4)")) == B("(1,2);(3,4)"));
  CHECK(act_E(B("(3,4)"), B("(1,2)")) == -B("(1,2);(3,4)"));
  CHECK_THROWS_AS(act_E(B("1"), B("1")), DomainError);
}

TEST_CASE("Omega acts by grafting pairs of trees") {
  CHECK(act_Omega(B("1"), B("2")) == gen_Omega(Label("1"), Label("2")));
  const Element r = act_Omega(B("1;2"), B("3"));
  CHECK(r.size() == 2);
  CHECK(r == B("(1,3);2") + B("(2,3);1"));
  CHECK(act_Omega(B("1;2"), B("3;4")).size() == 4);
  // (-1)^1 R1 ^ u ^ R2 = R ^ w ^ u, and u = {1,2} sorts before w.
  CHECK(act_Omega(B("(1,2)"), B("3")) == -B("((1,2),3)"));
}

TEST_CASE("decompositions evaluate back") {
  const auto d = decompose(F("1;2"));
  CHECK(d.word.text() == "E(1,2)");
  CHECK(decompose(F("(1,2)")).word.text() == "O(1,2)");
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(numbered_labels(n))) {
      const auto c = decompose(f);
      CHECK(Rational(c.sign) * evaluate(c.word) == Element::basis(f));
      CHECK(c.word.degree() == f.degree());
      for (const auto& a : all_decompositions(f))
        CHECK(Rational(a.sign) * evaluate(a.word) == Element::basis(f));
    }
  CHECK(all_decompositions(F("(1,2);3")).size() == 4);
}

TEST_CASE("substitution does not depend on the decomposition") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(numbered_labels(n))) {
      if (f.degree() > 3) continue;
      for (const auto& s : f.labels())
        for (const auto& y : {B("(a,b)"), B("a;b"), B("(a,b);c")}) {
          const Element ref = compose(Element::basis(f), s, y);
          for (const auto& d : all_decompositions(f))
            CHECK(Rational(d.sign) * substitute(d.word, s, y) == ref);
        }
    }
}

TEST_CASE("relations") {
  for (const auto& t : {std::vector<std::string>{"1", "2", "3"}, {"2", "3", "1"}, {"3", "1", "2"}}) {
    const Label i(t[0]), j(t[1]), k(t[2]);
    CHECK(compose(gen_E(i, star), star, gen_E(j, k)) == compose(gen_E(k, star), star, gen_E(i, j)));
    CHECK(compose(gen_Omega(i, star), star, gen_E(j, k)) ==
          compose(gen_E(j, star), star, gen_Omega(i, k)) +
              compose(gen_E(k, star), star, gen_Omega(i, j)));
  }
}

TEST_CASE("unit laws") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(numbered_labels(n))) {
      const Element x = Element::basis(f);
      for (const auto& s : f.labels()) CHECK(compose(x, s, identity(s)) == x);
      CHECK(compose(identity(star), star, x) == x);
    }
}

TEST_CASE("compose rejects bad slots") {
  CHECK_THROWS_AS(compose(B("(1,2)"), Label("3"), B("a")), DomainError);
  CHECK_THROWS_AS(compose(B("(1,2)"), Label("1"), B("2;3")), DomainError);
}

TEST_CASE("sequential associativity") {
  std::mt19937_64 rng(11);
  for (int r = 0; r < 60; ++r) {
    const LabelSet I = prefixed("a", 1 + rng() % 3), J = prefixed("b", 1 + rng() % 3),
                   K = prefixed("c", 1 + rng() % 2);
    const Element x = random_element(I, rng), y = random_element(J, rng), z = random_element(K, rng);
    const Label s = I[rng() % I.size()], t = J[rng() % J.size()];
    CHECK(compose(compose(x, s, y), t, z) == compose(x, s, compose(y, t, z)));
  }
}

TEST_CASE("parallel associativity with Koszul sign") {
  std::mt19937_64 rng(12);
  for (int r = 0; r < 60; ++r) {
    const LabelSet I = prefixed("a", 2 + rng() % 2), J = prefixed("b", 1 + rng() % 3),
                   K = prefixed("c", 1 + rng() % 2);
    std::size_t dx = 0, dy = 0, dz = 0;
    const Element x = random_homogeneous(I, rng, dx), y = random_homogeneous(J, rng, dy),
                  z = random_homogeneous(K, rng, dz);
    const Label s = I[0], t = I[1 + rng() % (I.size() - 1)];
    CHECK(compose(compose(x, s, y), t, z) ==
          Rational(koszul(dy, dz)) * compose(compose(x, t, z), s, y));
  }
}

TEST_CASE("relabeling") {
  const Label i("i"), j("j");
  const std::map<Label, Label> swap{{i, j}, {j, i}};
  CHECK(relabel(swap, gen_E(i, j)) == gen_E(i, j));
  CHECK(relabel(swap, gen_Omega(i, j)) == -gen_Omega(i, j));
  const std::map<Label, Label> id{{i, i}, {j, j}};
  CHECK(relabel(id, gen_Omega(i, j)) == gen_Omega(i, j));
}

TEST_CASE("equivariance") {
  std::mt19937_64 rng(13);
  for (int r = 0; r < 40; ++r) {
    const LabelSet I = numbered_labels(2 + rng() % 2), J = prefixed("b", 1 + rng() % 2);
    const Element x = random_element(I, rng), y = random_element(J, rng);
    const Label s = I[rng() % I.size()];
    // A random bijection of the composite labels, restricted to each side.
    LabelSet all = set_union(set_difference(I, {s}), J);
    std::vector<Label> image(all.begin(), all.end());
    for (std::size_t k = image.size(); k > 1; --k) std::swap(image[k - 1], image[rng() % k]);
    std::map<Label, Label> sigma, on_x, on_y;
    for (std::size_t k = 0; k < all.size(); ++k) sigma.emplace(all[k], image[k]);
    // The slot is renamed out of the way so the pieces stay disjoint.
    const Label slot("#");
    for (const auto& l : I) on_x.emplace(l, l == s ? slot : sigma.at(l));
    for (const auto& l : J) on_y.emplace(l, sigma.at(l));
    CHECK(relabel(sigma, compose(x, s, y)) == compose(relabel(on_x, x), slot, relabel(on_y, y)));
  }
}

TEST_CASE("dimensions") {
  CHECK(dimension(numbered_labels(4), 3) == 15);
  CHECK(dimension(numbered_labels(4), 0) == 1);
  Integer total = 0;
  for (std::size_t k = 0; k < 4; ++k) total += dimension(numbered_labels(4), k);
  CHECK(total == 37);
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(dimension(numbered_labels(n), n - 1) == oracle::odd_double_factorial(n));
}
