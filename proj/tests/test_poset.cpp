#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "bessel/error.hpp"
#include "bessel/poset.hpp"
#include "oracles.hpp"

using namespace bessel;
using namespace bessel::poset;

namespace {

Forest F(const char* text) { return parse_forest(text); }
VertexId V(const char* labels) { return VertexId{parse_label_list(labels)}; }

}  // namespace

TEST_CASE("gamma at the extremes") {
  const Forest f = F("((1,2),3);(4,5)");
  const auto full = gamma(f, inner_vertices(f));
  REQUIRE(full.size() == 1);
  CHECK(full[0].forest == f);
  for (const auto& [a, b] : full[0].phi) CHECK(a == b);
  const auto none = gamma(f, {});
  REQUIRE(none.size() == 1);
  CHECK(none[0].forest == Forest::minimum(f.labels()));
  CHECK(none[0].phi.empty());
  CHECK_THROWS_AS(gamma(f, {V("1,3")}), DomainError);
}

TEST_CASE("gamma of a comb at its bottom vertex") {
  const auto g = gamma(F("((1,2),3)"), {V("1,2,3")});
  REQUIRE(g.size() == 2);
  CHECK(g[0].forest == F("(1,3);2"));
  CHECK(g[1].forest == F("(2,3);1"));
  CHECK(g[0].phi.at(V("1,3")) == V("1,2,3"));
  CHECK(g[1].phi.at(V("2,3")) == V("1,2,3"));
  const auto top = gamma(F("((1,2),3)"), {V("1,2")});
  REQUIRE(top.size() == 1);
  CHECK(top[0].forest == F("(1,2);3"));
}

TEST_CASE("gamma equals the oracle") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(numbered_labels(n))) {
      const auto vs = inner_vertices(f);
      for (std::size_t m = 0; m < (std::size_t{1} << vs.size()); ++m) {
        std::vector<VertexId> v;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if (m >> i & 1) v.push_back(vs[i]);
        CHECK(gamma(f, v) == gamma_oracle(f, v));
      }
    }
}

TEST_CASE("oracle criteria") {
  // 1 and 2 sit in the distinct branches {1,3} and {2} of the bottom vertex.
  const auto g = gamma_oracle(F("((1,3),2)"), {V("1,2,3")});
  CHECK(std::any_of(g.begin(), g.end(), [](const GammaImage& x) { return x.forest == F("(1,2);3"); }));
  // {1,2} is not contained in {1,3}.
  const auto h = gamma_oracle(F("((1,3),2)"), {V("1,3")});
  REQUIRE(h.size() == 1);
  CHECK(h[0].forest == F("(1,3);2"));
}

TEST_CASE("order relation") {
  CHECK(leq(F("(1,2);3"), F("((1,2),3)")));
  CHECK(leq(F("(1,2);3"), F("((1,3),2)")));
  CHECK_FALSE(leq(F("((1,2),3)"), F("(1,2);3")));
  CHECK_FALSE(leq(F("(1,2);3;4"), F("((1,3),4);2")));
  CHECK(leq(F("1;2;3"), F("(1,2);3")));
  const auto img = find_image(F("(1,3);2"), F("((1,2),3)"));
  REQUIRE(img.has_value());
  CHECK(img->phi.at(V("1,3")) == V("1,2,3"));
  CHECK_FALSE(find_image(F("(1,2);3"), F("(1,3);2")).has_value());
  CHECK_THROWS_AS(find_image(F("(1,2)"), F("(1,3);2")), DomainError);
}

TEST_CASE("order axioms") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = enumerate_forests(numbered_labels(n));
    for (const auto& a : all) {
      CHECK(leq(a, a));
      for (const auto& b : all) {
        if (!leq(a, b)) continue;
        if (a != b) CHECK_FALSE(leq(b, a));
        for (const auto& c : all)
          if (leq(b, c)) CHECK(leq(a, c));
      }
    }
  }
}

TEST_CASE("intervals") {
  const Forest f = F("((1,2),3)");
  CHECK(interval(f, f) == std::vector<Forest>{f});
  for (std::size_t n = 1; n <= 5; ++n) {
    const LabelSet I = numbered_labels(n);
    CHECK(interval(Forest::minimum(I), Forest({comb_tree(I)})).size() == oracle::bell(n));
  }
  CHECK(interval(Forest::minimum(numbered_labels(3)), F("((1,2),3)")).size() == 5);
  CHECK(interval(Forest::minimum(numbered_labels(4)), F("(((1,2),3),4)")).size() == 15);
  CHECK_THROWS_AS(interval(F("((1,2),3)"), F("(1,2);3")), DomainError);
}

TEST_CASE("maximal elements are the trees") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto max = maximal_elements(numbered_labels(n));
    CHECK(max.size() == enumerate_trees(numbered_labels(n)).size());
    for (const auto& f : max) CHECK(f.tree_count() == 1);
  }
}

TEST_CASE("Hasse diagram") {
  const auto edges = hasse(numbered_labels(3));
  // Minimum below three cherries, each cherry below all three trees.
  CHECK(edges.size() == 3 + 9);
  for (const auto& e : edges) {
    CHECK(e.upper.degree() == e.lower.degree() + 1);
    CHECK(leq(e.lower, e.upper));
  }
  // Cover relations generate the order.
  const auto all = enumerate_forests(numbered_labels(4));
  const auto h = hasse(all);
  std::set<std::pair<std::string, std::string>> reach;
  for (const auto& a : all) reach.insert({a.text(), a.text()});
  for (std::size_t round = 0; round < 4; ++round)
    for (const auto& e : h)
      for (const auto& a : all)
        if (reach.count({a.text(), e.lower.text()})) reach.insert({a.text(), e.upper.text()});
  for (const auto& a : all)
    for (const auto& b : all) CHECK(leq(a, b) == (reach.count({a.text(), b.text()}) == 1));
}

TEST_CASE("dot output") {
  const auto nodes = enumerate_forests(numbered_labels(2));
  const auto dot = to_dot(nodes, hasse(nodes));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.find("\"(1,2)\"") != std::string::npos);
  CHECK(to_dot(nodes, hasse(nodes)) == dot);
}
