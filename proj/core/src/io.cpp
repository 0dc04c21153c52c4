#include "bessel/io.hpp"

#include <cctype>
#include <type_traits>

#include "bessel/error.hpp"

namespace bessel::io {

namespace {

std::string coeff_text(const Rational& c) { return to_string(c); }

Rational coeff_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("coefficient must be a string \"p/q\" or an integer");
}

LabelSet labels_from(const json& j) {
  if (!j.is_array()) throw ParseError("\"labels\" must be an array");
  std::vector<Label> out;
  for (const auto& l : j) {
    if (!l.is_string()) throw ParseError("labels must be strings");
    const auto s = l.get<std::string>();
    if (!is_valid_label(s)) throw ParseError("invalid label \"" + s + "\"");
    out.emplace_back(s);
  }
  try {
    return make_label_set(std::move(out));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

template <class Combo>
json combination_json(const Combo& x) {
  json terms = json::array();
  for (const auto& [f, c] : x.terms()) terms.push_back({{"coeff", coeff_text(c)}, {"forest", f.text()}});
  return {{"labels", to_json(x.labels())}, {"terms", terms}};
}

template <class Combo>
Combo combination_from_json(const json& j) {
  Combo out(labels_from(field(j, "labels")));
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  for (const auto& t : terms) {
    const Forest f = parse_forest(field(t, "forest").get<std::string>());
    if (f.labels() != out.labels())
      throw ParseError("forest " + f.text() + " is not on " + to_string(out.labels()));
    out.add(f, coeff_from(field(t, "coeff")));
  }
  return out;
}

void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

template <class Combo>
constexpr bool kStarred = std::is_same_v<Combo, DualElement>;

// "[F] + 2*[G] - 1/3*[H]"; dual terms may mark each bracket with '*'.
template <class Combo>
Combo parse_sum(std::string_view s) {
  struct Term {
    Rational c;
    Forest f;
  };
  std::vector<Term> terms;
  std::size_t i = 0;
  skip_space(s, i);
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_space(s, i);
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i));
    }
    Rational c = 1;
    if (i < s.size() && s[i] != '[') {
      const std::size_t star = s.find('*', i);
      if (star == std::string_view::npos) throw ParseError("expected coefficient followed by '*'");
      std::string num(s.substr(i, star - i));
      while (!num.empty() && std::isspace(static_cast<unsigned char>(num.back()))) num.pop_back();
      c = parse_rational(num);
      i = star + 1;
      skip_space(s, i);
    }
    if (i >= s.size() || s[i] != '[') throw ParseError("expected '[' at position " + std::to_string(i));
    const std::size_t close = s.find(']', i);
    if (close == std::string_view::npos) throw ParseError("unterminated '['");
    terms.push_back({sign * c, parse_forest(s.substr(i + 1, close - i - 1))});
    i = close + 1;
    if (kStarred<Combo> && i < s.size() && s[i] == '*') ++i;
    skip_space(s, i);
    first = false;
  }
  if (terms.empty()) throw ParseError("empty element");
  Combo out(terms.front().f.labels());
  for (const auto& t : terms) {
    if (t.f.labels() != out.labels()) throw ParseError("terms on different label sets");
    out.add(t.f, t.c);
  }
  return out;
}

template <class Combo>
Combo parse_any(std::string_view text) {
  std::size_t i = 0;
  skip_space(text, i);
  if (i == text.size()) throw ParseError("empty element");
  if (text[i] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return combination_from_json<Combo>(j);
  }
  if (text.find('[') != std::string_view::npos) return parse_sum<Combo>(text);
  std::string_view body = text.substr(i);
  if (kStarred<Combo> && !body.empty() && body.back() == '*') body.remove_suffix(1);
  return Combo::basis(parse_forest(body));
}

}  // namespace

json to_json(const LabelSet& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l.str());
  return out;
}

json to_json(const Element& x) { return combination_json(x); }
json to_json(const DualElement& x) { return combination_json(x); }

json to_json(const TensorElement& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms())
    terms.push_back({{"coeff", coeff_text(c)}, {"left", k[0].text()}, {"right", k[1].text()}});
  return {{"labels", to_json(x.labels())}, {"terms", terms}};
}

json to_json(const dual::RankReport& r) {
  return {{"labels", to_json(r.labels)},
          {"degree", r.degree},
          {"dim", r.dim.fits_slong_p() ? json(r.dim.get_si()) : json(r.dim.get_str())},
          {"rank", r.rank},
          {"monomials", r.monomials}};
}

json to_json(const dual::ShapeReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    json name = json::array();
    for (const auto& l : t.name) name.push_back(l.str());
    terms.push_back({{"coeff", coeff_text(t.coeff)},
                     {"forest", t.forest.text()},
                     {"shape", t.balanced ? "balanced" : "caterpillar"},
                     {"name", name}});
  }
  return {{"terms", terms},
          {"caterpillars", r.caterpillars},
          {"balanced", r.balanced},
          {"expansion_consistent", r.expansion_consistent},
          {"lll_antisymmetric", r.lll_antisymmetric},
          {"yyy_antisymmetric", r.yyy_antisymmetric},
          {"yyy_symmetric", r.yyy_symmetric}};
}

Element element_from_json(const json& j) { return combination_from_json<Element>(j); }
DualElement dual_from_json(const json& j) { return combination_from_json<DualElement>(j); }

TensorElement tensor_from_json(const json& j) {
  TensorElement out(labels_from(field(j, "labels")));
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  for (const auto& t : terms) {
    const Forest a = parse_forest(field(t, "left").get<std::string>());
    const Forest b = parse_forest(field(t, "right").get<std::string>());
    if (a.labels() != out.labels() || b.labels() != out.labels())
      throw ParseError("tensor term not on " + to_string(out.labels()));
    out.add({a, b}, coeff_from(field(t, "coeff")));
  }
  return out;
}

dual::RankReport rank_report_from_json(const json& j) {
  dual::RankReport r;
  r.labels = labels_from(field(j, "labels"));
  r.degree = field(j, "degree").get<std::size_t>();
  const auto& dim = field(j, "dim");
  r.dim = dim.is_string() ? Integer(dim.get<std::string>()) : Integer(dim.get<long>());
  r.rank = field(j, "rank").get<std::size_t>();
  r.monomials = field(j, "monomials").get<std::vector<std::string>>();
  return r;
}

Element parse_element(std::string_view text) { return parse_any<Element>(text); }
DualElement parse_dual(std::string_view text) { return parse_any<DualElement>(text); }

}  // namespace bessel::io
