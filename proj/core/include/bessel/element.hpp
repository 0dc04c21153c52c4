#pragma once

// Exact linear combinations of canonical basis forests.
//
// A key forest F stands for the basis element "F with its canonical
// orientation"; every computed orientation is folded into the coefficient
// before insertion.  Primal (Bess), dual (Bess*) and root-oriented (B)
// combinations share the container but are distinct types.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "bessel/error.hpp"
#include "bessel/forest.hpp"
#include "bessel/rational.hpp"

namespace bessel {

template <class Tag>
class Combination {
 public:
  using Terms = std::map<Forest, Rational>;

  Combination() = default;
  explicit Combination(LabelSet labels) : labels_(std::move(labels)) {}

  static Combination basis(const Forest& f, const Rational& coeff = 1) {
    Combination out(f.labels());
    out.add(f, coeff);
    return out;
  }

  const LabelSet& labels() const noexcept { return labels_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Forest& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Forest& f, const Rational& coeff) {
    if (f.labels() != labels_)
      throw DomainError("term " + f.text() + " is not on label set " + to_string(labels_));
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(f, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Degree when every term has the same number of inner vertices.
  std::optional<std::size_t> homogeneous_degree() const {
    std::optional<std::size_t> d;
    for (const auto& [f, c] : terms_) {
      if (d && *d != f.degree()) return std::nullopt;
      d = f.degree();
    }
    return d;
  }

  Combination degree_part(std::size_t k) const {
    Combination out(labels_);
    for (const auto& [f, c] : terms_)
      if (f.degree() == k) out.terms_.emplace(f, c);
    return out;
  }

  Combination& operator+=(const Combination& other) {
    require_same_labels(other);
    for (const auto& [f, c] : other.terms_) add(f, c);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    require_same_labels(other);
    for (const auto& [f, c] : other.terms_) add(f, -c);
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [f, c] : terms_) c *= s;
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend Combination operator-(Combination a) { return a *= Rational(-1); }

  friend bool operator==(const Combination& a, const Combination& b) {
    return a.labels_ == b.labels_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_labels(const Combination& other) const {
    if (other.labels_ != labels_)
      throw DomainError("label sets differ: " + to_string(labels_) + " vs " +
                        to_string(other.labels_));
  }

  LabelSet labels_;
  Terms terms_;
};

struct PrimalTag {};
struct DualTag {};
struct RootOrientedTag {};

// Element of Bess(I) over the inner-oriented basis.
using Element = Combination<PrimalTag>;
// Element of Bess*(I) over the dual basis.
using DualElement = Combination<DualTag>;

// Tensor power of Bess(I); keys are ordered tuples of basis forests.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<Forest, N>;
  using Terms = std::map<Key, Rational>;

  Tensor() = default;
  explicit Tensor(LabelSet labels) : labels_(std::move(labels)) {}

  const LabelSet& labels() const noexcept { return labels_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Key& key, const Rational& coeff) {
    for (const auto& f : key)
      if (f.labels() != labels_)
        throw DomainError("tensor factor " + f.text() + " is not on " + to_string(labels_));
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& other) {
    if (other.labels_ != labels_) throw DomainError("tensor label sets differ");
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& other) {
    if (other.labels_ != labels_) throw DomainError("tensor label sets differ");
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.labels_ == b.labels_ && a.terms_ == b.terms_;
  }

 private:
  LabelSet labels_;
  Terms terms_;
};

using TensorElement = Tensor<2>;

// (-1)^(a*b)
inline int koszul(std::size_t a, std::size_t b) { return (a * b) % 2 == 0 ? 1 : -1; }

std::string to_string(const Element& x);
std::string to_string(const DualElement& x);
std::string to_string(const TensorElement& x);

}  // namespace bessel
