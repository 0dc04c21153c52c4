#include "bessel/forest.hpp"

#include <algorithm>
#include <iterator>
#include <mutex>
#include <utility>

#include "bessel/error.hpp"

namespace bessel {

namespace {

constexpr std::string_view kReserved = ",;() \t\n\r";

}  // namespace

bool is_valid_label(std::string_view text) noexcept {
  return !text.empty() && text.find_first_of(kReserved) == std::string_view::npos;
}

Label::Label(std::string value) : value_(std::move(value)) {
  if (!is_valid_label(value_)) throw ParseError("invalid label '" + value_ + "'");
}

LabelSet make_label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw DomainError("duplicate label in label set");
  return labels;
}

LabelSet parse_label_list(std::string_view text) {
  std::vector<Label> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    out.emplace_back(std::string(token));
    pos = comma + 1;
  }
  if (out.empty()) throw ParseError("empty label list");
  try {
    return make_label_set(std::move(out));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " '" + std::string(text) + "'");
  }
}

LabelSet numbered_labels(std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(std::to_string(i));
  return make_label_set(std::move(out));
}

bool contains(const LabelSet& set, const Label& label) {
  return std::binary_search(set.begin(), set.end(), label);
}

bool is_subset(const LabelSet& small, const LabelSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool are_disjoint(const LabelSet& a, const LabelSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string to_string(const LabelSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += set[i].str();
  }
  return out + "}";
}

std::string to_string(const VertexId& v) { return "v" + to_string(v.leaves); }

// ---------------------------------------------------------------------------
// Tree

struct Tree::Node {
  std::optional<Label> leaf;
  std::optional<Tree> left;
  std::optional<Tree> right;
  LabelSet leaves;
  std::string text;
  std::size_t inner = 0;
};

Tree Tree::leaf(Label label) {
  auto node = std::make_shared<Node>();
  node->text = label.str();
  node->leaves = {label};
  node->leaf = std::move(label);
  return Tree(std::move(node));
}

Tree Tree::graft(const Tree& a, const Tree& b) {
  if (!are_disjoint(a.leaves(), b.leaves()))
    throw DomainError("graft: overlapping leaf sets " + a.text() + " and " + b.text());
  const bool a_first = a.min_label() < b.min_label();
  const Tree& l = a_first ? a : b;
  const Tree& r = a_first ? b : a;
  auto node = std::make_shared<Node>();
  node->left = l;
  node->right = r;
  node->leaves = set_union(l.leaves(), r.leaves());
  node->text = "(" + l.text() + "," + r.text() + ")";
  node->inner = l.inner_count() + r.inner_count() + 1;
  return Tree(std::move(node));
}

bool Tree::is_leaf() const noexcept { return node_->leaf.has_value(); }

const Label& Tree::label() const {
  if (!is_leaf()) throw DomainError("label() on inner node " + text());
  return *node_->leaf;
}

const Tree& Tree::left() const {
  if (is_leaf()) throw DomainError("left() on leaf " + text());
  return *node_->left;
}

const Tree& Tree::right() const {
  if (is_leaf()) throw DomainError("right() on leaf " + text());
  return *node_->right;
}

const LabelSet& Tree::leaves() const noexcept { return node_->leaves; }
const std::string& Tree::text() const noexcept { return node_->text; }
std::size_t Tree::inner_count() const noexcept { return node_->inner; }

Tree Tree::relabeled(const std::map<Label, Label>& sigma) const {
  if (is_leaf()) {
    auto it = sigma.find(label());
    if (it == sigma.end()) throw DomainError("relabel: no image for " + label().str());
    return Tree::leaf(it->second);
  }
  return Tree::graft(left().relabeled(sigma), right().relabeled(sigma));
}

Tree make_leaf(std::string_view label) { return Tree::leaf(Label(std::string(label))); }
Tree graft(const Tree& a, const Tree& b) { return Tree::graft(a, b); }

// ---------------------------------------------------------------------------
// Forest

struct Forest::Data {
  std::vector<Tree> trees;
  LabelSet labels;
  std::string text;
  std::vector<VertexInfo> vertices;
};

namespace {

void collect_vertices(const Tree& t, const Label& tree_id, const std::optional<VertexId>& parent,
                      std::vector<VertexInfo>& out) {
  if (t.is_leaf()) return;
  VertexInfo info{VertexId{t.leaves()}, parent, tree_id,
                  {Branch{t.left().leaves(), t.left().is_leaf()},
                   Branch{t.right().leaves(), t.right().is_leaf()}}};
  out.push_back(info);
  collect_vertices(t.left(), tree_id, info.id, out);
  collect_vertices(t.right(), tree_id, info.id, out);
}

}  // namespace

Forest::Forest(std::vector<Tree> trees) {
  if (trees.empty()) throw DomainError("a forest needs at least one tree");
  std::sort(trees.begin(), trees.end(),
            [](const Tree& a, const Tree& b) { return a.min_label() < b.min_label(); });
  auto data = std::make_shared<Data>();
  for (const auto& t : trees) {
    if (!are_disjoint(data->labels, t.leaves()))
      throw DomainError("forest: trees with overlapping leaf sets");
    data->labels = set_union(data->labels, t.leaves());
    if (!data->text.empty()) data->text += ';';
    data->text += t.text();
    collect_vertices(t, t.min_label(), std::nullopt, data->vertices);
  }
  std::sort(data->vertices.begin(), data->vertices.end(),
            [](const VertexInfo& a, const VertexInfo& b) { return a.id < b.id; });
  data->trees = std::move(trees);
  data_ = std::move(data);
}

Forest Forest::minimum(const LabelSet& labels) {
  std::vector<Tree> trees;
  for (const auto& l : labels) trees.push_back(Tree::leaf(l));
  return Forest(std::move(trees));
}

const std::vector<Tree>& Forest::trees() const noexcept { return data_->trees; }
const LabelSet& Forest::labels() const noexcept { return data_->labels; }
const std::string& Forest::text() const noexcept { return data_->text; }
std::size_t Forest::degree() const noexcept { return data_->vertices.size(); }
const std::vector<VertexInfo>& Forest::vertices() const noexcept { return data_->vertices; }

const VertexInfo& Forest::vertex(const VertexId& id) const {
  const auto& vs = data_->vertices;
  auto it = std::lower_bound(vs.begin(), vs.end(), id,
                             [](const VertexInfo& a, const VertexId& b) { return a.id < b; });
  if (it == vs.end() || it->id != id)
    throw DomainError("no inner vertex " + to_string(id) + " in " + text());
  return *it;
}

bool Forest::has_vertex(const VertexId& id) const {
  const auto& vs = data_->vertices;
  auto it = std::lower_bound(vs.begin(), vs.end(), id,
                             [](const VertexInfo& a, const VertexId& b) { return a.id < b; });
  return it != vs.end() && it->id == id;
}

std::size_t Forest::tree_index(const Label& label) const {
  const auto& ts = data_->trees;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (contains(ts[i].leaves(), label)) return i;
  throw DomainError("label " + label.str() + " not in forest " + text());
}

Forest Forest::relabeled(const std::map<Label, Label>& sigma) const {
  std::vector<Tree> out;
  for (const auto& t : trees()) out.push_back(t.relabeled(sigma));
  return Forest(std::move(out));
}

void FormalForestSum::add(const Forest& f, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Forest disjoint_union(const Forest& a, const Forest& b) {
  if (!are_disjoint(a.labels(), b.labels()))
    throw DomainError("disjoint union of forests with overlapping labels");
  std::vector<Tree> trees = a.trees();
  trees.insert(trees.end(), b.trees().begin(), b.trees().end());
  return Forest(std::move(trees));
}

FormalForestSum vee(const Forest& a, const Forest& b) {
  if (!are_disjoint(a.labels(), b.labels()))
    throw DomainError("vee of forests with overlapping labels");
  FormalForestSum out;
  for (std::size_t i = 0; i < a.trees().size(); ++i) {
    for (std::size_t j = 0; j < b.trees().size(); ++j) {
      std::vector<Tree> trees;
      trees.push_back(Tree::graft(a.trees()[i], b.trees()[j]));
      for (std::size_t k = 0; k < a.trees().size(); ++k)
        if (k != i) trees.push_back(a.trees()[k]);
      for (std::size_t k = 0; k < b.trees().size(); ++k)
        if (k != j) trees.push_back(b.trees()[k]);
      out.add(Forest(std::move(trees)), 1);
    }
  }
  return out;
}

std::vector<VertexId> inner_vertices(const Forest& f) {
  std::vector<VertexId> out;
  out.reserve(f.degree());
  for (const auto& v : f.vertices()) out.push_back(v.id);
  return out;
}

LabelSet support(const Forest& f) {
  LabelSet out;
  for (const auto& t : f.trees())
    if (!t.is_leaf()) out = set_union(out, t.leaves());
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Subsets of `rest` as index masks; |rest| stays small at desk scale.
template <class F>
void for_each_subset(std::size_t n, F&& fn) {
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < total; ++mask) fn(mask);
}

std::pair<LabelSet, LabelSet> split_by_mask(const LabelSet& labels, std::size_t mask) {
  // Bit i of the mask selects labels[i + 1]; labels[0] always goes left.
  LabelSet in{labels.front()};
  LabelSet out;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (mask & (std::size_t{1} << (i - 1)))
      in.push_back(labels[i]);
    else
      out.push_back(labels[i]);
  }
  return {in, out};
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<LabelSet, std::vector<Tree>>& tree_cache() {
  static std::map<LabelSet, std::vector<Tree>> c;
  return c;
}

std::vector<Tree> build_trees(const LabelSet& labels) {
  if (labels.size() == 1) return {Tree::leaf(labels.front())};
  std::vector<Tree> out;
  for_each_subset(labels.size() - 1, [&](std::size_t mask) {
    auto [a, b] = split_by_mask(labels, mask);
    if (b.empty()) return;
    const auto left = enumerate_trees(a);
    const auto right = enumerate_trees(b);
    for (const auto& l : left)
      for (const auto& r : right) out.push_back(Tree::graft(l, r));
  });
  std::sort(out.begin(), out.end());
  return out;
}

void build_tree_lists(const LabelSet& labels, std::vector<Tree>& prefix,
                      std::vector<std::vector<Tree>>& out) {
  if (labels.empty()) {
    out.push_back(prefix);
    return;
  }
  for_each_subset(labels.size() - 1, [&](std::size_t mask) {
    auto [block, rest] = split_by_mask(labels, mask);
    for (const auto& t : enumerate_trees(block)) {
      prefix.push_back(t);
      build_tree_lists(rest, prefix, out);
      prefix.pop_back();
    }
  });
}

}  // namespace

std::vector<Tree> enumerate_trees(const LabelSet& labels) {
  if (labels.empty()) throw DomainError("enumerate_trees: empty label set");
  {
    std::lock_guard lock(cache_mutex());
    auto it = tree_cache().find(labels);
    if (it != tree_cache().end()) return it->second;
  }
  auto trees = build_trees(labels);
  std::lock_guard lock(cache_mutex());
  return tree_cache().emplace(labels, std::move(trees)).first->second;
}

std::vector<Forest> enumerate_forests(const LabelSet& labels, std::optional<std::size_t> degree) {
  if (labels.empty()) throw DomainError("enumerate_forests: empty label set");
  if (degree && *degree >= labels.size())
    throw DomainError("enumerate_forests: degree " + std::to_string(*degree) +
                      " out of range for " + std::to_string(labels.size()) + " labels");
  std::vector<std::vector<Tree>> lists;
  std::vector<Tree> prefix;
  build_tree_lists(labels, prefix, lists);
  std::vector<Forest> out;
  for (auto& trees : lists) {
    if (degree && trees.size() != labels.size() - *degree) continue;
    out.emplace_back(std::move(trees));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Counting

namespace {

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

Integer count_trees(std::size_t n) {
  if (n == 0) throw DomainError("count_trees: n must be positive");
  Integer out = 1;
  for (std::size_t k = 3; k + 1 < 2 * n; k += 2) out *= static_cast<unsigned long>(k);
  return out;
}

std::vector<Integer> count_by_degree(std::size_t n) {
  if (n == 0) throw DomainError("count_by_degree: n must be positive");
  // by_trees[m][t] = forests on m labels with t trees, expanding on the tree
  // holding the first label.
  std::vector<std::vector<Integer>> by_trees(n + 1, std::vector<Integer>(n + 1, 0));
  by_trees[0][0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t t = 1; t <= m; ++t)
      for (std::size_t s = 1; s <= m; ++s)
        by_trees[m][t] += binomial(m - 1, s - 1) * count_trees(s) * by_trees[m - s][t - 1];
  std::vector<Integer> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = by_trees[n][n - k];
  return out;
}

Integer count_forests(std::size_t n) {
  Integer total = 0;
  for (const auto& c : count_by_degree(n)) total += c;
  return total;
}

Tree comb_tree(const LabelSet& labels) {
  if (labels.empty()) throw DomainError("comb_tree: empty label set");
  Tree t = Tree::leaf(labels.front());
  for (std::size_t i = 1; i < labels.size(); ++i) t = Tree::graft(t, Tree::leaf(labels[i]));
  return t;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Forest forest() {
    std::vector<Tree> trees{tree()};
    skip_ws();
    while (peek() == ';') {
      ++pos_;
      trees.push_back(tree());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("unexpected character");
    LabelSet all;
    for (const auto& t : trees) {
      if (!are_disjoint(all, t.leaves())) fail("duplicate label");
      all = set_union(all, t.leaves());
    }
    return Forest(std::move(trees));
  }

  Tree lone_tree() {
    Tree t = tree();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return t;
  }

 private:
  Tree tree() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      Tree a = tree();
      expect(',');
      Tree b = tree();
      expect(')');
      if (!are_disjoint(a.leaves(), b.leaves())) fail("duplicate label");
      return Tree::graft(a, b);
    }
    const auto begin = pos_;
    while (pos_ < text_.size() && kReserved.find(text_[pos_]) == std::string_view::npos) ++pos_;
    if (begin == pos_) fail("expected a label or '('");
    return Tree::leaf(Label(std::string(text_.substr(begin, pos_ - begin))));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Tree parse_tree(std::string_view text) { return Parser(text).lone_tree(); }
Forest parse_forest(std::string_view text) { return Parser(text).forest(); }

}  // namespace bessel
