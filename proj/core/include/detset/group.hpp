#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace detset {

// Index of a group element in its Cayley table. Index 0 is always the identity.
using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

// A concrete finite group given by its full multiplication table.
// Immutable after construction.
class FiniteGroup {
 public:
  // Validates every table invariant; associativity is checked exhaustively
  // only when the order is at most `assoc_check_cap`.
  FiniteGroup(std::size_t order, std::vector<Element> cayley,
              std::vector<std::string> labels, std::string descriptor,
              std::size_t assoc_check_cap = 256);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, long long k) const;
  // g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inverse_[g]); }
  // x^-1 y^-1 x y
  Element commutator(Element x, Element y) const {
    return mul(mul(inverse_[x], inverse_[y]), mul(x, y));
  }

  std::span<const Element> row(Element a) const {
    return {table_.data() + a * order_, order_};
  }
  std::span<const Element> table() const { return table_; }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find_label(std::string_view label) const;

  const std::string& descriptor() const { return descriptor_; }
  FiniteGroup renamed(std::string descriptor) const;

  bool is_abelian() const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::string descriptor_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

// Sorted, duplicate-free list of element indices.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(std::vector<Element> members);
  ElementSubset(std::initializer_list<Element> members)
      : ElementSubset(std::vector<Element>(members)) {}

  static ElementSubset all(std::size_t order);

  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Element x) const;
  bool is_subset_of(const ElementSubset& other) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;
  friend auto operator<=>(const ElementSubset&, const ElementSubset&) = default;

 private:
  std::vector<Element> members_;
};

// Homomorphism given by the image of every domain element.
struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<Element> image;

  Element operator()(Element x) const { return image[x]; }
  // Exhaustive |domain|^2 check.
  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_surjective() const;
  ElementSubset kernel() const;
  ElementSubset image_set() const;
};

// Builds a group from a list of abstract elements (identity first) and a
// multiplication that returns the product's index directly.
template <class MulIndex, class LabelFn>
FiniteGroup tabulate(std::size_t order, MulIndex mul_index, LabelFn label_of,
                     std::string descriptor, std::size_t assoc_check_cap = 256) {
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      table[i * order + j] = static_cast<Element>(mul_index(i, j));
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i) labels.push_back(label_of(i));
  return FiniteGroup(order, std::move(table), std::move(labels),
                     std::move(descriptor), assoc_check_cap);
}

// Cayley table text format:
//   n
//   n lines of n space-separated indices
//   optional: a line "labels" followed by n lines, one label per line
void write_cayley(std::ostream& out, const FiniteGroup& g, bool with_labels = true);
FiniteGroup read_cayley(std::istream& in, std::string descriptor = "table",
                        std::size_t assoc_check_cap = 256);

}  // namespace detset
