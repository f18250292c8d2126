#include "detset/group.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "detset/errors.hpp"

namespace detset {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> cayley,
                         std::vector<std::string> labels, std::string descriptor,
                         std::size_t assoc_check_cap)
    : order_(order),
      table_(std::move(cayley)),
      inverse_(order, 0),
      labels_(std::move(labels)),
      descriptor_(std::move(descriptor)) {
  const std::size_t n = order_;
  if (n == 0) throw InvalidArgument("group order must be positive");
  if (table_.size() != n * n) throw InvalidArgument("cayley table has wrong size");
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != n) throw InvalidArgument("label count differs from order");

  for (Element x : table_)
    if (x >= n) throw InvalidArgument("cayley entry out of range");
  for (std::size_t i = 0; i < n; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i)
      throw InvalidArgument("index 0 is not the identity");
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      Element v = mul(i, j);
      if (seen[v]) throw InvalidArgument("row " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
      if (v == 0) inverse_[i] = static_cast<Element>(j);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      Element v = mul(i, j);
      if (seen[v]) throw InvalidArgument("column " + std::to_string(j) + " is not a permutation");
      seen[v] = 1;
    }
  }
  if (n <= assoc_check_cap) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Element ij = mul(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (mul(ij, k) != mul(i, mul(j, k)))
            throw InvalidArgument("multiplication is not associative");
      }
  }
  std::set<std::string_view> distinct(labels_.begin(), labels_.end());
  if (distinct.size() != n) throw InvalidArgument("element labels are not distinct");
}

Element FiniteGroup::pow(Element a, long long k) const {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Element> FiniteGroup::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < order_; ++i)
    if (labels_[i] == label) return static_cast<Element>(i);
  return std::nullopt;
}

FiniteGroup FiniteGroup::renamed(std::string descriptor) const {
  FiniteGroup copy = *this;
  copy.descriptor_ = std::move(descriptor);
  return copy;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

ElementSubset::ElementSubset(std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ElementSubset ElementSubset::all(std::size_t order) {
  std::vector<Element> m(order);
  for (std::size_t i = 0; i < order; ++i) m[i] = static_cast<Element>(i);
  return ElementSubset(std::move(m));
}

bool ElementSubset::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ElementSubset::is_subset_of(const ElementSubset& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool GroupHom::is_homomorphism() const {
  const std::size_t n = domain->order();
  if (image.size() != n) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (image[domain->mul(x, y)] != codomain->mul(image[x], image[y])) return false;
  return true;
}

bool GroupHom::is_injective() const {
  std::vector<char> seen(codomain->order());
  for (Element v : image) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool GroupHom::is_surjective() const { return image_set().size() == codomain->order(); }

ElementSubset GroupHom::kernel() const {
  std::vector<Element> k;
  for (Element x = 0; x < image.size(); ++x)
    if (image[x] == kIdentity) k.push_back(x);
  return ElementSubset(std::move(k));
}

ElementSubset GroupHom::image_set() const { return ElementSubset(image); }

void write_cayley(std::ostream& out, const FiniteGroup& g, bool with_labels) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (Element i = 0; i < n; ++i) {
    auto row = g.row(i);
    for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  if (with_labels) {
    out << "labels\n";
    for (const auto& l : g.labels()) out << l << '\n';
  }
}

FiniteGroup read_cayley(std::istream& in, std::string descriptor, std::size_t assoc_check_cap) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw InvalidArgument("cayley input is empty");
  std::size_t n = 0;
  {
    std::istringstream head(line);
    if (!(head >> n) || n == 0) throw InvalidArgument("cayley input: bad order line");
  }
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line()) throw InvalidArgument("cayley input: missing table rows");
    std::istringstream row(line);
    long long v;
    std::size_t count = 0;
    while (row >> v) {
      if (v < 0) throw InvalidArgument("cayley input: negative index");
      table.push_back(static_cast<Element>(v));
      ++count;
    }
    if (count != n) throw InvalidArgument("cayley input: row " + std::to_string(i) + " has wrong length");
  }
  std::vector<std::string> labels;
  if (next_line()) {
    if (line != "labels") throw InvalidArgument("cayley input: unexpected trailing data");
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::getline(in, line)) throw InvalidArgument("cayley input: missing labels");
      if (!line.empty() && line.back() == '\r') line.pop_back();
      labels.push_back(line);
    }
  }
  return FiniteGroup(n, std::move(table), std::move(labels), std::move(descriptor),
                     assoc_check_cap);
}

}  // namespace detset
