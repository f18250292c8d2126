#include "detset/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detset/errors.hpp"
#include "detset/structure.hpp"

namespace detset {

namespace {

void check_order(std::size_t order, const Caps& caps, const std::string& what) {
  if (order > caps.max_order)
    throw CapExceeded(what + " has order " + std::to_string(order) + " above cap " +
                      std::to_string(caps.max_order));
}

// Order of a product, saturating instead of overflowing.
std::size_t checked_product(std::span<const std::size_t> factors) {
  std::size_t total = 1;
  for (std::size_t f : factors) {
    if (f != 0 && total > static_cast<std::size_t>(-1) / f) return static_cast<std::size_t>(-1);
    total *= f;
  }
  return total;
}

std::string perm_label(const std::vector<int>& perm) {
  std::string out;
  const bool compact = perm.size() <= 9;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(perm[i] + 1);
  }
  return compact ? out : "[" + out + "]";
}

FiniteGroup permutation_group(std::size_t n, bool even_only, std::string descriptor,
                              const Caps& caps) {
  std::size_t total = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    total *= k;
    if (total > caps.max_order * 2) break;
  }
  if (even_only && n >= 2) total /= 2;
  check_order(total, caps, descriptor);

  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      if (inversions % 2) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<int> tmp(n);
  // (a*b)(x) = a(b(x)): apply b first.
  return tabulate(
      perms.size(),
      [&](std::size_t a, std::size_t b) {
        for (std::size_t x = 0; x < n; ++x) tmp[x] = perms[a][perms[b][x]];
        return index.at(tmp);
      },
      [&](std::size_t i) { return perm_label(perms[i]); }, std::move(descriptor),
      caps.assoc_check);
}

}  // namespace

FiniteGroup cyclic(std::size_t n, const Caps& caps) {
  if (n == 0) throw InvalidArgument("Z(n) needs n >= 1");
  const std::string d = "Z(" + std::to_string(n) + ")";
  check_order(n, caps, d);
  return tabulate(
      n, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      [](std::size_t i) { return std::to_string(i); }, d, caps.assoc_check);
}

FiniteGroup dihedral(std::size_t n, const Caps& caps) {
  if (n < 1) throw InvalidArgument("D(n) needs n >= 1");
  const std::string d = "D(" + std::to_string(n) + ")";
  check_order(2 * n, caps, d);
  // index = i + n*j stands for s^j r^i; r^i s = s r^-i.
  return tabulate(
      2 * n,
      [n](std::size_t a, std::size_t b) {
        const std::size_t i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
        // s^j1 r^i1 s^j2 r^i2 = s^(j1+j2) r^(±i1 + i2)
        const std::size_t i = j2 ? (n - i1 + i2) % n : (i1 + i2) % n;
        return i + n * ((j1 + j2) % 2);
      },
      [n](std::size_t x) {
        const std::size_t i = x % n, j = x / n;
        std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
        if (j == 0) return r.empty() ? std::string("1") : r;
        return "s" + r;
      },
      d, caps.assoc_check);
}

FiniteGroup symmetric(std::size_t n, const Caps& caps) {
  if (n < 1) throw InvalidArgument("S(n) needs n >= 1");
  return permutation_group(n, false, "S(" + std::to_string(n) + ")", caps);
}

FiniteGroup alternating(std::size_t n, const Caps& caps) {
  if (n < 1) throw InvalidArgument("A(n) needs n >= 1");
  return permutation_group(n, true, "A(" + std::to_string(n) + ")", caps);
}

FiniteGroup dicyclic(std::size_t n, const Caps& caps) {
  if (n < 8 || n % 4 != 0) throw InvalidArgument("Q(n) needs n = 4m with m >= 2");
  const std::string d = "Q(" + std::to_string(n) + ")";
  check_order(n, caps, d);
  const std::size_t m = n / 4, h = n / 2;  // a has order 2m, x^2 = a^m
  // index = i + 2m*j stands for a^i x^j; x a = a^-1 x.
  return tabulate(
      n,
      [m, h](std::size_t u, std::size_t v) {
        const std::size_t i1 = u % h, j1 = u / h, i2 = v % h, j2 = v / h;
        if (j1 == 0) return (i1 + i2) % h + h * j2;
        if (j2 == 0) return (i1 + h - i2) % h + h;
        return (i1 + h - i2 + m) % h;
      },
      [h, n](std::size_t u) {
        const std::size_t i = u % h, j = u / h;
        if (n == 8) {
          static const char* q8[] = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
          return std::string(q8[i + 4 * j]);
        }
        std::string a = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
        if (j == 0) return a.empty() ? std::string("1") : a;
        return a + "x";
      },
      d, caps.assoc_check);
}

FiniteGroup abelian(std::span<const std::size_t> factor_orders, const Caps& caps) {
  if (factor_orders.empty()) throw InvalidArgument("abelian needs at least one factor");
  std::string d;
  for (std::size_t f : factor_orders) {
    if (f == 0) throw InvalidArgument("abelian factor orders must be positive");
    if (!d.empty()) d += " x ";
    d += "Z(" + std::to_string(f) + ")";
  }
  const std::size_t order = checked_product(factor_orders);
  check_order(order, caps, d);
  std::vector<GroupPtr> parts;
  for (std::size_t f : factor_orders) parts.push_back(share(cyclic(f, caps)));
  return DirectProduct(std::move(parts), caps, d).group()->renamed(d);
}

FiniteGroup elementary_abelian(std::size_t p, std::size_t k, const Caps& caps) {
  if (!is_prime(p)) throw InvalidArgument("EA(p,k) needs p prime");
  if (k < 1) throw InvalidArgument("EA(p,k) needs k >= 1");
  std::vector<std::size_t> f(k, p);
  const std::string d = "EA(" + std::to_string(p) + "," + std::to_string(k) + ")";
  check_order(checked_product(f), caps, d);
  return abelian(f, caps).renamed(d);
}

FiniteGroup unitriangular(std::size_t n, std::size_t p, const Caps& caps) {
  if (n < 2) throw InvalidArgument("U(n,p) needs n >= 2");
  if (!is_prime(p)) throw InvalidArgument("U(n,p) needs p prime");
  const std::string d = "U(" + std::to_string(n) + "," + std::to_string(p) + ")";
  const std::size_t slots = n * (n - 1) / 2;
  std::vector<std::size_t> radix(slots, p);
  check_order(checked_product(radix), caps, d);
  std::size_t order = 1;
  for (std::size_t s = 0; s < slots; ++s) order *= p;

  // Above-diagonal entries in row-major order, first slot most significant.
  auto decode = [&](std::size_t x) {
    std::vector<std::size_t> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    std::size_t rest = x;
    for (std::size_t i = n; i-- > 0;)
      for (std::size_t j = n; j-- > i + 1;) {
        m[i * n + j] = rest % p;
        rest /= p;
      }
    return m;
  };
  auto encode = [&](const std::vector<std::size_t>& m) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) x = x * p + m[i * n + j];
    return x;
  };
  std::vector<std::vector<std::size_t>> mats(order);
  for (std::size_t x = 0; x < order; ++x) mats[x] = decode(x);
  std::vector<std::size_t> prod(n * n);
  return tabulate(
      order,
      [&](std::size_t a, std::size_t b) {
        const auto& A = mats[a];
        const auto& B = mats[b];
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            std::size_t s = 0;
            for (std::size_t k = i; k <= j; ++k) s += A[i * n + k] * B[k * n + j];
            prod[i * n + j] = s % p;
          }
        return encode(prod);
      },
      [&](std::size_t x) {
        std::string out;
        for (std::size_t i = 0; i < n; ++i) {
          if (i) out += ';';
          for (std::size_t j = 0; j < n; ++j) {
            if (j) out += ',';
            out += std::to_string(mats[x][i * n + j]);
          }
        }
        return out;
      },
      d, caps.assoc_check);
}

FiniteGroup construct(std::string_view family, std::span<const std::size_t> params,
                      const Caps& caps) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InvalidArgument(std::string(family) + " expects " + std::to_string(count) +
                            " parameter(s)");
  };
  if (family == "cyclic") return need(1), cyclic(params[0], caps);
  if (family == "dihedral") return need(1), dihedral(params[0], caps);
  if (family == "symmetric") return need(1), symmetric(params[0], caps);
  if (family == "alternating") return need(1), alternating(params[0], caps);
  if (family == "quaternion") {
    if (!params.empty() && !(params.size() == 1 && params[0] == 8))
      throw InvalidArgument("quaternion takes no parameter or 8");
    return dicyclic(8, caps);
  }
  if (family == "dicyclic") return need(1), dicyclic(params[0], caps);
  if (family == "elementary_abelian") return need(2), elementary_abelian(params[0], params[1], caps);
  if (family == "abelian") return abelian(params, caps);
  if (family == "unitriangular") return need(2), unitriangular(params[0], params[1], caps);
  throw InvalidArgument("unknown group family '" + std::string(family) + "'");
}

DirectProduct::DirectProduct(std::vector<GroupPtr> factors, const Caps& caps,
                             std::string descriptor)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidArgument("direct product needs at least one factor");
  std::vector<std::size_t> orders;
  for (const auto& f : factors_) orders.push_back(f->order());
  if (descriptor.empty()) {
    for (const auto& f : factors_) {
      if (!descriptor.empty()) descriptor += " x ";
      const bool wrap = f->descriptor().find(" x ") != std::string::npos;
      descriptor += wrap ? "(" + f->descriptor() + ")" : f->descriptor();
    }
  }
  const std::size_t order = checked_product(orders);
  check_order(order, caps, descriptor);

  const std::size_t m = factors_.size();
  strides_.assign(m, 1);
  for (std::size_t i = m - 1; i-- > 0;) strides_[i] = strides_[i + 1] * orders[i + 1];

  std::vector<Element> table(order * order);
  std::vector<Element> a(m), b(m);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t i = 0; i < m; ++i) a[i] = component(static_cast<Element>(x), i);
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t z = 0;
      for (std::size_t i = 0; i < m; ++i)
        z += factors_[i]->mul(a[i], component(static_cast<Element>(y), i)) * strides_[i];
      table[x * order + y] = static_cast<Element>(z);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::string l = "(";
    for (std::size_t i = 0; i < m; ++i) {
      if (i) l += ',';
      l += factors_[i]->label(component(static_cast<Element>(x), i));
    }
    labels.push_back(l + ")");
  }
  // Associativity is inherited from the factors.
  group_ = share(FiniteGroup(order, std::move(table), std::move(labels), std::move(descriptor), 0));
}

std::vector<Element> DirectProduct::decompose(Element x) const {
  std::vector<Element> parts(factors_.size());
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = component(x, i);
  return parts;
}

Element DirectProduct::compose(std::span<const Element> parts) const {
  if (parts.size() != factors_.size()) throw InvalidArgument("wrong number of components");
  std::size_t x = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] >= factors_[i]->order()) throw InvalidArgument("component out of range");
    x += parts[i] * strides_[i];
  }
  return static_cast<Element>(x);
}

GroupHom DirectProduct::embedding(std::size_t i) const {
  std::vector<Element> image(factors_.at(i)->order());
  for (Element h = 0; h < image.size(); ++h) image[h] = static_cast<Element>(h * strides_[i]);
  return GroupHom{factors_[i], group_, std::move(image)};
}

GroupHom DirectProduct::projection(std::size_t i) const {
  std::vector<Element> image(group_->order());
  for (Element x = 0; x < image.size(); ++x) image[x] = component(x, i);
  return GroupHom{group_, factors_.at(i), std::move(image)};
}

}  // namespace detset
