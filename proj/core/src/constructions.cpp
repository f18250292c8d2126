#include "detset/constructions.hpp"

#include "detset/detgen.hpp"
#include "detset/structure.hpp"

namespace detset {

const char* to_string(Precondition p) {
  switch (p) {
    case Precondition::not_subgroup: return "not a subgroup";
    case Precondition::not_normal: return "subgroup is not normal";
    case Precondition::index_not_prime: return "index is not prime";
    case Precondition::index_not_odd: return "index is not an odd prime";
    case Precondition::z_not_in_subgroup: return "z is not in the subgroup";
    case Precondition::z_not_central: return "z is not central";
    case Precondition::z_order_not_index: return "order of z differs from the index";
    case Precondition::a_in_subgroup: return "a lies in the subgroup";
    case Precondition::not_abelian: return "group is not abelian";
    case Precondition::sylow_meets_subgroup:
      return "Sylow subgroup meets the subgroup; use the index-p construction";
    case Precondition::x_not_involution: return "x is not an involution";
    case Precondition::no_odd_complement: return "group is not <x> times an odd-order subgroup";
    case Precondition::set_not_in_complement: return "set is not inside the odd-order complement";
    case Precondition::empty_set: return "set is empty";
    case Precondition::not_determining: return "set is not determining";
  }
  return "unknown";
}

namespace {

void require(bool ok, Precondition p) {
  if (!ok) throw PreconditionFailed(p);
}

// Shared post-checks for the witness builders.
Automorphism verified(const FiniteGroup& g, std::vector<Element> image, const ElementSubset& m) {
  Automorphism a{std::move(image)};
  if (!is_automorphism(g, a.image)) throw Error("constructed map is not an automorphism");
  if (!a.fixes(m)) throw Error("constructed automorphism moves the subgroup");
  if (a.is_identity()) throw Error("constructed automorphism is the identity");
  return a;
}

std::size_t subgroup_index(const FiniteGroup& g, const ElementSubset& m) {
  require(!m.empty() && is_subgroup(g, m), Precondition::not_subgroup);
  return g.order() / m.size();
}

}  // namespace

Automorphism index_p_fixing_automorphism(const FiniteGroup& g, const ElementSubset& m, Element a,
                                         Element z) {
  const std::size_t p = subgroup_index(g, m);
  require(is_normal(g, m), Precondition::not_normal);
  require(is_prime(p), Precondition::index_not_prime);
  require(m.contains(z), Precondition::z_not_in_subgroup);
  require(center(g).contains(z), Precondition::z_not_central);
  require(element_order(g, z) == p, Precondition::z_order_not_index);
  require(!m.contains(a), Precondition::a_in_subgroup);

  std::vector<Element> image(g.order());
  const Element az = g.mul(a, z);
  Element ai = kIdentity, azi = kIdentity;
  for (std::size_t i = 0; i < p; ++i) {
    for (Element x : m) image[g.mul(ai, x)] = g.mul(azi, x);
    ai = g.mul(ai, a);
    azi = g.mul(azi, az);
  }
  return verified(g, std::move(image), m);
}

Automorphism odd_index_abelian_automorphism(const FiniteGroup& g, const ElementSubset& m) {
  require(g.is_abelian(), Precondition::not_abelian);
  const std::size_t p = subgroup_index(g, m);
  require(is_prime(p), Precondition::index_not_prime);
  require(p % 2 == 1, Precondition::index_not_odd);

  std::vector<Element> sylow;
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t o = element_order(g, x);
    while (o % p == 0) o /= p;
    if (o == 1) sylow.push_back(x);
  }
  for (Element x : sylow)
    require(x == kIdentity || !m.contains(x), Precondition::sylow_meets_subgroup);

  std::vector<Element> image(g.order());
  for (Element x : sylow)
    for (Element y : m) image[g.mul(x, y)] = g.mul(g.inv(x), y);
  return verified(g, std::move(image), m);
}

ElementSubset shift_determining_set(const FiniteGroup& g, Element x, const ElementSubset& d) {
  require(g.is_abelian(), Precondition::not_abelian);
  require(element_order(g, x) == 2, Precondition::x_not_involution);
  std::vector<Element> odd;
  for (Element y = 0; y < g.order(); ++y)
    if (element_order(g, y) % 2 == 1) odd.push_back(y);
  require(odd.size() * 2 == g.order(), Precondition::no_odd_complement);
  const ElementSubset m(odd);
  require(!d.empty(), Precondition::empty_set);
  require(d.is_subset_of(m), Precondition::set_not_in_complement);
  require(is_determining_set(g, d), Precondition::not_determining);

  std::vector<Element> shifted;
  for (Element y : d) shifted.push_back(g.mul(x, y));
  ElementSubset out(shifted);
  if (!is_determining_set(g, out)) throw Error("shifted set is not determining");
  const ElementSubset before = closure(g, d);
  const ElementSubset after = closure(g, out);
  if (!(before.is_subset_of(after) && before.size() < after.size()))
    throw Error("shifted set does not enlarge the generated subgroup");
  return out;
}

TightCover tight_cover(const GroupPtr& h, const Caps& caps) {
  const std::size_t l = generating_number(h, caps).gamma;
  const std::size_t p = next_prime_above(h->order());
  std::size_t order = h->order();
  for (std::size_t i = 0; i < l; ++i) {
    order *= p;
    if (order > caps.max_order)
      throw CapExceeded("tight cover of " + h->descriptor() + " exceeds order cap");
  }
  GroupPtr top = share(l == 0 ? cyclic(1, caps) : elementary_abelian(p, l, caps));
  DirectProduct product({top, h}, caps);
  GroupHom embedding = product.embedding(1);
  return TightCover{h, l, p, std::move(product), std::move(embedding)};
}

GroupPtr tight_cover_recover(const TightCover& c) {
  const ElementSubset top = c.product.embedding(0).image_set();
  Quotient q = quotient(c.cover(), top);
  if (!isomorphic(q.group, c.base))
    throw Error("quotient of the tight cover is not isomorphic to its base");
  return q.group;
}

}  // namespace detset
