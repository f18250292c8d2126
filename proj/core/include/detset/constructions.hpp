#pragma once

#include <cstddef>
#include <string>

#include "detset/aut.hpp"
#include "detset/caps.hpp"
#include "detset/errors.hpp"
#include "detset/families.hpp"
#include "detset/group.hpp"

namespace detset {

enum class Precondition {
  not_subgroup,
  not_normal,
  index_not_prime,
  index_not_odd,
  z_not_in_subgroup,
  z_not_central,
  z_order_not_index,
  a_in_subgroup,
  not_abelian,
  sylow_meets_subgroup,  // delegate to index_p_fixing_automorphism
  x_not_involution,
  no_odd_complement,
  set_not_in_complement,
  empty_set,
  not_determining,
};

const char* to_string(Precondition p);

class PreconditionFailed : public InvalidArgument {
 public:
  explicit PreconditionFailed(Precondition which)
      : InvalidArgument(std::string("precondition failed: ") + to_string(which)), which(which) {}
  Precondition which;
};

// For a normal subgroup M of prime index p, z in M ∩ C(G) of order p and
// a outside M: the automorphism a^i x -> (az)^i x, which fixes M pointwise.
Automorphism index_p_fixing_automorphism(const FiniteGroup& g, const ElementSubset& m, Element a,
                                         Element z);

// For abelian G and a subgroup M of odd prime index p meeting the Sylow
// p-subgroup P trivially: the map xz -> x^-1 z (x in P, z in M).
// Throws PreconditionFailed(sylow_meets_subgroup) when P ∩ M is nontrivial.
Automorphism odd_index_abelian_automorphism(const FiniteGroup& g, const ElementSubset& m);

// For abelian G = <x> x M with x an involution, |M| odd and D ⊆ M
// determining: returns xD after checking it is determining and that <D> is a
// proper subgroup of <xD>.
ElementSubset shift_determining_set(const FiniteGroup& g, Element x, const ElementSubset& d);

struct TightCover {
  GroupPtr base;
  std::size_t l = 0;  // gamma(base)
  std::size_t p = 0;  // smallest prime above |base|
  DirectProduct product;  // Z_p^l x base
  GroupHom embedding;     // base -> cover

  const GroupPtr& cover() const { return product.group(); }
};

// Throws CapExceeded when p^l |H| exceeds caps.max_order.
TightCover tight_cover(const GroupPtr& h, const Caps& caps = {});

// The quotient of the cover by its Z_p^l factor, checked isomorphic to the base.
GroupPtr tight_cover_recover(const TightCover& c);

}  // namespace detset
