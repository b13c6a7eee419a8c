#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/coverage.hpp"

namespace encov {

/// Value map subject only to the presheaf law
/// leq(tensor(hom[z'][z], values[z]), values[z']); no representable bound.
struct Presheaf {
  CategoryPtr category;
  std::vector<int> values;
};

void check_presheaf_structure(const Presheaf& p);
std::vector<SieveViolation> check_presheaf(const Presheaf& p);

bool presheaf_eq(const Presheaf& a, const Presheaf& b);
bool presheaf_leq(const Presheaf& a, const Presheaf& b);

Presheaf constant_presheaf(const CategoryPtr& c, int value);

/// All presheaves in canonical (lexicographic by value indices) order;
/// candidate space carrier^objects is guarded by `cap`.
std::vector<Presheaf> enumerate_presheaves(const CategoryPtr& c, long long cap);

/// Pointwise application of G. Lax monoidality makes the result a
/// presheaf again; verified on every call.
Presheaf presheaf_base_change(const BaseChange& g, const Presheaf& p, const CategoryPtr& image);
Presheaf presheaf_base_change(const BaseChange& g, const Presheaf& p);

/// Sheaf condition for the family j: for every x, R in J(x) and carrier
/// element g, if tensor(g, R(z)) <= P(z) for all z then tensor(g,
/// hom[z][x]) <= P(z) for all z. Returns a witness triple when it fails.
/// Accepts any sieve family; sheaf-theoretic guarantees only hold for
/// checked coverages.
std::optional<std::string> is_sheaf(const Presheaf& p, const Coverage& j);

/// One step of the plus construction: (sigma p)(x) = join over R in J(x)
/// of meet over z of residuate(R(z), p(z)). Join over an empty family is
/// the bottom element.
Presheaf sigma_once(const Presheaf& p, const Coverage& j);

/// sigma applied twice; the reflector onto sheaves for a topology.
Presheaf sheafify(const Presheaf& p, const Coverage& j);

/// Independent reference for sheafify: the pointwise meet of every
/// enumerated sheaf above p (the meet of sheaves is a sheaf, and the
/// constant-top presheaf is one, so this is total).
Presheaf least_sheaf_above(const Presheaf& p, const Coverage& j, long long cap);

/// Closure of a sieve inside its representable: meet of the hom column
/// with the sheafification of the sieve's value map.
Sieve closure_of_subpresheaf(const Sieve& r, const Coverage& j);

/// Whether the closure equals the full representable.
bool is_dense(const Sieve& r, const Coverage& j);

struct CommuteResult {
  Presheaf via_base_change;  // G applied to sheafify(p, j)
  Presheaf via_sheafify;     // sheafify of (G p) for the image family of j
  bool equal = false;
  bool base_change_route_leq = false;  // via_base_change <= via_sheafify
  bool sheafify_route_leq = false;     // via_sheafify <= via_base_change
};

/// Computes both routes around the base-change/sheafification square.
/// Requires the faithful, conservative and right-adjoint flags on g;
/// whether equality is asserted or merely reported is the caller's
/// decision (it is guaranteed only when g is additionally full).
CommuteResult check_sheafification_commutes(const BaseChange& g, const Presheaf& p,
                                            const Coverage& j, const CategoryPtr& image);

}  // namespace encov
