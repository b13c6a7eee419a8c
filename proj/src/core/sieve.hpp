#pragma once

#include <string>
#include <vector>

#include "core/base_change.hpp"
#include "core/category.hpp"

namespace encov {

/// Quantale-valued subfunctor of the representable at `target`:
/// values[z] <= hom[z][target], closed under precomposition.
struct Sieve {
  CategoryPtr category;
  int target = 0;
  std::vector<int> values;
};

struct SieveViolation {
  std::string law;      // "bound" or "presheaf"
  std::string witness;
};

void check_sieve_structure(const Sieve& s);

/// Empty iff `s` is a sieve: bound leq(values[z], hom[z][target]) and
/// presheaf law leq(tensor(hom[z'][z], values[z]), values[z']).
std::vector<SieveViolation> is_sieve(const Sieve& s);

Sieve maximal_sieve(const CategoryPtr& c, int x);

/// Constant-bottom values; the least subfunctor of the representable.
Sieve zero_sieve(const CategoryPtr& c, int x);

bool sieve_eq(const Sieve& a, const Sieve& b);
bool sieve_leq(const Sieve& a, const Sieve& b);
Sieve sieve_meet(const Sieve& a, const Sieve& b);

/// Whether the generalized element (g at y) maps into the representable
/// at s.target, i.e. leq(g, hom[y][target]).
bool is_admissible(const Sieve& s, int g, int y);

/// Pointwise pullback of s along (g at y): values[z] = meet(hom[z][y],
/// residuate(g, s.values[z])). Always a sieve; verified on every call.
Sieve pullback_sieve(const Sieve& s, int g, int y);

/// The alternate pointwise formula meet(s.values[z], residuate(q,
/// hom[z][y])), i.e. max{rz, V(q, d(z,y))} in distance notation and
/// min{rz, U(q, L(z,y))} in proximity notation. Kept verbatim for
/// side-by-side comparison against pullback_sieve; its output can fail
/// is_sieve, so no validity assertion is made here.
Sieve pullback_lawvere(const Sieve& s, int q, int y);
Sieve pullback_proxet(const Sieve& s, int q, int y);

/// The display form of the alternate formula for this base, used to
/// label comparison output.
std::string alternate_formula_anchor(QuantaleKind kind);

/// All sieves on x in canonical (lexicographic by value indices) order.
/// The candidate space is the product over z of the size of the downset
/// of hom[z][x]; if it exceeds `cap`, a CapExceeded error is raised.
std::vector<Sieve> enumerate_sieves(const CategoryPtr& c, int x, long long cap);

/// Pointwise application of G; lands on `image`, which must be the base
/// change of s.category along g. The result is re-verified to be a sieve.
Sieve base_change_sieve(const BaseChange& g, const Sieve& s, const CategoryPtr& image);
Sieve base_change_sieve(const BaseChange& g, const Sieve& s);

/// "(l0, l1, ...)" with one carrier label per object, in object order.
std::string values_label(const Quantale& q, const std::vector<int>& values);

}  // namespace encov
