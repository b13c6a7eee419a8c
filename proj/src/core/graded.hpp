#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/report.hpp"

namespace encov {

/// Exponent pair (a, b) standing for x^a y^b in k[x,y].
using Monomial = std::pair<int, int>;

/// A monomial ideal, stored as the antichain of its minimal generators
/// in lexicographic order. Empty = zero ideal, {(0,0)} = unit ideal.
struct MonomialIdeal {
  std::vector<Monomial> gens;

  bool operator==(const MonomialIdeal& o) const { return gens == o.gens; }
  bool operator!=(const MonomialIdeal& o) const { return gens != o.gens; }
  bool operator<(const MonomialIdeal& o) const { return gens < o.gens; }
};

/// Sorts and drops non-minimal generators; rejects negative exponents.
MonomialIdeal make_monomial_ideal(std::vector<Monomial> gens);
MonomialIdeal unit_monomial_ideal();
MonomialIdeal zero_monomial_ideal();

bool contains_monomial(const MonomialIdeal& i, Monomial e);
/// a is contained in b (every generator of a lies in b).
bool monomial_ideal_leq(const MonomialIdeal& a, const MonomialIdeal& b);

/// (i : x^a y^b), generated by the clamped differences of the generators.
MonomialIdeal colon_monomial(const MonomialIdeal& i, Monomial e);

/// "1", "x", "x^2 y", ... and "<x^3, y>" / "<1>" / "<0>".
std::string monomial_label(Monomial e);
std::string monomial_ideal_label(const MonomialIdeal& i);
std::optional<Monomial> parse_monomial(const std::string& text);

/// Membership predicate family for ideals, named so instance files can
/// refer to it. "H_powers_of" with variable x stands for the multiplicative
/// set {1, x, x^2, ...}.
struct GradedTopologySpec {
  std::string predicate = "H_powers_of";
  char variable = 'x';
};

/// Bounded reading of "(I : a) meets S for every homogeneous a": the
/// quantifier runs over monomials of total degree <= d_max and the witness
/// power is capped at d_max. On ideals whose generators fit the degree
/// bound this agrees with "some pure power of the variable lies in I",
/// which the staircase shortcut below computes directly.
bool h_s_member(const MonomialIdeal& i, const GradedTopologySpec& s, int d_max);
bool h_s_member_staircase(const MonomialIdeal& i, const GradedTopologySpec& s, int d_max);

using IdealPredicate = std::function<bool(const MonomialIdeal&)>;
IdealPredicate graded_membership(const GradedTopologySpec& s, int d_max);

struct GradedGabrielReport {
  CheckStatus g1 = CheckStatus::Pass;  // upward closure
  std::string g1_witness;
  CheckStatus g2 = CheckStatus::Pass;  // colon stability
  std::string g2_witness;
  CheckStatus g3 = CheckStatus::Pass;  // saturation
  std::string g3_witness;
  size_t sample_size = 0;  // after closing under the triggered colons
  bool sample_grew = false;
  std::string note;
  bool all_pass() const;
};

/// Checks (G1)-(G3) for the membership predicate over the sample, with
/// homogeneous-element quantifiers truncated at total degree d_max. The
/// sample is first closed under all the colon operations the check
/// triggers; growth is reported. Saturation is quantified over monomial
/// ideals only, which the report notes.
GradedGabrielReport check_graded_gabriel(const IdealPredicate& member,
                                         std::vector<MonomialIdeal> sample, int d_max,
                                         long long cap);

/// Degree-zero part of the sieve, as the image under hom(k, -): the unit
/// ideal has degree-zero part k, every proper ideal has 0.
std::string degree_zero_base_change(const MonomialIdeal& i);

struct CounterexampleReport {
  int d_max = 0;
  size_t sample_size = 0;
  MonomialIdeal witness;  // in H_S, not in H_T
  bool witness_in_s = false;
  bool witness_in_t = false;
  size_t s_count = 0;
  size_t t_count = 0;
  bool families_differ = false;
  std::vector<std::string> image_s;  // sorted, distinct
  std::vector<std::string> image_t;
  bool images_equal = false;
  MonomialIdeal collision_a;  // distinct members with the same image
  MonomialIdeal collision_b;
};

/// S = powers of x, T = powers of y over the grid sample: the two
/// families differ (witness <x^d_max>) yet both map onto {k, 0} under
/// the degree-zero base change.
CounterexampleReport reproduce_counterexample(int d_max);

/// All monomial ideals whose minimal generators lie in {0..d}^2, i.e.
/// the upward-closed subsets of the (d+1) x (d+1) exponent grid. There
/// are binomial(2d+2, d+1) of them.
std::vector<MonomialIdeal> enumerate_grid_ideals(int d);

}  // namespace encov
