#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "core/report.hpp"
#include "core/sieve.hpp"

namespace encov {

/// Per-object families of sieves, stored as canonical value maps.
/// A checked coverage satisfies (T1) maximal sieves present and
/// (T2) stability of membership under pullback along every admissible
/// carrier element; a topology additionally satisfies (T3) saturation.
struct Coverage {
  CategoryPtr category;
  std::vector<std::set<std::vector<int>>> families;
};

struct CoverageReport {
  CheckStatus members = CheckStatus::Pass;
  std::string members_witness;
  CheckStatus t1 = CheckStatus::Pass;
  std::string t1_witness;
  CheckStatus t2 = CheckStatus::Pass;
  std::string t2_witness;
  CheckStatus t3 = CheckStatus::NotChecked;
  std::string t3_detail;
};

void check_coverage_structure(const Coverage& j);

Coverage make_indiscrete(const CategoryPtr& c);
Coverage make_discrete(const CategoryPtr& c, long long sieve_cap);

/// T1 and T2 always; T3 (quantified over the full sieve universe) only
/// when `with_t3`. If sieve enumeration trips the cap, T3 is reported
/// as not checked with the reason, never as passed.
CoverageReport check_coverage(const Coverage& j, long long sieve_cap, bool with_t3);

bool coverage_eq(const Coverage& j, const Coverage& k);
bool refinement_leq(const Coverage& j, const Coverage& k);
Coverage coverage_meet(const std::vector<Coverage>& js);

/// Smallest T1+T2-closed family containing the inputs: union, plus
/// maximal sieves, saturated under pullbacks of members. `cap` bounds
/// the total number of member sieves the saturation may accumulate.
Coverage coverage_join_closure(const std::vector<Coverage>& js, long long cap);

/// Additionally T3-saturates to a fixpoint: smallest topology containing
/// j. Needs the full sieve universe, so the sieve enumeration cap applies.
Coverage topology_closure(const Coverage& j, long long cap);

/// Image family G(J) over base_change_category(g, c). Requires the
/// faithful and conservative flags on g. The image is NOT guaranteed to
/// satisfy T2 when the left adjoint of g fails strong monoidality (a
/// truncation artifact); callers decide how to report that, so no T2
/// assertion is made here.
Coverage base_change_coverage(const BaseChange& g, const Coverage& j, const CategoryPtr& image);
Coverage base_change_coverage(const BaseChange& g, const Coverage& j);

/// Shared data for mask-based coverage enumeration: the canonical sieve
/// list per object, the index of the maximal sieve, and for each sieve
/// the per-object bitmask of sieves its admissible pullbacks land on.
/// Mask enumeration requires at most 64 sieves per object.
struct CoverageUniverse {
  CategoryPtr category;
  std::vector<std::vector<Sieve>> sieves;
  std::vector<int> maximal_index;
  std::vector<std::vector<std::vector<uint64_t>>> req;
};

CoverageUniverse build_coverage_universe(const CategoryPtr& c, long long sieve_cap);

/// All T1+T2 families as per-object bitmasks over u.sieves, in odometer
/// order. The candidate space is prod_x 2^(#sieves(x)-1) (T1 pins the
/// maximal bit); if it exceeds `cap`, CapExceeded.
std::vector<std::vector<uint64_t>> enumerate_coverage_masks(const CoverageUniverse& u,
                                                            long long cap);

Coverage coverage_from_masks(const CoverageUniverse& u, const std::vector<uint64_t>& masks);

std::vector<Coverage> enumerate_coverages(const CategoryPtr& c, long long cap);

}  // namespace encov
