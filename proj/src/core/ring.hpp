#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/report.hpp"

namespace encov {

struct RingData {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 0;
};

struct RingViolation {
  std::string law;
  std::string witness;
};

void check_ring_structure(const RingData& data);

/// Abelian group under add, associative unital mul, two-sided
/// distributivity. Exhaustive over the carrier.
std::vector<RingViolation> check_ring_axioms(const RingData& data);

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing {
 public:
  static RingPtr make(RingData data);

  const std::string& name() const { return data_.name; }
  int size() const { return static_cast<int>(data_.labels.size()); }
  int add(int a, int b) const { return data_.add[a][b]; }
  int mul(int a, int b) const { return data_.mul[a][b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int zero() const { return data_.zero; }
  int one() const { return data_.one; }
  bool commutative() const { return commutative_; }
  const std::string& label(int a) const { return data_.labels[a]; }
  std::optional<int> find_label(const std::string& label) const;
  const RingData& data() const { return data_; }

 private:
  explicit FiniteRing(RingData data);
  RingData data_;
  std::vector<int> neg_;
  bool commutative_ = false;
};

RingData make_zmod(int n);

/// A right ideal as the sorted list of its elements; always contains zero.
using Ideal = std::vector<int>;

bool is_right_ideal(const FiniteRing& r, const Ideal& i, std::string* why = nullptr);
Ideal principal_right_ideal(const FiniteRing& r, int x);
Ideal ideal_sum(const FiniteRing& r, const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
bool ideal_contains(const Ideal& i, int x);
Ideal whole_ring_ideal(const FiniteRing& r);
Ideal zero_ideal(const FiniteRing& r);

/// (i : x) = { r : x r in i }.
Ideal colon_ideal(const FiniteRing& r, const Ideal& i, int x);

/// All right ideals, as sums of principal ones, sorted by size then
/// lexicographically (so inclusion-comparable ideals are in order).
std::vector<Ideal> enumerate_right_ideals(const FiniteRing& r, long long cap);

/// "(g1,g2,...)" for a minimal generating set found greedily.
std::string ideal_label(const FiniteRing& r, const Ideal& i);

/// A set of right ideals meant to satisfy (R1) upward closure,
/// (R2) closure under colon by every element, (R3) saturation.
struct GabrielTopology {
  RingPtr ring;
  std::set<Ideal> members;
};

struct GabrielReport {
  CheckStatus nonempty = CheckStatus::Pass;
  CheckStatus r1 = CheckStatus::Pass;
  std::string r1_witness;
  CheckStatus r2 = CheckStatus::Pass;
  std::string r2_witness;
  CheckStatus r3 = CheckStatus::Pass;
  std::string r3_witness;
  bool all_pass() const;
};

GabrielReport check_gabriel(const GabrielTopology& t, long long cap);

/// The same family read as a one-object site through the dictionary
/// right ideal = sieve, (1) = maximal sieve, colon = pullback:
/// (T1) whole ring present, (T2) colon stability, (T3) saturation.
struct SiteAxiomReport {
  CheckStatus t1 = CheckStatus::Pass;
  std::string t1_witness;
  CheckStatus t2 = CheckStatus::Pass;
  std::string t2_witness;
  CheckStatus t3 = CheckStatus::Pass;
  std::string t3_witness;
  bool all_pass() const;
};

SiteAxiomReport check_translated_site_axioms(const GabrielTopology& t, long long cap);

/// Least family containing the seeds that passes R1-R3; the whole ring
/// is always injected (families are non-empty by definition).
GabrielTopology gabriel_closure(const RingPtr& r, const std::vector<Ideal>& seeds, long long cap);

/// H_S = { I : (I : a) meets S for every a }. S must contain one and be
/// closed under multiplication; the result always passes R1-R3, which is
/// re-verified before returning.
GabrielTopology from_mult_set(const RingPtr& r, const std::vector<int>& s, long long cap);

/// t(A) = { x : x J = 0 for some member J }; verified to be an ideal.
Ideal torsion_ideal(const GabrielTopology& t);

struct ModuleData {
  std::string name;
  RingPtr ring;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> action;  // action[m][a] = m . a
  int zero = 0;
};

void check_module_structure(const ModuleData& m);
std::vector<RingViolation> check_module_axioms(const ModuleData& m);

ModuleData ring_as_module(const RingPtr& r);
/// I as a right module; elements keep their ring labels.
ModuleData ideal_as_module(const RingPtr& r, const Ideal& i);
/// A/n for a right ideal n; cosets labeled by their least representative.
ModuleData quotient_module(const RingPtr& r, const Ideal& n);

/// All additive right-linear maps from -> to, each as the vector of image
/// indices over the source carrier, in lexicographic order. The search
/// assigns images to a minimal additive generating set of the source
/// (|to|^k candidates, guarded by cap) and extends by additivity.
std::vector<std::vector<int>> module_homs(const ModuleData& from, const ModuleData& to,
                                          long long cap);

/// Sheaf condition at one object: m -> (i -> m.i) is a bijection
/// A -> hom(I, M) for every member I. Witness names the failing ideal
/// and direction.
bool is_j_closed_module(const ModuleData& m, const GabrielTopology& t, long long cap,
                        std::string* witness = nullptr);

/// hom(I_min, A/t(A)) with its module structure, the canonical map from
/// the ring, and (for commutative rings) the induced ring structure:
/// (f*g)(x) = f(u) for any lift u of g(x) inside I_min.
struct Localization {
  Ideal i_min;
  Ideal torsion;
  ModuleData quotient;                  // A / t(A)
  std::vector<std::vector<int>> homs;   // elements of the localization
  std::vector<int> canonical;           // canonical[a] = hom index of (i -> [a i])
  Ideal kernel;                         // elements mapped to the zero hom
  RingPtr localized;                    // ring structure; commutative input only
};

Localization localize(const RingPtr& a, const GabrielTopology& t, long long cap);

/// Classical pairs-modulo construction a/s with (a,s) ~ (b,t) iff
/// u(at - bs) = 0 for some u in S. Commutative rings only.
RingPtr ring_of_fractions_oracle(const RingPtr& a, const std::vector<int>& s);

/// Backtracking search for a ring isomorphism (zero -> zero, one -> one,
/// additive orders preserved). Returns the image table or nothing.
std::optional<std::vector<int>> find_ring_isomorphism(const FiniteRing& a, const FiniteRing& b);

/// "zmod n" when isomorphic to it, otherwise "ring of order n".
std::string describe_ring(const FiniteRing& r);

}  // namespace encov
