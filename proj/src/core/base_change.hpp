#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/quantale.hpp"

namespace encov {

// A lax monoidal monotone map G between quantales, source -> target.
// map[v] = index in the target carrier of the image of source element v.
struct BaseChangeData {
  std::string name;
  QuantalePtr source;
  QuantalePtr target;
  std::vector<int> map;
};

// Every flag is computed by exhaustion over the finite carriers at
// construction time. Witness strings are empty when the flag holds.
struct BaseChangeFlags {
  bool lax_monoidal = false;
  bool faithful = false;
  std::string faithful_note;
  bool conservative = false;
  std::string conservative_witness;
  bool full = false;
  std::string full_witness;
  bool right_adjoint = false;
  std::string right_adjoint_witness;
  bool left_adjoint_strong_monoidal = false;
  std::string strong_monoidal_witness;
};

class BaseChange;
using BaseChangePtr = std::shared_ptr<const BaseChange>;

class BaseChange {
 public:
  // Rejects maps that are not monotone or not lax monoidal: those are not
  // functors between the underlying poset categories, so nothing downstream
  // is defined for them.
  static BaseChangePtr analyze(BaseChangeData data);

  const std::string& name() const { return data_.name; }
  const QuantalePtr& source() const { return data_.source; }
  const QuantalePtr& target() const { return data_.target; }
  int apply(int v) const { return data_.map[static_cast<size_t>(v)]; }
  // F(u) = meet{ v : leq_target(u, G v) }; total even when the adjunction
  // law fails (flags().right_adjoint records whether it holds).
  int left_adjoint(int u) const { return adj_[static_cast<size_t>(u)]; }
  const BaseChangeFlags& flags() const { return flags_; }
  const BaseChangeData& data() const { return data_; }

 private:
  explicit BaseChange(BaseChangeData data) : data_(std::move(data)) {}
  BaseChangeData data_;
  std::vector<int> adj_;
  BaseChangeFlags flags_;
};

// Law probes used by reports and tests. Each returns a witness description,
// or std::nullopt when the law holds everywhere.
std::optional<std::string> check_triangle_identities(const BaseChange& g);
std::optional<std::string> check_preserves_meets(const BaseChange& g);
std::optional<std::string> check_adjoint_preserves_joins(const BaseChange& g);

// G(res_source(F(y), r)) = res_target(y, G(r)) for all carrier pairs (y, r).
// Holds when F is strong monoidal; with a truncated target the left adjoint
// can fail strong monoidality and this identity can fail with it, so callers
// gate on flags().left_adjoint_strong_monoidal before treating a failure as
// an error.
std::optional<std::string> check_cotensor_identity(const BaseChange& g);

class EnrichedCategory;
using CategoryPtr = std::shared_ptr<const EnrichedCategory>;

// Post-compose the hom matrix with G. Lax monoidality makes the result a
// valid category; it is re-checked on construction rather than assumed.
CategoryPtr base_change_category(const BaseChange& g, const CategoryPtr& c);

}  // namespace encov
