#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace encov {

enum class QuantaleKind { TwoElement, TruncatedAdditive, Exponential, Table };

const char* quantale_kind_name(QuantaleKind k);

/// Raw tables for a finite commutative unital quantale. Elements are
/// indices into `labels`; `leq[a][b]` means there is a morphism a -> b
/// (the categorical order, which for the truncated additive family is
/// the REVERSE of the numeric order). `tensor[a][b]` is the monoidal
/// product, `unit` its neutral element.
struct QuantaleData {
  std::string name;
  QuantaleKind kind = QuantaleKind::Table;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> tensor;
  int unit = 0;
  // Builder parameters, echoed in reports; 0/1 for table quantales.
  long param_n = 0;
  long param_d = 1;
};

struct QuantaleViolation {
  std::string law;      // e.g. "tensor.unit"
  std::string witness;  // offending elements, by label
};

/// Rejects ragged/non-total tables and out-of-range entries. Structural
/// problems are errors, not axiom violations.
void check_quantale_structure(const QuantaleData& data);

/// Full axiom sweep: partial order, all binary meets/joins exist, tensor
/// associative/commutative/unital/monotone, distributes over binary joins
/// and absorbs bottom. Exhaustive; returns every violation found.
std::vector<QuantaleViolation> check_quantale_axioms(const QuantaleData& data);

class Quantale;
using QuantalePtr = std::shared_ptr<const Quantale>;

/// A validated quantale with precomputed meet/join/residuation tables.
/// residuate(a,b) = join{p : p (x) a <= b}, found by exhaustive search;
/// there is deliberately no closed form (truncation breaks them).
class Quantale {
 public:
  static QuantalePtr make(QuantaleData data);

  const std::string& name() const { return data_.name; }
  QuantaleKind kind() const { return data_.kind; }
  int size() const { return static_cast<int>(data_.labels.size()); }
  const QuantaleData& data() const { return data_; }

  bool leq(int a, int b) const { return data_.leq[a][b]; }
  int tensor(int a, int b) const { return data_.tensor[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }
  int residuate(int a, int b) const { return res_[a][b]; }

  int unit() const { return data_.unit; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::string& label(int a) const { return data_.labels[a]; }
  std::optional<int> find_label(const std::string& label) const;

 private:
  explicit Quantale(QuantaleData data);

  QuantaleData data_;
  std::vector<std::vector<int>> meet_, join_, res_;
  int bottom_ = 0, top_ = 0;
};

/// {0,1} with meet as tensor, unit 1.
QuantaleData make_two_element();

/// Carrier {k/d : 0 <= k <= N*d} plus inf; categorical order reversed
/// numeric, tensor is addition capped to inf once the sum exceeds N,
/// unit 0.
QuantaleData make_truncated_additive(long n, long d);

/// Same index tables relabeled e^-q: carrier {e^-q} plus e^-inf = 0,
/// numeric order, tensor multiplication, unit e^0. The -log relabeling
/// back to the truncated additive quantale is an isomorphism.
QuantaleData make_exponential(long n, long d);

/// Same object, or structurally identical tables (labels, order, tensor,
/// unit). Used to validate that enriched data and base changes agree on
/// their base.
bool same_quantale(const Quantale& a, const Quantale& b);

}  // namespace encov
