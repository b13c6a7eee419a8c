#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/quantale.hpp"

namespace encov {

/// Hom data for a small category enriched in a quantale. The matrix is
/// indexed contravariant slot first: hom[z][x] = C(z,x), the hom from z
/// to x. A sieve on x lives under the column hom[-][x].
struct CategoryData {
  std::string name;
  QuantalePtr base;
  std::vector<std::string> objects;
  std::vector<std::vector<int>> hom;
};

struct CategoryViolation {
  std::string law;      // "identity" or "composition"
  std::string witness;  // objects involved, by name
};

void check_category_structure(const CategoryData& data);

/// Identity law: unit <= hom[x][x]. Composition: hom[y][z] (x) hom[x][y]
/// <= hom[x][z] for all triples. Exhaustive.
std::vector<CategoryViolation> check_category(const CategoryData& data);

class EnrichedCategory;
using CategoryPtr = std::shared_ptr<const EnrichedCategory>;

class EnrichedCategory {
 public:
  static CategoryPtr make(CategoryData data);

  const std::string& name() const { return data_.name; }
  const QuantalePtr& base() const { return data_.base; }
  int object_count() const { return static_cast<int>(data_.objects.size()); }
  const std::string& object(int i) const { return data_.objects[i]; }
  std::optional<int> find_object(const std::string& name) const;
  int hom(int z, int x) const { return data_.hom[z][x]; }
  const CategoryData& data() const { return data_; }

  /// relation(x,y) iff unit <= hom[x][y].
  std::vector<std::vector<bool>> underlying_preorder() const;

 private:
  explicit EnrichedCategory(CategoryData data) : data_(std::move(data)) {}
  CategoryData data_;
};

}  // namespace encov
