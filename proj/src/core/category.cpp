#include "core/category.hpp"

#include <sstream>

namespace encov {

void check_category_structure(const CategoryData& data) {
  if (!data.base)
    fail(ErrorKind::Structure, "category '" + data.name + "': missing base quantale");
  const size_t n = data.objects.size();
  if (data.hom.size() != n)
    fail(ErrorKind::Structure, "category '" + data.name + "': hom table is non-total");
  for (const auto& row : data.hom) {
    if (row.size() != n)
      fail(ErrorKind::Structure, "category '" + data.name + "': hom table is non-total");
    for (int v : row)
      if (v < 0 || v >= data.base->size())
        fail(ErrorKind::Structure, "category '" + data.name + "': hom entry out of range");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (data.objects[i] == data.objects[j])
        fail(ErrorKind::Structure,
             "category '" + data.name + "': duplicate object '" + data.objects[i] + "'");
}

std::vector<CategoryViolation> check_category(const CategoryData& data) {
  check_category_structure(data);
  std::vector<CategoryViolation> out;
  const Quantale& q = *data.base;
  const int n = static_cast<int>(data.objects.size());
  for (int x = 0; x < n; ++x)
    if (!q.leq(q.unit(), data.hom[x][x]))
      out.push_back({"identity", data.objects[x]});
  // hom(y,z) (x) hom(x,y) <= hom(x,z)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!q.leq(q.tensor(data.hom[y][z], data.hom[x][y]), data.hom[x][z]))
          out.push_back({"composition",
                         data.objects[x] + ", " + data.objects[y] + ", " + data.objects[z]});
  return out;
}

CategoryPtr EnrichedCategory::make(CategoryData data) {
  auto violations = check_category(data);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "category '" << data.name << "' fails " << violations.size()
       << " law check(s); first: " << violations.front().law << " at ("
       << violations.front().witness << ")";
    fail(ErrorKind::Precondition, os.str());
  }
  return CategoryPtr(new EnrichedCategory(std::move(data)));
}

std::optional<int> EnrichedCategory::find_object(const std::string& name) const {
  for (int i = 0; i < object_count(); ++i)
    if (data_.objects[i] == name) return i;
  return std::nullopt;
}

std::vector<std::vector<bool>> EnrichedCategory::underlying_preorder() const {
  const int n = object_count();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      rel[x][y] = data_.base->leq(data_.base->unit(), data_.hom[x][y]);
  return rel;
}

}  // namespace encov
