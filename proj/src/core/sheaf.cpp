#include "core/sheaf.hpp"

#include <sstream>

#include "core/error.hpp"

namespace encov {

void check_presheaf_structure(const Presheaf& p) {
  if (!p.category) fail(ErrorKind::Structure, "presheaf: null category");
  if (static_cast<int>(p.values.size()) != p.category->object_count())
    fail(ErrorKind::Structure, "presheaf: value map is not total on objects");
  for (int v : p.values)
    if (v < 0 || v >= p.category->base()->size())
      fail(ErrorKind::Structure, "presheaf: value out of carrier range");
}

std::vector<SieveViolation> check_presheaf(const Presheaf& p) {
  check_presheaf_structure(p);
  std::vector<SieveViolation> out;
  const auto& c = *p.category;
  const Quantale& q = *c.base();
  for (int z = 0; z < c.object_count(); ++z)
    for (int zp = 0; zp < c.object_count(); ++zp)
      if (!q.leq(q.tensor(c.hom(zp, z), p.values[z]), p.values[zp]))
        out.push_back({"presheaf", c.object(zp) + " <- " + c.object(z)});
  return out;
}

bool presheaf_eq(const Presheaf& a, const Presheaf& b) { return a.values == b.values; }

bool presheaf_leq(const Presheaf& a, const Presheaf& b) {
  const Quantale& q = *a.category->base();
  for (size_t z = 0; z < a.values.size(); ++z)
    if (!q.leq(a.values[z], b.values[z])) return false;
  return true;
}

Presheaf constant_presheaf(const CategoryPtr& c, int value) {
  Presheaf p;
  p.category = c;
  p.values.assign(c->object_count(), value);
  return p;
}

std::vector<Presheaf> enumerate_presheaves(const CategoryPtr& c, long long cap) {
  if (!c) fail(ErrorKind::Structure, "enumerate_presheaves: null category");
  const Quantale& q = *c->base();
  const int n = c->object_count();
  long long total = 1;
  for (int z = 0; z < n; ++z) {
    total *= q.size();
    if (total > cap)
      fail(ErrorKind::CapExceeded,
           "enumerate_presheaves on '" + c->name() + "': candidate space exceeds cap");
  }
  std::vector<Presheaf> out;
  Presheaf p;
  p.category = c;
  p.values.assign(n, 0);
  while (true) {
    if (check_presheaf(p).empty()) out.push_back(p);
    int pos = n - 1;
    while (pos >= 0 && ++p.values[pos] == q.size()) p.values[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

Presheaf presheaf_base_change(const BaseChange& g, const Presheaf& p, const CategoryPtr& image) {
  check_presheaf_structure(p);
  if (!same_quantale(*p.category->base(), *g.source()))
    fail(ErrorKind::Precondition,
         "presheaf_base_change: presheaf base does not match the source of '" + g.name() + "'");
  if (!image || !same_quantale(*image->base(), *g.target()) ||
      image->object_count() != p.category->object_count())
    fail(ErrorKind::Precondition,
         "presheaf_base_change: image category does not match the target of '" + g.name() + "'");
  Presheaf out;
  out.category = image;
  out.values = p.values;
  for (int& v : out.values) v = g.apply(v);
  if (!check_presheaf(out).empty())
    fail(ErrorKind::Internal, "presheaf_base_change broke the presheaf law; this is a bug");
  return out;
}

Presheaf presheaf_base_change(const BaseChange& g, const Presheaf& p) {
  check_presheaf_structure(p);
  return presheaf_base_change(g, p, base_change_category(g, p.category));
}

std::optional<std::string> is_sheaf(const Presheaf& p, const Coverage& j) {
  check_presheaf_structure(p);
  check_coverage_structure(j);
  const auto& c = *p.category;
  const Quantale& q = *c.base();
  const int n = c.object_count();
  for (int x = 0; x < n; ++x)
    for (const auto& r : j.families[x])
      for (int g = 0; g < q.size(); ++g) {
        bool premise = true;
        for (int z = 0; z < n && premise; ++z)
          if (!q.leq(q.tensor(g, r[z]), p.values[z])) premise = false;
        if (!premise) continue;
        for (int z = 0; z < n; ++z)
          if (!q.leq(q.tensor(g, c.hom(z, x)), p.values[z])) {
            std::ostringstream os;
            os << "(x = " << c.object(x) << ", R = " << values_label(q, r)
               << ", g = " << q.label(g) << "): sections over R do not extend at "
               << c.object(z);
            return os.str();
          }
      }
  return std::nullopt;
}

Presheaf sigma_once(const Presheaf& p, const Coverage& j) {
  check_presheaf_structure(p);
  check_coverage_structure(j);
  const auto& c = *p.category;
  const Quantale& q = *c.base();
  const int n = c.object_count();
  Presheaf out;
  out.category = p.category;
  out.values.assign(n, q.bottom());
  for (int x = 0; x < n; ++x) {
    int acc = q.bottom();
    for (const auto& r : j.families[x]) {
      int m = q.top();
      for (int z = 0; z < n; ++z) m = q.meet(m, q.residuate(r[z], p.values[z]));
      acc = q.join(acc, m);
    }
    out.values[x] = acc;
  }
  return out;
}

Presheaf sheafify(const Presheaf& p, const Coverage& j) {
  return sigma_once(sigma_once(p, j), j);
}

Presheaf least_sheaf_above(const Presheaf& p, const Coverage& j, long long cap) {
  check_presheaf_structure(p);
  const Quantale& q = *p.category->base();
  Presheaf acc = constant_presheaf(p.category, q.top());
  bool found = false;
  for (const Presheaf& s : enumerate_presheaves(p.category, cap)) {
    if (!presheaf_leq(p, s)) continue;
    if (is_sheaf(s, j).has_value()) continue;  // a witness means s is not a sheaf
    for (size_t z = 0; z < acc.values.size(); ++z)
      acc.values[z] = q.meet(acc.values[z], s.values[z]);
    found = true;
  }
  if (!found)
    fail(ErrorKind::Internal, "no sheaf above the presheaf; the constant top is one, so this is a bug");
  return acc;
}

Sieve closure_of_subpresheaf(const Sieve& r, const Coverage& j) {
  check_sieve_structure(r);
  check_coverage_structure(j);
  const auto& c = *r.category;
  const Quantale& q = *c.base();
  Presheaf as_presheaf;
  as_presheaf.category = r.category;
  as_presheaf.values = r.values;
  const Presheaf ell = sheafify(as_presheaf, j);
  Sieve out;
  out.category = r.category;
  out.target = r.target;
  out.values.resize(r.values.size());
  for (int z = 0; z < c.object_count(); ++z)
    out.values[z] = q.meet(c.hom(z, r.target), ell.values[z]);
  return out;
}

bool is_dense(const Sieve& r, const Coverage& j) {
  return closure_of_subpresheaf(r, j).values == maximal_sieve(r.category, r.target).values;
}

CommuteResult check_sheafification_commutes(const BaseChange& g, const Presheaf& p,
                                            const Coverage& j, const CategoryPtr& image) {
  const auto& flags = g.flags();
  if (!flags.faithful || !flags.conservative || !flags.right_adjoint) {
    std::string why = !flags.faithful        ? "faithful"
                      : !flags.conservative  ? "conservative"
                                             : "a right adjoint";
    fail(ErrorKind::Precondition,
         "commute check along '" + g.name() + "' refused: the map is not " + why);
  }
  CommuteResult out;
  out.via_base_change = presheaf_base_change(g, sheafify(p, j), image);
  const Coverage gj = base_change_coverage(g, j, image);
  out.via_sheafify = sheafify(presheaf_base_change(g, p, image), gj);
  out.equal = presheaf_eq(out.via_base_change, out.via_sheafify);
  out.base_change_route_leq = presheaf_leq(out.via_base_change, out.via_sheafify);
  out.sheafify_route_leq = presheaf_leq(out.via_sheafify, out.via_base_change);
  return out;
}

}  // namespace encov
