#include "core/sieve.hpp"

#include <sstream>

#include "core/error.hpp"

namespace encov {

namespace {

const Quantale& base_of(const Sieve& s) { return *s.category->base(); }

void require_same_site(const Sieve& a, const Sieve& b, const char* op) {
  if (a.target != b.target || a.category->object_count() != b.category->object_count() ||
      !same_quantale(*a.category->base(), *b.category->base()))
    fail(ErrorKind::Precondition,
         std::string(op) + ": sieves live on different targets or categories");
}

}  // namespace

void check_sieve_structure(const Sieve& s) {
  if (!s.category) fail(ErrorKind::Structure, "sieve: null category");
  const int n = s.category->object_count();
  if (s.target < 0 || s.target >= n)
    fail(ErrorKind::Structure, "sieve: target object out of range");
  if (static_cast<int>(s.values.size()) != n)
    fail(ErrorKind::Structure, "sieve: value map is not total on objects");
  for (int v : s.values)
    if (v < 0 || v >= s.category->base()->size())
      fail(ErrorKind::Structure, "sieve: value out of carrier range");
}

std::vector<SieveViolation> is_sieve(const Sieve& s) {
  check_sieve_structure(s);
  std::vector<SieveViolation> out;
  const Quantale& q = base_of(s);
  const auto& c = *s.category;
  const int n = c.object_count();
  for (int z = 0; z < n; ++z)
    if (!q.leq(s.values[z], c.hom(z, s.target)))
      out.push_back({"bound", c.object(z) + ": " + q.label(s.values[z]) +
                                  " is not below " + q.label(c.hom(z, s.target))});
  for (int z = 0; z < n; ++z)
    for (int zp = 0; zp < n; ++zp)
      if (!q.leq(q.tensor(c.hom(zp, z), s.values[z]), s.values[zp]))
        out.push_back({"presheaf", c.object(zp) + " <- " + c.object(z)});
  return out;
}

Sieve maximal_sieve(const CategoryPtr& c, int x) {
  if (!c || x < 0 || x >= c->object_count())
    fail(ErrorKind::Precondition, "maximal_sieve: unknown object");
  Sieve s;
  s.category = c;
  s.target = x;
  s.values.resize(c->object_count());
  for (int z = 0; z < c->object_count(); ++z) s.values[z] = c->hom(z, x);
  return s;
}

Sieve zero_sieve(const CategoryPtr& c, int x) {
  if (!c || x < 0 || x >= c->object_count())
    fail(ErrorKind::Precondition, "zero_sieve: unknown object");
  Sieve s;
  s.category = c;
  s.target = x;
  s.values.assign(c->object_count(), c->base()->bottom());
  return s;
}

bool sieve_eq(const Sieve& a, const Sieve& b) {
  return a.target == b.target && a.values == b.values;
}

bool sieve_leq(const Sieve& a, const Sieve& b) {
  require_same_site(a, b, "sieve_leq");
  const Quantale& q = base_of(a);
  for (size_t z = 0; z < a.values.size(); ++z)
    if (!q.leq(a.values[z], b.values[z])) return false;
  return true;
}

Sieve sieve_meet(const Sieve& a, const Sieve& b) {
  require_same_site(a, b, "sieve_meet");
  const Quantale& q = base_of(a);
  Sieve out = a;
  for (size_t z = 0; z < out.values.size(); ++z)
    out.values[z] = q.meet(a.values[z], b.values[z]);
  return out;
}

bool is_admissible(const Sieve& s, int g, int y) {
  check_sieve_structure(s);
  if (y < 0 || y >= s.category->object_count())
    fail(ErrorKind::Precondition, "pullback: unknown source object");
  if (g < 0 || g >= s.category->base()->size())
    fail(ErrorKind::Precondition, "pullback: element out of carrier range");
  return s.category->base()->leq(g, s.category->hom(y, s.target));
}

namespace {

void require_admissible(const Sieve& s, int g, int y, const char* op) {
  if (!is_admissible(s, g, y)) {
    const auto& c = *s.category;
    fail(ErrorKind::Precondition,
         std::string(op) + ": (" + c.base()->label(g) + " at " + c.object(y) +
             ") is not a generalized element of the representable at " +
             c.object(s.target));
  }
}

}  // namespace

Sieve pullback_sieve(const Sieve& s, int g, int y) {
  require_admissible(s, g, y, "pullback_sieve");
  const Quantale& q = base_of(s);
  const auto& c = *s.category;
  Sieve out;
  out.category = s.category;
  out.target = y;
  out.values.resize(c.object_count());
  for (int z = 0; z < c.object_count(); ++z)
    out.values[z] = q.meet(c.hom(z, y), q.residuate(g, s.values[z]));
  if (!is_sieve(out).empty())
    fail(ErrorKind::Internal, "pullback_sieve produced a non-sieve; this is a bug");
  return out;
}

namespace {

Sieve alternate_pullback(const Sieve& s, int q_elt, int y, const char* op) {
  require_admissible(s, q_elt, y, op);
  const Quantale& q = base_of(s);
  const auto& c = *s.category;
  Sieve out;
  out.category = s.category;
  out.target = y;
  out.values.resize(c.object_count());
  for (int z = 0; z < c.object_count(); ++z)
    out.values[z] = q.meet(s.values[z], q.residuate(q_elt, c.hom(z, y)));
  return out;
}

}  // namespace

Sieve pullback_lawvere(const Sieve& s, int q, int y) {
  return alternate_pullback(s, q, y, "pullback_lawvere");
}

Sieve pullback_proxet(const Sieve& s, int q, int y) {
  return alternate_pullback(s, q, y, "pullback_proxet");
}

std::string alternate_formula_anchor(QuantaleKind kind) {
  switch (kind) {
    case QuantaleKind::Exponential:
      return "r_q(z) := min{rz, U(q,L(z,y))}";
    case QuantaleKind::TruncatedAdditive:
      return "r_q(z) := max{rz, V(q,d(z,y))}";
    default:
      return "r_q(z) := meet(rz, res(q, hom(z,y)))";
  }
}

std::vector<Sieve> enumerate_sieves(const CategoryPtr& c, int x, long long cap) {
  if (!c || x < 0 || x >= c->object_count())
    fail(ErrorKind::Precondition, "enumerate_sieves: unknown object");
  const Quantale& q = *c->base();
  const int n = c->object_count();

  std::vector<std::vector<int>> candidates(n);
  long long total = 1;
  for (int z = 0; z < n; ++z) {
    for (int v = 0; v < q.size(); ++v)
      if (q.leq(v, c->hom(z, x))) candidates[z].push_back(v);
    total *= static_cast<long long>(candidates[z].size());
    if (total > cap) {
      std::ostringstream os;
      os << "enumerate_sieves on '" << c->name() << "' at " << c->object(x)
         << ": candidate space exceeds cap " << cap;
      fail(ErrorKind::CapExceeded, os.str());
    }
  }

  std::vector<Sieve> out;
  std::vector<size_t> odo(n, 0);
  Sieve s;
  s.category = c;
  s.target = x;
  s.values.resize(n);
  while (true) {
    bool ok = true;
    for (int z = 0; z < n; ++z) s.values[z] = candidates[z][odo[z]];
    for (int z = 0; z < n && ok; ++z)
      for (int zp = 0; zp < n; ++zp)
        if (!q.leq(q.tensor(c->hom(zp, z), s.values[z]), s.values[zp])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(s);
    int pos = n - 1;
    while (pos >= 0 && ++odo[pos] == candidates[pos].size()) odo[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

Sieve base_change_sieve(const BaseChange& g, const Sieve& s, const CategoryPtr& image) {
  check_sieve_structure(s);
  if (!same_quantale(*s.category->base(), *g.source()))
    fail(ErrorKind::Precondition,
         "base_change_sieve: sieve base does not match the source of '" + g.name() + "'");
  if (!image || !same_quantale(*image->base(), *g.target()) ||
      image->object_count() != s.category->object_count())
    fail(ErrorKind::Precondition,
         "base_change_sieve: image category does not match the target of '" + g.name() + "'");
  for (int z = 0; z < image->object_count(); ++z)
    for (int x = 0; x < image->object_count(); ++x)
      if (image->hom(z, x) != g.apply(s.category->hom(z, x)))
        fail(ErrorKind::Precondition,
             "base_change_sieve: image category hom table is not the image of the source homs");
  Sieve out;
  out.category = image;
  out.target = s.target;
  out.values = s.values;
  for (int& v : out.values) v = g.apply(v);
  if (!is_sieve(out).empty())
    fail(ErrorKind::Internal, "base_change_sieve produced a non-sieve; this is a bug");
  return out;
}

Sieve base_change_sieve(const BaseChange& g, const Sieve& s) {
  check_sieve_structure(s);
  return base_change_sieve(g, s, base_change_category(g, s.category));
}

std::string values_label(const Quantale& q, const std::vector<int>& values) {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += q.label(values[i]);
  }
  out += ")";
  return out;
}

}  // namespace encov
