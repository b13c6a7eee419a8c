#include "core/base_change.hpp"

#include <sstream>

#include "core/category.hpp"
#include "core/error.hpp"

namespace encov {

namespace {

std::string pair_witness(const Quantale& q, int a, int b) {
  return "(" + q.label(a) + ", " + q.label(b) + ")";
}

}  // namespace

BaseChangePtr BaseChange::analyze(BaseChangeData data) {
  if (!data.source || !data.target)
    fail(ErrorKind::Structure,
         "base change '" + data.name + "': missing source or target quantale");
  const Quantale& v = *data.source;
  const Quantale& u = *data.target;
  if (static_cast<int>(data.map.size()) != v.size())
    fail(ErrorKind::Structure,
         "base change '" + data.name + "': map is not total on the source carrier");
  for (int e : data.map)
    if (e < 0 || e >= u.size())
      fail(ErrorKind::Structure,
           "base change '" + data.name + "': map value out of target range");

  const std::string name = data.name;
  const std::vector<int> map = data.map;
  const auto g = [&map](int x) { return map[static_cast<size_t>(x)]; };

  for (int a = 0; a < v.size(); ++a)
    for (int b = 0; b < v.size(); ++b)
      if (v.leq(a, b) && !u.leq(g(a), g(b)))
        fail(ErrorKind::Precondition,
             "base change '" + name + "': map is not monotone, witness " +
                 pair_witness(v, a, b));

  if (!u.leq(u.unit(), g(v.unit())))
    fail(ErrorKind::Precondition,
         "base change '" + name +
             "': unit coherence fails, unit of the target is not below G(unit)");
  for (int a = 0; a < v.size(); ++a)
    for (int b = 0; b < v.size(); ++b)
      if (!u.leq(u.tensor(g(a), g(b)), g(v.tensor(a, b))))
        fail(ErrorKind::Precondition,
             "base change '" + name + "': lax monoidality fails, witness " +
                 pair_witness(v, a, b));

  auto* self = new BaseChange(std::move(data));
  BaseChangePtr bc(self);
  self->flags_.lax_monoidal = true;

  self->flags_.faithful = true;
  self->flags_.faithful_note =
      "vacuous: hom-sets of a poset-shaped category have at most one element, "
      "so any functor between them is faithful";

  self->flags_.conservative = true;
  for (int a = 0; a < v.size() && self->flags_.conservative; ++a)
    for (int b = 0; b < v.size(); ++b)
      if (v.leq(a, b) && a != b && g(a) == g(b)) {
        self->flags_.conservative = false;
        self->flags_.conservative_witness = pair_witness(v, a, b);
        break;
      }

  self->flags_.full = true;
  for (int a = 0; a < v.size() && self->flags_.full; ++a)
    for (int b = 0; b < v.size(); ++b)
      if (u.leq(g(a), g(b)) && !v.leq(a, b)) {
        self->flags_.full = false;
        self->flags_.full_witness = pair_witness(v, a, b);
        break;
      }

  // F(y) = meet{ w : y <= G w }; meet of the empty set is the top element.
  self->adj_.assign(static_cast<size_t>(u.size()), 0);
  for (int y = 0; y < u.size(); ++y) {
    int m = v.top();
    for (int w = 0; w < v.size(); ++w)
      if (u.leq(y, g(w))) m = v.meet(m, w);
    self->adj_[static_cast<size_t>(y)] = m;
  }
  const auto f = [self](int y) { return self->adj_[static_cast<size_t>(y)]; };

  self->flags_.right_adjoint = true;
  for (int y = 0; y < u.size() && self->flags_.right_adjoint; ++y)
    for (int w = 0; w < v.size(); ++w)
      if (v.leq(f(y), w) != u.leq(y, g(w))) {
        self->flags_.right_adjoint = false;
        self->flags_.right_adjoint_witness =
            "(" + u.label(y) + ", " + v.label(w) + ")";
        break;
      }

  self->flags_.left_adjoint_strong_monoidal = self->flags_.right_adjoint;
  if (self->flags_.right_adjoint) {
    if (f(u.unit()) != v.unit()) {
      self->flags_.left_adjoint_strong_monoidal = false;
      self->flags_.strong_monoidal_witness = "F(unit) != unit";
    }
    for (int y = 0; y < u.size() && self->flags_.left_adjoint_strong_monoidal; ++y)
      for (int z = 0; z < u.size(); ++z)
        if (f(u.tensor(y, z)) != v.tensor(f(y), f(z))) {
          self->flags_.left_adjoint_strong_monoidal = false;
          self->flags_.strong_monoidal_witness = pair_witness(u, y, z);
          break;
        }
  }

  return bc;
}

std::optional<std::string> check_triangle_identities(const BaseChange& g) {
  const Quantale& v = *g.source();
  const Quantale& u = *g.target();
  for (int a = 0; a < v.size(); ++a)
    if (g.apply(g.left_adjoint(g.apply(a))) != g.apply(a))
      return "GFG != G at " + v.label(a);
  for (int y = 0; y < u.size(); ++y)
    if (g.left_adjoint(g.apply(g.left_adjoint(y))) != g.left_adjoint(y))
      return "FGF != F at " + u.label(y);
  return std::nullopt;
}

std::optional<std::string> check_preserves_meets(const BaseChange& g) {
  const Quantale& v = *g.source();
  const Quantale& u = *g.target();
  for (int a = 0; a < v.size(); ++a)
    for (int b = 0; b < v.size(); ++b)
      if (g.apply(v.meet(a, b)) != u.meet(g.apply(a), g.apply(b)))
        return "G(meet" + pair_witness(v, a, b) + ") != meet of the images";
  return std::nullopt;
}

std::optional<std::string> check_adjoint_preserves_joins(const BaseChange& g) {
  const Quantale& v = *g.source();
  const Quantale& u = *g.target();
  for (int y = 0; y < u.size(); ++y)
    for (int z = 0; z < u.size(); ++z)
      if (g.left_adjoint(u.join(y, z)) !=
          v.join(g.left_adjoint(y), g.left_adjoint(z)))
        return "F(join" + pair_witness(u, y, z) + ") != join of the images";
  return std::nullopt;
}

CategoryPtr base_change_category(const BaseChange& g, const CategoryPtr& c) {
  if (!c) fail(ErrorKind::Structure, "base_change_category: null category");
  if (!same_quantale(*c->base(), *g.source()))
    fail(ErrorKind::Precondition,
         "base_change_category: category '" + c->name() + "' is not enriched in the source of '" +
             g.name() + "'");
  CategoryData out;
  out.name = g.name() + "(" + c->name() + ")";
  out.base = g.target();
  out.objects = c->data().objects;
  out.hom = c->data().hom;
  for (auto& row : out.hom)
    for (int& e : row) e = g.apply(e);
  return EnrichedCategory::make(std::move(out));
}

std::optional<std::string> check_cotensor_identity(const BaseChange& g) {
  const Quantale& v = *g.source();
  const Quantale& u = *g.target();
  for (int y = 0; y < u.size(); ++y)
    for (int r = 0; r < v.size(); ++r) {
      const int lhs = g.apply(v.residuate(g.left_adjoint(y), r));
      const int rhs = u.residuate(y, g.apply(r));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "(y = " << u.label(y) << ", r = " << v.label(r)
           << "): G(res(F y, r)) = " << u.label(lhs)
           << " but res(y, G r) = " << u.label(rhs);
        return os.str();
      }
    }
  return std::nullopt;
}

}  // namespace encov
