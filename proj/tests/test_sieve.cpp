#include "doctest.h"

#include "core/error.hpp"
#include "core/instance.hpp"
#include "core/sieve.hpp"

using namespace encov;

namespace {

int el(const QuantalePtr& q, const std::string& label) {
  return q->find_label(label).value();
}

}  // namespace

TEST_CASE("maximal and zero sieves are sieves everywhere") {
  const Instance in = builtin_instance();
  for (const auto& [name, c] : in.categories) {
    CAPTURE(name);
    for (int x = 0; x < c->object_count(); ++x) {
      CHECK(is_sieve(maximal_sieve(c, x)).empty());
      CHECK(is_sieve(zero_sieve(c, x)).empty());
    }
  }
}

TEST_CASE("sieve counts per object") {
  const Instance in = builtin_instance();
  const auto count = [&](const char* cat, int x) {
    return enumerate_sieves(in.categories.at(cat), x, 1000000).size();
  };
  CHECK(count("one_obj_q2", 0) == 2);
  CHECK(count("chain3_q2", 0) == 2);
  CHECK(count("chain3_q2", 1) == 3);
  CHECK(count("chain3_q2", 2) == 4);
  CHECK(count("p2_t3", 0) == 11);
  CHECK(count("p2_t3", 1) == 11);
  CHECK(count("p2_exp", 0) == 11);
  CHECK(count("p2_exp", 1) == 11);
  CHECK(count("l3_t3", 0) == 9);
  CHECK(count("l3_t3", 1) == 27);
  CHECK(count("l3_t3", 2) == 28);
}

TEST_CASE("every enumerated sieve is a sieve and the enumeration is strictly ordered") {
  const Instance in = builtin_instance();
  for (const auto& [name, c] : in.categories) {
    for (int x = 0; x < c->object_count(); ++x) {
      const auto sieves = enumerate_sieves(c, x, 1000000);
      for (size_t i = 0; i < sieves.size(); ++i) {
        CAPTURE(name);
        CHECK(is_sieve(sieves[i]).empty());
        if (i > 0) CHECK(sieves[i - 1].values < sieves[i].values);
      }
    }
  }
}

TEST_CASE("pullbacks are sieves and the maximal sieve is a fixed point") {
  const Instance in = builtin_instance();
  for (const auto& [name, c] : in.categories) {
    const Quantale& q = *c->base();
    for (int x = 0; x < c->object_count(); ++x) {
      const Sieve top = maximal_sieve(c, x);
      for (const Sieve& s : enumerate_sieves(c, x, 1000000))
        for (int y = 0; y < c->object_count(); ++y)
          for (int g = 0; g < q.size(); ++g) {
            if (!is_admissible(s, g, y)) continue;
            CAPTURE(name);
            const Sieve back = pullback_sieve(s, g, y);
            CHECK(is_sieve(back).empty());
            CHECK(back.target == y);
            if (sieve_eq(s, top)) CHECK(sieve_eq(back, maximal_sieve(c, y)));
          }
    }
  }
}

TEST_CASE("the bare distance formula can leave the representable bound") {
  const Instance in = builtin_instance();
  const CategoryPtr& p2 = in.categories.at("p2_t3");
  const QuantalePtr& t3 = in.quantales.at("t3");
  const Sieve top_x = maximal_sieve(p2, 0);
  const int q2dist = el(t3, "2");
  REQUIRE(is_admissible(top_x, q2dist, 1));

  const Sieve good = pullback_sieve(top_x, q2dist, 1);
  CHECK(is_sieve(good).empty());

  const Sieve bare = pullback_lawvere(top_x, q2dist, 1);
  const auto v = is_sieve(bare);
  REQUIRE(!v.empty());
  CHECK(v.front().law == "bound");
  // value 0 at x claims distance 0 to y, but d(x,y) = 1
  CHECK(bare.values[0] == el(t3, "0"));
  CHECK(!sieve_eq(bare, good));
}

TEST_CASE("formula anchors name the two notations") {
  CHECK(alternate_formula_anchor(QuantaleKind::TruncatedAdditive) ==
        "r_q(z) := max{rz, V(q,d(z,y))}");
  CHECK(alternate_formula_anchor(QuantaleKind::Exponential) ==
        "r_q(z) := min{rz, U(q,L(z,y))}");
}

TEST_CASE("base change of a sieve applies the map pointwise") {
  const Instance in = builtin_instance();
  const BaseChangePtr& g = in.base_changes.at("incl");
  const Sieve& s = in.sieves.at("s_c01");
  const CategoryPtr image = base_change_category(*g, s.category);
  const Sieve out = base_change_sieve(*g, s, image);
  CHECK(is_sieve(out).empty());
  for (size_t z = 0; z < s.values.size(); ++z)
    CHECK(out.values[z] == g->apply(s.values[z]));
}

TEST_CASE("sieve order and meet") {
  const Instance in = builtin_instance();
  const CategoryPtr& p2 = in.categories.at("p2_t3");
  const Sieve top = maximal_sieve(p2, 0);
  const Sieve bot = zero_sieve(p2, 0);
  const Sieve& mid = in.sieves.at("s_xy");
  CHECK(sieve_leq(bot, mid));
  CHECK(sieve_leq(mid, top));
  CHECK(!sieve_leq(top, mid));
  CHECK(sieve_eq(sieve_meet(mid, top), mid));
  CHECK(sieve_eq(sieve_meet(mid, bot), bot));
}

TEST_CASE("invalid value maps report which law broke") {
  const Instance in = builtin_instance();
  const CategoryPtr& p2 = in.categories.at("p2_t3");
  const QuantalePtr& t3 = in.quantales.at("t3");
  // claims a better distance at x than the hom column allows
  Sieve bad{p2, 0, {el(t3, "0"), el(t3, "0")}};
  const auto v = is_sieve(bad);
  REQUIRE(!v.empty());
  CHECK(v.front().law == "bound");
  // bound holds but precomposition fails: 3 at x exceeds 1 at y plus d(x,y) = 1
  Sieve gap{p2, 0, {el(t3, "3"), el(t3, "1")}};
  bool found = false;
  for (const auto& w : is_sieve(gap))
    if (w.law == "presheaf") found = true;
  CHECK(found);
}

TEST_CASE("values_label prints carrier labels in object order") {
  const Instance in = builtin_instance();
  const Sieve& s = in.sieves.at("s_xy");
  CHECK(values_label(*s.category->base(), s.values) == "(1, 2)");
}
