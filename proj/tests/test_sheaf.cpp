#include "doctest.h"

#include "core/error.hpp"
#include "core/instance.hpp"
#include "core/sheaf.hpp"

using namespace encov;

namespace {

int el(const QuantalePtr& q, const std::string& label) {
  return q->find_label(label).value();
}

}  // namespace

TEST_CASE("presheaf counts per category") {
  const Instance in = builtin_instance();
  CHECK(enumerate_presheaves(in.categories.at("one_obj_q2"), 1000000).size() == 2);
  CHECK(enumerate_presheaves(in.categories.at("chain3_q2"), 1000000).size() == 4);
  CHECK(enumerate_presheaves(in.categories.at("p2_t3"), 1000000).size() == 13);
  CHECK(enumerate_presheaves(in.categories.at("p2_exp"), 1000000).size() == 13);
}

TEST_CASE("presheaves over a metric base are the 1-Lipschitz maps") {
  const Instance in = builtin_instance();
  const CategoryPtr& p2 = in.categories.at("p2_t3");
  const QuantalePtr& t3 = in.quantales.at("t3");
  CHECK(check_presheaf(Presheaf{p2, {el(t3, "1"), el(t3, "2")}}).empty());
  // a jump of 2 across distance 1 breaks the restriction law
  CHECK(!check_presheaf(Presheaf{p2, {el(t3, "0"), el(t3, "2")}}).empty());
}

TEST_CASE("every presheaf is a sheaf for the indiscrete family") {
  const Instance in = builtin_instance();
  const CategoryPtr& p2 = in.categories.at("p2_t3");
  const Coverage j = make_indiscrete(p2);
  for (const Presheaf& p : enumerate_presheaves(p2, 1000000))
    CHECK(!is_sheaf(p, j).has_value());
}

TEST_CASE("the step presheaf is not a sheaf once the chain is covered early") {
  const Instance in = builtin_instance();
  const Presheaf& p = in.presheaves.at("p_step");
  const Coverage& j = in.coverages.at("j_chain");
  const auto why = is_sheaf(p, j);
  REQUIRE(why.has_value());
  CHECK(why->find("c2") != std::string::npos);
}

TEST_CASE("sheafification is the least sheaf above, fixes sheaves, and is idempotent") {
  const Instance in = builtin_instance();
  struct Lane {
    const char* category;
    const char* coverage;
  };
  for (const Lane lane : {Lane{"chain3_q2", "j_chain"}, Lane{"p2_t3", "j_p2"}}) {
    const CategoryPtr& c = in.categories.at(lane.category);
    const Coverage& j = in.coverages.at(lane.coverage);
    for (const Presheaf& p : enumerate_presheaves(c, 1000000)) {
      CAPTURE(lane.category);
      const Presheaf out = sheafify(p, j);
      CHECK(!is_sheaf(out, j).has_value());
      CHECK(presheaf_leq(p, out));
      CHECK(presheaf_eq(sheafify(out, j), out));
      CHECK(presheaf_eq(out, least_sheaf_above(p, j, 1000000)));
      if (!is_sheaf(p, j).has_value()) CHECK(presheaf_eq(out, p));
    }
  }
}

TEST_CASE("sheafifying the step presheaf fills in the covered tail") {
  const Instance in = builtin_instance();
  const QuantalePtr& q2 = in.quantales.at("q2");
  const Presheaf out = sheafify(in.presheaves.at("p_step"), in.coverages.at("j_chain"));
  CHECK(out.values == std::vector<int>{el(q2, "1"), el(q2, "1"), el(q2, "1")});
}

TEST_CASE("a covering sieve is dense and its closure is the whole representable") {
  const Instance in = builtin_instance();
  const Sieve& s = in.sieves.at("s_c01");
  const Coverage& j = in.coverages.at("j_chain");
  CHECK(is_dense(s, j));
  CHECK(sieve_eq(closure_of_subpresheaf(s, j), maximal_sieve(s.category, s.target)));
}

TEST_CASE("commutation routes agree for the full stock maps") {
  const Instance in = builtin_instance();
  {
    const CommuteResult r = check_sheafification_commutes(
        *in.base_changes.at("incl"), in.presheaves.at("p_step"), in.coverages.at("j_chain"),
        base_change_category(*in.base_changes.at("incl"), in.categories.at("chain3_q2")));
    CHECK(r.equal);
    CHECK(r.base_change_route_leq);
    CHECK(r.sheafify_route_leq);
  }
  {
    const CommuteResult r = check_sheafification_commutes(
        *in.base_changes.at("log"), in.presheaves.at("p_slope"), in.coverages.at("j_p2"),
        base_change_category(*in.base_changes.at("log"), in.categories.at("p2_t3")));
    CHECK(r.equal);
  }
}

TEST_CASE("presheaf base change applies the map pointwise") {
  const Instance in = builtin_instance();
  const BaseChangePtr& g = in.base_changes.at("log");
  const Presheaf& p = in.presheaves.at("p_slope");
  const Presheaf out = presheaf_base_change(*g, p);
  for (size_t z = 0; z < p.values.size(); ++z)
    CHECK(out.values[z] == g->apply(p.values[z]));
  CHECK(check_presheaf(out).empty());
}

TEST_CASE("commutation check refuses maps without the needed flags") {
  const Instance in = builtin_instance();
  const BaseChangePtr& g = in.base_changes.at("collapse");
  const Presheaf& p = in.presheaves.at("p_slope");
  const Coverage& j = in.coverages.at("j_p2");
  CHECK_THROWS_AS(
      (void)check_sheafification_commutes(*g, p, j, base_change_category(*g, p.category)),
      Error);
}
