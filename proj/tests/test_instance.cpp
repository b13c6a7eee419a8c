#include <functional>
#include <optional>
#include <string>

#include "core/error.hpp"
#include "core/instance.hpp"
#include "doctest.h"

using namespace encov;

namespace {

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("the shipped instance file reproduces the programmatic suite") {
  const Instance file = parse_instance_file(INSTANCE_DIR "/builtin.enc");
  const Instance prog = builtin_instance();

  CHECK(file.order == prog.order);

  REQUIRE(file.quantales.size() == prog.quantales.size());
  for (const auto& [name, q] : prog.quantales) {
    REQUIRE(file.quantales.count(name) == 1);
    CHECK(same_quantale(*file.quantales.at(name), *q));
  }

  REQUIRE(file.categories.size() == prog.categories.size());
  for (const auto& [name, c] : prog.categories) {
    REQUIRE(file.categories.count(name) == 1);
    const auto& fc = file.categories.at(name);
    CHECK(fc->data().objects == c->data().objects);
    CHECK(fc->data().hom == c->data().hom);
    CHECK(same_quantale(*fc->base(), *c->base()));
  }

  REQUIRE(file.sieves.size() == prog.sieves.size());
  for (const auto& [name, s] : prog.sieves) {
    REQUIRE(file.sieves.count(name) == 1);
    CHECK(sieve_eq(file.sieves.at(name), s));
    CHECK(file.sieves.at(name).category->name() == s.category->name());
  }

  REQUIRE(file.presheaves.size() == prog.presheaves.size());
  for (const auto& [name, p] : prog.presheaves) {
    REQUIRE(file.presheaves.count(name) == 1);
    CHECK(presheaf_eq(file.presheaves.at(name), p));
  }

  REQUIRE(file.coverages.size() == prog.coverages.size());
  for (const auto& [name, j] : prog.coverages) {
    REQUIRE(file.coverages.count(name) == 1);
    CHECK(coverage_eq(file.coverages.at(name), j));
  }

  REQUIRE(file.base_changes.size() == prog.base_changes.size());
  for (const auto& [name, g] : prog.base_changes) {
    REQUIRE(file.base_changes.count(name) == 1);
    const auto& fg = file.base_changes.at(name);
    CHECK(fg->data().map == g->data().map);
    CHECK(same_quantale(*fg->source(), *g->source()));
    CHECK(same_quantale(*fg->target(), *g->target()));
    CHECK(fg->flags().faithful == g->flags().faithful);
    CHECK(fg->flags().conservative == g->flags().conservative);
    CHECK(fg->flags().full == g->flags().full);
    CHECK(fg->flags().right_adjoint == g->flags().right_adjoint);
    CHECK(fg->flags().left_adjoint_strong_monoidal == g->flags().left_adjoint_strong_monoidal);
  }

  REQUIRE(file.rings.size() == prog.rings.size());
  for (const auto& [name, r] : prog.rings) {
    REQUIRE(file.rings.count(name) == 1);
    const auto& fr = file.rings.at(name);
    CHECK(fr->data().labels == r->data().labels);
    CHECK(fr->data().add == r->data().add);
    CHECK(fr->data().mul == r->data().mul);
    CHECK(fr->zero() == r->zero());
    CHECK(fr->one() == r->one());
  }

  REQUIRE(file.mult_sets.size() == prog.mult_sets.size());
  for (const auto& [name, s] : prog.mult_sets) {
    REQUIRE(file.mult_sets.count(name) == 1);
    CHECK(file.mult_sets.at(name).ring == s.ring);
    CHECK(file.mult_sets.at(name).elements == s.elements);
  }

  REQUIRE(file.topologies.size() == prog.topologies.size());
  for (const auto& [name, t] : prog.topologies) {
    REQUIRE(file.topologies.count(name) == 1);
    CHECK(file.topologies.at(name).members == t.members);
    CHECK(file.topologies.at(name).ring->name() == t.ring->name());
  }

  REQUIRE(file.graded_specs.size() == prog.graded_specs.size());
  for (const auto& [name, s] : prog.graded_specs) {
    REQUIRE(file.graded_specs.count(name) == 1);
    CHECK(file.graded_specs.at(name).predicate == s.predicate);
    CHECK(file.graded_specs.at(name).variable == s.variable);
  }
}

TEST_CASE("explicit quantale tables parse to the same structure as the builtin") {
  const Instance in = parse_instance_text(
      "quantale q\n"
      "  labels 0 1\n"
      "  leq 1 1\n"
      "  leq 0 1\n"
      "  tensor 0 0\n"
      "  tensor 0 1\n"
      "  unit 1\n"
      "end\n");
  CHECK(same_quantale(*find_quantale(in, "q"), *Quantale::make(make_two_element())));
}

TEST_CASE("explicit ring tables parse") {
  const Instance in = parse_instance_text(
      "ring f2\n"
      "  elements 0 1\n"
      "  add 0 1\n"
      "  add 1 0\n"
      "  mul 0 0\n"
      "  mul 0 1\n"
      "  zero 0\n"
      "  one 1\n"
      "end\n");
  const auto& r = find_ring(in, "f2");
  CHECK(r->size() == 2);
  CHECK(r->one() == 1);
  CHECK(r->commutative());
  CHECK(r->add(1, 1) == 0);
}

TEST_CASE("parse failures carry the offending line") {
  CHECK(kind_of([] { parse_instance_text("quantale q\n  builtin two_element\n"); }) ==
        ErrorKind::Parse);  // unterminated block
  CHECK(kind_of([] {
          parse_instance_text(
              "quantale q\n  builtin two_element\nend\n"
              "quantale q\n  builtin two_element\nend\n");
        }) == ErrorKind::Parse);  // duplicate name
  CHECK(kind_of([] { parse_instance_text("widget w\nend\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_instance_text("end\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_instance_text("quantale q extra\nend\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          parse_instance_text("quantale q\n  labels 0 1\n  leq 1 2\n  leq 0 1\nend\n");
        }) == ErrorKind::Parse);  // leq entries are 0 or 1
  CHECK(kind_of([] {
          parse_instance_text("quantale q\n  builtin truncated_additive 3\nend\n");
        }) == ErrorKind::Parse);  // missing parameter
  CHECK_THROWS_WITH_AS(parse_instance_file(INSTANCE_DIR "/missing.enc"),
                       doctest::Contains("cannot open"), Error);
}

TEST_CASE("references must resolve to earlier blocks") {
  CHECK(kind_of([] {
          parse_instance_text("category c\n  quantale nope\n  objects a\n  hom a a 1\nend\n");
        }) == ErrorKind::Unresolved);

  const Instance in = builtin_instance();
  CHECK(kind_of([&] { find_sieve(in, "nope"); }) == ErrorKind::Unresolved);
  CHECK(kind_of([&] { find_topology(in, "nope"); }) == ErrorKind::Unresolved);
  CHECK(kind_of([&] { find_graded_spec(in, "nope"); }) == ErrorKind::Unresolved);
}

TEST_CASE("ragged tables are rejected at construction") {
  CHECK(kind_of([] {
          parse_instance_text(
              "quantale q\n  labels 0 1\n  leq 1 1\n  tensor 0 0\n  tensor 0 1\nend\n");
        }) == ErrorKind::Structure);
}

TEST_CASE("sieve blocks are only structurally checked at parse time") {
  const Instance in = parse_instance_text(
      "quantale q2\n"
      "  builtin two_element\n"
      "end\n"
      "category pair\n"
      "  quantale q2\n"
      "  objects a b\n"
      "  hom a a 1\n"
      "  hom a b 1\n"
      "  hom b a 0\n"
      "  hom b b 1\n"
      "end\n"
      "sieve bad\n"
      "  category pair\n"
      "  target b\n"
      "  value a 0\n"
      "  value b 1\n"
      "end\n");
  const Sieve& s = find_sieve(in, "bad");
  const auto violations = is_sieve(s);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].law == "presheaf");
}

TEST_CASE("sieve parse errors") {
  const std::string prefix =
      "quantale q2\n  builtin two_element\nend\n"
      "category pair\n  quantale q2\n  objects a b\n"
      "  hom a a 1\n  hom a b 1\n  hom b a 0\n  hom b b 1\nend\n";
  CHECK(kind_of([&] {
          parse_instance_text(prefix + "sieve s\n  category pair\n  target b\n  value a 0\nend\n");
        }) == ErrorKind::Parse);  // missing value at b
  CHECK(kind_of([&] {
          parse_instance_text(prefix +
                              "sieve s\n  category pair\n  target c\n"
                              "  value a 0\n  value b 1\nend\n");
        }) == ErrorKind::Parse);  // unknown object
  CHECK(kind_of([&] {
          parse_instance_text(prefix +
                              "sieve s\n  category pair\n  target b\n"
                              "  value a 2\n  value b 1\nend\n");
        }) == ErrorKind::Parse);  // unknown quantale element
}

TEST_CASE("coverage family lines check the sieve target") {
  const std::string prefix =
      "quantale q2\n  builtin two_element\nend\n"
      "category pair\n  quantale q2\n  objects a b\n"
      "  hom a a 1\n  hom a b 1\n  hom b a 0\n  hom b b 1\nend\n"
      "sieve sa\n  category pair\n  target a\n  value a 1\n  value b 0\nend\n";
  const Instance ok = parse_instance_text(prefix +
                                          "coverage j\n  category pair\n"
                                          "  family a sa maximal\n  family b maximal\nend\n");
  CHECK(find_coverage(ok, "j").families[0].size() == 1);  // sa is the maximal sieve at a
  CHECK(kind_of([&] {
          parse_instance_text(prefix + "coverage j\n  category pair\n  family b sa\nend\n");
        }) == ErrorKind::Parse);
}

TEST_CASE("multset elements are sorted and deduplicated") {
  const Instance in = parse_instance_text(
      "ring z6\n  builtin zmod 6\nend\n"
      "multset s\n  ring z6\n  elements 3 1 3 1\nend\n");
  CHECK(find_mult_set(in, "s").elements == std::vector<int>{1, 3});
  CHECK(kind_of([] {
          parse_instance_text("ring z6\n  builtin zmod 6\nend\nmultset s\n  ring z6\nend\n");
        }) == ErrorKind::Parse);  // no elements
}

TEST_CASE("topology member lines generate the listed ideal") {
  const Instance in = parse_instance_text(
      "ring z6\n  builtin zmod 6\nend\n"
      "topology t\n  ring z6\n  member 2\n  member 2 3\nend\n");
  const auto& t = find_topology(in, "t");
  const auto& r = find_ring(in, "z6");
  REQUIRE(t.members.size() == 2);
  CHECK(t.members.count(principal_right_ideal(*r, 2)) == 1);
  CHECK(t.members.count(whole_ring_ideal(*r)) == 1);  // 2 and 3 generate everything
}
