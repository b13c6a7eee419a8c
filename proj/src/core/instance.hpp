#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/base_change.hpp"
#include "core/category.hpp"
#include "core/coverage.hpp"
#include "core/graded.hpp"
#include "core/quantale.hpp"
#include "core/ring.hpp"
#include "core/sheaf.hpp"
#include "core/sieve.hpp"

namespace encov {

struct MultSet {
  std::string ring;           // registry name of the ring it lives in
  std::vector<int> elements;  // carrier indices, sorted
};

/// Everything a parsed instance file defines, by kind and name. `order`
/// remembers the (kind, name) pairs in file order so reports that walk
/// the whole instance are deterministic.
struct Instance {
  std::map<std::string, QuantalePtr> quantales;
  std::map<std::string, CategoryPtr> categories;
  std::map<std::string, Sieve> sieves;
  std::map<std::string, Presheaf> presheaves;
  std::map<std::string, Coverage> coverages;
  std::map<std::string, BaseChangePtr> base_changes;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, MultSet> mult_sets;
  std::map<std::string, GabrielTopology> topologies;
  std::map<std::string, GradedTopologySpec> graded_specs;
  std::vector<std::pair<std::string, std::string>> order;
};

/// Line-oriented block format:
///
///   # comment
///   quantale t3
///     builtin truncated_additive 3 1
///   end
///   category p2
///     quantale t3
///     objects x y
///     hom x x 0
///     ...
///   end
///
/// Block kinds: quantale, category, sieve, presheaf, coverage,
/// basechange, ring, multset, topology, gradedspec. References are by
/// block name and must appear earlier in the file. Categories, base
/// changes and rings are validated on construction; sieves, presheaves
/// and coverages are only structurally checked here, their laws are
/// checked by `validate` and again before any command uses them.
Instance parse_instance_text(const std::string& text);
Instance parse_instance_file(const std::string& path);

const QuantalePtr& find_quantale(const Instance& in, const std::string& name);
const CategoryPtr& find_category(const Instance& in, const std::string& name);
const Sieve& find_sieve(const Instance& in, const std::string& name);
const Presheaf& find_presheaf(const Instance& in, const std::string& name);
const Coverage& find_coverage(const Instance& in, const std::string& name);
const BaseChangePtr& find_base_change(const Instance& in, const std::string& name);
const RingPtr& find_ring(const Instance& in, const std::string& name);
const MultSet& find_mult_set(const Instance& in, const std::string& name);
const GabrielTopology& find_topology(const Instance& in, const std::string& name);
const GradedTopologySpec& find_graded_spec(const Instance& in, const std::string& name);

/// The canned suite every test leans on, built programmatically:
/// quantales q2 / t3 / e31, categories one_obj_q2, chain3_q2, p2_t3,
/// l3_t3, p2_exp, base changes incl (q2 -> e31), log (t3 -> e31),
/// collapse (t3 -> q2), rings zmod4/6/8/12, mult set s13, a seed
/// topology on zmod4, and the two graded membership specs.
Instance builtin_instance();

}  // namespace encov
