#include "core/commands.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <sstream>

#include "core/error.hpp"
#include "core/instance.hpp"

namespace encov {

namespace {

/// One knob, several guards: an explicit --cap/ENCOV_CAP value overrides
/// every default at once; 0 keeps the per-operation defaults.
struct Caps {
  long long value = 0;
  long long sieves() const { return value ? value : 1000000; }
  long long coverages() const { return value ? value : (1ll << 20); }
  long long presheaves() const { return value ? value : 1000000; }
  long long members() const { return value ? value : 1000000; }
  long long homs() const { return value ? value : 1000000; }
  long long carrier() const { return value ? value : 256; }
};

const char* kSubcommands[] = {"validate",    "coverage-check", "close",
                              "pullback",    "base-change",    "injectivity",
                              "sheaf-check", "sheafify",       "commute-check",
                              "ideals",      "gabriel-check",  "gabriel-close",
                              "localize",    "counterexample"};

bool known_subcommand(const std::string& s) {
  for (const char* k : kSubcommands)
    if (s == k) return true;
  return false;
}

const char* kSelectorFlags[] = {"sieve",   "presheaf", "coverage",   "map",
                                "category", "ring",     "multset",    "topology",
                                "gradedspec", "element", "at"};

std::string yn(bool b) { return b ? "yes" : "no"; }

const std::string& sel(const CommandOptions& o, const std::string& key) {
  const auto it = o.selectors.find(key);
  if (it == o.selectors.end())
    fail(ErrorKind::Usage, "the '" + o.subcommand + "' command needs --" + key);
  return it->second;
}

bool has_sel(const CommandOptions& o, const std::string& key) {
  return o.selectors.count(key) != 0;
}

Instance load_instance(const CommandOptions& opts) {
  if (opts.file.empty())
    fail(ErrorKind::Usage, "the '" + opts.subcommand + "' command needs an instance file");
  return parse_instance_file(opts.file);
}

int want_object(const CategoryPtr& c, const std::string& name) {
  const auto i = c->find_object(name);
  if (!i) fail(ErrorKind::Unresolved, "category '" + c->name() + "' has no object '" + name + "'");
  return *i;
}

int want_element(const Quantale& q, const std::string& label) {
  const auto i = q.find_label(label);
  if (!i) fail(ErrorKind::Unresolved, "quantale '" + q.name() + "' has no element '" + label + "'");
  return *i;
}

void require_valid_sieve(const std::string& name, const Sieve& s) {
  const auto v = is_sieve(s);
  if (!v.empty())
    fail(ErrorKind::Precondition,
         "sieve '" + name + "' is not valid: " + v.front().law + " law fails at " +
             v.front().witness);
}

void require_valid_presheaf(const std::string& name, const Presheaf& p) {
  const auto v = check_presheaf(p);
  if (!v.empty())
    fail(ErrorKind::Precondition,
         "presheaf '" + name + "' is not valid: " + v.front().law + " law fails at " +
             v.front().witness);
}

void require_member_sieves(const std::string& name, const Coverage& j, long long sieve_cap) {
  const CoverageReport cr = check_coverage(j, sieve_cap, false);
  if (cr.members != CheckStatus::Pass)
    fail(ErrorKind::Precondition,
         "coverage '" + name + "' has a member that is not a sieve: " + cr.members_witness);
}

std::string family_text(const Coverage& j, int x) {
  const Quantale& q = *j.category->base();
  std::string out;
  for (const auto& values : j.families[static_cast<size_t>(x)]) {
    if (!out.empty()) out += " ";
    out += values_label(q, values);
  }
  return out.empty() ? "(empty)" : out;
}

std::string flag_summary(const BaseChange& g) {
  const BaseChangeFlags& f = g.flags();
  std::ostringstream os;
  os << "faithful=" << yn(f.faithful) << " conservative=" << yn(f.conservative)
     << " full=" << yn(f.full) << " right_adjoint=" << yn(f.right_adjoint)
     << " left_adjoint_strong_monoidal=" << yn(f.left_adjoint_strong_monoidal);
  return os.str();
}

std::string ideal_text(const FiniteRing& r, const Ideal& i) {
  std::string out = ideal_label(r, i) + " = {";
  for (size_t k = 0; k < i.size(); ++k) {
    if (k > 0) out += ", ";
    out += r.label(i[k]);
  }
  return out + "}";
}

// ---------------------------------------------------------------- validate

void cmd_validate(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  for (const auto& [kind, name] : in.order) {
    if (kind == "quantale") {
      const auto v = check_quantale_axioms(in.quantales.at(name)->data());
      rep.check("quantale." + name, v.empty(),
                v.empty() ? "" : v.front().law + " at " + v.front().witness);
    } else if (kind == "category") {
      const auto v = check_category(in.categories.at(name)->data());
      rep.check("category." + name, v.empty(),
                v.empty() ? "" : v.front().law + " at " + v.front().witness);
    } else if (kind == "sieve") {
      const auto v = is_sieve(in.sieves.at(name));
      rep.check("sieve." + name, v.empty(),
                v.empty() ? "" : v.front().law + " at " + v.front().witness);
    } else if (kind == "presheaf") {
      const auto v = check_presheaf(in.presheaves.at(name));
      rep.check("presheaf." + name, v.empty(),
                v.empty() ? "" : v.front().law + " at " + v.front().witness);
    } else if (kind == "coverage") {
      const CoverageReport cr = check_coverage(in.coverages.at(name), caps.sieves(), false);
      rep.check("coverage." + name + ".members", cr.members, cr.members_witness);
      rep.check("coverage." + name + ".t1", cr.t1, cr.t1_witness);
      rep.check("coverage." + name + ".t2", cr.t2, cr.t2_witness);
    } else if (kind == "basechange") {
      const BaseChange& g = *in.base_changes.at(name);
      rep.check("basechange." + name, true, "monotone, lax monoidal");
      rep.kv("basechange." + name + ".flags", flag_summary(g));
    } else if (kind == "ring") {
      const auto v = check_ring_axioms(in.rings.at(name)->data());
      rep.check("ring." + name, v.empty(),
                v.empty() ? "" : v.front().law + " at " + v.front().witness);
    } else if (kind == "multset") {
      const MultSet& s = in.mult_sets.at(name);
      const FiniteRing& r = *find_ring(in, s.ring);
      std::string why;
      bool ok = std::binary_search(s.elements.begin(), s.elements.end(), r.one());
      if (!ok) why = "does not contain " + r.label(r.one());
      for (int a : s.elements) {
        for (int b : s.elements)
          if (!std::binary_search(s.elements.begin(), s.elements.end(), r.mul(a, b))) {
            ok = false;
            why = "not closed: " + r.label(a) + " * " + r.label(b) + " = " +
                  r.label(r.mul(a, b)) + " is missing";
            break;
          }
        if (!ok) break;
      }
      rep.check("multset." + name, ok, why);
    } else if (kind == "topology") {
      const GabrielTopology& t = in.topologies.at(name);
      bool ok = true;
      std::string why;
      for (const auto& i : t.members)
        if (!is_right_ideal(*t.ring, i, &why)) {
          ok = false;
          break;
        }
      std::ostringstream os;
      os << t.members.size() << " member ideal(s)";
      rep.check("topology." + name, ok, ok ? os.str() : why);
    } else if (kind == "gradedspec") {
      const GradedTopologySpec& s = in.graded_specs.at(name);
      const bool ok = s.predicate == "H_powers_of" && (s.variable == 'x' || s.variable == 'y');
      rep.check("gradedspec." + name, ok, ok ? "" : "unknown predicate");
    }
  }
  std::ostringstream os;
  os << in.order.size();
  rep.kv("blocks", os.str());
}

// ---------------------------------------------------------- coverage-check

void cmd_coverage_check(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  const std::string& name = sel(opts, "coverage");
  const Coverage& j = find_coverage(in, name);
  const bool with_t3 = has_sel(opts, "with-t3");
  rep.kv("coverage", name);
  rep.kv("category", j.category->name());
  for (int x = 0; x < j.category->object_count(); ++x)
    rep.kv("family." + j.category->object(x), family_text(j, x));
  const CoverageReport cr = check_coverage(j, caps.sieves(), with_t3);
  rep.check("members", cr.members, cr.members_witness);
  rep.check("t1", cr.t1, cr.t1_witness);
  rep.check("t2", cr.t2, cr.t2_witness);
  if (with_t3) rep.check("t3", cr.t3, cr.t3 == CheckStatus::Fail ? cr.t3_detail : cr.t3_detail);
}

// --------------------------------------------------------------------- close

void cmd_close(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  const std::string& name = sel(opts, "coverage");
  const Coverage& j = find_coverage(in, name);
  require_member_sieves(name, j, caps.sieves());
  rep.kv("coverage", name);
  const Coverage closed = topology_closure(j, caps.members());
  for (int x = 0; x < j.category->object_count(); ++x) {
    const std::string obj = j.category->object(x);
    std::ostringstream os;
    os << j.families[static_cast<size_t>(x)].size() << " -> "
       << closed.families[static_cast<size_t>(x)].size();
    rep.kv("family." + obj + ".size", os.str());
    rep.kv("family." + obj, family_text(closed, x));
  }
  const CoverageReport cr = check_coverage(closed, caps.sieves(), true);
  rep.check("closed.t1", cr.t1, cr.t1_witness);
  rep.check("closed.t2", cr.t2, cr.t2_witness);
  rep.check("closed.t3", cr.t3, cr.t3_detail);
  rep.check("closed.idempotent", coverage_eq(topology_closure(closed, caps.members()), closed));
}

// ------------------------------------------------------------------ pullback

void cmd_pullback(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const std::string& name = sel(opts, "sieve");
  const Sieve& s = find_sieve(in, name);
  require_valid_sieve(name, s);
  const CategoryPtr& c = s.category;
  const Quantale& q = *c->base();
  const int y = want_object(c, sel(opts, "at"));
  const int g = want_element(q, sel(opts, "element"));
  rep.kv("sieve", name);
  rep.kv("target", c->object(s.target));
  rep.kv("values", values_label(q, s.values));
  rep.kv("element", q.label(g));
  rep.kv("at", c->object(y));
  if (!is_admissible(s, g, y))
    fail(ErrorKind::Precondition, "element '" + q.label(g) + "' at '" + c->object(y) +
                                      "' is not admissible: it is not below hom(" + c->object(y) +
                                      ", " + c->object(s.target) + ")");
  const Sieve out = pullback_sieve(s, g, y);
  rep.kv("pullback.values", values_label(q, out.values));
  const auto v = is_sieve(out);
  rep.check("pullback.is_sieve", v.empty(),
            v.empty() ? "" : v.front().law + " at " + v.front().witness);

  const QuantaleKind kind = q.kind();
  if (kind == QuantaleKind::TruncatedAdditive || kind == QuantaleKind::Exponential) {
    const Sieve alt = kind == QuantaleKind::TruncatedAdditive ? pullback_lawvere(s, g, y)
                                                              : pullback_proxet(s, g, y);
    rep.kv("alternate.formula", alternate_formula_anchor(kind));
    rep.kv("alternate.values", values_label(q, alt.values));
    const auto av = is_sieve(alt);
    rep.kv("alternate.is_sieve",
           av.empty() ? "yes" : "no: " + av.front().law + " law fails at " + av.front().witness);
    rep.kv("alternate.agrees", yn(sieve_eq(out, alt)));
    if (!av.empty())
      rep.note(
          "the alternate pointwise formula can leave the representable bound; meeting with "
          "the hom column (as the pullback above does) restores it");
  } else {
    rep.note("no alternate pointwise formula is tracked for this base");
  }
}

// --------------------------------------------------------------- base-change

void cmd_base_change(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  const std::string& name = sel(opts, "map");
  const BaseChangePtr& g = find_base_change(in, name);
  const BaseChangeFlags& f = g->flags();
  rep.kv("map", name);
  rep.kv("source", g->source()->name());
  rep.kv("target", g->target()->name());
  {
    std::string table;
    for (int v = 0; v < g->source()->size(); ++v) {
      if (v > 0) table += ", ";
      table += g->source()->label(v) + " -> " + g->target()->label(g->apply(v));
    }
    rep.kv("map.values", table);
  }
  rep.check("lax_monoidal", true, "verified on construction");
  rep.kv("faithful", yn(f.faithful) + (f.faithful_note.empty() ? "" : " (" + f.faithful_note + ")"));
  rep.kv("conservative",
         f.conservative ? "yes" : "no: " + f.conservative_witness);
  rep.kv("full", f.full ? "yes" : "no: " + f.full_witness);
  rep.kv("right_adjoint", f.right_adjoint ? "yes" : "no: " + f.right_adjoint_witness);
  rep.kv("left_adjoint_strong_monoidal",
         f.left_adjoint_strong_monoidal ? "yes" : "no: " + f.strong_monoidal_witness);
  if (f.right_adjoint) {
    const auto tri = check_triangle_identities(*g);
    rep.check("triangle_identities", !tri.has_value(), tri ? *tri : "");
    const auto meets = check_preserves_meets(*g);
    rep.check("preserves_meets", !meets.has_value(), meets ? *meets : "");
    const auto joins = check_adjoint_preserves_joins(*g);
    rep.check("adjoint_preserves_joins", !joins.has_value(), joins ? *joins : "");
  }
  const auto cot = check_cotensor_identity(*g);
  if (f.left_adjoint_strong_monoidal) {
    rep.check("cotensor_identity", !cot.has_value(), cot ? *cot : "");
  } else {
    rep.kv("cotensor_identity", cot ? "fails: " + *cot : "holds");
    rep.note(
        "the left adjoint is not strong monoidal, so the cotensor identity is not required; "
        "its status is recorded, not asserted");
  }

  if (has_sel(opts, "category")) {
    const std::string& cname = sel(opts, "category");
    const CategoryPtr& c = find_category(in, cname);
    const CategoryPtr image = base_change_category(*g, c);
    rep.kv("category", cname);
    for (int z = 0; z < image->object_count(); ++z) {
      std::string row;
      for (int x = 0; x < image->object_count(); ++x) {
        if (x > 0) row += ", ";
        row += g->target()->label(image->hom(z, x));
      }
      rep.kv("image.hom." + image->object(z), row);
    }
    rep.check("image.category_laws", check_category(image->data()).empty());
  }
  if (has_sel(opts, "sieve")) {
    const std::string& sname = sel(opts, "sieve");
    const Sieve& s = find_sieve(in, sname);
    require_valid_sieve(sname, s);
    const CategoryPtr image = base_change_category(*g, s.category);
    const Sieve out = base_change_sieve(*g, s, image);
    rep.kv("sieve", sname);
    rep.kv("image.values", values_label(*g->target(), out.values));
    rep.check("image.is_sieve", is_sieve(out).empty());
  }
  if (has_sel(opts, "coverage")) {
    const std::string& jname = sel(opts, "coverage");
    const Coverage& j = find_coverage(in, jname);
    require_member_sieves(jname, j, caps.sieves());
    const CategoryPtr image = base_change_category(*g, j.category);
    const Coverage out = base_change_coverage(*g, j, image);
    rep.kv("coverage", jname);
    for (int x = 0; x < image->object_count(); ++x)
      rep.kv("image.family." + image->object(x), family_text(out, x));
    const CoverageReport cr = check_coverage(out, caps.sieves(), false);
    rep.check("image.members", cr.members, cr.members_witness);
    rep.check("image.t1", cr.t1, cr.t1_witness);
    if (f.left_adjoint_strong_monoidal) {
      rep.check("image.t2", cr.t2, cr.t2_witness);
    } else {
      rep.kv("image.t2", cr.t2 == CheckStatus::Pass ? "holds" : "fails: " + cr.t2_witness);
      rep.note(
          "pullback stability of the image family is guaranteed only when the left adjoint "
          "is strong monoidal; over a truncated target it can fail");
    }
  }
}

// --------------------------------------------------------------- injectivity

uint64_t map_mask(const std::vector<int>& bits, uint64_t m) {
  uint64_t out = 0;
  for (size_t s = 0; s < bits.size(); ++s)
    if (m & (uint64_t{1} << s)) out |= uint64_t{1} << static_cast<unsigned>(bits[s]);
  return out;
}

void cmd_injectivity(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  const std::string& gname = sel(opts, "map");
  const std::string& cname = sel(opts, "category");
  const BaseChangePtr& g = find_base_change(in, gname);
  const CategoryPtr& c = find_category(in, cname);
  const CategoryPtr image = base_change_category(*g, c);
  const BaseChangeFlags& f = g->flags();
  rep.kv("map", gname);
  rep.kv("category", cname);
  rep.kv("flags", flag_summary(*g));
  const bool hyp = f.faithful && f.conservative;
  if (!hyp)
    rep.note(
        "injectivity of the image maps needs a faithful and conservative base change; these "
        "hypotheses fail here, so collision counts are reported, not asserted");

  // sieve lane
  for (int x = 0; x < c->object_count(); ++x) {
    const std::string obj = c->object(x);
    const std::vector<Sieve> sieves = enumerate_sieves(c, x, caps.sieves());
    std::ostringstream os;
    os << sieves.size();
    rep.kv("sieves." + obj + ".count", os.str());
    std::set<std::vector<int>> images;
    std::string witness;
    for (const Sieve& s : sieves) {
      const Sieve img = base_change_sieve(*g, s, image);
      if (!images.insert(img.values).second && witness.empty())
        witness = values_label(*c->base(), s.values) + " shares its image " +
                  values_label(*g->target(), img.values) + " with an earlier sieve";
    }
    const long long collisions =
        static_cast<long long>(sieves.size()) - static_cast<long long>(images.size());
    if (hyp) {
      rep.check("sieves." + obj + ".injective", collisions == 0, witness);
    } else {
      std::ostringstream oc;
      oc << collisions;
      rep.kv("sieves." + obj + ".collisions", oc.str());
    }
  }

  // coverage lane, over per-object sieve-index bitmasks
  try {
    const CoverageUniverse u = build_coverage_universe(c, caps.sieves());
    const std::vector<std::vector<uint64_t>> masks = enumerate_coverage_masks(u, caps.coverages());
    const size_t n = masks.size();
    {
      std::ostringstream os;
      os << n;
      rep.kv("coverages.count", os.str());
    }
    const CoverageUniverse iu = build_coverage_universe(image, caps.sieves());
    const int objs = c->object_count();
    std::vector<std::vector<int>> imgbit(static_cast<size_t>(objs));
    for (int x = 0; x < objs; ++x) {
      std::map<std::vector<int>, int> index;
      for (size_t k = 0; k < iu.sieves[static_cast<size_t>(x)].size(); ++k)
        index[iu.sieves[static_cast<size_t>(x)][k].values] = static_cast<int>(k);
      for (const Sieve& s : u.sieves[static_cast<size_t>(x)]) {
        const Sieve img = base_change_sieve(*g, s, image);
        const auto it = index.find(img.values);
        if (it == index.end())
          fail(ErrorKind::Internal, "an image sieve escaped the image sieve universe; this is a bug");
        imgbit[static_cast<size_t>(x)].push_back(it->second);
      }
    }
    std::vector<std::vector<uint64_t>> images(n, std::vector<uint64_t>(static_cast<size_t>(objs)));
    for (size_t i = 0; i < n; ++i)
      for (int x = 0; x < objs; ++x)
        images[i][static_cast<size_t>(x)] =
            map_mask(imgbit[static_cast<size_t>(x)], masks[i][static_cast<size_t>(x)]);
    std::set<std::vector<uint64_t>> distinct(images.begin(), images.end());
    const long long collisions = static_cast<long long>(n) - static_cast<long long>(distinct.size());
    if (hyp) {
      rep.check("coverages.injective", collisions == 0,
                collisions == 0 ? "" : "two distinct coverages share one image family");
    } else {
      std::ostringstream oc;
      oc << collisions;
      rep.kv("coverages.collisions", oc.str());
    }

    const long long pairs = static_cast<long long>(n) * (static_cast<long long>(n) - 1) / 2;
    if (pairs > 200000000) {
      rep.check("coverages.meet_preserving", CheckStatus::NotChecked,
                "pair count exceeds the practical budget");
    } else {
      bool ok = true;
      std::string witness;
      for (size_t i = 0; i < n && ok; ++i)
        for (size_t j = i + 1; j < n; ++j) {
          bool same = true;
          for (int x = 0; x < objs && same; ++x) {
            const uint64_t meet = masks[i][static_cast<size_t>(x)] & masks[j][static_cast<size_t>(x)];
            if (map_mask(imgbit[static_cast<size_t>(x)], meet) !=
                (images[i][static_cast<size_t>(x)] & images[j][static_cast<size_t>(x)]))
              same = false;
          }
          if (!same) {
            ok = false;
            witness = "the image of a meet differs from the meet of the images";
            break;
          }
        }
      if (hyp)
        rep.check("coverages.meet_preserving", ok, witness);
      else
        rep.kv("coverages.meet_preserving", ok ? "yes" : "no: " + witness);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    rep.check("coverages.enumerated", CheckStatus::NotChecked, e.what());
  }
}

// --------------------------------------------------------------- sheaf-check

void cmd_sheaf_check(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  const std::string& pname = sel(opts, "presheaf");
  const std::string& jname = sel(opts, "coverage");
  const Presheaf& p = find_presheaf(in, pname);
  require_valid_presheaf(pname, p);
  const Coverage& j = find_coverage(in, jname);
  require_member_sieves(jname, j, caps.sieves());
  if (p.category != j.category)
    fail(ErrorKind::Precondition,
         "'" + pname + "' and '" + jname + "' live on different categories");
  rep.kv("presheaf", pname);
  rep.kv("coverage", jname);
  rep.kv("values", values_label(*p.category->base(), p.values));
  const auto w = is_sheaf(p, j);
  rep.check("sheaf", !w.has_value(), w ? *w : "");
}

// ------------------------------------------------------------------ sheafify

void cmd_sheafify(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  const std::string& pname = sel(opts, "presheaf");
  const std::string& jname = sel(opts, "coverage");
  const Presheaf& p = find_presheaf(in, pname);
  require_valid_presheaf(pname, p);
  const Coverage& j = find_coverage(in, jname);
  require_member_sieves(jname, j, caps.sieves());
  if (p.category != j.category)
    fail(ErrorKind::Precondition,
         "'" + pname + "' and '" + jname + "' live on different categories");
  const Quantale& q = *p.category->base();
  rep.kv("presheaf", pname);
  rep.kv("coverage", jname);
  const CoverageReport cr = check_coverage(j, caps.sieves(), true);
  rep.kv("family.t1", check_status_name(cr.t1));
  rep.kv("family.t2", check_status_name(cr.t2));
  rep.kv("family.t3", check_status_name(cr.t3));
  const Presheaf s1 = sigma_once(p, j);
  const Presheaf out = sheafify(p, j);
  rep.kv("values", values_label(q, p.values));
  rep.kv("sigma.values", values_label(q, s1.values));
  rep.kv("sheafify.values", values_label(q, out.values));
  const bool saturated =
      cr.t1 == CheckStatus::Pass && cr.t2 == CheckStatus::Pass && cr.t3 == CheckStatus::Pass;
  if (saturated) {
    const auto w = is_sheaf(out, j);
    rep.check("result.is_sheaf", !w.has_value(), w ? *w : "");
    rep.check("idempotent", presheaf_eq(sheafify(out, j), out));
    if (!is_sheaf(p, j).has_value()) rep.check("fixes_sheaves", presheaf_eq(out, p));
    try {
      const Presheaf least = least_sheaf_above(p, j, caps.presheaves());
      rep.check("matches_least_sheaf_above", presheaf_eq(out, least),
                "least sheaf above has values " + values_label(q, least.values));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      rep.check("matches_least_sheaf_above", CheckStatus::NotChecked, e.what());
    }
  } else {
    const auto w = is_sheaf(out, j);
    rep.kv("result.is_sheaf", w ? "no: " + *w : "yes");
    rep.note(
        "the family is not a saturated topology, so the reflector guarantees are recorded, "
        "not asserted");
  }
}

// ------------------------------------------------------------- commute-check

void cmd_commute_check(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  const std::string& gname = sel(opts, "map");
  const std::string& pname = sel(opts, "presheaf");
  const std::string& jname = sel(opts, "coverage");
  const BaseChangePtr& g = find_base_change(in, gname);
  const Presheaf& p = find_presheaf(in, pname);
  require_valid_presheaf(pname, p);
  const Coverage& j = find_coverage(in, jname);
  require_member_sieves(jname, j, caps.sieves());
  if (p.category != j.category)
    fail(ErrorKind::Precondition,
         "'" + pname + "' and '" + jname + "' live on different categories");
  const BaseChangeFlags& f = g->flags();
  rep.kv("map", gname);
  rep.kv("presheaf", pname);
  rep.kv("coverage", jname);
  rep.kv("flags", flag_summary(*g));
  const CategoryPtr image = base_change_category(*g, p.category);
  const CommuteResult res = check_sheafification_commutes(*g, p, j, image);
  const Quantale& tq = *g->target();
  rep.kv("route.base_change", values_label(tq, res.via_base_change.values));
  rep.kv("route.sheafify", values_label(tq, res.via_sheafify.values));
  if (f.full) {
    rep.check("routes.equal", res.equal,
              res.equal ? "" : "the two routes around the square disagree");
  } else {
    rep.kv("routes.equal", yn(res.equal));
    rep.kv("route.base_change_below", yn(res.base_change_route_leq));
    rep.kv("route.sheafify_below", yn(res.sheafify_route_leq));
    rep.note("the map is not full; equality of the two routes is recorded, not asserted");
  }
}

// -------------------------------------------------------------------- ideals

void cmd_ideals(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  const std::string& rname = sel(opts, "ring");
  const RingPtr& r = find_ring(in, rname);
  rep.kv("ring", rname + " = " + describe_ring(*r));
  const std::vector<Ideal> ideals = enumerate_right_ideals(*r, caps.carrier());
  {
    std::ostringstream os;
    os << ideals.size();
    rep.kv("ideals.count", os.str());
  }
  for (size_t k = 0; k < ideals.size(); ++k) {
    std::ostringstream os;
    os << "ideal." << k;
    rep.kv(os.str(), ideal_text(*r, ideals[k]));
  }
  const std::set<Ideal> known(ideals.begin(), ideals.end());
  bool ok = true;
  std::string witness;
  for (const auto& a : ideals) {
    for (const auto& b : ideals) {
      if (!known.count(ideal_sum(*r, a, b))) {
        ok = false;
        witness = "sum of " + ideal_label(*r, a) + " and " + ideal_label(*r, b) + " is missing";
      } else if (!known.count(ideal_intersection(a, b))) {
        ok = false;
        witness = "intersection of " + ideal_label(*r, a) + " and " + ideal_label(*r, b) +
                  " is missing";
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  rep.check("lattice.closed", ok, witness);
}

// ------------------------------------------------------------- gabriel-check

void cmd_gabriel_check(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  if (has_sel(opts, "gradedspec")) {
    const std::string& sname = sel(opts, "gradedspec");
    const GradedTopologySpec& s = find_graded_spec(in, sname);
    rep.kv("gradedspec", sname);
    rep.kv("variable", std::string(1, s.variable));
    const GradedGabrielReport gr = check_graded_gabriel(
        graded_membership(s, opts.dmax), enumerate_grid_ideals(opts.dmax), opts.dmax,
        caps.members());
    {
      std::ostringstream os;
      os << gr.sample_size;
      rep.kv("sample.size", os.str());
    }
    rep.kv("sample.grew", yn(gr.sample_grew));
    rep.check("g1", gr.g1, gr.g1_witness);
    rep.check("g2", gr.g2, gr.g2_witness);
    rep.check("g3", gr.g3, gr.g3_witness);
    rep.note(gr.note);
    return;
  }
  const std::string& tname = sel(opts, "topology");
  const GabrielTopology& t = find_topology(in, tname);
  rep.kv("topology", tname);
  {
    std::string members;
    for (const auto& i : t.members) {
      if (!members.empty()) members += " ";
      members += ideal_label(*t.ring, i);
    }
    rep.kv("members", members.empty() ? "(empty)" : members);
  }
  const GabrielReport gr = check_gabriel(t, caps.carrier());
  rep.check("nonempty", gr.nonempty);
  rep.check("r1", gr.r1, gr.r1_witness);
  rep.check("r2", gr.r2, gr.r2_witness);
  rep.check("r3", gr.r3, gr.r3_witness);
  const SiteAxiomReport sr = check_translated_site_axioms(t, caps.carrier());
  rep.check("t1", sr.t1, sr.t1_witness);
  rep.check("t2", sr.t2, sr.t2_witness);
  rep.check("t3", sr.t3, sr.t3_witness);
  rep.check("dictionary.agrees", gr.all_pass() == sr.all_pass(),
            "the ideal-family axioms and the translated site axioms must accept the same families");
}

// ------------------------------------------------------------- gabriel-close

void cmd_gabriel_close(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  const std::string& tname = sel(opts, "topology");
  const GabrielTopology& t = find_topology(in, tname);
  rep.kv("topology", tname);
  {
    std::ostringstream os;
    os << t.members.size();
    rep.kv("members.before", os.str());
  }
  const std::vector<Ideal> seeds(t.members.begin(), t.members.end());
  const GabrielTopology closed = gabriel_closure(t.ring, seeds, caps.carrier());
  {
    std::ostringstream os;
    os << closed.members.size();
    rep.kv("members.after", os.str());
  }
  {
    std::string members;
    for (const auto& i : closed.members) {
      if (!members.empty()) members += " ";
      members += ideal_label(*closed.ring, i);
    }
    rep.kv("members", members);
  }
  rep.check("closed.gabriel", check_gabriel(closed, caps.carrier()).all_pass());
  const std::vector<Ideal> again(closed.members.begin(), closed.members.end());
  rep.check("closed.idempotent",
            gabriel_closure(closed.ring, again, caps.carrier()).members == closed.members);
  rep.kv("torsion", ideal_label(*closed.ring, torsion_ideal(closed)));
}

// ------------------------------------------------------------------ localize

void cmd_localize(const CommandOptions& opts, Report& rep) {
  const Instance in = load_instance(opts);
  const Caps caps{opts.cap};
  RingPtr r;
  GabrielTopology t;
  bool have_mult_set = false;
  std::vector<int> s_elements;
  if (has_sel(opts, "multset")) {
    const MultSet& ms = find_mult_set(in, sel(opts, "multset"));
    r = find_ring(in, ms.ring);
    s_elements = ms.elements;
    have_mult_set = true;
    rep.kv("ring", ms.ring + " = " + describe_ring(*r));
    {
      std::string labels;
      for (int a : ms.elements) {
        if (!labels.empty()) labels += ", ";
        labels += r->label(a);
      }
      rep.kv("multset", "{" + labels + "}");
    }
    t = from_mult_set(r, ms.elements, caps.carrier());
  } else if (has_sel(opts, "topology")) {
    t = find_topology(in, sel(opts, "topology"));
    r = t.ring;
    rep.kv("ring", describe_ring(*r));
  } else {
    fail(ErrorKind::Usage, "the 'localize' command needs --multset or --topology");
  }
  {
    std::string members;
    for (const auto& i : t.members) {
      if (!members.empty()) members += " ";
      members += ideal_label(*r, i);
    }
    rep.kv("topology.members", members);
  }
  const Localization loc = localize(r, t, caps.homs());
  rep.kv("i_min", ideal_label(*r, loc.i_min));
  rep.kv("torsion", ideal_label(*r, loc.torsion));
  {
    std::ostringstream os;
    os << loc.quotient.labels.size();
    rep.kv("quotient.size", os.str());
  }
  {
    std::ostringstream os;
    os << loc.homs.size();
    rep.kv("localization.size", os.str());
  }
  rep.kv("kernel", ideal_label(*r, loc.kernel));
  rep.check("kernel.equals_torsion", loc.kernel == loc.torsion);
  if (loc.localized)
    rep.kv("localization.ring", describe_ring(*loc.localized));
  else
    rep.kv("localization.ring", "module only (the base ring is not commutative)");

  if (have_mult_set && r->commutative()) {
    const RingPtr oracle = ring_of_fractions_oracle(r, s_elements);
    rep.kv("oracle.ring", describe_ring(*oracle));
    const bool iso =
        loc.localized && find_ring_isomorphism(*loc.localized, *oracle).has_value();
    bool no_zero_divisors = true;
    for (int s : s_elements)
      for (int a = 0; a < r->size() && no_zero_divisors; ++a)
        if (a != r->zero() && r->mul(s, a) == r->zero()) no_zero_divisors = false;
    if (no_zero_divisors) {
      rep.check("localization.matches_oracle", iso);
    } else {
      rep.kv("localization.matches_oracle", yn(iso));
      rep.note(
          "the multiplicative set contains a zero divisor; agreement with the fraction "
          "construction is recorded, not asserted");
    }
  }
}

// ------------------------------------------------------------ counterexample

void cmd_counterexample(const CommandOptions& opts, Report& rep) {
  if (!opts.file.empty())
    fail(ErrorKind::Usage, "the 'counterexample' command takes no instance file");
  const CounterexampleReport r = reproduce_counterexample(opts.dmax);
  {
    std::ostringstream os;
    os << r.d_max;
    rep.kv("dmax", os.str());
  }
  {
    std::ostringstream os;
    os << r.sample_size;
    rep.kv("sample.size", os.str());
  }
  rep.kv("witness", monomial_ideal_label(r.witness));
  rep.check("witness.separates", r.witness_in_s && !r.witness_in_t,
            "x-power family: " + yn(r.witness_in_s) + ", y-power family: " + yn(r.witness_in_t));
  {
    std::ostringstream os;
    os << r.s_count;
    rep.kv("family.x.count", os.str());
  }
  {
    std::ostringstream os;
    os << r.t_count;
    rep.kv("family.y.count", os.str());
  }
  rep.check("families.differ", r.families_differ);
  const auto join = [](const std::vector<std::string>& v) {
    std::string out = "{";
    for (size_t k = 0; k < v.size(); ++k) {
      if (k > 0) out += ", ";
      out += v[k];
    }
    return out + "}";
  };
  rep.kv("image.x", join(r.image_s));
  rep.kv("image.y", join(r.image_t));
  rep.check("images.equal", r.images_equal);
  rep.kv("image.collision", monomial_ideal_label(r.collision_a) + " and " +
                                monomial_ideal_label(r.collision_b) + " both map to " +
                                degree_zero_base_change(r.collision_a));
  rep.note(
      "two different covering families become equal after the degree-zero change of base: "
      "injectivity needs a faithful base change, and taking degree-zero parts is not one");
}

}  // namespace

CommandOptions parse_command_line(const std::vector<std::string>& args) {
  CommandOptions o;
  std::vector<std::string> positional;
  const auto value_of = [&args](size_t& i, const std::string& flag) -> const std::string& {
    if (i + 1 >= args.size()) fail(ErrorKind::Usage, flag + " needs a value");
    return args[++i];
  };
  bool cap_given = false;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--dmax") {
      const std::string& v = value_of(i, a);
      try {
        o.dmax = std::stoi(v);
      } catch (...) {
        fail(ErrorKind::Usage, "--dmax needs a number, got '" + v + "'");
      }
      if (o.dmax < 1) fail(ErrorKind::Usage, "--dmax must be at least 1");
    } else if (a == "--cap") {
      const std::string& v = value_of(i, a);
      try {
        o.cap = std::stoll(v);
      } catch (...) {
        fail(ErrorKind::Usage, "--cap needs a number, got '" + v + "'");
      }
      if (o.cap < 1) fail(ErrorKind::Usage, "--cap must be at least 1");
      cap_given = true;
    } else if (a == "--generators") {
      o.generators = value_of(i, a);
      if (o.generators != "full")
        fail(ErrorKind::Usage, "--generators supports only 'full'");
    } else if (a == "--format") {
      const std::string& v = value_of(i, a);
      if (v == "text")
        o.format = ReportFormat::Text;
      else if (v == "machine")
        o.format = ReportFormat::Machine;
      else
        fail(ErrorKind::Usage, "--format is 'text' or 'machine', got '" + v + "'");
    } else if (a == "--with-t3") {
      o.selectors["with-t3"] = "1";
    } else if (a.rfind("--", 0) == 0) {
      bool matched = false;
      for (const char* k : kSelectorFlags)
        if (a == std::string("--") + k) {
          o.selectors[k] = value_of(i, a);
          matched = true;
          break;
        }
      if (!matched) fail(ErrorKind::Usage, "unknown flag '" + a + "'");
    } else {
      positional.push_back(a);
    }
  }
  if (!cap_given) {
    if (const char* env = std::getenv("ENCOV_CAP")) {
      try {
        o.cap = std::stoll(env);
      } catch (...) {
        fail(ErrorKind::Usage, "ENCOV_CAP needs a number, got '" + std::string(env) + "'");
      }
      if (o.cap < 1) fail(ErrorKind::Usage, "ENCOV_CAP must be at least 1");
    }
  }
  if (positional.empty()) fail(ErrorKind::Usage, usage_text());
  o.subcommand = positional[0];
  if (!known_subcommand(o.subcommand))
    fail(ErrorKind::Usage, "unknown subcommand '" + o.subcommand + "'");
  if (positional.size() >= 2) o.file = positional[1];
  if (positional.size() > 2)
    fail(ErrorKind::Usage, "too many positional arguments, starting at '" + positional[2] + "'");
  return o;
}

Report run_command(const CommandOptions& opts) {
  Report rep;
  rep.kv("command", opts.subcommand);
  if (!opts.file.empty()) rep.kv("file", opts.file);
  if (opts.subcommand == "validate")
    cmd_validate(opts, rep);
  else if (opts.subcommand == "coverage-check")
    cmd_coverage_check(opts, rep);
  else if (opts.subcommand == "close")
    cmd_close(opts, rep);
  else if (opts.subcommand == "pullback")
    cmd_pullback(opts, rep);
  else if (opts.subcommand == "base-change")
    cmd_base_change(opts, rep);
  else if (opts.subcommand == "injectivity")
    cmd_injectivity(opts, rep);
  else if (opts.subcommand == "sheaf-check")
    cmd_sheaf_check(opts, rep);
  else if (opts.subcommand == "sheafify")
    cmd_sheafify(opts, rep);
  else if (opts.subcommand == "commute-check")
    cmd_commute_check(opts, rep);
  else if (opts.subcommand == "ideals")
    cmd_ideals(opts, rep);
  else if (opts.subcommand == "gabriel-check")
    cmd_gabriel_check(opts, rep);
  else if (opts.subcommand == "gabriel-close")
    cmd_gabriel_close(opts, rep);
  else if (opts.subcommand == "localize")
    cmd_localize(opts, rep);
  else if (opts.subcommand == "counterexample")
    cmd_counterexample(opts, rep);
  else
    fail(ErrorKind::Usage, "unknown subcommand '" + opts.subcommand + "'");
  return rep;
}

Report run(const std::vector<std::string>& args) {
  return run_command(parse_command_line(args));
}

std::string usage_text() {
  return
      "usage: encov <subcommand> [instance-file] [flags]\n"
      "subcommands:\n"
      "  validate        run every structure and law check in the file\n"
      "  coverage-check  --coverage J [--with-t3]\n"
      "  close           --coverage J (saturate to a topology)\n"
      "  pullback        --sieve S --element Q --at Y (with formula comparison)\n"
      "  base-change     --map G [--category C | --sieve S | --coverage J]\n"
      "  injectivity     --map G --category C (exhaustive image collision scan)\n"
      "  sheaf-check     --presheaf P --coverage J\n"
      "  sheafify        --presheaf P --coverage J\n"
      "  commute-check   --map G --presheaf P --coverage J\n"
      "  ideals          --ring R\n"
      "  gabriel-check   --topology T | --gradedspec S\n"
      "  gabriel-close   --topology T\n"
      "  localize        --multset S | --topology T\n"
      "  counterexample  (no file; uses --dmax)\n"
      "flags: --dmax N (default 6), --cap N (or ENCOV_CAP), --generators full,\n"
      "       --format text|machine";
}

}  // namespace encov
