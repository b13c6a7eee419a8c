#include "core/coverage.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/error.hpp"

namespace encov {

namespace {

void require_same_category(const Coverage& a, const Coverage& b, const char* op) {
  if (a.category->object_count() != b.category->object_count() ||
      !same_quantale(*a.category->base(), *b.category->base()) ||
      a.category->data().hom != b.category->data().hom)
    fail(ErrorKind::Precondition, std::string(op) + ": coverages live on different categories");
}

Sieve member_sieve(const Coverage& j, int x, const std::vector<int>& values) {
  Sieve s;
  s.category = j.category;
  s.target = x;
  s.values = values;
  return s;
}

std::string member_label(const Coverage& j, int x, const std::vector<int>& values) {
  return j.category->object(x) + ": " + values_label(*j.category->base(), values);
}

}  // namespace

void check_coverage_structure(const Coverage& j) {
  if (!j.category) fail(ErrorKind::Structure, "coverage: null category");
  const int n = j.category->object_count();
  if (static_cast<int>(j.families.size()) != n)
    fail(ErrorKind::Structure, "coverage: families are not total on objects");
  for (int x = 0; x < n; ++x)
    for (const auto& values : j.families[x]) {
      if (static_cast<int>(values.size()) != n)
        fail(ErrorKind::Structure, "coverage: member value map is not total on objects");
      for (int v : values)
        if (v < 0 || v >= j.category->base()->size())
          fail(ErrorKind::Structure, "coverage: member value out of carrier range");
    }
}

Coverage make_indiscrete(const CategoryPtr& c) {
  Coverage j;
  j.category = c;
  j.families.resize(c->object_count());
  for (int x = 0; x < c->object_count(); ++x)
    j.families[x].insert(maximal_sieve(c, x).values);
  return j;
}

Coverage make_discrete(const CategoryPtr& c, long long sieve_cap) {
  Coverage j;
  j.category = c;
  j.families.resize(c->object_count());
  for (int x = 0; x < c->object_count(); ++x)
    for (const Sieve& s : enumerate_sieves(c, x, sieve_cap)) j.families[x].insert(s.values);
  return j;
}

CoverageReport check_coverage(const Coverage& j, long long sieve_cap, bool with_t3) {
  check_coverage_structure(j);
  CoverageReport out;
  const auto& c = *j.category;
  const Quantale& q = *c.base();
  const int n = c.object_count();

  for (int x = 0; x < n && out.members == CheckStatus::Pass; ++x)
    for (const auto& values : j.families[x])
      if (!is_sieve(member_sieve(j, x, values)).empty()) {
        out.members = CheckStatus::Fail;
        out.members_witness = member_label(j, x, values);
        break;
      }

  for (int x = 0; x < n; ++x)
    if (!j.families[x].count(maximal_sieve(j.category, x).values)) {
      out.t1 = CheckStatus::Fail;
      out.t1_witness = "maximal sieve missing at " + c.object(x);
      break;
    }

  for (int x = 0; x < n && out.t2 == CheckStatus::Pass; ++x)
    for (const auto& values : j.families[x]) {
      const Sieve s = member_sieve(j, x, values);
      for (int y = 0; y < n && out.t2 == CheckStatus::Pass; ++y)
        for (int g = 0; g < q.size(); ++g) {
          if (!q.leq(g, c.hom(y, x))) continue;
          const Sieve p = pullback_sieve(s, g, y);
          if (!j.families[y].count(p.values)) {
            out.t2 = CheckStatus::Fail;
            out.t2_witness = "pullback of " + member_label(j, x, values) + " along (" +
                             q.label(g) + " at " + c.object(y) + ") gives " +
                             values_label(q, p.values) + ", absent at " + c.object(y);
            break;
          }
        }
      if (out.t2 == CheckStatus::Fail) break;
    }

  if (with_t3) {
    out.t3 = CheckStatus::Pass;
    for (int x = 0; x < n && out.t3 == CheckStatus::Pass; ++x) {
      std::vector<Sieve> all;
      try {
        all = enumerate_sieves(j.category, x, sieve_cap);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) throw;
        out.t3 = CheckStatus::NotChecked;
        out.t3_detail = e.what();
        break;
      }
      for (const Sieve& r : all) {
        if (j.families[x].count(r.values)) continue;
        for (const auto& s_values : j.families[x]) {
          bool premise = true;
          for (int y = 0; y < n && premise; ++y)
            for (int g = 0; g < q.size(); ++g) {
              if (!q.leq(g, s_values[y])) continue;
              if (!j.families[y].count(pullback_sieve(r, g, y).values)) {
                premise = false;
                break;
              }
            }
          if (premise) {
            out.t3 = CheckStatus::Fail;
            out.t3_detail = "sieve " + values_label(q, r.values) + " at " + c.object(x) +
                            " is forced by member " + values_label(q, s_values) +
                            " but absent";
            break;
          }
        }
        if (out.t3 == CheckStatus::Fail) break;
      }
    }
  }

  return out;
}

bool coverage_eq(const Coverage& j, const Coverage& k) {
  require_same_category(j, k, "coverage_eq");
  return j.families == k.families;
}

bool refinement_leq(const Coverage& j, const Coverage& k) {
  require_same_category(j, k, "refinement_leq");
  for (size_t x = 0; x < j.families.size(); ++x)
    if (!std::includes(k.families[x].begin(), k.families[x].end(), j.families[x].begin(),
                       j.families[x].end()))
      return false;
  return true;
}

Coverage coverage_meet(const std::vector<Coverage>& js) {
  if (js.empty()) fail(ErrorKind::Precondition, "coverage_meet: empty list");
  Coverage out = js.front();
  for (size_t i = 1; i < js.size(); ++i) {
    require_same_category(out, js[i], "coverage_meet");
    for (size_t x = 0; x < out.families.size(); ++x) {
      std::set<std::vector<int>> inter;
      std::set_intersection(out.families[x].begin(), out.families[x].end(),
                            js[i].families[x].begin(), js[i].families[x].end(),
                            std::inserter(inter, inter.begin()));
      out.families[x] = std::move(inter);
    }
  }
  return out;
}

namespace {

long long member_count(const Coverage& j) {
  long long total = 0;
  for (const auto& f : j.families) total += static_cast<long long>(f.size());
  return total;
}

/// Inflationary T2 step: add every admissible pullback of every member.
/// Returns true if anything was added.
bool t2_saturate_once(Coverage& j, long long cap) {
  const auto& c = *j.category;
  const Quantale& q = *c.base();
  const int n = c.object_count();
  bool grew = false;
  for (int x = 0; x < n; ++x) {
    const std::vector<std::vector<int>> snapshot(j.families[x].begin(), j.families[x].end());
    for (const auto& values : snapshot) {
      const Sieve s = member_sieve(j, x, values);
      for (int y = 0; y < n; ++y)
        for (int g = 0; g < q.size(); ++g) {
          if (!q.leq(g, c.hom(y, x))) continue;
          if (j.families[y].insert(pullback_sieve(s, g, y).values).second) grew = true;
        }
    }
  }
  if (member_count(j) > cap)
    fail(ErrorKind::CapExceeded, "coverage closure exceeded the member cap");
  return grew;
}

}  // namespace

Coverage coverage_join_closure(const std::vector<Coverage>& js, long long cap) {
  if (js.empty()) fail(ErrorKind::Precondition, "coverage_join_closure: empty list");
  Coverage out = make_indiscrete(js.front().category);
  for (const Coverage& j : js) {
    require_same_category(out, j, "coverage_join_closure");
    for (size_t x = 0; x < out.families.size(); ++x)
      out.families[x].insert(j.families[x].begin(), j.families[x].end());
  }
  while (t2_saturate_once(out, cap)) {
  }
  return out;
}

Coverage topology_closure(const Coverage& j, long long cap) {
  Coverage out = coverage_join_closure({j}, cap);
  const auto& c = *out.category;
  const Quantale& q = *c.base();
  const int n = c.object_count();

  std::vector<std::vector<Sieve>> all(n);
  for (int x = 0; x < n; ++x) all[x] = enumerate_sieves(out.category, x, cap);

  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < n; ++x)
      for (const Sieve& r : all[x]) {
        if (out.families[x].count(r.values)) continue;
        bool forced = false;
        for (const auto& s_values : out.families[x]) {
          bool premise = true;
          for (int y = 0; y < n && premise; ++y)
            for (int g = 0; g < q.size(); ++g) {
              if (!q.leq(g, s_values[y])) continue;
              if (!out.families[y].count(pullback_sieve(r, g, y).values)) {
                premise = false;
                break;
              }
            }
          if (premise) {
            forced = true;
            break;
          }
        }
        if (forced) {
          out.families[x].insert(r.values);
          grew = true;
        }
      }
    if (grew)
      while (t2_saturate_once(out, cap)) {
      }
  }
  return out;
}

Coverage base_change_coverage(const BaseChange& g, const Coverage& j, const CategoryPtr& image) {
  check_coverage_structure(j);
  if (!g.flags().faithful || !g.flags().conservative) {
    std::string why = !g.flags().faithful
                          ? "it is not faithful"
                          : "it is not conservative, witness " + g.flags().conservative_witness;
    fail(ErrorKind::Precondition,
         "base_change_coverage along '" + g.name() + "' refused: " + why +
             ", so distinct sieves can collapse and the image family is not a coverage");
  }
  Coverage out;
  out.category = image;
  out.families.resize(j.families.size());
  for (size_t x = 0; x < j.families.size(); ++x)
    for (const auto& values : j.families[x]) {
      const Sieve s = member_sieve(j, static_cast<int>(x), values);
      out.families[x].insert(base_change_sieve(g, s, image).values);
    }
  return out;
}

Coverage base_change_coverage(const BaseChange& g, const Coverage& j) {
  check_coverage_structure(j);
  return base_change_coverage(g, j, base_change_category(g, j.category));
}

CoverageUniverse build_coverage_universe(const CategoryPtr& c, long long sieve_cap) {
  CoverageUniverse u;
  u.category = c;
  const int n = c->object_count();
  const Quantale& q = *c->base();
  u.sieves.resize(n);
  u.maximal_index.assign(n, -1);
  std::vector<std::map<std::vector<int>, int>> index(n);
  for (int x = 0; x < n; ++x) {
    u.sieves[x] = enumerate_sieves(c, x, sieve_cap);
    if (u.sieves[x].size() > 64) {
      std::ostringstream os;
      os << "coverage enumeration on '" << c->name() << "': " << u.sieves[x].size()
         << " sieves at " << c->object(x) << " exceed the 64-bit mask width";
      fail(ErrorKind::CapExceeded, os.str());
    }
    for (size_t i = 0; i < u.sieves[x].size(); ++i)
      index[x][u.sieves[x][i].values] = static_cast<int>(i);
    const auto it = index[x].find(maximal_sieve(c, x).values);
    if (it == index[x].end())
      fail(ErrorKind::Internal, "sieve enumeration is missing the maximal sieve; this is a bug");
    u.maximal_index[x] = it->second;
  }

  u.req.resize(n);
  for (int x = 0; x < n; ++x) {
    u.req[x].assign(u.sieves[x].size(), std::vector<uint64_t>(n, 0));
    for (size_t s = 0; s < u.sieves[x].size(); ++s)
      for (int y = 0; y < n; ++y)
        for (int g = 0; g < q.size(); ++g) {
          if (!q.leq(g, c->hom(y, x))) continue;
          const Sieve p = pullback_sieve(u.sieves[x][s], g, y);
          const auto it = index[y].find(p.values);
          if (it == index[y].end())
            fail(ErrorKind::Internal, "pullback left the sieve universe; this is a bug");
          u.req[x][s][y] |= uint64_t{1} << it->second;
        }
  }
  return u;
}

std::vector<std::vector<uint64_t>> enumerate_coverage_masks(const CoverageUniverse& u,
                                                            long long cap) {
  const int n = static_cast<int>(u.sieves.size());
  long long total = 1;
  for (int x = 0; x < n; ++x) {
    const int free_bits = static_cast<int>(u.sieves[x].size()) - 1;
    if (free_bits >= 62 || total > (cap >> free_bits)) {
      std::ostringstream os;
      os << "coverage enumeration on '" << u.category->name()
         << "': candidate space exceeds cap " << cap;
      fail(ErrorKind::CapExceeded, os.str());
    }
    total <<= free_bits;
  }

  std::vector<std::vector<uint64_t>> out;
  std::vector<uint64_t> free_mask(n, 0);
  std::vector<uint64_t> masks(n, 0);
  const auto expand = [&](int x, uint64_t free_value) {
    const int mi = u.maximal_index[x];
    const uint64_t low = free_value & ((uint64_t{1} << mi) - 1);
    const uint64_t high = free_value >> mi;
    return (high << (mi + 1)) | (uint64_t{1} << mi) | low;
  };
  for (int x = 0; x < n; ++x) masks[x] = expand(x, 0);

  while (true) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      uint64_t m = masks[x];
      while (m) {
        const int s = __builtin_ctzll(m);
        m &= m - 1;
        for (int y = 0; y < n; ++y)
          if (u.req[x][s][y] & ~masks[y]) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
    }
    if (ok) out.push_back(masks);

    int pos = n - 1;
    while (pos >= 0) {
      const int free_bits = static_cast<int>(u.sieves[pos].size()) - 1;
      ++free_mask[pos];
      if (free_mask[pos] < (uint64_t{1} << free_bits)) {
        masks[pos] = expand(pos, free_mask[pos]);
        break;
      }
      free_mask[pos] = 0;
      masks[pos] = expand(pos, 0);
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Coverage coverage_from_masks(const CoverageUniverse& u, const std::vector<uint64_t>& masks) {
  Coverage j;
  j.category = u.category;
  j.families.resize(u.sieves.size());
  for (size_t x = 0; x < u.sieves.size(); ++x) {
    uint64_t m = masks[x];
    while (m) {
      const int s = __builtin_ctzll(m);
      m &= m - 1;
      j.families[x].insert(u.sieves[x][s].values);
    }
  }
  return j;
}

std::vector<Coverage> enumerate_coverages(const CategoryPtr& c, long long cap) {
  const CoverageUniverse u = build_coverage_universe(c, cap);
  std::vector<Coverage> out;
  for (const auto& masks : enumerate_coverage_masks(u, cap)) out.push_back(coverage_from_masks(u, masks));
  return out;
}

}  // namespace encov
