#include "core/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "core/error.hpp"

namespace encov {

namespace {

std::string elems(const std::vector<std::string>& labels, std::initializer_list<int> xs) {
  std::string out = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) out += ", ";
    out += labels[static_cast<size_t>(x)];
    first = false;
  }
  return out + ")";
}

void check_table(const std::string& who, const std::vector<std::vector<int>>& t, size_t n,
                 const char* name) {
  if (t.size() != n) fail(ErrorKind::Structure, who + ": " + name + " table is not total");
  for (const auto& row : t) {
    if (row.size() != n) fail(ErrorKind::Structure, who + ": " + name + " table is not total");
    for (int v : row)
      if (v < 0 || v >= static_cast<int>(n))
        fail(ErrorKind::Structure, who + ": " + name + " entry out of range");
  }
}

}  // namespace

void check_ring_structure(const RingData& data) {
  const std::string who = "ring '" + data.name + "'";
  const size_t n = data.labels.size();
  if (n == 0) fail(ErrorKind::Structure, who + ": empty carrier");
  for (size_t i = 0; i < n; ++i) {
    if (data.labels[i].empty()) fail(ErrorKind::Structure, who + ": empty element label");
    for (size_t j = i + 1; j < n; ++j)
      if (data.labels[i] == data.labels[j])
        fail(ErrorKind::Structure, who + ": duplicate element label '" + data.labels[i] + "'");
  }
  check_table(who, data.add, n, "add");
  check_table(who, data.mul, n, "mul");
  if (data.zero < 0 || data.zero >= static_cast<int>(n) || data.one < 0 ||
      data.one >= static_cast<int>(n))
    fail(ErrorKind::Structure, who + ": zero or one out of range");
}

std::vector<RingViolation> check_ring_axioms(const RingData& data) {
  check_ring_structure(data);
  std::vector<RingViolation> out;
  const int n = static_cast<int>(data.labels.size());
  const auto& L = data.labels;
  const auto add = [&](int a, int b) { return data.add[a][b]; };
  const auto mul = [&](int a, int b) { return data.mul[a][b]; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) out.push_back({"add.commutative", elems(L, {a, b})});
      for (int c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c)))
          out.push_back({"add.associative", elems(L, {a, b, c})});
    }
  for (int a = 0; a < n; ++a) {
    if (add(a, data.zero) != a) out.push_back({"add.zero", elems(L, {a})});
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (add(a, b) == data.zero) has_inverse = true;
    if (!has_inverse) out.push_back({"add.inverse", elems(L, {a})});
  }
  for (int a = 0; a < n; ++a) {
    if (mul(a, data.one) != a || mul(data.one, a) != a)
      out.push_back({"mul.unit", elems(L, {a})});
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          out.push_back({"mul.associative", elems(L, {a, b, c})});
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          out.push_back({"distributive.left", elems(L, {a, b, c})});
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
          out.push_back({"distributive.right", elems(L, {a, b, c})});
      }
  }
  return out;
}

FiniteRing::FiniteRing(RingData data) : data_(std::move(data)) {
  const int n = size();
  neg_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (data_.add[a][b] == data_.zero) {
        neg_[a] = b;
        break;
      }
  commutative_ = true;
  for (int a = 0; a < n && commutative_; ++a)
    for (int b = 0; b < n; ++b)
      if (data_.mul[a][b] != data_.mul[b][a]) {
        commutative_ = false;
        break;
      }
}

RingPtr FiniteRing::make(RingData data) {
  auto violations = check_ring_axioms(data);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "ring '" << data.name << "' fails " << violations.size()
       << " axiom check(s); first: " << violations.front().law << " at "
       << violations.front().witness;
    fail(ErrorKind::Precondition, os.str());
  }
  return RingPtr(new FiniteRing(std::move(data)));
}

std::optional<int> FiniteRing::find_label(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (data_.labels[i] == label) return i;
  return std::nullopt;
}

RingData make_zmod(int n) {
  if (n < 1) fail(ErrorKind::Precondition, "zmod modulus must be at least 1");
  RingData d;
  {
    std::ostringstream os;
    os << "zmod" << n;
    d.name = os.str();
  }
  for (int i = 0; i < n; ++i) {
    std::ostringstream os;
    os << i;
    d.labels.push_back(os.str());
  }
  d.add.assign(n, std::vector<int>(n));
  d.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      d.add[a][b] = (a + b) % n;
      d.mul[a][b] = (a * b) % n;
    }
  d.zero = 0;
  d.one = n == 1 ? 0 : 1;
  return d;
}

bool is_right_ideal(const FiniteRing& r, const Ideal& i, std::string* why) {
  const auto say = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (!std::is_sorted(i.begin(), i.end()) || std::adjacent_find(i.begin(), i.end()) != i.end())
    return say("element list is not sorted and unique");
  for (int x : i)
    if (x < 0 || x >= r.size()) return say("element out of range");
  if (!ideal_contains(i, r.zero())) return say("zero is missing");
  for (int x : i) {
    if (!ideal_contains(i, r.neg(x))) return say("not closed under negation at " + r.label(x));
    for (int y : i)
      if (!ideal_contains(i, r.add(x, y)))
        return say("not closed under addition at " + elems(r.data().labels, {x, y}));
    for (int a = 0; a < r.size(); ++a)
      if (!ideal_contains(i, r.mul(x, a)))
        return say("not closed under right multiplication at " + elems(r.data().labels, {x, a}));
  }
  return true;
}

bool ideal_contains(const Ideal& i, int x) {
  return std::binary_search(i.begin(), i.end(), x);
}

Ideal principal_right_ideal(const FiniteRing& r, int x) {
  std::set<int> s;
  for (int a = 0; a < r.size(); ++a) s.insert(r.mul(x, a));
  s.insert(r.zero());
  return Ideal(s.begin(), s.end());
}

Ideal ideal_sum(const FiniteRing& r, const Ideal& a, const Ideal& b) {
  std::set<int> s;
  for (int x : a)
    for (int y : b) s.insert(r.add(x, y));
  return Ideal(s.begin(), s.end());
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  Ideal out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Ideal whole_ring_ideal(const FiniteRing& r) {
  Ideal out(static_cast<size_t>(r.size()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Ideal zero_ideal(const FiniteRing& r) { return Ideal{r.zero()}; }

Ideal colon_ideal(const FiniteRing& r, const Ideal& i, int x) {
  Ideal out;
  for (int a = 0; a < r.size(); ++a)
    if (ideal_contains(i, r.mul(x, a))) out.push_back(a);
  std::string why;
  if (!is_right_ideal(r, out, &why))
    fail(ErrorKind::Internal, "colon produced a non-ideal (" + why + "); this is a bug");
  return out;
}

std::vector<Ideal> enumerate_right_ideals(const FiniteRing& r, long long cap) {
  if (r.size() > cap)
    fail(ErrorKind::CapExceeded, "ideal enumeration: carrier larger than the cap");
  std::set<Ideal> principals;
  for (int x = 0; x < r.size(); ++x) principals.insert(principal_right_ideal(r, x));
  std::set<Ideal> known(principals);
  known.insert(zero_ideal(r));
  std::queue<Ideal> work;
  for (const auto& i : known) work.push(i);
  while (!work.empty()) {
    const Ideal i = work.front();
    work.pop();
    for (const auto& p : principals) {
      Ideal s = ideal_sum(r, i, p);
      if (known.insert(s).second) work.push(std::move(s));
    }
  }
  std::vector<Ideal> out(known.begin(), known.end());
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string ideal_label(const FiniteRing& r, const Ideal& i) {
  if (i == zero_ideal(r)) return "(" + r.label(r.zero()) + ")";
  for (int x : i)
    if (principal_right_ideal(r, x) == i) return "(" + r.label(x) + ")";
  std::string out = "(";
  Ideal span = zero_ideal(r);
  bool first = true;
  for (int x : i) {
    if (ideal_contains(span, x)) continue;
    if (!first) out += ",";
    out += r.label(x);
    first = false;
    span = ideal_sum(r, span, principal_right_ideal(r, x));
    if (span == i) break;
  }
  return out + ")";
}

bool GabrielReport::all_pass() const {
  return nonempty == CheckStatus::Pass && r1 == CheckStatus::Pass && r2 == CheckStatus::Pass &&
         r3 == CheckStatus::Pass;
}

bool SiteAxiomReport::all_pass() const {
  return t1 == CheckStatus::Pass && t2 == CheckStatus::Pass && t3 == CheckStatus::Pass;
}

namespace {

void check_topology_structure(const GabrielTopology& t) {
  if (!t.ring) fail(ErrorKind::Structure, "ideal family: null ring");
  for (const auto& i : t.members) {
    std::string why;
    if (!is_right_ideal(*t.ring, i, &why))
      fail(ErrorKind::Structure, "ideal family: member is not a right ideal (" + why + ")");
  }
}

}  // namespace

GabrielReport check_gabriel(const GabrielTopology& t, long long cap) {
  check_topology_structure(t);
  GabrielReport out;
  const FiniteRing& r = *t.ring;
  if (t.members.empty()) {
    out.nonempty = CheckStatus::Fail;
    return out;
  }
  const std::vector<Ideal> all = enumerate_right_ideals(r, cap);

  for (const auto& i : t.members) {
    for (const auto& j : all)
      if (std::includes(j.begin(), j.end(), i.begin(), i.end()) && !t.members.count(j)) {
        out.r1 = CheckStatus::Fail;
        out.r1_witness = ideal_label(r, i) + " is a member but " + ideal_label(r, j) + " is not";
        break;
      }
    if (out.r1 == CheckStatus::Fail) break;
  }

  for (const auto& i : t.members) {
    for (int x = 0; x < r.size(); ++x) {
      const Ideal c = colon_ideal(r, i, x);
      if (!t.members.count(c)) {
        out.r2 = CheckStatus::Fail;
        out.r2_witness = "(" + ideal_label(r, i) + " : " + r.label(x) + ") = " +
                         ideal_label(r, c) + " is not a member";
        break;
      }
    }
    if (out.r2 == CheckStatus::Fail) break;
  }

  for (const auto& i : all) {
    if (t.members.count(i)) continue;
    for (const auto& j : t.members) {
      bool premise = true;
      for (int x : j)
        if (!t.members.count(colon_ideal(r, i, x))) {
          premise = false;
          break;
        }
      if (premise) {
        out.r3 = CheckStatus::Fail;
        out.r3_witness = ideal_label(r, i) + " is saturated against member " +
                         ideal_label(r, j) + " but absent";
        break;
      }
    }
    if (out.r3 == CheckStatus::Fail) break;
  }
  return out;
}

SiteAxiomReport check_translated_site_axioms(const GabrielTopology& t, long long cap) {
  check_topology_structure(t);
  SiteAxiomReport out;
  const FiniteRing& r = *t.ring;

  if (!t.members.count(whole_ring_ideal(r))) {
    out.t1 = CheckStatus::Fail;
    out.t1_witness = "the maximal sieve " + ideal_label(r, whole_ring_ideal(r)) + " is absent";
  }

  for (const auto& i : t.members) {
    for (int x = 0; x < r.size(); ++x) {
      const Ideal c = colon_ideal(r, i, x);
      if (!t.members.count(c)) {
        out.t2 = CheckStatus::Fail;
        out.t2_witness = "pullback (" + ideal_label(r, i) + " : " + r.label(x) +
                         ") = " + ideal_label(r, c) + " is not a member";
        break;
      }
    }
    if (out.t2 == CheckStatus::Fail) break;
  }

  const std::vector<Ideal> all = enumerate_right_ideals(r, cap);
  for (const auto& i : all) {
    if (t.members.count(i)) continue;
    for (const auto& j : t.members) {
      bool premise = true;
      for (int x : j)
        if (!t.members.count(colon_ideal(r, i, x))) {
          premise = false;
          break;
        }
      if (premise) {
        out.t3 = CheckStatus::Fail;
        out.t3_witness = ideal_label(r, i) + " is forced by member " + ideal_label(r, j) +
                         " but absent";
        break;
      }
    }
    if (out.t3 == CheckStatus::Fail) break;
  }
  return out;
}

GabrielTopology gabriel_closure(const RingPtr& r, const std::vector<Ideal>& seeds,
                                long long cap) {
  if (!r) fail(ErrorKind::Structure, "gabriel_closure: null ring");
  GabrielTopology t;
  t.ring = r;
  for (const auto& i : seeds) {
    std::string why;
    if (!is_right_ideal(*r, i, &why))
      fail(ErrorKind::Precondition, "gabriel_closure: seed is not a right ideal (" + why + ")");
    t.members.insert(i);
  }
  t.members.insert(whole_ring_ideal(*r));
  const std::vector<Ideal> all = enumerate_right_ideals(*r, cap);

  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Ideal> snapshot(t.members.begin(), t.members.end());
    for (const auto& i : snapshot) {
      for (const auto& j : all)
        if (std::includes(j.begin(), j.end(), i.begin(), i.end()))
          if (t.members.insert(j).second) grew = true;
      for (int x = 0; x < r->size(); ++x)
        if (t.members.insert(colon_ideal(*r, i, x)).second) grew = true;
    }
    for (const auto& i : all) {
      if (t.members.count(i)) continue;
      for (const auto& j : t.members) {
        bool premise = true;
        for (int x : j)
          if (!t.members.count(colon_ideal(*r, i, x))) {
            premise = false;
            break;
          }
        if (premise) {
          t.members.insert(i);
          grew = true;
          break;
        }
      }
    }
  }
  return t;
}

GabrielTopology from_mult_set(const RingPtr& r, const std::vector<int>& s, long long cap) {
  if (!r) fail(ErrorKind::Structure, "from_mult_set: null ring");
  std::set<int> sset(s.begin(), s.end());
  for (int x : sset)
    if (x < 0 || x >= r->size())
      fail(ErrorKind::Precondition, "from_mult_set: element out of range");
  if (!sset.count(r->one()))
    fail(ErrorKind::Precondition, "from_mult_set: the set does not contain one");
  for (int x : sset)
    for (int y : sset)
      if (!sset.count(r->mul(x, y)))
        fail(ErrorKind::Precondition, "from_mult_set: not closed under multiplication at " +
                                          elems(r->data().labels, {x, y}));

  GabrielTopology t;
  t.ring = r;
  for (const auto& i : enumerate_right_ideals(*r, cap)) {
    bool member = true;
    for (int a = 0; a < r->size() && member; ++a) {
      const Ideal c = colon_ideal(*r, i, a);
      bool meets = false;
      for (int x : sset)
        if (ideal_contains(c, x)) {
          meets = true;
          break;
        }
      if (!meets) member = false;
    }
    if (member) t.members.insert(i);
  }
  const GabrielReport rep = check_gabriel(t, cap);
  if (!rep.all_pass())
    fail(ErrorKind::Internal, "H_S failed the Gabriel axioms; this is a bug");
  return t;
}

Ideal torsion_ideal(const GabrielTopology& t) {
  check_topology_structure(t);
  const FiniteRing& r = *t.ring;
  Ideal out;
  for (int x = 0; x < r.size(); ++x) {
    bool kills = false;
    for (const auto& j : t.members) {
      bool zero_on_j = true;
      for (int y : j)
        if (r.mul(x, y) != r.zero()) {
          zero_on_j = false;
          break;
        }
      if (zero_on_j) {
        kills = true;
        break;
      }
    }
    if (kills) out.push_back(x);
  }
  std::string why;
  if (!is_right_ideal(r, out, &why))
    fail(ErrorKind::Precondition,
         "torsion of this family is not a right ideal (" + why + "); the family is not a Gabriel topology");
  return out;
}

void check_module_structure(const ModuleData& m) {
  const std::string who = "module '" + m.name + "'";
  if (!m.ring) fail(ErrorKind::Structure, who + ": null ring");
  const size_t n = m.labels.size();
  if (n == 0) fail(ErrorKind::Structure, who + ": empty carrier");
  check_table(who, m.add, n, "add");
  if (m.action.size() != n) fail(ErrorKind::Structure, who + ": action table is not total");
  for (const auto& row : m.action) {
    if (row.size() != static_cast<size_t>(m.ring->size()))
      fail(ErrorKind::Structure, who + ": action table is not total");
    for (int v : row)
      if (v < 0 || v >= static_cast<int>(n))
        fail(ErrorKind::Structure, who + ": action entry out of range");
  }
  if (m.zero < 0 || m.zero >= static_cast<int>(n))
    fail(ErrorKind::Structure, who + ": zero out of range");
}

std::vector<RingViolation> check_module_axioms(const ModuleData& m) {
  check_module_structure(m);
  std::vector<RingViolation> out;
  const FiniteRing& r = *m.ring;
  const int n = static_cast<int>(m.labels.size());
  const auto add = [&](int a, int b) { return m.add[a][b]; };
  const auto act = [&](int a, int x) { return m.action[a][x]; };

  for (int a = 0; a < n; ++a) {
    if (add(a, m.zero) != a) out.push_back({"add.zero", m.labels[a]});
    bool inv = false;
    for (int b = 0; b < n; ++b)
      if (add(a, b) == m.zero) inv = true;
    if (!inv) out.push_back({"add.inverse", m.labels[a]});
    for (int b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) out.push_back({"add.commutative", m.labels[a] + "," + m.labels[b]});
      for (int c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c)))
          out.push_back({"add.associative", m.labels[a] + "," + m.labels[b] + "," + m.labels[c]});
    }
  }
  for (int a = 0; a < n; ++a) {
    if (act(a, r.one()) != a) out.push_back({"action.unit", m.labels[a]});
    for (int x = 0; x < r.size(); ++x) {
      for (int y = 0; y < r.size(); ++y)
        if (act(act(a, x), y) != act(a, r.mul(x, y)))
          out.push_back({"action.associative", m.labels[a] + "," + r.label(x) + "," + r.label(y)});
      for (int b = 0; b < n; ++b)
        if (act(add(a, b), x) != add(act(a, x), act(b, x)))
          out.push_back({"action.additive", m.labels[a] + "," + m.labels[b] + "," + r.label(x)});
      for (int y = 0; y < r.size(); ++y)
        if (act(a, r.add(x, y)) != add(act(a, x), act(a, y)))
          out.push_back({"action.distributive", m.labels[a] + "," + r.label(x) + "," + r.label(y)});
    }
  }
  return out;
}

ModuleData ring_as_module(const RingPtr& r) {
  ModuleData m;
  m.name = r->name() + " as a module";
  m.ring = r;
  m.labels = r->data().labels;
  m.add = r->data().add;
  m.action = r->data().mul;
  m.zero = r->zero();
  return m;
}

ModuleData ideal_as_module(const RingPtr& r, const Ideal& i) {
  std::string why;
  if (!is_right_ideal(*r, i, &why))
    fail(ErrorKind::Precondition, "ideal_as_module: not a right ideal (" + why + ")");
  ModuleData m;
  m.name = ideal_label(*r, i) + " as a module";
  m.ring = r;
  std::map<int, int> pos;
  for (size_t p = 0; p < i.size(); ++p) {
    pos[i[p]] = static_cast<int>(p);
    m.labels.push_back(r->label(i[p]));
  }
  const int n = static_cast<int>(i.size());
  m.add.assign(n, std::vector<int>(n));
  m.action.assign(n, std::vector<int>(r->size()));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) m.add[p][q] = pos.at(r->add(i[p], i[q]));
    for (int x = 0; x < r->size(); ++x) m.action[p][x] = pos.at(r->mul(i[p], x));
  }
  m.zero = pos.at(r->zero());
  return m;
}

ModuleData quotient_module(const RingPtr& r, const Ideal& n) {
  std::string why;
  if (!is_right_ideal(*r, n, &why))
    fail(ErrorKind::Precondition, "quotient_module: not a right ideal (" + why + ")");
  std::vector<int> rep(static_cast<size_t>(r->size()));
  for (int x = 0; x < r->size(); ++x) {
    int best = x;
    for (int m : n) best = std::min(best, r->add(x, m));
    rep[static_cast<size_t>(x)] = best;
  }
  std::vector<int> carrier;
  for (int x = 0; x < r->size(); ++x)
    if (rep[static_cast<size_t>(x)] == x) carrier.push_back(x);
  std::map<int, int> pos;
  for (size_t p = 0; p < carrier.size(); ++p) pos[carrier[p]] = static_cast<int>(p);

  ModuleData m;
  m.name = r->name() + "/" + ideal_label(*r, n);
  m.ring = r;
  const int k = static_cast<int>(carrier.size());
  m.add.assign(k, std::vector<int>(k));
  m.action.assign(k, std::vector<int>(r->size()));
  for (int p = 0; p < k; ++p) {
    m.labels.push_back(r->label(carrier[p]));
    for (int q = 0; q < k; ++q)
      m.add[p][q] = pos.at(rep[static_cast<size_t>(r->add(carrier[p], carrier[q]))]);
    for (int x = 0; x < r->size(); ++x)
      m.action[p][x] = pos.at(rep[static_cast<size_t>(r->mul(carrier[p], x))]);
  }
  m.zero = pos.at(rep[static_cast<size_t>(r->zero())]);
  return m;
}

namespace {

/// Smallest-first additive generating set: repeatedly adjoin the least
/// element outside the current additive span.
std::vector<int> additive_generators(const ModuleData& m) {
  const int n = static_cast<int>(m.labels.size());
  std::vector<bool> span(n, false);
  span[m.zero] = true;
  int covered = 1;
  std::vector<int> gens;
  while (covered < n) {
    int pick = -1;
    for (int e = 0; e < n; ++e)
      if (!span[e]) {
        pick = e;
        break;
      }
    gens.push_back(pick);
    // close the span under addition
    bool grew = true;
    span[pick] = true;
    ++covered;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a)
        if (span[a])
          for (int b = 0; b < n; ++b)
            if (span[b] && !span[m.add[a][b]]) {
              span[m.add[a][b]] = true;
              ++covered;
              grew = true;
            }
    }
  }
  return gens;
}

}  // namespace

std::vector<std::vector<int>> module_homs(const ModuleData& from, const ModuleData& to,
                                          long long cap) {
  check_module_structure(from);
  check_module_structure(to);
  const int nf = static_cast<int>(from.labels.size());
  const int nt = static_cast<int>(to.labels.size());
  const std::vector<int> gens = additive_generators(from);

  long long total = 1;
  for (size_t j = 0; j < gens.size(); ++j) {
    total *= nt;
    if (total > cap)
      fail(ErrorKind::CapExceeded, "module hom search: candidate space exceeds cap");
  }

  std::vector<std::vector<int>> out;
  std::vector<int> img(gens.size(), 0);
  while (true) {
    std::vector<int> val(nf, -1);
    val[from.zero] = to.zero;
    bool ok = true;
    std::queue<int> work;
    work.push(from.zero);
    while (!work.empty() && ok) {
      const int v = work.front();
      work.pop();
      for (size_t j = 0; j < gens.size(); ++j) {
        const int nv = from.add[v][gens[j]];
        const int cand = to.add[val[v]][img[j]];
        if (val[nv] == -1) {
          val[nv] = cand;
          work.push(nv);
        } else if (val[nv] != cand) {
          ok = false;
          break;
        }
      }
    }
    if (ok)
      for (int v = 0; v < nf; ++v)
        if (val[v] == -1)
          fail(ErrorKind::Internal, "additive generators failed to span; this is a bug");
    if (ok)
      for (int a = 0; a < nf && ok; ++a)
        for (int b = 0; b < nf; ++b)
          if (val[from.add[a][b]] != to.add[val[a]][val[b]]) {
            ok = false;
            break;
          }
    if (ok)
      for (int a = 0; a < nf && ok; ++a)
        for (int x = 0; x < from.ring->size(); ++x)
          if (val[from.action[a][x]] != to.action[val[a]][x]) {
            ok = false;
            break;
          }
    if (ok) out.push_back(std::move(val));

    int pos = static_cast<int>(gens.size()) - 1;
    while (pos >= 0 && ++img[pos] == nt) img[pos--] = 0;
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool same_ring(const FiniteRing& a, const FiniteRing& b) {
  if (&a == &b) return true;
  return a.data().labels == b.data().labels && a.data().add == b.data().add &&
         a.data().mul == b.data().mul && a.data().zero == b.data().zero &&
         a.data().one == b.data().one;
}

}  // namespace

bool is_j_closed_module(const ModuleData& m, const GabrielTopology& t, long long cap,
                        std::string* witness) {
  check_module_structure(m);
  check_topology_structure(t);
  if (!same_ring(*m.ring, *t.ring))
    fail(ErrorKind::Precondition, "module and ideal family live over different rings");
  const int n = static_cast<int>(m.labels.size());
  for (const auto& i : t.members) {
    const ModuleData im = ideal_as_module(t.ring, i);
    const std::vector<std::vector<int>> homs = module_homs(im, m, cap);
    std::map<std::vector<int>, int> restriction;
    for (int x = 0; x < n; ++x) {
      std::vector<int> f(i.size());
      for (size_t p = 0; p < i.size(); ++p) f[p] = m.action[x][i[p]];
      const auto [it, fresh] = restriction.emplace(std::move(f), x);
      if (!fresh) {
        if (witness)
          *witness = "restriction to " + ideal_label(*t.ring, i) + " is not injective: " +
                     m.labels[it->second] + " and " + m.labels[x] + " agree";
        return false;
      }
    }
    for (const auto& h : homs)
      if (!restriction.count(h)) {
        if (witness)
          *witness = "a hom from " + ideal_label(*t.ring, i) +
                     " is not the restriction of any element";
        return false;
      }
  }
  return true;
}

Localization localize(const RingPtr& a, const GabrielTopology& t, long long cap) {
  const GabrielReport rep = check_gabriel(t, cap);
  if (!rep.all_pass())
    fail(ErrorKind::Precondition, "localize: the ideal family fails the Gabriel axioms");

  Localization out;
  out.i_min = whole_ring_ideal(*a);
  for (const auto& j : t.members) out.i_min = ideal_intersection(out.i_min, j);
  if (!t.members.count(out.i_min))
    fail(ErrorKind::Internal,
         "the intersection of all members is not a member; this contradicts the axioms");
  out.torsion = torsion_ideal(t);
  out.quotient = quotient_module(a, out.torsion);

  const ModuleData im = ideal_as_module(a, out.i_min);
  out.homs = module_homs(im, out.quotient, cap);

  std::map<std::vector<int>, int> hom_index;
  for (size_t h = 0; h < out.homs.size(); ++h)
    hom_index[out.homs[h]] = static_cast<int>(h);

  // quotient position of each ring element's coset
  std::vector<int> qpos(static_cast<size_t>(a->size()), -1);
  {
    std::map<std::string, int> by_label;
    for (size_t p = 0; p < out.quotient.labels.size(); ++p)
      by_label[out.quotient.labels[p]] = static_cast<int>(p);
    for (int x = 0; x < a->size(); ++x) {
      int best = x;
      for (int m : out.torsion) best = std::min(best, a->add(x, m));
      qpos[static_cast<size_t>(x)] = by_label.at(a->label(best));
    }
  }

  out.canonical.assign(static_cast<size_t>(a->size()), -1);
  const size_t k = out.i_min.size();
  for (int x = 0; x < a->size(); ++x) {
    std::vector<int> f(k);
    for (size_t p = 0; p < k; ++p) f[p] = qpos[static_cast<size_t>(a->mul(x, out.i_min[p]))];
    const auto it = hom_index.find(f);
    if (it == hom_index.end())
      fail(ErrorKind::Internal, "the canonical map misses the hom module; this is a bug");
    out.canonical[static_cast<size_t>(x)] = it->second;
  }
  std::vector<int> zero_hom(k, out.quotient.zero);
  const int zero_idx = hom_index.at(zero_hom);
  for (int x = 0; x < a->size(); ++x)
    if (out.canonical[static_cast<size_t>(x)] == zero_idx) out.kernel.push_back(x);

  if (!a->commutative()) return out;

  const int H = static_cast<int>(out.homs.size());
  RingData ld;
  ld.name = "localization of " + a->name();
  for (int h = 0; h < H; ++h) {
    std::ostringstream os;
    os << "h" << h;
    ld.labels.push_back(os.str());
  }
  ld.add.assign(H, std::vector<int>(H));
  ld.mul.assign(H, std::vector<int>(H));
  for (int i = 0; i < H; ++i)
    for (int j = 0; j < H; ++j) {
      std::vector<int> sum(k);
      for (size_t p = 0; p < k; ++p) sum[p] = out.quotient.add[out.homs[i][p]][out.homs[j][p]];
      const auto it = hom_index.find(sum);
      if (it == hom_index.end())
        fail(ErrorKind::Internal, "hom addition left the hom module; this is a bug");
      ld.add[i][j] = it->second;

      // (f * g)(x) = f(u) for any u in I_min lying in the coset g(x);
      // all lifts must agree, which we verify rather than assume.
      std::vector<int> prod(k);
      for (size_t p = 0; p < k; ++p) {
        int value = -1;
        for (size_t up = 0; up < k; ++up) {
          if (qpos[static_cast<size_t>(out.i_min[up])] != out.homs[j][p]) continue;
          const int candidate = out.homs[i][up];
          if (value == -1)
            value = candidate;
          else if (value != candidate)
            fail(ErrorKind::Internal, "hom multiplication is not well defined; this is a bug");
        }
        if (value == -1)
          fail(ErrorKind::Internal,
               "no lift of the hom value inside the minimal ideal; this is a bug");
        prod[p] = value;
      }
      const auto it2 = hom_index.find(prod);
      if (it2 == hom_index.end())
        fail(ErrorKind::Internal, "hom multiplication left the hom module; this is a bug");
      ld.mul[i][j] = it2->second;
    }
  ld.zero = zero_idx;
  ld.one = out.canonical[static_cast<size_t>(a->one())];
  try {
    out.localized = FiniteRing::make(std::move(ld));
  } catch (const Error&) {
    fail(ErrorKind::Internal, "the localized multiplication failed the ring axioms; this is a bug");
  }
  return out;
}

RingPtr ring_of_fractions_oracle(const RingPtr& a, const std::vector<int>& s) {
  if (!a->commutative())
    fail(ErrorKind::Precondition, "ring of fractions: the ring is not commutative");
  std::set<int> sset(s.begin(), s.end());
  for (int x : sset)
    if (x < 0 || x >= a->size())
      fail(ErrorKind::Precondition, "ring of fractions: element out of range");
  if (!sset.count(a->one()))
    fail(ErrorKind::Precondition, "ring of fractions: the set does not contain one");
  for (int x : sset)
    for (int y : sset)
      if (!sset.count(a->mul(x, y)))
        fail(ErrorKind::Precondition, "ring of fractions: not closed under multiplication");

  const std::vector<int> sv(sset.begin(), sset.end());
  const int ns = static_cast<int>(sv.size());
  const int n = a->size();
  const int total = n * ns;
  std::vector<int> parent(static_cast<size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  const std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  const auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
  };
  const auto pair_id = [&](int x, int si) { return x * ns + si; };

  for (int x = 0; x < n; ++x)
    for (int si = 0; si < ns; ++si)
      for (int y = 0; y < n; ++y)
        for (int ti = 0; ti < ns; ++ti) {
          const int diff = a->sub(a->mul(x, sv[ti]), a->mul(y, sv[si]));
          for (int u : sv)
            if (a->mul(u, diff) == a->zero()) {
              unite(pair_id(x, si), pair_id(y, ti));
              break;
            }
        }

  std::map<int, int> class_pos;
  std::vector<int> roots;
  for (int p = 0; p < total; ++p)
    if (find(p) == p) {
      class_pos[p] = static_cast<int>(roots.size());
      roots.push_back(p);
    }
  const auto cls = [&](int x, int si) { return class_pos.at(find(pair_id(x, si))); };

  RingData d;
  d.name = a->name() + " fractions";
  for (int root : roots)
    d.labels.push_back(a->label(root / ns) + "/" + a->label(sv[static_cast<size_t>(root % ns)]));
  const int m = static_cast<int>(roots.size());
  d.add.assign(m, std::vector<int>(m));
  d.mul.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int xa = roots[i] / ns, si = roots[i] % ns;
      const int xb = roots[j] / ns, ti = roots[j] % ns;
      const int st = a->mul(sv[static_cast<size_t>(si)], sv[static_cast<size_t>(ti)]);
      const auto sti = static_cast<int>(
          std::lower_bound(sv.begin(), sv.end(), st) - sv.begin());
      const int num = a->add(a->mul(xa, sv[static_cast<size_t>(ti)]),
                             a->mul(xb, sv[static_cast<size_t>(si)]));
      d.add[i][j] = cls(num, sti);
      d.mul[i][j] = cls(a->mul(xa, xb), sti);
    }
  const auto one_pos = static_cast<int>(
      std::lower_bound(sv.begin(), sv.end(), a->one()) - sv.begin());
  d.zero = cls(a->zero(), one_pos);
  d.one = cls(a->one(), one_pos);
  try {
    return FiniteRing::make(std::move(d));
  } catch (const Error&) {
    fail(ErrorKind::Internal, "the fraction construction failed the ring axioms; this is a bug");
  }
}

namespace {

int additive_order(const FiniteRing& r, int x) {
  int acc = x;
  int ord = 1;
  while (acc != r.zero()) {
    acc = r.add(acc, x);
    ++ord;
  }
  return ord;
}

bool extend_isomorphism(const FiniteRing& a, const FiniteRing& b, std::vector<int>& perm,
                        std::vector<bool>& used, const std::vector<int>& aord,
                        const std::vector<int>& bord) {
  const int n = a.size();
  int src = -1;
  for (int i = 0; i < n; ++i)
    if (perm[static_cast<size_t>(i)] == -1) {
      src = i;
      break;
    }
  if (src == -1) return true;
  for (int tgt = 0; tgt < n; ++tgt) {
    if (used[static_cast<size_t>(tgt)] ||
        aord[static_cast<size_t>(src)] != bord[static_cast<size_t>(tgt)])
      continue;
    perm[static_cast<size_t>(src)] = tgt;
    used[static_cast<size_t>(tgt)] = true;
    bool ok = true;
    for (int q = 0; q < n && ok; ++q) {
      if (perm[static_cast<size_t>(q)] == -1) continue;
      const int pq = perm[static_cast<size_t>(q)];
      const int add1 = a.add(src, q), add2 = a.add(q, src);
      const int mul1 = a.mul(src, q), mul2 = a.mul(q, src);
      if (perm[static_cast<size_t>(add1)] != -1 &&
          perm[static_cast<size_t>(add1)] != b.add(tgt, pq))
        ok = false;
      if (ok && perm[static_cast<size_t>(add2)] != -1 &&
          perm[static_cast<size_t>(add2)] != b.add(pq, tgt))
        ok = false;
      if (ok && perm[static_cast<size_t>(mul1)] != -1 &&
          perm[static_cast<size_t>(mul1)] != b.mul(tgt, pq))
        ok = false;
      if (ok && perm[static_cast<size_t>(mul2)] != -1 &&
          perm[static_cast<size_t>(mul2)] != b.mul(pq, tgt))
        ok = false;
    }
    if (ok && extend_isomorphism(a, b, perm, used, aord, bord)) return true;
    perm[static_cast<size_t>(src)] = -1;
    used[static_cast<size_t>(tgt)] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_ring_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  std::vector<int> aord(static_cast<size_t>(n)), bord(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    aord[static_cast<size_t>(i)] = additive_order(a, i);
    bord[static_cast<size_t>(i)] = additive_order(b, i);
  }
  std::vector<int> perm(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  perm[static_cast<size_t>(a.zero())] = b.zero();
  used[static_cast<size_t>(b.zero())] = true;
  if (a.one() != a.zero()) {
    if (b.one() == b.zero() || used[static_cast<size_t>(b.one())]) return std::nullopt;
    if (aord[static_cast<size_t>(a.one())] != bord[static_cast<size_t>(b.one())])
      return std::nullopt;
    perm[static_cast<size_t>(a.one())] = b.one();
    used[static_cast<size_t>(b.one())] = true;
  }
  if (extend_isomorphism(a, b, perm, used, aord, bord)) return perm;
  return std::nullopt;
}

std::string describe_ring(const FiniteRing& r) {
  const RingPtr z = FiniteRing::make(make_zmod(r.size()));
  std::ostringstream os;
  if (find_ring_isomorphism(r, *z))
    os << "zmod" << r.size();
  else
    os << "ring of order " << r.size();
  return os.str();
}

}  // namespace encov
