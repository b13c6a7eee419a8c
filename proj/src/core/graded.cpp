#include "core/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace encov {

MonomialIdeal make_monomial_ideal(std::vector<Monomial> gens) {
  for (const auto& [a, b] : gens)
    if (a < 0 || b < 0) fail(ErrorKind::Precondition, "negative exponent in a monomial ideal");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens)
      if (h != g && h.first <= g.first && h.second <= g.second) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  return MonomialIdeal{std::move(minimal)};
}

MonomialIdeal unit_monomial_ideal() { return MonomialIdeal{{{0, 0}}}; }
MonomialIdeal zero_monomial_ideal() { return MonomialIdeal{}; }

bool contains_monomial(const MonomialIdeal& i, Monomial e) {
  for (const auto& g : i.gens)
    if (g.first <= e.first && g.second <= e.second) return true;
  return false;
}

bool monomial_ideal_leq(const MonomialIdeal& a, const MonomialIdeal& b) {
  for (const auto& g : a.gens)
    if (!contains_monomial(b, g)) return false;
  return true;
}

MonomialIdeal colon_monomial(const MonomialIdeal& i, Monomial e) {
  std::vector<Monomial> gens;
  gens.reserve(i.gens.size());
  for (const auto& g : i.gens)
    gens.push_back({std::max(g.first - e.first, 0), std::max(g.second - e.second, 0)});
  return make_monomial_ideal(std::move(gens));
}

std::string monomial_label(Monomial e) {
  if (e.first == 0 && e.second == 0) return "1";
  std::ostringstream os;
  if (e.first == 1)
    os << "x";
  else if (e.first > 1)
    os << "x^" << e.first;
  if (e.second > 0) {
    if (e.first > 0) os << " ";
    if (e.second == 1)
      os << "y";
    else
      os << "y^" << e.second;
  }
  return os.str();
}

std::string monomial_ideal_label(const MonomialIdeal& i) {
  if (i.gens.empty()) return "<0>";
  std::string out = "<";
  for (size_t k = 0; k < i.gens.size(); ++k) {
    if (k > 0) out += ", ";
    out += monomial_label(i.gens[k]);
  }
  return out + ">";
}

std::optional<Monomial> parse_monomial(const std::string& text) {
  int x = 0, y = 0;
  std::istringstream is(text);
  std::string tok;
  bool any = false;
  while (is >> tok) {
    any = true;
    if (tok == "1") continue;
    if (tok[0] != 'x' && tok[0] != 'y') return std::nullopt;
    const char var = tok[0];
    int exp = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() < 3) return std::nullopt;
      exp = 0;
      for (size_t p = 2; p < tok.size(); ++p) {
        if (tok[p] < '0' || tok[p] > '9') return std::nullopt;
        exp = exp * 10 + (tok[p] - '0');
      }
    }
    (var == 'x' ? x : y) += exp;
  }
  if (!any) return std::nullopt;
  return Monomial{x, y};
}

namespace {

void check_spec(const GradedTopologySpec& s) {
  if (s.predicate != "H_powers_of")
    fail(ErrorKind::Precondition, "unknown membership predicate '" + s.predicate + "'");
  if (s.variable != 'x' && s.variable != 'y')
    fail(ErrorKind::Precondition, "membership predicate variable must be x or y");
}

Monomial power_of(char variable, int n) {
  return variable == 'x' ? Monomial{n, 0} : Monomial{0, n};
}

std::vector<Monomial> monomials_up_to(int d_max) {
  std::vector<Monomial> out;
  for (int a = 0; a <= d_max; ++a)
    for (int b = 0; a + b <= d_max; ++b) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool h_s_member(const MonomialIdeal& i, const GradedTopologySpec& s, int d_max) {
  check_spec(s);
  if (d_max < 1) fail(ErrorKind::Precondition, "degree bound must be at least 1");
  for (const auto& a : monomials_up_to(d_max)) {
    const MonomialIdeal c = colon_monomial(i, a);
    bool meets = false;
    for (int n = 0; n <= d_max; ++n)
      if (contains_monomial(c, power_of(s.variable, n))) {
        meets = true;
        break;
      }
    if (!meets) return false;
  }
  return true;
}

bool h_s_member_staircase(const MonomialIdeal& i, const GradedTopologySpec& s, int d_max) {
  check_spec(s);
  if (d_max < 1) fail(ErrorKind::Precondition, "degree bound must be at least 1");
  for (int n = 0; n <= d_max; ++n)
    if (contains_monomial(i, power_of(s.variable, n))) return true;
  return false;
}

IdealPredicate graded_membership(const GradedTopologySpec& s, int d_max) {
  check_spec(s);
  return [s, d_max](const MonomialIdeal& i) { return h_s_member(i, s, d_max); };
}

bool GradedGabrielReport::all_pass() const {
  return g1 == CheckStatus::Pass && g2 == CheckStatus::Pass && g3 == CheckStatus::Pass;
}

GradedGabrielReport check_graded_gabriel(const IdealPredicate& member,
                                         std::vector<MonomialIdeal> sample, int d_max,
                                         long long cap) {
  if (d_max < 1) fail(ErrorKind::Precondition, "degree bound must be at least 1");
  const std::vector<Monomial> quantifier = monomials_up_to(d_max);

  std::set<MonomialIdeal> closed(sample.begin(), sample.end());
  const size_t initial = closed.size();
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<MonomialIdeal> snapshot(closed.begin(), closed.end());
    for (const auto& i : snapshot)
      for (const auto& a : quantifier)
        if (closed.insert(colon_monomial(i, a)).second) grew = true;
    if (static_cast<long long>(closed.size()) > cap)
      fail(ErrorKind::CapExceeded, "colon closure of the sample exceeds the cap");
  }

  GradedGabrielReport out;
  out.sample_size = closed.size();
  out.sample_grew = closed.size() != initial;
  out.note =
      "saturation is quantified over monomial ideals in the sample; homogeneous ideals "
      "outside the monomial class are not represented";

  for (const auto& i : closed) {
    if (!member(i)) continue;
    for (const auto& j : closed)
      if (monomial_ideal_leq(i, j) && !member(j)) {
        out.g1 = CheckStatus::Fail;
        out.g1_witness = monomial_ideal_label(i) + " is a member but " +
                         monomial_ideal_label(j) + " above it is not";
        break;
      }
    if (out.g1 == CheckStatus::Fail) break;
  }

  for (const auto& i : closed) {
    if (!member(i)) continue;
    for (const auto& a : quantifier) {
      const MonomialIdeal c = colon_monomial(i, a);
      if (!member(c)) {
        out.g2 = CheckStatus::Fail;
        out.g2_witness = "(" + monomial_ideal_label(i) + " : " + monomial_label(a) + ") = " +
                         monomial_ideal_label(c) + " is not a member";
        break;
      }
    }
    if (out.g2 == CheckStatus::Fail) break;
  }

  for (const auto& i : closed) {
    if (member(i)) continue;
    for (const auto& j : closed) {
      if (!member(j)) continue;
      bool premise = false;
      for (const auto& a : quantifier) {
        if (!contains_monomial(j, a)) continue;
        premise = true;
        if (!member(colon_monomial(i, a))) {
          premise = false;
          break;
        }
      }
      if (premise) {
        out.g3 = CheckStatus::Fail;
        out.g3_witness = monomial_ideal_label(i) + " is saturated against member " +
                         monomial_ideal_label(j) + " but is not a member";
        break;
      }
    }
    if (out.g3 == CheckStatus::Fail) break;
  }
  return out;
}

std::string degree_zero_base_change(const MonomialIdeal& i) {
  return contains_monomial(i, {0, 0}) ? "k" : "0";
}

CounterexampleReport reproduce_counterexample(int d_max) {
  if (d_max < 1) fail(ErrorKind::Precondition, "degree bound must be at least 1");
  CounterexampleReport out;
  out.d_max = d_max;
  const std::vector<MonomialIdeal> grid = enumerate_grid_ideals(d_max);
  out.sample_size = grid.size();
  const GradedTopologySpec s{"H_powers_of", 'x'};
  const GradedTopologySpec t{"H_powers_of", 'y'};

  out.witness = make_monomial_ideal({{d_max, 0}});
  out.witness_in_s = h_s_member(out.witness, s, d_max);
  out.witness_in_t = h_s_member(out.witness, t, d_max);

  std::vector<MonomialIdeal> members_s, members_t;
  for (const auto& i : grid) {
    if (h_s_member(i, s, d_max)) members_s.push_back(i);
    if (h_s_member(i, t, d_max)) members_t.push_back(i);
  }
  out.s_count = members_s.size();
  out.t_count = members_t.size();
  out.families_differ = members_s != members_t;

  std::set<std::string> is, it;
  for (const auto& i : members_s) is.insert(degree_zero_base_change(i));
  for (const auto& i : members_t) it.insert(degree_zero_base_change(i));
  out.image_s.assign(is.begin(), is.end());
  out.image_t.assign(it.begin(), it.end());
  out.images_equal = out.image_s == out.image_t;

  bool found = false;
  for (size_t a = 0; a < members_s.size() && !found; ++a)
    for (size_t b = a + 1; b < members_s.size(); ++b)
      if (degree_zero_base_change(members_s[a]) == degree_zero_base_change(members_s[b])) {
        out.collision_a = members_s[a];
        out.collision_b = members_s[b];
        found = true;
        break;
      }
  return out;
}

std::vector<MonomialIdeal> enumerate_grid_ideals(int d) {
  if (d < 0) fail(ErrorKind::Precondition, "grid bound must be non-negative");
  std::vector<MonomialIdeal> out;
  // Column thresholds t_0 >= t_1 >= ... >= t_d in {0..d+1}; column i of the
  // staircase holds the exponents (i, j) with j >= t_i, and t = d+1 means
  // the column is empty.
  std::vector<int> t(static_cast<size_t>(d) + 1, 0);
  const auto emit = [&]() {
    std::vector<Monomial> gens;
    for (int i = 0; i <= d; ++i) {
      const int ti = t[static_cast<size_t>(i)];
      if (ti > d) continue;
      if (i == 0 || ti < t[static_cast<size_t>(i) - 1]) gens.push_back({i, ti});
    }
    out.push_back(make_monomial_ideal(std::move(gens)));
  };
  const std::function<void(int, int)> rec = [&](int i, int bound) {
    if (i > d) {
      emit();
      return;
    }
    for (int v = bound; v >= 0; --v) {
      t[static_cast<size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, d + 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace encov
