#include "core/quantale.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace encov {

const char* quantale_kind_name(QuantaleKind k) {
  switch (k) {
    case QuantaleKind::TwoElement: return "two_element";
    case QuantaleKind::TruncatedAdditive: return "truncated_additive";
    case QuantaleKind::Exponential: return "exponential";
    case QuantaleKind::Table: return "table";
  }
  return "unknown";
}

void check_quantale_structure(const QuantaleData& data) {
  const size_t n = data.labels.size();
  if (n == 0)
    fail(ErrorKind::Structure, "quantale '" + data.name + "': empty carrier");
  std::set<std::string> seen;
  for (const std::string& l : data.labels) {
    if (l.empty())
      fail(ErrorKind::Structure, "quantale '" + data.name + "': empty label");
    if (!seen.insert(l).second)
      fail(ErrorKind::Structure, "quantale '" + data.name + "': duplicate label '" + l + "'");
  }
  if (data.leq.size() != n)
    fail(ErrorKind::Structure, "quantale '" + data.name + "': order table has wrong height");
  for (const auto& row : data.leq)
    if (row.size() != n)
      fail(ErrorKind::Structure, "quantale '" + data.name + "': order table is ragged");
  if (data.tensor.size() != n)
    fail(ErrorKind::Structure, "quantale '" + data.name + "': tensor table is non-total");
  for (const auto& row : data.tensor) {
    if (row.size() != n)
      fail(ErrorKind::Structure, "quantale '" + data.name + "': tensor table is non-total");
    for (int v : row)
      if (v < 0 || v >= static_cast<int>(n))
        fail(ErrorKind::Structure, "quantale '" + data.name + "': tensor entry out of range");
  }
  if (data.unit < 0 || data.unit >= static_cast<int>(n))
    fail(ErrorKind::Structure, "quantale '" + data.name + "': unit out of range");
}

namespace {

std::string w1(const QuantaleData& q, int a) { return q.labels[a]; }

std::string w2(const QuantaleData& q, int a, int b) {
  return q.labels[a] + ", " + q.labels[b];
}

std::string w3(const QuantaleData& q, int a, int b, int c) {
  return q.labels[a] + ", " + q.labels[b] + ", " + q.labels[c];
}

// Greatest lower bound if it exists: the unique lower bound dominating
// every other lower bound.
std::optional<int> bound_of(const QuantaleData& q, int a, int b, bool lower) {
  const int n = static_cast<int>(q.labels.size());
  std::optional<int> best;
  for (int c = 0; c < n; ++c) {
    bool fits = lower ? (q.leq[c][a] && q.leq[c][b]) : (q.leq[a][c] && q.leq[b][c]);
    if (!fits) continue;
    if (!best) {
      best = c;
      continue;
    }
    bool dominates = lower ? q.leq[*best][c] : q.leq[c][*best];
    if (dominates) best = c;
  }
  if (!best) return std::nullopt;
  for (int c = 0; c < n; ++c) {
    bool fits = lower ? (q.leq[c][a] && q.leq[c][b]) : (q.leq[a][c] && q.leq[b][c]);
    if (!fits) continue;
    bool covered = lower ? q.leq[c][*best] : q.leq[*best][c];
    if (!covered) return std::nullopt;
  }
  return best;
}

}  // namespace

std::vector<QuantaleViolation> check_quantale_axioms(const QuantaleData& q) {
  check_quantale_structure(q);
  std::vector<QuantaleViolation> out;
  const int n = static_cast<int>(q.labels.size());

  for (int a = 0; a < n; ++a)
    if (!q.leq[a][a]) out.push_back({"order.reflexive", w1(q, a)});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && q.leq[a][b] && q.leq[b][a])
        out.push_back({"order.antisymmetric", w2(q, a, b)});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!q.leq[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (q.leq[b][c] && !q.leq[a][c])
          out.push_back({"order.transitive", w3(q, a, b, c)});
    }
  if (!out.empty()) return out;  // lattice search needs a sane order

  bool lattice_ok = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!bound_of(q, a, b, true)) {
        out.push_back({"lattice.meet-exists", w2(q, a, b)});
        lattice_ok = false;
      }
      if (!bound_of(q, a, b, false)) {
        out.push_back({"lattice.join-exists", w2(q, a, b)});
        lattice_ok = false;
      }
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (q.tensor[a][b] != q.tensor[b][a])
        out.push_back({"tensor.commutative", w2(q, a, b)});
      for (int c = 0; c < n; ++c)
        if (q.tensor[q.tensor[a][b]][c] != q.tensor[a][q.tensor[b][c]])
          out.push_back({"tensor.associative", w3(q, a, b, c)});
    }
  for (int a = 0; a < n; ++a)
    if (q.tensor[q.unit][a] != a) out.push_back({"tensor.unit", w1(q, a)});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!q.leq[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (!q.leq[q.tensor[c][a]][q.tensor[c][b]])
          out.push_back({"tensor.monotone", w3(q, a, b, c)});
    }

  if (!lattice_ok) return out;

  // bottom = join of the empty set; tensor must preserve all joins,
  // which for a finite carrier means binary joins and the bottom.
  int bottom = 0;
  for (int a = 0; a < n; ++a)
    if (q.leq[a][bottom]) bottom = a;
  for (int a = 0; a < n; ++a)
    if (!q.leq[bottom][a]) out.push_back({"lattice.bottom", w1(q, a)});
  for (int a = 0; a < n; ++a)
    if (q.tensor[a][bottom] != bottom)
      out.push_back({"quantale.bottom-absorbing", w1(q, a)});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int bc = *bound_of(q, b, c, false);
        int lhs = q.tensor[a][bc];
        int rhs = *bound_of(q, q.tensor[a][b], q.tensor[a][c], false);
        if (lhs != rhs) out.push_back({"quantale.join-distributive", w3(q, a, b, c)});
      }
  return out;
}

Quantale::Quantale(QuantaleData data) : data_(std::move(data)) {
  const int n = size();
  meet_.assign(n, std::vector<int>(n, 0));
  join_.assign(n, std::vector<int>(n, 0));
  res_.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet_[a][b] = *bound_of(data_, a, b, true);
      join_[a][b] = *bound_of(data_, a, b, false);
    }
  bottom_ = 0;
  top_ = 0;
  for (int a = 0; a < n; ++a) {
    if (data_.leq[a][bottom_]) bottom_ = a;
    if (data_.leq[top_][a]) top_ = a;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int r = bottom_;  // bottom always satisfies bottom (x) a = bottom <= b
      for (int p = 0; p < n; ++p)
        if (data_.leq[data_.tensor[p][a]][b]) r = join_[r][p];
      res_[a][b] = r;
    }
}

QuantalePtr Quantale::make(QuantaleData data) {
  auto violations = check_quantale_axioms(data);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "quantale '" << data.name << "' fails " << violations.size()
       << " axiom check(s); first: " << violations.front().law << " at ("
       << violations.front().witness << ")";
    fail(ErrorKind::Precondition, os.str());
  }
  return QuantalePtr(new Quantale(std::move(data)));
}

std::optional<int> Quantale::find_label(const std::string& label) const {
  for (int a = 0; a < size(); ++a)
    if (data_.labels[a] == label) return a;
  return std::nullopt;
}

QuantaleData make_two_element() {
  QuantaleData q;
  q.name = "two_element";
  q.kind = QuantaleKind::TwoElement;
  q.labels = {"0", "1"};
  q.leq = {{true, true}, {false, true}};
  q.tensor = {{0, 0}, {0, 1}};
  q.unit = 1;
  q.param_n = 1;
  q.param_d = 1;
  return q;
}

namespace {

std::string rational_label(long k, long d) {
  long g = std::gcd(k, d);
  k /= g;
  d /= g;
  if (d == 1) return std::to_string(k);
  return std::to_string(k) + "/" + std::to_string(d);
}

void check_scale_params(long n, long d) {
  if (n < 1 || d < 1) fail(ErrorKind::Structure, "scale parameters must be positive");
  if (n > 512 || d > 512 || n * d > 512)
    fail(ErrorKind::Structure, "carrier too large: N*d must stay within 512");
}

}  // namespace

QuantaleData make_truncated_additive(long n, long d) {
  check_scale_params(n, d);
  QuantaleData q;
  q.kind = QuantaleKind::TruncatedAdditive;
  q.param_n = n;
  q.param_d = d;
  const int steps = static_cast<int>(n * d);  // element i is the rational i/d
  const int inf = steps + 1;
  const int size = steps + 2;
  {
    std::ostringstream os;
    os << "truncated_additive(" << n << "," << d << ")";
    q.name = os.str();
  }
  for (int i = 0; i <= steps; ++i) q.labels.push_back(rational_label(i, d));
  q.labels.push_back("inf");
  q.leq.assign(size, std::vector<bool>(size, false));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) q.leq[a][b] = a >= b;  // reversed numeric
  q.tensor.assign(size, std::vector<int>(size, inf));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (a == inf || b == inf)
        q.tensor[a][b] = inf;
      else
        q.tensor[a][b] = (a + b <= steps) ? a + b : inf;
    }
  q.unit = 0;
  return q;
}

QuantaleData make_exponential(long n, long d) {
  QuantaleData q = make_truncated_additive(n, d);
  q.kind = QuantaleKind::Exponential;
  {
    std::ostringstream os;
    os << "exponential(" << n << "," << d << ")";
    q.name = os.str();
  }
  for (size_t i = 0; i < q.labels.size(); ++i) {
    if (q.labels[i] == "0")
      q.labels[i] = "e^0";
    else
      q.labels[i] = "e^-" + q.labels[i];
  }
  return q;
}

bool same_quantale(const Quantale& a, const Quantale& b) {
  if (&a == &b) return true;
  return a.data().labels == b.data().labels && a.data().leq == b.data().leq &&
         a.data().tensor == b.data().tensor && a.data().unit == b.data().unit;
}

}  // namespace encov
