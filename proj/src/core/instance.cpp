#include "core/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace encov {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  std::string raw;
  int num = 0;
  while (std::getline(is, raw)) {
    ++num;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{num, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& message) {
  std::ostringstream os;
  os << "line " << line << ": " << message;
  fail(ErrorKind::Parse, os.str());
}

long parse_long(const Line& l, const std::string& tok) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (...) {
    parse_fail(l.number, "expected a number, got '" + tok + "'");
  }
  if (pos != tok.size()) parse_fail(l.number, "expected a number, got '" + tok + "'");
  return v;
}

int resolve_label(const Line& l, const Quantale& q, const std::string& tok) {
  const auto idx = q.find_label(tok);
  if (!idx) parse_fail(l.number, "quantale '" + q.name() + "' has no element '" + tok + "'");
  return *idx;
}

int resolve_object(const Line& l, const EnrichedCategory& c, const std::string& tok) {
  const auto idx = c.find_object(tok);
  if (!idx) parse_fail(l.number, "category '" + c.name() + "' has no object '" + tok + "'");
  return *idx;
}

int resolve_element(const Line& l, const FiniteRing& r, const std::string& tok) {
  const auto idx = r.find_label(tok);
  if (!idx) parse_fail(l.number, "ring '" + r.name() + "' has no element '" + tok + "'");
  return *idx;
}

void need(const Line& l, bool cond, const std::string& message) {
  if (!cond) parse_fail(l.number, message);
}

QuantalePtr build_quantale(const std::string& name, const std::vector<Line>& body) {
  if (!body.empty() && body[0].tokens[0] == "builtin") {
    const Line& l = body[0];
    need(l, body.size() == 1, "a builtin quantale block has a single line");
    need(l, l.tokens.size() >= 2, "builtin needs a family name");
    const std::string& family = l.tokens[1];
    QuantaleData d;
    if (family == "two_element") {
      need(l, l.tokens.size() == 2, "two_element takes no parameters");
      d = make_two_element();
    } else if (family == "truncated_additive" || family == "exponential") {
      need(l, l.tokens.size() == 4, family + " takes two parameters N and D");
      const long n = parse_long(l, l.tokens[2]);
      const long den = parse_long(l, l.tokens[3]);
      d = family == "truncated_additive" ? make_truncated_additive(n, den)
                                         : make_exponential(n, den);
    } else {
      parse_fail(l.number, "unknown builtin quantale family '" + family + "'");
    }
    d.name = name;
    return Quantale::make(std::move(d));
  }

  QuantaleData d;
  d.name = name;
  d.kind = QuantaleKind::Table;
  std::vector<Line> leq_rows, tensor_rows;
  const Line* unit_line = nullptr;
  for (const Line& l : body) {
    const std::string& head = l.tokens[0];
    if (head == "labels") {
      need(l, l.tokens.size() >= 2, "labels line needs at least one label");
      d.labels.assign(l.tokens.begin() + 1, l.tokens.end());
    } else if (head == "leq") {
      leq_rows.push_back(l);
    } else if (head == "tensor") {
      tensor_rows.push_back(l);
    } else if (head == "unit") {
      need(l, l.tokens.size() == 2, "unit line needs one label");
      unit_line = &l;
    } else {
      parse_fail(l.number, "unknown quantale line '" + head + "'");
    }
  }
  const size_t n = d.labels.size();
  if (n == 0) fail(ErrorKind::Parse, "quantale '" + name + "' has no labels line");
  const auto find = [&](const Line& l, const std::string& tok) {
    for (size_t i = 0; i < n; ++i)
      if (d.labels[i] == tok) return static_cast<int>(i);
    parse_fail(l.number, "unknown label '" + tok + "'");
  };
  for (const Line& l : leq_rows) {
    need(l, l.tokens.size() == n + 1, "leq row needs one 0/1 entry per label");
    std::vector<bool> row;
    for (size_t k = 1; k < l.tokens.size(); ++k) {
      need(l, l.tokens[k] == "0" || l.tokens[k] == "1", "leq entries are 0 or 1");
      row.push_back(l.tokens[k] == "1");
    }
    d.leq.push_back(std::move(row));
  }
  for (const Line& l : tensor_rows) {
    need(l, l.tokens.size() == n + 1, "tensor row needs one label per label");
    std::vector<int> row;
    for (size_t k = 1; k < l.tokens.size(); ++k) row.push_back(find(l, l.tokens[k]));
    d.tensor.push_back(std::move(row));
  }
  if (unit_line) d.unit = find(*unit_line, unit_line->tokens[1]);
  return Quantale::make(std::move(d));
}

CategoryPtr build_category(const Instance& in, const std::string& name,
                           const std::vector<Line>& body) {
  CategoryData d;
  d.name = name;
  for (const Line& l : body) {
    const std::string& head = l.tokens[0];
    if (head == "quantale") {
      need(l, l.tokens.size() == 2, "quantale line needs one name");
      d.base = find_quantale(in, l.tokens[1]);
    } else if (head == "objects") {
      need(l, l.tokens.size() >= 2, "objects line needs at least one object");
      d.objects.assign(l.tokens.begin() + 1, l.tokens.end());
    } else if (head != "hom") {
      parse_fail(l.number, "unknown category line '" + head + "'");
    }
  }
  if (!d.base) fail(ErrorKind::Parse, "category '" + name + "' has no quantale line");
  if (d.objects.empty()) fail(ErrorKind::Parse, "category '" + name + "' has no objects line");
  const size_t n = d.objects.size();
  const auto obj = [&](const Line& l, const std::string& tok) {
    for (size_t i = 0; i < n; ++i)
      if (d.objects[i] == tok) return static_cast<int>(i);
    parse_fail(l.number, "unknown object '" + tok + "'");
  };
  d.hom.assign(n, std::vector<int>(n, -1));
  for (const Line& l : body) {
    if (l.tokens[0] != "hom") continue;
    need(l, l.tokens.size() == 4, "hom line is 'hom <from> <to> <value>'");
    const int from = obj(l, l.tokens[1]);
    const int to = obj(l, l.tokens[2]);
    d.hom[static_cast<size_t>(from)][static_cast<size_t>(to)] =
        resolve_label(l, *d.base, l.tokens[3]);
  }
  for (size_t z = 0; z < n; ++z)
    for (size_t x = 0; x < n; ++x)
      if (d.hom[z][x] == -1)
        fail(ErrorKind::Parse, "category '" + name + "': missing hom from '" + d.objects[z] +
                                   "' to '" + d.objects[x] + "'");
  return EnrichedCategory::make(std::move(d));
}

Sieve build_sieve(const Instance& in, const std::string& name, const std::vector<Line>& body) {
  Sieve s;
  const Line* target_line = nullptr;
  for (const Line& l : body) {
    const std::string& head = l.tokens[0];
    if (head == "category") {
      need(l, l.tokens.size() == 2, "category line needs one name");
      s.category = find_category(in, l.tokens[1]);
    } else if (head == "target") {
      need(l, l.tokens.size() == 2, "target line needs one object");
      target_line = &l;
    } else if (head != "value") {
      parse_fail(l.number, "unknown sieve line '" + head + "'");
    }
  }
  if (!s.category) fail(ErrorKind::Parse, "sieve '" + name + "' has no category line");
  if (!target_line) fail(ErrorKind::Parse, "sieve '" + name + "' has no target line");
  s.target = resolve_object(*target_line, *s.category, target_line->tokens[1]);
  s.values.assign(static_cast<size_t>(s.category->object_count()), -1);
  for (const Line& l : body) {
    if (l.tokens[0] != "value") continue;
    need(l, l.tokens.size() == 3, "value line is 'value <object> <element>'");
    const int z = resolve_object(l, *s.category, l.tokens[1]);
    s.values[static_cast<size_t>(z)] = resolve_label(l, *s.category->base(), l.tokens[2]);
  }
  for (size_t z = 0; z < s.values.size(); ++z)
    if (s.values[z] == -1)
      fail(ErrorKind::Parse,
           "sieve '" + name + "': missing value at '" + s.category->object(static_cast<int>(z)) + "'");
  check_sieve_structure(s);
  return s;
}

Presheaf build_presheaf(const Instance& in, const std::string& name,
                        const std::vector<Line>& body) {
  Presheaf p;
  for (const Line& l : body) {
    const std::string& head = l.tokens[0];
    if (head == "category") {
      need(l, l.tokens.size() == 2, "category line needs one name");
      p.category = find_category(in, l.tokens[1]);
    } else if (head != "value") {
      parse_fail(l.number, "unknown presheaf line '" + head + "'");
    }
  }
  if (!p.category) fail(ErrorKind::Parse, "presheaf '" + name + "' has no category line");
  p.values.assign(static_cast<size_t>(p.category->object_count()), -1);
  for (const Line& l : body) {
    if (l.tokens[0] != "value") continue;
    need(l, l.tokens.size() == 3, "value line is 'value <object> <element>'");
    const int z = resolve_object(l, *p.category, l.tokens[1]);
    p.values[static_cast<size_t>(z)] = resolve_label(l, *p.category->base(), l.tokens[2]);
  }
  for (size_t z = 0; z < p.values.size(); ++z)
    if (p.values[z] == -1)
      fail(ErrorKind::Parse, "presheaf '" + name + "': missing value at '" +
                                 p.category->object(static_cast<int>(z)) + "'");
  check_presheaf_structure(p);
  return p;
}

Coverage build_coverage(const Instance& in, const std::string& name,
                        const std::vector<Line>& body) {
  Coverage j;
  for (const Line& l : body) {
    const std::string& head = l.tokens[0];
    if (head == "category") {
      need(l, l.tokens.size() == 2, "category line needs one name");
      j.category = find_category(in, l.tokens[1]);
    } else if (head != "family") {
      parse_fail(l.number, "unknown coverage line '" + head + "'");
    }
  }
  if (!j.category) fail(ErrorKind::Parse, "coverage '" + name + "' has no category line");
  j.families.resize(static_cast<size_t>(j.category->object_count()));
  for (const Line& l : body) {
    if (l.tokens[0] != "family") continue;
    need(l, l.tokens.size() >= 3, "family line is 'family <object> <sieve>...'");
    const int x = resolve_object(l, *j.category, l.tokens[1]);
    for (size_t k = 2; k < l.tokens.size(); ++k) {
      if (l.tokens[k] == "maximal") {
        j.families[static_cast<size_t>(x)].insert(maximal_sieve(j.category, x).values);
        continue;
      }
      const Sieve& s = find_sieve(in, l.tokens[k]);
      need(l, s.category == j.category,
           "sieve '" + l.tokens[k] + "' lives on a different category");
      need(l, s.target == x,
           "sieve '" + l.tokens[k] + "' targets '" + j.category->object(s.target) + "', not '" +
               j.category->object(x) + "'");
      j.families[static_cast<size_t>(x)].insert(s.values);
    }
  }
  check_coverage_structure(j);
  return j;
}

BaseChangePtr build_base_change(const Instance& in, const std::string& name,
                                const std::vector<Line>& body) {
  BaseChangeData d;
  d.name = name;
  for (const Line& l : body) {
    const std::string& head = l.tokens[0];
    if (head == "source") {
      need(l, l.tokens.size() == 2, "source line needs one name");
      d.source = find_quantale(in, l.tokens[1]);
    } else if (head == "target") {
      need(l, l.tokens.size() == 2, "target line needs one name");
      d.target = find_quantale(in, l.tokens[1]);
    } else if (head != "map") {
      parse_fail(l.number, "unknown basechange line '" + head + "'");
    }
  }
  if (!d.source) fail(ErrorKind::Parse, "basechange '" + name + "' has no source line");
  if (!d.target) fail(ErrorKind::Parse, "basechange '" + name + "' has no target line");
  d.map.assign(static_cast<size_t>(d.source->size()), -1);
  for (const Line& l : body) {
    if (l.tokens[0] != "map") continue;
    need(l, l.tokens.size() == 3, "map line is 'map <source element> <target element>'");
    const int v = resolve_label(l, *d.source, l.tokens[1]);
    d.map[static_cast<size_t>(v)] = resolve_label(l, *d.target, l.tokens[2]);
  }
  for (size_t v = 0; v < d.map.size(); ++v)
    if (d.map[v] == -1)
      fail(ErrorKind::Parse,
           "basechange '" + name + "': no image for '" + d.source->label(static_cast<int>(v)) + "'");
  return BaseChange::analyze(std::move(d));
}

RingPtr build_ring(const std::string& name, const std::vector<Line>& body) {
  if (!body.empty() && body[0].tokens[0] == "builtin") {
    const Line& l = body[0];
    need(l, body.size() == 1, "a builtin ring block has a single line");
    need(l, l.tokens.size() == 3 && l.tokens[1] == "zmod", "builtin ring form is 'builtin zmod N'");
    RingData d = make_zmod(static_cast<int>(parse_long(l, l.tokens[2])));
    d.name = name;
    return FiniteRing::make(std::move(d));
  }
  RingData d;
  d.name = name;
  std::vector<Line> add_rows, mul_rows;
  const Line* zero_line = nullptr;
  const Line* one_line = nullptr;
  for (const Line& l : body) {
    const std::string& head = l.tokens[0];
    if (head == "elements") {
      need(l, l.tokens.size() >= 2, "elements line needs at least one label");
      d.labels.assign(l.tokens.begin() + 1, l.tokens.end());
    } else if (head == "add") {
      add_rows.push_back(l);
    } else if (head == "mul") {
      mul_rows.push_back(l);
    } else if (head == "zero") {
      need(l, l.tokens.size() == 2, "zero line needs one label");
      zero_line = &l;
    } else if (head == "one") {
      need(l, l.tokens.size() == 2, "one line needs one label");
      one_line = &l;
    } else {
      parse_fail(l.number, "unknown ring line '" + head + "'");
    }
  }
  const size_t n = d.labels.size();
  if (n == 0) fail(ErrorKind::Parse, "ring '" + name + "' has no elements line");
  const auto find = [&](const Line& l, const std::string& tok) {
    for (size_t i = 0; i < n; ++i)
      if (d.labels[i] == tok) return static_cast<int>(i);
    parse_fail(l.number, "unknown element '" + tok + "'");
  };
  for (const Line& l : add_rows) {
    need(l, l.tokens.size() == n + 1, "add row needs one entry per element");
    std::vector<int> row;
    for (size_t k = 1; k < l.tokens.size(); ++k) row.push_back(find(l, l.tokens[k]));
    d.add.push_back(std::move(row));
  }
  for (const Line& l : mul_rows) {
    need(l, l.tokens.size() == n + 1, "mul row needs one entry per element");
    std::vector<int> row;
    for (size_t k = 1; k < l.tokens.size(); ++k) row.push_back(find(l, l.tokens[k]));
    d.mul.push_back(std::move(row));
  }
  if (zero_line) d.zero = find(*zero_line, zero_line->tokens[1]);
  if (one_line) d.one = find(*one_line, one_line->tokens[1]);
  return FiniteRing::make(std::move(d));
}

MultSet build_mult_set(const Instance& in, const std::string& name,
                       const std::vector<Line>& body) {
  MultSet s;
  const FiniteRing* ring = nullptr;
  for (const Line& l : body) {
    const std::string& head = l.tokens[0];
    if (head == "ring") {
      need(l, l.tokens.size() == 2, "ring line needs one name");
      s.ring = l.tokens[1];
      ring = find_ring(in, s.ring).get();
    } else if (head != "elements") {
      parse_fail(l.number, "unknown multset line '" + head + "'");
    }
  }
  if (!ring) fail(ErrorKind::Parse, "multset '" + name + "' has no ring line");
  for (const Line& l : body) {
    if (l.tokens[0] != "elements") continue;
    need(l, l.tokens.size() >= 2, "elements line needs at least one element");
    for (size_t k = 1; k < l.tokens.size(); ++k)
      s.elements.push_back(resolve_element(l, *ring, l.tokens[k]));
  }
  std::sort(s.elements.begin(), s.elements.end());
  s.elements.erase(std::unique(s.elements.begin(), s.elements.end()), s.elements.end());
  if (s.elements.empty()) fail(ErrorKind::Parse, "multset '" + name + "' has no elements");
  return s;
}

GabrielTopology build_topology(const Instance& in, const std::string& name,
                               const std::vector<Line>& body) {
  GabrielTopology t;
  for (const Line& l : body) {
    const std::string& head = l.tokens[0];
    if (head == "ring") {
      need(l, l.tokens.size() == 2, "ring line needs one name");
      t.ring = find_ring(in, l.tokens[1]);
    } else if (head != "member") {
      parse_fail(l.number, "unknown topology line '" + head + "'");
    }
  }
  if (!t.ring) fail(ErrorKind::Parse, "topology '" + name + "' has no ring line");
  for (const Line& l : body) {
    if (l.tokens[0] != "member") continue;
    need(l, l.tokens.size() >= 2, "member line lists the generators of one ideal");
    Ideal i = zero_ideal(*t.ring);
    for (size_t k = 1; k < l.tokens.size(); ++k)
      i = ideal_sum(*t.ring, i,
                    principal_right_ideal(*t.ring, resolve_element(l, *t.ring, l.tokens[k])));
    t.members.insert(std::move(i));
  }
  return t;
}

GradedTopologySpec build_graded_spec(const std::string& name, const std::vector<Line>& body) {
  GradedTopologySpec s;
  bool seen = false;
  for (const Line& l : body) {
    need(l, l.tokens[0] == "predicate", "unknown gradedspec line '" + l.tokens[0] + "'");
    need(l, l.tokens.size() == 3, "predicate line is 'predicate <name> <variable>'");
    need(l, l.tokens[2].size() == 1, "variable is a single letter");
    s.predicate = l.tokens[1];
    s.variable = l.tokens[2][0];
    seen = true;
  }
  if (!seen) fail(ErrorKind::Parse, "gradedspec '" + name + "' has no predicate line");
  return s;
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  Instance in;
  size_t i = 0;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.tokens.size() == 1 && head.tokens[0] == "end")
      parse_fail(head.number, "'end' outside a block");
    if (head.tokens.size() != 2)
      parse_fail(head.number, "expected '<kind> <name>' to open a block");
    const std::string& kind = head.tokens[0];
    const std::string& name = head.tokens[1];
    std::vector<Line> body;
    size_t j = i + 1;
    bool closed = false;
    for (; j < lines.size(); ++j) {
      if (lines[j].tokens.size() == 1 && lines[j].tokens[0] == "end") {
        closed = true;
        break;
      }
      body.push_back(lines[j]);
    }
    if (!closed) parse_fail(head.number, "unterminated block '" + kind + " " + name + "'");

    const auto fresh = [&](bool inserted) {
      if (!inserted) parse_fail(head.number, "duplicate " + kind + " '" + name + "'");
    };
    if (kind == "quantale")
      fresh(in.quantales.emplace(name, build_quantale(name, body)).second);
    else if (kind == "category")
      fresh(in.categories.emplace(name, build_category(in, name, body)).second);
    else if (kind == "sieve")
      fresh(in.sieves.emplace(name, build_sieve(in, name, body)).second);
    else if (kind == "presheaf")
      fresh(in.presheaves.emplace(name, build_presheaf(in, name, body)).second);
    else if (kind == "coverage")
      fresh(in.coverages.emplace(name, build_coverage(in, name, body)).second);
    else if (kind == "basechange")
      fresh(in.base_changes.emplace(name, build_base_change(in, name, body)).second);
    else if (kind == "ring")
      fresh(in.rings.emplace(name, build_ring(name, body)).second);
    else if (kind == "multset")
      fresh(in.mult_sets.emplace(name, build_mult_set(in, name, body)).second);
    else if (kind == "topology")
      fresh(in.topologies.emplace(name, build_topology(in, name, body)).second);
    else if (kind == "gradedspec")
      fresh(in.graded_specs.emplace(name, build_graded_spec(name, body)).second);
    else
      parse_fail(head.number, "unknown block kind '" + kind + "'");
    in.order.emplace_back(kind, name);
    i = j + 1;
  }
  return in;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::Usage, "cannot open instance file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return parse_instance_text(os.str());
}

const QuantalePtr& find_quantale(const Instance& in, const std::string& name) {
  const auto it = in.quantales.find(name);
  if (it == in.quantales.end()) fail(ErrorKind::Unresolved, "no quantale named '" + name + "'");
  return it->second;
}

const CategoryPtr& find_category(const Instance& in, const std::string& name) {
  const auto it = in.categories.find(name);
  if (it == in.categories.end()) fail(ErrorKind::Unresolved, "no category named '" + name + "'");
  return it->second;
}

const Sieve& find_sieve(const Instance& in, const std::string& name) {
  const auto it = in.sieves.find(name);
  if (it == in.sieves.end()) fail(ErrorKind::Unresolved, "no sieve named '" + name + "'");
  return it->second;
}

const Presheaf& find_presheaf(const Instance& in, const std::string& name) {
  const auto it = in.presheaves.find(name);
  if (it == in.presheaves.end()) fail(ErrorKind::Unresolved, "no presheaf named '" + name + "'");
  return it->second;
}

const Coverage& find_coverage(const Instance& in, const std::string& name) {
  const auto it = in.coverages.find(name);
  if (it == in.coverages.end()) fail(ErrorKind::Unresolved, "no coverage named '" + name + "'");
  return it->second;
}

const BaseChangePtr& find_base_change(const Instance& in, const std::string& name) {
  const auto it = in.base_changes.find(name);
  if (it == in.base_changes.end())
    fail(ErrorKind::Unresolved, "no basechange named '" + name + "'");
  return it->second;
}

const RingPtr& find_ring(const Instance& in, const std::string& name) {
  const auto it = in.rings.find(name);
  if (it == in.rings.end()) fail(ErrorKind::Unresolved, "no ring named '" + name + "'");
  return it->second;
}

const MultSet& find_mult_set(const Instance& in, const std::string& name) {
  const auto it = in.mult_sets.find(name);
  if (it == in.mult_sets.end()) fail(ErrorKind::Unresolved, "no multset named '" + name + "'");
  return it->second;
}

const GabrielTopology& find_topology(const Instance& in, const std::string& name) {
  const auto it = in.topologies.find(name);
  if (it == in.topologies.end()) fail(ErrorKind::Unresolved, "no topology named '" + name + "'");
  return it->second;
}

const GradedTopologySpec& find_graded_spec(const Instance& in, const std::string& name) {
  const auto it = in.graded_specs.find(name);
  if (it == in.graded_specs.end())
    fail(ErrorKind::Unresolved, "no gradedspec named '" + name + "'");
  return it->second;
}

namespace {

int lab(const QuantalePtr& q, const std::string& label) {
  const auto idx = q->find_label(label);
  if (!idx) fail(ErrorKind::Internal, "builtin label lookup failed for '" + label + "'");
  return *idx;
}

CategoryPtr table_category(const std::string& name, const QuantalePtr& base,
                           std::vector<std::string> objects,
                           const std::vector<std::vector<std::string>>& hom) {
  CategoryData d;
  d.name = name;
  d.base = base;
  d.objects = std::move(objects);
  for (const auto& row : hom) {
    std::vector<int> r;
    for (const auto& entry : row) r.push_back(lab(base, entry));
    d.hom.push_back(std::move(r));
  }
  return EnrichedCategory::make(std::move(d));
}

}  // namespace

Instance builtin_instance() {
  Instance in;
  const auto add = [&in](const char* kind, const std::string& name) {
    in.order.emplace_back(kind, name);
  };

  QuantaleData qd = make_two_element();
  qd.name = "q2";
  const QuantalePtr q2 = Quantale::make(std::move(qd));
  in.quantales["q2"] = q2;
  add("quantale", "q2");

  QuantaleData td = make_truncated_additive(3, 1);
  td.name = "t3";
  const QuantalePtr t3 = Quantale::make(std::move(td));
  in.quantales["t3"] = t3;
  add("quantale", "t3");

  QuantaleData ed = make_exponential(3, 1);
  ed.name = "e31";
  const QuantalePtr e31 = Quantale::make(std::move(ed));
  in.quantales["e31"] = e31;
  add("quantale", "e31");

  in.categories["one_obj_q2"] = table_category("one_obj_q2", q2, {"*"}, {{"1"}});
  add("category", "one_obj_q2");
  in.categories["chain3_q2"] = table_category("chain3_q2", q2, {"c0", "c1", "c2"},
                                              {{"1", "1", "1"},
                                               {"0", "1", "1"},
                                               {"0", "0", "1"}});
  add("category", "chain3_q2");
  in.categories["p2_t3"] =
      table_category("p2_t3", t3, {"x", "y"}, {{"0", "1"}, {"1", "0"}});
  add("category", "p2_t3");
  in.categories["l3_t3"] = table_category("l3_t3", t3, {"a", "b", "c"},
                                          {{"0", "1", "2"},
                                           {"3", "0", "1"},
                                           {"inf", "3", "0"}});
  add("category", "l3_t3");
  in.categories["p2_exp"] =
      table_category("p2_exp", e31, {"x", "y"}, {{"e^0", "e^-1"}, {"e^-1", "e^0"}});
  add("category", "p2_exp");

  {
    BaseChangeData d;
    d.name = "incl";
    d.source = q2;
    d.target = e31;
    d.map = {lab(e31, "e^-inf"), lab(e31, "e^0")};
    in.base_changes["incl"] = BaseChange::analyze(std::move(d));
    add("basechange", "incl");
  }
  {
    BaseChangeData d;
    d.name = "log";
    d.source = t3;
    d.target = e31;
    d.map = {lab(e31, "e^0"), lab(e31, "e^-1"), lab(e31, "e^-2"), lab(e31, "e^-3"),
             lab(e31, "e^-inf")};
    in.base_changes["log"] = BaseChange::analyze(std::move(d));
    add("basechange", "log");
  }
  {
    BaseChangeData d;
    d.name = "collapse";
    d.source = t3;
    d.target = q2;
    d.map = {lab(q2, "1"), lab(q2, "0"), lab(q2, "0"), lab(q2, "0"), lab(q2, "0")};
    in.base_changes["collapse"] = BaseChange::analyze(std::move(d));
    add("basechange", "collapse");
  }

  const CategoryPtr& p2 = in.categories.at("p2_t3");
  const CategoryPtr& chain3 = in.categories.at("chain3_q2");
  in.sieves["s_max_x"] = maximal_sieve(p2, 0);
  add("sieve", "s_max_x");
  in.sieves["s_xy"] = Sieve{p2, 0, {lab(t3, "1"), lab(t3, "2")}};
  add("sieve", "s_xy");
  in.sieves["s_c01"] = Sieve{chain3, 2, {lab(q2, "1"), lab(q2, "1"), lab(q2, "0")}};
  add("sieve", "s_c01");

  in.presheaves["p_slope"] = Presheaf{p2, {lab(t3, "1"), lab(t3, "2")}};
  add("presheaf", "p_slope");
  in.presheaves["p_step"] = Presheaf{chain3, {lab(q2, "1"), lab(q2, "1"), lab(q2, "0")}};
  add("presheaf", "p_step");

  in.coverages["j_p2"] = make_indiscrete(p2);
  add("coverage", "j_p2");
  {
    Coverage j = make_indiscrete(chain3);
    j.families[2].insert(in.sieves.at("s_c01").values);
    in.coverages["j_chain"] = std::move(j);
    add("coverage", "j_chain");
  }

  for (const int n : {4, 6, 8, 12}) {
    std::ostringstream os;
    os << "zmod" << n;
    RingData d = make_zmod(n);
    d.name = os.str();
    in.rings[os.str()] = FiniteRing::make(std::move(d));
    add("ring", os.str());
  }

  in.mult_sets["s13"] = MultSet{"zmod6", {1, 3}};
  add("multset", "s13");

  {
    GabrielTopology t;
    t.ring = in.rings.at("zmod4");
    t.members.insert(principal_right_ideal(*t.ring, 2));
    in.topologies["t_seed"] = std::move(t);
    add("topology", "t_seed");
  }

  {
    GabrielTopology t;
    t.ring = in.rings.at("zmod6");
    t.members.insert(principal_right_ideal(*t.ring, 1));
    t.members.insert(principal_right_ideal(*t.ring, 3));
    in.topologies["t_s13"] = std::move(t);
    add("topology", "t_s13");
  }

  in.graded_specs["hx"] = GradedTopologySpec{"H_powers_of", 'x'};
  add("gradedspec", "hx");
  in.graded_specs["hy"] = GradedTopologySpec{"H_powers_of", 'y'};
  add("gradedspec", "hy");

  return in;
}

}  // namespace encov
