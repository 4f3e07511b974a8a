#include "hopfq/io.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hopfq/error.hpp"
#include "hopfq/scalar_parse.hpp"

namespace hopfq {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  raise(ErrorKind::SchemaError, field + ": " + what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    int column = 1;
    const std::size_t end = std::min(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("invalid JSON", line, column);
  }
}

int scalar_conductor(const Scalar& s) {
  int n = 1;
  for (const auto& c : s.coeffs()) {
    for (const auto& t : c.terms()) n = std::lcm(n, t.second.conductor());
  }
  return n;
}

struct Reader {
  int conductor = 1;
  int order = Series::kFree;
  bool check_conductor = false;

  Scalar scalar(const json& j, const std::string& field) const {
    if (!j.is_string()) schema(field, "expected a scalar string");
    const std::string text = j.get<std::string>();
    Scalar s;
    try {
      s = parse_scalar(text, order);
    } catch (const ParseError& e) {
      throw ParseError(field + ": '" + text + "'", e.line(), e.column());
    }
    if (check_conductor && conductor % scalar_conductor(s) != 0) {
      schema(field, "'" + text + "' is not in Q(z" + std::to_string(conductor) + ")");
    }
    return s;
  }

  std::uint32_t index(const json& j, std::size_t dim, const std::string& field) const {
    if (!j.is_number_integer()) schema(field, "expected a basis index");
    const auto i = j.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= dim) schema(field, "basis index " + std::to_string(i) + " out of range");
    return static_cast<std::uint32_t>(i);
  }

  std::vector<Scalar> dense(const json& j, std::size_t dim, const std::string& field) const {
    if (!j.is_array() || j.size() != dim) schema(field, "expected " + std::to_string(dim) + " coefficients");
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < dim; ++i) out.push_back(scalar(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
  }
};

const json& field(const json& obj, const std::string& name) {
  auto it = obj.find(name);
  if (it == obj.end()) schema(name, "missing");
  return *it;
}

std::vector<std::uint32_t> split_key(const std::string& key, std::size_t parts, std::size_t dim,
                                     const std::string& field_name) {
  std::vector<std::uint32_t> out;
  std::stringstream in(key);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != piece.size() || v < 0 || static_cast<std::size_t>(v) >= dim) {
      schema(field_name + "[\"" + key + "\"]", "bad basis index '" + piece + "'");
    }
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.size() != parts) schema(field_name + "[\"" + key + "\"]", "expected " + std::to_string(parts) + " indices");
  return out;
}

SparseVec accumulate(const std::map<std::uint32_t, Scalar>& acc) {
  SparseVec v;
  for (const auto& [k, c] : acc) {
    if (!c.is_zero()) v.emplace_back(k, c);
  }
  return v;
}

struct AlgebraPart {
  AlgebraPresentation algebra;
  Reader reader;
};

AlgebraPart read_algebra(const json& j) {
  if (!j.is_object()) schema("presentation", "expected a JSON object");
  AlgebraPart out;
  Reader& rd = out.reader;
  if (auto it = j.find("scalar"); it != j.end()) {
    if (!it->is_object()) schema("scalar", "expected {conductor, hbar_order}");
    if (auto c = it->find("conductor"); c != it->end()) {
      if (!c->is_number_integer() || c->get<long long>() < 1) schema("scalar.conductor", "expected a positive integer");
      rd.conductor = c->get<int>();
      rd.check_conductor = true;
    }
    if (auto o = it->find("hbar_order"); o != it->end() && !o->is_null()) {
      if (!o->is_number_integer() || o->get<long long>() < 0) schema("scalar.hbar_order", "expected null or n >= 0");
      rd.order = o->get<int>();
    }
  }
  AlgebraPresentation& a = out.algebra;
  const json& name = field(j, "name");
  if (!name.is_string()) schema("name", "expected a string");
  a.name = name.get<std::string>();
  const json& basis = field(j, "basis");
  if (!basis.is_array() || basis.empty()) schema("basis", "expected a nonempty list of labels");
  for (const auto& b : basis) {
    if (!b.is_string()) schema("basis", "labels must be strings");
    a.basis.push_back(b.get<std::string>());
  }
  const std::size_t d = a.dim();
  if (auto it = j.find("dim"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() != static_cast<long long>(d)) {
      schema("dim", "does not match the basis size " + std::to_string(d));
    }
  }
  a.unit = to_sparse(rd.dense(field(j, "unit"), d, "unit"));
  const json& mult = field(j, "mult");
  if (!mult.is_object()) schema("mult", "expected an object keyed by \"i,j\"");
  a.mult.assign(d * d, std::nullopt);
  for (const auto& [key, entry] : mult.items()) {
    const auto ij = split_key(key, 2, d, "mult");
    const std::string f = "mult[\"" + key + "\"]";
    if (!entry.is_array()) schema(f, "expected a list of [k, coeff]");
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& t : entry) {
      if (!t.is_array() || t.size() != 2) schema(f, "expected [k, coeff]");
      acc[rd.index(t[0], d, f)] += rd.scalar(t[1], f);
    }
    a.mult[flat2(ij[0], ij[1], static_cast<std::uint32_t>(d))] = accumulate(acc);
  }
  return out;
}

json write_scalar(const Scalar& s) { return s.str(); }

json write_dense(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(write_scalar(s));
  return out;
}

json write_algebra(const AlgebraPresentation& a, int conductor, int order) {
  json j;
  j["name"] = a.name;
  j["scalar"] = {{"conductor", conductor}, {"hbar_order", order == Series::kFree ? json(nullptr) : json(order)}};
  j["dim"] = a.dim();
  j["basis"] = a.basis;
  j["unit"] = write_dense(to_dense(a.unit, a.dim()));
  json mult = json::object();
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const auto& e = a.mult[i * d + k];
      if (!e) continue;
      json terms = json::array();
      for (const auto& [idx, c] : *e) terms.push_back({idx, write_scalar(c)});
      mult[std::to_string(i) + "," + std::to_string(k)] = terms;
    }
  }
  j["mult"] = mult;
  return j;
}

bool read_flag(const json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end()) return false;
  if (!it->is_boolean()) schema(name, "expected a boolean");
  return it->get<bool>();
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
  const json j = parse_json(text);
  AlgebraPart part = read_algebra(j);
  const Reader& rd = part.reader;
  PresentationFile out;
  out.conductor = rd.conductor;
  out.hbar_order = rd.order;
  HopfPresentation& h = out.hopf;
  h.algebra = std::move(part.algebra);
  const std::size_t d = h.dim();
  const auto d32 = static_cast<std::uint32_t>(d);
  CoalgebraPresentation& c = h.coalgebra;
  c.basis = h.algebra.basis;
  const json& cop = field(j, "coproduct");
  if (!cop.is_object()) schema("coproduct", "expected an object keyed by basis index");
  c.coproduct.assign(d, std::nullopt);
  for (const auto& [key, entry] : cop.items()) {
    const std::uint32_t i = split_key(key, 1, d, "coproduct")[0];
    const std::string f = "coproduct[\"" + key + "\"]";
    if (!entry.is_array()) schema(f, "expected a list of [j, k, coeff]");
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& t : entry) {
      if (!t.is_array() || t.size() != 3) schema(f, "expected [j, k, coeff]");
      acc[flat2(rd.index(t[0], d, f), rd.index(t[1], d, f), d32)] += rd.scalar(t[2], f);
    }
    c.coproduct[i] = accumulate(acc);
  }
  c.counit = rd.dense(field(j, "counit"), d, "counit");
  if (auto it = j.find("antipode"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != d) schema("antipode", "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    Matrix s;
    for (std::size_t r = 0; r < d; ++r) s.push_back(rd.dense((*it)[r], d, "antipode[" + std::to_string(r) + "]"));
    h.antipode = std::move(s);
  }
  if (auto it = j.find("antipode_window"); it != j.end()) {
    if (!it->is_array() || it->size() != d) schema("antipode_window", "expected one boolean per basis element");
    for (const auto& b : *it) {
      if (!b.is_boolean()) schema("antipode_window", "expected booleans");
      h.antipode_window.push_back(b.get<bool>());
    }
  }
  if (h.antipode && h.antipode_window.empty() && rank(*h.antipode) < d) schema("antipode", "matrix is not invertible");
  h.commutative = read_flag(j, "commutative");
  h.cocommutative = read_flag(j, "cocommutative");
  return out;
}

PresentationFile load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

std::string dump_presentation(const PresentationFile& p) {
  const HopfPresentation& h = p.hopf;
  json j = write_algebra(h.algebra, p.conductor, p.hbar_order);
  const std::size_t d = h.dim();
  const auto d32 = static_cast<std::uint32_t>(d);
  json cop = json::object();
  for (std::size_t i = 0; i < d; ++i) {
    if (!h.coalgebra.coproduct[i]) continue;
    json terms = json::array();
    for (const auto& [idx, c] : *h.coalgebra.coproduct[i]) terms.push_back({idx / d32, idx % d32, write_scalar(c)});
    cop[std::to_string(i)] = terms;
  }
  j["coproduct"] = cop;
  j["counit"] = write_dense(h.coalgebra.counit);
  if (h.antipode) {
    json s = json::array();
    for (const auto& row : *h.antipode) s.push_back(write_dense(row));
    j["antipode"] = s;
  }
  if (!h.antipode_window.empty()) j["antipode_window"] = h.antipode_window;
  j["commutative"] = h.commutative;
  j["cocommutative"] = h.cocommutative;
  return j.dump(2) + "\n";
}

int presentation_conductor(const HopfPresentation& h) {
  int n = 1;
  auto vec = [&](const SparseVec& v) {
    for (const auto& t : v) n = std::lcm(n, scalar_conductor(t.second));
  };
  vec(h.algebra.unit);
  for (const auto& m : h.algebra.mult) {
    if (m) vec(*m);
  }
  for (const auto& c : h.coalgebra.coproduct) {
    if (c) vec(*c);
  }
  for (const auto& s : h.coalgebra.counit) n = std::lcm(n, scalar_conductor(s));
  if (h.antipode) {
    for (const auto& row : *h.antipode) {
      for (const auto& s : row) n = std::lcm(n, scalar_conductor(s));
    }
  }
  return n;
}

GradedAlgebra parse_graded(const std::string& text) {
  const json j = parse_json(text);
  GradedAlgebra out;
  out.algebra = read_algebra(j).algebra;
  const std::size_t d = out.algebra.dim();
  std::size_t order = 0;
  if (auto it = j.find("group"); it != j.end()) {
    const json& g = *it;
    if (!g.is_object()) schema("group", "expected {order, table, labels}");
    const json& labels = field(g, "labels");
    const json& table = field(g, "table");
    if (!labels.is_array() || !table.is_array()) schema("group", "labels and table must be lists");
    order = labels.size();
    if (auto o = g.find("order"); o != g.end() && (!o->is_number_integer() || o->get<std::size_t>() != order)) {
      schema("group.order", "does not match the number of labels");
    }
    std::vector<std::string> names;
    for (const auto& l : labels) {
      if (!l.is_string()) schema("group.labels", "expected strings");
      names.push_back(l.get<std::string>());
    }
    std::vector<std::vector<FiniteGroup::Elem>> rows;
    for (const auto& row : table) {
      if (!row.is_array() || row.size() != order) schema("group.table", "expected a square table");
      std::vector<FiniteGroup::Elem> r;
      for (const auto& e : row) {
        if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<std::size_t>() >= order) {
          schema("group.table", "entries must be element indices");
        }
        r.push_back(e.get<FiniteGroup::Elem>());
      }
      rows.push_back(std::move(r));
    }
    if (rows.size() != order) schema("group.table", "expected a square table");
    std::string gname = "G";
    if (auto n = g.find("name"); n != g.end() && n->is_string()) gname = n->get<std::string>();
    out.group = FiniteGroup(gname, std::move(names), std::move(rows));
  } else if (auto w = j.find("z_window"); w != j.end()) {
    if (!w->is_number_integer() || w->get<long long>() < 1) schema("z_window", "expected a positive radius");
    out.radius = w->get<int>();
  } else {
    schema("group", "missing (or give z_window)");
  }
  const json& deg = field(j, "degree");
  if (!deg.is_array() || deg.size() != d) schema("degree", "expected one degree per basis element");
  for (const auto& e : deg) {
    if (!e.is_number_integer()) schema("degree", "expected integers");
    const int v = e.get<int>();
    if (out.group ? (v < 0 || static_cast<std::size_t>(v) >= order) : (v < -out.radius || v > out.radius)) {
      schema("degree", "degree " + std::to_string(v) + " out of range");
    }
    out.degree.push_back(v);
  }
  check_homogeneous(out);
  return out;
}

std::string dump_graded(const GradedAlgebra& a) {
  HopfPresentation h;
  h.algebra = a.algebra;
  json j = write_algebra(a.algebra, presentation_conductor(h), Series::kFree);
  if (a.group) {
    j["group"] = {{"name", a.group->name()},
                  {"order", a.group->order()},
                  {"labels", a.group->labels()},
                  {"table", a.group->table()}};
  } else {
    j["z_window"] = a.radius;
  }
  j["degree"] = a.degree;
  return j.dump(2) + "\n";
}

HeisElement parse_heis(const std::string& text, int order) {
  const json j = parse_json(text);
  if (!j.is_array()) schema("element", "expected a list of monomials");
  Reader rd;
  rd.order = order;
  HeisElement f(order);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = "element[" + std::to_string(i) + "]";
    const json& t = j[i];
    if (!t.is_object()) schema(at, "expected {m, n, p, c, coeff}");
    auto integer = [&](const char* key, bool nonneg) {
      const json& v = field(t, key);
      if (!v.is_number_integer() || (nonneg && v.get<long long>() < 0)) schema(at + "." + key, "expected an integer");
      return v.get<int>();
    };
    const int m = integer("m", false);
    const int n = integer("n", false);
    const int p = integer("p", true);
    Rational c(0);
    if (auto it = t.find("c"); it != t.end()) {
      if (!it->is_string()) schema(at + ".c", "expected a rational string");
      try {
        c = Rational::parse(it->get<std::string>());
      } catch (const Error&) {
        schema(at + ".c", "'" + it->get<std::string>() + "' is not a rational");
      }
    }
    f.add(HeisKey{m, n, p, c}, rd.scalar(field(t, "coeff"), at + ".coeff"));
  }
  return f;
}

std::string dump_heis(const HeisElement& f) {
  json j = json::array();
  for (const auto& [k, c] : f.terms()) {
    j.push_back({{"m", k.m}, {"n", k.n}, {"p", k.p}, {"c", k.c.str()}, {"coeff", c.str()}});
  }
  return j.dump(2) + "\n";
}

std::string dump_report(const Report& r, bool timing) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"status", std::string(to_string(c.status))},
                      {"residual_term_count", c.residual_terms},
                      {"witness", c.witness.empty() ? json(nullptr) : json(c.witness)},
                      {"cases", c.cases}});
  }
  json j;
  j["suite"] = r.name;
  j["seed"] = r.seed;
  j["elapsed_ms"] = timing ? r.elapsed_ms : 0.0;
  j["passed"] = r.passed();
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::SchemaError, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorKind::SchemaError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace hopfq
