#include "dimlift/json_io.hpp"

#include <map>
#include <sstream>

#include "dimlift/error.hpp"
#include "json.hpp"

namespace dimlift {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

const json& array_of(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

std::size_t index_of(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

Rational rational_of(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  throw ParseError(where + ": expected a rational string such as \"3/4\"");
}

Poset poset_from(const json& j) {
  std::vector<std::string> names;
  for (const auto& e : array_of(member(j, "elements", "poset"), "poset.elements"))
    names.push_back(string_of(e, "poset.elements"));
  std::vector<std::pair<std::string, std::string>> cov;
  for (const auto& c : array_of(member(j, "covers", "poset"), "poset.covers")) {
    if (!c.is_array() || c.size() != 2) throw ParseError("poset.covers: each cover is a pair [a, b]");
    cov.emplace_back(string_of(c[0], "poset.covers"), string_of(c[1], "poset.covers"));
  }
  return Poset::from_named_covers(std::move(names), cov);
}

ojson poset_json(const Poset& p) {
  ojson j;
  j["elements"] = p.names();
  j["covers"] = ojson::array();
  for (auto [a, b] : covers(p)) j["covers"].push_back({p.name(a), p.name(b)});
  return j;
}

ojson bool_map_json(const BoolMap& f) {
  ojson j = ojson::array();
  for (const auto& img : f.atom_images()) j.push_back(img.members());
  return j;
}

PssSpace space_from(const json& j, const std::string& where) {
  std::vector<std::vector<std::string>> comps;
  for (const auto& c : array_of(member(j, "components", where), where + ".components")) {
    std::vector<std::string> labels;
    for (const auto& l : array_of(c, where + ".components")) labels.push_back(string_of(l, where + ".components"));
    comps.push_back(std::move(labels));
  }
  try {
    return PssSpace(std::move(comps));
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

ojson space_json(const PssSpace& s) {
  ojson j;
  j["components"] = s.components();
  return j;
}

ojson matrix_json(const RatMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson form_json(const LinForm& f, const std::vector<std::string>& vars) {
  ojson terms = ojson::object();
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (!f.coeffs[i].is_zero()) terms[vars[i]] = f.coeffs[i].str();
  ojson j;
  j["terms"] = std::move(terms);
  j["const"] = f.constant.str();
  return j;
}

}  // namespace

Poset parse_poset(std::string_view text) { return poset_from(parse_text(text)); }

std::string poset_to_json(const Poset& p) { return poset_json(p).dump(2) + "\n"; }

SemDiagram parse_diagram(std::string_view text) {
  const json j = parse_text(text);
  const Poset p = poset_from(member(j, "poset", "diagram"));
  const std::size_t n = p.size();
  std::vector<std::size_t> arity(n);
  const json& ar = member(j, "arity", "diagram");
  if (!ar.is_object()) throw ParseError("diagram.arity: expected an object");
  for (std::size_t x = 0; x < n; ++x) {
    auto it = ar.find(p.name(x));
    if (it == ar.end()) throw ParseError("diagram.arity: missing element \"" + p.name(x) + "\"");
    arity[x] = index_of(*it, "diagram.arity." + p.name(x));
    if (arity[x] > BitSet::kMaxWidth) throw ParseError("diagram.arity." + p.name(x) + ": larger than 64");
  }
  for (const auto& [k, v] : ar.items()) (void)p.index_of(k);

  const json& arr = member(j, "arrows", "diagram");
  if (!arr.is_object()) throw ParseError("diagram.arrows: expected an object");
  std::map<std::pair<std::size_t, std::size_t>, BoolMap> given;
  for (const auto& [key, val] : arr.items()) {
    const auto lt = key.find('<');
    if (lt == std::string::npos) throw ParseError("diagram.arrows: key \"" + key + "\" is not of the form x<y");
    const std::size_t x = p.index_of(key.substr(0, lt));
    const std::size_t y = p.index_of(key.substr(lt + 1));
    if (!p.lt(x, y)) throw ParseError("diagram.arrows: " + key + " is not a strict comparability");
    const std::string where = "diagram.arrows." + key;
    std::vector<std::vector<std::size_t>> images;
    for (const auto& img : array_of(val, where)) {
      std::vector<std::size_t> members;
      for (const auto& m : array_of(img, where)) members.push_back(index_of(m, where));
      images.push_back(std::move(members));
    }
    try {
      given.emplace(std::make_pair(x, y), BoolMap::from_lists(arity[x], arity[y], images));
    } catch (const ShapeError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, BoolMap> cov;
  for (auto c : covers(p)) {
    auto it = given.find(c);
    if (it == given.end())
      throw ParseError("diagram.arrows: missing cover arrow " + p.name(c.first) + "<" + p.name(c.second));
    cov.emplace(c, it->second);
  }
  SemDiagram d = diagram_from_covers(p, arity, cov);
  for (const auto& [xy, f] : given)
    if (d.arrow(xy.first, xy.second) != f)
      throw CoherenceError("diagram.arrows: " + p.name(xy.first) + "<" + p.name(xy.second) +
                           " differs from the composite of cover arrows");
  return d;
}

std::string diagram_to_json(const SemDiagram& d) {
  const Poset& p = d.poset();
  ojson j;
  j["poset"] = poset_json(p);
  ojson ar = ojson::object();
  for (std::size_t x = 0; x < p.size(); ++x) ar[p.name(x)] = d.arity(x);
  j["arity"] = std::move(ar);
  ojson arr = ojson::object();
  for (const auto& [xy, f] : d.cover_arrows()) arr[p.name(xy.first) + "<" + p.name(xy.second)] = bool_map_json(f);
  j["arrows"] = std::move(arr);
  return j.dump(2) + "\n";
}

PssSpace parse_space(std::string_view text) { return space_from(parse_text(text), "space"); }

std::string space_to_json(const PssSpace& s) { return space_json(s).dump(2) + "\n"; }

PssHom parse_hom(std::string_view text) {
  const json j = parse_text(text);
  PssSpace src = space_from(member(j, "src", "hom"), "hom.src");
  PssSpace tgt = space_from(member(j, "tgt", "hom"), "hom.tgt");
  std::vector<RatVector> rows;
  for (const auto& r : array_of(member(j, "matrix", "hom"), "hom.matrix")) {
    RatVector row;
    for (const auto& v : array_of(r, "hom.matrix")) row.push_back(rational_of(v, "hom.matrix"));
    rows.push_back(std::move(row));
  }
  RatMatrix m;
  try {
    m = RatMatrix::from_rows(rows, src.total_dim());
  } catch (const ShapeError& e) {
    throw ParseError(std::string("hom.matrix: ") + e.what());
  }
  if (m.rows() != tgt.total_dim() || m.cols() != src.total_dim())
    throw ParseError("hom.matrix: shape does not match the spaces");
  return hom_validate(m, src, tgt);
}

std::string hom_to_json(const PssHom& h) {
  ojson j;
  j["src"] = space_json(h.src());
  j["tgt"] = space_json(h.tgt());
  j["matrix"] = matrix_json(h.matrix());
  return j.dump(2) + "\n";
}

LinSystem parse_lin_system(std::string_view text) {
  const json j = parse_text(text);
  LinSystem s;
  std::map<std::string, std::size_t> idx;
  for (const auto& v : array_of(member(j, "vars", "system"), "system.vars")) {
    std::string name = string_of(v, "system.vars");
    if (!idx.emplace(name, s.vars.size()).second) throw ParseError("system.vars: duplicate variable " + name);
    s.vars.push_back(std::move(name));
  }
  auto forms = [&](const char* key, std::vector<LinForm>& out) {
    auto it = j.find(key);
    if (it == j.end()) return;
    const std::string where = std::string("system.") + key;
    for (const auto& f : array_of(*it, where)) {
      LinForm form{RatVector(s.vars.size()), Rational(0)};
      for (const auto& [var, coeff] : member(f, "terms", where).items()) {
        auto v = idx.find(var);
        if (v == idx.end()) throw ParseError(where + ": undeclared variable " + var);
        form.coeffs[v->second] = rational_of(coeff, where);
      }
      if (f.contains("const")) form.constant = rational_of(f["const"], where);
      out.push_back(std::move(form));
    }
  };
  forms("eq", s.eq);
  forms("ge", s.ge);
  forms("gt", s.gt);
  return s;
}

std::string lin_system_to_json(const LinSystem& s) {
  ojson j;
  j["vars"] = s.vars;
  for (const auto& [key, group] : {std::pair{"eq", &s.eq}, std::pair{"ge", &s.ge}, std::pair{"gt", &s.gt}}) {
    ojson arr = ojson::array();
    for (const auto& f : *group) arr.push_back(form_json(f, s.vars));
    j[key] = std::move(arr);
  }
  return j.dump(2) + "\n";
}

std::string lift_to_json(const SemDiagram& phi, const LiftResult& lift, std::uint64_t seed, std::size_t max_dim) {
  const Poset& p = phi.poset();
  ojson j;
  j["seed"] = seed;
  j["max_dim"] = max_dim;
  ojson order = ojson::array();
  for (auto x : lift.order.removal_sequence) order.push_back(p.name(x));
  j["dismantling_order"] = std::move(order);
  ojson objs = ojson::object();
  for (std::size_t x = 0; x < p.size(); ++x) {
    ojson o = space_json(lift.psi.object(x));
    o["arity"] = phi.arity(x);
    o["dim"] = lift.psi.object(x).total_dim();
    o["iota"] = lift.iota[x].perm();
    o["mu"] = lift.mu[x].str();
    objs[p.name(x)] = std::move(o);
  }
  j["objects"] = std::move(objs);
  ojson arr = ojson::object();
  for (auto [x, y] : covers(p)) arr[p.name(x) + "<" + p.name(y)] = {{"matrix", matrix_json(lift.psi.arrow(x, y).matrix())}};
  j["arrows"] = std::move(arr);
  ojson cert;
  cert["all_pass"] = lift.report.all_pass();
  cert["checks"] = lift.report.checks.size();
  ojson fails = ojson::array();
  for (const auto& c : lift.report.checks)
    if (!c.pass) fails.push_back({{"name", c.name}, {"detail", c.detail}});
  cert["failures"] = std::move(fails);
  j["certificate"] = std::move(cert);
  return j.dump(2) + "\n";
}

bool looks_like_diagram(std::string_view text) {
  const json j = parse_text(text);
  return j.is_object() && j.contains("poset");
}

std::string diagram_to_dot(const SemDiagram& d, const LiftResult* lift) {
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < d.poset().size(); ++x) {
    std::string l = "2^" + std::to_string(d.arity(x));
    if (lift) l += " / dim " + std::to_string(lift->psi.object(x).total_dim());
    labels.push_back(std::move(l));
  }
  return to_dot(d.poset(), labels);
}

}  // namespace dimlift
