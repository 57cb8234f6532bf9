#include "twistbrack/session.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "twistbrack/error.hpp"

namespace twistbrack {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ValidationError, where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where, "expected an integer");
  return v.get<std::int64_t>();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected an array");
  return v;
}

std::vector<std::int64_t> parse_exponents(const std::string& text, int n, const std::string& where) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(part, &used);
    } catch (const std::exception&) {
      parse_fail(where, "bad exponent list '" + text + "'");
    }
    if (used != part.size() || e < 0) parse_fail(where, "bad exponent list '" + text + "'");
    out.push_back(e);
  }
  if (static_cast<int>(out.size()) != n) {
    invalid(where, "exponent list '" + text + "' must have " + std::to_string(n) + " entries");
  }
  return out;
}

std::string exponent_key(const Monomial& m, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ",";
    out += std::to_string(m.exponent(i));
  }
  return out;
}

}  // namespace

Session Session::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return from_json(doc);
}

Session Session::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open session file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

Session Session::from_context(std::unique_ptr<Context> context) {
  Session s;
  s.context_ = std::move(context);
  return s;
}

Session Session::from_json(const json& doc) {
  if (!doc.is_object()) parse_fail("session", "expected a JSON object");
  const std::int64_t p = as_int(require(doc, "p", "session"), "p");
  PrimeField field(p);

  std::vector<std::string> names;
  const json& vars = as_array(require(doc, "variables", "session"), "variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string where = "variables[" + std::to_string(i) + "]";
    if (!vars[i].is_string() || vars[i].get<std::string>().empty()) parse_fail(where, "expected a variable name");
    names.push_back(vars[i].get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  if (n < 1 || n > kMaxVariables) {
    invalid("variables", "between 1 and " + std::to_string(kMaxVariables) + " variables are supported");
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    invalid("variables", "names must be distinct");
  }

  std::vector<Matrix> generators;
  const json& gens = as_array(require(doc, "group_generators", "session"), "group_generators");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string where = "group_generators[" + std::to_string(k) + "]";
    const json& rows = as_array(gens[k], where);
    if (static_cast<int>(rows.size()) != n) invalid(where, "expected an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    std::vector<std::vector<std::int64_t>> entries;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string rw = where + "[" + std::to_string(r) + "]";
      const json& row = as_array(rows[r], rw);
      if (static_cast<int>(row.size()) != n) invalid(rw, "expected " + std::to_string(n) + " entries");
      std::vector<std::int64_t> values;
      for (std::size_t c = 0; c < row.size(); ++c) values.push_back(as_int(row[c], rw + "[" + std::to_string(c) + "]"));
      entries.push_back(std::move(values));
    }
    generators.push_back(Matrix::from_rows(field, entries));
  }
  auto group = FiniteMatrixGroup::generate(field, n, generators);

  Session s;
  s.context_ = std::make_unique<Context>(SkewGroupAlgebra(field, n, std::move(group), names));

  if (auto it = doc.find("cochains"); it != doc.end()) {
    if (!it->is_object()) parse_fail("cochains", "expected an object");
    for (const auto& [name, body] : it->items()) {
      const std::string where = "cochains." + name;
      Cochain f = s.cochain_from_json(body, where);
      std::optional<int> declared;
      if (auto d = body.find("internal_degree"); d != body.end()) {
        declared = static_cast<int>(as_int(*d, where + ".internal_degree"));
        for (int actual : internal_degrees(f)) {
          if (actual != *declared) {
            invalid(where, "value of internal degree " + std::to_string(actual) + " but declared " +
                               std::to_string(*declared));
          }
        }
      }
      s.cochains_.emplace(name, NamedCochainSpec{std::move(f), declared});
    }
  }

  if (auto it = doc.find("selfcheck"); it != doc.end()) {
    if (!it->is_object()) parse_fail("selfcheck", "expected an object");
    SelfcheckBounds b;
    if (auto v = it->find("hdeg"); v != it->end()) b.homological = static_cast<int>(as_int(*v, "selfcheck.hdeg"));
    if (auto v = it->find("ideg"); v != it->end()) b.internal = static_cast<int>(as_int(*v, "selfcheck.ideg"));
    if (auto v = it->find("trials"); v != it->end()) b.trials = static_cast<int>(as_int(*v, "selfcheck.trials"));
    if (auto v = it->find("seed"); v != it->end()) b.seed = static_cast<std::uint64_t>(as_int(*v, "selfcheck.seed"));
    if (b.homological < 1 || b.internal < 0 || b.trials < 0) invalid("selfcheck", "bounds must be positive");
    s.selfcheck_ = b;
  }
  return s;
}

Cochain Session::cochain_from_json(const json& body, const std::string& where) const {
  const SkewGroupAlgebra& algebra = context_->algebra();
  const FiniteMatrixGroup& group = algebra.group();
  const PrimeField& field = algebra.field();
  const int n = algebra.num_variables();
  const auto& names = algebra.variable_names();

  const auto degree = as_int(require(body, "degree", where), where + ".degree");
  if (degree < 0) invalid(where + ".degree", "must be nonnegative");
  Cochain f(static_cast<int>(degree));

  const auto resolve_word = [&](const json& word, const std::string& w) {
    std::vector<int> letters;
    for (std::size_t i = 0; i < as_array(word, w).size(); ++i) {
      const auto letter = as_int(word[i], w + "[" + std::to_string(i) + "]");
      if (letter < 0 || static_cast<std::size_t>(letter) >= group.generator_count()) {
        invalid(w, "generator index " + std::to_string(letter) + " out of range");
      }
      letters.push_back(static_cast<int>(letter));
    }
    return group.evaluate_word(letters);
  };

  const json& entries = as_array(require(body, "entries", where), where + ".entries");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string ew = where + ".entries[" + std::to_string(k) + "]";
    const json& entry = entries[k];
    Generator e;
    const json& bar = as_array(require(entry, "bar", ew), ew + ".bar");
    for (std::size_t i = 0; i < bar.size(); ++i) {
      const GroupIndex g = resolve_word(bar[i], ew + ".bar[" + std::to_string(i) + "]");
      if (g == group.identity()) invalid(ew + ".bar", "bar entries must not be the identity");
      e.bar.push_back(g);
    }
    std::vector<int> indices;
    const json& wedge = as_array(require(entry, "wedge", ew), ew + ".wedge");
    for (std::size_t i = 0; i < wedge.size(); ++i) {
      if (!wedge[i].is_string()) parse_fail(ew + ".wedge", "expected variable names");
      const auto it = std::find(names.begin(), names.end(), wedge[i].get<std::string>());
      if (it == names.end()) invalid(ew + ".wedge", "unknown variable '" + wedge[i].get<std::string>() + "'");
      const int index = static_cast<int>(it - names.begin());
      if (!indices.empty() && index <= indices.back()) {
        invalid(ew + ".wedge", "variables must be distinct and in declaration order");
      }
      indices.push_back(index);
    }
    e.wedge = Wedge::of(indices);
    if (e.degree() != f.degree()) {
      invalid(ew, "generator has degree " + std::to_string(e.degree()) + " but the cochain has degree " +
                      std::to_string(f.degree()));
    }
    if (!f.value(e).is_zero()) invalid(ew, "duplicate entry for this generator");

    SkewElement value;
    const json& terms = as_array(require(entry, "value", ew), ew + ".value");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = ew + ".value[" + std::to_string(t) + "]";
      const GroupIndex g = resolve_word(require(terms[t], "group_word", tw), tw + ".group_word");
      const json& poly = require(terms[t], "poly", tw);
      if (!poly.is_object()) parse_fail(tw + ".poly", "expected an object");
      Poly s;
      for (const auto& [exps, coeff] : poly.items()) {
        const auto e_list = parse_exponents(exps, n, tw + ".poly");
        std::vector<int> small;
        for (auto x : e_list) {
          if (x > 255) invalid(tw + ".poly", "exponent too large");
          small.push_back(static_cast<int>(x));
        }
        s.add(Monomial::from_exponents(small), field(as_int(coeff, tw + ".poly[" + exps + "]")));
      }
      value.add(g, s);
    }
    f.set(e, std::move(value));
  }
  return f;
}

json Session::element_to_json(const SkewElement& a) const {
  const SkewGroupAlgebra& algebra = context_->algebra();
  json terms = json::array();
  for (const auto& [g, s] : a) {
    json poly = json::object();
    for (const auto& [m, c] : s) poly[exponent_key(m, algebra.num_variables())] = c.balanced();
    terms.push_back({{"poly", poly}, {"group_word", algebra.group().word(g)}});
  }
  return terms;
}

json Session::cochain_to_json(const Cochain& f) const {
  const SkewGroupAlgebra& algebra = context_->algebra();
  json entries = json::array();
  for (const auto& [e, v] : f) {
    json bar = json::array();
    for (GroupIndex g : e.bar) bar.push_back(algebra.group().word(g));
    json wedge = json::array();
    for (int i : e.wedge.indices()) wedge.push_back(algebra.variable_names()[static_cast<std::size_t>(i)]);
    entries.push_back({{"bar", bar}, {"wedge", wedge}, {"value", element_to_json(v)}});
  }
  // Tables are listed by (bar word, wedge), independent of internal indexing.
  std::stable_sort(entries.begin(), entries.end(), [](const json& a, const json& b) {
    return std::tie(a["bar"], a["wedge"]) < std::tie(b["bar"], b["wedge"]);
  });
  return {{"degree", f.degree()}, {"entries", entries}};
}

json Session::to_json() const {
  const SkewGroupAlgebra& algebra = context_->algebra();
  const FiniteMatrixGroup& group = algebra.group();
  json gens = json::array();
  for (std::size_t k = 0; k < group.generator_count(); ++k) gens.push_back(group.matrix(group.generator(k)).rows());
  json cochains = json::object();
  for (const auto& [name, spec] : cochains_) {
    json body = cochain_to_json(spec.cochain);
    if (spec.internal_degree) body["internal_degree"] = *spec.internal_degree;
    cochains[name] = body;
  }
  return {{"p", algebra.field().characteristic()},
          {"variables", algebra.variable_names()},
          {"group_generators", gens},
          {"cochains", cochains},
          {"selfcheck",
           {{"hdeg", selfcheck_.homological},
            {"ideg", selfcheck_.internal},
            {"trials", selfcheck_.trials},
            {"seed", selfcheck_.seed}}}};
}

void Session::set_cochain(const std::string& name, Cochain f, std::optional<int> internal_degree) {
  cochains_.insert_or_assign(name, NamedCochainSpec{std::move(f), internal_degree});
}

Cochain Session::cochain(const std::string& name, int zero_degree) const {
  if (auto it = cochains_.find(name); it != cochains_.end()) return it->second.cochain;
  if (name == "zero") return Cochain(zero_degree);
  throw Error(ErrorCode::UnknownName, "no cochain named '" + name + "'");
}

}  // namespace twistbrack
