#include "twistbrack/commands.hpp"

#include <chrono>
#include <sstream>

#include "twistbrack/checks.hpp"
#include "twistbrack/error.hpp"
#include "twistbrack/format.hpp"
#include "twistbrack/transvection.hpp"

namespace twistbrack {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(const RunOptions& options) : enabled_(options.timing), start_(Clock::now()) {}
  void stamp(ResultDocument& doc) const {
    if (enabled_) doc.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  bool enabled_;
  Clock::time_point start_;
};

void append_table(std::vector<std::string>& lines, const SkewGroupAlgebra& algebra, const Cochain& f) {
  if (f.is_zero()) {
    lines.push_back("    (zero)");
    return;
  }
  for (const auto& [e, v] : f) lines.push_back("    " + format(algebra, e) + " -> " + algebra.to_string(v));
}

json solution_to_json(const Session& session, const CoboundarySolution& s) {
  const SkewGroupAlgebra& algebra = session.context().algebra();
  json out = {{"degree", s.degree},         {"internal_degree", s.internal_degree},
              {"unknowns", s.unknowns},     {"rank", s.rank},
              {"solved", s.solved},         {"verified", s.verified}};
  if (s.witness) out["witness"] = session.cochain_to_json(*s.witness);
  json cert = json::array();
  for (const auto& [coord, c] : s.certificate) {
    json bar = json::array();
    for (GroupIndex g : coord.generator.bar) bar.push_back(algebra.group().word(g));
    json wedge = json::array();
    for (int i : coord.generator.wedge.indices()) wedge.push_back(algebra.variable_names()[static_cast<std::size_t>(i)]);
    cert.push_back({{"bar", bar},
                    {"wedge", wedge},
                    {"group_word", algebra.group().word(coord.group)},
                    {"monomial", coord.monomial.exponents(algebra.num_variables())},
                    {"coefficient", c.balanced()}});
  }
  out["certificate"] = cert;
  return out;
}

json comparison_to_json(const Session& session, const ClassComparison& cmp) {
  json components = json::array();
  for (const auto& s : cmp.components) components.push_back(solution_to_json(session, s));
  return {{"equal", cmp.equal}, {"witness", session.cochain_to_json(cmp.witness)}, {"components", components}};
}

/// Resolves a name; the built-in zero cochain takes the degree of its partner.
Cochain resolve(const Session& session, const std::string& name, const std::string& partner) {
  if (session.has_cochain(name) || name != "zero") return session.cochain(name);
  if (session.has_cochain(partner)) return Cochain(session.cochain(partner).degree());
  return Cochain(1);
}

}  // namespace

json ResultDocument::to_json() const {
  json doc = {{"command", command}, {"arguments", arguments}, {"outputs", outputs},
              {"passed", passed},   {"warnings", warnings},   {"summary", summary}};
  if (seconds) doc["seconds"] = *seconds;
  return doc;
}

ResultDocument ResultDocument::from_json(const json& doc) {
  try {
    ResultDocument r;
    r.command = doc.at("command").get<std::string>();
    r.arguments = doc.at("arguments");
    r.outputs = doc.at("outputs");
    r.passed = doc.at("passed").get<bool>();
    r.warnings = doc.at("warnings").get<std::vector<std::string>>();
    r.summary = doc.at("summary").get<std::vector<std::string>>();
    if (auto it = doc.find("seconds"); it != doc.end()) r.seconds = it->get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("result document: ") + e.what());
  }
}

std::string ResultDocument::pretty() const {
  std::ostringstream out;
  const bool error = outputs.is_object() && outputs.contains("error");
  out << command << ": " << (error ? "ERROR" : passed ? "PASS" : "FAIL") << "\n";
  for (const auto& line : summary) out << line << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  if (seconds) out << "time: " << *seconds << " s\n";
  return out.str();
}

ResultDocument error_document(const std::string& command, const std::string& code, const std::string& message) {
  ResultDocument doc;
  doc.command = command;
  doc.passed = false;
  doc.outputs = {{"error", {{"code", code}, {"message", message}}}};
  doc.summary.push_back("error: " + message);
  return doc;
}

ResultDocument cmd_check(const Session& session, const std::string& name, const RunOptions& options) {
  Stopwatch clock(options);
  const Cochain f = session.cochain(name);
  const BracketEngine& engine = session.context().engine();
  const Cochain df = engine.coboundary(f);

  ResultDocument doc;
  doc.command = "check";
  doc.arguments = {{"cochain", name}};
  doc.passed = df.is_zero();
  doc.outputs = {{"cochain", name},
                 {"degree", f.degree()},
                 {"coboundary", session.cochain_to_json(df)},
                 {"cocycle", doc.passed}};
  doc.summary.push_back(name + " (degree " + std::to_string(f.degree()) + "): " +
                        (doc.passed ? "cocycle" : "not a cocycle"));
  doc.summary.push_back("  coboundary:");
  append_table(doc.summary, session.context().algebra(), df);
  clock.stamp(doc);
  return doc;
}

ResultDocument cmd_bracket(const Session& session, const std::string& left, const std::string& right,
                           const std::optional<std::string>& class_compare_with, const RunOptions& options) {
  Stopwatch clock(options);
  const Cochain f = resolve(session, left, right);
  const Cochain f2 = resolve(session, right, left);
  const BracketEngine& engine = session.context().engine();
  const SkewGroupAlgebra& algebra = session.context().algebra();
  const Cochain b = engine.bracket(f, f2);

  ResultDocument doc;
  doc.command = "bracket";
  doc.arguments = {{"left", left}, {"right", right}};
  if (class_compare_with) doc.arguments["class_compare_with"] = *class_compare_with;
  if (!engine.is_cocycle(f)) doc.warnings.push_back(left + " is not a cocycle; the bracket is chain-level only");
  if (right != left && !engine.is_cocycle(f2)) {
    doc.warnings.push_back(right + " is not a cocycle; the bracket is chain-level only");
  }
  const bool closed = engine.is_cocycle(b);
  doc.outputs = {{"degree", b.degree()}, {"bracket", session.cochain_to_json(b)}, {"bracket_is_cocycle", closed}};
  doc.summary.push_back("[" + left + ", " + right + "] (degree " + std::to_string(b.degree()) + "):");
  append_table(doc.summary, algebra, b);

  if (class_compare_with) {
    const Cochain target = session.cochain(*class_compare_with, b.degree());
    const ClassComparison cmp = engine.class_equal(b, target);
    doc.outputs["class_comparison"] = comparison_to_json(session, cmp);
    doc.passed = cmp.equal;
    doc.summary.push_back("class of [" + left + ", " + right + "] " + (cmp.equal ? "equals" : "differs from") +
                          " class of " + *class_compare_with);
    if (cmp.equal) {
      doc.summary.push_back("  witness (d* witness = difference):");
      append_table(doc.summary, algebra, cmp.witness);
    } else {
      for (const auto& s : cmp.components) {
        if (!s.solved) {
          doc.summary.push_back("  internal degree " + std::to_string(s.internal_degree) +
                                ": separating functional " + (s.verified ? "verified" : "NOT verified"));
        }
      }
    }
  }
  clock.stamp(doc);
  return doc;
}

ResultDocument cmd_demo_transvection(std::int64_t p, const RunOptions& options) {
  Stopwatch clock(options);
  PrimeField field(p);  // rejects composite p
  if (p > kDemoPrimeCap) {
    throw Error(ErrorCode::ValidationError, "demo supports p <= " + std::to_string(kDemoPrimeCap));
  }
  TransvectionExample ex = make_transvection_example(p);
  const BracketEngine& engine = ex.context->engine();
  const SkewGroupAlgebra& algebra = ex.context->algebra();
  Session session = Session::from_context(std::move(ex.context));
  session.set_cochain("lambda", ex.lambda, -1);
  session.set_cochain("kappa", ex.kappa, -2);
  session.set_cochain("delta", ex.delta, 0);

  ResultDocument doc;
  doc.command = "demo transvection";
  doc.arguments = {{"p", p}};
  json claims = json::array();
  const auto claim = [&](const std::string& id, const std::string& statement, bool observed) {
    claims.push_back({{"id", id}, {"statement", statement}, {"expected", true}, {"observed", observed},
                      {"passed", observed}});
    doc.passed = doc.passed && observed;
    doc.summary.push_back(std::string(observed ? "  PASS  " : "  FAIL  ") + statement);
  };

  doc.summary.push_back("transvection group of order " + std::to_string(algebra.group().size()) + " over F_" +
                        std::to_string(p));
  claim("lambda_cocycle", "lambda is a 2-cocycle", engine.is_cocycle(ex.lambda));
  claim("kappa_cocycle", "kappa is a 2-cocycle", engine.is_cocycle(ex.kappa));
  claim("delta_cocycle", "delta is a 1-cocycle", engine.is_cocycle(ex.delta));

  const Cochain dk = engine.bracket(ex.delta, ex.kappa);
  const std::size_t one_cochains = engine.cochain_space_dimension(1, -2);
  claim("no_one_cochains", "there are no 1-cochains of internal degree -2", one_cochains == 0);
  claim("delta_kappa", "[delta, kappa] = kappa at chain level", dk == ex.kappa);
  const ClassComparison dk_class = engine.class_equal(dk, ex.kappa);
  claim("delta_kappa_class", "[delta, kappa] is cohomologous to kappa", dk_class.equal);

  const PbwReport pbw = engine.pbw_check(ex.lambda, ex.kappa);
  claim("lambda_lambda", "[lambda, lambda] is a coboundary", pbw.lambda_lambda_class.equal);
  claim("lambda_kappa", "[lambda, kappa] is a coboundary", pbw.lambda_kappa_class.equal);
  claim("pbw_necessary", "necessary PBW conditions hold for (lambda, kappa)", pbw.necessary_conditions_hold());

  doc.summary.push_back("  [delta, kappa]:");
  append_table(doc.summary, algebra, dk);
  doc.summary.push_back("  d* delta:");
  append_table(doc.summary, algebra, engine.coboundary(ex.delta));

  doc.outputs = {{"group_order", algebra.group().size()},
                 {"claims", claims},
                 {"session", session.to_json()},
                 {"delta_kappa", session.cochain_to_json(dk)},
                 {"delta_coboundary", session.cochain_to_json(engine.coboundary(ex.delta))},
                 {"lambda_lambda", comparison_to_json(session, pbw.lambda_lambda_class)},
                 {"lambda_kappa", comparison_to_json(session, pbw.lambda_kappa_class)},
                 {"lambda_lambda_minus_2_dkappa", session.cochain_to_json(pbw.lambda_lambda_minus_2_dkappa)}};
  (void)field;
  clock.stamp(doc);
  return doc;
}

ResultDocument cmd_selfcheck(const Session& session, const SelfcheckBounds& bounds, const RunOptions& options) {
  Stopwatch clock(options);
  if (bounds.homological < 1 || bounds.internal < 0 || bounds.trials < 0) {
    throw Error(ErrorCode::ValidationError, "selfcheck bounds must be positive");
  }
  std::vector<checks::NamedCochain> named;
  for (const auto& [name, spec] : session.cochains()) named.emplace_back(name, spec.cochain);
  const auto results = checks::run_all(session.context(), named, {bounds.homological, bounds.internal},
                                       bounds.trials, bounds.seed);

  ResultDocument doc;
  doc.command = "selfcheck";
  doc.arguments = {{"hdeg", bounds.homological}, {"ideg", bounds.internal}, {"trials", bounds.trials},
                   {"seed", bounds.seed}};
  json list = json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    list.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    doc.summary.push_back(std::string(r.passed ? "  PASS  " : "  FAIL  ") + r.name + " (" + std::to_string(r.cases) +
                          " cases)" + (r.passed ? "" : ": " + r.detail));
    if (!r.passed) ++failed;
  }
  doc.passed = failed == 0;
  doc.outputs = {{"checks", list}, {"failed", failed}};
  clock.stamp(doc);
  return doc;
}

}  // namespace twistbrack
