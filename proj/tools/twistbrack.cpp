// twistbrack: cocycle checks, Gerstenhaber brackets and self-checks on
// Hochschild cochains of S(V) x| G.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "twistbrack/commands.hpp"
#include "twistbrack/error.hpp"

namespace {

constexpr int kInputError = 2;

void emit(const twistbrack::ResultDocument& doc, bool pretty) {
  if (pretty) {
    std::cout << doc.pretty();
  } else {
    std::cout << doc.to_json().dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace twistbrack;

  CLI::App app{"Gerstenhaber brackets on Hochschild cochains of S(V) x| G over F_p", "twistbrack"};
  app.require_subcommand(1);
  bool pretty = false;
  RunOptions options;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
  app.add_flag("--timing", options.timing, "Report wall-clock time");

  std::string session_path, name, left, right;
  std::optional<std::string> compare;
  std::int64_t prime = 3;
  std::optional<int> hdeg, ideg, trials;
  std::optional<std::uint64_t> seed;

  auto* check = app.add_subcommand("check", "Coboundary of a named cochain; passes iff it is a cocycle");
  check->add_option("session", session_path, "Session JSON file")->required();
  check->add_option("name", name, "Cochain name")->required();

  auto* bracket = app.add_subcommand("bracket", "Chain-level Gerstenhaber bracket of two named cochains");
  bracket->add_option("session", session_path, "Session JSON file")->required();
  bracket->add_option("left", left, "Left cochain")->required();
  bracket->add_option("right", right, "Right cochain")->required();
  bracket->add_option("--class-compare-with", compare, "Decide whether the bracket is cohomologous to this cochain");

  auto* demo = app.add_subcommand("demo", "Built-in examples");
  demo->require_subcommand(1);
  auto* transvection = demo->add_subcommand("transvection", "Transvection group of order p acting on F_p^2");
  transvection->add_option("-p", prime, "Prime characteristic")->required();

  auto* selfcheck = app.add_subcommand("selfcheck", "Run every invariant suite on a session");
  selfcheck->add_option("session", session_path, "Session JSON file")->required();
  selfcheck->add_option("--hdeg", hdeg, "Largest homological degree");
  selfcheck->add_option("--ideg", ideg, "Largest internal degree");
  selfcheck->add_option("--trials", trials, "Randomized trials per property");
  selfcheck->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  std::string command = "unknown";
  try {
    ResultDocument doc;
    if (check->parsed()) {
      command = "check";
      doc = cmd_check(Session::load(session_path), name, options);
    } else if (bracket->parsed()) {
      command = "bracket";
      doc = cmd_bracket(Session::load(session_path), left, right, compare, options);
    } else if (transvection->parsed()) {
      command = "demo transvection";
      doc = cmd_demo_transvection(prime, options);
    } else if (selfcheck->parsed()) {
      command = "selfcheck";
      const Session session = Session::load(session_path);
      SelfcheckBounds bounds = session.selfcheck();
      if (hdeg) bounds.homological = *hdeg;
      if (ideg) bounds.internal = *ideg;
      if (trials) bounds.trials = *trials;
      if (seed) bounds.seed = *seed;
      doc = cmd_selfcheck(session, bounds, options);
    }
    emit(doc, pretty);
    return doc.exit_code();
  } catch (const Error& e) {
    emit(error_document(command, std::string(to_string(e.code())), e.what()), pretty);
    std::cerr << "twistbrack: " << e.what() << "\n";
    return kInputError;
  }
}
