#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistbrack/session.hpp"

namespace twistbrack {

/// Output of one command: an echo of the invocation, machine-readable
/// outputs, an overall verdict, and human-readable summary lines.
struct ResultDocument {
  std::string command;
  nlohmann::json arguments = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  bool passed = true;
  std::vector<std::string> warnings;
  std::vector<std::string> summary;
  /// Wall-clock seconds; only recorded on request so output stays reproducible.
  std::optional<double> seconds;

  nlohmann::json to_json() const;
  static ResultDocument from_json(const nlohmann::json& doc);
  /// Plain-text rendering for terminals.
  std::string pretty() const;
  int exit_code() const { return passed ? 0 : 1; }

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

struct RunOptions {
  bool timing = false;
};

/// Largest prime accepted by the transvection demo.
inline constexpr std::int64_t kDemoPrimeCap = 31;

/// Coboundary of a named cochain on every generator of the next degree.
ResultDocument cmd_check(const Session& session, const std::string& name, const RunOptions& options = {});

/// Chain-level bracket [left, right]; with `class_compare_with`, also decides
/// whether the bracket and that cochain are cohomologous.
ResultDocument cmd_bracket(const Session& session, const std::string& left, const std::string& right,
                           const std::optional<std::string>& class_compare_with = std::nullopt,
                           const RunOptions& options = {});

/// The transvection example over F_p: cocycle checks and bracket claims.
ResultDocument cmd_demo_transvection(std::int64_t p, const RunOptions& options = {});

/// Runs every invariant suite with the session's (or the given) bounds.
ResultDocument cmd_selfcheck(const Session& session, const SelfcheckBounds& bounds, const RunOptions& options = {});

/// Document reporting an input error (exit code 2).
ResultDocument error_document(const std::string& command, const std::string& code, const std::string& message);

}  // namespace twistbrack
