#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "twistbrack/cochain.hpp"
#include "twistbrack/context.hpp"

namespace twistbrack {

struct SelfcheckBounds {
  int homological = 3;
  int internal = 3;
  int trials = 50;
  std::uint64_t seed = 1;
  auto operator<=>(const SelfcheckBounds&) const = default;
};

struct NamedCochainSpec {
  Cochain cochain;
  std::optional<int> internal_degree;  // declared in the file, validated on load
  friend bool operator==(const NamedCochainSpec&, const NamedCochainSpec&) = default;
};

/// A validated session: field, variables, group, named cochains, selfcheck bounds.
///
/// JSON schema:
///   { "p": 3, "variables": ["v", "w"], "group_generators": [[[1,1],[0,1]]],
///     "cochains": { "kappa": { "degree": 2, "internal_degree": -2,
///        "entries": [ { "bar": [], "wedge": ["v","w"],
///                       "value": [ { "poly": {"0,0": 1}, "group_word": [0] } ] } ] } },
///     "selfcheck": { "hdeg": 3, "ideg": 3, "trials": 50, "seed": 1 } }
/// "bar" lists group elements as words in the generators (indices into
/// group_generators); "poly" maps comma-separated exponent vectors to integer
/// coefficients.
class Session {
 public:
  static Session parse(std::string_view text);
  static Session from_json(const nlohmann::json& doc);
  static Session load(const std::filesystem::path& path);
  static Session from_context(std::unique_ptr<Context> context);

  /// Canonical form: sorted keys, reduced coefficients, shortest words.
  nlohmann::json to_json() const;

  const Context& context() const { return *context_; }
  const std::map<std::string, NamedCochainSpec>& cochains() const noexcept { return cochains_; }
  const SelfcheckBounds& selfcheck() const noexcept { return selfcheck_; }
  void set_selfcheck(const SelfcheckBounds& bounds) { selfcheck_ = bounds; }

  /// Adds or replaces a named cochain.
  void set_cochain(const std::string& name, Cochain f, std::optional<int> internal_degree = std::nullopt);
  bool has_cochain(const std::string& name) const { return cochains_.count(name) != 0; }
  /// Looks up a cochain; the name "zero" (unless defined) is the zero cochain of
  /// `zero_degree`. Throws UnknownName.
  Cochain cochain(const std::string& name, int zero_degree = 0) const;

  /// JSON rendering of a cochain in the session's entry format.
  nlohmann::json cochain_to_json(const Cochain& f) const;
  Cochain cochain_from_json(const nlohmann::json& doc, const std::string& where) const;
  nlohmann::json element_to_json(const SkewElement& a) const;

 private:
  std::unique_ptr<Context> context_;
  std::map<std::string, NamedCochainSpec> cochains_;
  SelfcheckBounds selfcheck_;
};

}  // namespace twistbrack
