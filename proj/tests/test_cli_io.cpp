#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "support.hpp"
#include "twistbrack/commands.hpp"
#include "twistbrack/error.hpp"

namespace twistbrack {
namespace {

using nlohmann::json;

const std::string kSession = std::string(TWISTBRACK_DATA_DIR) + "/transvection_p3.json";

json shipped() {
  std::ifstream in(kSession);
  return json::parse(in);
}

ErrorCode load_error(const json& doc) {
  try {
    Session::from_json(doc);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << doc.dump();
  return ErrorCode::ParseError;
}

TEST(Session, LoadsShippedFile) {
  const Session s = Session::load(kSession);
  EXPECT_EQ(s.context().algebra().group().size(), 3u);
  auto ex = make_transvection_example(3);
  EXPECT_EQ(s.cochain("lambda"), ex.lambda);
  EXPECT_EQ(s.cochain("kappa"), ex.kappa);
  EXPECT_EQ(s.cochain("delta"), ex.delta);
  EXPECT_EQ(s.cochains().at("kappa").internal_degree, -2);
  EXPECT_EQ(s.selfcheck().trials, 50);
}

TEST(Session, RoundTripIsCanonical) {
  const Session s = Session::load(kSession);
  const json canonical = s.to_json();
  const Session again = Session::parse(canonical.dump());
  EXPECT_EQ(again.to_json(), canonical);
  for (const auto& [name, spec] : s.cochains()) EXPECT_EQ(again.cochain(name), spec.cochain);
  // coefficients are reduced: 2 and -1 describe the same value over F_3
  json doc = shipped();
  doc["cochains"]["lambda"]["entries"][1]["value"][0]["poly"]["0,0"] = -1;
  EXPECT_EQ(Session::from_json(doc).to_json(), canonical);
}

TEST(Session, ZeroIsBuiltIn) {
  const Session s = Session::load(kSession);
  EXPECT_TRUE(s.cochain("zero", 2).is_zero());
  EXPECT_EQ(s.cochain("zero", 2).degree(), 2);
  EXPECT_THROW(s.cochain("missing"), Error);
}

TEST(Session, RejectsNonPrimeModulus) {
  json doc = shipped();
  doc["p"] = 4;
  EXPECT_EQ(load_error(doc), ErrorCode::NonPrimeModulus);
}

TEST(Session, RejectsSingularGenerator) {
  json doc = shipped();
  doc["group_generators"] = json::parse("[[[1,0],[0,0]]]");
  EXPECT_EQ(load_error(doc), ErrorCode::NonInvertibleGenerator);
}

TEST(Session, RejectsBadWedges) {
  json doc = shipped();
  doc["cochains"]["kappa"]["entries"][0]["wedge"] = json::parse(R"(["w","v"])");
  EXPECT_EQ(load_error(doc), ErrorCode::ValidationError);
  doc["cochains"]["kappa"]["entries"][0]["wedge"] = json::parse(R"(["v","u"])");
  EXPECT_EQ(load_error(doc), ErrorCode::ValidationError);
}

TEST(Session, RejectsDeclaredInternalDegreeMismatch) {
  json doc = shipped();
  doc["cochains"]["kappa"]["internal_degree"] = -1;
  EXPECT_EQ(load_error(doc), ErrorCode::ValidationError);
}

TEST(Session, RejectsStructuralErrors) {
  json doc = shipped();
  doc["cochains"]["kappa"]["degree"] = 3;
  EXPECT_EQ(load_error(doc), ErrorCode::ValidationError);

  doc = shipped();
  doc["cochains"]["lambda"]["entries"][0]["bar"] = json::parse("[[0,0,0]]");  // g^3 = 1
  EXPECT_EQ(load_error(doc), ErrorCode::ValidationError);

  doc = shipped();
  doc["cochains"]["delta"]["entries"].push_back(doc["cochains"]["delta"]["entries"][0]);
  EXPECT_EQ(load_error(doc), ErrorCode::ValidationError);

  doc = shipped();
  doc["cochains"]["delta"]["entries"][0]["value"][0]["poly"] = json::parse(R"({"1": 1})");
  EXPECT_EQ(load_error(doc), ErrorCode::ValidationError);

  doc = shipped();
  doc["cochains"]["delta"]["entries"][0]["value"][0]["group_word"] = json::parse("[3]");
  EXPECT_EQ(load_error(doc), ErrorCode::ValidationError);

  doc = shipped();
  doc.erase("variables");
  EXPECT_EQ(load_error(doc), ErrorCode::ParseError);
}

TEST(Session, ParseErrorsCarryLocation) {
  try {
    Session::parse("{\n  \"p\": 3,\n  \"variables\": [\"v\" \"w\"]\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    Session::parse(R"({"p": "three", "variables": ["v"], "group_generators": []})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("p:"), std::string::npos) << e.what();
  }
}

TEST(Commands, CheckReportsCoboundaries) {
  const Session s = Session::load(kSession);
  EXPECT_TRUE(cmd_check(s, "kappa").passed);
  EXPECT_TRUE(cmd_check(s, "lambda").passed);
  EXPECT_TRUE(cmd_check(s, "zero").passed);
  const ResultDocument delta = cmd_check(s, "delta");
  EXPECT_FALSE(delta.passed);
  EXPECT_EQ(delta.outputs["coboundary"]["entries"].size(), 2u);
  EXPECT_THROW(cmd_check(s, "nope"), Error);
}

TEST(Commands, BracketWithClassComparison) {
  const Session s = Session::load(kSession);
  const ResultDocument ll = cmd_bracket(s, "lambda", "lambda", std::string("zero"));
  EXPECT_TRUE(ll.passed);
  EXPECT_TRUE(ll.outputs["class_comparison"]["equal"].get<bool>());

  const ResultDocument dd = cmd_bracket(s, "delta", "delta");
  EXPECT_TRUE(dd.outputs["bracket"]["entries"].empty());
  EXPECT_EQ(dd.warnings.size(), 1u);

  // [delta, kappa] = -kappa over F_3 (see the Lie-derivative oracle), so the
  // comparison with kappa fails with a verified separating functional.
  const ResultDocument dk = cmd_bracket(s, "delta", "kappa", std::string("kappa"));
  EXPECT_FALSE(dk.passed);
  const auto& component = dk.outputs["class_comparison"]["components"][0];
  EXPECT_FALSE(component["solved"].get<bool>());
  EXPECT_TRUE(component["verified"].get<bool>());

  try {
    cmd_bracket(s, "delta", "kappa", std::string("delta"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
  EXPECT_THROW(cmd_bracket(s, "delta", "nope"), Error);
}

TEST(Commands, DemoClaims) {
  const auto claims_of = [](const ResultDocument& doc) {
    std::map<std::string, bool> out;
    for (const auto& c : doc.outputs["claims"]) out[c["id"].get<std::string>()] = c["passed"].get<bool>();
    return out;
  };
  for (std::int64_t p : {2, 3, 5}) {
    const auto claims = claims_of(cmd_demo_transvection(p));
    EXPECT_TRUE(claims.at("lambda_cocycle"));
    EXPECT_TRUE(claims.at("kappa_cocycle"));
    EXPECT_FALSE(claims.at("delta_cocycle"));
    EXPECT_TRUE(claims.at("no_one_cochains"));
    EXPECT_EQ(claims.at("delta_kappa"), p == 2);
    EXPECT_TRUE(claims.at("lambda_lambda"));
    EXPECT_TRUE(claims.at("lambda_kappa"));
    EXPECT_TRUE(claims.at("pbw_necessary"));
  }
  EXPECT_THROW(cmd_demo_transvection(4), Error);
  EXPECT_THROW(cmd_demo_transvection(37), Error);
}

TEST(Commands, OutputIsDeterministicAndRoundTrips) {
  const Session s = Session::load(kSession);
  const std::vector<ResultDocument> docs = {cmd_demo_transvection(3), cmd_check(s, "delta"),
                                            cmd_bracket(s, "lambda", "kappa", std::string("zero")),
                                            cmd_selfcheck(s, {1, 1, 3, 9})};
  EXPECT_EQ(cmd_demo_transvection(3).to_json().dump(), docs[0].to_json().dump());
  for (const auto& doc : docs) {
    EXPECT_FALSE(doc.seconds.has_value());
    EXPECT_EQ(ResultDocument::from_json(json::parse(doc.to_json().dump())), doc);
  }
  EXPECT_TRUE(cmd_demo_transvection(3, {.timing = true}).seconds.has_value());
}

TEST(Commands, SelfcheckVerdictsDoNotDependOnSeed) {
  const Session s = Session::load(kSession);
  const ResultDocument a = cmd_selfcheck(s, {1, 2, 5, 1});
  const ResultDocument b = cmd_selfcheck(s, {1, 2, 5, 2024});
  EXPECT_TRUE(a.passed);
  ASSERT_EQ(a.outputs["checks"].size(), b.outputs["checks"].size());
  for (std::size_t i = 0; i < a.outputs["checks"].size(); ++i) {
    EXPECT_EQ(a.outputs["checks"][i]["passed"], b.outputs["checks"][i]["passed"]);
  }
  EXPECT_THROW(cmd_selfcheck(s, {0, 1, 1, 1}), Error);
}

#ifdef TWISTBRACK_CLI
int run(const std::string& args) {
  const std::string command = std::string(TWISTBRACK_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("check " + kSession + " kappa"), 0);
  EXPECT_EQ(run("--pretty check " + kSession + " zero"), 0);
  EXPECT_EQ(run("check " + kSession + " delta"), 1);
  EXPECT_EQ(run("check " + kSession + " nope"), 2);
  EXPECT_EQ(run("check /nonexistent.json kappa"), 2);
  EXPECT_EQ(run("bracket " + kSession + " lambda lambda --class-compare-with zero"), 0);
  EXPECT_EQ(run("bracket " + kSession + " delta kappa --class-compare-with delta"), 2);
  EXPECT_EQ(run("demo transvection -p 4"), 2);
  EXPECT_EQ(run("selfcheck " + kSession + " --hdeg 1 --ideg 1 --trials 2"), 0);
  EXPECT_EQ(run("frobnicate"), 2);
}
#endif

}  // namespace
}  // namespace twistbrack
