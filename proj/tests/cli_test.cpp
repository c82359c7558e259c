// Copyright 2026 The flagcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flagcert_cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace flagcert::cli {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("flagcert_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

TEST(CliTest, VerifyBuiltinJson) {
  const auto r = invoke({"verify", "--builtin", "c6a", "--format", "json"});
  ASSERT_EQ(r.status, kExitPass) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "pass");
  ASSERT_EQ(j["coefficients"].size(), 26u);
  for (const auto& [key, value] : j["coefficients"].items()) EXPECT_EQ(value, "1/64") << key;
}

TEST(CliTest, VerifyTextMarksDecimalsApproximate) {
  const auto r = invoke({"verify"});
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_NE(r.out.find("certificate c6a: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("J26: 1/64 (~0.015625)"), std::string::npos);
}

TEST(CliTest, ClassifyK33) {
  const auto r = invoke({"classify", "--template", "k33"});
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "512 colourings, 26 classes");
  const auto j = Json::parse(invoke({"classify", "--template", "k33", "--format", "json"}).out);
  EXPECT_EQ(j["colorings"], 512);
  EXPECT_EQ(j["classes"].size(), 26u);
  EXPECT_EQ(j["classes"][3]["coloring"], "BRRRBRRRB");
  EXPECT_EQ(invoke({"classify", "--template", "k23"}).out.substr(0, 25), "64 colourings, 13 classes");
  EXPECT_EQ(invoke({"classify", "--template", "k55"}).status, kExitUsage);
  EXPECT_EQ(invoke({"classify", "--template", "c6"}).status, kExitUsage);
}

TEST(CliTest, ExpandPrintsPublishedLine) {
  const auto r = invoke({"expand", "--family", "R", "--i", "1", "--j", "1"});
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_EQ(r.out, "J1: 72/72, J2: 16/72, J3: 4/72\n");
  const auto j = Json::parse(invoke({"expand", "--family", "B", "--i", "1", "--j", "1", "--format", "json"}).out);
  EXPECT_EQ(j["denominator"], 72);
  EXPECT_EQ(j["counts"], (Json{{"22", "4"}, {"25", "16"}, {"26", "72"}}));
  EXPECT_EQ(j["expansion"]["25"], "2/9");
  EXPECT_EQ(invoke({"expand", "--family", "R", "--i", "9", "--j", "1"}).status, kExitUsage);
  EXPECT_EQ(invoke({"expand", "--family", "G", "--i", "1", "--j", "1"}).status, kExitUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--bogus"}).status, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--builtin", "c4"}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--builtin", "c6a", "--cert", "x.json"}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--format", "yaml"}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--cert", "/nonexistent/cert.json"}).status, kExitUsage);
  EXPECT_EQ(invoke({"oracle"}).status, kExitUsage);
  EXPECT_EQ(invoke({"oracle", "identities", "--n", "15"}).status, kExitUsage);
  EXPECT_EQ(invoke({"oracle", "inequality", "--n", "5"}).status, kExitUsage);
  EXPECT_EQ(invoke({"oracle", "montecarlo", "--n", "6", "--trials", "1", "--tolerance", "2/4"}).status, kExitUsage);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.status, kExitPass);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

TEST(CliTest, ExportThenVerifyRoundTrip) {
  TempDir dir;
  const auto path = dir.file("c6a.json");
  ASSERT_EQ(invoke({"export-cert", "--builtin", "c6a", "--out", path}).status, kExitPass);
  const auto from_file = invoke({"verify", "--cert", path, "--format", "json"});
  const auto builtin = invoke({"verify", "--builtin", "c6a", "--format", "json"});
  EXPECT_EQ(from_file.status, kExitPass);
  EXPECT_EQ(from_file.out, builtin.out);
  EXPECT_EQ(invoke({"export-cert"}).out, save_certificate(builtin_c6a_certificate()));
}

TEST(CliTest, SchemaAndMathFailuresHaveDistinctStatus) {
  TempDir dir;
  auto j = certificate_to_json(builtin_c6a_certificate());
  j["families"][0]["flags"][0]["roots"] = Json::array({0, 0});
  write(dir.file("dup.json"), j.dump());
  const auto dup = invoke({"verify", "--cert", dir.file("dup.json")});
  EXPECT_EQ(dup.status, kExitUsage);
  EXPECT_NE(dup.err.find("$.families[0].flags[0].roots"), std::string::npos) << dup.err;

  j = certificate_to_json(builtin_c6a_certificate());
  j["families"][0]["matrix"][0][0] = "3/128";
  write(dir.file("bad.json"), j.dump());
  const auto bad = invoke({"verify", "--cert", dir.file("bad.json"), "--format", "json"});
  EXPECT_EQ(bad.status, kExitFail);
  EXPECT_EQ(Json::parse(bad.out)["verdict"], "fail");
}

// Text and JSON list the same checks with the same outcomes.
TEST(CliTest, FormatsAgreeOnOutcomes) {
  TempDir dir;
  auto j = certificate_to_json(builtin_c6a_certificate());
  j["families"][1]["matrix"][2][2] = "1/2";
  write(dir.file("bad.json"), j.dump());
  for (const std::string& source : {std::string("--builtin"), std::string("--cert")}) {
    std::vector<std::string> args{"verify", source, source == "--cert" ? dir.file("bad.json") : "c6a"};
    const auto text = invoke(args);
    args.insert(args.end(), {"--format", "json"});
    const auto json = invoke(args);
    EXPECT_EQ(text.status, json.status);
    for (const auto& c : Json::parse(json.out)["checks"]) {
      const std::string name = c["name"];
      const auto pos = text.out.find("  " + name + " ");
      ASSERT_NE(pos, std::string::npos) << name;
      const auto line = text.out.substr(pos, text.out.find('\n', pos) - pos);
      EXPECT_NE(line.find(" " + c["status"].get<std::string>() + " "), std::string::npos) << line;
    }
  }
}

TEST(CliTest, OracleCommands) {
  auto r = invoke({"oracle", "identities", "--n", "9", "--seed", "42", "--format", "json"});
  EXPECT_EQ(r.status, kExitPass);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["summary"]["passed"], 130);
  EXPECT_EQ(j["records"].size(), 130u);

  r = invoke({"oracle", "inequality", "--n", "8", "--seed", "3"});
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_NE(r.out.find("inequality: PASS"), std::string::npos);

  r = invoke({"oracle", "montecarlo", "--n", "6", "--trials", "3", "--seed", "9", "--format", "json"});
  EXPECT_EQ(r.status, kExitPass);
  j = Json::parse(r.out);
  EXPECT_EQ(j["values"].size(), 3u);
  EXPECT_EQ(j["verdict"], "pass");

  // Three K_6 samples cannot be within 1/1000000 of 1/64.
  r = invoke({"oracle", "montecarlo", "--n", "6", "--trials", "3", "--seed", "9", "--tolerance", "1/1000000"});
  EXPECT_EQ(r.status, kExitFail);
}

TEST(CliTest, ExitStatusMatchesVerdict) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--format", "json"},
           {"oracle", "identities", "--n", "7", "--seed", "1", "--format", "json"},
           {"oracle", "montecarlo", "--n", "7", "--trials", "2", "--tolerance", "1/100000", "--format", "json"}}) {
    const auto r = invoke(args);
    EXPECT_EQ(r.status == kExitPass, Json::parse(r.out)["verdict"] == "pass");
  }
}

}  // namespace
}  // namespace flagcert::cli
