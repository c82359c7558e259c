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

// Command-line front end. run() is separate from main() so tests can drive it
// with in-memory streams.
//
// Exit status: 0 pass, 1 a mathematical check failed, 2 usage or input error.

#ifndef FLAGCERT_TOOLS_FLAGCERT_CLI_HPP_
#define FLAGCERT_TOOLS_FLAGCERT_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flagcert/certificate.hpp"
#include "flagcert/certificate_io.hpp"
#include "flagcert/json_report.hpp"
#include "flagcert/oracle.hpp"

namespace flagcert::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Input problems that map to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string approx(const Rational& r) {
  std::ostringstream s;
  s << r << " (~" << std::setprecision(6) << r.to_double() << ")";
  return s.str();
}

inline std::string letters(const ColoredGraph& g) {
  std::string out;
  for (const auto& e : g.edges()) out += color_letter(e.color);
  return out;
}

inline Certificate load_source(const std::string& builtin, const std::string& path) {
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read certificate file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_certificate(buf.str());
  }
  if (builtin.empty() || builtin == "c6a") return builtin_c6a_certificate();
  throw UsageError("unknown built-in certificate \"" + builtin + "\" (available: c6a)");
}

/// "k33" style template names: "k" followed by two single-digit part sizes.
inline std::array<int, 2> parse_template(const std::string& name) {
  if (name.size() == 3 && (name[0] == 'k' || name[0] == 'K') && name[1] >= '1' && name[1] <= '9' && name[2] >= '1' &&
      name[2] <= '9') {
    std::array<int, 2> parts{name[1] - '0', name[2] - '0'};
    if (parts[0] + parts[1] <= kMaxSearchVertices && parts[0] * parts[1] <= kMaxTemplateEdges) return parts;
  }
  throw UsageError("template must look like k33 with at most " + std::to_string(kMaxSearchVertices) +
                   " vertices and " + std::to_string(kMaxTemplateEdges) + " edges, got \"" + name + "\"");
}

inline void print_verification(const VerificationReport& r, std::ostream& out) {
  out << "certificate " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    out << "  " << std::left << std::setw(24) << c.name << std::setw(8) << status_name(c.status) << c.detail << "\n";
  }
  if (r.coefficients.size() > 0) {
    out << "coefficients (bound " << approx(r.bound) << "):\n";
    for (ClassIndex l = 1; l <= r.coefficients.size(); ++l) {
      out << "  J" << l << ": " << approx(r.coefficients[l]) << "\n";
    }
  }
  for (const auto& f : r.families) {
    out << "family " << color_letter(f.root_edge_color) << ": order " << f.order << ", pivots";
    for (const auto& p : f.psd.pivot_sequence) out << " " << p;
    out << "\n";
    for (const auto& k : f.psd.kernel_basis) {
      out << "  kernel [";
      for (std::size_t i = 0; i < k.size(); ++i) out << (i ? ", " : "") << k[i];
      out << "]\n";
    }
  }
}

inline void print_oracle(const OracleReport& r, const std::string& title, bool all_records, std::ostream& out) {
  out << title << ": " << (r.ok() ? "PASS" : "FAIL") << ", " << r.passed() << "/" << r.total() << " checks hold over "
      << r.instances() << (r.instances() == 1 ? " instance" : " instances") << "\n";
  std::map<std::string, CheckTally> groups;  // "expansion:R1.R2" -> "expansion"
  for (const auto& [name, t] : r.tallies()) {
    auto& g = groups[name.substr(0, name.find(':'))];
    g.passed += t.passed;
    g.failed += t.failed;
  }
  for (const auto& [name, t] : groups) out << "  " << name << ": " << t.passed << " hold, " << t.failed << " fail\n";
  for (const auto& rec : r.records()) {
    if (!all_records && rec.holds) continue;
    out << "  " << rec.check << " [" << rec.instance << "] lhs " << approx(rec.lhs) << ", rhs " << approx(rec.rhs)
        << (rec.holds ? "  holds" : "  FAILS") << "\n";
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for flag-algebra density certificates", "flagcert"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string format = "text";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };
  std::string builtin;
  std::string cert_path;
  auto add_source = [&](CLI::App* sub) {
    auto* b = sub->add_option("--builtin", builtin, "Built-in certificate (c6a)");
    auto* c = sub->add_option("--cert", cert_path, "Certificate file");
    b->excludes(c);
  };
  unsigned threads = default_threads();
  auto add_threads = [&threads](CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 1024U));
  };

  auto* verify = app.add_subcommand("verify", "Check a certificate");
  add_source(verify);
  add_format(verify);
  add_threads(verify);

  std::string template_name = "k33";
  auto* classify_cmd = app.add_subcommand("classify", "Enumerate colourings of a bipartite template up to isomorphism");
  classify_cmd->add_option("--template", template_name, "Template such as k33");
  add_format(classify_cmd);

  std::string family_letter;
  int fi = 0;
  int fj = 0;
  auto* expand = app.add_subcommand("expand", "Expand one flag product in the template classes");
  add_source(expand);
  expand->add_option("--family", family_letter, "Root edge colour of the family")
      ->required()
      ->check(CLI::IsMember({"R", "B"}));
  expand->add_option("--i", fi, "First flag (1-based)")->required()->check(CLI::PositiveNumber);
  expand->add_option("--j", fj, "Second flag (1-based)")->required()->check(CLI::PositiveNumber);
  add_format(expand);

  int n = 0;
  Seed seed = 0;
  long trials = 0;
  std::string tolerance_text;
  auto* oracle = app.add_subcommand("oracle", "Brute-force checks on concrete cliques");
  oracle->require_subcommand(1);
  add_source(oracle);
  auto* identities = oracle->add_subcommand("identities", "Density identities on one random clique");
  identities->add_option("--n", n, "Clique size")->required()->check(CLI::Range(1, Oracle::kMaxExactVertices));
  identities->add_option("--seed", seed, "Seed");
  add_format(identities);
  auto* inequality = oracle->add_subcommand("inequality", "Flagged inequality on one random clique");
  inequality->add_option("--n", n, "Clique size")->required()->check(CLI::Range(6, Oracle::kMaxExactVertices));
  inequality->add_option("--seed", seed, "Seed");
  add_format(inequality);
  auto* exhaustive = oracle->add_subcommand("exhaustive", "Every check on every colouring of K_6");
  add_format(exhaustive);
  add_threads(exhaustive);
  auto* montecarlo = oracle->add_subcommand("montecarlo", "Mean alternating 6-cycle density of random cliques");
  montecarlo->add_option("--n", n, "Clique size")->required()->check(CLI::Range(6, 100000));
  montecarlo->add_option("--trials", trials, "Number of random cliques")->required()->check(CLI::Range(1L, 1000000L));
  montecarlo->add_option("--seed", seed, "Master seed");
  montecarlo->add_option("--tolerance", tolerance_text, "Fail unless |mean - 1/64| < tolerance (rational)");
  add_format(montecarlo);
  add_threads(montecarlo);

  std::string out_path;
  auto* export_cert = app.add_subcommand("export-cert", "Write a certificate in the JSON file format");
  add_source(export_cert);
  export_cert->add_option("--out", out_path, "Output path (default: standard output)");

  // CLI11 parses in reverse order from a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (verify->parsed()) {
      const auto report = verify_certificate(detail::load_source(builtin, cert_path), threads);
      if (json) out << report_to_json(report).dump(2) << "\n";
      else detail::print_verification(report, out);
      return report.passed() ? kExitPass : kExitFail;
    }

    if (classify_cmd->parsed()) {
      const auto parts = detail::parse_template(template_name);
      const auto tmpl = complete_bipartite(parts[0], parts[1]);
      const auto table = parts == std::array<int, 2>{3, 3} ? builtin::k33_class_table() : classify_template(tmpl);
      const long expected = 1L << tmpl.edge_count();
      const bool ok = table.total_colorings() == expected;
      if (json) {
        Json cls = Json::array();
        for (const auto& c : table.classes()) {
          cls.push_back({{"index", c.index},
                         {"coloring", detail::letters(c.representative)},
                         {"aut_count", c.aut_count},
                         {"multiplicity", c.multiplicity}});
        }
        out << Json{{"verdict", ok ? "pass" : "fail"},
                    {"template", {{"parts", parts}}},
                    {"group_order", table.group_order()},
                    {"colorings", table.total_colorings()},
                    {"classes", std::move(cls)}}
                   .dump(2)
            << "\n";
      } else {
        out << table.total_colorings() << " colourings, " << table.size() << " classes\n";
        for (const auto& c : table.classes()) {
          out << "  J" << std::left << std::setw(4) << c.index << detail::letters(c.representative)
              << "  aut " << std::setw(4) << c.aut_count << " multiplicity " << c.multiplicity << "\n";
        }
      }
      return ok ? kExitPass : kExitFail;
    }

    if (expand->parsed()) {
      const auto cert = detail::load_source(builtin, cert_path);
      const Color c = color_from_letter(family_letter[0]);
      const FlagFamily* family = nullptr;
      for (const auto& f : cert.families)
        if (f.root_edge_color == c && !family) family = &f;
      if (!family) throw UsageError("certificate has no family with root edge colour " + family_letter);
      const int m = static_cast<int>(family->flags.size());
      if (fi > m || fj > m) throw UsageError("flag index out of range 1.." + std::to_string(m));
      const auto table = certificate_class_table(cert);
      const auto product = flag_product(family->flags[fi - 1], family->flags[fj - 1]);
      const auto e = expand_in_classes(product, table);
      const Count denominator = hom_inj_count(product.underlying(), table.template_graph());
      auto count_of = [&](ClassIndex l) { return (e[l] * Rational(static_cast<long long>(denominator))).numerator(); };
      if (json) {
        Json values = Json::object();
        Json counts = Json::object();
        for (ClassIndex l : e.support()) {
          values[std::to_string(l)] = e[l].to_string();
          counts[std::to_string(l)] = count_of(l).str();
        }
        out << Json{{"family", family_letter}, {"i", fi},           {"j", fj},
                    {"denominator", denominator}, {"counts", counts}, {"expansion", values}}
                   .dump(2)
            << "\n";
      } else {
        std::string line;
        for (ClassIndex l : e.support()) {
          line += (line.empty() ? "J" : ", J") + std::to_string(l) + ": " + count_of(l).str() + "/" +
                  std::to_string(denominator);
        }
        out << line << "\n";
      }
      return kExitPass;
    }

    if (oracle->parsed()) {
      const Oracle checker(detail::load_source(builtin, cert_path));
      if (identities->parsed() || inequality->parsed()) {
        const auto g = random_clique_coloring(n, seed);
        const std::string instance = "K" + std::to_string(n) + " seed " + std::to_string(seed);
        const auto report = identities->parsed() ? checker.check_identities(g, instance)
                                                 : checker.check_flagged_inequality(g, instance);
        if (json) out << oracle_report_to_json(report).dump(2) << "\n";
        else detail::print_oracle(report, identities->parsed() ? "identities" : "inequality", true, out);
        return report.ok() ? kExitPass : kExitFail;
      }
      if (exhaustive->parsed()) {
        const auto report = checker.exhaustive_k6(threads);
        if (json) out << oracle_report_to_json(report).dump(2) << "\n";
        else detail::print_oracle(report, "exhaustive K6", false, out);
        return report.ok() ? kExitPass : kExitFail;
      }
      if (montecarlo->parsed()) {
        std::optional<Rational> tolerance;
        if (!tolerance_text.empty()) {
          try {
            tolerance = Rational::parse(tolerance_text);
          } catch (const std::exception& e) {
            throw UsageError(std::string("--tolerance: ") + e.what());
          }
        }
        const auto r = monte_carlo_mean(n, trials, seed, threads);
        const Rational expected(1, 64);
        const Rational deviation = r.mean >= expected ? r.mean - expected : expected - r.mean;
        const bool ok = !tolerance || deviation < *tolerance;
        if (json) {
          auto j = monte_carlo_to_json(r);
          j["deviation"] = deviation.to_string();
          if (tolerance) j["tolerance"] = tolerance->to_string();
          j["verdict"] = ok ? "pass" : "fail";
          out << j.dump(2) << "\n";
        } else {
          out << "montecarlo n " << r.n << ", " << r.trials << " trials, seed " << r.seed << ": "
              << (ok ? "PASS" : "FAIL") << "\n"
              << "  mean " << detail::approx(r.mean) << "\n"
              << "  min  " << detail::approx(r.min) << "\n"
              << "  max  " << detail::approx(r.max) << "\n"
              << "  |mean - 1/64| " << detail::approx(deviation) << "\n";
        }
        return ok ? kExitPass : kExitFail;
      }
    }

    if (export_cert->parsed()) {
      const auto text = save_certificate(detail::load_source(builtin, cert_path));
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << text)) throw UsageError("cannot write " + out_path);
      }
      return kExitPass;
    }
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace flagcert::cli

#endif  // FLAGCERT_TOOLS_FLAGCERT_CLI_HPP_
