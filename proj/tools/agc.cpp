#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "agc/json_io.hpp"
#include "agc/laws.hpp"
#include "agc/spec_lang.hpp"

namespace {

int atom_cap_from_env() {
  const char* cap = std::getenv("AGC_ATOM_CAP");
  if (cap == nullptr) return agc::kDefaultAtomCap;
  try {
    int value = std::stoi(cap);
    if (value < 1) throw std::invalid_argument("nonpositive");
    return value;
  } catch (const std::exception&) {
    throw agc::Error(std::string("invalid AGC_ATOM_CAP '") + cap + "'");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw agc::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string eval_text(const agc::EvalResult& result) {
  std::ostringstream out;
  for (const agc::QueryOutcome& q : result.queries) {
    if (q.kind == agc::Query::Kind::Print) {
      out << q.text << " = " << q.output << "\n";
    } else {
      out << "check " << q.text << (q.holds ? " holds" : " fails");
      if (!q.holds) out << ": " << q.output;
      out << "\n";
    }
  }
  return out.str();
}

std::uint64_t parse_seed(const std::string& hex) {
  return std::stoull(hex, nullptr, 16);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"assume-guarantee contract algebra"};
  app.require_subcommand(1);

  std::string eval_file, check_file;
  std::string format = "text";
  int atoms = 2;
  std::vector<std::string> suites{"all"};
  std::string seed_hex = "a6c";
  int samples = 2048;

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a spec file");
  cmd_eval->add_option("file", eval_file, "spec file")->required();
  cmd_eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_check = app.add_subcommand("check", "exit 0 iff all checks hold");
  cmd_check->add_option("file", check_file, "spec file")->required();

  CLI::App* cmd_laws = app.add_subcommand("laws", "run the algebraic law suites");
  cmd_laws->add_option("--atoms", atoms)->check(CLI::Range(1, 4));
  cmd_laws->add_option("--suites", suites,
                       "tables monoids semirings actions adjoints (or all)");
  cmd_laws->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cmd_laws->add_option("--seed", seed_hex, "hex seed for sampled/randomized checks");
  cmd_laws->add_option("--samples", samples)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_eval->parsed() || cmd_check->parsed()) {
      const std::string& path = cmd_eval->parsed() ? eval_file : check_file;
      agc::SpecFile spec = agc::parse_spec(slurp(path), atom_cap_from_env());
      agc::EvalResult result = agc::eval(spec);
      if (cmd_check->parsed()) {
        std::cout << eval_text(result);
        return result.all_checks_hold ? 0 : 1;
      }
      if (format == "json") {
        std::cout << agc::eval_json(result).dump(2) << "\n";
      } else {
        std::cout << eval_text(result);
      }
      return 0;
    }

    // laws
    for (const auto& s : suites) {
      if (s != "all") {
        const auto& known = agc::law_suite_names();
        if (std::find(known.begin(), known.end(), s) == known.end()) {
          throw agc::Error("unknown suite '" + s + "'");
        }
      }
    }
    agc::LawsOptions opts;
    opts.atoms = atoms;
    opts.suites = suites;
    opts.seed = parse_seed(seed_hex);
    opts.samples = samples;
    agc::SuiteReport report = agc::run_laws(opts);
    if (format == "json") {
      agc::Json j;
      j["atoms"] = atoms;
      j["seed"] = "0x" + seed_hex;
      agc::Json names = agc::Json::array();
      for (const auto& s : agc::law_suite_names()) {
        for (const auto& sel : suites) {
          if (sel == "all" || sel == s) {
            names.push_back(s);
            break;
          }
        }
      }
      j["suites"] = std::move(names);
      j["laws"] = report.to_json();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << report.to_text();
    }
    return report.all_as_expected() ? 0 : 1;
  } catch (const agc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
