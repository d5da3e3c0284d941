#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "asms/assembly.hpp"
#include "asms/error.hpp"
#include "asms/langford.hpp"
#include "asms/triples.hpp"
#include "asms/verify.hpp"

namespace asms::cli {

namespace {

/// Failure in a named pipeline stage; maps to exit code 2.
struct StageError {
  std::string stage;
  std::string message;
};

template <typename F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const asms::Error& e) {
    throw StageError{name, e.what()};
  } catch (const std::ios_base::failure& e) {
    throw StageError{name, e.what()};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
  if (!out) throw ParseError("write to '" + path + "' failed");
}

IntMatrix parse_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_matrix(text);
  return parse_csv(text);
}

ExtendedLangfordSequence load_sequence(const std::string& path) {
  ExtendedLangfordSequence seq = parse_sequence(read_file(path));
  if (const auto v = validate_sequence(seq); !v)
    throw InvalidSequence("'" + path + "': " + to_string(v.rule) + ": " + v.message);
  return seq;
}

int fail(std::ostream& err, const std::string& cmd, const StageError& e) {
  err << cmd << ": " << e.stage << ": " << e.message << '\n';
  return kExitError;
}

}  // namespace

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!cfg.n) throw StageError{"config", "--n is required"};
    if (cfg.form != "centered" && cfg.form != "classic") throw StageError{"config", "--form must be centered or classic"};
    if (cfg.format != "csv" && cfg.format != "json") throw StageError{"config", "--format must be csv or json"};

    const ConstructionParams params = stage("parameters", [&] { return derive_parameters(*cfg.n); });
    const ExtendedLangfordSequence seq = stage("sequence", [&] {
      if (cfg.sequence) return load_sequence(*cfg.sequence);
      SearchBudget budget;
      budget.max_nodes = cfg.budget;
      return search_sequence(params.d, params.m, cfg.k, budget);
    });
    const AssembledSquare sq = stage("assembly", [&] { return assemble(params, seq); });
    const IntMatrix mat = cfg.form == "classic" ? to_classic_form(sq) : sq.entries;
    const VerificationReport report = verify_asms(mat);

    std::ostream& summary = cfg.out ? out : err;
    summary << "n=" << params.n << " lambda=" << params.lambda << " w=" << params.w << " m=" << params.m
            << " k=" << seq.k() << " form=" << cfg.form << " verdict=" << (report.verdict ? "pass" : "fail")
            << '\n';
    if (cfg.report) stage("report", [&] { write_file(*cfg.report, report.to_json()); });
    if (!report.verdict) {
      err << "generate: self-verification failed; nothing written\n";
      for (const Check* c : report.failures()) err << "  " << c->kind << ' ' << c->detail << '\n';
      return kExitVerificationFailed;
    }

    const std::string body = cfg.format == "csv" ? to_csv(mat) : to_json(mat, cfg.form);
    if (cfg.out) stage("output", [&] { write_file(*cfg.out, body); });
    else out << body;
    return kExitPass;
  } catch (const StageError& e) {
    return fail(err, "generate", e);
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!cfg.in) throw StageError{"config", "--in is required"};
    const IntMatrix mat = stage("input", [&] { return parse_matrix(read_file(*cfg.in)); });
    const VerificationReport report = verify_asms(mat);
    const std::string json = report.to_json();
    if (cfg.report) stage("report", [&] { write_file(*cfg.report, json + "\n"); });

    out << "n=" << report.n << " form=" << to_string(report.form) << " magic_constant="
        << (report.magic_constant ? std::to_string(*report.magic_constant) : "none")
        << " verdict=" << (report.verdict ? "pass" : "fail") << '\n';
    for (const Check* c : report.failures()) {
      out << "  FAIL " << c->kind;
      if (c->index) out << ' ' << *c->index;
      if (c->k) out << " k=" << *c->k;
      if (c->window) out << ' ' << to_string(*c->window);
      if (c->expected) out << " expected=" << *c->expected;
      if (c->actual) out << " actual=" << *c->actual;
      if (!c->detail.empty()) out << " (" << c->detail << ')';
      out << '\n';
    }
    if (report.structural_error) return kExitError;
    return report.verdict ? kExitPass : kExitVerificationFailed;
  } catch (const StageError& e) {
    return fail(err, "verify", e);
  }
}

int cmd_langford(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!cfg.m) throw StageError{"config", "--m is required"};
    const int d = cfg.d, m = *cfg.m;

    std::vector<int> holes;
    if (d == 4) {
      holes = admissible_k_set(m);
      out << "admissible k:";
      for (int k : holes) out << ' ' << k;
      out << '\n';
      if (holes.empty() && !cfg.k) throw StageError{"admissible", "no admissible hole position for m=" + std::to_string(m)};
    } else {
      for (int k = 1; k <= 2 * m + 1; ++k) holes.push_back(k);
    }
    if (cfg.k) holes = {*cfg.k};

    std::string file;
    if (cfg.all) {
      std::size_t total = 0;
      for (int k : holes) {
        const std::size_t count = stage("enumerate", [&] {
          return enumerate_sequences(d, m, k, [&](const ExtendedLangfordSequence& s) {
            if (!file.empty()) file += '\n';
            file += format_sequence(s);
            return true;
          });
        });
        out << "k=" << k << " count=" << count << '\n';
        total += count;
      }
      out << "total=" << total << '\n';
    } else {
      SearchBudget budget;
      budget.max_nodes = cfg.budget;
      const ExtendedLangfordSequence seq = stage("search", [&] { return search_sequence(d, m, cfg.k, budget); });
      out << "k=" << seq.k() << '\n';
      file = format_sequence(seq);
    }

    if (cfg.out) stage("output", [&] { write_file(*cfg.out, file); });
    else out << file;
    return kExitPass;
  } catch (const StageError& e) {
    return fail(err, "langford", e);
  }
}

int cmd_inspect(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!cfg.n) throw StageError{"config", "--n is required"};
    const ConstructionParams params = stage("parameters", [&] { return derive_parameters(*cfg.n); });
    const ExtendedLangfordSequence seq = stage("sequence", [&] {
      if (cfg.sequence) return load_sequence(*cfg.sequence);
      SearchBudget budget;
      budget.max_nodes = cfg.budget;
      return search_sequence(params.d, params.m, cfg.k, budget);
    });
    const ZeroSumTripleSystem triples = stage("triples", [&] { return build_triples(seq); });
    const AssembledSquare sq = stage("assembly", [&] { return assemble(params, seq); });

    nlohmann::ordered_json j;
    j["params"] = {{"n", params.n}, {"u", params.u}, {"lambda", params.lambda},
                   {"w", params.w}, {"m", params.m}, {"d", params.d}};
    j["sequence"] = format_sequence(seq);
    j["triples"] = nlohmann::ordered_json::parse(triples_to_json(triples));
    auto cubes = nlohmann::ordered_json::array();
    for (int i = -params.m; i <= params.m; ++i)
      cubes.push_back(nlohmann::ordered_json::parse(cube_to_json(build_cube(triples[i], i))));
    j["cubes"] = std::move(cubes);
    j["layout"] = nlohmann::ordered_json::parse(sq.layout.to_json());
    const std::string body = j.dump(2) + "\n";
    if (cfg.out) stage("output", [&] { write_file(*cfg.out, body); });
    else out << body;
    return kExitPass;
  } catch (const StageError& e) {
    return fail(err, "inspect", e);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magic squares with all subsquares of possible orders"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "Search node budget")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("generate", "Construct an ASMS(n) and write it");
  gen->add_option("--n", cfg.n, "Order, n ≡ ±3 (mod 18), n ≥ 21")->required();
  gen->add_option("--form", cfg.form, "centered | classic")->check(CLI::IsMember({"centered", "classic"}));
  gen->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  gen->add_option("--out", cfg.out, "Output file (default stdout)");
  gen->add_option("--sequence", cfg.sequence, "Use this Langford sequence file instead of searching");
  gen->add_option("--report", cfg.report, "Write the self-verification report (JSON)");
  gen->add_option("--k", cfg.k, "Hole position for the sequence search");
  add_budget(gen);

  auto* ver = app.add_subcommand("verify", "Verify a square read from CSV or JSON");
  ver->add_option("--in", cfg.in, "Input matrix file")->required();
  ver->add_option("--report", cfg.report, "Write the JSON report here");

  auto* lang = app.add_subcommand("langford", "Search or enumerate extended Langford sequences");
  lang->add_option("--m", cfg.m, "Sequence length")->required();
  lang->add_option("--d", cfg.d, "Defect")->check(CLI::PositiveNumber);
  lang->add_option("--k", cfg.k, "Hole position");
  lang->add_flag("--all", cfg.all, "Enumerate every sequence (m <= 8)");
  lang->add_option("--out", cfg.out, "Output sequence file (default stdout)");
  add_budget(lang);

  auto* ins = app.add_subcommand("inspect", "Dump parameters, triples, cubes and block layout as JSON");
  ins->add_option("--n", cfg.n, "Order")->required();
  ins->add_option("--sequence", cfg.sequence, "Langford sequence file");
  ins->add_option("--k", cfg.k, "Hole position for the sequence search");
  ins->add_option("--out", cfg.out, "Output file (default stdout)");
  add_budget(ins);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitError;
  }

  if (gen->parsed()) return cmd_generate(cfg, out, err);
  if (ver->parsed()) return cmd_verify(cfg, out, err);
  if (lang->parsed()) return cmd_langford(cfg, out, err);
  return cmd_inspect(cfg, out, err);
}

}  // namespace asms::cli
