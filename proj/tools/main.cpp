// Command line surface: analyze a ring, run the verification corpus, replay
// the symbolic Z example, or emit a corpus configuration.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "idealspaces/harness.hpp"

namespace fs = std::filesystem;
using namespace idealspaces;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << content;
}

int cmd_analyze(const std::string& spec_text, const std::string& family,
                const std::string& out_path, bool as_json) {
  RingSpec spec = parse_ring_spec(spec_text);
  std::optional<Family> only;
  if (!family.empty()) only = family_from_tag(family);
  AnalysisReport rep = analyze(spec, only, Caps::from_env());
  std::string rendered =
      as_json ? analysis_to_json(rep).dump(2) + "\n" : analysis_to_text(rep);
  if (out_path.empty())
    std::cout << rendered;
  else
    write_file(out_path, rendered);
  return 0;
}

int cmd_verify(const std::vector<std::string>& only, const std::string& corpus_path,
               const std::string& out_dir, std::uint64_t seed, std::uint64_t z_bound,
               bool timings) {
  CorpusSpec corpus;
  if (!corpus_path.empty()) {
    std::ifstream in(corpus_path);
    if (!in) throw Error("cannot read corpus config " + corpus_path);
    nlohmann::json j;
    in >> j;
    corpus = CorpusSpec::from_json(j);
  }
  HarnessOptions opt;
  opt.caps = Caps::from_env();
  opt.seed = seed;
  opt.z_bound = z_bound;

  std::vector<CheckId> checks;
  if (only.empty())
    checks.assign(kAllChecks.begin(), kAllChecks.end());
  else
    for (const std::string& tag : only) checks.push_back(check_from_tag(tag));

  std::vector<TheoremReport> reports = run_checks(checks, corpus, opt);
  for (const TheoremReport& rep : reports) {
    if (!out_dir.empty())
      write_file(fs::path(out_dir) / (rep.check + ".json"), rep.to_json().dump(2) + "\n");
  }
  if (!out_dir.empty()) {
    nlohmann::json summary;
    summary["schema_version"] = 1;
    summary["corpus"] = corpus.to_json();
    summary["seed"] = seed;
    nlohmann::json per_check = nlohmann::json::object();
    for (const TheoremReport& rep : reports)
      per_check[rep.check] = {{"pass", rep.pass}, {"fail", rep.fail}, {"skip", rep.skip}};
    summary["checks"] = per_check;
    write_file(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
  }
  std::cout << summary_table(reports, timings);
  bool all_ok = true;
  for (const TheoremReport& rep : reports) all_ok = all_ok && rep.ok();
  std::cout << (all_ok ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
  return all_ok ? 0 : 1;
}

int cmd_z_example(std::uint64_t bound, const std::string& out_dir) {
  if (bound > 1000000) throw PreconditionError("z-example bound capped at 10^6");
  if (bound < 2) throw PreconditionError("z-example bound must be >= 2");
  RegZCertificate cert = reg_z_not_sober_certificate(bound);
  PrmZVerdict verdict = prm_z_sober_bounded(bound);
  std::string reg = reg_z_certificate_to_json(cert).dump(2) + "\n";
  std::string prm = prm_z_verdict_to_json(verdict).dump(2) + "\n";
  if (out_dir.empty()) {
    std::cout << reg << prm;
  } else {
    write_file(fs::path(out_dir) / "reg_z_certificate.json", reg);
    write_file(fs::path(out_dir) / "prm_z_verdict.json", prm);
  }
  bool ok = !cert.sober && cert.irreducible && verdict.sober_bounded;
  std::cerr << "reg(Z): irreducible=" << cert.irreducible << " sober=" << cert.sober
            << "; prm(Z): sober_bounded=" << verdict.sober_bounded << "\n";
  return ok ? 0 : 1;
}

int cmd_corpus_gen(const std::string& out_path, bool list) {
  CorpusSpec spec;
  nlohmann::json j = spec.to_json();
  if (list) {
    nlohmann::json rings = nlohmann::json::array();
    for (const RingSpec& rs : generate_corpus(spec)) rings.push_back(ring_spec_to_text(rs));
    j["rings"] = rings;
  }
  std::string rendered = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << rendered;
  else
    write_file(out_path, rendered);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ideal lattices of finite commutative rings and the topology of their ideal spaces"};
  app.require_subcommand(1);

  std::string spec_text, family, out_path;
  bool as_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one ring");
  analyze_cmd->add_option("spec", spec_text, "ring spec, e.g. \"Z/12\" or \"GF(2)[x]/(x^2)\"")
      ->required();
  analyze_cmd->add_option("--family", family, "restrict to one family tag (spec, max, prm, ...)");
  analyze_cmd->add_option("--out", out_path, "write the report to this path");
  analyze_cmd->add_flag("--json", as_json, "emit JSON instead of text");

  std::vector<std::string> only;
  std::string corpus_path, out_dir;
  std::uint64_t seed = 1, z_bound = 10000;
  bool all = false, timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "re-verify the corpus checks");
  verify_cmd->add_flag("--all", all, "run every check (default when --only is absent)");
  verify_cmd->add_option("--only", only, "run only these checks (chk-sober-eq, ...)");
  verify_cmd->add_option("--corpus", corpus_path, "corpus configuration JSON");
  verify_cmd->add_option("--out", out_dir, "directory for per-check JSON reports");
  verify_cmd->add_option("--seed", seed, "seed for sampled sub-checks");
  verify_cmd->add_option("--z-bound", z_bound, "bound for the symbolic Z check");
  verify_cmd->add_flag("--timings", timings, "print per-check timings (console only)");

  std::uint64_t bound = 1000;
  std::string z_out;
  auto* z_cmd = app.add_subcommand("z-example", "replay the symbolic Z certificates");
  z_cmd->add_option("--bound", bound, "witness bound (2..10^6)");
  z_cmd->add_option("--out", z_out, "directory for certificate files");

  std::string corpus_out;
  bool list_rings = false;
  auto* corpus_cmd = app.add_subcommand("corpus-gen", "emit the default corpus configuration");
  corpus_cmd->add_option("--out", corpus_out, "output path");
  corpus_cmd->add_flag("--list", list_rings, "include the materialized ring list");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(spec_text, family, out_path, as_json);
    if (verify_cmd->parsed())
      return cmd_verify(only, corpus_path, out_dir, seed, z_bound, timings);
    if (z_cmd->parsed()) return cmd_z_example(bound, z_out);
    if (corpus_cmd->parsed()) return cmd_corpus_gen(corpus_out, list_rings);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
