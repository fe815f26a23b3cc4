// sgchain: build finite, finitely presented and symbolic semigroups from
// instance documents, analyze their ideal structure, and produce antichain
// and chain certificates.  Reports go to stdout as JSON; diagnostics to
// stderr.  Exit codes: 0 success (all checks pass), 1 verification
// failures, 2 input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sgchain/errors.hpp"
#include "sgchain/instance.hpp"
#include "sgchain/report.hpp"
#include "sgchain/verify.hpp"

namespace {

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw sgchain::SemanticError("cannot open \"" + path + "\"");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t env_radius(std::size_t fallback) {
  if (char const* v = std::getenv("SGCHAIN_RADIUS")) {
    try {
      return std::stoul(v);
    } catch (...) {
      throw sgchain::SemanticError("SGCHAIN_RADIUS must be a number");
    }
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semigroup chain-condition workbench"};
  app.require_subcommand(1);

  std::string file;
  std::string side = "right";
  std::size_t antichain = 0, chain = 0;
  std::size_t radius = 0;
  bool kernel_only = false;
  std::string reduce_word;
  bool complete = false;
  std::size_t normal_forms = 0;
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::size_t count = 100;
  long mutate = -1;

  auto* analyze = app.add_subcommand("analyze", "full structural report");
  analyze->add_option("file", file)->required();

  auto* green = app.add_subcommand("green", "Green's relations only");
  green->add_option("file", file)->required();

  auto* socle = app.add_subcommand("socle", "socle decomposition");
  socle->add_option("file", file)->required();
  socle->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));

  auto* chains = app.add_subcommand("chains", "certificate searches");
  chains->add_option("file", file)->required();
  chains->add_option("--antichain", antichain, "target antichain size");
  chains->add_option("--chain", chain, "target chain length");
  chains->add_option("--radius", radius, "exploration radius");
  chains->add_flag("--kernel-only", kernel_only,
                   "restrict to normal forms using a non-initial generator");

  auto* rewrite = app.add_subcommand("rewrite", "rewriting-system queries");
  rewrite->add_option("file", file)->required();
  rewrite->add_option("--reduce", reduce_word, "word to reduce");
  rewrite->add_flag("--complete", complete, "run Knuth-Bendix completion");
  rewrite->add_option("--normal-forms", normal_forms,
                      "list normal forms up to this length");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"paper-finite", "paper-infinite", "all"}));
  verify->add_option("--seed", seed);
  verify->add_option("--count", count);
  verify->add_option("--mutate", mutate,
                     "harness self-test: corrupt the given zoo instance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze || *green || *socle || *chains || *rewrite) {
      sgchain::InstanceSpec const spec =
          sgchain::parse_instance(read_file(file));
      if (*analyze) {
        std::cout << sgchain::analyze_report(spec, file);
      } else if (*green) {
        std::cout << sgchain::green_report(spec, file);
      } else if (*socle) {
        std::cout << sgchain::socle_report_json(
            spec, file,
            side == "right" ? sgchain::Side::Right : sgchain::Side::Left);
      } else if (*chains) {
        sgchain::ChainsOptions opt;
        if (antichain > 0) opt.antichain_target = antichain;
        if (chain > 0) opt.chain_target = chain;
        opt.kernel_only = kernel_only;
        opt.radius_words = radius > 0 ? radius : env_radius(12);
        opt.radius_magnitude = radius > 0 ? radius : env_radius(100);
        std::cout << sgchain::chains_report(spec, file, opt);
      } else {
        sgchain::RewriteOptions opt;
        if (!reduce_word.empty()) opt.reduce_word = reduce_word;
        opt.complete = complete;
        if (normal_forms > 0) opt.normal_forms = normal_forms;
        std::cout << sgchain::rewrite_report(spec, file, opt);
      }
      return 0;
    }
    // verify
    sgchain::VerifyOptions opt;
    opt.suite = suite == "paper-finite"
                    ? sgchain::SuiteKind::PaperFinite
                    : (suite == "paper-infinite"
                           ? sgchain::SuiteKind::PaperInfinite
                           : sgchain::SuiteKind::All);
    opt.seed = seed;
    opt.count = count;
    if (mutate >= 0) opt.mutate_index = static_cast<std::size_t>(mutate);
    sgchain::VerificationReport const report = sgchain::run_verify(opt);
    std::cout << sgchain::verify_report_json(report);
    std::cerr << "suite " << report.suite << ": " << report.passed
              << " pass, " << report.failed << " fail, " << report.skipped
              << " skip in " << report.wall_seconds << "s\n";
    return report.all_pass() ? 0 : 1;
  } catch (sgchain::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
