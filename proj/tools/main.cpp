#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"
#include "rootmean/error.hpp"
#include "rootmean/parallel.hpp"

int main(int argc, char** argv) {
  using namespace cli;

  CLI::App app{"rootmean: exact mean-value polynomials over polynomial root families"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");

  RunConfig cfg;
  std::string format = "pretty";
  unsigned threads = 0;
  std::string output;
  const std::map<std::string, Format> formats{{"pretty", Format::Pretty}, {"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "csv", "json"}));
  app.add_option("--seed", cfg.seed, "Seed, recorded in every output");
  app.add_option("--threads", threads, "Worker threads (default: ROOTMEAN_THREADS, else all cores)")
      ->check(CLI::Range(1U, 1024U));
  app.add_flag("--unsafe-degree", cfg.unsafe_degree, "Allow degrees above 30");
  app.add_option("--output", output, "Write output to this file instead of stdout");

  GwArgs gw;
  auto* gw_cmd = app.add_subcommand("gw", "Mean power sums in normalized elementary symmetric functions");
  gw_cmd->add_option("--n", gw.n, "Family size")->required();
  gw_cmd->add_option("--max-deg", gw.max_deg, "Largest power");

  PhiArgs ph;
  auto* phi_cmd = app.add_subcommand("phi", "Mean of f^(delta) over the roots of f^(rho)");
  phi_cmd->add_option("--D", ph.D, "Polynomial degree")->required();
  phi_cmd->add_option("--delta", ph.delta, "Order of the averaged derivative");
  phi_cmd->add_option("--rho", ph.rho, "Range lo..hi of root-family orders (default -(D+2)..D-1)");

  RelationsArgs rel;
  auto* rel_cmd = app.add_subcommand("relations", "Integer linear relations among mean values");
  rel_cmd->add_option("--D", rel.D, "Polynomial degree")->required();
  rel_cmd->add_option("--delta", rel.delta, "Order of the averaged derivative");
  rel_cmd->add_option("--rho", rel.rho, "Range lo..hi (default 1..D-1 for delta 0, else 0..D-1)");
  rel_cmd->add_flag("--minimal-support,!--no-minimal-support", rel.minimal_support,
                    "Enumerate minimal-support relations (default on)");
  rel_cmd->add_option("--check", rel.check_file, "JSON file of relations to verify exactly")
      ->check(CLI::ExistingFile);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check a structural claim up to a degree");
  ver_cmd->add_option("--conjecture", ver.conjecture)
      ->required()
      ->check(CLI::IsMember({"odd-binomial", "inheritance", "prop4", "prop5", "dimension"}));
  ver_cmd->add_option("--max-degree", ver.max_degree, "Largest degree checked");

  NumericArgs num;
  std::optional<std::uint64_t> num_seed;
  auto* num_cmd = app.add_subcommand("numeric-check", "Floating-point cross-check on random polynomials");
  num_cmd->add_flag("--auto", num.auto_mode, "Check the relations found at --D (default mode)");
  num_cmd->add_option("--D", num.D, "Degree for --auto");
  num_cmd->add_option("--delta", num.delta, "Derivative order for --auto");
  num_cmd->add_option("--relation", num.relation, "D,delta:rho,...:alpha,... or auto");
  num_cmd->add_option("--conjecture", num.conjecture)->check(CLI::IsMember({"relative-rates", "translation"}));
  num_cmd->add_option("--samples", num.samples, "Random polynomials per check");
  num_cmd->add_option("--seed", num_seed, "Same as the global --seed");
  num_cmd->add_option("--tol", num.tol, "Relative residual tolerance");
  num_cmd->add_option("--max-degree", num.max_degree, "Largest degree for --conjecture");
  num_cmd->get_option("--auto")->excludes("--relation")->excludes("--conjecture");
  num_cmd->get_option("--relation")->excludes("--conjecture");

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine the Q and leading-coefficient sequences");
  mine_cmd->add_option("--k-max", mine.k_max, "Largest k");
  mine_cmd->add_option("--d-sweep", mine.d_sweep, "Largest degree in the sweep (at least 3 k-max)");
  mine_cmd->add_option("--oeis-bfile", mine.bfiles, "OEIS b-file to compare against; prefix Q= or norlund= to pick a sequence");

  for (auto* sub : {gw_cmd, phi_cmd, rel_cmd, ver_cmd, num_cmd, mine_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  cfg.format = formats.at(format);
  cfg.threads = threads ? threads : rootmean::default_thread_count();
  if (num_seed) cfg.seed = *num_seed;
  if (!output.empty()) cfg.output = output;

  Outcome out;
  try {
    if (*gw_cmd) out = cmd_gw(cfg, gw);
    else if (*phi_cmd) out = cmd_phi(cfg, ph);
    else if (*rel_cmd) out = cmd_relations(cfg, rel);
    else if (*ver_cmd) out = cmd_verify(cfg, ver);
    else if (*num_cmd) out = cmd_numeric(cfg, num);
    else out = cmd_mine(cfg, mine);
  } catch (const rootmean::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rootmean::StructureError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const rootmean::RootFindError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }

  for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
  if (cfg.output) {
    std::ofstream f(*cfg.output, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << *cfg.output << "\n";
      return kExitUsage;
    }
    f << out.text;
  } else {
    std::cout << out.text;
  }
  return out.exit_code;
}
