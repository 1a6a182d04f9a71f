#include <cstdlib>
#include <map>

#include "CLI11.hpp"
#include "bedard/cartan.hpp"
#include "bedard/cli.hpp"
#include "bedard/coxeter.hpp"
#include "bedard/error.hpp"
#include "bedard/flagbrute.hpp"

namespace bedard::cli {
namespace {

std::size_t env_budget(std::size_t fallback) {
  const char* env = std::getenv("BEDARD_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) throw CLI::ValidationError("BEDARD_BUDGET", "must be a positive integer");
  return static_cast<std::size_t>(v);
}

void add_format(CLI::App* sub, RunConfig& cfg) {
  static const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};
  sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--out", cfg.out, "Write the report to this file");
}

void add_type(CLI::App* sub, RunConfig& cfg, bool required = true) {
  auto* opt = sub->add_option("--type", cfg.type, "Cartan type, e.g. A2, B3, A2xA1");
  if (required) opt->required();
  sub->add_option("--cap", cfg.cap, "Group enumeration cap");
}

void add_subset(CLI::App* sub, RunConfig& cfg, bool allow_all) {
  auto* j = sub->add_option("--j", cfg.j, "Subset J of generators, comma-separated 0-based indices");
  if (allow_all) {
    auto* all = sub->add_flag("--all-j", cfg.all_j, "Sweep every subset J");
    j->excludes(all);
  }
}

void add_twist(CLI::App* sub, RunConfig& cfg, bool allow_all) {
  auto* t = sub->add_option("--twist", cfg.twist, "id, flip, or generator images 'w0;w1;...'");
  if (allow_all) {
    auto* all = sub->add_flag("--all-twists", cfg.all_twists, "Use id and every diagram automorphism");
    t->excludes(all);
  }
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  ParseOutcome outcome;
  CLI::App app{"Piece censuses for partial flag manifolds and Bedard sequences", "bedard-pieces"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  try {
    cfg.budget = env_budget(kDefaultBudget);
    cfg.cap = env_budget(kDefaultGroupCap);
  } catch (const CLI::Error& e) {
    outcome.exit_code = kUsage;
    outcome.message = e.what();
    return outcome;
  }

  auto* group = app.add_subcommand("group", "Order, number of positive roots and longest element");
  add_type(group, cfg);
  add_format(group, cfg);

  auto* pieces = app.add_subcommand("pieces", "Piece census with dimensions and point-count polynomials");
  add_type(pieces, cfg);
  add_subset(pieces, cfg, true);
  add_twist(pieces, cfg, false);
  pieces->add_option("--rank", cfg.torus_rank, "Torus rank r (defaults to the semisimple rank)");
  pieces->add_option("--q", cfg.q, "Evaluate counts at this q")->check(CLI::PositiveNumber);
  add_format(pieces, cfg);

  auto* bedard = app.add_subcommand("bedard", "Sequence traces");
  bedard->require_subcommand(1);
  auto* psi = bedard->add_subcommand("psi", "S- and T-sequences of an element of ^{eps(J)}W");
  add_type(psi, cfg);
  add_subset(psi, cfg, false);
  add_twist(psi, cfg, false);
  psi->add_option("--w", cfg.w, "Element as a space-separated word")->required();
  add_format(psi, cfg);
  auto* phi = bedard->add_subcommand("phi", "Product of an S-sequence given by its u terms");
  add_type(phi, cfg);
  add_subset(phi, cfg, false);
  add_twist(phi, cfg, false);
  phi->add_option("--u", cfg.u, "u_0;u_1;... with each term a space-separated word")->required();
  add_format(phi, cfg);

  auto* verify = app.add_subcommand("verify", "Identity checks; exit 1 on failure");
  verify->require_subcommand(1);
  for (const char* name : {"sum", "euler", "roundtrip"}) {
    auto* sub = verify->add_subcommand(name);
    add_type(sub, cfg);
    add_subset(sub, cfg, true);
    add_twist(sub, cfg, true);
    if (std::string(name) == "sum") sub->add_option("--rank", cfg.torus_rank, "Torus rank r");
    add_format(sub, cfg);
  }
  verify->get_subcommand("sum")->description("Sum of piece counts equals the variety count");
  verify->get_subcommand("euler")->description("Number of pieces equals |W^J|");
  verify->get_subcommand("roundtrip")->description("phi(psi(w)) = w and t_to_s(s_to_t(s)) = s");

  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration over finite fields");
  oracle->require_subcommand(1);
  auto* zc = oracle->add_subcommand("z-census", "Classify every point of Z_J for GL_n(F_q)");
  zc->add_option("--n", cfg.n, "n for GL_n")->required()->check(CLI::Range(2, 4));
  zc->add_option("--q", cfg.q, "Field order")->required()->check(CLI::Range(2, 1024));
  add_subset(zc, cfg, false);
  zc->add_flag("--compare", cfg.compare, "Compare with the closed-form counts");
  zc->add_option("--budget", cfg.budget, "Point budget");
  add_format(zc, cfg);
  auto* lines = oracle->add_subcommand("lines", "GL line classes over F_{q^m}");
  lines->add_option("--n", cfg.n, "Dimension")->required()->check(CLI::Range(2, 4));
  lines->add_option("--q", cfg.q, "Field order")->required()->check(CLI::Range(2, 1024));
  lines->add_option("--m", cfg.m, "Extension degree")->required()->check(CLI::Range(1, 10));
  lines->add_option("--budget", cfg.budget, "Line budget");
  add_format(lines, cfg);
  auto* sp = oracle->add_subcommand("sp-lines", "Symplectic line classes in dimension 2n over F_{q^m}");
  sp->add_option("--n", cfg.n, "Half dimension")->required()->check(CLI::Range(1, 3));
  sp->add_option("--q", cfg.q, "Field order")->required()->check(CLI::Range(2, 1024));
  sp->add_option("--m", cfg.m, "Extension degree")->required()->check(CLI::Range(1, 10));
  sp->add_option("--budget", cfg.budget, "Line budget");
  add_format(sp, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    outcome.exit_code = kPass;
    outcome.message = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp& e) {
    outcome.exit_code = kPass;
    outcome.message = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kUsage;
    outcome.message = e.what();
    return outcome;
  }

  for (const CLI::App* sub = &app; sub != nullptr;) {
    const auto chosen = sub->get_subcommands();
    if (chosen.empty()) break;
    cfg.command.push_back(chosen.front()->get_name());
    sub = chosen.front();
  }
  if (!cfg.type.empty()) {
    try {
      (void)parse_cartan_type(cfg.type);
    } catch (const Error& e) {
      outcome.exit_code = kUsage;
      outcome.message = e.what();
      return outcome;
    }
  }
  outcome.config = std::move(cfg);
  return outcome;
}

}  // namespace bedard::cli
