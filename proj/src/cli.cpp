#include "qkac/cli.hpp"

#include <map>
#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qkac/charring.hpp"
#include "qkac/drinfeld.hpp"
#include "qkac/error.hpp"
#include "qkac/verma.hpp"

namespace qkac::cli {

using rootdata::CartanDatum;
using rootdata::RootVec;
using rootdata::Weight;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list = {"info",    "dims",   "mults", "pairing",    "certify",
                                                "verify",  "char",   "verma-char", "casimir"};
  return list;
}

namespace {

struct Context {
  const RunConfig& config;
  CartanDatum datum;
  int height;
  std::vector<mpq_class> zs;
  std::ostringstream table;
  std::vector<Check> checks;

  void check(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  }
  void skip(std::string name, std::string detail) {
    checks.push_back({std::move(name), "skipped", std::move(detail)});
  }
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput(what + " must be a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

CartanDatum load_datum(const RunConfig& config) {
  if (!config.preset.empty() && !config.datum_file.empty()) {
    throw InvalidInput("give either --preset or --datum, not both");
  }
  if (!config.datum_file.empty()) {
    std::ifstream in(config.datum_file);
    if (!in) throw InvalidInput("cannot read datum file " + config.datum_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return CartanDatum::from_json(buffer.str(),
                                  std::filesystem::path(config.datum_file).stem().string());
  }
  if (config.preset.empty()) throw InvalidInput("a datum is required (--preset or --datum)");
  return CartanDatum::preset(config.preset);
}

Weight parse_weight(const Context& ctx, const std::string& text) {
  std::vector<int> p = text.empty() ? std::vector<int>(ctx.datum.rank(), 0)
                                    : parse_int_list(text, "--weight");
  if (p.size() != ctx.datum.rank()) {
    throw InvalidInput("--weight needs " + std::to_string(ctx.datum.rank()) + " entries");
  }
  return Weight(std::move(p));
}

std::string coords_tsv(const RootVec& g) {
  std::string s;
  for (std::size_t i = 0; i < g.rank(); ++i) s += std::to_string(g[i]) + '\t';
  return s;
}

std::string gamma_header(std::size_t rank) {
  std::string s;
  for (std::size_t i = 0; i < rank; ++i) s += "g" + std::to_string(i + 1) + '\t';
  return s;
}

std::vector<Weight> test_weights(const CartanDatum& datum) {
  const std::size_t n = datum.rank();
  std::vector<Weight> out{Weight::zero(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> p(n, 0);
    p[i] = 1;
    out.emplace_back(p);
  }
  if (n > 1) out.emplace_back(std::vector<int>(n, 1));
  return out;
}

// --- subcommands --------------------------------------------------------------------

void cmd_info(Context& ctx) {
  const auto& d = ctx.datum;
  auto& t = ctx.table;
  t << "# name\t" << d.name() << "\n# rank\t" << d.rank() << "\n# symmetrizer";
  for (auto x : d.symmetrizer()) t << '\t' << x;
  t << "\n# matrix\ti\tj\tcartan\tform\n";
  for (std::size_t i = 0; i < d.rank(); ++i) {
    for (std::size_t j = 0; j < d.rank(); ++j) {
      t << "entry\t" << i + 1 << '\t' << j + 1 << '\t' << d.cartan(i, j) << '\t'
        << d.simple_form(i, j) << '\n';
    }
  }
  ctx.check("datum-valid", true, "all Cartan datum invariants hold");
}

void cmd_dims(Context& ctx) {
  borel::Borel b(ctx.datum, ctx.height);
  const CharSeries dims = b.dim_series(ctx.height);
  ctx.table << "# " << gamma_header(ctx.datum.rank()) << "dim\n" << dims.to_tsv(true);
  ctx.check("constant-term", dims.coefficient(RootVec::zero(ctx.datum.rank())) == 1);
}

void cmd_mults(Context& ctx) {
  borel::Borel b(ctx.datum, ctx.height);
  charring::CharacterRing ring(b, ctx.height);
  const auto& extracted = ring.multiplicities();
  const auto peterson = rootdata::peterson_multiplicities(ctx.datum, ctx.height);
  ctx.table << "# " << gamma_header(ctx.datum.rank()) << "extracted\tpeterson\n";
  std::string mismatches;
  for (const RootVec& g : rootdata::height_box(ctx.datum.rank(), ctx.height)) {
    if (g.height() == 0) continue;
    const long a = extracted.count(g) ? extracted.at(g) : 0;
    const long p = peterson.count(g) ? peterson.at(g) : 0;
    if (a == 0 && p == 0) continue;
    ctx.table << coords_tsv(g) << a << '\t' << p << '\n';
    if (a != p) mismatches += g.to_string() + " ";
  }
  ctx.check("multiplicities-match-peterson", mismatches.empty(),
            mismatches.empty() ? "" : "mismatch at " + mismatches);
}

std::vector<RootVec> selected_gammas(const Context& ctx) {
  if (ctx.config.gamma.empty()) return rootdata::height_box(ctx.datum.rank(), ctx.height);
  auto c = parse_int_list(ctx.config.gamma, "--gamma");
  if (c.size() != ctx.datum.rank()) throw InvalidInput("--gamma has the wrong number of entries");
  RootVec g(c);
  if (!g.is_nonnegative()) throw InvalidInput("--gamma must lie in Q+");
  if (g.height() > ctx.height) throw InvalidInput("--gamma exceeds the height bound");
  return {g};
}

void cmd_pairing(Context& ctx) {
  borel::Borel b(ctx.datum, ctx.height);
  drinfeld::PairingEvaluator tau(ctx.datum);
  ctx.table << "# " << gamma_header(ctx.datum.rank()) << "x\ty\ttau\n";
  bool ok = true;
  for (const RootVec& g : selected_gammas(ctx)) {
    const auto data = drinfeld::pairing_matrix(b, tau, g);
    for (std::size_t r = 0; r < data.basis.size(); ++r) {
      for (std::size_t s = 0; s < data.basis.size(); ++s) {
        ctx.table << coords_tsv(g) << borel::display_word(data.basis[r], "e") << '\t'
                  << borel::display_word(data.basis[s], "f") << '\t' << data.matrix(r, s) << '\n';
      }
    }
    ctx.table << "# det " << g.to_string() << '\t' << data.det << '\n';
    ok = ok && !data.det.is_zero();
  }
  ctx.check("determinants-nonzero", ok);
}

void cmd_certify(Context& ctx) {
  borel::Borel b(ctx.datum, ctx.height);
  drinfeld::PairingEvaluator tau(ctx.datum);
  const auto report = drinfeld::verify_nondegenerate(b, tau, ctx.height, {});
  ctx.table << "# " << gamma_header(ctx.datum.rank()) << "dim\tsign\tq_power\tfactors\n";
  std::string failed;
  for (const auto& row : report.rows) {
    ctx.table << coords_tsv(row.gamma) << row.dim << '\t';
    if (row.certificate) {
      ctx.table << (row.certificate->sign > 0 ? "+1" : "-1") << '\t' << row.certificate->q_power
                << '\t' << qarith::format_factors(*row.certificate) << '\n';
    } else {
      ctx.table << "NA\tNA\t" << row.certificate_error << '\n';
      failed += row.gamma.to_string() + " ";
    }
  }
  ctx.check("cyclotomic-unit-determinants", failed.empty(),
            failed.empty() ? std::to_string(report.rows.size()) + " components certified"
                           : "not certified: " + failed);
}

std::string join_details(const std::vector<std::string>& d, std::size_t limit = 3) {
  std::string s;
  for (std::size_t k = 0; k < d.size() && k < limit; ++k) s += (k ? "; " : "") + d[k];
  if (d.size() > limit) s += "; ... (" + std::to_string(d.size()) + " total)";
  return s;
}

void check_weyl_kac_vs_gram(Context& ctx, const borel::Borel& b,
                            const charring::CharacterRing& ring, int gram_height) {
  std::vector<std::string> problems;
  std::size_t compared = 0;
  for (const Weight& lambda : test_weights(ctx.datum)) {
    const auto witness = verma::integrability_witness(b, lambda);
    if (!witness.passed) {
      problems.push_back("integrability witness fails for " + lambda.to_string() + ": " +
                         join_details(witness.details));
      continue;
    }
    const CharSeries ch = ring.weyl_kac(lambda);
    for (const RootVec& g : rootdata::height_box(ctx.datum.rank(), gram_height)) {
      const auto gram = verma::gram_matrix(b, lambda, g, ctx.zs);
      for (const auto& [z, r] : gram.rank_at_z) {
        ++compared;
        if (static_cast<std::int64_t>(r) != ch.coefficient(g)) {
          problems.push_back("lambda " + lambda.to_string() + " gamma " + g.to_string() + " z " +
                             z + ": rank " + std::to_string(r) + " vs Weyl-Kac " +
                             std::to_string(ch.coefficient(g)));
        }
      }
      if (!gram.symmetric) problems.push_back("asymmetric Gram matrix at " + g.to_string());
    }
  }
  ctx.check("weyl-kac-equals-gram-rank", problems.empty(),
            problems.empty() ? std::to_string(compared) + " comparisons up to height " +
                                   std::to_string(gram_height)
                             : join_details(problems));
}

void check_casimir(Context& ctx, const borel::Borel& b, const drinfeld::PairingEvaluator& tau,
                   const std::vector<Weight>& weights, int casimir_height) {
  std::vector<std::string> problems;
  std::size_t count = 0;
  for (const auto& z : ctx.zs) {
    if (qarith::is_root_of_unity(z)) continue;
    for (const Weight& lambda : weights) {
      for (const RootVec& g : rootdata::height_box(ctx.datum.rank(), casimir_height)) {
        ++count;
        try {
          const auto rep = verma::casimir_check(b, tau, lambda, g, z);
          if (!rep.passed) {
            problems.push_back("lambda " + lambda.to_string() + " gamma " + g.to_string() +
                               " z " + qarith::format_rational(z) + ": " + join_details(rep.details, 1));
          }
        } catch (const SingularPairing& e) {
          problems.push_back(e.what());
        }
      }
    }
  }
  ctx.check("casimir-scalar", problems.empty(),
            problems.empty() ? std::to_string(count) + " weight spaces up to height " +
                                   std::to_string(casimir_height)
                             : join_details(problems));
}

void cmd_verify(Context& ctx) {
  borel::Borel b(ctx.datum, ctx.height);
  drinfeld::PairingEvaluator tau(ctx.datum);
  charring::CharacterRing ring(b, ctx.height);

  const auto nd = drinfeld::verify_nondegenerate(b, tau, ctx.height, ctx.zs, ctx.config.prime);
  for (const auto& w : nd.warnings) ctx.skip("radical-at-root-of-unity", w);
  std::vector<std::string> generic_failures, cert_failures, radical_failures;
  for (const auto& row : nd.rows) {
    const std::string g = row.gamma.to_string();
    if (!row.generic_nonzero) generic_failures.push_back(g);
    if (!row.certificate) cert_failures.push_back(g + ": " + row.certificate_error);
    for (const auto& [z, k] : row.kernels) {
      if (k && *k != 0) radical_failures.push_back(g + " z " + z + ": kernel " + std::to_string(*k));
    }
    if (row.function_field_kernel && *row.function_field_kernel != 0) {
      radical_failures.push_back(g + " F_p(t): kernel " + std::to_string(*row.function_field_kernel));
    }
  }
  ctx.check("nondegenerate-generic", generic_failures.empty(),
            generic_failures.empty() ? std::to_string(nd.rows.size()) + " components up to height " +
                                           std::to_string(ctx.height)
                                     : "zero determinant at " + join_details(generic_failures));
  ctx.check("cyclotomic-unit-determinants", cert_failures.empty(), join_details(cert_failures));
  ctx.check("radical-trivial", radical_failures.empty(), join_details(radical_failures));

  const auto identity = ring.denominator_identity_check();
  ctx.check("denominator-identity", identity.passed, join_details(identity.details));

  for (std::size_t i = 0; i < ctx.datum.rank(); ++i) {
    const auto skew = ring.skew_invariance_check(i);
    ctx.check("skew-invariance-s" + std::to_string(i + 1), skew.passed,
              skew.passed ? "window " + std::to_string(skew.window) + ", " +
                                std::to_string(skew.checked) + " coefficients"
                          : join_details(skew.details));
  }

  const auto peterson = rootdata::peterson_multiplicities(ctx.datum, ctx.height);
  ctx.check("multiplicities-match-peterson", ring.multiplicities() == peterson);

  check_weyl_kac_vs_gram(ctx, b, ring, std::min(ctx.height, 4));

  std::vector<Weight> casimir_weights = test_weights(ctx.datum);
  if (ctx.datum.rank() > 1) casimir_weights.pop_back();
  check_casimir(ctx, b, tau, casimir_weights, std::min(ctx.height, 3));

  std::string detail;
  ctx.check("antipode-invariance", drinfeld::antipode_spot_check(tau, std::min(ctx.height, 2), &detail), detail);
  detail.clear();
  ctx.check("mixed-product-formula", drinfeld::commutation_spot_check(ctx.datum, &detail), detail);

  ctx.table << "# check\tstatus\tdetail\n";
  for (const auto& c : ctx.checks) ctx.table << c.name << '\t' << c.status << '\t' << c.detail << '\n';
}

void cmd_char(Context& ctx) {
  borel::Borel b(ctx.datum, ctx.height);
  charring::CharacterRing ring(b, ctx.height);
  const Weight lambda = parse_weight(ctx, ctx.config.weight);
  const CharSeries ch = ring.weyl_kac(lambda);
  ctx.table << "# lambda " << lambda.to_string() << "\n# " << gamma_header(ctx.datum.rank())
            << "coefficient\n"
            << ch.to_tsv(true);
  ctx.check("weyl-kac-nonnegative", true);
}

void cmd_verma_char(Context& ctx) {
  borel::Borel b(ctx.datum, ctx.height);
  charring::CharacterRing ring(b, ctx.height);
  const Weight lambda = parse_weight(ctx, ctx.config.weight);
  const CharSeries ch = ring.verma_char(lambda);
  ctx.table << "# lambda " << lambda.to_string() << "\n# " << gamma_header(ctx.datum.rank())
            << "coefficient\n"
            << ch.to_tsv(true);
  ctx.check("verma-equals-dims", ch == ring.dim_series());
}

void cmd_casimir(Context& ctx) {
  borel::Borel b(ctx.datum, ctx.height);
  drinfeld::PairingEvaluator tau(ctx.datum);
  const Weight lambda = parse_weight(ctx, ctx.config.weight);
  ctx.table << "# lambda " << lambda.to_string() << "\n# " << gamma_header(ctx.datum.rank())
            << "z\texponent\tscalar\tstatus\n";
  std::vector<std::string> problems;
  for (const auto& z : ctx.zs) {
    if (qarith::is_root_of_unity(z)) {
      ctx.skip("casimir-z-" + qarith::format_rational(z), "root of unity");
      continue;
    }
    for (const RootVec& g : rootdata::height_box(ctx.datum.rank(), ctx.height)) {
      const auto rep = verma::casimir_check(b, tau, lambda, g, z);
      ctx.table << coords_tsv(g) << qarith::format_rational(z) << '\t' << rep.exponent << '\t'
                << qarith::format_rational(rep.scalar) << '\t' << (rep.passed ? "pass" : "fail")
                << '\n';
      if (!rep.passed) {
        problems.push_back("gamma " + g.to_string() + " z " + qarith::format_rational(z) + ": " +
                           join_details(rep.details, 1));
      }
    }
  }
  ctx.check("casimir-scalar", problems.empty(), join_details(problems));
}

void write_outputs(const Context& ctx) {
  namespace fs = std::filesystem;
  const fs::path dir(ctx.config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidInput("cannot create output directory " + dir.string());
  {
    std::ofstream tsv(dir / (ctx.config.command + ".tsv"));
    if (!tsv) throw InvalidInput("cannot write to " + dir.string());
    tsv << ctx.table.str();
  }
  nlohmann::ordered_json summary;
  summary["command"] = ctx.config.command;
  summary["datum"] = {{"name", ctx.datum.name()},
                      {"cartan", ctx.datum.cartan_matrix()},
                      {"symmetrizer", ctx.datum.symmetrizer()}};
  summary["H"] = ctx.height;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : ctx.checks) {
    checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  }
  summary["checks"] = checks;
  std::ofstream json(dir / "summary.json");
  json << summary.dump(2) << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto& cmds = commands();
    if (std::find(cmds.begin(), cmds.end(), config.command) == cmds.end()) {
      throw InvalidInput("unknown command '" + config.command + "'");
    }
    CartanDatum datum = load_datum(config);
    const int height = config.height.value_or(datum.rank() <= 2 ? 6 : 4);
    if (height < 1) throw InvalidInput("height must be >= 1");
    std::vector<mpq_class> zs;
    const std::vector<std::string> z_texts =
        config.zs.empty() ? std::vector<std::string>{"2", "1/3"} : config.zs;
    for (const auto& t : z_texts) {
      mpq_class z = qarith::parse_rational(t);
      if (sgn(z) == 0) throw InvalidInput("specializations must be nonzero");
      zs.push_back(z);
    }
    if (config.prime && (*config.prime < 2 ||
                         mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(*config.prime)).get_mpz_t(), 25) == 0)) {
      throw InvalidInput("--prime must be a prime number");
    }
    Context ctx{config, std::move(datum), height, std::move(zs), {}, {}};

    const std::string& c = config.command;
    if (c == "info") cmd_info(ctx);
    else if (c == "dims") cmd_dims(ctx);
    else if (c == "mults") cmd_mults(ctx);
    else if (c == "pairing") cmd_pairing(ctx);
    else if (c == "certify") cmd_certify(ctx);
    else if (c == "verify") cmd_verify(ctx);
    else if (c == "char") cmd_char(ctx);
    else if (c == "verma-char") cmd_verma_char(ctx);
    else if (c == "casimir") cmd_casimir(ctx);

    out << ctx.table.str();
    if (!config.out_dir.empty()) write_outputs(ctx);
    bool ok = true;
    for (const auto& check : ctx.checks) {
      if (check.status == "fail") {
        ok = false;
        err << "check failed: " << check.name << (check.detail.empty() ? "" : ": " + check.detail)
            << '\n';
      } else if (check.status == "skipped") {
        err << "warning: " << check.name << ": " << check.detail << '\n';
      }
    }
    return ok ? 0 : 1;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const PoleAtZ& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const HeightExceeded& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Exact computations in quantized enveloping algebras of Kac-Moody type"};
  app.require_subcommand(1, 1);
  RunConfig config;
  static const std::map<std::string, std::string> blurbs = {
      {"info", "print the Cartan datum"},
      {"dims", "graded dimensions of U+ up to height H"},
      {"mults", "root multiplicities, extracted and by recurrence"},
      {"pairing", "Drinfeld pairing matrices and determinants"},
      {"certify", "factored pairing determinants"},
      {"verify", "run all consistency checks"},
      {"char", "irreducible character via the Weyl-Kac formula"},
      {"verma-char", "character of the Verma module M(lambda)"},
      {"casimir", "Casimir eigenvalue check on Verma modules"},
  };
  for (const auto& name : commands()) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    sub->add_option("--preset", config.preset, "preset Cartan datum");
    sub->add_option("--datum", config.datum_file, "Cartan datum JSON file");
    sub->add_option("--height", config.height, "height bound H");
    sub->add_option("--z", config.zs, "rational specialization (repeatable)");
    sub->add_option("--prime", config.prime, "prime for the function-field check");
    sub->add_option("--weight", config.weight, "highest weight pairings, e.g. 1,0");
    sub->add_option("--gamma", config.gamma, "single component for pairing, e.g. 1,1");
    sub->add_option("--out", config.out_dir, "directory for <command>.tsv and summary.json");
    sub->callback([&config, name] { config.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace qkac::cli
