#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "immex/aalpha.hpp"
#include "immex/beta.hpp"
#include "immex/certificate.hpp"
#include "immex/extractor.hpp"
#include "immex/generators.hpp"
#include "immex/graph.hpp"
#include "immex/independent_set.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

double approx(const immex::Rational& r) {
  return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

long ceil_rational(const immex::Rational& r) {
  return static_cast<long>(-immex::floor_rational(-r));
}

// Guarantee of the cited prior bound: ceil(n / (3.54 a) - 1.13), exact.
long glw_bound(long n, int alpha) {
  immex::Rational v = immex::Rational(n * 50, 177 * alpha) - immex::Rational(113, 100);
  return ceil_rational(v);
}

int cmd_extract(const std::string& input, const std::string& output, bool check,
                bool debug_reverify, std::optional<int> alpha_cap) {
  immex::Graph g = immex::Graph::load(input);
  auto t0 = std::chrono::steady_clock::now();
  immex::ExtractOptions opts;
  opts.debug_reverify = debug_reverify;
  int alpha = immex::independence_number(g);
  if (alpha_cap && alpha > *alpha_cap) {
    std::cerr << "error: independence number " << alpha << " exceeds cap " << *alpha_cap << "\n";
    return kExitInput;
  }
  immex::ExtractResult res = immex::extract(g, opts);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  std::string out_path = output.empty() ? input + ".cert.json" : output;
  res.certificate.save(out_path);

  immex::BetaTable table;
  const immex::Rational& b = table.beta(res.alpha);
  std::cout << "n: " << g.num_vertices() << "\n"
            << "alpha: " << res.alpha << "\n"
            << "beta_alpha: " << b << " (~" << approx(b) << ")\n"
            << "guarantee: " << res.guarantee << "\n"
            << "achieved: " << res.certificate.clique_order() << "\n"
            << "shortfall: " << (res.trace.shortfall ? "yes" : "no") << "\n"
            << "certificate: " << out_path << "\n"
            << "wall_ms: " << ms << "\n";

  // exit 0 only for a verifying certificate without shortfall
  immex::VerifyReport rep =
      immex::verify(g, res.certificate, true, res.certificate.clique_order() > 1,
                    std::max(1, 2 * res.alpha - 1));
  if (!rep.pass()) {
    std::cerr << "verification failed:\n" << rep;
    return kExitVerify;
  }
  (void)check;
  if (res.trace.shortfall) return kExitVerify;
  return kExitPass;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, bool strong, bool odd,
               std::optional<int> max_len) {
  immex::Graph g = immex::Graph::load(graph_path);
  immex::ImmersionCertificate c = immex::ImmersionCertificate::load(cert_path);
  if (c.n != g.num_vertices()) {
    std::cerr << "error: certificate is for a graph on " << c.n << " vertices, input has "
              << g.num_vertices() << "\n";
    return kExitInput;
  }
  immex::VerifyReport rep = immex::verify(g, c, strong, odd, max_len);
  std::cout << rep;
  return rep.pass() ? kExitPass : kExitVerify;
}

int cmd_gen(const std::string& model, int k, int s, int n, double p, std::uint64_t seed,
            const std::string& output) {
  immex::Graph g(0);
  if (model == "disjoint-cliques") {
    g = immex::disjoint_cliques(k, s);
  } else if (model == "gnp") {
    g = immex::gnp(n, p, seed);
  } else if (model == "complement-trianglefree") {
    g = immex::complement_trianglefree(n, seed);
  } else {
    std::cerr << "error: unknown model '" << model << "'\n";
    return kExitInput;
  }
  if (output.empty()) {
    g.write_edge_list(std::cout);
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return kExitInput;
    }
    g.write_edge_list(out);
  }
  return kExitPass;
}

int cmd_bench(int trials, int n_max, int alpha_max, std::uint64_t seed) {
  if (n_max > 200 || alpha_max > 8) {
    std::cerr << "error: bench caps are n <= 200, alpha <= 8\n";
    return kExitInput;
  }
  std::mt19937_64 rng(seed);
  immex::BetaTable table;
  int failures = 0, shortfalls = 0;
  std::cout << "n\talpha\tguarantee\tglw\tachieved\tverified\tshortfall\n";
  for (int t = 0; t < trials; ++t) {
    int alpha = 3 + static_cast<int>(rng() % std::max(1, alpha_max - 2));
    int n = alpha + 3 + static_cast<int>(rng() % std::max(1, n_max - alpha - 2));
    double p = 0.3 + 0.6 * (static_cast<double>(rng() % 1000) / 1000.0);
    immex::Graph g = immex::noisy_clique_cover(alpha, n, p, rng());
    immex::ExtractResult res = immex::extract(g);
    long guarantee =
        static_cast<long>(immex::floor_rational(immex::Rational(n) / table.beta(res.alpha))) - 1;
    bool ok = immex::verify(g, res.certificate, true, res.certificate.clique_order() > 1,
                            std::max(1, 2 * res.alpha - 1))
                  .pass();
    if (!ok) ++failures;
    if (res.trace.shortfall) ++shortfalls;
    std::cout << n << "\t" << res.alpha << "\t" << guarantee << "\t" << glw_bound(n, res.alpha)
              << "\t" << res.certificate.clique_order() << "\t" << (ok ? "yes" : "no") << "\t"
              << (res.trace.shortfall ? "yes" : "no") << "\n";
  }
  std::cout << "pass_rate: " << (trials - failures) << "/" << trials
            << ", shortfalls: " << shortfalls << "\n";
  return failures == 0 ? kExitPass : kExitVerify;
}

int cmd_audit_aalpha(int alpha, bool exhaustive, int samples, std::uint64_t seed) {
  immex::AAlphaGraph a(alpha);
  std::vector<immex::CutSet> cuts;
  if (exhaustive) {
    cuts = immex::enumerate_minimal_cuts(a);
  } else {
    cuts = immex::sample_minimal_cuts(a, samples, seed);
  }
  int checked = 0, bad = 0;
  for (const immex::CutSet& c : cuts) {
    if (c.size() == 1 && c[0] == a.dalpha_id()) continue;
    ++checked;
    immex::CutAuditReport rep = immex::audit_cut_properties(a, c);
    immex::JPartition jp = immex::derive_j_partition(a, c);
    if (!rep.pass() || !jp.pass()) {
      ++bad;
      std::cout << "FAIL cut {";
      for (int v : c) std::cout << " " << a.vertex(v).label(alpha);
      std::cout << " }\n";
      for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
      for (const auto& f : jp.failures) std::cout << "  " << f << "\n";
    }
  }
  std::cout << "alpha " << alpha << ": " << checked << " minimal cuts audited, " << bad
            << " failures\n";
  return bad == 0 ? kExitPass : kExitVerify;
}

int cmd_beta(int max_index) {
  immex::BetaTable table(max_index);
  for (int i = 1; i <= max_index; ++i) {
    const immex::Rational& b = table.beta(i);
    std::cout << "beta_" << i << " = " << b << " (~" << approx(b) << ")";
    if (i >= 3) {
      immex::Rational f = table.f_of_alpha(i);
      std::cout << "\tf(" << i << ") = " << f << " (~" << approx(f) << ")";
    }
    std::cout << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-immersion extraction and verification for graphs of bounded independence number"};
  app.require_subcommand(1);

  auto* ext = app.add_subcommand("extract", "Extract a clique immersion and write its certificate");
  std::string ext_input, ext_output, ext_format = "json";
  bool ext_check = false, ext_debug = false;
  int ext_alpha_cap = -1;
  ext->add_option("--input", ext_input, "graph file (edge list or DIMACS)")->required();
  ext->add_option("--output", ext_output, "certificate path (default: <input>.cert.json)");
  ext->add_option("--format", ext_format, "certificate format (json)");
  ext->add_flag("--check", ext_check, "re-verify the certificate before exiting");
  ext->add_flag("--debug-reverify", ext_debug, "verify at every recursion exit");
  ext->add_option("--alpha-cap", ext_alpha_cap, "reject inputs with independence number above this");

  auto* ver = app.add_subcommand("verify", "Verify a certificate against a graph");
  std::string ver_graph, ver_cert;
  bool ver_strong = false, ver_odd = false;
  int ver_max_len = -1;
  ver->add_option("--graph", ver_graph)->required();
  ver->add_option("--cert", ver_cert)->required();
  ver->add_flag("--strong", ver_strong, "require no branch vertex as path interior");
  ver->add_flag("--odd", ver_odd, "require all path lengths odd");
  ver->add_option("--max-len", ver_max_len, "maximum path length");

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  std::string gen_model, gen_output;
  int gen_k = 3, gen_s = 3, gen_n = 10;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  gen->add_option("--model", gen_model, "disjoint-cliques | gnp | complement-trianglefree")
      ->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("-k", gen_k, "number of cliques (disjoint-cliques)");
  gen->add_option("-s", gen_s, "clique size (disjoint-cliques)");
  gen->add_option("-n", gen_n, "vertex count (gnp, complement-trianglefree)");
  gen->add_option("-p", gen_p, "edge probability (gnp)");
  gen->add_option("--output", gen_output, "output file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "Run seeded benchmark instances");
  int bench_trials = 20, bench_n_max = 100, bench_alpha_max = 6;
  std::uint64_t bench_seed = 0;
  bench->add_option("--trials", bench_trials)->required();
  bench->add_option("--n-max", bench_n_max)->required();
  bench->add_option("--alpha-max", bench_alpha_max)->required();
  bench->add_option("--seed", bench_seed)->required();

  auto* audit = app.add_subcommand("audit-aalpha", "Audit the minimal-cut lemmas on A_alpha");
  int audit_alpha = 3, audit_samples = 200;
  bool audit_exhaustive = false;
  std::uint64_t audit_seed = 0;
  audit->add_option("--alpha", audit_alpha)->required();
  audit->add_flag("--exhaustive", audit_exhaustive, "full subset sweep (alpha <= 4)");
  audit->add_option("--samples", audit_samples, "sampled minimal cuts otherwise");
  audit->add_option("--seed", audit_seed);

  auto* beta = app.add_subcommand("beta", "Print the exact bound table");
  int beta_max = 16;
  beta->add_option("--max", beta_max, "largest index to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*ext)
      return cmd_extract(ext_input, ext_output, ext_check, ext_debug,
                         ext_alpha_cap >= 0 ? std::optional<int>(ext_alpha_cap) : std::nullopt);
    if (*ver)
      return cmd_verify(ver_graph, ver_cert, ver_strong, ver_odd,
                        ver_max_len >= 0 ? std::optional<int>(ver_max_len) : std::nullopt);
    if (*gen) return cmd_gen(gen_model, gen_k, gen_s, gen_n, gen_p, gen_seed, gen_output);
    if (*bench) return cmd_bench(bench_trials, bench_n_max, bench_alpha_max, bench_seed);
    if (*audit) return cmd_audit_aalpha(audit_alpha, audit_exhaustive, audit_samples, audit_seed);
    if (*beta) return cmd_beta(beta_max);
  } catch (const immex::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
