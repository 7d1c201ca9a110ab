// cyclomat: verification sweeps, determinant tables and k >= 3 exploration.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include "cyclomat/field_cache.hpp"
#include "cyclomat/matrices.hpp"
#include "cyclomat/report_io.hpp"
#include "cyclomat/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace cyclomat;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::vector<int> q_list;
  int q_max = 0;
  int q_min = 3;
  int q_bound = 2401;
  std::string k_spec = "all";
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  int jobs = 0;
  bool no_header = false;
};

struct VerifyArgs {
  std::vector<std::string> claims{"all"};
  int cross_check_bound = 13;
  int generator_samples = 3;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--q", a.q_list, "Prime powers to check")->delimiter(',');
  cmd->add_option("--q-max", a.q_max, "Every prime power in [q-min, q-max]");
  cmd->add_option("--q-min", a.q_min, "Lower end of the --q-max range")->capture_default_str();
  cmd->add_option("--q-bound", a.q_bound, "Hard upper bound on q")->capture_default_str();
  cmd->add_option("--k", a.k_spec, "Comma-separated divisors of q - 1, or 'all'")->capture_default_str();
  cmd->add_option("--format", a.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", a.output, "Write to this file instead of stdout");
  cmd->add_option("--cache-dir", a.cache_dir, "Field cache directory (overrides $CYCLOMAT_CACHE_DIR)");
  cmd->add_option("-j,--jobs", a.jobs, "Worker threads (default: hardware concurrency)");
  cmd->add_flag("--no-header", a.no_header, "Omit the timestamped header");
}

std::vector<int> resolve_qs(const CommonArgs& a, int default_max) {
  std::vector<int> qs = a.q_list;
  if (qs.empty()) {
    const int hi = a.q_max > 0 ? a.q_max : default_max;
    for (int q = std::max(a.q_min, 2); q <= hi && q <= a.q_bound; ++q) {
      int p, n;
      if (prime_power(static_cast<std::uint64_t>(q), p, n)) qs.push_back(q);
    }
    if (a.q_max > a.q_bound) throw UsageError("--q-max exceeds the bound " + std::to_string(a.q_bound));
  }
  for (int q : qs) {
    int p, n;
    if (q < 2 || !prime_power(static_cast<std::uint64_t>(q), p, n)) {
      throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    }
    if (q > a.q_bound) {
      throw UsageError("q = " + std::to_string(q) + " exceeds the bound " + std::to_string(a.q_bound));
    }
  }
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  if (qs.empty()) throw UsageError("no prime powers selected");
  return qs;
}

/// Empty result means every divisor.
std::vector<int> resolve_ks(const CommonArgs& a, const std::vector<int>& qs) {
  if (a.k_spec == "all") return {};
  std::vector<int> ks;
  std::stringstream ss(a.k_spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(tok, &used);
      if (used != tok.size() || k < 1) throw std::invalid_argument(tok);
      ks.push_back(k);
    } catch (const std::exception&) {
      throw UsageError("invalid k: '" + tok + "'");
    }
  }
  for (int q : qs) {
    for (int k : ks) {
      if ((q - 1) % k != 0) {
        throw UsageError("k = " + std::to_string(k) + " does not divide q - 1 = " + std::to_string(q - 1));
      }
    }
  }
  return ks;
}

std::vector<std::pair<int, int>> expand_pairs(const std::vector<int>& qs, const std::vector<int>& ks, int k_min) {
  std::vector<std::pair<int, int>> out;
  for (int q : qs) {
    for (int k = k_min; k <= q - 1; ++k) {
      if ((q - 1) % k != 0) continue;
      if (!ks.empty() && std::find(ks.begin(), ks.end(), k) == ks.end()) continue;
      out.emplace_back(q, k);
    }
  }
  return out;
}

int parallelism(const CommonArgs& a) {
  if (a.jobs < 0) throw UsageError("--jobs must be at least 1");
  if (a.jobs > 0) return a.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

ContextFactory context_factory(const CommonArgs& a) {
  std::optional<FieldCache> cache;
  if (!a.cache_dir.empty()) {
    cache.emplace(a.cache_dir);
  } else {
    cache = FieldCache::from_environment();
  }
  const auto bound = static_cast<std::uint64_t>(a.q_bound);
  return [cache, bound](int p, int n) {
    FqCtxPtr field = cache ? cache->get(p, n, bound) : build_field(p, n, bound);
    return GaussContext::make(std::move(field));
  };
}

/// Memoizes one GaussContext per (p, n) for the table commands.
class ContextPool {
 public:
  explicit ContextPool(ContextFactory make) : make_(std::move(make)) {}
  GaussContextPtr get(int q) {
    int p, n;
    prime_power(static_cast<std::uint64_t>(q), p, n);
    std::lock_guard lock(mu_);
    auto& slot = pool_[q];
    if (!slot) slot = make_(p, n);
    return slot;
  }

 private:
  ContextFactory make_;
  std::mutex mu_;
  std::map<int, GaussContextPtr> pool_;
};

OutputOptions output_options(const CommonArgs& a) {
  OutputOptions o;
  o.format = *parse_format(a.format);
  o.header = !a.no_header;
  return o;
}

void emit(const CommonArgs& a, const std::string& text) {
  if (a.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(a.output, std::ios::binary);
  if (!out) throw UsageError("cannot open " + a.output);
  out << text;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_verify(const CommonArgs& a, const VerifyArgs& v) {
  for (const auto& c : v.claims) {
    if (!valid_claim_token(c)) throw UsageError("unknown claim '" + c + "'");
  }
  if (v.cross_check_bound < 0 || v.generator_samples < 1) throw UsageError("bounds must be positive");
  VerifyPlan plan;
  plan.qs = resolve_qs(a, 49);
  plan.ks = resolve_ks(a, plan.qs);
  plan.claims = v.claims;
  plan.options.cross_check_bound = v.cross_check_bound;
  plan.options.generator_samples = v.generator_samples;

  const auto reports = run_jobs(plan_jobs(plan, context_factory(a)), parallelism(a));

  OutputOptions o = output_options(a);
  o.timing = v.timing;
  std::string claims;
  for (const auto& c : v.claims) claims += (claims.empty() ? "" : ",") + c;
  o.config = {{"command", "verify"},
              {"q", join(plan.qs)},
              {"k", a.k_spec},
              {"claims", claims},
              {"cross_check_bound", std::to_string(v.cross_check_bound)},
              {"generator_samples", std::to_string(v.generator_samples)}};
  emit(a, render_reports(reports, o));
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::fail; });
  return failed ? kExitFail : 0;
}

int cmd_table(const CommonArgs& a) {
  const auto qs = resolve_qs(a, 13);
  const auto pairs = expand_pairs(qs, resolve_ks(a, qs), 1);
  ContextPool pool(context_factory(a));
  std::vector<std::vector<std::string>> rows(pairs.size());
  parallel_for(pairs.size(), parallelism(a), [&](std::size_t i) {
    const auto [q, k] = pairs[i];
    const auto ctx = pool.get(q);
    const int m = matrix_dim(*ctx, k);
    const CycloElem det_a = det_A_via_eigen(ctx, k);
    const Rational det_b = det_B_via_eigen(ctx, k);
    const int o = order_mod(static_cast<std::uint64_t>(ctx->p()), static_cast<std::uint64_t>(k));
    rows[i] = {std::to_string(q), std::to_string(k),        std::to_string(m), to_string(det_a),
               to_string(det_b),  det_b == 0 ? "true" : "false", std::to_string(o)};
  });
  OutputOptions o = output_options(a);
  o.config = {{"command", "table"}, {"q", join(qs)}, {"k", a.k_spec}};
  emit(a, render_table({"q", "k", "m", "det_A", "det_B", "singular", "o_k"}, rows, o));
  return 0;
}

std::string factorize(BigInt x) {
  if (x == 0) return "0";
  x = abs(x);
  if (x == 1) return "1";
  std::string out;
  auto add = [&](const std::string& base, int e) {
    if (!out.empty()) out += " * ";
    out += base;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (unsigned long d = 2; d <= 1000000 && BigInt(d) * d <= x; d += (d == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), d)) {
      x /= d;
      ++e;
    }
    if (e) add(std::to_string(d), e);
  }
  if (x > 1) {
    const bool prime = mpz_probab_prime_p(x.get_mpz_t(), 30) > 0;
    add(prime ? x.get_str() : x.get_str() + "(composite)", 1);
  }
  return out;
}

int cmd_explore(const CommonArgs& a) {
  const auto qs = resolve_qs(a, 13);
  const auto pairs = expand_pairs(qs, resolve_ks(a, qs), 3);
  ContextPool pool(context_factory(a));
  std::vector<std::vector<std::string>> rows(pairs.size());
  parallel_for(pairs.size(), parallelism(a), [&](std::size_t i) {
    const auto [q, k] = pairs[i];
    const auto ctx = pool.get(q);
    const EigenData eig = eigenvalues(ctx, k);
    const CycloElem det = det_A_via_eigen(ctx, k);
    const BigInt d = det.to_rational().get_num();
    std::vector<double> moduli;
    for (const auto& lam : eig.values) moduli.push_back(std::abs(embed_complex(lam)));
    std::sort(moduli.begin(), moduli.end());
    std::string mods;
    for (double x : moduli) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", x);
      mods += (mods.empty() ? "" : ";") + std::string(buf);
    }
    rows[i] = {std::to_string(q), std::to_string(k), std::to_string(eig.m), to_string(d),
               d > 0 ? "+" : d < 0 ? "-" : "0", factorize(d), mods};
  });
  OutputOptions o = output_options(a);
  o.config = {{"command", "explore"}, {"q", join(qs)}, {"k", a.k_spec}};
  emit(a, render_table({"q", "k", "m", "det_A", "sign", "factorization", "lambda_moduli"}, rows, o));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gauss-sum determinants over finite fields"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonArgs verify_common, table_common, explore_common;
  VerifyArgs verify_args;

  auto* verify = app.add_subcommand("verify", "Check the determinant theorems and background identities");
  add_common(verify, verify_common);
  verify->add_option("--claims", verify_args.claims, "Claims or groups: thm11, thm12, thm13, background, all, ...")
      ->delimiter(',');
  verify->add_option("--cross-check-bound", verify_args.cross_check_bound,
                     "Largest m for fraction-free elimination over L")
      ->capture_default_str();
  verify->add_option("--generator-samples", verify_args.generator_samples, "Replacement generators per check")
      ->capture_default_str();
  verify->add_flag("--timing", verify_args.timing, "Record elapsed time per report");

  auto* table = app.add_subcommand("table", "det A_q(k), det B_q(k) and singularity per (q, k)");
  add_common(table, table_common);
  auto* explore = app.add_subcommand("explore", "det A_q(k) data for k >= 3");
  add_common(explore, explore_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_common, verify_args);
    if (*table) return cmd_table(table_common);
    if (*explore) return cmd_explore(explore_common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
