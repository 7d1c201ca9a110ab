#pragma once

// Executable checks for the determinant theorems and the background
// identities they rest on.  Each check compares a closed form (or an
// independent route) with exact matrix arithmetic and returns a report.

#include "cyclomat/characters.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cyclomat {

enum class Status { pass, fail, info };

std::string to_string(Status s);

struct ReportParams {
  int q = 0;
  int p = 0;
  int n = 0;
  int k = 0;
  std::string extra;
};

struct VerificationReport {
  std::string claim;
  ReportParams params;
  std::string expected;
  std::string computed;
  Status status = Status::fail;
  std::string note;
  double elapsed_ms = 0.0;
};

/// Deterministic order: claim, then q, p, n, k, extra.
bool report_less(const VerificationReport& a, const VerificationReport& b);

struct VerifyOptions {
  /// Largest m for which fraction-free elimination over L is run.
  int cross_check_bound = 13;
  /// ... and only while the field degree [L : Q] stays within this bound;
  /// beyond either bound the multimodular route is used instead.
  int cross_check_dim = 64;
  /// Replacement generators chi^s sampled for the generator-independence check.
  int generator_samples = 3;
};

/// Up to `count` exponents s in (1, q - 1) with gcd(s, q - 1) = 1, ascending,
/// preceded by s = 1.
std::vector<std::int64_t> sample_generator_powers(int group_order, int count);

// Determinant theorems ------------------------------------------------------

/// det A_q(k) is a rational integer, congruent to (-1)^((m^2-m+2)/2) mod p,
/// and det A, det B do not change when chi is replaced by chi^s.
VerificationReport verify_thm11(const GaussContextPtr& ctx, int k, const VerifyOptions& opts = {});
/// det A_q(1) against its closed form; q = 2 is reported as info.
VerificationReport verify_thm12_A1(const GaussContextPtr& ctx);
/// det A_q(2) against its closed form; q odd.
VerificationReport verify_thm12_A2(const GaussContextPtr& ctx);
/// B_q(k) nonsingular iff o_k(p) = n.
VerificationReport verify_thm13(const GaussContextPtr& ctx, int k);
/// det B_p(1) against its closed form; q prime.
VerificationReport verify_thm13_B1(const GaussContextPtr& ctx);
/// det B_p(2) against its stated closed form; q an odd prime.  A mismatch
/// that the reversal sign accounts for is noted on the report.
VerificationReport verify_thm13_B2(const GaussContextPtr& ctx);
/// Fraction-free det A (when m is within the bound) equals the eigenvalue
/// product.
VerificationReport verify_det_paths(const GaussContextPtr& ctx, int k, const VerifyOptions& opts = {});

// Background identities -----------------------------------------------------

VerificationReport verify_stickelberger(const GaussContextPtr& ctx);
VerificationReport verify_lerch(int m);
VerificationReport verify_hd_lifting(int p, int n);
VerificationReport verify_hd_product(const GaussContextPtr& ctx, int m);
VerificationReport verify_carlitz(const GaussContextPtr& ctx, std::int64_t t);
VerificationReport verify_chapman_vanishing(int p);
VerificationReport verify_chapman_reflection(int p);
VerificationReport verify_sun_residue(int p);
VerificationReport verify_gamma(int n);
VerificationReport verify_gamma_reciprocal(int n);
/// |G(psi)| = sqrt(q) numerically for every nontrivial psi.
VerificationReport verify_gauss_modulus(const GaussContextPtr& ctx);
/// G(psi) G(psi^-1) = psi(-1) q exactly for every nontrivial psi.
VerificationReport verify_gauss_reflection(const GaussContextPtr& ctx);
/// The quadratic Gauss sum lands on the closed-form branch under the
/// principal embedding; q odd.
VerificationReport verify_gauss_quadratic(const GaussContextPtr& ctx);

/// Sign of x -> a x on Z/m by cycle decomposition.
int permutation_sign_bruteforce(std::int64_t a, std::int64_t m);

/// p = a^2 + 4 b^2 with a = 1 (mod 4), by search; p = 1 (mod 4).
std::int64_t sun_a_parameter(int p);

struct BackgroundRanges {
  std::vector<int> lerch_moduli;
  std::vector<std::pair<int, int>> hd_lifting;  // (p, n)
  std::vector<int> gamma_sizes;
  std::vector<int> legendre_primes;             // Chapman and Sun matrices
};

struct VerifyJob;

/// One job per q-independent background check.
std::vector<VerifyJob> background_jobs(const BackgroundRanges& ranges);

/// Runs the q-independent background checks.
std::vector<VerificationReport> verify_background(const BackgroundRanges& ranges, int parallelism = 1);

// Orchestration ---------------------------------------------------------------

struct VerifyJob {
  std::string claim;
  ReportParams params;
  std::function<std::vector<VerificationReport>()> run;
};

/// Calls fn(i) for every i < count on at most `parallelism` threads.
void parallel_for(std::size_t count, int parallelism, const std::function<void(std::size_t)>& fn);

/// Runs jobs on a bounded pool and returns the reports sorted with
/// report_less.  A job that throws yields a failing report carrying the
/// message.
std::vector<VerificationReport> run_jobs(std::vector<VerifyJob> jobs, int parallelism);

// Plans ------------------------------------------------------------------------

/// Every claim identifier, sorted.
const std::vector<std::string>& known_claims();

/// True when `claim` matches a selection token: "all", "background", the
/// exact identifier, or a prefix ending at a '-' ("thm12" selects
/// "thm12-A1" and "thm12-A2").
bool claim_selected(const std::string& claim, const std::vector<std::string>& tokens);

/// True when the token selects at least one known claim.
bool valid_claim_token(const std::string& token);

/// Default ranges for the q-independent checks: m <= 40, (p, n) with
/// p in {2, 3, 5, 7} and n <= 3, n <= 10, odd p <= 23.
BackgroundRanges default_background_ranges();

struct VerifyPlan {
  std::vector<int> qs;
  /// Empty means every divisor of q - 1.
  std::vector<int> ks;
  std::vector<std::string> claims{"all"};
  VerifyOptions options;
  BackgroundRanges background = default_background_ranges();
  /// Largest q for the product formula, which checks every (psi, rho) pair.
  int hd_product_q_max = 16;
  /// Largest p for the Carlitz determinant over L.
  int carlitz_p_max = 13;
};

using ContextFactory = std::function<GaussContextPtr(int p, int n)>;

/// Expands a plan into independent jobs.  Contexts are created once per q
/// through `make_ctx` and shared between that q's jobs.
std::vector<VerifyJob> plan_jobs(const VerifyPlan& plan, const ContextFactory& make_ctx);

}  // namespace cyclomat
