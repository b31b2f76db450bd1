#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ncpit/autmat.hpp"
#include "ncpit/circuit.hpp"
#include "ncpit/commpoly.hpp"
#include "ncpit/error.hpp"
#include "ncpit/field.hpp"
#include "ncpit/isolate.hpp"
#include "ncpit/ncpoly.hpp"

namespace ncpit {

struct TestParams {
  std::uint32_t k_max = 0;             // sweep upper bound (log2 sparsity)
  std::uint32_t degree_log2_bound = 0; // bivariate degree D_biv <= 2^this
  double target_error = 1e-9;
  std::uint32_t trials_per_k = 1;
  std::uint64_t seed = 0;
  PrimeField field;
};

enum class Outcome : std::uint8_t { Zero, Nonzero };

struct Witness {
  std::uint32_t k = 0;      // sweep step (NFA); unused for the AL baseline
  std::uint32_t dim = 0;    // matrix dimension of the witnessing trial
  std::uint32_t trial = 0;
  std::uint64_t derived_seed = 0;
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  std::string value;        // the nonzero entry, decimal
};

struct TrialRecord {
  std::uint32_t k = 0;
  std::uint32_t dim = 0;
  std::uint32_t trial = 0;
  std::uint64_t derived_seed = 0;
  bool nonzero = false;
  std::uint32_t nonzero_entries = 0;
  std::uint64_t digest = 0;  // FNV-1a over the output matrix, replay check
};

// One-sided verdict: Nonzero always carries a replayable witness; Zero
// reports the false-zero probability bound actually achieved.
struct Verdict {
  Outcome outcome = Outcome::Zero;
  std::optional<Witness> witness;
  std::vector<TrialRecord> transcript;
  double error_bound = 0.0;
};

struct TrialOutcome {
  bool nonzero = false;
  std::uint32_t nonzero_entries = 0;
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  std::string value;
  std::uint64_t digest = 0;
};

// Smallest r with eps_single^r <= eps_total (real-number semantics).
std::uint32_t required_trials(double eps_total, double eps_single);

// One trial at sweep step k: draw an assignment, build the encoded
// variable matrices, evaluate the box at dimension k+1, scan every entry.
TrialOutcome single_trial(const BlackBox& box, std::uint32_t k, const PrimeField& field, Rng& rng);

// The randomized identity test. Sweeps K = 0..k_max, trials_per_k trials
// each, trial seeds Rng::mix(seed, K, trial). Some K <= log2(t) admits an
// isolating index set, so the (q0, qK) entry polynomial is nonzero of
// degree <= D_biv there and each trial misses with probability at most
// D_biv / |F|; any nonzero entry anywhere certifies Nonzero exactly.
Verdict nfa_identity_test(const BlackBox& box, const TestParams& params);

// Amitsur-Levitski baseline: substitutes independent uniform random
// (floor(degree_bound/2)+1)-dimensional matrices. Dimension grows linearly
// with the degree, hence the dim_cap.
Verdict al_identity_test(const BlackBox& box, std::uint64_t degree_bound, const PrimeField& field,
                         std::uint32_t trials, std::uint64_t seed, std::uint32_t dim_cap = 256);

// Exact symbolic verification of the nonvanishing theorem on an explicit
// desk-scale polynomial: encodes to the bivariate alphabet, isolates the
// top-degree word, evaluates symbolically, and checks that the (q0, qK)
// entry is nonzero with the isolated word's coefficient surviving intact.
struct SymbolicReport {
  std::uint32_t k_used = 0;
  std::uint64_t bivariate_degree = 0;
  CommPoly entry_poly;          // the (q0, qK) entry of the evaluated matrix
  Word isolated_word;           // bivariate
  IndexSet index_set;           // 1-based positions
  CommMonomial isolated_monomial;  // xi_I * y_{1,I} for the isolated word
  mpz_class recovered_coeff;    // coefficient of isolated_monomial in entry_poly
  mpz_class expected_coeff;     // coefficient of the isolated word in f
  bool nonzero = false;         // entry_poly != 0
  bool coeff_matches = false;   // recovered == expected
};
SymbolicReport symbolic_theorem_check(const SparseNCPoly& f);

// Commutative monomial emitted by the NFA path that reads `word` and takes
// its nondeterministic steps exactly at `positions`: self-loops contribute
// xi_{block}, the m-th step contributes y_{bit, m}.
CommMonomial path_monomial(const Word& word, const IndexSet& positions);

// Parameter resolution shared by the CLI and tests: derives bounds from the
// circuit when flags are absent, auto-selects the modulus and trial count
// for the target error. Defaulted bounds void completeness if wrong, hence
// the warnings.
struct TestOptions {
  std::optional<std::uint32_t> log2_sparsity;
  std::optional<std::uint32_t> degree_log2;
  double target_error = 1e-9;
  std::optional<std::uint32_t> trials;
  std::uint64_t seed = 0;
  std::optional<mpz_class> modulus;
};

struct ResolvedParams {
  TestParams params;
  std::vector<std::string> warnings;
};

ResolvedParams resolve_test_params(const Circuit& c, const TestOptions& opts);

}  // namespace ncpit
