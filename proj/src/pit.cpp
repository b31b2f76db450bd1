#include "ncpit/pit.hpp"

#include <algorithm>
#include <cmath>

namespace ncpit {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_feed(std::uint64_t& h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= kFnvPrime;
  }
  h ^= ';';
  h *= kFnvPrime;
}

std::string elem_str(const PrimeField&, const mpz_class& v) { return v.get_str(); }
std::string elem_str(const PrimeField64&, std::uint64_t v) { return std::to_string(v); }

template <typename F>
TrialOutcome scan_matrix(const F& field, const Matrix<F>& m) {
  TrialOutcome out;
  std::uint64_t h = kFnvOffset;
  for (std::uint32_t i = 0; i < m.dim(); ++i)
    for (std::uint32_t j = 0; j < m.dim(); ++j) {
      std::string s = elem_str(field, m.at(i, j));
      fnv_feed(h, s);
      if (!field.is_zero(m.at(i, j))) {
        if (!out.nonzero) {
          out.nonzero = true;
          out.row = i;
          out.col = j;
          out.value = s;
        }
        ++out.nonzero_entries;
      }
    }
  out.digest = h;
  return out;
}

template <typename F>
TrialOutcome run_nfa_trial(const BlackBox& box, std::uint32_t k, const F& field, Rng& rng) {
  auto assignment = random_assignment(k, field, rng);
  auto sm = build_substitution_matrices(field, assignment);
  auto encoded = encoded_variable_matrices(field, sm, box.nvars());
  Matrix<F> out = box.eval(field, std::span<const Matrix<F>>(encoded));
  if (out.dim() != k + 1) fail(Errc::BoxDimRefused, "black box returned a wrong dimension");
  return scan_matrix(field, out);
}

double single_trial_error(const mpz_class& degree_bound, const mpz_class& modulus) {
  return mpq_class(degree_bound, modulus).get_d();
}

}  // namespace

std::uint32_t required_trials(double eps_total, double eps_single) {
  if (!(eps_total > 0.0 && eps_total < 1.0))
    fail(Errc::Config, "target error must lie in (0, 1)");
  if (eps_single >= 1.0)
    fail(Errc::DegenerateBound, "per-trial error bound >= 1 (field too small for the degree)");
  if (eps_single <= 0.0) return 1;
  double ratio = std::log(eps_total) / std::log(eps_single);
  auto r = static_cast<std::uint32_t>(std::max(1.0, std::ceil(ratio - 1e-9)));
  return r;
}

TrialOutcome single_trial(const BlackBox& box, std::uint32_t k, const PrimeField& field, Rng& rng) {
  if (field.fits_u64()) {
    PrimeField64 fast(field);
    return run_nfa_trial(box, k, fast, rng);
  }
  return run_nfa_trial(box, k, field, rng);
}

Verdict nfa_identity_test(const BlackBox& box, const TestParams& params) {
  if (params.trials_per_k < 1) fail(Errc::Config, "trials_per_k must be >= 1");
  if (box.nvars() < 1) fail(Errc::Config, "black box declares no variables");
  const mpz_class d_biv = mpz_class(1) << params.degree_log2_bound;
  if (params.field.modulus() <= d_biv)
    fail(Errc::FieldTooSmall, "modulus must exceed the bivariate degree bound 2^" +
                                  std::to_string(params.degree_log2_bound));
  const double eps_single = single_trial_error(d_biv, params.field.modulus());

  Verdict verdict;
  for (std::uint32_t k = 0; k <= params.k_max; ++k) {
    for (std::uint32_t trial = 0; trial < params.trials_per_k; ++trial) {
      const std::uint64_t derived = Rng::mix(params.seed, k, trial);
      Rng rng(derived);
      TrialOutcome out = single_trial(box, k, params.field, rng);
      verdict.transcript.push_back(
          {k, k + 1, trial, derived, out.nonzero, out.nonzero_entries, out.digest});
      if (out.nonzero) {
        verdict.outcome = Outcome::Nonzero;
        verdict.witness = Witness{k, k + 1, trial, derived, out.row, out.col, out.value};
        verdict.error_bound = 0.0;  // a nonzero entry is an exact certificate
        return verdict;
      }
    }
  }
  verdict.outcome = Outcome::Zero;
  verdict.error_bound = std::pow(eps_single, params.trials_per_k);
  return verdict;
}

namespace {

template <typename F>
Verdict run_al_test(const BlackBox& box, std::uint64_t degree_bound, const F& field,
                    const mpz_class& modulus, std::uint32_t trials, std::uint64_t seed,
                    std::uint32_t dim) {
  Verdict verdict;
  const double eps_single = single_trial_error(mpz_class(degree_bound), modulus);
  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t derived = Rng::mix(seed, dim, trial);
    Rng rng(derived);
    // One independent uniform dim x dim matrix per variable, entries drawn
    // row-major in variable order.
    std::vector<Matrix<F>> mats;
    mats.reserve(box.nvars());
    for (std::uint32_t v = 0; v < box.nvars(); ++v) {
      Matrix<F> m(field, dim);
      for (std::uint32_t i = 0; i < dim; ++i)
        for (std::uint32_t j = 0; j < dim; ++j) m.at(i, j) = field.sample(rng);
      mats.push_back(std::move(m));
    }
    Matrix<F> out = box.eval(field, std::span<const Matrix<F>>(mats));
    TrialOutcome res = scan_matrix(field, out);
    verdict.transcript.push_back(
        {0, dim, trial, derived, res.nonzero, res.nonzero_entries, res.digest});
    if (res.nonzero) {
      verdict.outcome = Outcome::Nonzero;
      verdict.witness = Witness{0, dim, trial, derived, res.row, res.col, res.value};
      verdict.error_bound = 0.0;
      return verdict;
    }
  }
  verdict.outcome = Outcome::Zero;
  verdict.error_bound = std::pow(eps_single, trials);
  return verdict;
}

}  // namespace

Verdict al_identity_test(const BlackBox& box, std::uint64_t degree_bound, const PrimeField& field,
                         std::uint32_t trials, std::uint64_t seed, std::uint32_t dim_cap) {
  if (trials < 1) fail(Errc::Config, "trials must be >= 1");
  if (box.nvars() < 1) fail(Errc::Config, "black box declares no variables");
  const std::uint64_t dim64 = degree_bound / 2 + 1;
  if (dim64 > dim_cap)
    fail(Errc::DimTooLarge, "baseline dimension " + std::to_string(dim64) +
                                " exceeds the cap " + std::to_string(dim_cap) +
                                " (degree bound " + std::to_string(degree_bound) + ")");
  const auto dim = static_cast<std::uint32_t>(dim64);
  if (field.modulus() <= 2 * mpz_class(static_cast<unsigned long>(dim)) - 1)
    fail(Errc::FieldTooSmall, "field size must exceed 2*dim - 1 = " + std::to_string(2 * dim64 - 1));
  if (field.fits_u64()) {
    PrimeField64 fast(field);
    return run_al_test(box, degree_bound, fast, field.modulus(), trials, seed, dim);
  }
  return run_al_test(box, degree_bound, field, field.modulus(), trials, seed, dim);
}

CommMonomial path_monomial(const Word& word, const IndexSet& positions) {
  if (word.alphabet != Alphabet::X) fail(Errc::Config, "path_monomial expects a bivariate word");
  CommMonomial m;
  std::uint32_t block = 1;
  std::size_t next = 0;  // index into positions
  for (std::uint32_t pos = 1; pos <= word.degree(); ++pos) {
    if (next < positions.size() && positions[next] == pos) {
      m = m.times(CommMonomial::var(nfavars::y(word.at(pos), static_cast<std::uint32_t>(next + 1))));
      ++block;
      ++next;
    } else {
      m = m.times(CommMonomial::var(nfavars::xi(block)));
    }
  }
  if (next != positions.size())
    fail(Errc::Config, "path positions exceed the word length or are unsorted");
  return m;
}

SymbolicReport symbolic_theorem_check(const SparseNCPoly& f) {
  if (f.alphabet() != Alphabet::Z)
    fail(Errc::Config, "symbolic_theorem_check expects a z-alphabet polynomial");
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "symbolic_theorem_check of the zero polynomial");
  if (f.sparsity() > 64)
    fail(Errc::Config, "symbolic check is desk-scale only (at most 64 terms)");

  SparseNCPoly fb = encode_bivariate(f);
  if (*fb.degree() > 40)
    fail(Errc::Config, "symbolic check is desk-scale only (bivariate degree at most 40)");

  MaxDegreeSet top = max_degree_set(fb);
  IsolationResult iso = isolating_index_set(top.words);
  const auto k = static_cast<std::uint32_t>(iso.index_set.size());

  CommPolyRing ring;
  auto sm = build_substitution_matrices(ring, symbolic_assignment(k));
  std::vector<Matrix<CommPolyRing>> xs{sm.mx0, sm.mx1};
  Matrix<CommPolyRing> mf = ncpoly_eval(ring, fb, std::span<const Matrix<CommPolyRing>>(xs));

  SymbolicReport report;
  report.k_used = k;
  report.bivariate_degree = top.degree;
  report.entry_poly = mf.at(0, k);
  report.isolated_word = iso.isolated;
  report.index_set = iso.index_set;
  report.isolated_monomial = path_monomial(iso.isolated, iso.index_set);
  report.recovered_coeff = report.entry_poly.coeff(report.isolated_monomial);
  report.expected_coeff = fb.coeff(iso.isolated);
  report.nonzero = !report.entry_poly.is_zero();
  report.coeff_matches = report.recovered_coeff == report.expected_coeff;
  return report;
}

ResolvedParams resolve_test_params(const Circuit& c, const TestOptions& opts) {
  ResolvedParams out{TestParams{0, 0, opts.target_error, 1, opts.seed,
                                PrimeField(2)},
                     {}};
  const std::uint32_t n = c.nvars();

  // Bivariate degree bound D_biv <= (n+2) * syntactic degree.
  std::uint32_t degree_log2 = 0;
  std::optional<Bound> syn_degree;
  if (opts.degree_log2) {
    degree_log2 = *opts.degree_log2;
  } else {
    syn_degree = syntactic_degree_bound(c);
    if (syn_degree->is_huge())
      fail(Errc::Config,
           "syntactic degree bound saturates (> 2^63); pass an explicit --degree-log2");
    std::uint64_t d = std::max<std::uint64_t>(syn_degree->value(), 1);
    Bound biv = sat_mul(Bound::exact(d), Bound::exact(n + 2));
    if (biv.is_huge())
      fail(Errc::Config, "bivariate degree bound saturates; pass an explicit --degree-log2");
    degree_log2 = ceil_log2_u64(biv.value());
  }
  if (degree_log2 > 200) fail(Errc::Config, "degree-log2 bound is unreasonably large");

  // Sweep bound K_max: explicit, else min(log2 sparsity, degree * log2(n+1))
  // further clipped by the bivariate degree (an isolating set cannot be
  // larger than the word length).
  std::uint32_t k_max = 0;
  if (opts.log2_sparsity) {
    k_max = *opts.log2_sparsity;
  } else {
    Bound s_log2 = sparsity_log2_bound(c);
    if (!syn_degree) syn_degree = syntactic_degree_bound(c);
    Bound via_degree = syn_degree->is_huge()
                           ? Bound::huge()
                           : sat_mul(*syn_degree, Bound::exact(ceil_log2_u64(n + 1)));
    Bound k_bound = s_log2.is_huge() ? via_degree
                    : via_degree.is_huge()
                        ? s_log2
                        : Bound::exact(std::min(s_log2.value(), via_degree.value()));
    if (k_bound.is_huge())
      fail(Errc::Config,
           "sparsity bound saturates (the polynomial may have up to 2^2^s monomials); "
           "pass an explicit --log2-sparsity");
    std::uint64_t k64 = k_bound.value();
    if (degree_log2 < 63) k64 = std::min(k64, std::uint64_t(1) << degree_log2);
    if (k64 > 4096)
      fail(Errc::Config, "defaulted K_max " + std::to_string(k64) +
                             " is impractically large; pass an explicit --log2-sparsity");
    k_max = static_cast<std::uint32_t>(k64);
    out.warnings.push_back("log2-sparsity defaulted to " + std::to_string(k_max) +
                           " from circuit bounds; a wrong bound voids completeness "
                           "(soundness is unconditional)");
  }

  const mpz_class d_biv = mpz_class(1) << degree_log2;
  mpz_class modulus;
  if (opts.modulus) {
    modulus = *opts.modulus;
  } else {
    mpz_class floor = 2 * d_biv;
    mpz_class floor_min = mpz_class(1) << 61;
    if (floor < floor_min) floor = floor_min;
    modulus = next_prime_above(floor);
  }

  PrimeField field(modulus);
  if (field.modulus() <= d_biv)
    fail(Errc::FieldTooSmall,
         "modulus must exceed the bivariate degree bound 2^" + std::to_string(degree_log2));

  std::uint32_t trials =
      opts.trials ? *opts.trials
                  : required_trials(opts.target_error,
                                    mpq_class(d_biv, field.modulus()).get_d());

  out.params = TestParams{k_max, degree_log2, opts.target_error, trials, opts.seed, field};
  return out;
}

}  // namespace ncpit
