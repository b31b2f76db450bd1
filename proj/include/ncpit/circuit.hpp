#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ncpit/error.hpp"
#include "ncpit/field.hpp"
#include "ncpit/matrix.hpp"
#include "ncpit/ncpoly.hpp"

namespace ncpit {

// Saturating nonnegative counter for degree and log2-sparsity bounds.
// Exact up to 2^63; anything larger collapses to "huge" and the marker
// propagates through arithmetic. Callers seeing huge must supply explicit
// parameters instead of trusting a clipped number.
class Bound {
 public:
  static constexpr std::uint64_t kMax = std::uint64_t(1) << 63;

  static Bound exact(std::uint64_t v) {
    if (v > kMax) return huge();
    Bound b;
    b.value_ = v;
    return b;
  }
  static Bound huge() {
    Bound b;
    b.huge_ = true;
    return b;
  }

  bool is_huge() const { return huge_; }
  std::uint64_t value() const {
    if (huge_) fail(Errc::Config, "bound saturated; explicit parameter required");
    return value_;
  }

  friend Bound sat_add(Bound a, Bound b) {
    if (a.huge_ || b.huge_ || a.value_ > kMax - b.value_) return huge();
    return exact(a.value_ + b.value_);
  }
  friend Bound sat_max(Bound a, Bound b) {
    if (a.huge_ || b.huge_) return huge();
    return exact(std::max(a.value_, b.value_));
  }
  friend Bound sat_mul(Bound a, Bound b) {
    if (a.huge_ || b.huge_) return huge();
    if (a.value_ != 0 && b.value_ > kMax / a.value_) return huge();
    return exact(a.value_ * b.value_);
  }
  // ceil(log2(2^a + 2^b)) = max(a, b) + 1.
  friend Bound sat_log2_add(Bound a, Bound b) { return sat_add(sat_max(a, b), exact(1)); }

  std::string str() const { return huge_ ? "huge" : std::to_string(value_); }

  bool operator==(const Bound&) const = default;

 private:
  std::uint64_t value_ = 0;
  bool huge_ = false;
};

std::uint32_t ceil_log2_u64(std::uint64_t v);  // ceil(log2 v), v >= 1; log2(1) = 0

struct Gate {
  enum class Kind : std::uint8_t { Var, Const, Add, Mul };
  Kind kind = Kind::Var;
  std::uint32_t var = 0;   // Var: z-index in [1, nvars]
  mpz_class constant;      // Const
  std::uint32_t lhs = 0;   // Add/Mul operands; Mul multiplies lhs * rhs in that order
  std::uint32_t rhs = 0;
};

// Noncommutative arithmetic circuit: gates in topological order (operands
// reference strictly lower indices), fan-in exactly two, one output gate.
// Text-format gate ids are preserved so parse/print round-trips byte-stable.
class Circuit {
 public:
  Circuit(std::uint32_t nvars, std::vector<Gate> gates, std::uint32_t output,
          std::vector<std::uint64_t> gate_ids = {});

  std::uint32_t nvars() const { return nvars_; }
  std::size_t size() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::uint32_t output() const { return output_; }
  std::uint64_t gate_id(std::size_t index) const { return gate_ids_[index]; }

 private:
  std::uint32_t nvars_;
  std::vector<Gate> gates_;
  std::uint32_t output_;
  std::vector<std::uint64_t> gate_ids_;
};

// Text format (gate ids must be declared before use, '#' comments allowed):
//   ncircuit v1 vars=<n>
//   g<k> = var z<i>
//   g<k> = const <integer>
//   g<k> = add g<a> g<b>
//   g<k> = mul g<a> g<b>
//   output g<k>
Circuit parse_circuit(std::string_view text);
std::string to_text(const Circuit& c);

// Per-gate syntactic degree: var/const -> 1/0, add -> max, mul -> sum.
Bound syntactic_degree_bound(const Circuit& c);

// Per-gate log2 bound on the number of monomials: var/const -> 0,
// add -> ceil(log2(2^a + 2^b)), mul -> a + b.
Bound sparsity_log2_bound(const Circuit& c);

// Gate-by-gate evaluation over any ring; one dim x dim matrix per variable,
// constants embed as scalar * identity.
template <Ring R>
Matrix<R> circuit_eval(const R& ring, const Circuit& c, std::span<const Matrix<R>> var_matrices) {
  if (var_matrices.size() != c.nvars())
    fail(Errc::DimMismatch, "circuit_eval: expected one matrix per variable");
  std::uint32_t dim = var_matrices.empty() ? 1 : var_matrices[0].dim();
  for (const auto& m : var_matrices)
    if (m.dim() != dim) fail(Errc::DimMismatch, "circuit_eval: mixed matrix dimensions");

  std::vector<Matrix<R>> values;
  values.reserve(c.size());
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case Gate::Kind::Var:
        values.push_back(var_matrices[g.var - 1]);
        break;
      case Gate::Kind::Const:
        values.push_back(Matrix<R>::scalar(ring, dim, ring.from_integer(g.constant)));
        break;
      case Gate::Kind::Add:
        values.push_back(mat_add(ring, values[g.lhs], values[g.rhs]));
        break;
      case Gate::Kind::Mul:
        values.push_back(mat_mul(ring, values[g.lhs], values[g.rhs]));
        break;
    }
  }
  return values[c.output()];
}

// Brute-force expansion to an explicit sparse polynomial; the desk-scale
// oracle behind every verdict cross-check. Throws CapExceeded naming the
// offending gate when an intermediate would exceed term_cap terms.
SparseNCPoly expand_to_sparse(const Circuit& c, std::size_t term_cap = 1'000'000);

// Evaluation oracle surface the testers use: per-variable matrices in, the
// evaluated matrix out, no structure revealed. Both field representations
// must be served so implementations cannot force the slow path.
class BlackBox {
 public:
  virtual ~BlackBox() = default;
  virtual std::uint32_t nvars() const = 0;
  virtual Matrix<PrimeField> eval(const PrimeField& field,
                                  std::span<const Matrix<PrimeField>> matrices) const = 0;
  virtual Matrix<PrimeField64> eval(const PrimeField64& field,
                                    std::span<const Matrix<PrimeField64>> matrices) const = 0;
};

class CircuitBlackBox final : public BlackBox {
 public:
  explicit CircuitBlackBox(Circuit c) : circuit_(std::move(c)) {}

  std::uint32_t nvars() const override { return circuit_.nvars(); }
  Matrix<PrimeField> eval(const PrimeField& field,
                          std::span<const Matrix<PrimeField>> matrices) const override {
    return circuit_eval(field, circuit_, matrices);
  }
  Matrix<PrimeField64> eval(const PrimeField64& field,
                            std::span<const Matrix<PrimeField64>> matrices) const override {
    return circuit_eval(field, circuit_, matrices);
  }

  const Circuit& circuit() const { return circuit_; }

 private:
  Circuit circuit_;
};

// Random sparse polynomial with exactly `terms` distinct words of length at
// most `degree`, coefficients uniform nonzero in `field`, paired with a
// sum-of-products circuit computing it.
std::pair<Circuit, SparseNCPoly> gen_random_instance(std::uint32_t nvars, std::uint32_t degree,
                                                     std::uint32_t terms, std::uint64_t seed,
                                                     const PrimeField& field);

// Circuit computing the identically-zero polynomial: g + (-1) * g' where g'
// recomputes g's polynomial from a shuffled, re-associated plus-tree.
// Verified zero by expansion at construction.
Circuit gen_zero_circuit(std::uint32_t nvars, std::uint32_t size_hint, std::uint64_t seed);

}  // namespace ncpit
