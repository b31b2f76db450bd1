#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncpit/commpoly.hpp"
#include "ncpit/error.hpp"
#include "ncpit/field.hpp"
#include "ncpit/matrix.hpp"
#include "ncpit/rng.hpp"

namespace ncpit {

// Variable-id scheme for the substitution NFA's commuting variables:
// block variables xi_1..xi_{K+1} (self-loop labels) and index variables
// y_{b,1}..y_{b,K} (the b-labeled step into the next block). Ids sort all
// xi before y0 before y1.
namespace nfavars {

inline constexpr VarId kY0Base = VarId(1) << 20;
inline constexpr VarId kY1Base = VarId(2) << 20;

inline VarId xi(std::uint32_t j) { return j; }                    // j in [1, K+1]
inline VarId y(std::uint32_t bit, std::uint32_t j) {              // j in [1, K]
  return (bit == 0 ? kY0Base : kY1Base) + j;
}

std::string name(VarId v);                 // "xi3", "y02", ...
VarId resolve(std::string_view name);
const VarNames& names();

}  // namespace nfavars

// Values plugged into the transition matrices: K+1 block values and 2K
// index values (3K+1 in total).
template <typename ElemT>
struct Assignment {
  std::uint32_t k = 0;
  std::vector<ElemT> xi;  // size K+1, xi[j-1] = xi_j
  std::vector<ElemT> y0;  // size K,   y0[j-1] = y_{0,j}
  std::vector<ElemT> y1;  // size K,   y1[j-1] = y_{1,j}
};

// The pair (M_x0, M_x1): (K+1)x(K+1) upper-bidiagonal matrices sharing the
// xi diagonal; the superdiagonal carries y_{0,.} resp. y_{1,.}.
template <Ring R>
struct SubstitutionMatrices {
  Matrix<R> mx0;
  Matrix<R> mx1;
};

template <Ring R>
SubstitutionMatrices<R> build_substitution_matrices(const R& ring,
                                                    const Assignment<typename R::Elem>& a) {
  const std::uint32_t dim = a.k + 1;
  if (a.xi.size() != dim || a.y0.size() != a.k || a.y1.size() != a.k)
    fail(Errc::Config, "substitution assignment has wrong arity");
  Matrix<R> m0(ring, dim), m1(ring, dim);
  for (std::uint32_t j = 0; j < dim; ++j) {
    m0.at(j, j) = a.xi[j];
    m1.at(j, j) = a.xi[j];
    if (j + 1 < dim) {
      m0.at(j, j + 1) = a.y0[j];
      m1.at(j, j + 1) = a.y1[j];
    }
  }
  return {std::move(m0), std::move(m1)};
}

// Uniform random assignment; sampling order xi_1..xi_{K+1}, y_{0,1..K},
// y_{1,1..K} is part of the replay contract.
template <typename F>
Assignment<typename F::Elem> random_assignment(std::uint32_t k, const F& field, Rng& rng) {
  Assignment<typename F::Elem> a;
  a.k = k;
  a.xi.reserve(k + 1);
  for (std::uint32_t j = 0; j <= k; ++j) a.xi.push_back(field.sample(rng));
  a.y0.reserve(k);
  for (std::uint32_t j = 0; j < k; ++j) a.y0.push_back(field.sample(rng));
  a.y1.reserve(k);
  for (std::uint32_t j = 0; j < k; ++j) a.y1.push_back(field.sample(rng));
  return a;
}

// Fresh commuting indeterminates, one per slot (3K+1 distinct variables).
Assignment<CommPoly> symbolic_assignment(std::uint32_t k);

// Encoded matrices N_i = M_x0 * M_x1^i * M_x0 for i in [1, n]: feeding these
// to a black box over z-variables realizes the bivariate encoding without
// rewriting the circuit (evaluation is a homomorphism).
template <Ring R>
std::vector<Matrix<R>> encoded_variable_matrices(const R& ring, const SubstitutionMatrices<R>& sm,
                                                 std::uint32_t nvars) {
  if (nvars < 1) fail(Errc::Config, "encoded_variable_matrices: nvars must be >= 1");
  std::vector<Matrix<R>> out;
  out.reserve(nvars);
  for (std::uint32_t i = 1; i <= nvars; ++i) {
    Matrix<R> mid = mat_pow(ring, sm.mx1, i);
    out.push_back(mat_mul(ring, mat_mul(ring, sm.mx0, mid), sm.mx0));
  }
  return out;
}

}  // namespace ncpit
