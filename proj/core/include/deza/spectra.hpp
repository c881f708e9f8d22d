#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deza/ddg.hpp"
#include "deza/graph.hpp"
#include "deza/polynomial.hpp"

namespace deza {

/// Exact characteristic polynomial det(xI - A) by Faddeev-LeVerrier over
/// arbitrary-precision integers (every division is checked to be exact).
IntPolynomial char_poly(const Graph& g);

struct EigenFactor {
  enum class Kind { integer, surd_pair };
  Kind kind = Kind::integer;
  /// Root r for integer factors; d for the pair of roots +-sqrt(d).
  BigInt value;
  std::size_t multiplicity = 0;

  std::string describe() const;
  friend bool operator==(const EigenFactor&, const EigenFactor&) = default;
};

/// Charpoly split into (x - r)^e and (x^2 - d)^e factors plus whatever is
/// left over (constant 1 when the spectrum is fully resolved).
struct FactoredSpectrum {
  std::vector<EigenFactor> factors;
  IntPolynomial residual;

  bool resolved() const;
  std::string describe() const;
};

/// Integer roots are searched in [-bound, bound], surds d in [2, bound^2].
FactoredSpectrum factor_spectrum(IntPolynomial p, std::size_t bound);

/// Factored spectrum of a graph, bounded by its maximum degree.
FactoredSpectrum graph_spectrum(const Graph& g);

/// Spectrum of a DDG resolved into {k, +-sqrt(k - l1), +-sqrt(k^2 - l2 v)}.
///
/// When one of the radicands is a perfect square its two roots are counted
/// independently; when it is zero, the eigenvalue 0 is counted in the
/// "plus" slot (f1 or g1) and the "minus" slot stays 0.
struct Spectrum {
  IntPolynomial charpoly;
  FactoredSpectrum factored;
  BigInt d1;  // k - lambda1
  BigInt d2;  // k^2 - lambda2 v
  std::size_t f1 = 0, f2 = 0, g1 = 0, g2 = 0;
  /// d1 == d2: all non-principal eigenvalues are counted in f1/f2.
  bool coincident = false;
  bool d2_zero = false;
  /// f1+f2 == m(n-1) and g1+g2 == m-1 (meaningful when !coincident).
  bool block_sizes_match = false;
  bool balance_holds = false;
  /// k + (f1-f2)sqrt(d1) + (g1-g2)sqrt(d2), e.g. "4 + (1-3)*2 + 0 = 0".
  std::string balance;
};

class SpectrumMismatch : public std::runtime_error {
 public:
  SpectrumMismatch(const std::string& what, IntPolynomial residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const IntPolynomial& residual() const noexcept { return residual_; }

 private:
  IntPolynomial residual_;
};

/// Throws SpectrumMismatch naming the residual factor when the charpoly has
/// roots outside the allowed set, or when the multiplicity balance fails.
Spectrum ddg_spectrum_check(const Graph& g, const DdgResult& ddg);

struct A2Violation {
  std::size_t row = 0, col = 0;
  std::size_t expected = 0, actual = 0;
};

struct A2Check {
  bool holds = false;
  std::optional<A2Violation> violation;
};

/// Entrywise A^2 = kI + l1(C - I) + l2(J - C) with C the class indicator.
/// Throws std::invalid_argument for a partition with m = 1 or n = 1 (one of
/// the lambdas is undefined there).
A2Check a2_identity_check(const Graph& g, const DdgResult& ddg);

/// Exact test of sum_i coeff_i * sqrt(radicand_i) + rational == 0.
bool surd_sum_is_zero(const BigInt& rational,
                      const std::vector<std::pair<BigInt, BigInt>>& terms);

/// d = c^2 * s with s squarefree; returns {c, s}. Requires d > 0.
std::pair<BigInt, BigInt> squarefree_decomposition(const BigInt& d);

}  // namespace deza
