#include "deza/spectra.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/integer.hpp>

namespace deza {

IntPolynomial char_poly(const Graph& g) {
  const auto n = g.order();
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (std::size_t i = 0; i < n; ++i) nbrs[i] = g.neighbours(i);

  using Matrix = std::vector<std::vector<BigInt>>;
  auto times_adjacency = [&](const Matrix& m) {
    Matrix out(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (auto l : nbrs[i]) {
        for (std::size_t j = 0; j < n; ++j) out[i][j] += m[l][j];
      }
    }
    return out;
  };

  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t step = 1; step <= n; ++step) {
    m = times_adjacency(m);
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - step + 1];
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (auto l : nbrs[i]) trace += m[l][i];
    }
    if (trace % step != 0) {
      throw InvariantViolation("inexact Faddeev-LeVerrier division");
    }
    c[n - step] = -trace / step;
  }
  return IntPolynomial(std::move(c));
}

std::string EigenFactor::describe() const {
  std::string root = kind == Kind::integer ? value.str() : "+-sqrt(" + value.str() + ")";
  return root + "^" + std::to_string(multiplicity);
}

bool FactoredSpectrum::resolved() const {
  return residual.degree() == 0 && residual.coefficient(0) == 1;
}

std::string FactoredSpectrum::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ", ";
    out += factors[i].describe();
  }
  out += "}";
  if (!resolved()) out += " residual " + residual.to_string();
  return out;
}

namespace {

std::size_t strip_root(IntPolynomial& p, const BigInt& r) {
  std::size_t count = 0;
  while (p.degree() >= 1 && p.divide_by_root(r)) ++count;
  return count;
}

std::size_t strip_quadratic(IntPolynomial& p, const BigInt& d) {
  std::size_t count = 0;
  while (p.degree() >= 2 && p.divide_by_quadratic(d)) ++count;
  return count;
}

bool is_square(const BigInt& d, BigInt& root) {
  if (d < 0) return false;
  root = boost::multiprecision::sqrt(d);
  return root * root == d;
}

}  // namespace

FactoredSpectrum factor_spectrum(IntPolynomial p, std::size_t bound) {
  FactoredSpectrum out;
  const auto b = static_cast<long long>(bound);
  for (long long r = b; r >= -b; --r) {
    if (auto e = strip_root(p, r)) {
      out.factors.push_back({EigenFactor::Kind::integer, BigInt(r), e});
    }
  }
  for (long long d = b * b; d >= 2; --d) {
    BigInt root;
    if (is_square(d, root)) continue;
    if (auto e = strip_quadratic(p, d)) {
      out.factors.push_back({EigenFactor::Kind::surd_pair, BigInt(d), e});
    }
  }
  out.residual = std::move(p);
  return out;
}

FactoredSpectrum graph_spectrum(const Graph& g) {
  std::size_t bound = 0;
  for (std::size_t u = 0; u < g.order(); ++u) bound = std::max(bound, g.degree(u));
  return factor_spectrum(char_poly(g), bound);
}

std::pair<BigInt, BigInt> squarefree_decomposition(const BigInt& d) {
  BigInt rest = d;
  BigInt c = 1;
  BigInt s = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      c *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      s *= p;
    }
  }
  s *= rest;
  return {c, s};
}

bool surd_sum_is_zero(const BigInt& rational,
                      const std::vector<std::pair<BigInt, BigInt>>& terms) {
  std::map<BigInt, BigInt> by_radical;
  by_radical[1] += rational;
  for (const auto& [coeff, radicand] : terms) {
    if (radicand == 0 || coeff == 0) continue;
    auto [c, s] = squarefree_decomposition(radicand);
    by_radical[s] += coeff * c;
  }
  return std::ranges::all_of(by_radical, [](const auto& kv) { return kv.second == 0; });
}

Spectrum ddg_spectrum_check(const Graph& g, const DdgResult& ddg) {
  const auto& p = ddg.params;
  Spectrum s;
  s.charpoly = char_poly(g);
  s.factored = factor_spectrum(s.charpoly, p.k);
  s.d1 = BigInt(p.k) - BigInt(p.lambda1);
  s.d2 = BigInt(p.k) * p.k - BigInt(p.lambda2) * p.v;
  if (s.d1 < 0 || s.d2 < 0) {
    throw SpectrumMismatch("negative radicand: DDG eigenvalues would not be real",
                           s.charpoly);
  }

  IntPolynomial rest = s.charpoly;
  if (!rest.divide_by_root(BigInt(p.k))) {
    throw SpectrumMismatch("k is not an eigenvalue", rest);
  }

  auto count_block = [&rest](const BigInt& d, std::size_t& plus, std::size_t& minus) {
    BigInt root;
    if (d == 0) {
      plus = strip_root(rest, 0);
      minus = 0;
    } else if (is_square(d, root)) {
      plus = strip_root(rest, root);
      minus = strip_root(rest, -root);
    } else {
      plus = minus = strip_quadratic(rest, d);
    }
  };
  s.coincident = s.d1 == s.d2;
  s.d2_zero = s.d2 == 0;
  count_block(s.d1, s.f1, s.f2);
  if (!s.coincident) count_block(s.d2, s.g1, s.g2);

  if (!(rest.degree() == 0 && rest.coefficient(0) == 1)) {
    throw SpectrumMismatch("characteristic polynomial has a factor outside "
                           "{x - k, x^2 - (k - l1), x^2 - (k^2 - l2 v)}: " +
                               rest.to_string(),
                           rest);
  }

  s.block_sizes_match = !s.coincident && s.f1 + s.f2 == p.m * (p.n - 1) &&
                        s.g1 + s.g2 == p.m - 1;

  auto diff = [](std::size_t a, std::size_t b) {
    return BigInt(static_cast<long long>(a) - static_cast<long long>(b));
  };
  s.balance_holds = surd_sum_is_zero(
      BigInt(p.k), {{diff(s.f1, s.f2), s.d1}, {diff(s.g1, s.g2), s.d2}});

  auto term = [](std::size_t a, std::size_t b, const BigInt& d) -> std::string {
    if (d == 0) return "0";
    std::string coeff = "(" + std::to_string(a) + "-" + std::to_string(b) + ")";
    BigInt root;
    if (is_square(d, root)) return coeff + "*" + root.str();
    return coeff + "*sqrt(" + d.str() + ")";
  };
  s.balance = std::to_string(p.k) + " + " + term(s.f1, s.f2, s.d1) + " + " +
              (s.coincident ? std::string("0") : term(s.g1, s.g2, s.d2)) +
              (s.balance_holds ? " = 0" : " != 0");
  if (!s.balance_holds) {
    throw SpectrumMismatch("multiplicity balance fails: " + s.balance, rest);
  }
  return s;
}

A2Check a2_identity_check(const Graph& g, const DdgResult& ddg) {
  validate_partition(g.order(), ddg.partition);
  const auto& p = ddg.params;
  if (ddg.partition.size() < 2 || ddg.partition[0].size() < 2) {
    throw std::invalid_argument(
        "A^2 identity inapplicable: both lambdas need m > 1 and n > 1");
  }
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t i = 0; i < ddg.partition.size(); ++i) {
    for (auto x : ddg.partition[i]) class_of[x] = i;
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i; j < g.order(); ++j) {
      std::size_t actual = i == j ? g.degree(i) : g.common_neighbours(i, j);
      std::size_t expected =
          i == j ? p.k : (class_of[i] == class_of[j] ? p.lambda1 : p.lambda2);
      if (actual != expected) {
        return A2Check{false, A2Violation{i, j, expected, actual}};
      }
    }
  }
  return A2Check{true, std::nullopt};
}

}  // namespace deza
