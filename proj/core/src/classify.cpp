#include "deza/classify.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "deza/canonical.hpp"

namespace deza {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const DezaParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
         std::to_string(p.b) + "," + std::to_string(p.a) + ")";
}

std::string to_string(const SrgParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

std::size_t common_neighbor_count(const Graph& g, std::size_t u,
                                  std::size_t w) {
  if (u >= g.order() || w >= g.order()) {
    throw GraphError("vertex out of range");
  }
  if (u == w) throw GraphError("common neighbour count of a vertex with itself");
  return g.common_neighbours(u, w);
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

ClassificationReport classify(const Graph& g) {
  ClassificationReport r;
  const auto n = g.order();
  r.v = n;
  r.connected = is_connected(g);
  r.diameter = diameter(g);

  auto degs = g.degrees();
  if (n > 0 && std::ranges::all_of(degs, [&](auto d) { return d == degs[0]; })) {
    r.regular = degs[0];
  }

  std::set<std::size_t> values;
  std::set<std::size_t> adjacent_values;
  std::set<std::size_t> non_adjacent_values;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      auto c = g.common_neighbours(u, w);
      values.insert(c);
      (g.adjacent(u, w) ? adjacent_values : non_adjacent_values).insert(c);
    }
  }
  r.common_values.assign(values.begin(), values.end());

  if (n >= 2 && non_adjacent_values.empty()) r.degenerate = Degenerate::complete;
  if (n >= 2 && adjacent_values.empty()) r.degenerate = Degenerate::edgeless;

  if (r.regular && values.size() == 2) {
    DezaParams p{n, *r.regular, r.common_values[1], r.common_values[0]};
    r.deza = p;
    std::size_t alpha = 0;
    std::size_t beta = 0;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t ax = 0;
      std::size_t bx = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        (g.common_neighbours(x, y) == p.b ? bx : ax) += 1;
      }
      if (x == 0) {
        alpha = ax;
        beta = bx;
      } else if (ax != alpha || bx != beta) {
        throw InvariantViolation("beta(x) is not constant on a Deza graph");
      }
    }
    r.alpha = alpha;
    r.beta = beta;
  }

  if (r.regular && r.degenerate == Degenerate::none &&
      adjacent_values.size() == 1 && non_adjacent_values.size() == 1) {
    r.srg = SrgParams{n, *r.regular, *adjacent_values.begin(),
                      *non_adjacent_values.begin()};
  }

  r.strictly_deza = r.deza && !r.srg && r.diameter == std::size_t{2};

  if (r.connected && n >= 2) {
    std::set<std::size_t> nonzero(values);
    nonzero.erase(0);
    if (nonzero.size() == 1) r.zero_lambda = *nonzero.begin();
  }
  return r;
}

Rational beta_formula(long long v, long long k, long long b, long long a) {
  if (b == a) throw std::invalid_argument("degenerate Deza parameters: b = a");
  return Rational(k * (k - 1) - a * (v - 1), b - a);
}

ZeroLambdaAudit zero_lambda_audit(const Graph& g) {
  auto report = classify(g);
  if (!report.zero_lambda) {
    throw std::invalid_argument("not a (0,lambda)-graph");
  }
  ZeroLambdaAudit a;
  a.lambda = *report.zero_lambda;
  a.v = report.v;
  a.k = report.regular;
  a.diameter = report.diameter.value_or(0);
  a.bounds_applicable = a.lambda >= 2 && a.k.has_value();
  if (!a.bounds_applicable) return a;

  const auto k = *a.k;
  const bool huge = k >= 63;
  const std::size_t two_k = huge ? std::numeric_limits<std::size_t>::max()
                                 : (std::size_t{1} << k);
  a.vertex_bound_holds = a.v <= two_k;
  a.vertex_bound_equality = a.v == two_k;
  a.diameter_bound_holds = a.diameter <= k;
  a.diameter_bound_equality = a.diameter == k;
  if (a.vertex_bound_equality || a.diameter_bound_equality) {
    bool cube = false;
    if (!huge && two_k == a.v) cube = isomorphic(g, hypercube(k));
    a.hypercube_confirmed = cube;
  }
  return a;
}

}  // namespace deza
