#include "deza/ddg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace deza {

std::string to_string(const DdgParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda1) + "," + std::to_string(p.lambda2) + "," +
         std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

void validate_partition(std::size_t order, const VertexPartition& partition) {
  std::vector<char> seen(order, 0);
  std::size_t covered = 0;
  for (const auto& cls : partition) {
    if (cls.empty()) throw std::invalid_argument("empty class in partition");
    for (auto x : cls) {
      if (x >= order) throw std::invalid_argument("partition vertex out of range");
      if (seen[x]) {
        throw std::invalid_argument("vertex " + std::to_string(x) +
                                    " appears in two classes");
      }
      seen[x] = 1;
      ++covered;
    }
  }
  if (covered != order) {
    throw std::invalid_argument("partition does not cover every vertex");
  }
}

namespace {

VertexPartition normalized(VertexPartition p) {
  for (auto& cls : p) std::ranges::sort(cls);
  std::ranges::sort(p, [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return p;
}

}  // namespace

std::optional<VertexPartition> count_relation_classes(const Graph& g,
                                                      std::size_t c) {
  const auto n = g.order();
  std::vector<std::size_t> class_of(n, n);
  VertexPartition classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of[x] != n) continue;
    std::vector<std::size_t> cls{x};
    for (std::size_t y = x + 1; y < n; ++y) {
      if (g.common_neighbours(x, y) == c) cls.push_back(y);
    }
    for (auto y : cls) {
      if (class_of[y] != n) return std::nullopt;
      class_of[y] = classes.size();
    }
    classes.push_back(std::move(cls));
  }
  // Transitivity: every pair inside a class must be related, and no pair
  // across classes may be.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool related = g.common_neighbours(x, y) == c;
      if (related != (class_of[x] == class_of[y])) return std::nullopt;
    }
  }
  return classes;
}

std::optional<DdgResult> ddg_from_partition(const Graph& g,
                                            const VertexPartition& partition) {
  validate_partition(g.order(), partition);
  const auto n = g.order();
  if (n == 0) return std::nullopt;
  const auto k = g.degree(0);
  for (std::size_t x = 1; x < n; ++x) {
    if (g.degree(x) != k) return std::nullopt;
  }
  const auto size = partition[0].size();
  for (const auto& cls : partition) {
    if (cls.size() != size) return std::nullopt;
  }
  std::vector<std::size_t> class_of(n);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (auto x : partition[i]) class_of[x] = i;
  }
  std::optional<std::size_t> same;
  std::optional<std::size_t> cross;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      auto c = g.common_neighbours(x, y);
      auto& slot = class_of[x] == class_of[y] ? same : cross;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        return std::nullopt;
      }
    }
  }
  DdgResult r;
  r.partition = normalized(partition);
  r.params = DdgParams{n, k, same.value_or(0), cross.value_or(0),
                       partition.size(), size};
  r.proper = r.params.m > 1 && r.params.n > 1 && same && cross && *same != *cross;
  auto eq = equitable_check(g, r.partition);
  if (eq.quotient) r.quotient = *eq.quotient;
  return r;
}

DdgDetection ddg_detect(const Graph& g) {
  DdgDetection out;
  auto report = classify(g);
  if (!report.regular) return out;
  if (report.common_values.size() == 1) {
    const auto lambda = report.common_values[0];
    out.improper.push_back({ImproperForm::Kind::single_class, lambda});
    out.improper.push_back({ImproperForm::Kind::singletons, lambda});
    return out;
  }
  if (!report.deza) return out;
  for (auto c : {report.deza->b, report.deza->a}) {
    auto classes = count_relation_classes(g, c);
    if (!classes) continue;
    auto r = ddg_from_partition(g, *classes);
    if (r && r->proper) {
      if (!r->quotient.size()) {
        throw InvariantViolation("canonical partition of a proper DDG is not equitable");
      }
      out.proper = std::move(r);
      break;
    }
  }
  return out;
}

VertexPartition rho_closure_shortcut(const Graph& g, const DezaParams& deza) {
  const auto v = static_cast<long long>(deza.v);
  const auto k = static_cast<long long>(deza.k);
  const auto b = static_cast<long long>(deza.b);
  const auto a = static_cast<long long>(deza.a);
  const bool beta_one = b != a && beta_formula(v, k, b, a) == Rational(1);
  if (!(a < 2 * b - k) && !beta_one) {
    throw std::invalid_argument("shortcut inapplicable: a >= 2b - k and beta != 1");
  }
  auto classes = count_relation_classes(g, deza.b);
  if (!classes) {
    throw InvariantViolation("b-relation is not an equivalence although a < 2b - k");
  }
  return normalized(*classes);
}

EquitableResult equitable_check(const Graph& g,
                                const VertexPartition& partition) {
  validate_partition(g.order(), partition);
  const auto m = partition.size();
  const auto words = g.words_per_row();
  std::vector<std::vector<std::uint64_t>> masks(
      m, std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (auto x : partition[j]) masks[j][x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  auto count_into = [&](std::size_t x, std::size_t j) {
    auto r = g.row(x);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words; ++w) {
      c += static_cast<std::size_t>(std::popcount(r[w] & masks[j][w]));
    }
    return c;
  };
  QuotientMatrix q(m, std::vector<std::size_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      q[i][j] = count_into(partition[i][0], j);
      for (auto x : partition[i]) {
        if (count_into(x, j) != q[i][j]) {
          return EquitableResult{std::nullopt, std::pair{x, j}};
        }
      }
    }
  }
  return EquitableResult{std::move(q), std::nullopt};
}

std::vector<ClassAudit> class_audits(const Graph& g, const DdgResult& ddg) {
  validate_partition(g.order(), ddg.partition);
  std::vector<ClassAudit> out;
  const auto words = g.words_per_row();
  for (std::size_t i = 0; i < ddg.partition.size(); ++i) {
    const auto& cls = ddg.partition[i];
    std::vector<std::uint64_t> w(g.row(cls[0]).begin(), g.row(cls[0]).end());
    for (auto x : cls) {
      auto r = g.row(x);
      for (std::size_t t = 0; t < words; ++t) w[t] &= r[t];
    }
    ClassAudit a;
    a.class_id = i;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if ((w[x >> 6] >> (x & 63)) & 1U) a.common_neighbourhood.push_back(x);
    }
    a.w_size = a.common_neighbourhood.size();
    a.coclique = true;
    for (std::size_t s = 0; s < cls.size() && a.coclique; ++s) {
      for (std::size_t t = s + 1; t < cls.size(); ++t) {
        if (g.adjacent(cls[s], cls[t])) {
          a.coclique = false;
          break;
        }
      }
    }
    a.n_divides_w = a.w_size % cls.size() == 0;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace deza
