#include "deza/sieve.hpp"

#include <cstdlib>
#include <numeric>

namespace deza {

namespace {

using i64 = std::int64_t;

std::string tuple_text(std::initializer_list<i64> xs) {
  std::string out = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + ")";
}

std::string fraction_text(i64 num, i64 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

class TraceBuilder {
 public:
  void add(std::string id, bool ok, std::string witness, bool warning = false) {
    v_.trace.push_back({std::move(id), ok ? RuleStatus::pass : RuleStatus::fail,
                        std::move(witness), warning});
    if (!ok) v_.feasible = false;
  }
  void skip(std::string id, std::string why) {
    v_.trace.push_back({std::move(id), RuleStatus::skipped, std::move(why), false});
  }
  SieveVerdict done() && { return std::move(v_); }

 private:
  SieveVerdict v_;
};

// d = c^2 s, s squarefree; d = 0 gives c = 0, s = 1.
std::pair<i64, i64> split_square(i64 d) {
  if (d == 0) return {0, 1};
  i64 c = 1;
  i64 s = 1;
  i64 rest = d;
  for (i64 p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      c *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      s *= p;
    }
  }
  return {c, s * rest};
}

}  // namespace

const RuleOutcome* SieveVerdict::first_failure() const {
  for (const auto& r : trace) {
    if (r.status == RuleStatus::fail) return &r;
  }
  return nullptr;
}

const RuleOutcome* SieveVerdict::rule(const std::string& id) const {
  for (const auto& r : trace) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

bool SieveVerdict::failed(const std::string& id) const {
  auto r = rule(id);
  return r && r->status == RuleStatus::fail;
}

std::string SieveVerdict::summary() const {
  if (feasible) return "feasible";
  auto f = first_failure();
  return "infeasible: " + f->id + " " + f->witness;
}

bool quadratic_residue(std::int64_t c, std::int64_t n) {
  if (n < 1) throw SieveError("modulus must be positive");
  auto target = ((c % n) + n) % n;
  for (i64 x = 0; x < n; ++x) {
    if ((x * x) % n == target) return true;
  }
  return false;
}

std::optional<Multiplicities> solve_multiplicities(i64 v, i64 k, i64 l1, i64 l2,
                                                   i64 m, i64 n) {
  const i64 d1 = k - l1;
  const i64 d2 = k * k - l2 * v;
  if (d1 < 0 || d2 < 0) return std::nullopt;
  const auto [c1, s1] = split_square(d1);
  const auto [c2, s2] = split_square(d2);
  const bool proper = m > 1 && n > 1 && l1 != l2;

  // Y needed so that k + X c1 sqrt(s1) + Y c2 sqrt(s2) = 0, for a given X.
  // Returns {solvable, y, y_free}.
  struct Need {
    bool ok;
    i64 y;
    bool free;
  };
  auto need_y = [&](i64 x) -> Need {
    i64 rational = k;
    i64 other = 0;  // coefficient on sqrt(s1) when s1 != 1
    if (s1 == 1) {
      rational += x * c1;
    } else {
      other = x * c1;
    }
    if (c2 == 0) {
      return {rational == 0 && other == 0, 0, true};
    }
    if (s2 == 1) {
      if (other != 0 || rational % c2 != 0) return {false, 0, false};
      return {true, -rational / c2, false};
    }
    if (s2 == s1) {
      if (rational != 0 || other % c2 != 0) return {false, 0, false};
      return {true, -other / c2, false};
    }
    return {rational == 0 && other == 0, 0, false};
  };

  if (proper) {
    const i64 fsum = m * (n - 1);
    const i64 gsum = m - 1;
    for (i64 x = -fsum; x <= fsum; x += 2) {
      auto need = need_y(x);
      if (!need.ok) continue;
      i64 y = need.free ? -gsum : need.y;
      if (need.free || (std::llabs(y) <= gsum && (gsum - y) % 2 == 0)) {
        return Multiplicities{(fsum + x) / 2, (fsum - x) / 2, (gsum + y) / 2,
                              (gsum - y) / 2};
      }
    }
    return std::nullopt;
  }

  const i64 total = v - 1;
  for (i64 x = -total; x <= total; ++x) {
    auto need = need_y(x);
    if (!need.ok) continue;
    const i64 rest = total - std::llabs(x);
    if (need.free) {
      // Any y with |y| <= rest and x + y = total (mod 2).
      i64 y = rest % 2 == 0 ? 0 : 1;
      if (std::llabs(y) > rest) continue;
      i64 g = std::llabs(y);
      i64 f = total - g;
      return Multiplicities{(f + x) / 2, (f - x) / 2, (g + y) / 2, (g - y) / 2};
    }
    const i64 y = need.y;
    if (std::llabs(y) > rest || ((x + y - total) % 2) != 0) continue;
    i64 g = std::llabs(y);
    i64 f = total - g;
    return Multiplicities{(f + x) / 2, (f - x) / 2, (g + y) / 2, (g - y) / 2};
  }
  return std::nullopt;
}

SieveVerdict deza_sieve(i64 v, i64 k, i64 b, i64 a) {
  if (!(0 <= a && a <= b && b <= k && k < v)) {
    throw SieveError("Deza tuple must satisfy 0 <= a <= b <= k < v, got " +
                     tuple_text({v, k, b, a}));
  }
  TraceBuilder t;
  t.add("R1", (v * k) % 2 == 0, "v*k=" + std::to_string(v * k));

  if (b == a) {
    t.skip("R2", "beta undefined for b=a");
  } else {
    const i64 num = k * (k - 1) - a * (v - 1);
    const i64 den = b - a;
    const bool integral = num % den == 0;
    const bool in_range = integral && num / den > 0 && num / den <= v - 1;
    t.add("R2", integral && in_range, "beta=" + fraction_text(num, den));
  }

  t.add("R3", b != a, "b=" + std::to_string(b) + " a=" + std::to_string(a));

  if (v > k + 1) {
    t.add("R4", v >= 2 * k - b + 2,
          "v=" + std::to_string(v) + " 2k-b+2=" + std::to_string(2 * k - b + 2));
  } else {
    t.skip("R4", "complete graph: no non-adjacent pair");
  }

  // v < k + 3 + 6/(k-3)  <=>  v(k-3) < (k+3)(k-3) + 6
  if (b == k - 2 && a == k - 3 && a > 0) {
    const i64 lhs = v * (k - 3);
    const i64 rhs = (k + 3) * (k - 3) + 6;
    t.add("R5", lhs < rhs,
          "v=" + std::to_string(v) + " bound=" + fraction_text(rhs, k - 3));
  } else {
    t.skip("R5", "needs b=k-2, a=k-3>0");
  }

  // v < k + 4 + 12/(k-4)  <=>  v(k-4) < (k+4)(k-4) + 12
  if (b == k - 2 && a == k - 4 && a > 0) {
    const i64 lhs = v * (k - 4);
    const i64 rhs = (k + 4) * (k - 4) + 12;
    t.add("R6", lhs < rhs,
          "v=" + std::to_string(v) + " bound=" + fraction_text(rhs, k - 4));
  } else {
    t.skip("R6", "needs b=k-2, a=k-4>0");
  }
  return std::move(t).done();
}

SieveVerdict ddg_sieve(i64 v, i64 k, i64 l1, i64 l2, i64 m, i64 n) {
  if (v <= 0 || k <= 0 || m <= 0 || n <= 0 || l1 < 0 || l2 < 0 || l1 > k ||
      l2 > k || k >= v) {
    throw SieveError("malformed DDG tuple " + tuple_text({v, k, l1, l2, m, n}));
  }
  TraceBuilder t;
  t.add("D1", v == m * n, "m*n=" + std::to_string(m * n));

  const i64 rhs = k + l1 * (n - 1) + l2 * n * (m - 1);
  t.add("D2", k * k == rhs,
        "k^2=" + std::to_string(k * k) + " k+l1(n-1)+l2n(m-1)=" + std::to_string(rhs));

  const i64 d1 = k - l1;
  const i64 d2 = k * k - l2 * v;
  t.add("D3", d1 >= 0 && d2 >= 0,
        "k-l1=" + std::to_string(d1) + " k^2-l2v=" + std::to_string(d2));

  if (auto mult = solve_multiplicities(v, k, l1, l2, m, n)) {
    t.add("D4", true,
          "f1=" + std::to_string(mult->f1) + " f2=" + std::to_string(mult->f2) +
              " g1=" + std::to_string(mult->g1) + " g2=" + std::to_string(mult->g2));
  } else {
    t.add("D4", false, "no nonnegative integer multiplicities");
  }

  const i64 km2 = k - 2;
  if (k >= 2 && (l1 == km2 || l2 == km2)) {
    if (l1 == km2) {
      t.add("D5", true, "l1=k-2");
    } else if (l1 > l2) {
      t.skip("D5", "k-2 is the smaller count");
    } else if (d2 > 0) {
      t.add("D5", false, "l2=k-2 with k^2-l2v=" + std::to_string(d2) + ">0");
    } else if (d2 == 0) {
      t.add("D5", true, "l2=k-2 with k^2=l2v (degenerate eigenvalue 0)", true);
    } else {
      t.add("D5", false, "k^2-l2v<0");
    }
  } else {
    t.skip("D5", "k-2 not in {l1,l2}");
  }

  if (l1 == km2) {
    const i64 target = k * k - 2;
    t.add("D6", target % n == 0,
          "n=" + std::to_string(n) + " k^2-2=" + std::to_string(target));
    t.add("D7", quadratic_residue(2, n),
          "2 " + std::string(quadratic_residue(2, n) ? "is" : "is not") +
              " a square mod " + std::to_string(n));
    if (n == 2) {
      t.add("D8", l2 == 0, "n=2 l2=" + std::to_string(l2));
    } else {
      t.skip("D8", "n!=2");
    }
  } else {
    t.skip("D6", "l1!=k-2");
    t.skip("D7", "l1!=k-2");
    t.skip("D8", "l1!=k-2");
  }
  return std::move(t).done();
}

std::vector<std::string> scan_families() {
  return {"deza-b=k-2", "ddg-n2", "ddg-n3456"};
}

ScanResult sieve_scan(const std::string& family, std::int64_t max) {
  ScanResult out;
  out.family = family;
  out.max = max;
  auto record = [&out](std::vector<i64> tuple, SieveVerdict verdict) {
    ++out.scanned;
    if (verdict.feasible) {
      ++out.feasible;
      out.survivors.push_back({std::move(tuple), std::move(verdict)});
    }
  };
  if (family == "deza-b=k-2") {
    for (i64 v = 4; v <= max; ++v) {
      for (i64 k = 3; k < v; ++k) {
        for (i64 a = 0; a < k - 2; ++a) {
          record({v, k, k - 2, a}, deza_sieve(v, k, k - 2, a));
        }
      }
    }
  } else if (family == "ddg-n2") {
    for (i64 k = 2; k <= max; ++k) {
      for (i64 a = 1; a <= k; ++a) {
        for (i64 m = std::max<i64>(2, k / 2 + 1); 2 * m <= k * k + 2; ++m) {
          record({2 * m, k, k - 2, a, m, 2}, ddg_sieve(2 * m, k, k - 2, a, m, 2));
        }
      }
    }
  } else if (family == "ddg-n3456") {
    for (i64 n = 3; n <= 6; ++n) {
      for (i64 k = 2; k <= max; ++k) {
        for (i64 l2 = 0; l2 <= k; ++l2) {
          for (i64 m = 1; m * n <= 4 * max; ++m) {
            if (m * n <= k) continue;
            record({m * n, k, k - 2, l2, m, n}, ddg_sieve(m * n, k, k - 2, l2, m, n));
          }
        }
      }
    }
  } else {
    throw SieveError("unknown scan family '" + family + "'");
  }
  return out;
}

}  // namespace deza
