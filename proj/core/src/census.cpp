#include "deza/census.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "deza/graph6.hpp"

namespace deza {

namespace {

using Mask = std::uint64_t;

struct Partial {
  std::size_t n = 0;
  std::array<Mask, kGeneratorHardCap> adj{};
};

Graph to_graph(const Partial& p) {
  GraphBuilder b(p.n);
  for (std::size_t u = 0; u < p.n; ++u) {
    Mask higher = p.adj[u] & ~((Mask{2} << u) - 1);
    while (higher) {
      auto w = static_cast<std::size_t>(std::countr_zero(higher));
      higher &= higher - 1;
      b.add_edge(u, w);
    }
  }
  return std::move(b).build();
}

class SubsetOrbits {
 public:
  explicit SubsetOrbits(const std::vector<Mask>& subsets) : subsets_(subsets) {
    index_.reserve(subsets.size() * 2);
    parent_.resize(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      index_.emplace(subsets[i], i);
      parent_[i] = i;
    }
  }

  void apply(const Permutation& gen) {
    for (std::size_t i = 0; i < subsets_.size(); ++i) {
      Mask image = 0;
      Mask s = subsets_[i];
      while (s) {
        auto u = std::countr_zero(s);
        s &= s - 1;
        image |= Mask{1} << gen[static_cast<std::size_t>(u)];
      }
      auto it = index_.find(image);
      if (it == index_.end()) {
        throw InvariantViolation("subset orbit left the admissible subset family");
      }
      unite(i, it->second);
    }
  }

  bool representative(std::size_t i) { return find(i) == i; }

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

  const std::vector<Mask>& subsets_;
  std::unordered_map<Mask, std::size_t> index_;
  std::vector<std::size_t> parent_;
};

void for_each_combination(Mask pool, std::size_t size,
                          const std::function<void(Mask)>& f) {
  std::vector<std::size_t> items;
  for (Mask s = pool; s; s &= s - 1) {
    items.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  }
  if (size > items.size()) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << items[i];
    f(m);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == items.size() - size + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class Generator {
 public:
  Generator(std::size_t v, std::size_t k, const GenerateOptions& options)
      : v_(v), k_(k), options_(options) {}

  Partial root() const {
    Partial p;
    p.n = 1;
    return p;
  }

  void dfs(const Partial& p, const std::function<void(const Graph&)>& visit) const {
    if (p.n == v_) {
      visit(to_graph(p));
      return;
    }
    children(p, [&](const Partial& c) { dfs(c, visit); });
  }

  void frontier(const Partial& p, std::size_t level, std::vector<Partial>& out) const {
    if (p.n == level || p.n == v_) {
      out.push_back(p);
      return;
    }
    children(p, [&](const Partial& c) { frontier(c, level, out); });
  }

 private:
  std::size_t degree(const Partial& p, std::size_t u) const noexcept {
    return static_cast<std::size_t>(std::popcount(p.adj[u]));
  }

  // Pairs whose count changes when a vertex joined to s is added to p.
  bool common_ok(const Partial& p, std::size_t n, Mask s) const {
    const std::size_t bound = *options_.max_common;
    for (std::size_t u = 0; u < n; ++u) {
      if (static_cast<std::size_t>(std::popcount(p.adj[u] & s)) > bound) return false;
    }
    for (Mask x = s; x; x &= x - 1) {
      auto a = static_cast<std::size_t>(std::countr_zero(x));
      for (Mask y = x & (x - 1); y; y &= y - 1) {
        auto b = static_cast<std::size_t>(std::countr_zero(y));
        if (static_cast<std::size_t>(std::popcount(p.adj[a] & p.adj[b])) + 1 > bound) {
          return false;
        }
      }
    }
    return true;
  }

  // The new vertex must be the canonically chosen deletion vertex, up to
  // automorphisms of the child.
  bool accept(const Partial& c) const {
    const std::size_t n = c.n;
    const std::size_t w = n - 1;
    std::vector<std::uint64_t> inv(n);
    for (std::size_t u = 0; u < n; ++u) {
      std::uint64_t sum = 0;
      std::uint64_t tri = 0;
      for (Mask s = c.adj[u]; s; s &= s - 1) {
        auto x = static_cast<std::size_t>(std::countr_zero(s));
        sum += degree(c, x);
        tri += static_cast<std::uint64_t>(std::popcount(c.adj[u] & c.adj[x]));
      }
      inv[u] = (static_cast<std::uint64_t>(degree(c, u)) << 40) | (sum << 20) | tri;
    }
    const auto best = *std::max_element(inv.begin(), inv.end());
    if (inv[w] != best) return false;
    std::vector<std::size_t> top;
    for (std::size_t u = 0; u < n; ++u) {
      if (inv[u] == best) top.push_back(u);
    }
    if (top.size() == 1) return true;
    const auto form = canonical_form(to_graph(c));
    const auto pos = form.positions();
    std::size_t chosen = top.front();
    for (auto u : top) {
      if (pos[u] > pos[chosen]) chosen = u;
    }
    return form.orbit[w] == form.orbit[chosen];
  }

  void children(const Partial& p, const std::function<void(const Partial&)>& f) const {
    const std::size_t n = p.n;
    const std::size_t rest = v_ - n - 1;
    Mask open = 0;
    Mask must = 0;
    Mask single = 0;
    std::size_t total = 0;
    for (std::size_t u = 0; u < n; ++u) {
      const std::size_t d = k_ - degree(p, u);
      if (d > rest + 1) return;
      if (d == 0) continue;
      open |= Mask{1} << u;
      if (d == rest + 1) must |= Mask{1} << u;
      if (d == 1) single |= Mask{1} << u;
      total += d;
    }
    const auto open_count = static_cast<std::size_t>(std::popcount(open));
    const auto must_count = static_cast<std::size_t>(std::popcount(must));
    const std::size_t smin = std::max(must_count, k_ > rest ? k_ - rest : std::size_t{0});
    const std::size_t smax = std::min(k_, open_count);
    if (smin > smax) return;

    // Deficits after adding the vertex: total - s + (k - s) over the
    // existing vertices plus the new one; the remaining `rest` vertices
    // must absorb them and place the rest of their edges internally.
    auto feasible = [&](Mask s, std::size_t size) {
      if ((s & must) != must) return false;
      const std::size_t left = total - size + (k_ - size);
      if (left > k_ * rest) return false;
      const std::size_t internal = k_ * rest - left;
      if (internal % 2 != 0 || internal > rest * (rest == 0 ? 0 : rest - 1)) return false;
      if (rest > 0 && k_ + 1 > rest) {
        std::size_t still_open = open_count - static_cast<std::size_t>(std::popcount(s & single));
        if (k_ > size) ++still_open;
        if (still_open < k_ + 1 - rest) return false;
      }
      return true;
    };

    std::vector<Mask> subsets;
    Mask pool = open & ~must;
    for (std::size_t size = smin; size <= smax; ++size) {
      for_each_combination(pool, size - must_count, [&](Mask extra) {
        const Mask s = extra | must;
        if (!feasible(s, size)) return;
        if (options_.max_common && !common_ok(p, n, s)) return;
        subsets.push_back(s);
      });
    }
    if (subsets.empty()) return;

    std::vector<bool> rep(subsets.size(), true);
    if (n >= 2 && subsets.size() > 1) {
      const auto form = canonical_form(to_graph(p));
      if (!form.generators.empty()) {
        SubsetOrbits orbits(subsets);
        for (const auto& gen : form.generators) orbits.apply(gen);
        for (std::size_t i = 0; i < subsets.size(); ++i) rep[i] = orbits.representative(i);
      }
    }
    Partial c = p;
    c.n = n + 1;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (!rep[i]) continue;
      const Mask s = subsets[i];
      c.adj[n] = s;
      for (Mask x = s; x; x &= x - 1) c.adj[std::countr_zero(x)] |= Mask{1} << n;
      if ((!options_.keep || options_.keep(to_graph(c))) && accept(c)) f(c);
      for (Mask x = s; x; x &= x - 1) c.adj[std::countr_zero(x)] &= ~(Mask{1} << n);
    }
  }

  std::size_t v_, k_;
  const GenerateOptions& options_;
};

void check_generation_args(std::size_t v, std::size_t k) {
  if (v == 0) throw CensusError("vertex count must be positive");
  if (v > kGeneratorHardCap) {
    throw CensusError("v=" + std::to_string(v) + " exceeds the generator cap of " +
                      std::to_string(kGeneratorHardCap));
  }
  if (k >= v) {
    throw CensusError("degree k=" + std::to_string(k) + " must be below v=" +
                      std::to_string(v));
  }
  if ((v * k) % 2 != 0) {
    throw CensusError("no " + std::to_string(k) + "-regular graph on " +
                      std::to_string(v) + " vertices: v*k is odd");
  }
}

}  // namespace

GenerationLimits GenerationLimits::from_environment() {
  GenerationLimits limits;
  if (const char* env = std::getenv("DEZA_MAX_VERTICES"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (errno != 0 || *end != '\0' || value == 0) {
      throw CensusError(std::string("DEZA_MAX_VERTICES is not a positive integer: ") + env);
    }
    limits.max_vertices = std::min<std::size_t>(value, kGeneratorHardCap);
  }
  return limits;
}

bool GenerationLimits::desk_scale(std::size_t v, std::size_t k) noexcept {
  return v <= 10 || (v <= 14 && k <= 4);
}

void GenerationLimits::check(std::size_t v, std::size_t k) const {
  if (v > max_vertices) {
    throw CensusError("v=" + std::to_string(v) + " exceeds the generation limit of " +
                      std::to_string(max_vertices) + " vertices (DEZA_MAX_VERTICES)");
  }
  if (!long_run && !desk_scale(v, k)) {
    throw CensusError("(v,k)=(" + std::to_string(v) + "," + std::to_string(k) +
                      ") is beyond the desk-scale limit (all k for v<=10, k<=4 for "
                      "v<=14); pass --long to run it");
  }
}

void for_each_regular(std::size_t v, std::size_t k, const GenerateOptions& options,
                      const std::function<void(const Graph&)>& visit) {
  check_generation_args(v, k);
  Generator gen(v, k, options);
  gen.dfs(gen.root(), visit);
}

std::vector<Graph> generate_regular(std::size_t v, std::size_t k,
                                    const GenerateOptions& options) {
  check_generation_args(v, k);
  Generator gen(v, k, options);
  std::vector<Graph> out;
  if (options.jobs <= 1) {
    gen.dfs(gen.root(), [&](const Graph& g) { out.push_back(g); });
    return out;
  }

  std::vector<Partial> nodes;
  gen.frontier(gen.root(), std::min(v, std::max<std::size_t>(2, v / 2)), nodes);
  std::vector<std::vector<Graph>> results(nodes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < nodes.size(); i = next++) {
      gen.dfs(nodes[i], [&](const Graph& g) { results[i].push_back(g); });
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < options.jobs; ++t) pool.emplace_back(worker);
  pool.clear();
  for (auto& part : results) {
    for (auto& g : part) out.push_back(std::move(g));
  }
  return out;
}

std::optional<std::size_t> CensusFilter::Value::resolve(std::size_t k) const {
  if (!relative) return static_cast<std::size_t>(amount);
  if (static_cast<std::int64_t>(k) < amount) return std::nullopt;
  return k - static_cast<std::size_t>(amount);
}

namespace {

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, last - first + 1);
}

std::int64_t parse_count(const std::string& text, const std::string& term) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw CensusError("bad number '" + text + "' in filter term '" + term + "'");
  }
  return std::stoll(text);
}

constexpr const char* kFilterTerms =
    "connected, deza, deza(v,k,b,a), b=k-N, b=N, a=k-N, a=N, strictly-deza, srg, "
    "ddg, zero-lambda";

}  // namespace

CensusFilter CensusFilter::parse(const std::string& text) {
  CensusFilter f;
  f.text_ = trim(text);
  if (f.text_.empty()) return f;
  std::size_t start = 0;
  while (start <= f.text_.size()) {
    auto end = f.text_.find('+', start);
    if (end == std::string::npos) end = f.text_.size();
    const std::string term = trim(f.text_.substr(start, end - start));
    start = end + 1;

    auto value_of = [&](const std::string& rhs) {
      Value val;
      if (rhs.rfind("k-", 0) == 0) {
        val.relative = true;
        val.amount = parse_count(rhs.substr(2), term);
      } else if (rhs == "k") {
        val.relative = true;
      } else {
        val.amount = parse_count(rhs, term);
      }
      return val;
    };

    if (term == "connected") {
      f.connected_ = true;
    } else if (term == "deza") {
      f.deza_ = true;
    } else if (term == "strictly-deza") {
      f.strictly_ = true;
    } else if (term == "srg") {
      f.srg_ = true;
    } else if (term == "ddg") {
      f.ddg_ = true;
    } else if (term == "zero-lambda") {
      f.zero_lambda_ = true;
    } else if (term.rfind("b=", 0) == 0) {
      f.deza_ = true;
      f.b_ = value_of(term.substr(2));
    } else if (term.rfind("a=", 0) == 0) {
      f.deza_ = true;
      f.a_ = value_of(term.substr(2));
    } else if (term.rfind("deza(", 0) == 0 && term.back() == ')') {
      f.deza_ = true;
      std::vector<std::string> parts;
      std::string inner = term.substr(5, term.size() - 6);
      std::size_t s = 0;
      while (true) {
        auto c = inner.find(',', s);
        parts.push_back(trim(inner.substr(s, c == std::string::npos ? c : c - s)));
        if (c == std::string::npos) break;
        s = c + 1;
      }
      if (parts.size() != 4) {
        throw CensusError("deza(...) needs four entries in filter term '" + term + "'");
      }
      auto opt = [&](const std::string& p) -> std::optional<std::int64_t> {
        if (p == "*") return std::nullopt;
        return parse_count(p, term);
      };
      if (auto x = opt(parts[0])) f.v_ = static_cast<std::size_t>(*x);
      if (auto x = opt(parts[1])) f.k_ = static_cast<std::size_t>(*x);
      if (auto x = opt(parts[2])) f.b_ = Value{false, *x};
      if (auto x = opt(parts[3])) f.a_ = Value{false, *x};
    } else {
      throw CensusError("unknown filter term '" + term + "'; valid terms: " + kFilterTerms);
    }
  }
  return f;
}

bool CensusFilter::matches(const ClassificationReport& report,
                           const std::optional<DdgResult>& ddg) const {
  if (connected_ && !report.connected) return false;
  if (deza_) {
    if (!report.deza) return false;
    const auto& d = *report.deza;
    if (v_ && d.v != *v_) return false;
    if (k_ && d.k != *k_) return false;
    if (b_) {
      auto b = b_->resolve(d.k);
      if (!b || d.b != *b) return false;
    }
    if (a_) {
      auto a = a_->resolve(d.k);
      if (!a || d.a != *a) return false;
    }
  }
  if (strictly_ && !report.strictly_deza) return false;
  if (srg_ && !report.srg) return false;
  if (ddg_ && !(ddg && ddg->proper)) return false;
  if (zero_lambda_ && !report.zero_lambda) return false;
  return true;
}

std::optional<std::size_t> CensusFilter::max_common(std::size_t k) const {
  if (!b_) return std::nullopt;
  return b_->resolve(k);
}

namespace {

CensusRecord finish_record(const Graph& g, ClassificationReport report,
                           std::optional<DdgParams> ddg, std::optional<std::size_t> prune) {
  const auto cert = canonical_certificate(g);
  CensusRecord r;
  r.graph = graph6_decode(cert.bytes);
  r.graph6 = cert.bytes;
  r.v = g.order();
  r.k = report.regular.value_or(0);
  r.report = std::move(report);
  r.ddg = ddg;
  r.certificate_hash = cert.hash_hex();
  r.prune = prune;
  return r;
}

std::optional<DdgResult> proper_ddg(const Graph& g, const ClassificationReport& report) {
  if (!report.deza) return std::nullopt;
  return ddg_detect(g).proper;
}

}  // namespace

CensusRecord make_record(const Graph& g, std::optional<std::size_t> prune) {
  auto report = classify(g);
  auto ddg = proper_ddg(g, report);
  std::optional<DdgParams> params;
  if (ddg) params = ddg->params;
  return finish_record(g, std::move(report), params, prune);
}

Census census(const CensusOptions& options) {
  if (options.vmin > options.vmax) throw CensusError("empty vertex range");
  if (options.kmin > options.kmax) throw CensusError("empty degree range");
  if (options.vmin == 0) throw CensusError("vertex count must be positive");

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t v = options.vmin; v <= options.vmax; ++v) {
    for (std::size_t k = options.kmin; k <= options.kmax && k < v; ++k) {
      if ((v * k) % 2 != 0) continue;
      options.limits.check(v, k);
      cells.emplace_back(v, k);
    }
  }

  Census out;
  out.options = options;
  for (auto [v, k] : cells) {
    GenerateOptions gen;
    gen.jobs = options.jobs;
    if (options.prune) gen.max_common = options.filter.max_common(k);
    auto graphs = generate_regular(v, k, gen);
    out.generated += graphs.size();
    for (const auto& g : graphs) {
      auto report = classify(g);
      auto ddg = proper_ddg(g, report);
      if (!options.filter.matches(report, ddg)) continue;
      std::optional<DdgParams> params;
      if (ddg) params = ddg->params;
      out.records.push_back(finish_record(g, std::move(report), params, gen.max_common));
    }
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const CensusRecord& x, const CensusRecord& y) {
              if (x.v != y.v) return x.v < y.v;
              if (x.k != y.k) return x.k < y.k;
              return x.graph6 < y.graph6;
            });
  return out;
}

std::string record_json(const CensusRecord& r, const CensusOptions& options) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["graph6"] = r.graph6;
  j["v"] = r.v;
  j["k"] = r.k;
  j["connected"] = r.report.connected;
  if (const auto& d = r.report.deza) {
    j["deza"] = {d->v, d->k, d->b, d->a};
  } else {
    j["deza"] = nullptr;
  }
  j["strictly_deza"] = r.report.strictly_deza;
  if (const auto& s = r.report.srg) {
    j["srg"] = {s->v, s->k, s->lambda, s->mu};
  } else {
    j["srg"] = nullptr;
  }
  if (r.ddg) {
    ordered_json d;
    d["lambda1"] = r.ddg->lambda1;
    d["lambda2"] = r.ddg->lambda2;
    d["m"] = r.ddg->m;
    d["n"] = r.ddg->n;
    j["ddg"] = d;
  } else {
    j["ddg"] = nullptr;
  }
  if (r.report.diameter) {
    j["diameter"] = *r.report.diameter;
  } else {
    j["diameter"] = nullptr;
  }
  j["certificate_hash"] = r.certificate_hash;
  ordered_json gen;
  gen["version"] = kCensusFormatVersion;
  ordered_json bounds;
  bounds["vmin"] = options.vmin;
  bounds["vmax"] = options.vmax;
  bounds["kmin"] = options.kmin;
  bounds["kmax"] = options.kmax;
  gen["bounds"] = bounds;
  if (r.prune) {
    gen["prune"] = "max_common<=" + std::to_string(*r.prune);
  } else {
    gen["prune"] = nullptr;
  }
  gen["filter"] = options.filter.text();
  j["generator"] = gen;
  return j.dump();
}

namespace {

class SyncedFile {
 public:
  explicit SyncedFile(const std::string& path) : path_(path) {
    fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_APPEND, 0644);
    if (fd_ < 0) fail("open");
  }
  SyncedFile(const SyncedFile&) = delete;
  SyncedFile& operator=(const SyncedFile&) = delete;
  ~SyncedFile() {
    if (fd_ >= 0) ::close(fd_);
  }

  void append(const std::string& line) {
    std::string data = line + "\n";
    const char* p = data.data();
    std::size_t left = data.size();
    while (left > 0) {
      auto n = ::write(fd_, p, left);
      if (n < 0) {
        if (errno == EINTR) continue;
        fail("write");
      }
      p += n;
      left -= static_cast<std::size_t>(n);
    }
  }

  void finish() {
    if (::fsync(fd_) != 0) fail("fsync");
    if (::close(fd_) != 0) {
      fd_ = -1;
      fail("close");
    }
    fd_ = -1;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::runtime_error(std::string(what) + " failed for " + path_ + ": " +
                             std::strerror(errno));
  }

  std::string path_;
  int fd_ = -1;
};

}  // namespace

void write_census(const std::string& prefix, const Census& c) {
  SyncedFile g6(prefix + ".g6");
  SyncedFile meta(prefix + ".meta.jsonl");
  for (const auto& r : c.records) {
    g6.append(r.graph6);
    meta.append(record_json(r, c.options));
  }
  g6.finish();
  meta.finish();
}

}  // namespace deza
