#include "deza/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "deza/audit.hpp"
#include "deza/catalog.hpp"
#include "deza/census.hpp"
#include "deza/classify.hpp"
#include "deza/ddg.hpp"
#include "deza/graph6.hpp"
#include "deza/sieve.hpp"
#include "deza/spectra.hpp"

namespace deza::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Input {
  std::string label;
  Graph graph;
  const CatalogEntry* entry = nullptr;
};

std::string joined_names() {
  std::string out;
  for (const auto& n : catalog_names()) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

Input from_catalog(const std::string& name) {
  const auto* e = find_catalog_entry(name);
  if (!e) throw UsageError("unknown graph name '" + name + "'; valid names: " + joined_names());
  return {e->name, e->build(), e};
}

std::vector<Input> from_graph6_stream(std::istream& in, const std::string& source) {
  std::vector<Input> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back({source + ":" + std::to_string(number), graph6_decode(line), nullptr});
    } catch (const Graph6Error& e) {
      throw UsageError(source + " line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError("no graph6 lines in " + source);
  return out;
}

std::vector<Input> from_graph6_path(const std::string& path, std::istream& in) {
  if (path == "-") return from_graph6_stream(in, "stdin");
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open graph6 file '" + path + "'");
  return from_graph6_stream(file, path);
}

struct InputSpec {
  std::string positional;
  std::string g6;
  std::string name;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", positional, "catalog name or graph6 file ('-' for stdin)");
    cmd->add_option("--g6", g6, "graph6 file, '-' for stdin");
    cmd->add_option("--name", name, "catalog graph name");
  }

  std::vector<Input> load(std::istream& in) const {
    const int given = !positional.empty() + !g6.empty() + !name.empty();
    if (given != 1) throw UsageError("give exactly one of <input>, --g6 <file>, --name <name>");
    if (!name.empty()) return {from_catalog(name)};
    if (!g6.empty()) return from_graph6_path(g6, in);
    if (find_catalog_entry(positional)) return {from_catalog(positional)};
    if (positional == "-" || std::filesystem::exists(positional)) {
      return from_graph6_path(positional, in);
    }
    throw UsageError("'" + positional + "' is neither a catalog name nor a file; valid names: " +
                     joined_names());
  }
};

template <class T>
ordered_json optional_json(const std::optional<T>& x) {
  return x ? ordered_json(*x) : ordered_json(nullptr);
}

std::string degenerate_text(Degenerate d) {
  switch (d) {
    case Degenerate::complete:
      return "complete";
    case Degenerate::edgeless:
      return "edgeless";
    case Degenerate::none:
      break;
  }
  return "none";
}

std::optional<std::string> beta_formula_text(const ClassificationReport& r) {
  if (!r.deza) return std::nullopt;
  const auto& d = *r.deza;
  return to_string(beta_formula(static_cast<long long>(d.v), static_cast<long long>(d.k),
                                static_cast<long long>(d.b), static_cast<long long>(d.a)));
}

ordered_json classification_json(const Input& input, const ClassificationReport& r) {
  ordered_json j;
  j["graph"] = input.label;
  j["v"] = r.v;
  j["connected"] = r.connected;
  j["regular"] = optional_json(r.regular);
  j["common_values"] = r.common_values;
  if (r.deza) {
    j["deza"] = {r.deza->v, r.deza->k, r.deza->b, r.deza->a};
  } else {
    j["deza"] = nullptr;
  }
  if (r.srg) {
    j["srg"] = {r.srg->v, r.srg->k, r.srg->lambda, r.srg->mu};
  } else {
    j["srg"] = nullptr;
  }
  j["strictly_deza"] = r.strictly_deza;
  j["zero_lambda"] = optional_json(r.zero_lambda);
  j["diameter"] = optional_json(r.diameter);
  j["degenerate"] = degenerate_text(r.degenerate);
  j["alpha"] = optional_json(r.alpha);
  j["beta"] = optional_json(r.beta);
  j["beta_formula"] = optional_json(beta_formula_text(r));
  return j;
}

void print_classification(std::ostream& out, const Input& input,
                          const ClassificationReport& r) {
  auto row = [&](const std::string& key, const std::string& value) {
    out << "  " << key << std::string(key.size() < 14 ? 14 - key.size() : 1, ' ') << value
        << "\n";
  };
  auto opt = [](const auto& x) { return x ? std::to_string(*x) : std::string("-"); };
  std::string values;
  for (auto x : r.common_values) values += (values.empty() ? "" : ",") + std::to_string(x);
  out << input.label << "\n";
  row("vertices", std::to_string(r.v));
  row("connected", r.connected ? "yes" : "no");
  row("regular", opt(r.regular));
  row("values", "{" + values + "}");
  row("deza", r.deza ? to_string(*r.deza) : "-");
  row("srg", r.srg ? to_string(*r.srg) : "-");
  row("strictly deza", r.strictly_deza ? "yes" : "no");
  row("zero-lambda", opt(r.zero_lambda));
  row("diameter", r.diameter ? std::to_string(*r.diameter) : "inf");
  if (r.degenerate != Degenerate::none) row("degenerate", degenerate_text(r.degenerate));
  if (r.deza) {
    row("alpha", opt(r.alpha));
    row("beta", opt(r.beta));
    row("beta formula", *beta_formula_text(r));
  }
}

std::string partition_text(const VertexPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += " | ";
    out += "{";
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(p[i][j]);
    }
    out += "}";
  }
  return out;
}

std::string matrix_text(const QuotientMatrix& q) {
  std::string out = "[";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < q[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(q[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

std::string factor_text(const EigenFactor& f) {
  std::string base;
  if (f.kind == EigenFactor::Kind::surd_pair) {
    base = "(x^2 - " + f.value.str() + ")";
  } else if (f.value == 0) {
    base = "x";
  } else if (f.value > 0) {
    base = "(x - " + f.value.str() + ")";
  } else {
    BigInt neg = -f.value;
    base = "(x + " + neg.str() + ")";
  }
  if (f.multiplicity > 1) base += "^" + std::to_string(f.multiplicity);
  return base;
}

std::string factored_text(const FactoredSpectrum& s) {
  std::string out;
  for (const auto& f : s.factors) out += factor_text(f);
  if (!s.resolved()) out += "(" + s.residual.to_string() + ")";
  return out.empty() ? "1" : out;
}

ordered_json spectrum_json(const Spectrum& s) {
  ordered_json j;
  j["d1"] = s.d1.str();
  j["d2"] = s.d2.str();
  j["f1"] = s.f1;
  j["f2"] = s.f2;
  j["g1"] = s.g1;
  j["g2"] = s.g2;
  j["coincident"] = s.coincident;
  j["d2_zero"] = s.d2_zero;
  j["block_sizes_match"] = s.block_sizes_match;
  j["balance_holds"] = s.balance_holds;
  j["balance"] = s.balance;
  return j;
}

int cmd_construct(const std::string& name, bool adj, std::ostream& out) {
  const auto input = from_catalog(name);
  if (!adj) {
    out << graph6_encode(input.graph) << "\n";
    return kSuccess;
  }
  const auto& g = input.graph;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t w = 0; w < g.order(); ++w) out << (g.adjacent(u, w) ? '1' : '0');
    out << "\n";
  }
  return kSuccess;
}

int cmd_classify(const std::vector<Input>& inputs, bool json, std::ostream& out) {
  for (const auto& input : inputs) {
    const auto r = classify(input.graph);
    if (json) {
      out << classification_json(input, r).dump(2) << "\n";
    } else {
      print_classification(out, input, r);
    }
  }
  return kSuccess;
}

int cmd_ddg(const std::vector<Input>& inputs, bool json, std::ostream& out) {
  for (const auto& input : inputs) {
    const auto det = ddg_detect(input.graph);
    ordered_json j;
    j["graph"] = input.label;
    std::ostringstream text;
    text << input.label << "\n";
    if (!det.proper) {
      j["ddg"] = nullptr;
      ordered_json improper = ordered_json::array();
      text << "  ddg           none\n";
      for (const auto& f : det.improper) {
        const std::string kind =
            f.kind == ImproperForm::Kind::single_class ? "single-class" : "singletons";
        improper.push_back({{"kind", kind}, {"lambda", f.lambda}});
        text << "  improper      " << kind << " lambda=" << f.lambda << "\n";
      }
      j["improper"] = improper;
    } else {
      const auto& d = *det.proper;
      const auto audits = class_audits(input.graph, d);
      const auto a2 = a2_identity_check(input.graph, d);
      if (!a2.holds) {
        const auto& bad = *a2.violation;
        throw InvariantViolation("A^2 identity fails at (" + std::to_string(bad.row) + "," +
                                 std::to_string(bad.col) + ")");
      }
      Spectrum spectrum;
      try {
        spectrum = ddg_spectrum_check(input.graph, d);
      } catch (const SpectrumMismatch& e) {
        throw InvariantViolation(std::string("DDG spectrum check failed: ") + e.what());
      }
      const auto equitable = equitable_check(input.graph, d.partition);

      ordered_json p;
      p["v"] = d.params.v;
      p["k"] = d.params.k;
      p["lambda1"] = d.params.lambda1;
      p["lambda2"] = d.params.lambda2;
      p["m"] = d.params.m;
      p["n"] = d.params.n;
      j["ddg"] = p;
      j["proper"] = d.proper;
      j["partition"] = d.partition;
      j["quotient"] = d.quotient;
      j["equitable"] = equitable.quotient.has_value();
      ordered_json ca = ordered_json::array();
      for (const auto& a : audits) {
        ordered_json x;
        x["class"] = a.class_id;
        x["w_size"] = a.w_size;
        x["coclique"] = a.coclique;
        x["n_divides_w"] = a.n_divides_w;
        ca.push_back(x);
      }
      j["class_audits"] = ca;
      j["a2_identity"] = a2.holds;
      j["spectrum"] = spectrum_json(spectrum);

      text << "  ddg           " << to_string(d.params) << (d.proper ? " proper" : "") << "\n";
      if (input.entry && input.entry->listed_ddg) {
        const bool same = *input.entry->listed_ddg == to_string(d.params);
        j["listed"] = *input.entry->listed_ddg;
        j["listed_matches"] = same;
        text << "  listed        " << *input.entry->listed_ddg
             << (same ? " (matches)" : " (parameter mismatch)") << "\n";
      }
      text << "  partition     " << partition_text(d.partition) << "\n";
      text << "  quotient      " << matrix_text(d.quotient) << "\n";
      text << "  equitable     " << (equitable.quotient ? "yes" : "no") << "\n";
      for (const auto& a : audits) {
        text << "  class " << a.class_id << "       |W(B)|=" << a.w_size
             << " coclique=" << (a.coclique ? "yes" : "no")
             << " n|W(B)=" << (a.n_divides_w ? "yes" : "no") << "\n";
      }
      text << "  A^2 identity  holds\n";
      text << "  multiplicity  f1=" << spectrum.f1 << " f2=" << spectrum.f2
           << " g1=" << spectrum.g1 << " g2=" << spectrum.g2 << "\n";
      text << "  balance       " << spectrum.balance << "\n";
    }
    if (json) {
      out << j.dump(2) << "\n";
    } else {
      out << text.str();
    }
  }
  return kSuccess;
}

int cmd_spectrum(const std::vector<Input>& inputs, bool json, std::ostream& out) {
  for (const auto& input : inputs) {
    const auto poly = char_poly(input.graph);
    const auto factored = graph_spectrum(input.graph);
    const auto det = ddg_detect(input.graph);
    std::optional<Spectrum> ddg_spec;
    std::optional<std::string> mismatch;
    if (det.proper) {
      try {
        ddg_spec = ddg_spectrum_check(input.graph, *det.proper);
      } catch (const SpectrumMismatch& e) {
        mismatch = e.what();
      }
    }
    if (json) {
      ordered_json j;
      j["graph"] = input.label;
      j["charpoly"] = poly.to_string();
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : poly.coefficients()) coeffs.push_back(c.str());
      j["coefficients"] = coeffs;
      j["factored"] = factored_text(factored);
      j["resolved"] = factored.resolved();
      j["ddg_spectrum"] = ddg_spec ? spectrum_json(*ddg_spec) : ordered_json(nullptr);
      if (mismatch) j["ddg_spectrum_error"] = *mismatch;
      out << j.dump(2) << "\n";
    } else {
      out << input.label << "\n";
      out << "  charpoly      " << poly.to_string() << "\n";
      out << "  factored      " << factored_text(factored) << "\n";
      out << "  eigenvalues   " << factored.describe() << "\n";
      if (ddg_spec) {
        out << "  ddg spectrum  f1=" << ddg_spec->f1 << " f2=" << ddg_spec->f2
            << " g1=" << ddg_spec->g1 << " g2=" << ddg_spec->g2 << "\n";
        out << "  balance       " << ddg_spec->balance << "\n";
      }
      if (mismatch) out << "  ddg spectrum  FAILED: " << *mismatch << "\n";
    }
    if (mismatch) throw InvariantViolation("DDG spectrum check failed: " + *mismatch);
  }
  return kSuccess;
}

std::string status_text(RuleStatus s) {
  switch (s) {
    case RuleStatus::pass:
      return "pass";
    case RuleStatus::fail:
      return "fail";
    case RuleStatus::skipped:
      break;
  }
  return "skipped";
}

ordered_json verdict_json(const std::vector<std::int64_t>& tuple, const SieveVerdict& v) {
  ordered_json j;
  j["tuple"] = tuple;
  j["feasible"] = v.feasible;
  j["summary"] = v.summary();
  ordered_json trace = ordered_json::array();
  for (const auto& r : v.trace) {
    ordered_json x;
    x["rule"] = r.id;
    x["status"] = status_text(r.status);
    x["witness"] = r.witness;
    x["warning"] = r.warning;
    trace.push_back(x);
  }
  j["trace"] = trace;
  return j;
}

void print_verdict(std::ostream& out, const SieveVerdict& v) {
  out << v.summary() << "\n";
  for (const auto& r : v.trace) {
    out << "  " << r.id << "  " << status_text(r.status) << (r.warning ? " (warning)" : "")
        << "  " << r.witness << "\n";
  }
}

std::string tuple_text(const std::vector<std::int64_t>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

int cmd_sieve(const std::vector<std::int64_t>& tuple, bool ddg, bool json, std::ostream& out) {
  const std::size_t want = ddg ? 6 : 4;
  if (tuple.size() != want) {
    throw UsageError(std::string("sieve ") + (ddg ? "ddg needs v k l1 l2 m n" : "deza needs v k b a"));
  }
  const auto v = ddg ? ddg_sieve(tuple[0], tuple[1], tuple[2], tuple[3], tuple[4], tuple[5])
                     : deza_sieve(tuple[0], tuple[1], tuple[2], tuple[3]);
  if (json) {
    out << verdict_json(tuple, v).dump(2) << "\n";
  } else {
    print_verdict(out, v);
  }
  return kSuccess;
}

int cmd_scan(const std::string& family, std::int64_t max, bool json, std::ostream& out) {
  const auto families = scan_families();
  if (std::find(families.begin(), families.end(), family) == families.end()) {
    std::string names;
    for (const auto& f : families) names += (names.empty() ? "" : ", ") + f;
    throw UsageError("unknown scan family '" + family + "'; valid families: " + names);
  }
  const auto result = sieve_scan(family, max);
  if (json) {
    ordered_json j;
    j["family"] = result.family;
    j["max"] = result.max;
    j["scanned"] = result.scanned;
    j["feasible"] = result.feasible;
    ordered_json survivors = ordered_json::array();
    for (const auto& s : result.survivors) survivors.push_back(verdict_json(s.tuple, s.verdict));
    j["survivors"] = survivors;
    out << j.dump(2) << "\n";
  } else {
    out << "family " << result.family << " max " << result.max << ": scanned "
        << result.scanned << ", feasible " << result.feasible << "\n";
    for (const auto& s : result.survivors) out << "  " << tuple_text(s.tuple) << "\n";
  }
  return kSuccess;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* what) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError(std::string("bad ") + what + " value '" + text + "'; use N or A..B");
    }
    return static_cast<std::size_t>(std::stoull(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto x = number(text);
    return {x, x};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

struct EnumerateArgs {
  std::string v, k, filter, out_prefix;
  unsigned jobs = 1;
  bool long_run = false;
  bool no_prune = false;
};

int cmd_enumerate(const EnumerateArgs& a, bool json, std::ostream& out) {
  CensusOptions o;
  std::tie(o.vmin, o.vmax) = parse_range(a.v, "--v");
  if (a.k.empty()) {
    o.kmin = 0;
    o.kmax = o.vmax == 0 ? 0 : o.vmax - 1;
  } else {
    std::tie(o.kmin, o.kmax) = parse_range(a.k, "--k");
  }
  o.filter = CensusFilter::parse(a.filter);
  o.jobs = std::max(1U, a.jobs);
  o.prune = !a.no_prune;
  o.limits.long_run = a.long_run;
  const auto c = census(o);
  if (!a.out_prefix.empty()) {
    write_census(a.out_prefix, c);
    out << "wrote " << c.records.size() << " records to " << a.out_prefix << ".g6 and "
        << a.out_prefix << ".meta.jsonl (" << c.generated << " graphs generated)\n";
    return kSuccess;
  }
  for (const auto& r : c.records) {
    if (json) {
      out << record_json(r, o) << "\n";
    } else {
      out << r.graph6 << "  " << classification_summary(r.report)
          << (r.ddg ? " ddg=" + to_string(*r.ddg) : std::string()) << "\n";
    }
  }
  if (!json) out << c.records.size() << " records (" << c.generated << " generated)\n";
  return kSuccess;
}

ordered_json audit_json(const AuditReport& r) {
  ordered_json j;
  j["audit"] = r.theorem;
  j["scope"] = r.scope;
  ordered_json bounds;
  bounds["vmax"] = r.bounds.vmax;
  bounds["kmin"] = optional_json(r.bounds.kmin);
  bounds["kmax"] = optional_json(r.bounds.kmax);
  bounds["long"] = r.bounds.limits.long_run;
  j["bounds"] = bounds;
  ordered_json cells = ordered_json::array();
  for (auto [v, k] : r.searched) cells.push_back({v, k});
  j["searched"] = cells;
  j["expected"] = r.expected;
  ordered_json found = ordered_json::array();
  for (const auto& f : r.found) {
    ordered_json x;
    x["graph6"] = f.graph6;
    x["parameters"] = f.parameters;
    x["connected"] = f.connected;
    x["diameter"] = optional_json(f.diameter);
    x["case"] = f.matched_case.empty() ? ordered_json(nullptr) : ordered_json(f.matched_case);
    found.push_back(x);
  }
  j["found"] = found;
  j["matches"] = r.matches();
  ordered_json disc = ordered_json::array();
  for (const auto& d : r.discrepancies) {
    disc.push_back({{"kind", to_string(d.kind)}, {"subject", d.subject}, {"detail", d.detail}});
  }
  j["discrepancies"] = disc;
  return j;
}

void print_audit(std::ostream& out, const AuditReport& r) {
  out << "audit " << r.theorem << ": " << r.scope << "\n";
  out << "searched " << r.searched.size() << " (v,k) cells up to v=" << r.bounds.vmax << "\n";
  out << "expected:\n";
  for (const auto& e : r.expected) out << "  " << e << "\n";
  out << "found " << r.found.size() << " (matched " << r.matches() << "):\n";
  for (const auto& f : r.found) {
    out << "  " << f.parameters << "  " << f.graph6 << "  diameter="
        << (f.diameter ? std::to_string(*f.diameter) : "inf") << "  "
        << (f.matched_case.empty() ? "UNMATCHED" : f.matched_case) << "\n";
  }
  out << "discrepancies " << r.discrepancies.size() << ":\n";
  for (const auto& d : r.discrepancies) {
    out << "  " << to_string(d.kind) << "  " << d.subject << ": " << d.detail << "\n";
  }
}

struct AuditArgs {
  int theorem = 0;
  std::optional<std::size_t> vmax, kmin, kmax;
  unsigned jobs = 1;
  bool long_run = false;
};

int cmd_audit(const AuditArgs& a, bool json, std::ostream& out) {
  auto bounds = default_audit_bounds(a.theorem);
  if (a.vmax) bounds.vmax = *a.vmax;
  bounds.kmin = a.kmin;
  bounds.kmax = a.kmax;
  bounds.jobs = std::max(1U, a.jobs);
  bounds.limits.long_run = a.long_run;
  const auto report = audit_theorem(a.theorem, bounds);
  if (json) {
    out << audit_json(report).dump(2) << "\n";
  } else {
    print_audit(out, report);
  }
  return report.clean() ? kSuccess : kDiscrepancy;
}

int cmd_catalog(bool json, std::ostream& out) {
  ordered_json list = ordered_json::array();
  for (const auto& e : catalog()) {
    if (json) {
      ordered_json x;
      x["name"] = e.name;
      x["description"] = e.description;
      x["expected"] = e.expected_classification;
      x["expected_ddg"] = e.expected_ddg;
      x["listed_ddg"] = optional_json(e.listed_ddg);
      list.push_back(x);
    } else {
      out << e.name << "\n  " << e.description << "\n  " << e.expected_classification
          << "\n  " << e.expected_ddg
          << (e.listed_ddg ? " (listed as " + *e.listed_ddg + ")" : std::string()) << "\n";
    }
  }
  if (json) out << list.dump(2) << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Deza graph and divisible design graph toolkit", "deza"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  auto* construct = app.add_subcommand("construct", "emit a catalog graph");
  std::string construct_name;
  bool as_g6 = false;
  bool as_adj = false;
  construct->add_option("name", construct_name, "catalog graph name")->required();
  auto* g6_flag = construct->add_flag("--g6", as_g6, "graph6 line (default)");
  construct->add_flag("--adj", as_adj, "0/1 adjacency matrix")->excludes(g6_flag);

  InputSpec classify_in, ddg_in, spectrum_in;
  auto* classify_cmd = app.add_subcommand("classify", "print the classification report");
  classify_in.attach(classify_cmd);
  auto* ddg_cmd = app.add_subcommand("ddg", "detect a DDG and run its structural audits");
  ddg_in.attach(ddg_cmd);
  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact characteristic polynomial");
  spectrum_in.attach(spectrum_cmd);
  for (auto* c : {classify_cmd, ddg_cmd, spectrum_cmd}) c->add_flag("--json", json);

  auto* sieve = app.add_subcommand("sieve", "arithmetic feasibility rules");
  sieve->require_subcommand(1);
  sieve->add_flag("--json", json);
  std::vector<std::int64_t> deza_tuple, ddg_tuple;
  auto* sieve_deza = sieve->add_subcommand("deza", "rules R1-R6 on (v,k,b,a)");
  sieve_deza->add_option("tuple", deza_tuple, "v k b a")->required()->expected(4);
  auto* sieve_ddg = sieve->add_subcommand("ddg", "rules D1-D8 on (v,k,l1,l2,m,n)");
  sieve_ddg->add_option("tuple", ddg_tuple, "v k l1 l2 m n")->required()->expected(6);
  auto* sieve_scan_cmd = sieve->add_subcommand("scan", "range scan over a tuple family");
  std::string family;
  std::int64_t scan_max = 0;
  sieve_scan_cmd->add_option("--family", family, "tuple family")->required();
  sieve_scan_cmd->add_option("--max", scan_max, "range bound")->required()->check(
      CLI::PositiveNumber);
  for (auto* c : {sieve_deza, sieve_ddg, sieve_scan_cmd}) c->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "isomorph-free regular graph census");
  EnumerateArgs en;
  enumerate->add_option("--v", en.v, "vertex count N or range A..B")->required();
  enumerate->add_option("--k", en.k, "degree N or range A..B (default all)");
  enumerate->add_option("--filter", en.filter, "filter terms joined by '+'");
  enumerate->add_option("--out", en.out_prefix, "write <prefix>.g6 and <prefix>.meta.jsonl");
  enumerate->add_option("--jobs", en.jobs, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--long", en.long_run, "allow runs beyond desk scale");
  enumerate->add_flag("--no-prune", en.no_prune, "disable the filter-derived prune");
  enumerate->add_flag("--json", json);

  auto* audit = app.add_subcommand("audit", "exhaustive audit of a classification statement");
  AuditArgs au;
  audit->add_option("--theorem", au.theorem, "1, 2 or 3")->required()->check(
      CLI::IsMember({1, 2, 3}));
  audit->add_option("--vmax", au.vmax, "largest vertex count");
  audit->add_option("--kmin", au.kmin, "smallest degree");
  audit->add_option("--kmax", au.kmax, "largest degree, for every v");
  audit->add_option("--jobs", au.jobs, "worker threads")->check(CLI::PositiveNumber);
  audit->add_flag("--long", au.long_run, "allow runs beyond desk scale");
  audit->add_flag("--json", json);

  auto* catalog_cmd = app.add_subcommand("catalog", "list named graphs");
  catalog_cmd->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_name, as_adj, out);
    if (classify_cmd->parsed()) return cmd_classify(classify_in.load(in), json, out);
    if (ddg_cmd->parsed()) return cmd_ddg(ddg_in.load(in), json, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_in.load(in), json, out);
    if (sieve_deza->parsed()) return cmd_sieve(deza_tuple, false, json, out);
    if (sieve_ddg->parsed()) return cmd_sieve(ddg_tuple, true, json, out);
    if (sieve_scan_cmd->parsed()) return cmd_scan(family, scan_max, json, out);
    if (enumerate->parsed()) return cmd_enumerate(en, json, out);
    if (audit->parsed()) return cmd_audit(au, json, out);
    if (catalog_cmd->parsed()) return cmd_catalog(json, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace deza::cli
