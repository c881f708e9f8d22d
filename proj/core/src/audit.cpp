#include "deza/audit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "deza/canonical.hpp"

namespace deza {

namespace {

struct Named {
  std::string label;
  std::size_t v, k;
  std::string cert;
};

Named named(std::string label, const Graph& g) {
  const std::size_t k = g.order() ? g.degree(0) : 0;
  return {std::move(label), g.order(), k, canonical_certificate(g).bytes};
}

Graph cubes_complement(std::size_t s) {
  std::vector<Graph> parts(s, hypercube(3));
  return complement(disjoint_union(parts));
}

std::string cell_text(std::size_t v, std::size_t k) {
  return "(v,k)=(" + std::to_string(v) + "," + std::to_string(k) + ")";
}

class AuditRun {
 public:
  AuditRun(int theorem, const AuditBounds& bounds) {
    report_.theorem = theorem;
    report_.bounds = bounds;
    const std::size_t kmin = bounds.kmin.value_or(3);
    for (std::size_t v = 1; v <= bounds.vmax; ++v) {
      std::size_t kmax = v - 1;
      if (bounds.kmax) {
        kmax = std::min(kmax, *bounds.kmax);
      } else if (!bounds.limits.long_run && v > 10) {
        kmax = std::min<std::size_t>(kmax, 4);
      }
      for (std::size_t k = kmin; k <= kmax; ++k) {
        if ((v * k) % 2 != 0) continue;
        bounds.limits.check(v, k);
        report_.searched.emplace_back(v, k);
      }
    }
  }

  bool searched(std::size_t v, std::size_t k) const {
    return std::find(report_.searched.begin(), report_.searched.end(),
                     std::pair{v, k}) != report_.searched.end();
  }

  std::vector<CensusRecord> collect(const std::string& filter) const {
    std::vector<CensusRecord> out;
    for (auto [v, k] : report_.searched) {
      CensusOptions o;
      o.vmin = o.vmax = v;
      o.kmin = o.kmax = k;
      o.filter = CensusFilter::parse(filter);
      o.jobs = report_.bounds.jobs;
      o.limits = report_.bounds.limits;
      for (auto& r : census(o).records) out.push_back(std::move(r));
    }
    return out;
  }

  void expect(const Named& n) {
    if (!searched(n.v, n.k)) return;
    report_.expected.push_back(n.label + " " + cell_text(n.v, n.k));
    expected_named_.push_back(n);
  }

  void expect_family(std::string label, std::size_t v, std::size_t k) {
    if (!searched(v, k)) return;
    report_.expected.push_back(label);
    expected_family_.push_back(std::move(label));
  }

  AuditFinding& add(const CensusRecord& r, std::string parameters) {
    AuditFinding f;
    f.graph6 = r.graph6;
    f.parameters = std::move(parameters);
    f.connected = r.report.connected;
    f.diameter = r.report.diameter;
    report_.found.push_back(std::move(f));
    seen_.insert(r.graph6);
    return report_.found.back();
  }

  void match(AuditFinding& f, std::string label) {
    f.matched_case = label;
    matched_labels_.insert(std::move(label));
  }

  void discrepancy(Discrepancy::Kind kind, std::string subject, std::string detail) {
    report_.discrepancies.push_back({kind, std::move(subject), std::move(detail)});
  }

  void unexpected(const AuditFinding& f, std::string detail) {
    discrepancy(Discrepancy::Kind::found_unexpected, f.parameters + " " + f.graph6,
                std::move(detail));
  }

  AuditReport finish() {
    for (const auto& n : expected_named_) {
      if (!seen_.count(n.cert)) {
        discrepancy(Discrepancy::Kind::expected_missing, n.label,
                    "not produced by the search over " + cell_text(n.v, n.k));
      }
    }
    for (const auto& label : expected_family_) {
      if (!matched_labels_.count(label)) {
        discrepancy(Discrepancy::Kind::expected_missing, label,
                    "no graph of this family was found");
      }
    }
    return std::move(report_);
  }

  AuditReport report_;

 private:
  std::vector<Named> expected_named_;
  std::vector<std::string> expected_family_;
  std::set<std::string> seen_;
  std::set<std::string> matched_labels_;
};

std::string deza_text(const CensusRecord& r) { return to_string(*r.report.deza); }

bool diameter_above_two(const CensusRecord& r) {
  return !r.report.diameter || *r.report.diameter > 2;
}

AuditReport audit_zero(const AuditBounds& bounds) {
  AuditRun run(1, bounds);
  run.report_.scope = "connected Deza graphs (v,k,k-2,0)";
  const auto grid42 = named("grid-4x2", grid(4, 2));
  const auto fano_non = named("fano-non-incidence", fano_non_incidence());
  const auto cube4 = named("hypercube-4", hypercube(4));
  const auto pet = named("petersen", petersen());
  const auto fano_inc = named("fano-incidence", fano_incidence());
  for (const auto* n : {&grid42, &fano_non, &cube4, &pet, &fano_inc}) run.expect(*n);

  for (const auto& r : run.collect("connected+b=k-2+a=0")) {
    auto& f = run.add(r, deza_text(r));
    if (r.graph6 == grid42.cert) {
      run.match(f, "case 1: grid-4x2");
      if (!r.report.strictly_deza) {
        run.discrepancy(Discrepancy::Kind::parameter_mismatch, "grid-4x2",
                        "not strictly Deza");
      }
    } else if (r.graph6 == fano_non.cert) {
      run.match(f, "case 2: fano-non-incidence");
    } else if (r.graph6 == cube4.cert) {
      run.match(f, "case 3: hypercube-4");
    } else if (r.graph6 == pet.cert) {
      run.match(f, "case 5: petersen");
    } else if (r.k == 3 && diameter_above_two(r)) {
      run.match(f, "case 4: (v,3,1,0) diameter > 2");
      if (r.v == 14 && r.graph6 != fano_inc.cert) {
        run.unexpected(f, "(14,3,1,0) graph not isomorphic to the Fano incidence graph");
      }
    } else {
      run.unexpected(f, "matches no listed case");
    }
  }
  return run.finish();
}

AuditReport audit_b_k_minus_2(const AuditBounds& bounds) {
  AuditRun run(2, bounds);
  run.report_.scope = "connected Deza graphs (v,k,k-2,a)";
  const auto rook = named("rook-3x3", grid(3, 3));
  const auto pet = named("petersen", petersen());
  const auto co_pet = named("complement-petersen", complement(petersen()));
  const auto fano_non = named("fano-non-incidence", fano_non_incidence());
  const auto cube4 = named("hypercube-4", hypercube(4));
  std::vector<Named> cubes;
  for (std::size_t s = 1; 8 * s <= bounds.vmax; ++s) {
    cubes.push_back(named("complement-" + std::to_string(s) + (s == 1 ? "-cube" : "-cubes"),
                        cubes_complement(s)));
  }
  for (const auto* n : {&rook, &pet, &co_pet, &fano_non, &cube4}) run.expect(*n);
  for (const auto& n : cubes) run.expect(n);
  const std::string strict821 = "strictly Deza (8,4,2,1)";
  const std::string strict921 = "strictly Deza (9,4,2,1)";
  run.expect_family(strict821, 8, 4);
  run.expect_family(strict921, 9, 4);

  const std::set<SrgParams> listed_srg = {{9, 4, 1, 2}, {10, 3, 0, 1}, {10, 6, 3, 4}};
  for (const auto& r : run.collect("connected+b=k-2")) {
    auto& f = run.add(r, deza_text(r));
    const auto& d = *r.report.deza;
    if (d.a + 3 == d.k) {
      if (r.report.srg && listed_srg.count(*r.report.srg)) {
        run.match(f, "1(ii): SRG " + to_string(*r.report.srg));
      } else if (r.report.strictly_deza && d == DezaParams{8, 4, 2, 1}) {
        run.match(f, strict821);
      } else if (r.report.strictly_deza && d == DezaParams{9, 4, 2, 1}) {
        run.match(f, strict921);
      } else if (d.k == 3 && diameter_above_two(r)) {
        run.match(f, "1(iii): (v,3,1,0) diameter > 2");
      } else {
        run.unexpected(f, "a=k-3 graph outside the listed cases");
      }
    } else if (d.a + 4 == d.k) {
      auto cube = std::find_if(cubes.begin(), cubes.end(),
                               [&](const Named& n) { return n.cert == r.graph6; });
      if (cube != cubes.end()) {
        run.match(f, "2(i): " + cube->label);
      } else if (r.graph6 == fano_non.cert) {
        run.match(f, "2(ii): fano-non-incidence");
      } else if (r.graph6 == cube4.cert) {
        run.match(f, "2(iii): hypercube-4");
      } else {
        run.unexpected(f, "a=k-4 graph outside the listed cases");
      }
    } else if (r.ddg) {
      run.match(f, "DDG " + to_string(*r.ddg));
    } else {
      run.unexpected(f, "a not in {k-3,k-4} and not a DDG");
    }
  }
  return run.finish();
}

AuditReport audit_ddg(const AuditBounds& bounds) {
  AuditRun run(3, bounds);
  run.report_.scope = "proper DDGs whose larger common-neighbour count is k-2";
  const auto fano_non = named("fano-non-incidence", fano_non_incidence());
  const auto fano_inc = named("fano-incidence", fano_incidence());
  const auto grid42 = named("grid-4x2", grid(4, 2));
  for (const auto* n : {&fano_non, &fano_inc, &grid42}) run.expect(*n);

  struct Listed {
    const Named* graph;
    DdgParams params;
    std::string label;
  };
  const std::vector<Listed> listed = {
      {&fano_non, {14, 4, 2, 0, 2, 7}, "1: fano-non-incidence"},
      {&fano_inc, {14, 3, 1, 0, 2, 7}, "2: fano-incidence"},
      {&grid42, {8, 4, 2, 0, 2, 4}, "3: grid-4x2"},
  };
  for (const auto& r : run.collect("ddg+b=k-2")) {
    auto& f = run.add(r, to_string(*r.ddg));
    auto hit = std::find_if(listed.begin(), listed.end(),
                            [&](const Listed& l) { return l.graph->cert == r.graph6; });
    if (hit == listed.end()) {
      run.unexpected(f, "DDG not in the listed catalogue");
      continue;
    }
    run.match(f, hit->label);
    if (*r.ddg != hit->params) {
      run.discrepancy(Discrepancy::Kind::parameter_mismatch, hit->graph->label,
                      "computed " + to_string(*r.ddg) + ", listed " +
                          to_string(hit->params));
    }
  }
  return run.finish();
}

}  // namespace

std::string to_string(Discrepancy::Kind kind) {
  switch (kind) {
    case Discrepancy::Kind::found_unexpected:
      return "found-but-unexpected";
    case Discrepancy::Kind::expected_missing:
      return "expected-but-missing";
    case Discrepancy::Kind::parameter_mismatch:
      return "parameter-mismatch";
  }
  return "unknown";
}

std::size_t AuditReport::matches() const {
  return static_cast<std::size_t>(std::count_if(
      found.begin(), found.end(), [](const AuditFinding& f) { return !f.matched_case.empty(); }));
}

AuditBounds default_audit_bounds(int theorem) {
  AuditBounds b;
  b.vmax = theorem == 2 ? 10 : 14;
  return b;
}

AuditReport audit_theorem(int theorem, const AuditBounds& bounds) {
  switch (theorem) {
    case 1:
      return audit_zero(bounds);
    case 2:
      return audit_b_k_minus_2(bounds);
    case 3:
      return audit_ddg(bounds);
    default:
      throw std::invalid_argument("unknown audit id " + std::to_string(theorem) +
                                  "; expected 1, 2 or 3");
  }
}

}  // namespace deza
