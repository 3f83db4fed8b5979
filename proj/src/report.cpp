#include "crossmod/report.hpp"

namespace crossmod {

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : lines_) out += k + ": " + v + "\n";
  return out;
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

std::string describe_group(const Group& g) {
  return "order " + std::to_string(g->order()) + (g->is_abelian() ? ", abelian" : ", non-abelian");
}

void describe(Report& r, const std::string& prefix, const PreCrossedModule& x) {
  r.add(prefix + "M", describe_group(x.M()));
  r.add(prefix + "P", describe_group(x.P()));
  r.add(prefix + "CM1", pass_fail(true));
  const auto bad = cm2_failures(x, 1);
  r.add(prefix + "CM2", bad.empty() ? pass_fail(true)
                                    : "fail at (" + std::to_string(bad[0].first) + ", " +
                                          std::to_string(bad[0].second) + ")");
}

void describe(Report& r, const std::string& prefix, const TwoCrossedModule& x) {
  r.add(prefix + "L", describe_group(x.L()));
  r.add(prefix + "M", describe_group(x.M()));
  r.add(prefix + "P", describe_group(x.P()));
  const auto bad = scan_axioms(x.data(), {true, 0});
  if (bad.empty()) {
    r.add(prefix + "normal complex", pass_fail(true));
    r.add(prefix + "equivariance", pass_fail(true));
    r.add(prefix + "PL1–PL5", pass_fail(true));
  } else {
    r.add(prefix + to_string(bad[0].axiom), "fail: " + bad[0].message);
  }
  r.add(prefix + "lifting", x.lifting_trivial() ? "trivial" : "non-trivial");
}

void describe(Report& r, const EnumerationSummary& s) {
  r.add("relators", static_cast<long long>(s.relators));
  r.add("rounds", s.rounds);
  r.add("max active cosets", s.max_active);
  r.add("cosets defined", s.total_defined);
  r.add("coset limit", s.coset_limit);
}

}  // namespace crossmod
