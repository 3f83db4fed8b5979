#include "crossmod/x2mod.hpp"

#include <algorithm>

namespace crossmod {

std::string to_string(X2Axiom a) {
  switch (a) {
    case X2Axiom::NormalComplex: return "normal complex";
    case X2Axiom::Equivariance: return "equivariance";
    case X2Axiom::PL1: return "PL1";
    case X2Axiom::PL2: return "PL2";
    case X2Axiom::PL3a: return "PL3a";
    case X2Axiom::PL3b: return "PL3b";
    case X2Axiom::PL4a: return "PL4a";
    case X2Axiom::PL4b: return "PL4b";
    case X2Axiom::PL5: return "PL5";
  }
  return "?";
}

ErrorKind error_kind(X2Axiom a) {
  switch (a) {
    case X2Axiom::NormalComplex: return ErrorKind::NormalComplexViolation;
    case X2Axiom::Equivariance: return ErrorKind::NotEquivariant;
    case X2Axiom::PL1: return ErrorKind::PL1Violation;
    case X2Axiom::PL2: return ErrorKind::PL2Violation;
    case X2Axiom::PL3a:
    case X2Axiom::PL3b: return ErrorKind::PL3Violation;
    case X2Axiom::PL4a:
    case X2Axiom::PL4b: return ErrorKind::PL4Violation;
    case X2Axiom::PL5: return ErrorKind::PL5Violation;
  }
  return ErrorKind::Internal;
}

namespace {

std::string tuple_text(const std::vector<Elem>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

class Scanner {
 public:
  Scanner(const TwoCrossedData& d, ScanOptions o) : d_(d), o_(o) {}

  std::vector<Violation> run() {
    if (!shapes_match()) return out_;
    normal_complex();
    if (done()) return out_;
    equivariance();
    if (done()) return out_;
    pl1();
    if (done()) return out_;
    pl2();
    if (done()) return out_;
    pl4();
    if (done()) return out_;
    pl3();
    if (done()) return out_;
    pl5();
    return out_;
  }

 private:
  bool done() const { return o_.first_only && !out_.empty(); }

  // Returns false once this axiom has reported enough.
  bool report(X2Axiom a, std::vector<Elem> w, Elem lhs, Elem rhs, const std::string& what) {
    Violation v{a, w, lhs, rhs, to_string(a) + " fails at " + tuple_text(w) + ": " + what};
    out_.push_back(std::move(v));
    if (o_.first_only) return false;
    if (o_.per_axiom && ++count_[static_cast<int>(a)] >= o_.per_axiom) return false;
    return true;
  }

  bool shapes_match() {
    const bool ok = d_.d2.dst().get() == d_.M().get() && d_.act_l.actor().get() == d_.P().get() &&
                    d_.act_l.space().get() == d_.L().get() && d_.act_m.actor().get() == d_.P().get() &&
                    d_.act_m.space().get() == d_.M().get() &&
                    d_.lifting.size() == static_cast<std::size_t>(d_.M()->order()) * d_.M()->order();
    if (!ok) throw Error(ErrorKind::Internal, "2-crossed data has mismatched groups or lifting size");
    for (Elem x : d_.lifting)
      if (x < 0 || x >= d_.L()->order()) throw Error(ErrorKind::Internal, "lifting entry out of range");
    return true;
  }

  void normal_complex() {
    const auto& L = *d_.L();
    for (Elem l = 0; l < L.order(); ++l)
      if (d_.d1(d_.d2(l)) != 0)
        if (!report(X2Axiom::NormalComplex, {l}, -1, -1, "∂₁∂₂(l) != 1")) return;
    if (!d_.d2.image().is_normal())
      if (!report(X2Axiom::NormalComplex, {}, -1, -1, "Im ∂₂ is not normal in M")) return;
    if (!d_.d1.image().is_normal()) report(X2Axiom::NormalComplex, {}, -1, -1, "Im ∂₁ is not normal in P");
  }

  void equivariance() {
    const auto& P = *d_.P();
    for (Elem p = 0; p < P.order(); ++p) {
      for (Elem l = 0; l < d_.L()->order(); ++l)
        if (d_.d2(d_.act_l(p, l)) != d_.act_m(p, d_.d2(l)))
          if (!report(X2Axiom::Equivariance, {p, l}, -1, -1, "∂₂(p·l) != p·∂₂(l)")) return;
      for (Elem m = 0; m < d_.M()->order(); ++m)
        if (d_.d1(d_.act_m(p, m)) != P.conj(p, d_.d1(m)))
          if (!report(X2Axiom::Equivariance, {p, m}, -1, -1, "∂₁(p·m) != p∂₁(m)p^-1")) return;
    }
  }

  void pl1() {
    const auto& M = *d_.M();
    for (Elem a = 0; a < M.order(); ++a)
      for (Elem b = 0; b < M.order(); ++b) {
        const Elem want = M.mul(M.conj(a, b), d_.act_m(d_.d1(a), M.inv(b)));
        if (d_.d2(d_.lift(a, b)) != want)
          if (!report(X2Axiom::PL1, {a, b}, -1, -1, "∂₂{m0,m1} is not the Peiffer commutator")) return;
      }
  }

  void pl2() {
    const auto& L = *d_.L();
    for (Elem a = 0; a < L.order(); ++a)
      for (Elem b = 0; b < L.order(); ++b) {
        const Elem lhs = d_.lift(d_.d2(a), d_.d2(b));
        const Elem rhs = L.commutator(a, b);
        if (lhs != rhs)
          if (!report(X2Axiom::PL2, {a, b}, lhs, rhs, "{∂₂l0,∂₂l1} != [l0,l1]")) return;
      }
  }

  void pl4() {
    const auto& L = *d_.L();
    bool go_a = true, go_b = true;
    for (Elem l = 0; l < L.order() && (go_a || go_b); ++l)
      for (Elem m = 0; m < d_.M()->order() && (go_a || go_b); ++m) {
        if (go_a) {
          const Elem lhs = d_.lift(d_.d2(l), m);
          const Elem rhs = L.mul(l, L.inv(d_.m_act(m, l)));
          if (lhs != rhs) go_a = report(X2Axiom::PL4a, {l, m}, lhs, rhs, "{∂₂l,m} != l·(ᵐl)^-1");
          if (done()) return;
        }
        if (go_b) {
          const Elem lhs = d_.lift(m, d_.d2(l));
          const Elem rhs = L.mul(d_.m_act(m, l), d_.act_l(d_.d1(m), L.inv(l)));
          if (lhs != rhs) go_b = report(X2Axiom::PL4b, {l, m}, lhs, rhs, "{m,∂₂l} != ᵐl·∂₁(m)·(l^-1)");
          if (done()) return;
        }
      }
  }

  void pl3() {
    const auto& M = *d_.M();
    const auto& L = *d_.L();
    bool go_a = true, go_b = true;
    for (Elem a = 0; a < M.order() && (go_a || go_b); ++a)
      for (Elem b = 0; b < M.order() && (go_a || go_b); ++b)
        for (Elem c = 0; c < M.order() && (go_a || go_b); ++c) {
          if (go_a) {
            const Elem lhs = d_.lift(a, M.mul(b, c));
            const Elem rhs = L.mul(d_.m_act(M.conj(a, b), d_.lift(a, c)), d_.lift(a, b));
            if (lhs != rhs) go_a = report(X2Axiom::PL3a, {a, b, c}, lhs, rhs, "{m0,m1m2} identity");
            if (done()) return;
          }
          if (go_b) {
            const Elem lhs = d_.lift(M.mul(a, b), c);
            const Elem rhs = L.mul(d_.lift(a, M.conj(b, c)), d_.act_l(d_.d1(a), d_.lift(b, c)));
            if (lhs != rhs) go_b = report(X2Axiom::PL3b, {a, b, c}, lhs, rhs, "{m0m1,m2} identity");
            if (done()) return;
          }
        }
  }

  void pl5() {
    const auto& M = *d_.M();
    for (Elem p = 0; p < d_.P()->order(); ++p)
      for (Elem a = 0; a < M.order(); ++a)
        for (Elem b = 0; b < M.order(); ++b) {
          const Elem lhs = d_.act_l(p, d_.lift(a, b));
          const Elem rhs = d_.lift(d_.act_m(p, a), d_.act_m(p, b));
          if (lhs != rhs)
            if (!report(X2Axiom::PL5, {p, a, b}, lhs, rhs, "p·{m0,m1} != {p·m0,p·m1}")) return;
        }
  }

  const TwoCrossedData& d_;
  ScanOptions o_;
  std::vector<Violation> out_;
  std::size_t count_[9] = {};
};

// Action of P on a quotient G/N through representatives.
ActionTable quotient_action(const ActionTable& act, const Quotient& q) {
  const Group& actor = act.actor();
  std::vector<std::vector<Elem>> rows(actor->order(), std::vector<Elem>(q.group->order()));
  for (Elem p = 0; p < actor->order(); ++p)
    for (Elem x = 0; x < q.group->order(); ++x) {
      rows[p][x] = q.projection(act(p, q.representatives[x]));
    }
  return ActionTable::make(actor, q.group, rows);
}

}  // namespace

std::vector<Violation> scan_axioms(const TwoCrossedData& d, ScanOptions opts) { return Scanner(d, opts).run(); }

TwoCrossedModule TwoCrossedModule::make(TwoCrossedData d) {
  const auto v = scan_axioms(d);
  if (!v.empty()) throw Error(error_kind(v.front().axiom), v.front().message, v.front().witness);
  return TwoCrossedModule(std::move(d));
}

bool TwoCrossedModule::lifting_trivial() const {
  return std::all_of(d_.lifting.begin(), d_.lifting.end(), [](Elem x) { return x == 0; });
}

CrossedModule top_crossed_module(const TwoCrossedModule& x) {
  const Group& M = x.M();
  const Group& L = x.L();
  std::vector<std::vector<Elem>> rows(M->order(), std::vector<Elem>(L->order()));
  for (Elem m = 0; m < M->order(); ++m)
    for (Elem l = 0; l < L->order(); ++l) rows[m][l] = x.m_act(m, l);
  return CrossedModule::make(ActionTable::make(M, L, rows), x.d2());
}

TwoCrossedModule from_precrossed_peiffer(const PreCrossedModule& x) {
  const Subgroup pm = peiffer_subgroup(x);
  auto [L, incl] = pm.as_group();
  const auto elems = pm.elements();
  std::vector<Elem> pos(x.M()->order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> rows(x.P()->order(), std::vector<Elem>(elems.size()));
  for (Elem p = 0; p < x.P()->order(); ++p)
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Elem y = pos[x.act(p, elems[i])];
      if (y < 0) throw Error(ErrorKind::Internal, "Peiffer subgroup is not P-stable");
      rows[p][i] = y;
    }
  const int n = x.M()->order();
  std::vector<Elem> lifting(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) lifting[static_cast<std::size_t>(a) * n + b] = pos[peiffer_commutator(x, a, b)];
  TwoCrossedData d{incl, x.boundary(), ActionTable::make(x.P(), L, rows), x.action(), std::move(lifting)};
  try {
    return TwoCrossedModule::make(std::move(d));
  } catch (const Error& e) {
    throw Error(ErrorKind::Internal, std::string("Peiffer construction failed: ") + e.what(), e.witness());
  }
}

TwoCrossedModule from_crossed(const CrossedModule& x) {
  const Group L = FiniteGroup::trivial();
  const int n = x.M()->order();
  TwoCrossedData d{GroupHom::trivial(L, x.M()), x.boundary(), ActionTable::trivial(x.P(), L), x.action(),
                   std::vector<Elem>(static_cast<std::size_t>(n) * n, 0)};
  return TwoCrossedModule::make(std::move(d));
}

CrossedModule reflect_to_xmod(const TwoCrossedModule& x) {
  const Quotient q = quotient(x.M(), x.d2().image());
  std::vector<Elem> bd(q.group->order());
  for (Elem c = 0; c < q.group->order(); ++c) bd[c] = x.d1()(q.representatives[c]);
  return CrossedModule::make(quotient_action(x.act_m(), q), GroupHom::make(q.group, x.P(), bd));
}

TrivialLiftingReport trivial_lifting_report(const TwoCrossedModule& x) {
  for (Elem a = 0; a < x.M()->order(); ++a)
    for (Elem b = 0; b < x.M()->order(); ++b)
      if (x.lift(a, b) != 0)
        throw Error(ErrorKind::LiftingNotTrivial,
                    "{" + x.M()->label(a) + "," + x.M()->label(b) + "} is not the identity", {a, b});
  TrivialLiftingReport r;
  const auto bad = cm2_failures(x.base(), 1);
  if (!bad.empty()) r.peiffer_identity = {false, {bad[0].first, bad[0].second}};
  const Group& L = x.L();
  for (Elem a = 0; a < L->order() && r.l_abelian.pass; ++a)
    for (Elem b = 0; b < L->order(); ++b)
      if (L->mul(a, b) != L->mul(b, a)) {
        r.l_abelian = {false, {a, b}};
        break;
      }
  for (Elem m = 0; m < x.M()->order() && r.image_acts_trivially.pass; ++m)
    for (Elem l = 0; l < L->order(); ++l)
      if (x.act_l()(x.d1()(m), l) != l) {
        r.image_acts_trivially = {false, {m, l}};
        break;
      }
  return r;
}

X2Morphism X2Morphism::make(GroupHom f2, GroupHom f1, GroupHom f0, TwoCrossedModule src, TwoCrossedModule dst) {
  if (f2.src()->order() != src.L()->order() || f2.dst()->order() != dst.L()->order() ||
      f1.src()->order() != src.M()->order() || f1.dst()->order() != dst.M()->order() ||
      f0.src()->order() != src.P()->order() || f0.dst()->order() != dst.P()->order())
    throw Error(ErrorKind::NotAHom, "morphism components do not match the modules");
  for (Elem m = 0; m < src.M()->order(); ++m)
    if (f0(src.d1()(m)) != dst.d1()(f1(m)))
      throw Error(ErrorKind::SquareNotCommuting, "f0∂₁ != ∂₁'f1 at m=" + src.M()->label(m), {m});
  for (Elem l = 0; l < src.L()->order(); ++l)
    if (f1(src.d2()(l)) != dst.d2()(f2(l)))
      throw Error(ErrorKind::SquareNotCommuting, "f1∂₂ != ∂₂'f2 at l=" + src.L()->label(l), {l});
  for (Elem p = 0; p < src.P()->order(); ++p) {
    for (Elem m = 0; m < src.M()->order(); ++m)
      if (f1(src.act_m()(p, m)) != dst.act_m()(f0(p), f1(m)))
        throw Error(ErrorKind::NotEquivariant, "f1(p·m) != f0(p)·f1(m)", {p, m});
    for (Elem l = 0; l < src.L()->order(); ++l)
      if (f2(src.act_l()(p, l)) != dst.act_l()(f0(p), f2(l)))
        throw Error(ErrorKind::NotEquivariant, "f2(p·l) != f0(p)·f2(l)", {p, l});
  }
  for (Elem a = 0; a < src.M()->order(); ++a)
    for (Elem b = 0; b < src.M()->order(); ++b)
      if (f2(src.lift(a, b)) != dst.lift(f1(a), f1(b)))
        throw Error(ErrorKind::LiftingNotPreserved, "f2{m0,m1} != {f1 m0, f1 m1}", {a, b});
  return X2Morphism(std::move(f2), std::move(f1), std::move(f0), std::move(src), std::move(dst));
}

X2Morphism X2Morphism::identity(const TwoCrossedModule& x) {
  return make(GroupHom::identity(x.L()), GroupHom::identity(x.M()), GroupHom::identity(x.P()), x, x);
}

X2Morphism compose(const X2Morphism& g, const X2Morphism& f) {
  return X2Morphism::make(compose(g.f2(), f.f2()), compose(g.f1(), f.f1()), compose(g.f0(), f.f0()), f.src(),
                          g.dst());
}

X2Morphism from_crossed(const XModMorphism& f) {
  const TwoCrossedModule a = from_crossed(CrossedModule::from(f.src()));
  const TwoCrossedModule b = from_crossed(CrossedModule::from(f.dst()));
  return X2Morphism::make(GroupHom::trivial(a.L(), b.L()), f.mu(), f.eta(), a, b);
}

std::optional<X2Morphism> find_x2_isomorphism(const TwoCrossedModule& a, const TwoCrossedModule& b) {
  if (a.L()->order() != b.L()->order() || a.M()->order() != b.M()->order() || a.P()->order() != b.P()->order())
    return std::nullopt;
  const int bound = std::max({kHomSearchBound, a.L()->order(), a.M()->order(), a.P()->order()});
  std::optional<X2Morphism> found;
  for_each_hom(
      a.P(), b.P(),
      [&](const GroupHom& f0) {
        if (!f0.is_injective()) return true;
        for_each_hom(
            a.M(), b.M(),
            [&](const GroupHom& f1) {
              if (!f1.is_injective()) return true;
              try {
                XModMorphism::make(f1, f0, a.base(), b.base());
              } catch (const Error&) {
                return true;
              }
              for_each_hom(
                  a.L(), b.L(),
                  [&](const GroupHom& f2) {
                    if (!f2.is_injective()) return true;
                    try {
                      found = X2Morphism::make(f2, f1, f0, a, b);
                      return false;
                    } catch (const Error&) {
                      return true;
                    }
                  },
                  bound);
              return !found.has_value();
            },
            bound);
        return !found.has_value();
      },
      bound);
  return found;
}

}  // namespace crossmod
