#include "crossmod/pullback.hpp"

#include <map>

namespace crossmod {

namespace {

// Subgroup of A×B given by its element pairs, in the listed order (the
// identity pair must come first).
Group pair_group(const Group& a, const Group& b, const std::vector<std::pair<Elem, Elem>>& elems) {
  std::map<std::pair<Elem, Elem>, Elem> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elem>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::pair<Elem, Elem> prod{a->mul(elems[i].first, elems[j].first),
                                       b->mul(elems[i].second, elems[j].second)};
      const auto it = index.find(prod);
      if (it == index.end()) throw Error(ErrorKind::Internal, "pair set is not closed under multiplication");
      table[i][j] = it->second;
    }
  std::vector<std::string> labels;
  for (const auto& [x, y] : elems) labels.push_back("(" + a->label(x) + "," + b->label(y) + ")");
  return FiniteGroup::from_table(table, labels);
}

void require_equal_maps(const GroupHom& a, const GroupHom& b, const char* what) {
  if (a.map() != b.map() || a.src()->order() != b.src()->order())
    throw Error(ErrorKind::NoFactorization, what);
}

struct FiberProduct {
  Group group;
  std::vector<std::pair<Elem, Elem>> legend;
  std::map<std::pair<Elem, Elem>, Elem> index;
};

FiberProduct fiber_product(const GroupHom& v, const GroupHom& phi) {
  FiberProduct f;
  for (Elem n = 0; n < v.src()->order(); ++n)
    for (Elem p = 0; p < phi.src()->order(); ++p)
      if (v(n) == phi(p)) {
        f.index[{n, p}] = static_cast<Elem>(f.legend.size());
        f.legend.emplace_back(n, p);
      }
  f.group = pair_group(v.src(), phi.src(), f.legend);
  return f;
}

// Pullback action p'·(n,p) = (φ(p')·n, p'pp'^-1) on a fiber product.
ActionTable fiber_action(const FiberProduct& f, const ActionTable& on_n, const GroupHom& phi) {
  const Group& P = phi.src();
  std::vector<std::vector<Elem>> rows(P->order(), std::vector<Elem>(f.legend.size()));
  for (Elem q = 0; q < P->order(); ++q)
    for (std::size_t i = 0; i < f.legend.size(); ++i) {
      const auto [n, p] = f.legend[i];
      rows[q][i] = f.index.at({on_n(phi(q), n), P->conj(q, p)});
    }
  return ActionTable::make(P, f.group, rows);
}

}  // namespace

PullbackXModResult pullback_xmod(const CrossedModule& nmod, const GroupHom& phi) {
  if (phi.dst()->order() != nmod.P()->order())
    throw Error(ErrorKind::NotAHom, "φ must land in the base of the crossed module");
  FiberProduct f = fiber_product(nmod.boundary(), phi);
  std::vector<Elem> bd, to_n;
  for (const auto& [n, p] : f.legend) {
    bd.push_back(p);
    to_n.push_back(n);
  }
  CrossedModule module =
      CrossedModule::make(fiber_action(f, nmod.action(), phi), GroupHom::make(f.group, phi.src(), bd));
  XModMorphism proj = XModMorphism::make(GroupHom::make(f.group, nmod.M(), to_n), phi, module, nmod);
  return PullbackXModResult{module, proj, phi, std::move(f.legend)};
}

Factorization pullback_xmod_universal(const CrossedModule& mmod, const XModMorphism& h,
                                      const PullbackXModResult& pb) {
  require_equal_maps(h.eta(), pb.phi, "morphism base is not the pullback map");
  const Group& target = pb.module.M();
  std::map<std::pair<Elem, Elem>, Elem> index;
  for (std::size_t i = 0; i < pb.legend.size(); ++i) index[pb.legend[i]] = static_cast<Elem>(i);
  std::vector<Elem> map;
  for (Elem m = 0; m < mmod.M()->order(); ++m) {
    const auto it = index.find({h.mu()(m), mmod.boundary()(m)});
    if (it == index.end()) throw Error(ErrorKind::NoFactorization, "(h(m), μ(m)) is not in the pullback", {m});
    map.push_back(it->second);
  }
  Factorization out{GroupHom::make(mmod.M(), target, map), std::nullopt, false, 0};
  const auto ok = [&](const GroupHom& g) {
    try {
      XModMorphism::make(g, GroupHom::identity(mmod.P()), mmod, pb.module);
    } catch (const Error&) {
      return false;
    }
    return compose(pb.proj_to_N.mu(), g).map() == h.mu().map();
  };
  if (!ok(out.map)) throw Error(ErrorKind::NoFactorization, "h' is not a morphism factoring h");
  if (mmod.M()->order() <= kUniquenessBound) {
    for_each_hom(mmod.M(), target, [&](const GroupHom& g) {
      if (ok(g)) ++out.candidates;
      return true;
    });
    out.uniqueness_checked = true;
    if (out.candidates != 1)
      throw Error(ErrorKind::NotUnique, std::to_string(out.candidates) + " factorizations found");
  }
  return out;
}

PullbackX2Result pullback_x2mod(const TwoCrossedModule& x, const GroupHom& phi) {
  if (phi.dst()->order() != x.P()->order())
    throw Error(ErrorKind::NotAHom, "φ must land in the base of the 2-crossed module");
  const Group& P = phi.src();
  // middle level
  FiberProduct f = fiber_product(x.d1(), phi);
  const ActionTable act_m = fiber_action(f, x.act_m(), phi);
  std::vector<Elem> d1, to_n;
  for (const auto& [n, p] : f.legend) {
    d1.push_back(p);
    to_n.push_back(n);
  }
  // top level: ∂₂⁻¹(Ker ∂₁)
  const Subgroup ker = x.d1().kernel();
  std::vector<bool> mask(x.L()->order());
  for (Elem h = 0; h < x.L()->order(); ++h) mask[h] = ker.contains(x.d2()(h));
  const Subgroup top = Subgroup::from_mask(x.L(), mask);
  auto [L, incl] = top.as_group();
  const std::vector<Elem> legend_l = top.elements();
  std::vector<Elem> pos(x.L()->order(), -1);
  for (std::size_t i = 0; i < legend_l.size(); ++i) pos[legend_l[i]] = static_cast<Elem>(i);

  std::vector<Elem> d2;
  for (Elem h : legend_l) d2.push_back(f.index.at({x.d2()(h), 0}));
  std::vector<std::vector<Elem>> rows(P->order(), std::vector<Elem>(legend_l.size()));
  for (Elem p = 0; p < P->order(); ++p)
    for (std::size_t i = 0; i < legend_l.size(); ++i) rows[p][i] = pos[x.act_l()(phi(p), legend_l[i])];

  const int nm = static_cast<int>(f.legend.size());
  std::vector<Elem> lifting(static_cast<std::size_t>(nm) * nm);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) {
      const Elem v = x.lift(f.legend[i].first, f.legend[j].first);
      if (pos[v] < 0)
        throw Error(ErrorKind::LiftingEscapesKernel, "{n,n'} lies outside ∂₂⁻¹(Ker ∂₁)",
                    {f.legend[i].first, f.legend[j].first});
      lifting[static_cast<std::size_t>(i) * nm + j] = pos[v];
    }
  const GroupHom d1h = GroupHom::make(f.group, P, d1);
  TwoCrossedData data{GroupHom::make(L, f.group, d2), d1h, ActionTable::make(P, L, rows), act_m, std::move(lifting)};
  TwoCrossedModule module = TwoCrossedModule::make(std::move(data));
  X2Morphism proj = X2Morphism::make(incl, GroupHom::make(f.group, x.M(), to_n), phi, module, x);
  return PullbackX2Result{module, proj, phi, std::move(f.legend), legend_l};
}

Factorization pullback_x2_universal(const TwoCrossedModule& src, const X2Morphism& f, const PullbackX2Result& pb) {
  require_equal_maps(f.f0(), pb.phi, "morphism base is not the pullback map");
  const TwoCrossedModule& tgt = pb.module;
  std::map<std::pair<Elem, Elem>, Elem> index;
  for (std::size_t i = 0; i < pb.legend_m.size(); ++i) index[pb.legend_m[i]] = static_cast<Elem>(i);
  std::vector<Elem> pos(pb.proj.f2().dst()->order(), -1);
  for (std::size_t i = 0; i < pb.legend_l.size(); ++i) pos[pb.legend_l[i]] = static_cast<Elem>(i);

  std::vector<Elem> m1, m2;
  for (Elem b = 0; b < src.M()->order(); ++b) {
    const auto it = index.find({f.f1()(b), src.d1()(b)});
    if (it == index.end()) throw Error(ErrorKind::NoFactorization, "(f1(b), ∂₁'(b)) is not in the pullback", {b});
    m1.push_back(it->second);
  }
  for (Elem b = 0; b < src.L()->order(); ++b) {
    if (pos[f.f2()(b)] < 0) throw Error(ErrorKind::NoFactorization, "f2 leaves ∂₂⁻¹(Ker ∂₁)", {b});
    m2.push_back(pos[f.f2()(b)]);
  }
  const GroupHom idP = GroupHom::identity(src.P());
  const auto ok = [&](const GroupHom& g2, const GroupHom& g1) {
    try {
      X2Morphism::make(g2, g1, idP, src, tgt);
    } catch (const Error&) {
      return false;
    }
    return compose(pb.proj.f2(), g2).map() == f.f2().map() && compose(pb.proj.f1(), g1).map() == f.f1().map();
  };
  Factorization out{GroupHom::make(src.M(), tgt.M(), m1), GroupHom::make(src.L(), tgt.L(), m2), false, 0};
  if (!ok(*out.top, out.map)) throw Error(ErrorKind::NoFactorization, "(f2*, f1*, id) is not a factorization");
  if (src.M()->order() <= kUniquenessBound && src.L()->order() <= kUniquenessBound) {
    std::vector<GroupHom> c1, c2;
    for_each_hom(src.M(), tgt.M(), [&](const GroupHom& g) {
      if (compose(pb.proj.f1(), g).map() == f.f1().map()) c1.push_back(g);
      return true;
    });
    for_each_hom(src.L(), tgt.L(), [&](const GroupHom& g) {
      if (compose(pb.proj.f2(), g).map() == f.f2().map()) c2.push_back(g);
      return true;
    });
    for (const auto& g1 : c1)
      for (const auto& g2 : c2)
        if (ok(g2, g1)) ++out.candidates;
    out.uniqueness_checked = true;
    if (out.candidates != 1)
      throw Error(ErrorKind::NotUnique, std::to_string(out.candidates) + " factorizations found");
  }
  return out;
}

}  // namespace crossmod
