#include "crossmod/xmod.hpp"

#include <algorithm>

namespace crossmod {

namespace {

void require_same(const Group& a, const Group& b, const char* what) {
  if (a.get() != b.get()) throw Error(ErrorKind::NotAnAction, std::string(what));
}

}  // namespace

PreCrossedModule PreCrossedModule::make(ActionTable act, GroupHom boundary) {
  require_same(act.space(), boundary.src(), "action space is not the boundary source");
  require_same(act.actor(), boundary.dst(), "acting group is not the boundary target");
  const Group& m = boundary.src();
  const Group& p = boundary.dst();
  for (Elem x = 0; x < p->order(); ++x)
    for (Elem y = 0; y < m->order(); ++y)
      if (boundary(act(x, y)) != p->conj(x, boundary(y)))
        throw Error(ErrorKind::CM1Violation,
                    "∂(p·m) != p∂(m)p^-1 at p=" + p->label(x) + ", m=" + m->label(y), {x, y});
  return PreCrossedModule(std::move(act), std::move(boundary));
}

CrossedModule CrossedModule::make(ActionTable act, GroupHom boundary) {
  return from(PreCrossedModule::make(std::move(act), std::move(boundary)));
}

CrossedModule CrossedModule::from(const PreCrossedModule& x) {
  const auto bad = cm2_failures(x, 1);
  if (!bad.empty()) {
    const auto [m, n] = bad.front();
    throw Error(ErrorKind::CM2Violation,
                "∂(m)·n != m n m^-1 at m=" + x.M()->label(m) + ", n=" + x.M()->label(n), {m, n});
  }
  return CrossedModule(x);
}

std::vector<std::pair<Elem, Elem>> cm2_failures(const PreCrossedModule& x, std::size_t max) {
  std::vector<std::pair<Elem, Elem>> out;
  const Group& m = x.M();
  for (Elem a = 0; a < m->order(); ++a)
    for (Elem b = 0; b < m->order(); ++b)
      if (x.act(x.boundary()(a), b) != m->conj(a, b)) {
        out.emplace_back(a, b);
        if (max && out.size() >= max) return out;
      }
  return out;
}

bool is_crossed(const PreCrossedModule& x) { return cm2_failures(x, 1).empty(); }

Elem peiffer_commutator(const PreCrossedModule& x, Elem m, Elem m2) {
  const Group& g = x.M();
  return g->mul(g->conj(m, m2), x.act(x.boundary()(m), g->inv(m2)));
}

Subgroup peiffer_subgroup(const PreCrossedModule& x) {
  std::vector<Elem> gens;
  for (Elem a = 0; a < x.M()->order(); ++a)
    for (Elem b = 0; b < x.M()->order(); ++b) gens.push_back(peiffer_commutator(x, a, b));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Subgroup s = Subgroup::generated(x.M(), gens);
  if (!s.is_normal()) throw Error(ErrorKind::Internal, "Peiffer subgroup is not normal");
  return s;
}

CrossedModule normal_inclusion(const Group& p, const Subgroup& n) {
  if (n.parent().get() != p.get()) throw Error(ErrorKind::NotNormal, "subgroup of a different group");
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, "inclusion of a non-normal subgroup");
  auto [sub, incl] = n.as_group();
  const auto elems = n.elements();
  std::vector<Elem> pos(p->order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> rows(p->order(), std::vector<Elem>(elems.size()));
  for (Elem x = 0; x < p->order(); ++x)
    for (std::size_t i = 0; i < elems.size(); ++i) rows[x][i] = pos[p->conj(x, elems[i])];
  return CrossedModule::make(ActionTable::make(p, sub, rows), incl);
}

CrossedModule automorphism_xmod(const Group& m, int bound) {
  AutomorphismGroup aut = automorphism_group(m, bound);
  std::vector<Elem> chi(m->order());
  for (Elem x = 0; x < m->order(); ++x) {
    std::vector<Elem> inner(m->order());
    for (Elem y = 0; y < m->order(); ++y) inner[y] = m->conj(x, y);
    const auto it = std::lower_bound(aut.maps.begin(), aut.maps.end(), inner);
    chi[x] = static_cast<Elem>(it - aut.maps.begin());
  }
  return CrossedModule::make(aut.action, GroupHom::make(m, aut.group, chi));
}

CrossedModule abelian_xmod(const ActionTable& act) {
  return CrossedModule::make(act, GroupHom::trivial(act.space(), act.actor()));
}

CrossedModule central_extension_xmod(const GroupHom& boundary, std::span<const Elem> section) {
  const Group& m = boundary.src();
  const Group& p = boundary.dst();
  if (!boundary.is_surjective()) throw Error(ErrorKind::NotEpi, "boundary is not surjective");
  for (Elem k : boundary.kernel().elements())
    if (!m->is_central(k))
      throw Error(ErrorKind::KernelNotCentral, "kernel element " + m->label(k) + " is not central", {k});
  std::vector<Elem> s(p->order(), -1);
  if (section.empty()) {
    for (Elem x = m->order() - 1; x >= 0; --x) s[boundary(x)] = x;
  } else {
    if (static_cast<int>(section.size()) != p->order())
      throw Error(ErrorKind::NotAHom, "section must have one entry per element of P");
    for (Elem q = 0; q < p->order(); ++q) {
      if (boundary(section[q]) != q) throw Error(ErrorKind::NotAHom, "section is not a preimage", {q});
      s[q] = section[q];
    }
  }
  std::vector<std::vector<Elem>> rows(p->order(), std::vector<Elem>(m->order()));
  for (Elem q = 0; q < p->order(); ++q)
    for (Elem x = 0; x < m->order(); ++x) rows[q][x] = m->conj(s[q], x);
  return CrossedModule::make(ActionTable::make(p, m, rows), boundary);
}

XModMorphism XModMorphism::make(GroupHom mu, GroupHom eta, PreCrossedModule src, PreCrossedModule dst) {
  if (mu.src()->order() != src.M()->order() || mu.dst()->order() != dst.M()->order() ||
      eta.src()->order() != src.P()->order() || eta.dst()->order() != dst.P()->order())
    throw Error(ErrorKind::NotAHom, "morphism components do not match the modules");
  const Group& m = src.M();
  for (Elem x = 0; x < m->order(); ++x)
    if (eta(src.boundary()(x)) != dst.boundary()(mu(x)))
      throw Error(ErrorKind::SquareNotCommuting, "η∂(m) != ∂'μ(m) at m=" + m->label(x), {x});
  for (Elem p = 0; p < src.P()->order(); ++p)
    for (Elem x = 0; x < m->order(); ++x)
      if (mu(src.act(p, x)) != dst.act(eta(p), mu(x)))
        throw Error(ErrorKind::NotEquivariant,
                    "μ(p·m) != η(p)·μ(m) at p=" + src.P()->label(p) + ", m=" + m->label(x), {p, x});
  return XModMorphism(std::move(mu), std::move(eta), std::move(src), std::move(dst));
}

XModMorphism XModMorphism::identity(const PreCrossedModule& x) {
  return make(GroupHom::identity(x.M()), GroupHom::identity(x.P()), x, x);
}

XModMorphism compose(const XModMorphism& g, const XModMorphism& f) {
  return XModMorphism::make(compose(g.mu(), f.mu()), compose(g.eta(), f.eta()), f.src(), g.dst());
}

std::optional<XModMorphism> find_xmod_isomorphism(const PreCrossedModule& a, const PreCrossedModule& b) {
  if (a.M()->order() != b.M()->order() || a.P()->order() != b.P()->order()) return std::nullopt;
  std::optional<XModMorphism> found;
  const int bound = std::max({kHomSearchBound, a.M()->order(), a.P()->order()});
  for_each_hom(
      a.P(), b.P(),
      [&](const GroupHom& eta) {
        if (!eta.is_injective()) return true;
        for_each_hom(
            a.M(), b.M(),
            [&](const GroupHom& mu) {
              if (!mu.is_injective()) return true;
              try {
                found = XModMorphism::make(mu, eta, a, b);
                return false;
              } catch (const Error&) {
                return true;
              }
            },
            bound);
        return !found.has_value();
      },
      bound);
  return found;
}

}  // namespace crossmod
