#include "crossmod/induced.hpp"

#include <algorithm>
#include <set>

namespace crossmod {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Epi: return "epi";
    case Strategy::Mono: return "mono";
    case Strategy::GeneralTC: return "general";
  }
  return "?";
}

std::string to_string(Status s) { return s == Status::Decided ? "decided" : "undecided at limit"; }

namespace {

Letter letter(int gen) { return gen + 1; }

// Copies of a group X indexed by Q (the free Q-group on X) or by a left
// transversal of φ(P) in Q when φ is injective.
struct Block {
  Group X;
  ActionTable act;  // P_i on X
  GroupHom phi;     // P_i -> Q
  bool mono = false;
  std::vector<Elem> reps;     // Q-element carried by each copy
  std::vector<int> copy_of;   // mono: copy whose coset contains q
  std::vector<Elem> phi_pre;  // mono: preimage under φ, -1 outside the image
  int first = 0;

  int gen(int c, Elem x) const { return first + c * X->order() + x; }
  int size() const { return static_cast<int>(reps.size()) * X->order(); }

  // Generator representing q·(copy c, x).
  int translate(Elem q, int c, Elem x) const {
    const Group& Q = phi.dst();
    const Elem qq = Q->mul(q, reps[c]);
    if (!mono) return gen(qq, x);
    const int u = copy_of[qq];
    const Elem p = phi_pre[Q->mul(Q->inv(reps[u]), qq)];
    return gen(u, act(p, x));
  }
};

Block make_block(const Group& X, const ActionTable& act, const GroupHom& phi, bool mono, int first) {
  Block b{X, act, phi, mono, {}, {}, {}, first};
  const Group& Q = phi.dst();
  if (!mono) {
    for (Elem q = 0; q < Q->order(); ++q) b.reps.push_back(q);
    return b;
  }
  if (!phi.is_injective()) throw Error(ErrorKind::StrategyMismatch, "transversal presentation needs φ injective");
  const Subgroup image = phi.image();
  b.reps = left_transversal(Q, image);
  b.phi_pre.assign(Q->order(), -1);
  for (Elem p = 0; p < phi.src()->order(); ++p) b.phi_pre[phi(p)] = p;
  b.copy_of.assign(Q->order(), -1);
  for (int c = 0; c < static_cast<int>(b.reps.size()); ++c)
    for (Elem q = 0; q < Q->order(); ++q)
      if (image.contains(Q->mul(Q->inv(b.reps[c]), q))) b.copy_of[q] = c;
  return b;
}

// A presentation whose generators are permuted by Q and carry a boundary.
struct Model {
  Group Q;
  Presentation pres;
  std::vector<Block> blocks;
  std::vector<std::vector<int>> gen_action;  // [q][g]
  std::vector<Elem> gen_boundary;
  int lift_first = -1;
  int nN = 0;
  std::vector<X2Axiom> saturable;

  int lift(Elem a, Elem b) const { return lift_first + a * nN + b; }
  int num_generators() const { return pres.num_generators(); }

  void add_generator(const std::string& legend) {
    pres.generators.push_back("x" + std::to_string(pres.generators.size()));
    pres.legend.push_back(legend);
  }
  Word translate(Elem q, const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
      const int g = gen_action[q][std::abs(l) - 1];
      out.push_back(l > 0 ? letter(g) : -letter(g));
    }
    return out;
  }
};

void add_block(Model& m, const Group& X, const ActionTable& act, const GroupHom& phi, bool mono) {
  Block b = make_block(X, act, phi, mono, m.num_generators());
  for (int c = 0; c < static_cast<int>(b.reps.size()); ++c)
    for (Elem x = 0; x < X->order(); ++x) {
      const std::string q = m.Q->label(b.reps[c]);
      m.add_generator(mono ? "[" + q + "]" + X->label(x) : "(" + q + "," + X->label(x) + ")");
    }
  m.blocks.push_back(std::move(b));
}

// Relations of the free Q-group on each block.
void add_block_relators(Model& m) {
  for (const Block& b : m.blocks) {
    const Group& X = b.X;
    for (int c = 0; c < static_cast<int>(b.reps.size()); ++c)
      for (Elem x = 0; x < X->order(); ++x)
        for (Elem y = 0; y < X->order(); ++y)
          m.pres.add_relator({letter(b.gen(c, x)), letter(b.gen(c, y)), -letter(b.gen(c, X->mul(x, y)))});
    if (b.mono) continue;
    const Group& Q = m.Q;
    for (Elem q = 0; q < Q->order(); ++q)
      for (Elem p = 0; p < b.phi.src()->order(); ++p)
        for (Elem x = 0; x < X->order(); ++x)
          m.pres.add_relator({letter(b.gen(Q->mul(q, b.phi(p)), x)), -letter(b.gen(q, b.act(p, x)))});
  }
}

void fill_block_action(Model& m) {
  const int n = m.num_generators();
  m.gen_action.assign(m.Q->order(), std::vector<int>(n, -1));
  for (Elem q = 0; q < m.Q->order(); ++q)
    for (const Block& b : m.blocks)
      for (int c = 0; c < static_cast<int>(b.reps.size()); ++c)
        for (Elem x = 0; x < b.X->order(); ++x) m.gen_action[q][b.gen(c, x)] = b.translate(q, c, x);
}

void check_cap(const Model& m, const InducedOptions& opts) {
  if (m.pres.relators.size() > opts.relator_cap)
    throw Error(ErrorKind::RelatorCapExceeded, std::to_string(m.pres.relators.size()) +
                                                   " relators exceed the cap of " +
                                                   std::to_string(opts.relator_cap));
}

// Adds lhs·rhs^-1 and all its Q-translates, skipping words already present.
void add_identification(Model& m, std::set<Word>& seen, const Word& lhs, const Word& rhs) {
  const Word w = free_reduce(concat(lhs, inverse(rhs)));
  if (w.empty()) return;
  for (Elem q = 0; q < m.Q->order(); ++q) {
    Word t = free_reduce(m.translate(q, w));
    if (seen.insert(t).second) m.pres.add_relator(std::move(t));
  }
}

ActionTable action_from_generators(const Model& m, const EnumerationResult& r) {
  const Group& G = r.group;
  std::vector<std::vector<Elem>> rows;
  for (Elem q = 0; q < m.Q->order(); ++q) {
    std::vector<Elem> img;
    for (int g = 0; g < m.num_generators(); ++g) img.push_back(r.generator_images[m.gen_action[q][g]]);
    const auto h = extend_from_generators(G, G, r.generator_images, img);
    if (!h) throw Error(ErrorKind::Internal, "Q-action does not descend to the enumerated group", {q});
    rows.push_back(h->map());
  }
  return ActionTable::make(m.Q, G, rows);
}

GroupHom boundary_from_generators(const Model& m, const EnumerationResult& r, const Group& target) {
  const auto h = extend_from_generators(r.group, target, r.generator_images, m.gen_boundary);
  if (!h) throw Error(ErrorKind::Internal, "boundary does not descend to the enumerated group");
  return *h;
}

void record(EnumerationSummary& s, const Model& m, const EnumerationResult& r) {
  s.relators = m.pres.relators.size();
  s.max_active = std::max(s.max_active, r.max_active);
  s.total_defined += r.total_defined;
  s.coset_limit = r.coset_limit;
  ++s.rounds;
}

// Enumerates; returns false when the coset limit is hit.
bool enumerate(const Model& m, const InducedOptions& opts, EnumerationSummary& s, EnumerationResult& r) {
  check_cap(m, opts);
  r = todd_coxeter(m.pres, {opts.coset_limit});
  record(s, m, r);
  if (!r.complete()) return false;
  if (!r.group)
    throw Error(ErrorKind::BoundExceeded, "enumerated order " + std::to_string(r.order()) +
                                              " exceeds the exhaustive bound");
  return true;
}

// ---------------------------------------------------------------- dimension 1

Model xmod_model(const CrossedModule& mmod, const GroupHom& phi, bool mono) {
  if (phi.src()->order() != mmod.P()->order()) throw Error(ErrorKind::NotAHom, "φ must start at the base P");
  Model m;
  m.Q = phi.dst();
  add_block(m, mmod.M(), mmod.action(), phi, mono);
  const Block& b = m.blocks[0];
  const Group& Q = m.Q;
  for (int c = 0; c < static_cast<int>(b.reps.size()); ++c)
    for (Elem x = 0; x < b.X->order(); ++x)
      m.gen_boundary.push_back(Q->conj(b.reps[c], phi(mmod.boundary()(x))));
  fill_block_action(m);
  add_block_relators(m);
  // Peiffer relations b c b^-1 = ∂(b)·c over all generators
  for (int g = 0; g < m.num_generators(); ++g) {
    if ((g - b.first) % b.X->order() == 0) continue;
    for (int h = 0; h < m.num_generators(); ++h) {
      if ((h - b.first) % b.X->order() == 0) continue;
      m.pres.add_relator({letter(g), letter(h), -letter(g), -letter(m.gen_action[m.gen_boundary[g]][h])});
    }
  }
  return m;
}

InducedXModResult run_xmod_model(Model m, const CrossedModule& mmod, const GroupHom& phi, Strategy used,
                                 const InducedOptions& opts) {
  InducedXModResult out;
  out.strategy_used = used;
  std::set<Word> seen(m.pres.relators.begin(), m.pres.relators.end());
  for (int round = 0; round < opts.max_rounds; ++round) {
    EnumerationResult r;
    if (!enumerate(m, opts, out.summary, r)) {
      out.presentation = m.pres;
      return out;
    }
    const ActionTable act = action_from_generators(m, r);
    const GroupHom bd = boundary_from_generators(m, r, m.Q);
    const PreCrossedModule pre = PreCrossedModule::make(act, bd);
    const auto bad = cm2_failures(pre, 0);
    if (bad.empty()) {
      out.status = Status::Decided;
      out.presentation = m.pres;
      out.module = CrossedModule::from(pre);
      std::vector<Elem> canon;
      for (Elem x = 0; x < mmod.M()->order(); ++x) canon.push_back(r.generator_images[m.blocks[0].gen(0, x)]);
      out.canonical = XModMorphism::make(GroupHom::make(mmod.M(), r.group, canon), phi, mmod, *out.module);
      return out;
    }
    const auto words = element_words(r);
    const Group& G = r.group;
    for (const auto& [a, b] : bad)
      add_identification(m, seen, words[act(bd(a), b)], words[G->conj(a, b)]);
  }
  throw Error(ErrorKind::Internal, "Peiffer relations did not stabilize");
}

InducedXModResult xmod_epi(const CrossedModule& mmod, const GroupHom& phi) {
  if (!phi.is_surjective()) throw Error(ErrorKind::StrategyMismatch, "quotient path needs φ surjective");
  const Group& Q = phi.dst();
  const Subgroup km = action_commutator_subgroup(phi.kernel(), mmod.action());
  const Quotient mq = quotient(mmod.M(), km);
  std::vector<Elem> pre(Q->order(), -1);
  for (Elem p = mmod.P()->order() - 1; p >= 0; --p) pre[phi(p)] = p;
  const int n = mq.group->order();
  std::vector<std::vector<Elem>> rows(Q->order(), std::vector<Elem>(n));
  for (Elem q = 0; q < Q->order(); ++q)
    for (Elem x = 0; x < n; ++x) rows[q][x] = mq.projection(mmod.act(pre[q], mq.representatives[x]));
  // independence of the preimage, checked over every element of M
  for (Elem p = 0; p < mmod.P()->order(); ++p)
    for (Elem x = 0; x < mmod.M()->order(); ++x)
      if (mq.projection(mmod.act(p, x)) != rows[phi(p)][mq.projection(x)])
        throw Error(ErrorKind::NotWellDefined, "Q-action on M/[K,M] depends on the preimage", {p, x});
  std::vector<Elem> bd(n);
  for (Elem x = 0; x < n; ++x) bd[x] = phi(mmod.boundary()(mq.representatives[x]));
  InducedXModResult out;
  out.status = Status::Decided;
  out.strategy_used = Strategy::Epi;
  out.module = CrossedModule::make(ActionTable::make(Q, mq.group, rows), GroupHom::make(mq.group, Q, bd));
  out.canonical = XModMorphism::make(mq.projection, phi, mmod, *out.module);
  return out;
}

// ---------------------------------------------------------------- dimension 2

struct X2Source {
  TwoCrossedModule x;
  XModMorphism theta;
};

// Generators: one block per source, then the lifting symbols (n1, n2).
Model x2_model(const PreCrossedModule& base, const std::vector<X2Source>& sources, bool mono,
               bool compare_relators) {
  Model m;
  m.Q = base.P();
  const Group& Q = m.Q;
  const Group& N = base.M();
  for (const auto& s : sources) {
    if (s.theta.eta().dst()->order() != Q->order() || s.theta.mu().dst()->order() != N->order())
      throw Error(ErrorKind::NotAHom, "θ must land in the target pre-crossed module");
    if (s.theta.mu().src()->order() != s.x.M()->order() || s.theta.eta().src()->order() != s.x.P()->order())
      throw Error(ErrorKind::NotAHom, "θ must start at the base of the 2-crossed module");
    add_block(m, s.x.L(), s.x.act_l(), s.theta.eta(), mono);
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const Block& b = m.blocks[i];
    const auto& s = sources[i];
    for (int c = 0; c < static_cast<int>(b.reps.size()); ++c)
      for (Elem l = 0; l < b.X->order(); ++l)
        m.gen_boundary.push_back(base.act(b.reps[c], s.theta.mu()(s.x.d2()(l))));
  }
  m.nN = N->order();
  m.lift_first = m.num_generators();
  for (Elem a = 0; a < N->order(); ++a)
    for (Elem b = 0; b < N->order(); ++b) {
      m.add_generator("{" + N->label(a) + "," + N->label(b) + "}");
      m.gen_boundary.push_back(peiffer_commutator(base, a, b));
    }
  fill_block_action(m);
  for (Elem q = 0; q < Q->order(); ++q)
    for (Elem a = 0; a < N->order(); ++a)
      for (Elem b = 0; b < N->order(); ++b) m.gen_action[q][m.lift(a, b)] = m.lift(base.act(q, a), base.act(q, b));

  add_block_relators(m);
  // (q, {m1,m2}) = {q·φ'(m1), q·φ'(m2)}
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const Block& b = m.blocks[i];
    const auto& s = sources[i];
    const Group& M = s.x.M();
    for (Elem q = 0; q < Q->order(); ++q)
      for (Elem x = 0; x < M->order(); ++x)
        for (Elem y = 0; y < M->order(); ++y)
          m.pres.add_relator({letter(b.translate(q, 0, s.x.lift(x, y))),
                              -letter(m.lift(base.act(q, s.theta.mu()(x)), base.act(q, s.theta.mu()(y))))});
  }

  // generators that are not forced trivial by the block relations
  std::vector<int> xs;
  for (const Block& b : m.blocks)
    for (int g = b.first; g < b.first + b.size(); ++g)
      if ((g - b.first) % b.X->order() != 0) xs.push_back(g);
  for (Elem a = 1; a < N->order(); ++a)
    for (Elem b = 1; b < N->order(); ++b) xs.push_back(m.lift(a, b));

  const auto L = [&](int g) { return letter(g); };
  // PL2: {∂x, ∂y} = [x, y]
  for (int x : xs)
    for (int y : xs)
      m.pres.add_relator({L(m.lift(m.gen_boundary[x], m.gen_boundary[y])), L(y), L(x), -L(y), -L(x)});
  // PL3
  for (Elem a = 0; a < N->order(); ++a)
    for (Elem b = 0; b < N->order(); ++b)
      for (Elem c = 0; c < N->order(); ++c) {
        const Elem pc = peiffer_commutator(base, a, c);
        m.pres.add_relator({L(m.lift(a, N->mul(b, c))), -L(m.lift(a, b)), -L(m.lift(N->inv(pc), N->conj(a, b))),
                            -L(m.lift(a, c))});
        if (!compare_relators) {
          const Elem p = base.boundary()(a);
          m.pres.add_relator({L(m.lift(N->mul(a, b), c)), -L(m.lift(base.act(p, b), base.act(p, c))),
                              -L(m.lift(a, N->conj(b, c)))});
        } else {
          const Elem e = N->mul(N->mul(b, N->inv(c)), b);
          m.pres.add_relator({L(m.lift(N->mul(a, b), c)), -L(m.lift(a, b)), -L(m.lift(a, e))});
        }
      }
  // PL4 with ⁿx = x {∂x^-1, n}
  for (int x : xs)
    for (Elem n = 0; n < N->order(); ++n) {
      const Elem d = m.gen_boundary[x];
      const int back = m.lift(N->inv(d), n);
      m.pres.add_relator({L(m.lift(d, n)), L(x), L(back), -L(x)});
      const int bx = m.gen_action[base.boundary()(n)][x];
      m.pres.add_relator({L(m.lift(n, d)), L(bx), -L(back), -L(x)});
    }
  m.saturable = {X2Axiom::PL2, X2Axiom::PL3a, X2Axiom::PL4a, X2Axiom::PL4b};
  if (!compare_relators) m.saturable.push_back(X2Axiom::PL3b);
  return m;
}

struct X2Run {
  InducedX2Result result;
  EnumerationResult last;
};

X2Run run_x2_model(Model m, const PreCrossedModule& base, Strategy used, const InducedOptions& opts) {
  X2Run out;
  out.result.strategy_used = used;
  std::set<Word> seen(m.pres.relators.begin(), m.pres.relators.end());
  for (int round = 0; round < opts.max_rounds; ++round) {
    EnumerationResult& r = out.last;
    if (!enumerate(m, opts, out.result.summary, r)) {
      out.result.presentation = m.pres;
      return out;
    }
    const Group& N = base.M();
    const int n = N->order();
    std::vector<Elem> lifting(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) lifting[static_cast<std::size_t>(a) * n + b] = r.generator_images[m.lift(a, b)];
    TwoCrossedData data{boundary_from_generators(m, r, N), base.boundary(), action_from_generators(m, r),
                        base.action(), std::move(lifting)};
    const auto bad = scan_axioms(data, {false, 0});
    if (bad.empty()) {
      out.result.status = Status::Decided;
      out.result.presentation = m.pres;
      out.result.module = TwoCrossedModule::make(std::move(data));
      return out;
    }
    const auto words = element_words(r);
    for (const Violation& v : bad) {
      if (std::find(m.saturable.begin(), m.saturable.end(), v.axiom) == m.saturable.end())
        throw Error(error_kind(v.axiom), "quotient is not a 2-crossed module: " + v.message, v.witness);
      add_identification(m, seen, words[v.lhs], words[v.rhs]);
    }
  }
  throw Error(ErrorKind::Internal, "2-crossed relations did not stabilize");
}

InducedX2Result x2_epi(const XModMorphism& theta, const TwoCrossedModule& x) {
  const GroupHom& phi = theta.eta();
  const GroupHom& phi1 = theta.mu();
  if (!phi.is_surjective() || !phi1.is_surjective())
    throw Error(ErrorKind::StrategyMismatch, "quotient path needs φ and φ' surjective");
  const PreCrossedModule& base = theta.dst();
  const Group& Q = base.P();
  const Group& N = base.M();
  const Subgroup kl = action_commutator_subgroup(phi.kernel(), x.act_l());
  const Quotient lq = quotient(x.L(), kl);
  const int nl = lq.group->order();

  std::vector<Elem> ppre(Q->order(), -1), mpre(N->order(), -1);
  for (Elem p = x.P()->order() - 1; p >= 0; --p) ppre[phi(p)] = p;
  for (Elem a = x.M()->order() - 1; a >= 0; --a) mpre[phi1(a)] = a;

  std::vector<std::vector<Elem>> rows(Q->order(), std::vector<Elem>(nl));
  for (Elem q = 0; q < Q->order(); ++q)
    for (Elem l = 0; l < nl; ++l) rows[q][l] = lq.projection(x.act_l()(ppre[q], lq.representatives[l]));
  for (Elem p = 0; p < x.P()->order(); ++p)
    for (Elem l = 0; l < x.L()->order(); ++l)
      if (lq.projection(x.act_l()(p, l)) != rows[phi(p)][lq.projection(l)])
        throw Error(ErrorKind::NotWellDefined, "Q-action on L/[K,L] depends on the preimage", {p, l});

  std::vector<Elem> lifting(static_cast<std::size_t>(N->order()) * N->order());
  for (Elem a = 0; a < N->order(); ++a)
    for (Elem b = 0; b < N->order(); ++b)
      lifting[static_cast<std::size_t>(a) * N->order() + b] = lq.projection(x.lift(mpre[a], mpre[b]));
  for (Elem a = 0; a < x.M()->order(); ++a)
    for (Elem b = 0; b < x.M()->order(); ++b)
      if (lq.projection(x.lift(a, b)) != lifting[static_cast<std::size_t>(phi1(a)) * N->order() + phi1(b)])
        throw Error(ErrorKind::NotWellDefined, "lifting on N depends on the preimages", {a, b});

  std::vector<Elem> d2(nl);
  for (Elem l = 0; l < nl; ++l) d2[l] = phi1(x.d2()(lq.representatives[l]));
  for (Elem l = 0; l < x.L()->order(); ++l)
    if (phi1(x.d2()(l)) != d2[lq.projection(l)])
      throw Error(ErrorKind::NotWellDefined, "boundary does not descend to L/[K,L]", {l});

  InducedX2Result out;
  out.status = Status::Decided;
  out.strategy_used = Strategy::Epi;
  TwoCrossedData data{GroupHom::make(lq.group, N, d2), base.boundary(), ActionTable::make(Q, lq.group, rows),
                      base.action(), std::move(lifting)};
  out.module = TwoCrossedModule::make(std::move(data));
  out.canonical = X2Morphism::make(lq.projection, phi1, phi, x, *out.module);
  return out;
}

void check_theta(const XModMorphism& theta, const TwoCrossedModule& x) {
  if (theta.src().M().get() != x.M().get() || theta.src().P().get() != x.P().get())
    throw Error(ErrorKind::NotAHom, "θ must start at the base (M -> P) of the 2-crossed module");
}

X2Morphism canonical_x2(const TwoCrossedModule& x, const XModMorphism& theta, const Block& b,
                        const EnumerationResult& r, const TwoCrossedModule& module) {
  std::vector<Elem> f2;
  for (Elem l = 0; l < x.L()->order(); ++l) f2.push_back(r.generator_images[b.gen(0, l)]);
  return X2Morphism::make(GroupHom::make(x.L(), module.L(), f2), theta.mu(), theta.eta(), x, module);
}

}  // namespace

// ---------------------------------------------------------------- public API

Presentation induced_xmod_presentation(const CrossedModule& mmod, const GroupHom& phi) {
  return xmod_model(mmod, phi, false).pres;
}

Presentation induced_xmod_mono_presentation(const CrossedModule& mmod, const GroupHom& phi) {
  return xmod_model(mmod, phi, true).pres;
}

InducedXModResult induced_xmod(const CrossedModule& mmod, const GroupHom& phi, InducedOptions opts) {
  Strategy s = opts.strategy;
  if (s == Strategy::Auto)
    s = phi.is_surjective() ? Strategy::Epi : phi.is_injective() ? Strategy::Mono : Strategy::GeneralTC;
  switch (s) {
    case Strategy::Epi: return xmod_epi(mmod, phi);
    case Strategy::Mono: return run_xmod_model(xmod_model(mmod, phi, true), mmod, phi, s, opts);
    default: return run_xmod_model(xmod_model(mmod, phi, false), mmod, phi, Strategy::GeneralTC, opts);
  }
}

Factorization induced_xmod_universal(const InducedXModResult& r, const XModMorphism& h) {
  if (!r.decided()) throw Error(ErrorKind::UndecidedAtLimit, "induced module was not decided");
  const CrossedModule& mod = *r.module;
  const XModMorphism& canon = *r.canonical;
  if (h.eta().map() != canon.eta().map()) throw Error(ErrorKind::NoFactorization, "h is not over the same φ");
  const PreCrossedModule& nmod = h.dst();
  const Group& Q = mod.P();
  std::vector<Elem> gens, imgs;
  for (Elem q = 0; q < Q->order(); ++q)
    for (Elem m = 0; m < canon.mu().src()->order(); ++m) {
      gens.push_back(mod.act(q, canon.mu()(m)));
      imgs.push_back(nmod.act(q, h.mu()(m)));
    }
  const auto hp = extend_from_generators(mod.M(), nmod.M(), gens, imgs);
  if (!hp) throw Error(ErrorKind::NotWellDefined, "q·h(m) does not respect the relations of φ*(M)");
  const auto ok = [&](const GroupHom& g) {
    try {
      XModMorphism::make(g, GroupHom::identity(Q), mod, nmod);
    } catch (const Error&) {
      return false;
    }
    return compose(g, canon.mu()).map() == h.mu().map();
  };
  if (!ok(*hp)) throw Error(ErrorKind::NoFactorization, "h' is not a morphism of crossed Q-modules over h");
  Factorization out{*hp, std::nullopt, false, 0};
  if (mod.M()->order() <= kUniquenessBound) {
    for_each_hom(mod.M(), nmod.M(), [&](const GroupHom& g) {
      if (ok(g)) ++out.candidates;
      return true;
    });
    out.uniqueness_checked = true;
    if (out.candidates != 1) throw Error(ErrorKind::NotUnique, std::to_string(out.candidates) + " factorizations");
  }
  return out;
}

Presentation induced_x2mod_presentation(const XModMorphism& theta, const TwoCrossedModule& x,
                                        bool compare_relators) {
  check_theta(theta, x);
  return x2_model(theta.dst(), {{x, theta}}, false, compare_relators).pres;
}

Presentation induced_x2mod_mono_presentation(const XModMorphism& theta, const TwoCrossedModule& x,
                                             bool compare_relators) {
  check_theta(theta, x);
  return x2_model(theta.dst(), {{x, theta}}, true, compare_relators).pres;
}

InducedX2Result induced_x2mod(const XModMorphism& theta, const TwoCrossedModule& x, InducedOptions opts) {
  check_theta(theta, x);
  Strategy s = opts.strategy;
  if (s == Strategy::Epi) return x2_epi(theta, x);
  if (s == Strategy::Auto) {
    s = Strategy::GeneralTC;
    // the quotient L/[K,L] fails when {m,m'} is not constant on Ker φ' classes
    if (theta.eta().is_surjective() && theta.mu().is_surjective()) {
      try {
        return x2_epi(theta, x);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotWellDefined) throw;
      }
    }
  }
  const bool mono = s == Strategy::Mono;
  Model m = x2_model(theta.dst(), {{x, theta}}, mono, opts.compare_relators);
  const Block block = m.blocks[0];
  X2Run run = run_x2_model(std::move(m), theta.dst(), s, opts);
  if (run.result.decided()) run.result.canonical = canonical_x2(x, theta, block, run.last, *run.result.module);
  return run.result;
}

Factorization induced_x2_universal(const InducedX2Result& r, const X2Morphism& f) {
  if (!r.decided() || !r.canonical) throw Error(ErrorKind::UndecidedAtLimit, "induced module was not decided");
  const TwoCrossedModule& mod = *r.module;
  const X2Morphism& canon = *r.canonical;
  if (f.f1().map() != canon.f1().map() || f.f0().map() != canon.f0().map())
    throw Error(ErrorKind::NoFactorization, "f is not over the same θ");
  const TwoCrossedModule& B = f.dst();
  const Group& Q = mod.P();
  const Group& N = mod.M();
  std::vector<Elem> gens, imgs;
  for (Elem q = 0; q < Q->order(); ++q)
    for (Elem l = 0; l < canon.f2().src()->order(); ++l) {
      gens.push_back(mod.act_l()(q, canon.f2()(l)));
      imgs.push_back(B.act_l()(q, f.f2()(l)));
    }
  for (Elem a = 0; a < N->order(); ++a)
    for (Elem b = 0; b < N->order(); ++b) {
      gens.push_back(mod.lift(a, b));
      imgs.push_back(B.lift(a, b));
    }
  const auto fs = extend_from_generators(mod.L(), B.L(), gens, imgs);
  if (!fs) throw Error(ErrorKind::NotWellDefined, "q·f(l){n1,n2} does not respect the relations of θ*(L)");
  const GroupHom idN = GroupHom::identity(N), idQ = GroupHom::identity(Q);
  const auto ok = [&](const GroupHom& g) {
    try {
      X2Morphism::make(g, idN, idQ, mod, B);
    } catch (const Error&) {
      return false;
    }
    return compose(g, canon.f2()).map() == f.f2().map();
  };
  if (!ok(*fs)) throw Error(ErrorKind::NoFactorization, "f* is not a morphism of 2-crossed modules over f");
  Factorization out{*fs, std::nullopt, false, 0};
  if (mod.L()->order() <= kUniquenessBound) {
    for_each_hom(mod.L(), B.L(), [&](const GroupHom& g) {
      if (ok(g)) ++out.candidates;
      return true;
    });
    out.uniqueness_checked = true;
    if (out.candidates != 1) throw Error(ErrorKind::NotUnique, std::to_string(out.candidates) + " factorizations");
  }
  return out;
}

TwoCrossedModule trivial_x2mod() {
  const Group one = FiniteGroup::trivial();
  return from_crossed(CrossedModule::make(ActionTable::trivial(one, one), GroupHom::identity(one)));
}

// ---------------------------------------------------------------- push-outs

namespace {

bool same_module(const TwoCrossedModule& a, const TwoCrossedModule& b) {
  return a.L().get() == b.L().get() && a.M().get() == b.M().get() && a.P().get() == b.P().get();
}

// Amalgamated product of two finite groups over homomorphisms from a common
// source, by a multiplication-table presentation.
struct Amalgam {
  bool complete = false;
  Group group;
  GroupHom in1, in2;
};

}  // namespace

InducedX2Result pushout_x2(const X2Morphism& left, const X2Morphism& right, InducedOptions opts) {
  if (!same_module(left.src(), right.src()))
    throw Error(ErrorKind::NotAHom, "push-out legs must share their source");
  const TwoCrossedModule& x1 = left.dst();
  const TwoCrossedModule& x2 = right.dst();
  InducedX2Result out;
  out.strategy_used = Strategy::GeneralTC;

  // base group P = P1 *_{P0} P2
  Presentation pp;
  const Group& P1 = x1.P();
  const Group& P2 = x2.P();
  for (Elem p = 0; p < P1->order(); ++p) pp.generators.push_back("u" + std::to_string(p));
  for (Elem p = 0; p < P2->order(); ++p) pp.generators.push_back("v" + std::to_string(p));
  const int off = P1->order();
  for (Elem a = 0; a < P1->order(); ++a)
    for (Elem b = 0; b < P1->order(); ++b) pp.add_relator({a + 1, b + 1, -(P1->mul(a, b) + 1)});
  for (Elem a = 0; a < P2->order(); ++a)
    for (Elem b = 0; b < P2->order(); ++b) pp.add_relator({off + a + 1, off + b + 1, -(off + P2->mul(a, b) + 1)});
  for (Elem p = 0; p < left.src().P()->order(); ++p) pp.add_relator({left.f0()(p) + 1, -(off + right.f0()(p) + 1)});
  const EnumerationResult pr = todd_coxeter(pp, {opts.coset_limit});
  out.summary.rounds = 1;
  out.summary.max_active = pr.max_active;
  out.summary.total_defined = pr.total_defined;
  out.summary.coset_limit = pr.coset_limit;
  if (!pr.complete()) {
    out.presentation = pp;
    return out;
  }
  if (!pr.group) throw Error(ErrorKind::BoundExceeded, "push-out base group exceeds the exhaustive bound");
  const Group P = pr.group;
  const GroupHom i1 = GroupHom::make(
      P1, P, std::vector<Elem>(pr.generator_images.begin(), pr.generator_images.begin() + off));
  const GroupHom i2 =
      GroupHom::make(P2, P, std::vector<Elem>(pr.generator_images.begin() + off, pr.generator_images.end()));

  // pre-crossed push-out M over P: the free P-group on M1 and M2 glued along M0
  Model mm;
  mm.Q = P;
  add_block(mm, x1.M(), x1.act_m(), i1, false);
  add_block(mm, x2.M(), x2.act_m(), i2, false);
  for (int k = 0; k < 2; ++k) {
    const Block& b = mm.blocks[k];
    const GroupHom& d1 = k == 0 ? x1.d1() : x2.d1();
    const GroupHom& inc = k == 0 ? i1 : i2;
    for (Elem q = 0; q < P->order(); ++q)
      for (Elem x = 0; x < b.X->order(); ++x) mm.gen_boundary.push_back(P->conj(q, inc(d1(x))));
  }
  fill_block_action(mm);
  add_block_relators(mm);
  for (Elem q = 0; q < P->order(); ++q)
    for (Elem m0 = 0; m0 < left.src().M()->order(); ++m0)
      mm.pres.add_relator({letter(mm.blocks[0].gen(q, left.f1()(m0))), -letter(mm.blocks[1].gen(q, right.f1()(m0)))});
  EnumerationResult mr;
  if (!enumerate(mm, opts, out.summary, mr)) {
    out.presentation = mm.pres;
    return out;
  }
  const PreCrossedModule base =
      PreCrossedModule::make(action_from_generators(mm, mr), boundary_from_generators(mm, mr, P));
  std::vector<Elem> mu1, mu2;
  for (Elem x = 0; x < x1.M()->order(); ++x) mu1.push_back(mr.generator_images[mm.blocks[0].gen(0, x)]);
  for (Elem x = 0; x < x2.M()->order(); ++x) mu2.push_back(mr.generator_images[mm.blocks[1].gen(0, x)]);
  const XModMorphism th1 = XModMorphism::make(GroupHom::make(x1.M(), base.M(), mu1), i1, x1.base(), base);
  const XModMorphism th2 = XModMorphism::make(GroupHom::make(x2.M(), base.M(), mu2), i2, x2.base(), base);
  const XModMorphism th0 = XModMorphism::make(compose(th1.mu(), left.f1()), compose(i1, left.f0()),
                                              left.src().base(), base);

  // induced modules B0, B1, B2 over (M -> P)
  InducedOptions sub = opts;
  sub.strategy = Strategy::GeneralTC;
  const InducedX2Result b0 = induced_x2mod(th0, left.src(), sub);
  const InducedX2Result b1 = induced_x2mod(th1, x1, sub);
  const InducedX2Result b2 = induced_x2mod(th2, x2, sub);
  for (const auto* b : {&b0, &b1, &b2}) {
    if (!b->decided()) {
      out.presentation = b->presentation;
      return out;
    }
    out.component_orders.push_back(b->module->L()->order());
  }

  // L = B / S, with B presented by the generators of B1 and B2 glued along B0
  Model lm = x2_model(base, {{x1, th1}, {x2, th2}}, false, opts.compare_relators);
  for (Elem q = 0; q < P->order(); ++q)
    for (Elem l0 = 0; l0 < left.src().L()->order(); ++l0)
      lm.pres.add_relator(
          {letter(lm.blocks[0].gen(q, left.f2()(l0))), -letter(lm.blocks[1].gen(q, right.f2()(l0)))});
  lm.saturable.push_back(X2Axiom::PL5);
  const Block blk1 = lm.blocks[0], blk2 = lm.blocks[1];
  X2Run run = run_x2_model(std::move(lm), base, Strategy::GeneralTC, opts);
  run.result.component_orders = out.component_orders;
  run.result.summary.rounds += out.summary.rounds;
  if (!run.result.decided()) return run.result;
  const TwoCrossedModule& L = *run.result.module;
  const X2Morphism j1 = canonical_x2(x1, th1, blk1, run.last, L);
  const X2Morphism j2 = canonical_x2(x2, th2, blk2, run.last, L);
  const X2Morphism a = compose(j1, left), b = compose(j2, right);
  if (a.f2().map() != b.f2().map() || a.f1().map() != b.f1().map() || a.f0().map() != b.f0().map())
    throw Error(ErrorKind::Internal, "push-out square does not commute");
  // the maps out of B1 and B2 exist by the universal property of induction
  induced_x2_universal(b1, j1);
  induced_x2_universal(b2, j2);
  run.result.injections = {j1, j2};
  return run.result;
}

InducedX2Result cokernel_x2(const X2Morphism& f, InducedOptions opts) {
  const TwoCrossedModule one = trivial_x2mod();
  const TwoCrossedModule& s = f.src();
  const X2Morphism zero = X2Morphism::make(GroupHom::trivial(s.L(), one.L()), GroupHom::trivial(s.M(), one.M()),
                                           GroupHom::trivial(s.P(), one.P()), s, one);
  return pushout_x2(f, zero, opts);
}

}  // namespace crossmod
