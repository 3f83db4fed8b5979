#include "crossmod/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace crossmod {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

// Size of the subgroup generated by gens; stops early once it reaches `target`.
int closure_size(const FiniteGroup& g, std::span<const Elem> gens, std::vector<char>& seen,
                 std::vector<Elem>& queue) {
  std::fill(seen.begin(), seen.end(), 0);
  queue.clear();
  queue.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(queue[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return static_cast<int>(queue.size());
}

bool next_combination(std::vector<Elem>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

FiniteGroup::FiniteGroup(int n, std::vector<Elem> mul, std::vector<Elem> inv,
                         std::vector<std::string> labels)
    : n_(n), mul_(std::move(mul)), inv_(std::move(inv)), labels_(std::move(labels)) {}

Group FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table,
                              std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::NotAGroup, "table is not square");
    for (Elem e : row)
      if (e < 0 || e >= n) throw Error(ErrorKind::NotAGroup, "entry out of range");
  }
  if (n > kExhaustiveBound)
    throw Error(ErrorKind::BoundExceeded,
                "order " + std::to_string(n) + " exceeds exhaustive bound " +
                    std::to_string(kExhaustiveBound));
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      throw Error(ErrorKind::NotAGroup, "label count does not match order");
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (static_cast<int>(uniq.size()) != n) throw Error(ErrorKind::NotAGroup, "labels are not unique");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Elem ab = table[a][b];
      for (int c = 0; c < n; ++c) {
        if (table[ab][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAGroup, "not associative at " + triple(a, b, c), {a, b, c});
      }
    }

  Elem e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = table[x][y] == y && table[y][x] == y;
    if (ok) e = x;
  }
  if (e < 0) throw Error(ErrorKind::NotAGroup, "no two-sided identity");

  // Relabel so that the identity sits at index 0.
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[e]);  // perm is an involution
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = perm[table[perm[a]][perm[b]]];
  if (!labels.empty()) std::swap(labels[0], labels[e]);

  std::vector<Elem> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul[static_cast<std::size_t>(a) * n + b] == 0 && mul[static_cast<std::size_t>(b) * n + a] == 0) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0)
      throw Error(ErrorKind::NotAGroup, "element " + std::to_string(perm[a]) + " has no inverse",
                  {perm[a]});
  }
  return Group(new FiniteGroup(n, std::move(mul), std::move(inv), std::move(labels)));
}

Group FiniteGroup::trivial() { return from_table({{0}}, {"1"}); }

Group FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::NotAGroup, "cyclic order must be positive");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    labels[i] = i == 0 ? "1" : i == 1 ? "a" : "a^" + std::to_string(i);
  }
  return from_table(t, labels);
}

Group FiniteGroup::dihedral(int n) {
  // element r^i s^j stored at index j*n + i
  if (n < 1) throw Error(ErrorKind::NotAGroup, "dihedral parameter must be positive");
  const int m = 2 * n;
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    const int i1 = a % n, j1 = a / n;
    for (int b = 0; b < m; ++b) {
      const int i2 = b % n, j2 = b / n;
      // r^i1 s^j1 r^i2 s^j2 = r^(i1 ± i2) s^(j1+j2)
      const int i = j1 ? ((i1 - i2) % n + n) % n : (i1 + i2) % n;
      t[a][b] = ((j1 + j2) % 2) * n + i;
    }
    std::string r = i1 == 0 ? "" : i1 == 1 ? "r" : "r^" + std::to_string(i1);
    std::string s = j1 ? "s" : "";
    labels[a] = (r + s).empty() ? "1" : r + s;
  }
  return from_table(t, labels);
}

Group FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw Error(ErrorKind::BoundExceeded, "symmetric(n) supports 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      // (ab)(x) = a(b(x))
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(c);
    }
    std::string s = "[";
    for (int x = 0; x < n; ++x) s += std::to_string(perms[a][x] + 1);
    labels[a] = s + "]";
  }
  return from_table(t, labels);
}

Group FiniteGroup::klein_four() {
  std::vector<std::vector<Elem>> t(4, std::vector<Elem>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return from_table(t, {"1", "a", "b", "ab"});
}

Group FiniteGroup::quaternion() {
  // ±1, ±i, ±j, ±k stored as sign*4 + unit with unit 0..3 = 1,i,j,k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int u = unit_mul[a % 4][b % 4];
      const int s = (a / 4 + b / 4 + unit_sign[a % 4][b % 4]) % 2;
      t[a][b] = s * 4 + u;
    }
  return from_table(t, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

Group FiniteGroup::direct_product(const Group& a, const Group& b) {
  const int na = a->order(), nb = b->order();
  const int n = na * nb;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t[x][y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
    labels[x] = "(" + a->label(x / nb) + "," + b->label(x % nb) + ")";
  }
  return from_table(t, labels);
}

Elem FiniteGroup::pow(Elem a, int k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = 0;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    if (!is_central(a)) return false;
  return true;
}

bool FiniteGroup::is_central(Elem a) const {
  for (int b = 0; b < n_; ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> t(n_);
  for (int a = 0; a < n_; ++a) t[a].assign(mul_.begin() + static_cast<std::ptrdiff_t>(a) * n_,
                                           mul_.begin() + static_cast<std::ptrdiff_t>(a + 1) * n_);
  return t;
}

const std::vector<Elem>& FiniteGroup::generators() const {
  std::call_once(gens_once_, [this] {
    if (n_ == 1) return;
    std::vector<char> seen(n_);
    std::vector<Elem> queue;
    // Exact search over combinations while affordable.
    const int max_k = n_ <= 64 ? 3 : 2;
    for (int k = 1; k <= max_k && k <= n_ - 1; ++k) {
      // combinations of the non-identity elements 1..n-1
      std::vector<Elem> c(k), shifted(k);
      std::iota(c.begin(), c.end(), 0);
      do {
        for (int i = 0; i < k; ++i) shifted[i] = c[i] + 1;
        if (closure_size(*this, shifted, seen, queue) == n_) {
          gens_ = shifted;
          return;
        }
      } while (next_combination(c, n_ - 1));
    }
    // Greedy: add the element that enlarges the generated subgroup most.
    std::vector<Elem> gens;
    int size = 1;
    while (size < n_) {
      Elem best = -1;
      int best_size = size;
      for (Elem x = 1; x < n_; ++x) {
        gens.push_back(x);
        const int s = closure_size(*this, gens, seen, queue);
        gens.pop_back();
        if (s > best_size) {
          best_size = s;
          best = x;
        }
      }
      gens.push_back(best);
      size = best_size;
    }
    gens_ = gens;
  });
  return gens_;
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(Group parent, std::vector<bool> member)
    : parent_(std::move(parent)), member_(std::move(member)) {
  order_ = static_cast<int>(std::count(member_.begin(), member_.end(), true));
  normal_ = true;
  const int n = parent_->order();
  for (int g = 0; g < n && normal_; ++g)
    for (int h = 0; h < n; ++h)
      if (member_[h] && !member_[parent_->conj(g, h)]) {
        normal_ = false;
        break;
      }
}

Subgroup Subgroup::generated(const Group& g, std::span<const Elem> gens) {
  std::vector<bool> member(g->order(), false);
  std::vector<Elem> queue{0};
  member[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem s : gens) {
      Elem y = g->mul(queue[i], s);
      if (!member[y]) {
        member[y] = true;
        queue.push_back(y);
      }
    }
  return Subgroup(g, std::move(member));
}

Subgroup Subgroup::normal_closure(const Group& g, std::span<const Elem> gens) {
  Subgroup h = generated(g, gens);
  while (!h.is_normal()) {
    std::vector<Elem> more;
    for (Elem x : h.elements())
      for (Elem y = 0; y < g->order(); ++y) more.push_back(g->conj(y, x));
    std::sort(more.begin(), more.end());
    more.erase(std::unique(more.begin(), more.end()), more.end());
    h = generated(g, more);
  }
  return h;
}

Subgroup Subgroup::whole(const Group& g) { return Subgroup(g, std::vector<bool>(g->order(), true)); }

Subgroup Subgroup::trivial(const Group& g) {
  std::vector<bool> m(g->order(), false);
  m[0] = true;
  return Subgroup(g, std::move(m));
}

Subgroup Subgroup::from_mask(const Group& g, std::vector<bool> member) {
  if (static_cast<int>(member.size()) != g->order() || !member[0])
    throw Error(ErrorKind::NotAGroup, "subgroup mask must contain the identity");
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      if (member[a] && member[b] && !member[g->mul(a, b)])
        throw Error(ErrorKind::NotAGroup, "subset not closed under multiplication", {a, b});
  return Subgroup(g, std::move(member));
}

std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  for (int e = 0; e < static_cast<int>(member_.size()); ++e)
    if (member_[e]) out.push_back(e);
  return out;
}

std::pair<Group, GroupHom> Subgroup::as_group() const {
  const auto elems = elements();
  const int n = static_cast<int>(elems.size());
  std::vector<Elem> pos(parent_->order(), -1);
  for (int i = 0; i < n; ++i) pos[elems[i]] = i;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = pos[parent_->mul(elems[i], elems[j])];
    if (parent_->has_labels()) labels.push_back(parent_->label(elems[i]));
  }
  Group sub = FiniteGroup::from_table(t, labels);
  return {sub, GroupHom::make(sub, parent_, elems)};
}

// ---------------------------------------------------------------- GroupHom

GroupHom GroupHom::make(Group src, Group dst, std::vector<Elem> map) {
  const int n = src->order();
  if (static_cast<int>(map.size()) != n)
    throw Error(ErrorKind::NotAHom, "map length " + std::to_string(map.size()) + " != source order " +
                                        std::to_string(n));
  for (Elem e : map)
    if (e < 0 || e >= dst->order()) throw Error(ErrorKind::NotAHom, "image out of range");
  if (map[0] != 0) throw Error(ErrorKind::NotAHom, "identity not mapped to identity", {0});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[src->mul(x, y)] != dst->mul(map[x], map[y]))
        throw Error(ErrorKind::NotAHom,
                    "map(xy) != map(x)map(y) at (" + std::to_string(x) + "," + std::to_string(y) + ")",
                    {x, y});
  return GroupHom(std::move(src), std::move(dst), std::move(map));
}

GroupHom GroupHom::identity(const Group& g) {
  std::vector<Elem> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return GroupHom(g, g, std::move(map));
}

GroupHom GroupHom::trivial(const Group& src, const Group& dst) {
  return GroupHom(src, dst, std::vector<Elem>(src->order(), 0));
}

bool GroupHom::is_injective() const { return kernel().is_trivial(); }

bool GroupHom::is_surjective() const { return image().order() == dst_->order(); }

bool GroupHom::is_trivial() const {
  return std::all_of(map_.begin(), map_.end(), [](Elem e) { return e == 0; });
}

Subgroup GroupHom::kernel() const {
  std::vector<bool> m(src_->order());
  for (int x = 0; x < src_->order(); ++x) m[x] = map_[x] == 0;
  return Subgroup::from_mask(src_, std::move(m));
}

Subgroup GroupHom::image() const {
  std::vector<bool> m(dst_->order(), false);
  for (Elem e : map_) m[e] = true;
  return Subgroup::from_mask(dst_, std::move(m));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (inner.dst()->order() != outer.src()->order())
    throw Error(ErrorKind::NotAHom, "composition of incompatible homomorphisms");
  std::vector<Elem> map(inner.src()->order());
  for (int x = 0; x < inner.src()->order(); ++x) map[x] = outer(inner(x));
  return GroupHom::make(inner.src(), outer.dst(), std::move(map));
}

// ---------------------------------------------------------------- ActionTable

ActionTable ActionTable::make(Group actor, Group space, const std::vector<std::vector<Elem>>& rows) {
  const int np = actor->order(), nm = space->order();
  if (static_cast<int>(rows.size()) != np)
    throw Error(ErrorKind::NotAnAction, "expected one row per actor element");
  std::vector<Elem> act;
  act.reserve(static_cast<std::size_t>(np) * nm);
  for (int p = 0; p < np; ++p) {
    if (static_cast<int>(rows[p].size()) != nm)
      throw Error(ErrorKind::NotAnAction, "row length does not match space order", {p});
    std::vector<bool> hit(nm, false);
    for (int m = 0; m < nm; ++m) {
      const Elem v = rows[p][m];
      if (v < 0 || v >= nm || hit[v])
        throw Error(ErrorKind::NotAnAction, "row " + std::to_string(p) + " is not a bijection", {p});
      hit[v] = true;
    }
    for (int a = 0; a < nm; ++a)
      for (int b = 0; b < nm; ++b)
        if (rows[p][space->mul(a, b)] != space->mul(rows[p][a], rows[p][b]))
          throw Error(ErrorKind::NotAnAction,
                      "row " + std::to_string(p) + " is not an automorphism", {p, a, b});
    act.insert(act.end(), rows[p].begin(), rows[p].end());
  }
  for (int m = 0; m < nm; ++m)
    if (rows[0][m] != m) throw Error(ErrorKind::NotAnAction, "identity does not act trivially", {0, m});
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q)
      for (int m = 0; m < nm; ++m)
        if (rows[actor->mul(p, q)][m] != rows[p][rows[q][m]])
          throw Error(ErrorKind::NotAnAction, "(pq)·m != p·(q·m)", {p, q, m});
  return ActionTable(std::move(actor), std::move(space), std::move(act));
}

ActionTable ActionTable::conjugation(const Group& g) {
  const int n = g->order();
  std::vector<Elem> act(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int m = 0; m < n; ++m) act[static_cast<std::size_t>(p) * n + m] = g->conj(p, m);
  return ActionTable(g, g, std::move(act));
}

ActionTable ActionTable::trivial(const Group& actor, const Group& space) {
  std::vector<Elem> act;
  act.reserve(static_cast<std::size_t>(actor->order()) * space->order());
  for (int p = 0; p < actor->order(); ++p)
    for (int m = 0; m < space->order(); ++m) act.push_back(m);
  return ActionTable(actor, space, std::move(act));
}

std::vector<std::vector<Elem>> ActionTable::rows() const {
  const int nm = space_->order();
  std::vector<std::vector<Elem>> out(actor_->order());
  for (int p = 0; p < actor_->order(); ++p)
    out[p].assign(act_.begin() + static_cast<std::ptrdiff_t>(p) * nm,
                  act_.begin() + static_cast<std::ptrdiff_t>(p + 1) * nm);
  return out;
}

bool ActionTable::is_trivial() const {
  const int nm = space_->order();
  for (std::size_t i = 0; i < act_.size(); ++i)
    if (act_[i] != static_cast<Elem>(i % nm)) return false;
  return true;
}

ActionTable ActionTable::restrict_along(const GroupHom& f) const {
  if (f.dst()->order() != actor_->order())
    throw Error(ErrorKind::NotAnAction, "restriction along a map into a different actor");
  const int nm = space_->order();
  std::vector<Elem> act;
  act.reserve(static_cast<std::size_t>(f.src()->order()) * nm);
  for (int p = 0; p < f.src()->order(); ++p)
    for (int m = 0; m < nm; ++m) act.push_back((*this)(f(p), m));
  return ActionTable(f.src(), space_, std::move(act));
}

// ---------------------------------------------------------------- quotients

Quotient quotient(const Group& g, const Subgroup& n) {
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  const int order = g->order();
  std::vector<Elem> coset_of(order, -1);
  std::vector<Elem> reps;
  const auto members = n.elements();
  for (Elem x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : members) coset_of[g->mul(x, k)] = c;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<Elem>> t(q, std::vector<Elem>(q));
  std::vector<std::string> labels;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) t[a][b] = coset_of[g->mul(reps[a], reps[b])];
    if (g->has_labels()) labels.push_back(g->label(reps[a]) + "N");
  }
  Group qg = FiniteGroup::from_table(t, labels);
  return Quotient{qg, GroupHom::make(g, qg, coset_of), reps};
}

std::vector<Elem> left_transversal(const Group& g, const Subgroup& h) {
  std::vector<bool> covered(g->order(), false);
  std::vector<Elem> reps;
  const auto members = h.elements();
  for (Elem x = 0; x < g->order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elem k : members) covered[g->mul(x, k)] = true;
  }
  return reps;
}

// ---------------------------------------------------------------- homomorphisms

SpanningTree spanning_tree(const Group& g, std::span<const Elem> gens) {
  SpanningTree t;
  t.parent.assign(g->order(), -2);
  t.via.assign(g->order(), -1);
  t.parent[0] = -1;
  t.order.push_back(0);
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    const Elem x = t.order[i];
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
      const Elem y = g->mul(x, gens[j]);
      if (t.parent[y] == -2) {
        t.parent[y] = x;
        t.via[y] = j;
        t.order.push_back(y);
      }
    }
  }
  t.spans = static_cast<int>(t.order.size()) == g->order();
  return t;
}

namespace {

// Fills `map` along the tree and checks every Schreier edge; returns whether
// the generator images define a homomorphism.
bool extend_along(const FiniteGroup& src, const FiniteGroup& dst, const SpanningTree& tree,
                  std::span<const Elem> gens, std::span<const Elem> images, std::vector<Elem>& map) {
  map.assign(src.order(), 0);
  for (std::size_t i = 1; i < tree.order.size(); ++i) {
    const Elem y = tree.order[i];
    map[y] = dst.mul(map[tree.parent[y]], images[tree.via[y]]);
  }
  for (Elem x = 0; x < src.order(); ++x)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (map[src.mul(x, gens[j])] != dst.mul(map[x], images[j])) return false;
  return true;
}

}  // namespace

std::optional<GroupHom> extend_from_generators(const Group& src, const Group& dst,
                                               std::span<const Elem> gens,
                                               std::span<const Elem> images) {
  if (gens.size() != images.size()) throw Error(ErrorKind::Internal, "generator/image count mismatch");
  const SpanningTree tree = spanning_tree(src, gens);
  if (!tree.spans) return std::nullopt;
  std::vector<Elem> map;
  if (!extend_along(*src, *dst, tree, gens, images, map)) return std::nullopt;
  return GroupHom::make(src, dst, std::move(map));
}

void for_each_hom(const Group& g, const Group& h, const std::function<bool(const GroupHom&)>& visit,
                  int source_bound) {
  if (g->order() > source_bound)
    throw Error(ErrorKind::BoundExceeded, "homomorphism search source order " +
                                              std::to_string(g->order()) + " exceeds bound " +
                                              std::to_string(source_bound));
  const auto& gens = g->generators();
  const int k = static_cast<int>(gens.size());
  if (k == 0) {
    visit(GroupHom::trivial(g, h));
    return;
  }
  // Candidate images for each generator: orders must divide.
  std::vector<std::vector<Elem>> cands(k);
  for (int i = 0; i < k; ++i) {
    const int oi = g->element_order(gens[i]);
    for (Elem y = 0; y < h->order(); ++y)
      if (oi % h->element_order(y) == 0) cands[i].push_back(y);
  }
  const SpanningTree tree = spanning_tree(g, gens);
  std::vector<std::size_t> idx(k, 0);
  std::vector<Elem> images(k), map;
  while (true) {
    for (int i = 0; i < k; ++i) images[i] = cands[i][idx[i]];
    if (extend_along(*g, *h, tree, gens, images, map)) {
      if (!visit(GroupHom::make(g, h, map))) return;
    }
    int i = k - 1;
    while (i >= 0 && ++idx[i] == cands[i].size()) idx[i--] = 0;
    if (i < 0) return;
  }
}

std::vector<GroupHom> enumerate_homs(const Group& g, const Group& h, HomSearchOptions opts) {
  std::vector<GroupHom> out;
  for_each_hom(
      g, h,
      [&](const GroupHom& f) {
        out.push_back(f);
        return opts.max_count == 0 || out.size() < opts.max_count;
      },
      opts.source_bound);
  return out;
}

std::optional<GroupHom> find_isomorphism(const Group& g, const Group& h,
                                         const std::function<bool(const GroupHom&)>& accept) {
  if (g->order() != h->order()) return std::nullopt;
  std::optional<GroupHom> found;
  for_each_hom(
      g, h,
      [&](const GroupHom& f) {
        if (f.is_injective() && (!accept || accept(f))) {
          found = f;
          return false;
        }
        return true;
      },
      std::max(kHomSearchBound, g->order()));
  return found;
}

Subgroup action_commutator_subgroup(const Subgroup& k, const ActionTable& act) {
  const Group& m = act.space();
  std::vector<Elem> gens;
  for (Elem p : k.elements())
    for (Elem x = 0; x < m->order(); ++x) gens.push_back(m->mul(act(p, x), m->inv(x)));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup::generated(m, gens);
}

AutomorphismGroup automorphism_group(const Group& m, int bound) {
  if (m->order() > bound)
    throw Error(ErrorKind::BoundExceeded,
                "Aut(M) requires |M| <= " + std::to_string(bound) + ", got " + std::to_string(m->order()));
  std::vector<std::vector<Elem>> maps;
  for_each_hom(
      m, m,
      [&](const GroupHom& f) {
        if (f.is_injective()) maps.push_back(f.map());
        return true;
      },
      bound);
  std::sort(maps.begin(), maps.end());  // identity first
  const int a = static_cast<int>(maps.size());
  if (a > kExhaustiveBound) throw Error(ErrorKind::BoundExceeded, "Aut(M) too large");
  auto index_of = [&](const std::vector<Elem>& f) {
    return static_cast<Elem>(std::lower_bound(maps.begin(), maps.end(), f) - maps.begin());
  };
  std::vector<std::vector<Elem>> t(a, std::vector<Elem>(a));
  std::vector<std::string> labels(a);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      std::vector<Elem> c(m->order());
      for (int x = 0; x < m->order(); ++x) c[x] = maps[i][maps[j][x]];
      t[i][j] = index_of(c);
    }
    labels[i] = i == 0 ? "id" : "aut" + std::to_string(i);
  }
  Group aut = FiniteGroup::from_table(t, labels);
  return AutomorphismGroup{aut, maps, ActionTable::make(aut, m, maps)};
}

}  // namespace crossmod
