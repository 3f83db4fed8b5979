#include <algorithm>
#include <cstdlib>
#include <set>

#include "crossmod/presentation.hpp"

namespace crossmod {

namespace {

inline int column_of(Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

// Felsch enumeration: every new table entry is pushed as a deduction and all
// cyclic conjugates of the relators starting with that letter are scanned
// before the next coset is defined. Coincidences are merged with the
// union-find procedure from the Handbook of Computational Group Theory.
class Enumerator {
 public:
  Enumerator(const Presentation& p, int limit) : ngens_(p.num_generators()), ncols_(2 * ngens_), limit_(limit) {
    conjugates_.resize(ncols_);
    std::set<std::vector<int>> seen;
    for (const Word& r : p.relators) {
      for (const Word& w : {r, inverse(r)}) {
        std::vector<int> cols;
        for (Letter l : w) cols.push_back(column_of(l));
        for (std::size_t k = 0; k < cols.size(); ++k) {
          std::vector<int> rot(cols.begin() + static_cast<std::ptrdiff_t>(k), cols.end());
          rot.insert(rot.end(), cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(k));
          if (seen.insert(rot).second) conjugates_[rot.front()].push_back(rot);
        }
      }
    }
    new_coset();
  }

  bool run() {
    std::size_t scan = 0;
    while (true) {
      // first undefined entry in coset order
      int c = -1, x = -1;
      for (; scan < parent_.size(); ++scan) {
        if (!live(static_cast<int>(scan))) continue;
        for (int col = 0; col < ncols_; ++col)
          if (at(static_cast<int>(scan), col) < 0) {
            c = static_cast<int>(scan);
            x = col;
            break;
          }
        if (c >= 0) break;
      }
      if (c < 0) {
        // confirm closure from the start; coincidences can clear entries
        // behind the scan position
        scan = 0;
        if (!has_gap()) return true;
        continue;
      }
      if (active_ >= limit_) return false;
      if (parent_.size() >= static_cast<std::size_t>(limit_) * 2 + 64) {
        compact();
        scan = 0;
        continue;
      }
      const int d = new_coset();
      set(c, x, d);
      set(d, x ^ 1, c);
      deductions_.push_back({c, x});
      process_deductions();
    }
  }

  CosetTable standardized(std::vector<int>* bfs_parent = nullptr, std::vector<int>* bfs_via = nullptr) const {
    std::vector<int> number(parent_.size(), -1);
    std::vector<int> order{0};
    number[0] = 0;
    std::vector<int> par{-1}, via{-1};
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int col = 0; col < ncols_; ++col) {
        const int d = at(order[i], col);
        if (number[d] < 0) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
          par.push_back(static_cast<int>(i));
          via.push_back(col);
        }
      }
    CosetTable t;
    t.num_generators = ngens_;
    t.num_cosets = static_cast<int>(order.size());
    t.entries.resize(order.size() * ncols_);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int col = 0; col < ncols_; ++col) t.entries[i * ncols_ + col] = number[at(order[i], col)];
    if (bfs_parent) *bfs_parent = std::move(par);
    if (bfs_via) *bfs_via = std::move(via);
    return t;
  }

  int max_active() const { return max_active_; }
  int total_defined() const { return total_defined_; }

 private:
  int at(int c, int col) const { return table_[static_cast<std::size_t>(c) * ncols_ + col]; }
  void set(int c, int col, int v) { table_[static_cast<std::size_t>(c) * ncols_ + col] = v; }
  bool live(int c) const { return parent_[c] == c; }

  int new_coset() {
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + ncols_, -1);
    ++active_;
    ++total_defined_;
    max_active_ = std::max(max_active_, active_);
    return c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    const int ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    const int keep = std::min(ra, rb), drop = std::max(ra, rb);
    parent_[drop] = keep;
    queue.push_back(drop);
    --active_;
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int g = queue[k];
      for (int x = 0; x < ncols_; ++x) {
        const int d = at(g, x);
        if (d < 0) continue;
        set(d, x ^ 1, -1);
        const int mu = rep(g), nu = rep(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1) >= 0) {
          merge(mu, at(nu, x ^ 1), queue);
        } else {
          set(mu, x, nu);
          set(nu, x ^ 1, mu);
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  void scan(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
    if (i > j) {
      if (f != c) coincidence(f, c);
      return;
    }
    while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      set(f, w[i], b);
      set(b, w[i] ^ 1, f);
      deductions_.push_back({f, w[i]});
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) continue;
      for (const auto& w : conjugates_[x]) {
        if (!live(c)) break;
        scan(c, w);
      }
      if (!live(c)) continue;
      const int d = at(c, x);
      if (d < 0 || !live(d)) continue;
      for (const auto& w : conjugates_[x ^ 1]) {
        if (!live(d)) break;
        scan(d, w);
      }
    }
  }

  bool has_gap() const {
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (parent_[c] == static_cast<int>(c))
        for (int col = 0; col < ncols_; ++col)
          if (at(static_cast<int>(c), col) < 0) return true;
    return false;
  }

  // Drops dead rows, keeping the relative order of live cosets. Only called
  // between definitions, when the deduction stack is empty.
  void compact() {
    std::vector<int> number(parent_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(static_cast<int>(c))) number[c] = n++;
    std::vector<int> table(static_cast<std::size_t>(n) * ncols_, -1);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (number[c] < 0) continue;
      for (int col = 0; col < ncols_; ++col) {
        const int d = at(static_cast<int>(c), col);
        table[static_cast<std::size_t>(number[c]) * ncols_ + col] = d < 0 ? -1 : number[rep(d)];
      }
    }
    table_ = std::move(table);
    parent_.resize(n);
    for (int c = 0; c < n; ++c) parent_[c] = c;
  }

  int ngens_;
  int ncols_;
  int limit_;
  std::vector<std::vector<std::vector<int>>> conjugates_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> deductions_;
  int active_ = 0;
  int max_active_ = 0;
  int total_defined_ = 0;
};

int trace(const CosetTable& t, int c, const Word& w) {
  for (Letter l : w) c = t(c, column_of(l));
  return c;
}

}  // namespace

EnumerationResult todd_coxeter(const Presentation& p, EnumerationOptions opts) {
  if (opts.coset_limit < 1) throw Error(ErrorKind::BoundExceeded, "coset limit must be at least 1");
  EnumerationResult r;
  r.coset_limit = opts.coset_limit;
  Enumerator e(p, opts.coset_limit);
  const bool done = e.run();
  r.max_active = e.max_active();
  r.total_defined = e.total_defined();
  if (!done) {
    r.status = EnumStatus::LimitExceeded;
    return r;
  }
  r.status = EnumStatus::Complete;
  std::vector<int> par, via;
  r.table = e.standardized(&par, &via);
  const CosetTable& t = r.table;
  const int n = t.num_cosets;

  for (int c = 0; c < n; ++c)
    for (const Word& w : p.relators)
      if (trace(t, c, w) != c)
        throw Error(ErrorKind::Internal, "complete coset table does not satisfy a relator", {c});

  for (int g = 0; g < p.num_generators(); ++g) r.generator_images.push_back(t(0, 2 * g));
  if (n <= kExhaustiveBound) {
    // element c is the group element g with 0·g = c; (ab) corresponds to
    // tracing b's word from a
    std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
    for (int a = 0; a < n; ++a) {
      mul[a][0] = a;
      for (int b = 1; b < n; ++b) mul[a][b] = t(mul[a][par[b]], via[b]);
    }
    r.group = FiniteGroup::from_table(mul);
  }
  return r;
}

std::vector<Word> element_words(const EnumerationResult& r) {
  if (!r.complete()) throw Error(ErrorKind::UndecidedAtLimit, "enumeration did not complete");
  const CosetTable& t = r.table;
  std::vector<Word> words(t.num_cosets);
  std::vector<bool> done(t.num_cosets, false);
  done[0] = true;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int col = 0; col < 2 * t.num_generators; ++col) {
      const int d = t(queue[i], col);
      if (!done[d]) {
        done[d] = true;
        words[d] = words[queue[i]];
        const int g = col / 2;
        words[d].push_back(col % 2 ? -(g + 1) : g + 1);
        queue.push_back(d);
      }
    }
  return words;
}

Elem word_image(const Presentation& p, const EnumerationResult& r, const Word& w) {
  if (!r.complete()) throw Error(ErrorKind::UndecidedAtLimit, "enumeration did not complete");
  for (Letter l : w)
    if (l == 0 || std::abs(l) > p.num_generators())
      throw Error(ErrorKind::UndeclaredSymbol, "letter " + std::to_string(l) + " out of range");
  return trace(r.table, 0, w);
}

}  // namespace crossmod
