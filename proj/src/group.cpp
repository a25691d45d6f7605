#include "operadix/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace operadix {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw InvariantError("permutation degree mismatch");
  Perm r(f.size());
  for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

Perm perm_inverse(const Perm& f) {
  Perm r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

bool perm_is_identity(const Perm& f) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != static_cast<int>(i)) return false;
  return true;
}

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  degree_ = 0;
  for (int n : factors_) {
    if (n < 1) throw InvariantError("group factor must be a positive integer");
    offsets_.push_back(degree_);
    degree_ += n;
  }
  if (degree_ > max_degree())
    throw CapError("Young product degree " + std::to_string(degree_) + " exceeds limit " +
                   std::to_string(max_degree()));
  for (size_t f = 0; f < factors_.size(); ++f)
    for (int i = 0; i + 1 < factors_[f]; ++i) {
      Perm g = perm_identity(degree_);
      std::swap(g[offsets_[f] + i], g[offsets_[f] + i + 1]);
      gens_.push_back(std::move(g));
    }
}

long GroupSpec::order() const {
  long o = 1;
  for (int n : factors_) {
    for (int i = 2; i <= n; ++i) o *= i;
  }
  return o;
}

struct GroupSpec::Tables {
  std::vector<Perm> elements;
  std::map<Perm, int> index;
  std::vector<ElementClass> element_classes;
  std::vector<SubgroupClass> subgroup_classes;
  bool have_element_classes = false;
  bool have_subgroup_classes = false;
  std::mutex mu;
};

GroupSpec::Tables& GroupSpec::tables() const {
  if (!tables_) tables_ = std::make_shared<Tables>();
  return *tables_;
}

namespace {

void enumerate_factor(std::vector<Perm>& out, int n) {
  // permutations of {0..n-1} in lexicographic order
  Perm p = perm_identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

const std::vector<Perm>& GroupSpec::elements() const {
  Tables& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  if (t.elements.empty()) {
    std::vector<std::vector<Perm>> per_factor;
    for (int n : factors_) {
      std::vector<Perm> ps;
      enumerate_factor(ps, n);
      per_factor.push_back(std::move(ps));
    }
    std::vector<Perm> acc = {Perm{}};
    for (const auto& ps : per_factor) {
      std::vector<Perm> next;
      next.reserve(acc.size() * ps.size());
      for (const Perm& a : acc)
        for (const Perm& b : ps) {
          Perm c = a;
          int off = static_cast<int>(a.size());
          for (int v : b) c.push_back(off + v);
          next.push_back(std::move(c));
        }
      acc = std::move(next);
    }
    if (acc.size() == 1 && acc[0].empty()) acc[0] = perm_identity(degree_);
    std::sort(acc.begin(), acc.end());
    t.elements = std::move(acc);
    for (size_t i = 0; i < t.elements.size(); ++i) t.index[t.elements[i]] = static_cast<int>(i);
  }
  return t.elements;
}

int GroupSpec::element_index(const Perm& p) const {
  elements();
  Tables& t = tables();
  auto it = t.index.find(p);
  if (it == t.index.end()) throw InvariantError("permutation is not an element of the group");
  return it->second;
}

std::vector<int> GroupSpec::word(const Perm& p) const {
  // Bubble-sort each factor block of the image vector.  Swapping entries at
  // positions (i, i+1) replaces cur by cur * s_i, so after the sweep
  // id = p * s_{w_1} * ... * s_{w_k}; reversing the recorded swaps yields
  // p = gen(w[0]) * gen(w[1]) * ... in composition order.
  std::vector<int> w;
  Perm cur = p;
  int gen_base = 0;
  for (size_t f = 0; f < factors_.size(); ++f) {
    int off = offsets_[f], n = factors_[f];
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (cur[off + i] > cur[off + i + 1]) {
          std::swap(cur[off + i], cur[off + i + 1]);
          w.push_back(gen_base + i);
          changed = true;
        }
      }
    }
    gen_base += n - 1;
  }
  if (!perm_is_identity(cur)) throw InvariantError("element does not lie in the Young product");
  std::reverse(w.begin(), w.end());
  return w;
}

const std::vector<GroupSpec::ElementClass>& GroupSpec::element_classes() const {
  elements();
  Tables& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  if (!t.have_element_classes) {
    int n = static_cast<int>(t.elements.size());
    std::vector<int> cls(n, -1);
    for (int i = 0; i < n; ++i) {
      if (cls[i] >= 0) continue;
      int id = static_cast<int>(t.element_classes.size());
      ElementClass ec;
      ec.rep = i;
      // orbit under conjugation
      for (int g = 0; g < n; ++g) {
        Perm c = perm_compose(perm_compose(t.elements[g], t.elements[i]), perm_inverse(t.elements[g]));
        int j = t.index.at(c);
        if (cls[j] < 0) {
          cls[j] = id;
          ec.members.push_back(j);
        }
      }
      std::sort(ec.members.begin(), ec.members.end());
      ec.rep = ec.members.front();
      t.element_classes.push_back(std::move(ec));
    }
    t.have_element_classes = true;
  }
  return t.element_classes;
}

namespace {

// Closure of a set of element indices under the group multiplication.
std::vector<int> subgroup_closure(const std::vector<Perm>& elems, const std::map<Perm, int>& index,
                                  std::vector<int> gens) {
  std::set<int> have;
  std::vector<int> frontier;
  int id_idx = index.at(perm_identity(static_cast<int>(elems[0].size())));
  have.insert(id_idx);
  frontier.push_back(id_idx);
  std::sort(gens.begin(), gens.end());
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      int y = index.at(perm_compose(elems[g], elems[x]));
      if (have.insert(y).second) frontier.push_back(y);
    }
  }
  return std::vector<int>(have.begin(), have.end());
}

}  // namespace

const std::vector<GroupSpec::SubgroupClass>& GroupSpec::subgroup_classes() const {
  elements();
  Tables& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  if (!t.have_subgroup_classes) {
    int n = static_cast<int>(t.elements.size());
    // canonical form of a subgroup: lexicographically least conjugate
    auto canon = [&](const std::vector<int>& sub) {
      std::vector<int> best;
      for (int g = 0; g < n; ++g) {
        std::vector<int> conj;
        conj.reserve(sub.size());
        Perm gp = t.elements[g], gpi = perm_inverse(gp);
        for (int x : sub) conj.push_back(t.index.at(perm_compose(perm_compose(gp, t.elements[x]), gpi)));
        std::sort(conj.begin(), conj.end());
        if (best.empty() || conj < best) best = std::move(conj);
      }
      return best;
    };
    std::set<std::vector<int>> reps;  // canonical representatives found so far
    std::vector<std::vector<int>> worklist;
    std::vector<int> triv = {t.index.at(perm_identity(degree_))};
    reps.insert(triv);
    worklist.push_back(triv);
    // distinct cyclic subgroups
    std::set<std::vector<int>> cyclic_set;
    for (int g = 0; g < n; ++g) cyclic_set.insert(subgroup_closure(t.elements, t.index, {g}));
    std::vector<std::vector<int>> cyclics(cyclic_set.begin(), cyclic_set.end());
    while (!worklist.empty()) {
      std::vector<int> h = worklist.back();
      worklist.pop_back();
      for (const auto& c : cyclics) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        std::vector<int> gens = h;
        gens.insert(gens.end(), c.begin(), c.end());
        std::vector<int> k = subgroup_closure(t.elements, t.index, gens);
        std::vector<int> ck = canon(k);
        if (reps.insert(ck).second) worklist.push_back(ck);
      }
    }
    for (const auto& r : reps) {
      SubgroupClass sc;
      sc.rep_elements = r;
      sc.subgroup_order = static_cast<long>(r.size());
      t.subgroup_classes.push_back(std::move(sc));
    }
    std::sort(t.subgroup_classes.begin(), t.subgroup_classes.end(),
              [](const SubgroupClass& a, const SubgroupClass& b) {
                if (a.subgroup_order != b.subgroup_order) return a.subgroup_order < b.subgroup_order;
                return a.rep_elements < b.rep_elements;
              });
    t.have_subgroup_classes = true;
  }
  return t.subgroup_classes;
}

const GroupSpec& GroupSpec::get(const std::vector<int>& factors) {
  static std::map<std::vector<int>, std::unique_ptr<GroupSpec>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(factors);
  if (it == cache.end()) it = cache.emplace(factors, std::make_unique<GroupSpec>(factors)).first;
  return *it->second;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> CoxeterCheck::relations(const GroupSpec& g) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rels;
  int gc = g.gen_count();
  // involutions
  for (int i = 0; i < gc; ++i) rels.push_back({{i, i}, {}});
  // identify generator adjacency inside factors
  std::vector<int> factor_of;
  {
    int f = 0, left = 0;
    for (int n : g.factors()) {
      for (int i = 0; i + 1 < n; ++i) factor_of.push_back(f), ++left;
      ++f;
    }
    (void)left;
  }
  std::vector<int> pos_in_factor(gc);
  {
    int idx = 0;
    for (int n : g.factors()) {
      for (int i = 0; i + 1 < n; ++i) pos_in_factor[idx++] = i;
    }
  }
  for (int i = 0; i < gc; ++i)
    for (int j = i + 1; j < gc; ++j) {
      bool adjacent = factor_of[i] == factor_of[j] && pos_in_factor[j] == pos_in_factor[i] + 1;
      if (adjacent) {
        rels.push_back({{i, j, i}, {j, i, j}});  // braid
      } else {
        rels.push_back({{i, j}, {j, i}});  // commute
      }
    }
  return rels;
}

YoungCosets::YoungCosets(std::vector<int> composition) : comp_(std::move(composition)) {
  degree_ = 0;
  for (int c : comp_) {
    if (c < 0) throw InvariantError("composition parts must be non-negative");
    degree_ += c;
  }
  // enumerate assignment words: w[p] = block of position p, with counts comp_
  std::vector<int> word(degree_, 0);
  std::vector<int> remaining = comp_;
  // generate in lexicographic order by recursion
  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == degree_) {
      words.push_back(cur);
      return;
    }
    for (size_t b = 0; b < comp_.size(); ++b) {
      if (remaining[b] == 0) continue;
      remaining[b]--;
      cur.push_back(static_cast<int>(b));
      rec();
      cur.pop_back();
      remaining[b]++;
    }
  };
  rec();
  for (const auto& w : words) {
    // canonical representative: block b's standard slots map increasingly to
    // the positions assigned b
    Perm rep(degree_);
    std::vector<int> offs(comp_.size(), 0);
    int acc = 0;
    for (size_t b = 0; b < comp_.size(); ++b) {
      offs[b] = acc;
      acc += comp_[b];
    }
    std::vector<int> next = offs;
    for (int p = 0; p < degree_; ++p) {
      int b = w[p];
      rep[next[b]++] = p;
    }
    index_[w] = static_cast<int>(reps_.size());
    reps_.push_back(std::move(rep));
  }
  (void)word;
}

std::pair<int, Perm> YoungCosets::decompose(const Perm& g) const {
  if (static_cast<int>(g.size()) != degree_) throw InvariantError("coset decompose degree mismatch");
  // assignment word of g's coset: position q = g(standard slot) gets block of slot
  std::vector<int> w(degree_);
  int slot = 0;
  for (size_t b = 0; b < comp_.size(); ++b)
    for (int i = 0; i < comp_[b]; ++i) w[g[slot++]] = static_cast<int>(b);
  auto it = index_.find(w);
  if (it == index_.end()) throw InvariantError("coset not found");
  int c = it->second;
  Perm h = perm_compose(perm_inverse(reps_[c]), g);
  return {c, h};
}

int YoungCosets::coset_of_blocks(const std::vector<std::vector<int>>& blocks) const {
  std::vector<int> w(degree_, -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int p : blocks[b]) w[p] = static_cast<int>(b);
  auto it = index_.find(w);
  if (it == index_.end()) throw InvariantError("coset blocks invalid");
  return it->second;
}

Perm standardize(const Perm& sigma, const std::vector<int>& fiber) {
  std::vector<int> image;
  image.reserve(fiber.size());
  for (int p : fiber) image.push_back(sigma[p]);
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  Perm r(fiber.size());
  for (size_t k = 0; k < fiber.size(); ++k) {
    int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), image[k]) - sorted.begin());
    r[k] = rank;
  }
  return r;
}

Perm block_perm(const std::vector<Perm>& parts) {
  Perm r;
  int off = 0;
  for (const Perm& p : parts) {
    for (int v : p) r.push_back(off + v);
    off += static_cast<int>(p.size());
  }
  return r;
}

Perm block_swap(int a, int b) {
  Perm r(a + b);
  for (int i = 0; i < a; ++i) r[i] = b + i;
  for (int i = 0; i < b; ++i) r[a + i] = i;
  return r;
}

}  // namespace operadix
