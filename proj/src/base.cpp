#include "operadix/base.hpp"

#include <algorithm>
#include <numeric>

namespace operadix {

namespace {

int point_rank(Kind k, int p) { return k == Kind::set ? p - 1 : p; }
int rank_point(Kind k, int r) { return k == Kind::set ? r + 1 : r; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Obj BaseObject::make_set(std::vector<int> group_factors, int nonbase_count, std::vector<Perm> gen_actions) {
  auto o = std::shared_ptr<BaseObject>(new BaseObject());
  o->kind_ = Kind::set;
  o->group_ = &GroupSpec::get(group_factors);
  o->size_ = nonbase_count;
  o->set_acts_ = std::move(gen_actions);
  o->validate();
  return o;
}

Obj BaseObject::make_rep(std::vector<int> group_factors, int dim, std::vector<MatQ> gen_actions) {
  auto o = std::shared_ptr<BaseObject>(new BaseObject());
  o->kind_ = Kind::rep;
  o->group_ = &GroupSpec::get(group_factors);
  o->size_ = dim;
  o->rep_acts_ = std::move(gen_actions);
  o->validate();
  return o;
}

Obj BaseObject::point(Kind k, std::vector<int> group_factors) {
  const GroupSpec& g = GroupSpec::get(group_factors);
  if (k == Kind::set) {
    std::vector<Perm> acts(g.gen_count(), perm_identity(2));
    return make_set(group_factors, 1, std::move(acts));
  }
  std::vector<MatQ> acts(g.gen_count(), MatQ::identity(1));
  return make_rep(group_factors, 1, std::move(acts));
}

Obj BaseObject::null(Kind k, std::vector<int> group_factors) {
  const GroupSpec& g = GroupSpec::get(group_factors);
  if (k == Kind::set) {
    std::vector<Perm> acts(g.gen_count(), perm_identity(1));
    return make_set(group_factors, 0, std::move(acts));
  }
  std::vector<MatQ> acts(g.gen_count(), MatQ::identity(0));
  return make_rep(group_factors, 0, std::move(acts));
}

Obj BaseObject::trivial_set(int k, std::vector<int> group_factors) {
  const GroupSpec& g = GroupSpec::get(group_factors);
  std::vector<Perm> acts(g.gen_count(), perm_identity(k + 1));
  return make_set(group_factors, k, std::move(acts));
}

Obj BaseObject::coset_set(std::vector<int> group_factors, const std::vector<int>& subgroup_elems) {
  const GroupSpec& g = GroupSpec::get(group_factors);
  const auto& elems = g.elements();
  long n = static_cast<long>(elems.size());
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (long e = 0; e < n; ++e) {
    if (coset_of[e] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(e));
    for (int h : subgroup_elems) {
      int x = g.element_index(perm_compose(elems[e], elems[h]));
      if (coset_of[x] >= 0 && coset_of[x] != id)
        throw InvariantError("subgroup element list is not closed");
      coset_of[x] = id;
    }
    if (coset_of[e] < 0) coset_of[e] = id;  // trivial subgroup listing may omit identity
  }
  int nc = static_cast<int>(reps.size());
  std::vector<Perm> acts;
  for (int gi = 0; gi < g.gen_count(); ++gi) {
    Perm a(nc + 1);
    a[0] = 0;
    for (int c = 0; c < nc; ++c) {
      int moved = g.element_index(perm_compose(g.gen(gi), elems[reps[c]]));
      a[c + 1] = coset_of[moved] + 1;
    }
    acts.push_back(std::move(a));
  }
  return make_set(group_factors, nc, std::move(acts));
}

Obj BaseObject::linearize(const Obj& x) {
  if (x->kind() != Kind::set) throw InvariantError("linearize expects a pointed set");
  std::vector<MatQ> acts;
  for (int g = 0; g < x->group().gen_count(); ++g) {
    const Perm& a = x->set_gen_action(g);
    MatQ m(x->size(), x->size());
    for (int p = 1; p <= x->size(); ++p) m.at(a[p] - 1, p - 1) = 1;
    acts.push_back(std::move(m));
  }
  return make_rep(x->factors(), x->size(), std::move(acts));
}

void BaseObject::validate() const {
  if (size_ < 0) throw InvariantError("negative object size");
  if (size_ > kMaxObjectSize) throw CapError("object size exceeds global cap");
  int gc = group_->gen_count();
  if (kind_ == Kind::set) {
    if (static_cast<int>(set_acts_.size()) != gc) throw InvariantError("generator action count mismatch");
    for (const Perm& p : set_acts_) {
      if (static_cast<int>(p.size()) != size_ + 1) throw InvariantError("action table size mismatch");
      if (!p.empty() && p[0] != 0) throw InvariantError("basepoint not fixed by action");
      std::vector<bool> seen(p.size(), false);
      for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v])
          throw InvariantError("action table is not a permutation");
        seen[v] = true;
      }
    }
  } else {
    if (static_cast<int>(rep_acts_.size()) != gc) throw InvariantError("generator action count mismatch");
    for (const MatQ& m : rep_acts_) {
      if (m.rows() != size_ || m.cols() != size_) throw InvariantError("action matrix size mismatch");
      if (!m.invertible()) throw InvariantError("action matrix not invertible");
    }
  }
  // Coxeter relations (and cross-factor commutation)
  auto rels = CoxeterCheck::relations(*group_);
  if (kind_ == Kind::set) {
    auto eval = [&](const std::vector<int>& word) {
      Perm acc = perm_identity(size_ + 1);
      for (auto it = word.rbegin(); it != word.rend(); ++it) acc = perm_compose(set_acts_[*it], acc);
      return acc;
    };
    for (const auto& [a, b] : rels)
      if (eval(a) != eval(b)) throw InvariantError("action table violates Coxeter relations");
  } else {
    auto eval = [&](const std::vector<int>& word) {
      MatQ acc = MatQ::identity(size_);
      for (auto it = word.rbegin(); it != word.rend(); ++it) acc = rep_acts_[*it] * acc;
      return acc;
    };
    for (const auto& [a, b] : rels)
      if (eval(a) != eval(b)) throw InvariantError("action matrices violate Coxeter relations");
  }
}

std::vector<int> BaseObject::points() const {
  std::vector<int> ps(size_);
  for (int i = 0; i < size_; ++i) ps[i] = rank_point(kind_, i);
  return ps;
}

int BaseObject::act_set(const Perm& group_elem, int elem) const {
  std::vector<int> w = group_->word(group_elem);
  int e = elem;
  for (auto it = w.rbegin(); it != w.rend(); ++it) e = set_acts_[*it][e];
  return e;
}

MatQ BaseObject::act_rep(const Perm& group_elem) const {
  std::vector<int> w = group_->word(group_elem);
  MatQ acc = MatQ::identity(size_);
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = rep_acts_[*it] * acc;
  return acc;
}

const std::vector<Perm>& BaseObject::element_actions() const {
  if (!elem_acts_) {
    auto acts = std::make_shared<std::vector<Perm>>();
    for (const Perm& e : group_->elements()) {
      Perm table(size_ + 1);
      for (int p = 0; p <= size_; ++p) table[p] = act_set(e, p);
      acts->push_back(std::move(table));
    }
    elem_acts_ = std::move(acts);
  }
  return *elem_acts_;
}

std::vector<long> BaseObject::marks() const {
  if (kind_ != Kind::set) throw InvariantError("marks are defined for pointed sets; use character");
  const auto& classes = group_->subgroup_classes();
  const auto& acts = element_actions();
  std::vector<long> out;
  out.reserve(classes.size());
  for (const auto& sc : classes) {
    long count = 0;
    for (int p = 1; p <= size_; ++p) {
      bool fixed = true;
      for (int e : sc.rep_elements)
        if (acts[e][p] != p) {
          fixed = false;
          break;
        }
      if (fixed) ++count;
    }
    out.push_back(count);
  }
  return out;
}

std::vector<Rat> BaseObject::character() const {
  if (kind_ != Kind::rep) throw InvariantError("character is defined for representations; use marks");
  const auto& classes = group_->element_classes();
  const auto& elems = group_->elements();
  std::vector<Rat> out;
  out.reserve(classes.size());
  for (const auto& ec : classes) out.push_back(act_rep(elems[ec.rep]).trace());
  return out;
}

std::vector<int> BaseObject::stabilizer(int elem) const {
  const auto& acts = element_actions();
  std::vector<int> st;
  for (size_t e = 0; e < acts.size(); ++e)
    if (acts[e][elem] == elem) st.push_back(static_cast<int>(e));
  return st;
}

std::vector<std::vector<int>> BaseObject::orbits() const {
  UnionFind uf(size_ + 1);
  for (const Perm& a : set_acts_)
    for (int p = 1; p <= size_; ++p) uf.unite(p, a[p]);
  std::map<int, std::vector<int>> by_root;
  for (int p = 1; p <= size_; ++p) by_root[uf.find(p)].push_back(p);
  std::vector<std::vector<int>> out;
  for (auto& [root, mem] : by_root) out.push_back(std::move(mem));
  return out;
}

bool iso_equal(const Obj& x, const Obj& y) {
  if (x->kind() != y->kind()) throw InvariantError("iso_equal: kind mismatch");
  if (x->factors() != y->factors()) throw InvariantError("iso_equal: group mismatch");
  if (x->kind() == Kind::set) return x->marks() == y->marks();
  return x->character() == y->character();
}

// ---- BaseMap ---------------------------------------------------------------

BaseMap BaseMap::make_set(Obj src, Obj tgt, std::vector<int> table) {
  BaseMap m;
  m.src_ = std::move(src);
  m.tgt_ = std::move(tgt);
  m.table_ = std::move(table);
  m.validate();
  return m;
}

BaseMap BaseMap::make_rep(Obj src, Obj tgt, MatQ mat) {
  BaseMap m;
  m.src_ = std::move(src);
  m.tgt_ = std::move(tgt);
  m.mat_ = std::move(mat);
  m.validate();
  return m;
}

BaseMap BaseMap::identity(const Obj& x) {
  if (x->kind() == Kind::set) return make_set(x, x, perm_identity(x->size() + 1));
  return make_rep(x, x, MatQ::identity(x->size()));
}

BaseMap BaseMap::null_map(const Obj& src, const Obj& tgt) {
  if (src->kind() == Kind::set) return make_set(src, tgt, std::vector<int>(src->size() + 1, 0));
  return make_rep(src, tgt, MatQ::zero(tgt->size(), src->size()));
}

BaseMap BaseMap::constant(const Obj& src, const Obj& tgt, int y) {
  if (src->kind() != Kind::set) throw InvariantError("constant map is a pointed-set construction");
  std::vector<int> t(src->size() + 1, y);
  t[0] = 0;
  return make_set(src, tgt, std::move(t));
}

void BaseMap::validate() const {
  if (!src_ || !tgt_) throw InvariantError("map endpoints missing");
  if (src_->kind() != tgt_->kind()) throw InvariantError("map endpoint kind mismatch");
  if (src_->factors() != tgt_->factors()) throw InvariantError("map endpoint group mismatch");
  int gc = src_->group().gen_count();
  if (kind() == Kind::set) {
    if (static_cast<int>(table_.size()) != src_->size() + 1) throw InvariantError("map table size mismatch");
    if (table_[0] != 0) throw InvariantError("map does not preserve basepoint");
    for (int v : table_)
      if (v < 0 || v > tgt_->size()) throw InvariantError("map table value out of range");
    for (int g = 0; g < gc; ++g) {
      const Perm& as = src_->set_gen_action(g);
      const Perm& at = tgt_->set_gen_action(g);
      for (int p = 0; p <= src_->size(); ++p)
        if (table_[as[p]] != at[table_[p]]) throw InvariantError("map is not equivariant");
    }
  } else {
    if (mat_.rows() != tgt_->size() || mat_.cols() != src_->size())
      throw InvariantError("map matrix shape mismatch");
    for (int g = 0; g < gc; ++g) {
      if (mat_ * src_->rep_gen_action(g) != tgt_->rep_gen_action(g) * mat_)
        throw InvariantError("map matrix is not equivariant");
    }
  }
}

int BaseMap::apply(int elem) const {
  if (kind() != Kind::set) throw InvariantError("apply() is for pointed sets");
  return table_[elem];
}

BaseMap BaseMap::compose_after(const BaseMap& inner) const {
  if (inner.tgt_.get() != src_.get() && !(inner.tgt_->kind() == src_->kind() && inner.tgt_->size() == src_->size() && inner.tgt_->factors() == src_->factors()))
    throw InvariantError("composition endpoint mismatch");
  if (kind() == Kind::set) {
    std::vector<int> t(inner.src_->size() + 1);
    for (int p = 0; p <= inner.src_->size(); ++p) t[p] = table_[inner.table_[p]];
    return make_set(inner.src_, tgt_, std::move(t));
  }
  return make_rep(inner.src_, tgt_, mat_ * inner.mat_);
}

bool BaseMap::operator==(const BaseMap& o) const {
  if (kind() != o.kind()) return false;
  if (kind() == Kind::set) return table_ == o.table_;
  return mat_ == o.mat_;
}

bool BaseMap::is_injective() const {
  if (kind() == Kind::set) {
    std::vector<bool> seen(tgt_->size() + 1, false);
    for (int p = 0; p <= src_->size(); ++p) {
      if (seen[table_[p]] && table_[p] != 0) return false;
      if (table_[p] == 0 && p != 0) return false;
      seen[table_[p]] = true;
    }
    return true;
  }
  return mat_.rank() == src_->size();
}

bool BaseMap::is_surjective() const {
  if (kind() == Kind::set) {
    std::vector<bool> seen(tgt_->size() + 1, false);
    for (int v : table_) seen[v] = true;
    for (bool b : seen)
      if (!b) return false;
    return true;
  }
  return mat_.rank() == tgt_->size();
}

bool BaseMap::is_iso() const { return src_->size() == tgt_->size() && is_injective() && is_surjective(); }

BaseMap BaseMap::inverse() const {
  if (!is_iso()) throw InvariantError("inverse of non-isomorphism");
  if (kind() == Kind::set) {
    std::vector<int> t(tgt_->size() + 1);
    for (int p = 0; p <= src_->size(); ++p) t[table_[p]] = p;
    return make_set(tgt_, src_, std::move(t));
  }
  return make_rep(tgt_, src_, mat_.inverse());
}

// ---- smash -----------------------------------------------------------------

int SmashBuild::encode(const std::vector<int>& tuple) const {
  Kind k = obj->kind();
  long idx = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    idx = idx * parts[i]->size() + point_rank(k, tuple[i]);
  }
  return rank_point(k, static_cast<int>(idx));
}

std::vector<int> SmashBuild::decode(int point) const {
  Kind k = obj->kind();
  long idx = point_rank(k, point);
  std::vector<int> tuple(parts.size());
  for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) {
    tuple[i] = rank_point(k, static_cast<int>(idx % parts[i]->size()));
    idx /= parts[i]->size();
  }
  return tuple;
}

SmashBuild smash(const std::vector<Obj>& factors) {
  if (factors.empty()) throw InvariantError("smash of zero factors");
  Kind k = factors[0]->kind();
  std::vector<int> group_factors;
  long total = 1;
  for (const Obj& f : factors) {
    if (f->kind() != k) throw InvariantError("smash of mixed kinds rejected");
    for (int n : f->factors()) group_factors.push_back(n);
    total *= f->size();
    if (total > kMaxObjectSize) throw CapError("smash size exceeds cap");
  }
  const GroupSpec& g = GroupSpec::get(group_factors);
  SmashBuild b;
  b.parts = factors;
  if (k == Kind::set) {
    std::vector<Perm> acts;
    acts.reserve(g.gen_count());
    // generator of factor i acting on component i
    for (size_t i = 0; i < factors.size(); ++i) {
      for (int lg = 0; lg < factors[i]->group().gen_count(); ++lg) {
        Perm a(total + 1);
        a[0] = 0;
        acts.push_back(std::move(a));
      }
    }
    // compute strides
    std::vector<long> stride(factors.size(), 1);
    for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
      stride[i] = stride[i + 1] * factors[i + 1]->size();
    int gi = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
      for (int lg = 0; lg < factors[i]->group().gen_count(); ++lg, ++gi) {
        Perm& a = acts[gi];
        const Perm& la = factors[i]->set_gen_action(lg);
        for (long idx = 0; idx < total; ++idx) {
          long comp = (idx / stride[i]) % factors[i]->size();
          int p = rank_point(k, static_cast<int>(comp));
          long comp2 = point_rank(k, la[p]);
          a[idx + 1] = static_cast<int>(idx + (comp2 - comp) * stride[i]) + 1;
        }
      }
    }
    b.obj = BaseObject::make_set(group_factors, static_cast<int>(total), std::move(acts));
  } else {
    std::vector<MatQ> acts;
    for (size_t i = 0; i < factors.size(); ++i) {
      for (int lg = 0; lg < factors[i]->group().gen_count(); ++lg) {
        MatQ m = MatQ::identity(1);
        for (size_t j = 0; j < factors.size(); ++j) {
          const MatQ& part =
              (j == i) ? factors[j]->rep_gen_action(lg) : MatQ::identity(factors[j]->size());
          m = m.kron(part);
        }
        acts.push_back(std::move(m));
      }
    }
    b.obj = BaseObject::make_rep(group_factors, static_cast<int>(total), std::move(acts));
  }
  return b;
}

Obj smash2(const Obj& x, const Obj& y) { return smash({x, y}).obj; }

BaseMap smash_map(const SmashBuild& src, const SmashBuild& tgt, const std::vector<BaseMap>& maps) {
  if (src.parts.size() != maps.size() || tgt.parts.size() != maps.size())
    throw InvariantError("smash_map arity mismatch");
  Kind k = src.obj->kind();
  if (k == Kind::set) {
    std::vector<int> table(src.obj->size() + 1, 0);
    for (int p = 1; p <= src.obj->size(); ++p) {
      std::vector<int> tuple = src.decode(p);
      bool null = false;
      for (size_t i = 0; i < maps.size(); ++i) {
        tuple[i] = maps[i].apply(tuple[i]);
        if (tuple[i] == 0) {
          null = true;
          break;
        }
      }
      table[p] = null ? 0 : tgt.encode(tuple);
    }
    return BaseMap::make_set(src.obj, tgt.obj, std::move(table));
  }
  MatQ m = MatQ::identity(1);
  for (const BaseMap& f : maps) m = m.kron(f.matrix());
  return BaseMap::make_rep(src.obj, tgt.obj, std::move(m));
}

Obj restrict_along(const Obj& x, const std::vector<int>& subgroup_factors,
                   const std::vector<Perm>& gen_images) {
  const GroupSpec& h = GroupSpec::get(subgroup_factors);
  if (static_cast<int>(gen_images.size()) != h.gen_count())
    throw InvariantError("restriction generator image count mismatch");
  if (x->kind() == Kind::set) {
    std::vector<Perm> acts;
    for (const Perm& img : gen_images) {
      Perm a(x->size() + 1);
      for (int p = 0; p <= x->size(); ++p) a[p] = x->act_set(img, p);
      acts.push_back(std::move(a));
    }
    return BaseObject::make_set(subgroup_factors, x->size(), std::move(acts));
  }
  std::vector<MatQ> acts;
  for (const Perm& img : gen_images) acts.push_back(x->act_rep(img));
  return BaseObject::make_rep(subgroup_factors, x->size(), std::move(acts));
}

Obj smash_diagonal(const Obj& x, const Obj& y) {
  if (x->factors() != y->factors()) throw InvariantError("diagonal restriction needs equal groups");
  SmashBuild b = smash({x, y});
  const GroupSpec& g = x->group();
  std::vector<Perm> images;
  int deg = g.degree();
  for (int i = 0; i < g.gen_count(); ++i) {
    // diagonal image of generator i inside G x G
    Perm img(2 * deg);
    for (int p = 0; p < deg; ++p) {
      img[p] = g.gen(i)[p];
      img[deg + p] = deg + g.gen(i)[p];
    }
    images.push_back(std::move(img));
  }
  return restrict_along(b.obj, x->factors(), images);
}

// ---- induce ----------------------------------------------------------------

int InduceBuild::encode(int coset, int inner_point) const {
  Kind k = obj->kind();
  return rank_point(k, coset * inner->size() + point_rank(k, inner_point));
}

std::pair<int, int> InduceBuild::decode(int point) const {
  Kind k = obj->kind();
  int r = point_rank(k, point);
  return {r / inner->size(), rank_point(k, r % inner->size())};
}

namespace {

// Convert a block-preserving permutation h (w.r.t. composition) into the
// element of the inner Young product (zero parts dropped).
Perm inner_element(const std::vector<int>& composition, const Perm& h) {
  Perm out;
  int off = 0;
  for (int c : composition) {
    for (int i = 0; i < c; ++i) {
      int v = h[off + i] - off;
      if (v < 0 || v >= c) throw InvariantError("permutation does not preserve Young blocks");
      out.push_back(static_cast<int>(out.size()) - i + v);
    }
    off += c;
  }
  return out;
}

}  // namespace

InduceBuild induce(const Obj& x, const std::vector<int>& composition) {
  int ambient = 0;
  std::vector<int> nonzero;
  for (int c : composition) {
    if (c < 0) throw InvariantError("composition parts must be non-negative");
    ambient += c;
    if (c > 0) nonzero.push_back(c);
  }
  if (x->factors() != nonzero)
    throw InvariantError("induce: object group does not match the composition");
  InduceBuild b;
  b.inner = x;
  b.cosets = std::make_shared<YoungCosets>(composition);
  long total = b.cosets->count() * x->size();
  if (total > kMaxObjectSize) throw CapError("induced object exceeds size cap");
  std::vector<int> ambient_factors = ambient == 0 ? std::vector<int>{} : std::vector<int>{ambient};
  const GroupSpec& amb = GroupSpec::get(ambient_factors);
  Kind k = x->kind();
  int nc = static_cast<int>(b.cosets->count());
  if (k == Kind::set) {
    std::vector<Perm> acts;
    for (int g = 0; g < amb.gen_count(); ++g) {
      Perm a(total + 1);
      a[0] = 0;
      for (int c = 0; c < nc; ++c) {
        Perm moved = perm_compose(amb.gen(g), b.cosets->rep(c));
        auto [c2, h] = b.cosets->decompose(moved);
        Perm hh = inner_element(composition, h);
        for (int p = 1; p <= x->size(); ++p) {
          int q = x->act_set(hh, p);
          a[c * x->size() + p] = c2 * x->size() + q;
        }
      }
      acts.push_back(std::move(a));
    }
    b.obj = BaseObject::make_set(ambient_factors, static_cast<int>(total), std::move(acts));
  } else {
    std::vector<MatQ> acts;
    for (int g = 0; g < amb.gen_count(); ++g) {
      MatQ m(static_cast<int>(total), static_cast<int>(total));
      for (int c = 0; c < nc; ++c) {
        Perm moved = perm_compose(amb.gen(g), b.cosets->rep(c));
        auto [c2, h] = b.cosets->decompose(moved);
        MatQ hm = x->act_rep(inner_element(composition, h));
        for (int i = 0; i < x->size(); ++i)
          for (int j = 0; j < x->size(); ++j) m.at(c2 * x->size() + i, c * x->size() + j) = hm.at(i, j);
      }
      acts.push_back(std::move(m));
    }
    b.obj = BaseObject::make_rep(ambient_factors, static_cast<int>(total), std::move(acts));
  }
  return b;
}

BaseMap induce_map(const InduceBuild& src, const InduceBuild& tgt, const BaseMap& inner) {
  if (src.cosets->composition() != tgt.cosets->composition())
    throw InvariantError("induce_map composition mismatch");
  Kind k = src.obj->kind();
  int nc = static_cast<int>(src.cosets->count());
  if (k == Kind::set) {
    std::vector<int> table(src.obj->size() + 1, 0);
    for (int c = 0; c < nc; ++c)
      for (int p = 1; p <= src.inner->size(); ++p) {
        int q = inner.apply(p);
        table[src.encode(c, p)] = q == 0 ? 0 : tgt.encode(c, q);
      }
    return BaseMap::make_set(src.obj, tgt.obj, std::move(table));
  }
  MatQ m(tgt.obj->size(), src.obj->size());
  const MatQ& im = inner.matrix();
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < im.rows(); ++i)
      for (int j = 0; j < im.cols(); ++j)
        m.at(c * im.rows() + i, c * im.cols() + j) = im.at(i, j);
  return BaseMap::make_rep(src.obj, tgt.obj, std::move(m));
}

// ---- quotients --------------------------------------------------------------

int QuotientBuild::class_of(int point) const { return project.apply(point); }

QuotientBuild quotient_by_perms(const Obj& x, const std::vector<Perm>& sym_perms,
                                const std::vector<MatQ>& sym_mats) {
  QuotientBuild q;
  q.source = x;
  if (x->kind() == Kind::set) {
    UnionFind uf(x->size() + 1);
    for (const Perm& s : sym_perms) {
      if (static_cast<int>(s.size()) != x->size() + 1 || s[0] != 0)
        throw InvariantError("auxiliary symmetry table invalid");
      for (int p = 1; p <= x->size(); ++p) uf.unite(p, s[p]);
    }
    // classes ordered by least member; basepoint class is {0}
    std::map<int, int> root_to_class;
    std::vector<int> cls(x->size() + 1, 0);
    for (int p = 1; p <= x->size(); ++p) {
      int r = uf.find(p);
      if (r == 0) throw InvariantError("auxiliary symmetry moved the basepoint");
      auto it = root_to_class.find(r);
      if (it == root_to_class.end()) {
        int id = static_cast<int>(root_to_class.size()) + 1;
        root_to_class[r] = id;
        cls[p] = id;
        q.section.push_back(p);
        q.members.push_back({p});
      } else {
        cls[p] = it->second;
        q.members[it->second - 1].push_back(p);
      }
    }
    int nq = static_cast<int>(root_to_class.size());
    // induced retained action
    std::vector<Perm> acts;
    for (int g = 0; g < x->group().gen_count(); ++g) {
      Perm a(nq + 1);
      a[0] = 0;
      std::vector<int> defined(nq + 1, -1);
      for (int p = 1; p <= x->size(); ++p) {
        int from = cls[p], to = cls[x->set_gen_action(g)[p]];
        if (defined[from] < 0)
          defined[from] = to;
        else if (defined[from] != to)
          throw InvariantError("retained action does not descend to the quotient");
      }
      for (int c = 1; c <= nq; ++c) a[c] = defined[c];
      acts.push_back(std::move(a));
    }
    q.obj = BaseObject::make_set(x->factors(), nq, std::move(acts));
    q.project = BaseMap::make_set(x, q.obj, std::move(cls));
  } else {
    // coinvariants: cokernel of stacked (S - I)
    MatQ stacked(x->size(), 0);
    bool any = false;
    for (const MatQ& s : sym_mats) {
      MatQ d = s - MatQ::identity(x->size());
      stacked = any ? stacked.hcat(d) : d;
      any = true;
    }
    if (!any) stacked = MatQ::zero(x->size(), 0);
    Cokernel ck = cokernel(stacked);
    int nq = ck.projection.rows();
    std::vector<MatQ> acts;
    for (int g = 0; g < x->group().gen_count(); ++g) {
      MatQ a = ck.projection * x->rep_gen_action(g) * ck.section;
      if (a * ck.projection != ck.projection * x->rep_gen_action(g))
        throw InvariantError("retained action does not descend to the coinvariants");
      acts.push_back(std::move(a));
    }
    q.obj = BaseObject::make_rep(x->factors(), nq, std::move(acts));
    q.project = BaseMap::make_rep(x, q.obj, ck.projection);
    q.section = ck.chosen;
  }
  return q;
}

QuotientBuild quotient_by_group(const Obj& x) {
  std::vector<Perm> ps;
  std::vector<MatQ> ms;
  if (x->kind() == Kind::set)
    for (int g = 0; g < x->group().gen_count(); ++g) ps.push_back(x->set_gen_action(g));
  else
    for (int g = 0; g < x->group().gen_count(); ++g) ms.push_back(x->rep_gen_action(g));
  // retained group becomes trivial: forget the action first
  Obj forgotten;
  if (x->kind() == Kind::set) {
    std::vector<Perm> none;
    forgotten = BaseObject::make_set({}, x->size(), std::move(none));
  } else {
    std::vector<MatQ> none;
    forgotten = BaseObject::make_rep({}, x->size(), std::move(none));
  }
  QuotientBuild q = quotient_by_perms(forgotten, ps, ms);
  q.source = x;
  return q;
}

// ---- coequalizer ------------------------------------------------------------

CoequalizerBuild coequalizer(const BaseMap& f, const BaseMap& g) {
  if (f.source().get() != g.source().get() || f.target().get() != g.target().get()) {
    if (f.source()->size() != g.source()->size() || f.target()->size() != g.target()->size() ||
        f.source()->factors() != g.source()->factors() || f.target()->factors() != g.target()->factors())
      throw InvariantError("coequalizer endpoint mismatch");
  }
  const Obj& y = f.target();
  CoequalizerBuild b;
  if (f.kind() == Kind::set) {
    UnionFind uf(y->size() + 1);
    for (int p = 0; p <= f.source()->size(); ++p) uf.unite(f.apply(p), g.apply(p));
    std::map<int, int> root_to_class;
    std::vector<int> cls(y->size() + 1, -1);
    int base_root = uf.find(0);
    for (int p = 0; p <= y->size(); ++p)
      if (uf.find(p) == base_root) cls[p] = 0;
    for (int p = 1; p <= y->size(); ++p) {
      if (cls[p] == 0) continue;
      int r = uf.find(p);
      auto it = root_to_class.find(r);
      if (it == root_to_class.end()) {
        int id = static_cast<int>(root_to_class.size()) + 1;
        root_to_class[r] = id;
        cls[p] = id;
        b.section.push_back(p);
        b.members.push_back({p});
      } else {
        cls[p] = it->second;
        b.members[it->second - 1].push_back(p);
      }
    }
    int nq = static_cast<int>(root_to_class.size());
    std::vector<Perm> acts;
    for (int gi = 0; gi < y->group().gen_count(); ++gi) {
      Perm a(nq + 1);
      a[0] = 0;
      std::vector<int> defined(nq + 1, -1);
      defined[0] = 0;
      for (int p = 0; p <= y->size(); ++p) {
        int from = cls[p], to = cls[y->set_gen_action(gi)[p]];
        if (defined[from] < 0)
          defined[from] = to;
        else if (defined[from] != to)
          throw InvariantError("group action does not descend to the coequalizer");
      }
      for (int c = 1; c <= nq; ++c) a[c] = defined[c] < 0 ? c : defined[c];
      acts.push_back(std::move(a));
    }
    b.obj = BaseObject::make_set(y->factors(), nq, std::move(acts));
    b.project = BaseMap::make_set(y, b.obj, std::move(cls));
  } else {
    MatQ d = f.matrix() - g.matrix();
    Cokernel ck = cokernel(d);
    int nq = ck.projection.rows();
    std::vector<MatQ> acts;
    for (int gi = 0; gi < y->group().gen_count(); ++gi) {
      MatQ a = ck.projection * y->rep_gen_action(gi) * ck.section;
      if (a * ck.projection != ck.projection * y->rep_gen_action(gi))
        throw InvariantError("group action does not descend to the cokernel");
      acts.push_back(std::move(a));
    }
    b.obj = BaseObject::make_rep(y->factors(), nq, std::move(acts));
    b.project = BaseMap::make_rep(y, b.obj, ck.projection);
    b.section = ck.chosen;
  }
  return b;
}

// ---- wedge / pushout ---------------------------------------------------------

int WedgeBuild::encode(int part, int point) const {
  Kind k = obj->kind();
  return rank_point(k, offsets[part] + point_rank(k, point));
}

std::pair<int, int> WedgeBuild::decode(int point) const {
  Kind k = obj->kind();
  int r = point_rank(k, point);
  int part = 0;
  while (part + 1 < static_cast<int>(offsets.size()) && offsets[part + 1] <= r) ++part;
  return {part, rank_point(k, r - offsets[part])};
}

BaseMap WedgeBuild::injection(int part) const {
  const Obj& p = parts[part];
  if (obj->kind() == Kind::set) {
    std::vector<int> t(p->size() + 1, 0);
    for (int e = 1; e <= p->size(); ++e) t[e] = encode(part, e);
    return BaseMap::make_set(p, obj, std::move(t));
  }
  MatQ m(obj->size(), p->size());
  for (int e = 0; e < p->size(); ++e) m.at(offsets[part] + e, e) = 1;
  return BaseMap::make_rep(p, obj, std::move(m));
}

WedgeBuild wedge(const std::vector<Obj>& parts) {
  if (parts.empty()) throw InvariantError("wedge of zero parts");
  Kind k = parts[0]->kind();
  const std::vector<int>& fac = parts[0]->factors();
  WedgeBuild b;
  b.parts = parts;
  int total = 0;
  for (const Obj& p : parts) {
    if (p->kind() != k || p->factors() != fac) throw InvariantError("wedge of incompatible objects");
    b.offsets.push_back(total);
    total += p->size();
  }
  if (k == Kind::set) {
    std::vector<Perm> acts;
    const GroupSpec& g = GroupSpec::get(fac);
    for (int gi = 0; gi < g.gen_count(); ++gi) {
      Perm a(total + 1);
      a[0] = 0;
      for (size_t i = 0; i < parts.size(); ++i)
        for (int p = 1; p <= parts[i]->size(); ++p)
          a[b.offsets[i] + p - 1 + 1] = b.offsets[i] + parts[i]->set_gen_action(gi)[p] - 1 + 1;
      acts.push_back(std::move(a));
    }
    b.obj = BaseObject::make_set(fac, total, std::move(acts));
  } else {
    std::vector<MatQ> acts;
    const GroupSpec& g = GroupSpec::get(fac);
    for (int gi = 0; gi < g.gen_count(); ++gi) {
      MatQ m(total, total);
      for (size_t i = 0; i < parts.size(); ++i) {
        const MatQ& pm = parts[i]->rep_gen_action(gi);
        for (int r = 0; r < pm.rows(); ++r)
          for (int c = 0; c < pm.cols(); ++c) m.at(b.offsets[i] + r, b.offsets[i] + c) = pm.at(r, c);
      }
      acts.push_back(std::move(m));
    }
    b.obj = BaseObject::make_rep(fac, total, std::move(acts));
  }
  return b;
}

PushoutBuild pushout(const BaseMap& f, const BaseMap& g) {
  if (f.source()->size() != g.source()->size() || f.source()->factors() != g.source()->factors())
    throw InvariantError("pushout legs have different sources");
  PushoutBuild b;
  b.wb = wedge({f.target(), g.target()});
  BaseMap inl = b.wb.injection(0), inr = b.wb.injection(1);
  b.cb = coequalizer(inl.compose_after(f), inr.compose_after(g));
  b.obj = b.cb.obj;
  b.from_a = b.cb.project.compose_after(inl);
  b.from_b = b.cb.project.compose_after(inr);
  return b;
}

Obj combine_aux(const Obj& x, const std::vector<int>& aux_factors, const std::vector<Perm>& aux_perms,
                const std::vector<MatQ>& aux_mats) {
  std::vector<int> fac = aux_factors;
  for (int n : x->factors()) fac.push_back(n);
  if (x->kind() == Kind::set) {
    std::vector<Perm> acts = aux_perms;
    for (int g = 0; g < x->group().gen_count(); ++g) acts.push_back(x->set_gen_action(g));
    return BaseObject::make_set(fac, x->size(), std::move(acts));
  }
  std::vector<MatQ> acts = aux_mats;
  for (int g = 0; g < x->group().gen_count(); ++g) acts.push_back(x->rep_gen_action(g));
  return BaseObject::make_rep(fac, x->size(), std::move(acts));
}

// ---- equivariant map enumeration ---------------------------------------------

std::vector<std::vector<int>> enumerate_equivariant_maps(const Obj& x, const Obj& y, long cap) {
  if (x->kind() != Kind::set || y->kind() != Kind::set)
    throw InvariantError("map enumeration is a pointed-set construction");
  if (x->factors() != y->factors()) throw InvariantError("map enumeration group mismatch");
  const auto& xacts = x->element_actions();
  const auto& yacts = y->element_actions();
  long ng = static_cast<long>(x->group().elements().size());
  // orbit representatives with transporter elements: elem -> (rep, g) with elem = g . rep
  std::vector<int> rep_of(x->size() + 1, -1), transporter(x->size() + 1, -1);
  std::vector<int> reps;
  for (int p = 1; p <= x->size(); ++p) {
    if (rep_of[p] >= 0) continue;
    reps.push_back(p);
    for (long g = 0; g < ng; ++g) {
      int q = xacts[g][p];
      if (rep_of[q] < 0) {
        rep_of[q] = p;
        transporter[q] = static_cast<int>(g);
      }
    }
  }
  // valid images per representative
  std::vector<std::vector<int>> choices;
  long total = 1;
  for (int r : reps) {
    std::vector<int> stab = x->stabilizer(r);
    std::vector<int> valid = {0};
    for (int q = 1; q <= y->size(); ++q) {
      bool ok = true;
      for (int s : stab)
        if (yacts[s][q] != q) {
          ok = false;
          break;
        }
      if (ok) valid.push_back(q);
    }
    total *= static_cast<long>(valid.size());
    if (total > cap) throw CapError("equivariant map enumeration exceeds cap");
    choices.push_back(std::move(valid));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> pick(reps.size(), 0);
  while (true) {
    std::vector<int> table(x->size() + 1, 0);
    for (size_t i = 0; i < reps.size(); ++i) {
      int img = choices[i][pick[i]];
      // extend over the orbit
      for (int p = 1; p <= x->size(); ++p)
        if (rep_of[p] == reps[i]) table[p] = img == 0 ? 0 : yacts[transporter[p]][img];
    }
    out.push_back(std::move(table));
    int k = static_cast<int>(reps.size()) - 1;
    while (k >= 0) {
      if (++pick[k] < static_cast<int>(choices[k].size())) break;
      pick[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

std::vector<MatQ> equivariant_linear_maps(const Obj& x, const Obj& y) {
  if (x->kind() != Kind::rep || y->kind() != Kind::rep)
    throw InvariantError("linear map space is a representation construction");
  if (x->factors() != y->factors()) throw InvariantError("map space group mismatch");
  int dx = x->size(), dy = y->size();
  int gc = x->group().gen_count();
  // unknowns M[i][j], constraints Ay M - M Ax = 0 per generator
  MatQ sys(gc * dy * dx, dy * dx);
  for (int g = 0; g < gc; ++g) {
    const MatQ& ax = x->rep_gen_action(g);
    const MatQ& ay = y->rep_gen_action(g);
    for (int i = 0; i < dy; ++i)
      for (int j = 0; j < dx; ++j) {
        int row = (g * dy + i) * dx + j;
        // (Ay M)_{ij} = sum_k Ay[i][k] M[k][j]
        for (int k = 0; k < dy; ++k) sys.at(row, k * dx + j) += ay.at(i, k);
        // (M Ax)_{ij} = sum_k M[i][k] Ax[k][j]
        for (int k = 0; k < dx; ++k) sys.at(row, i * dx + k) -= ax.at(k, j);
      }
  }
  MatQ ns = nullspace(sys);
  std::vector<MatQ> basis;
  for (int c = 0; c < ns.cols(); ++c) {
    MatQ m(dy, dx);
    for (int i = 0; i < dy; ++i)
      for (int j = 0; j < dx; ++j) m.at(i, j) = ns.at(i * dx + j, c);
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace operadix
