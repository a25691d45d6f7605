#include <doctest.h>

#include <random>
#include <set>

#include "operadix/base.hpp"

using namespace operadix;

namespace {

// Regular Sigma_2 pointed set {*, a, b} with the swap action.
Obj regular_s2() { return BaseObject::coset_set({2}, {0}); }

// Natural Sigma_3 set on 3 points: cosets of a point stabilizer.
Obj natural_s3() {
  const GroupSpec& g = GroupSpec::get({3});
  // stabilizer of the last point: permutations fixing position 2
  std::vector<int> stab;
  const auto& elems = g.elements();
  for (size_t e = 0; e < elems.size(); ++e)
    if (elems[e][2] == 2) stab.push_back(static_cast<int>(e));
  return BaseObject::coset_set({3}, stab);
}

// Double-coset formula oracle for the marks of an induced pointed set:
// |(Ind_H^G X)^K| = sum over double cosets KgH of |X^{g^-1 K g  cap  H}|.
std::vector<long> induced_marks_oracle(const Obj& x, const std::vector<int>& composition) {
  int ambient = 0;
  for (int c : composition) ambient += c;
  const GroupSpec& g = ambient == 0 ? GroupSpec::get({}) : GroupSpec::get({ambient});
  const auto& elems = g.elements();
  long n = static_cast<long>(elems.size());
  // H = block-preserving permutations
  auto in_h = [&](const Perm& p) {
    int off = 0;
    for (int c : composition) {
      for (int i = 0; i < c; ++i)
        if (p[off + i] < off || p[off + i] >= off + c) return false;
      off += c;
    }
    return true;
  };
  std::vector<int> h_elems;
  for (long e = 0; e < n; ++e)
    if (in_h(elems[e])) h_elems.push_back(static_cast<int>(e));

  std::vector<long> out;
  for (const auto& sc : g.subgroup_classes()) {
    // A point [g, x] of G x_H X is K-fixed iff g^-1 K g is contained in H and
    // x is fixed by g^-1 K g.  Sum over left cosets gH.
    std::vector<bool> used(n, false);
    long total = 0;
    for (long e = 0; e < n; ++e) {
      if (used[e]) continue;
      for (int h : h_elems) used[g.element_index(perm_compose(elems[e], elems[h]))] = true;
      Perm ginv = perm_inverse(elems[e]);
      bool contained = true;
      std::vector<Perm> conj_elems;
      for (int k : sc.rep_elements) {
        Perm conj = perm_compose(perm_compose(ginv, elems[k]), elems[e]);
        if (!in_h(conj)) {
          contained = false;
          break;
        }
        conj_elems.push_back(std::move(conj));
      }
      if (!contained) continue;
      for (int px = 1; px <= x->size(); ++px) {
        bool all_fixed = true;
        for (const Perm& c : conj_elems)
          if (x->act_set(c, px) != px) {
            all_fixed = false;
            break;
          }
        if (all_fixed) ++total;
      }
    }
    out.push_back(total);
  }
  return out;
}

}  // namespace

TEST_CASE("smash unit and cardinality") {
  Obj s0 = BaseObject::point(Kind::set);
  Obj x = BaseObject::trivial_set(3);
  SmashBuild b = smash({s0, x});
  CHECK(b.obj->size() == 3);
  CHECK(iso_equal(b.obj, x));

  Obj two = BaseObject::trivial_set(2);
  Obj one = BaseObject::trivial_set(1);
  CHECK(smash({two, one}).obj->size() == 2);
}

TEST_CASE("smash of regular Sigma_2 with itself is free over Sigma_2 x Sigma_2") {
  Obj r = regular_s2();
  SmashBuild b = smash({r, r});
  CHECK(b.obj->size() == 4);
  // Oracle: direct orbit enumeration.  Non-basepoint pairs (a_i, a_j); the
  // generators act on one coordinate each, so the orbit of (a,a) is all four
  // pairs: a single free orbit, marks (4, 0, 0, 0, 0).
  auto orbits = b.obj->orbits();
  CHECK(orbits.size() == 1);
  CHECK(orbits[0].size() == 4);
  std::vector<long> m = b.obj->marks();
  REQUIRE(m.size() == 5);  // subgroup classes of Sigma_2 x Sigma_2
  CHECK(m[0] == 4);
  for (size_t i = 1; i < m.size(); ++i) CHECK(m[i] == 0);
}

TEST_CASE("induce along H = G is the identity") {
  Obj r = regular_s2();
  InduceBuild b = induce(r, {2});
  CHECK(b.obj->size() == r->size());
  CHECK(iso_equal(b.obj, r));
}

TEST_CASE("induce a point from Sigma_1 x Sigma_1 to Sigma_2") {
  Obj pt = BaseObject::point(Kind::set, {1, 1});
  InduceBuild b = induce(pt, {1, 1});
  CHECK(b.obj->size() == 2);
  std::vector<long> m = b.obj->marks();
  REQUIRE(m.size() == 2);
  CHECK(m[0] == 2);  // trivial subgroup
  CHECK(m[1] == 0);  // full Sigma_2
}

TEST_CASE("induced trivial rep of Sigma_1 x Sigma_1 is the regular representation") {
  Obj triv = BaseObject::point(Kind::rep, {1, 1});
  InduceBuild b = induce(triv, {1, 1});
  CHECK(b.obj->size() == 2);
  std::vector<Rat> ch = b.obj->character();
  REQUIRE(ch.size() == 2);
  CHECK(ch[0] ==
        2);  // identity class
  CHECK(ch[1] == 0);  // transposition class
}

TEST_CASE("marks of induced sets match the double-coset formula") {
  std::mt19937_64 rng(20240817);
  int checked = 0;
  std::vector<std::vector<int>> comps = {{1, 1}, {2}, {1, 2}, {2, 1}, {1, 1, 1}, {2, 2}, {3}, {1, 3}};
  for (const auto& comp : comps) {
    std::vector<int> nonzero;
    for (int c : comp)
      if (c > 0) nonzero.push_back(c);
    const GroupSpec& h = GroupSpec::get(nonzero);
    const auto& classes = h.subgroup_classes();
    for (int trial = 0; trial < 3; ++trial) {
      // random inner object: wedge of coset orbits
      int orbit_count = 1 + static_cast<int>(rng() % 2);
      std::vector<Obj> parts;
      for (int i = 0; i < orbit_count; ++i) {
        const auto& sc = classes[rng() % classes.size()];
        parts.push_back(BaseObject::coset_set(nonzero, sc.rep_elements));
      }
      Obj inner = parts.size() == 1 ? parts[0] : wedge(parts).obj;
      InduceBuild b = induce(inner, comp);
      CHECK(b.obj->marks() == induced_marks_oracle(inner, comp));
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("quotient by group") {
  Obj t = BaseObject::trivial_set(3, {2});
  QuotientBuild q1 = quotient_by_group(t);
  CHECK(q1.obj->size() == 3);

  Obj r = regular_s2();
  QuotientBuild q2 = quotient_by_group(r);
  CHECK(q2.obj->size() == 1);

  Obj reg = BaseObject::linearize(regular_s2());
  QuotientBuild q3 = quotient_by_group(reg);
  CHECK(q3.obj->size() == 1);
}

TEST_CASE("quotient of induced set counts orbits") {
  // quotient_by_group(induce(X)) has as many points as X's orbit set under
  // the trivial-subgroup part of the composition; with H trivial the induced
  // object is free over Sigma_r on X's points.
  Obj x = BaseObject::trivial_set(3, {1, 1});
  InduceBuild b = induce(x, {1, 1});
  QuotientBuild q = quotient_by_group(b.obj);
  CHECK(q.obj->size() == 3);
}

TEST_CASE("coequalizer basics") {
  Obj y = BaseObject::trivial_set(3);
  BaseMap f = BaseMap::identity(y);
  CoequalizerBuild b = coequalizer(f, f);
  CHECK(b.obj->size() == y->size());
  CHECK(iso_equal(b.obj, y));

  Obj x = BaseObject::trivial_set(1);
  Obj y2 = BaseObject::trivial_set(2);  // {*, a, b}
  BaseMap fa = BaseMap::constant(x, y2, 1);
  BaseMap fb = BaseMap::constant(x, y2, 2);
  CoequalizerBuild c = coequalizer(fa, fb);
  CHECK(c.obj->size() == 1);
}

TEST_CASE("coequalizer universal property by exhaustive cone enumeration") {
  // f, g : X -> Y over Sigma_2, instances with <= 4 non-basepoint elements
  Obj x = regular_s2();
  Obj y = wedge({regular_s2(), BaseObject::trivial_set(1, {2})}).obj;
  // f embeds the free orbit, g collapses it to the fixed point
  std::vector<int> ft = {0, 1, 2};
  std::vector<int> gt = {0, 3, 3};
  BaseMap f = BaseMap::make_set(x, y, ft);
  BaseMap g = BaseMap::make_set(x, y, gt);
  CoequalizerBuild c = coequalizer(f, g);
  CHECK(c.project.compose_after(f) == c.project.compose_after(g));
  for (const Obj& t : {BaseObject::trivial_set(2, {2}), regular_s2(), y}) {
    auto cones = enumerate_equivariant_maps(y, t, 100000);
    for (const auto& tbl : cones) {
      BaseMap h = BaseMap::make_set(y, t, tbl);
      if (!(h.compose_after(f) == h.compose_after(g))) continue;
      // mediating map exists and is unique
      std::vector<int> u(c.obj->size() + 1, 0);
      for (int cl = 1; cl <= c.obj->size(); ++cl) u[cl] = tbl[c.section[cl - 1]];
      BaseMap med = BaseMap::make_set(c.obj, t, u);
      CHECK(med.compose_after(c.project) == h);
      CHECK(c.project.is_surjective());
    }
  }
}

TEST_CASE("pushout basics") {
  Obj x = BaseObject::trivial_set(1);
  Obj a = BaseObject::trivial_set(2);
  BaseMap f = BaseMap::constant(x, a, 1);
  BaseMap idx = BaseMap::identity(x);
  PushoutBuild p = pushout(f, idx);
  CHECK(iso_equal(p.obj, a));

  // both legs null: wedge
  Obj zero = BaseObject::null(Kind::set);
  Obj b = BaseObject::trivial_set(3);
  PushoutBuild q = pushout(BaseMap::null_map(zero, a), BaseMap::null_map(zero, b));
  CHECK(q.obj->size() == a->size() + b->size());

  // gluing {*,x} into two copies of {*,x,y} along x
  Obj xx = BaseObject::trivial_set(1);
  Obj ay = BaseObject::trivial_set(2);
  BaseMap inc1 = BaseMap::make_set(xx, ay, {0, 1});
  PushoutBuild r = pushout(inc1, inc1);
  CHECK(r.obj->size() == 3);
}

TEST_CASE("marks tables") {
  Obj t = BaseObject::trivial_set(4, {2});
  std::vector<long> m = t->marks();
  for (long v : m) CHECK(v == 4);

  std::vector<long> free2 = regular_s2()->marks();
  CHECK(free2 == std::vector<long>{2, 0});

  std::vector<long> nat = natural_s3()->marks();
  // subgroup classes of Sigma_3 in canonical order: 1, C2, C3, Sigma_3
  CHECK(nat == std::vector<long>{3, 1, 0, 0});
}

TEST_CASE("characters") {
  Obj triv = BaseObject::point(Kind::rep, {3});
  std::vector<Rat> c = triv->character();
  CHECK(c == std::vector<Rat>{1, 1, 1});

  Obj reg = BaseObject::linearize(regular_s2());
  CHECK(reg->character() == std::vector<Rat>{2, 0});

  Obj nat = BaseObject::linearize(natural_s3());
  CHECK(nat->character() == std::vector<Rat>{3, 1, 0});
}

TEST_CASE("iso_equal") {
  Obj r = regular_s2();
  CHECK(iso_equal(r, r));
  Obj fixed2 = BaseObject::trivial_set(2, {2});
  CHECK_FALSE(iso_equal(r, fixed2));

  // regular Sigma_2 rep vs trivial + sign
  Obj reg = BaseObject::linearize(regular_s2());
  MatQ sign = MatQ::identity(2);
  sign.at(1, 1) = -1;
  Obj ts = BaseObject::make_rep({2}, 2, {sign});
  CHECK(iso_equal(reg, ts));
}

TEST_CASE("iso_equal is invariant under relabeling") {
  Obj r = wedge({regular_s2(), BaseObject::trivial_set(2, {2})}).obj;
  // relabel non-basepoint elements by a permutation: conjugate the actions
  Perm relabel = {0, 3, 1, 4, 2};  // fixes basepoint
  std::vector<Perm> acts;
  for (int g = 0; g < r->group().gen_count(); ++g) {
    acts.push_back(perm_compose(relabel, perm_compose(r->set_gen_action(g), perm_inverse(relabel))));
  }
  Obj relabeled = BaseObject::make_set(r->factors(), r->size(), acts);
  CHECK(iso_equal(r, relabeled));
}

TEST_CASE("rejects invalid actions eagerly") {
  // 3-cycle as the action of a Sigma_2 generator: violates s^2 = id
  Perm bad = {0, 2, 3, 1};
  CHECK_THROWS_AS(BaseObject::make_set({2}, 3, {bad}), InvariantError);
  // basepoint moved
  Perm moved = {1, 0};
  CHECK_THROWS_AS(BaseObject::make_set({2}, 1, {moved}), InvariantError);
  // mixed-kind smash
  CHECK_THROWS_AS(smash({BaseObject::point(Kind::set), BaseObject::point(Kind::rep)}), InvariantError);
}

TEST_CASE("equivariant map enumeration counts") {
  Obj r = regular_s2();
  // maps r -> r: image of one representative can be *, a, b: 3 maps
  auto maps = enumerate_equivariant_maps(r, r, 1000);
  CHECK(maps.size() == 3);
  // maps from 1 fixed point to r: image must be a fixed point of Sigma_2: only *
  Obj one = BaseObject::trivial_set(1, {2});
  CHECK(enumerate_equivariant_maps(one, r, 1000).size() == 1);
}

TEST_CASE("equivariant linear map space dimension") {
  Obj reg = BaseObject::linearize(regular_s2());
  // End of the regular rep of Sigma_2 has dimension 2
  CHECK(equivariant_linear_maps(reg, reg).size() == 2);
}
