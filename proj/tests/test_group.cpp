#include <doctest.h>

#include <algorithm>
#include <set>

#include "operadix/group.hpp"

using namespace operadix;

TEST_CASE("permutation basics") {
  Perm a = {1, 2, 0};  // 0->1,1->2,2->0
  Perm b = {0, 2, 1};
  CHECK(perm_compose(a, b) == Perm{1, 0, 2});
  CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(3));
}

TEST_CASE("Young product enumeration") {
  const GroupSpec& g = GroupSpec::get({2, 2});
  CHECK(g.order() == 4);
  CHECK(g.degree() == 4);
  CHECK(g.gen_count() == 2);
  CHECK(g.elements().size() == 4);

  const GroupSpec& s3 = GroupSpec::get({3});
  CHECK(s3.order() == 6);
  CHECK(s3.elements().size() == 6);
  CHECK(s3.element_classes().size() == 3);  // id, transpositions, 3-cycles

  const GroupSpec& triv = GroupSpec::get({});
  CHECK(triv.order() == 1);
  CHECK(triv.elements().size() == 1);
}

TEST_CASE("word decomposition reconstructs elements") {
  for (auto factors : {std::vector<int>{3}, std::vector<int>{2, 2}, std::vector<int>{4}}) {
    const GroupSpec& g = GroupSpec::get(factors);
    for (const Perm& e : g.elements()) {
      std::vector<int> w = g.word(e);
      Perm acc = perm_identity(g.degree());
      for (int i : w) acc = perm_compose(acc, g.gen(i));
      CHECK(acc == e);
    }
  }
}

TEST_CASE("subgroup conjugacy classes of small symmetric groups") {
  // Oracle: the subgroup-class counts of Sigma_2, Sigma_3, Sigma_4 are 2, 4, 11.
  CHECK(GroupSpec::get({2}).subgroup_classes().size() == 2);
  CHECK(GroupSpec::get({3}).subgroup_classes().size() == 4);
  CHECK(GroupSpec::get({4}).subgroup_classes().size() == 11);
  // Sigma_2 x Sigma_2 (Klein four inside Sigma_4 as a Young product): all
  // subgroups are normal, 5 subgroups, 5 classes.
  CHECK(GroupSpec::get({2, 2}).subgroup_classes().size() == 5);
}

TEST_CASE("subgroup classes are canonically ordered") {
  const GroupSpec& g = GroupSpec::get({3});
  const auto& classes = g.subgroup_classes();
  for (size_t i = 0; i + 1 < classes.size(); ++i) {
    CHECK(classes[i].subgroup_order <= classes[i + 1].subgroup_order);
  }
  CHECK(classes.front().subgroup_order == 1);
  CHECK(classes.back().subgroup_order == 6);
}

TEST_CASE("Young cosets") {
  YoungCosets yc({1, 2});
  CHECK(yc.count() == 3);
  const GroupSpec& s3 = GroupSpec::get({3});
  std::set<int> seen;
  for (const Perm& e : s3.elements()) {
    auto [c, h] = yc.decompose(e);
    seen.insert(c);
    CHECK(perm_compose(yc.rep(c), h) == e);
    // h preserves the blocks {0} and {1,2}
    CHECK(h[0] == 0);
  }
  CHECK(seen.size() == 3);

  YoungCosets z({0, 3});
  CHECK(z.count() == 1);
  YoungCosets e({});
  CHECK(e.count() == 1);
}

TEST_CASE("standardize") {
  // sigma = transposition (1 2) in Sigma_3; fiber {0,2}
  Perm sigma = {0, 2, 1};
  Perm tw = standardize(sigma, {0, 2});
  // 0 -> 0 (rank 0 -> rank 0), 2 -> 1 (rank 1 -> rank 1)? sigma(0)=0, sigma(2)=1:
  // sorted images {0,1}: rank(0)=0, rank(1)=1 -> identity
  CHECK(tw == perm_identity(2));
  // fiber {1,2}: sigma(1)=2, sigma(2)=1: ranks swap
  CHECK(standardize(sigma, {1, 2}) == Perm{1, 0});
}
