#ifndef OPERADIX_GROUP_HPP
#define OPERADIX_GROUP_HPP

#include <map>
#include <memory>
#include <vector>

#include "operadix/common.hpp"

namespace operadix {

// Permutation of {0..n-1} as an image vector.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& f, const Perm& g);  // (f*g)(x) = f(g(x))
Perm perm_inverse(const Perm& f);
bool perm_is_identity(const Perm& f);

// Young product of symmetric groups, Sigma_{n_1} x ... x Sigma_{n_k}, acting
// on {0..n-1} with n = sum n_i, factor i on the block [off_i, off_i + n_i).
// Coxeter generators are the adjacent transpositions of each factor, listed
// factor by factor.  Elements are represented as permutations of degree n
// preserving the blocks.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int degree() const { return degree_; }
  int gen_count() const { return static_cast<int>(gens_.size()); }
  const Perm& gen(int i) const { return gens_[i]; }
  const std::vector<Perm>& gens() const { return gens_; }
  bool is_trivial() const { return gens_.empty(); }

  bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

  long order() const;

  // All elements in lexicographic order of their image vectors.
  const std::vector<Perm>& elements() const;
  int element_index(const Perm& p) const;

  // Decompose an element of the group into Coxeter generator indices so that
  // composing gen(w[0]) * gen(w[1]) * ... yields the element.
  std::vector<int> word(const Perm& p) const;

  // Conjugacy classes of elements: representative indices, canonical order.
  struct ElementClass {
    int rep;                  // element index of the representative
    std::vector<int> members; // sorted element indices
  };
  const std::vector<ElementClass>& element_classes() const;

  // Conjugacy classes of subgroups, canonical order (by order, then by the
  // lexicographically least sorted element-index vector over the class).
  struct SubgroupClass {
    std::vector<int> rep_elements;  // sorted element indices of the canonical representative
    long subgroup_order;
  };
  const std::vector<SubgroupClass>& subgroup_classes() const;

  static const GroupSpec& get(const std::vector<int>& factors);  // interned, cached

 private:
  std::vector<int> factors_;
  std::vector<int> offsets_;
  int degree_;
  std::vector<Perm> gens_;

  struct Tables;
  mutable std::shared_ptr<Tables> tables_;
  Tables& tables() const;
};

// Verify that an action table (one permutation or matrix per generator of g)
// satisfies the Coxeter relations and cross-factor commutation.  `apply`
// composes two stored actions, `equal` compares, `act(i)` returns generator
// i's action.  Used by BaseObject validation.
struct CoxeterCheck {
  // pairs (word_a, word_b) over generator indices that must act equally
  static std::vector<std::pair<std::vector<int>, std::vector<int>>> relations(const GroupSpec& g);
};

// Composition (r_1,...,r_k), all parts >= 0, of r = sum r_i; describes a
// Young subgroup of Sigma_r.  Cosets of Sigma_r / (Sigma_{r_1} x ...)
// correspond to ordered set partitions of {0..r-1} with block sizes r_i;
// the canonical representative of a coset is increasing on each block.
class YoungCosets {
 public:
  YoungCosets(std::vector<int> composition);

  int ambient_degree() const { return degree_; }
  const std::vector<int>& composition() const { return comp_; }
  long count() const { return static_cast<long>(reps_.size()); }
  const Perm& rep(int i) const { return reps_[i]; }

  // Decompose g = rep(c) * h with h block-preserving; returns (c, h).
  std::pair<int, Perm> decompose(const Perm& g) const;

  // Index of the coset whose blocks are the given position sets (each sorted).
  int coset_of_blocks(const std::vector<std::vector<int>>& blocks) const;

 private:
  std::vector<int> comp_;
  int degree_;
  std::vector<Perm> reps_;
  std::map<std::vector<int>, int> index_;  // block-assignment word -> coset
};

// Standardization permutation: positions `fiber` (sorted) inside {0..r-1},
// sigma a permutation of {0..r-1}; returns the permutation of {0..|fiber|-1}
// sending the rank of p in fiber to the rank of sigma(p) in sigma(fiber).
Perm standardize(const Perm& sigma, const std::vector<int>& fiber);

// Block sum: embeds (p1,...,pk) with pi a permutation of {0..n_i-1} as a
// permutation of the concatenation.
Perm block_perm(const std::vector<Perm>& parts);

// The permutation of {0..(a+b)-1} moving the first block past the second,
// i.e. positions 0..a-1 -> b..b+a-1 and a..a+b-1 -> 0..b-1.
Perm block_swap(int a, int b);

}  // namespace operadix

#endif
