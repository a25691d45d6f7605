#ifndef OPERADIX_BASE_HPP
#define OPERADIX_BASE_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "operadix/group.hpp"
#include "operadix/rational.hpp"

namespace operadix {

enum class Kind { set, rep };

class BaseObject;
using Obj = std::shared_ptr<const BaseObject>;

// A finite pointed set or a finite-dimensional exact-rational vector space,
// carrying an action of a Young product of symmetric groups specified on
// Coxeter generators.  For pointed sets, elements are 0..size with 0 the
// basepoint; for representations the basis is indexed 0..dim-1.
class BaseObject : public std::enable_shared_from_this<BaseObject> {
 public:
  static Obj make_set(std::vector<int> group_factors, int nonbase_count, std::vector<Perm> gen_actions);
  static Obj make_rep(std::vector<int> group_factors, int dim, std::vector<MatQ> gen_actions);

  // One non-basepoint fixed point / 1-dimensional trivial representation.
  static Obj point(Kind k, std::vector<int> group_factors = {});
  // The null object * (empty pointed set / zero space).
  static Obj null(Kind k, std::vector<int> group_factors = {});
  // k non-basepoint points with trivial action.
  static Obj trivial_set(int k, std::vector<int> group_factors = {});
  // The pointed left-coset set G/H (plus basepoint), H given by a sorted list
  // of group-element indices.
  static Obj coset_set(std::vector<int> group_factors, const std::vector<int>& subgroup_elems);
  // Linearization of a pointed set: basis = non-basepoint elements.
  static Obj linearize(const Obj& x);

  Kind kind() const { return kind_; }
  const GroupSpec& group() const { return *group_; }
  const std::vector<int>& factors() const { return group_->factors(); }
  // Non-basepoint count (sets) or dimension (reps).
  int size() const { return size_; }
  bool is_null() const { return size_ == 0; }

  // Enumerable points: non-basepoint element indices (sets, 1-based) or basis
  // indices (reps, 0-based).
  std::vector<int> points() const;
  int point_count() const { return size_; }

  const Perm& set_gen_action(int g) const { return set_acts_[g]; }
  const MatQ& rep_gen_action(int g) const { return rep_acts_[g]; }

  // Action of an arbitrary group element (by its permutation) on an element
  // index (sets) — composes generator actions along a word.
  int act_set(const Perm& group_elem, int elem) const;
  // Matrix of an arbitrary group element.
  MatQ act_rep(const Perm& group_elem) const;
  // Action table of every group element (sets; cached).
  const std::vector<Perm>& element_actions() const;

  // Burnside marks: per subgroup conjugacy class (canonical order), the
  // number of non-basepoint fixed elements.  Pointed sets only.
  std::vector<long> marks() const;
  // Character: per element conjugacy class (canonical order), the trace.
  std::vector<Rat> character() const;

  // Stabilizer of an element as sorted group-element indices (sets).
  std::vector<int> stabilizer(int elem) const;
  // Orbits of the non-basepoint elements (sets), each sorted, ordered by
  // least member.
  std::vector<std::vector<int>> orbits() const;

 private:
  BaseObject() = default;
  void validate() const;

  Kind kind_ = Kind::set;
  const GroupSpec* group_ = nullptr;
  int size_ = 0;
  std::vector<Perm> set_acts_;
  std::vector<MatQ> rep_acts_;
  mutable std::shared_ptr<std::vector<Perm>> elem_acts_;  // lazy (sets)
};

// Engine-wide instance notion of "naturally isomorphic": marks tables (sets)
// or characters (reps) agree.  Requires same kind and group.
bool iso_equal(const Obj& x, const Obj& y);

// Arity-wise equivariant basepointed map / linear map.
class BaseMap {
 public:
  BaseMap() = default;
  static BaseMap make_set(Obj src, Obj tgt, std::vector<int> table);  // table[0..m], table[0]=0
  static BaseMap make_rep(Obj src, Obj tgt, MatQ mat);
  static BaseMap identity(const Obj& x);
  static BaseMap null_map(const Obj& src, const Obj& tgt);
  // f(x) = y for every non-basepoint x (sets: constant map).
  static BaseMap constant(const Obj& src, const Obj& tgt, int y);

  const Obj& source() const { return src_; }
  const Obj& target() const { return tgt_; }
  Kind kind() const { return src_->kind(); }

  int apply(int elem) const;             // sets
  const std::vector<int>& table() const { return table_; }
  const MatQ& matrix() const { return mat_; }

  BaseMap compose_after(const BaseMap& inner) const;  // this ∘ inner
  bool operator==(const BaseMap& o) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const;
  BaseMap inverse() const;

 private:
  void validate() const;
  Obj src_, tgt_;
  std::vector<int> table_;
  MatQ mat_;
};

// ---- constructions -------------------------------------------------------

// Smash product over the product group (factors concatenated).  Non-basepoint
// elements are tuples of non-basepoint elements; representation kind takes
// Kronecker products.  Mixed kinds are rejected.
struct SmashBuild {
  Obj obj;
  std::vector<Obj> parts;
  int encode(const std::vector<int>& tuple) const;  // tuple of point indices
  std::vector<int> decode(int point) const;
};
SmashBuild smash(const std::vector<Obj>& factors);
Obj smash2(const Obj& x, const Obj& y);
// Map between smash products from maps between the factors.
BaseMap smash_map(const SmashBuild& src, const SmashBuild& tgt, const std::vector<BaseMap>& maps);

// Restriction along a group homomorphism given by generator images.
Obj restrict_along(const Obj& x, const std::vector<int>& subgroup_factors,
                   const std::vector<Perm>& gen_images);
// Diagonal restriction for smash2(x, y) with equal factor groups.
Obj smash_diagonal(const Obj& x, const Obj& y);

// Induction along a Young subgroup given by a composition of the ambient
// degree.  The inner object must live over the Young product of the nonzero
// parts.  Result is over the full symmetric group of the ambient degree.
struct InduceBuild {
  Obj obj;
  Obj inner;
  std::shared_ptr<YoungCosets> cosets;
  int encode(int coset, int inner_point) const;
  std::pair<int, int> decode(int point) const;
};
InduceBuild induce(const Obj& x, const std::vector<int>& composition);
BaseMap induce_map(const InduceBuild& src, const InduceBuild& tgt, const BaseMap& inner);

// Quotient by a list of auxiliary symmetries (permutations fixing 0 / square
// matrices) that commute with the retained group action; computes orbits or
// coinvariants and the induced retained action.
struct QuotientBuild {
  Obj obj;          // quotient object, over the retained group
  Obj source;       // the object that was quotiented
  BaseMap project;  // source -> obj
  std::vector<int> section;                // class -> representative point of source
  std::vector<std::vector<int>> members;   // sets only: class -> member points
  int class_of(int point) const;           // sets only
};
QuotientBuild quotient_by_perms(const Obj& x, const std::vector<Perm>& sym_perms,
                                const std::vector<MatQ>& sym_mats);
// Quotient by the whole (retained) group action; result over trivial group.
QuotientBuild quotient_by_group(const Obj& x);

// Coequalizer of a parallel pair in the base category.  Classes touching the
// basepoint collapse to it.
struct CoequalizerBuild {
  Obj obj;
  BaseMap project;  // target of the pair -> obj
  std::vector<int> section;
  std::vector<std::vector<int>> members;  // sets only
};
CoequalizerBuild coequalizer(const BaseMap& f, const BaseMap& g);

// Wedge / direct sum.
struct WedgeBuild {
  Obj obj;
  std::vector<Obj> parts;
  std::vector<int> offsets;
  int encode(int part, int point) const;
  std::pair<int, int> decode(int point) const;
  BaseMap injection(int part) const;
};
WedgeBuild wedge(const std::vector<Obj>& parts);

// Pushout of f : X -> A, g : X -> B, computed as the coequalizer of the two
// composites into A v B.
struct PushoutBuild {
  Obj obj;
  BaseMap from_a;
  BaseMap from_b;
  WedgeBuild wb;
  CoequalizerBuild cb;
};
PushoutBuild pushout(const BaseMap& f, const BaseMap& g);

// Combine an auxiliary action (factors + generator actions on x's points,
// commuting with x's own action) with x's group: result lives over the Young
// product aux_factors ++ x.factors().
Obj combine_aux(const Obj& x, const std::vector<int>& aux_factors, const std::vector<Perm>& aux_perms,
                const std::vector<MatQ>& aux_mats);

// All equivariant basepointed maps x -> y (sets).  Throws CapError when the
// count would exceed the cap.
std::vector<std::vector<int>> enumerate_equivariant_maps(const Obj& x, const Obj& y, long cap);
// Dimension basis of the space of equivariant linear maps (reps): each
// element is a flattened target_dim x source_dim matrix.
std::vector<MatQ> equivariant_linear_maps(const Obj& x, const Obj& y);

}  // namespace operadix

#endif
