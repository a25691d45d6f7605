#ifndef OPERADIX_SYMSEQ_HPP
#define OPERADIX_SYMSEQ_HPP

#include <map>
#include <optional>
#include <vector>

#include "operadix/base.hpp"

namespace operadix {

// Group factors of the arity-r symmetric group.
std::vector<int> sigma_factors(int r);

constexpr int kDefaultTruncation = 4;

// Arity-indexed family of base objects with Sigma_r-actions, truncated at N.
// `complete` records whether the represented object is genuinely null above
// the truncation (true) or an unknown tail was cut off (false); the
// distinction drives the circle-product finiteness rule.
class SymSeq {
 public:
  SymSeq() : SymSeq(Kind::set, 0) {}
  SymSeq(Kind k, int trunc, bool complete = true);

  Kind kind() const { return kind_; }
  int trunc() const { return trunc_; }
  bool complete() const { return complete_; }
  void mark_incomplete() { complete_ = false; }

  // Level accessor; arities above the truncation read as the null object.
  const Obj& level(int r) const;
  void set_level(int r, Obj o);

  bool is_reduced() const { return level(0)->is_null(); }
  bool is_null() const;
  // Arity of the single nonnull level, if concentrated.
  std::optional<int> concentrated_at() const;

  // The largest arity with a nonnull level (-1 when null).
  int top_nonnull() const;

 private:
  Kind kind_;
  int trunc_;
  bool complete_;
  std::vector<Obj> levels_;
  mutable std::map<int, Obj> null_cache_;
};

SymSeq unit_one(Kind k);   // "1": S^0 concentrated at arity 0
SymSeq unit_ident(Kind k); // "I": S^0 concentrated at arity 1
SymSeq null_seq(Kind k, int trunc = 0);
SymSeq hat(const Obj& z);  // embed a trivial-group object at arity 0

bool iso_equal_seq(const SymSeq& a, const SymSeq& b);

// Arity-wise equivariant map of symmetric sequences.
class SeqMorphism {
 public:
  SeqMorphism() = default;
  SeqMorphism(SymSeq src, SymSeq tgt, std::vector<BaseMap> components);
  static SeqMorphism identity(const SymSeq& a);
  static SeqMorphism null_map(const SymSeq& src, const SymSeq& tgt);

  const SymSeq& source() const { return src_; }
  const SymSeq& target() const { return tgt_; }
  const BaseMap& at(int r) const;
  int span() const { return static_cast<int>(comps_.size()) - 1; }

  SeqMorphism compose_after(const SeqMorphism& inner) const;
  bool equal(const SeqMorphism& o) const;  // arity-wise map equality
  bool is_injective() const;
  bool is_iso() const;

 private:
  SymSeq src_, tgt_;
  std::vector<BaseMap> comps_;  // arity 0..max(truncs)
};

// ---- mixed tensor powers ---------------------------------------------------
//
// F_0 tensor ... tensor F_{t-1} computed objectwise from the Kan-extension
// formula: level r is the coproduct over functions pi : {0..r-1} -> {0..t-1}
// of the smash of F_i evaluated on the fibers.  Factors inside a run of
// `aux_runs` must be the same sequence; the run-permuting action is recorded
// per level as an auxiliary Young-product action.

struct PowerElem {
  std::vector<int> block;  // pi, size r, values in 0..t-1
  std::vector<int> part;   // size t; part[i] is a point of F_i[|fiber(i)|]
  bool operator<(const PowerElem& o) const {
    if (block != o.block) return block < o.block;
    return part < o.part;
  }
  bool operator==(const PowerElem& o) const { return block == o.block && part == o.part; }
};

class MixedPowerBuild {
 public:
  MixedPowerBuild() = default;
  MixedPowerBuild(std::vector<SymSeq> factors, std::vector<int> aux_runs, int out_trunc);

  const SymSeq& seq() const { return seq_; }
  int exponent() const { return t_; }
  const std::vector<int>& aux_factors() const { return aux_runs_; }
  const std::vector<SymSeq>& factors() const { return factors_; }

  // auxiliary generator actions on level r (sets / reps)
  const std::vector<Perm>& aux_set_actions(int r) const { return aux_set_[r]; }
  const std::vector<MatQ>& aux_rep_actions(int r) const { return aux_rep_[r]; }

  int count(int r) const { return seq_.level(r)->size(); }
  const PowerElem& elem(int r, int point) const;
  // encode a power element at level r (sets: 0 if any part is basepoint)
  int encode(int r, const PowerElem& e) const;

  // action of an arbitrary arity permutation on an element (sets)
  int act_arity(int r, const Perm& sigma, int point) const;
  // action of an arbitrary aux permutation (must preserve runs) (sets)
  int act_aux(int r, const Perm& rho, int point) const;

  // Level object with the auxiliary action combined into a single Young
  // product (aux factors first); degree caps apply.
  Obj combined_level(int r) const;

 private:
  std::vector<SymSeq> factors_;
  std::vector<int> aux_runs_;
  int t_ = 0;
  SymSeq seq_;
  std::vector<std::vector<PowerElem>> elems_;
  std::vector<std::map<PowerElem, int>> index_;
  std::vector<std::vector<Perm>> aux_set_;
  std::vector<std::vector<MatQ>> aux_rep_;
};

// Plain tensor product: mixed power with two distinct factors.
MixedPowerBuild tensor(const SymSeq& a, const SymSeq& b, int out_trunc);
// Tensor power with its factor-permuting auxiliary action.
MixedPowerBuild tensor_power(const SymSeq& a, int t, int out_trunc);

// Functorial action on morphisms: per-factor maps applied partwise.
SeqMorphism power_map(const MixedPowerBuild& src, const MixedPowerBuild& tgt,
                      const std::vector<SeqMorphism>& factor_maps);

// ---- circle product ----------------------------------------------------------

class CircleBuild {
 public:
  CircleBuild() = default;
  // (A o B)[r] = coproduct over t of A[t] smash_{Sigma_t} (B tensor-power t)[r]
  CircleBuild(const SymSeq& a, const SymSeq& b, int out_trunc);

  const SymSeq& seq() const { return seq_; }
  const SymSeq& left() const { return a_; }
  const SymSeq& right() const { return b_; }
  const MixedPowerBuild& power(int t) const { return powers_[t]; }
  int max_t() const { return static_cast<int>(powers_.size()) - 1; }

  // sets: encode the pair (t, a-point, power-point) as a class of level r
  int encode(int r, int t, int a_point, int power_point) const;
  struct Rep {
    int t;
    int a_point;
    int power_point;
  };
  Rep decode(int r, int point) const;
  // all pairs in the class of a point (sets)
  std::vector<Rep> class_members(int r, int point) const;

 private:
  SymSeq a_, b_;
  SymSeq seq_;
  std::vector<MixedPowerBuild> powers_;
  struct LevelData {
    std::vector<int> ts;          // thickness values contributing terms
    std::vector<int> offsets;     // class-index offset per term (sets)
    std::vector<QuotientBuild> quos;
    std::vector<int> a_sizes, w_sizes;
  };
  std::vector<LevelData> levels_;
};

SymSeq circle(const SymSeq& a, const SymSeq& b, int out_trunc);

// Functorial action of circle on morphisms (pointed sets).
SeqMorphism circle_map(const CircleBuild& src, const CircleBuild& tgt, const SeqMorphism& f,
                       const SeqMorphism& g);

// ---- mapping sequences --------------------------------------------------------

struct HomCaps {
  int max_level_size = 3;   // points per level of the enumeration source
  int max_trunc = 2;        // truncation of the enumeration source
  long max_count = 200000;  // total maps enumerated
};

// Map^o(B, C): level t is the object of SymSeq maps B^{tensor t} -> C with
// the residual Sigma_t-action.  Pointed sets enumerate maps; representations
// build the equivariant-map space.
class MapCircleBuild {
 public:
  MapCircleBuild(const SymSeq& b, const SymSeq& c, int out_trunc, const HomCaps& caps);
  const SymSeq& seq() const { return seq_; }
  // sets: the SeqMorphism encoded by a point of level t
  SeqMorphism morphism(int t, int point) const;
  int encode(int t, const SeqMorphism& m) const;
  const MixedPowerBuild& power(int t) const { return powers_[t]; }

 private:
  SymSeq b_, c_;
  SymSeq seq_;
  std::vector<MixedPowerBuild> powers_;
  std::vector<std::vector<std::vector<std::vector<int>>>> tables_;  // [t][point][arity] -> table
};

// Map^{tensor}(B, C): level t is prod_r Map(B[r], C[t+r])^{Sigma_r}.
class MapTensorBuild {
 public:
  MapTensorBuild(const SymSeq& b, const SymSeq& c, int out_trunc, const HomCaps& caps);
  const SymSeq& seq() const { return seq_; }
  // sets: the per-arity component maps B[r] -> C[t+r] of a point of level t
  const std::vector<std::vector<int>>& tables(int t, int point) const;
  int encode(int t, const std::vector<std::vector<int>>& tabs) const;

 private:
  SymSeq b_, c_;
  SymSeq seq_;
  std::vector<std::vector<std::vector<std::vector<int>>>> tables_;
};

// ---- evaluation ---------------------------------------------------------------

// O(Z) = coproduct over t of O[t] smash_{Sigma_t} Z^{smash t}, computed by the
// direct coinvariant formula (the circle-product route is cross-checked in
// the test suite).
struct EvaluateBuild {
  Obj obj;  // over the trivial group
  struct Term {
    int t;
    QuotientBuild quo;
    int z_power;  // |Z|^t
  };
  std::vector<Term> terms;
  std::vector<int> offsets;
  int encode(int t, int o_point, const std::vector<int>& z_tuple) const;
};
EvaluateBuild evaluate(const SymSeq& o, const Obj& z);

// ---- hom enumeration ------------------------------------------------------------

// All SymSeq morphisms a -> b (pointed sets).  Caps guard the enumeration.
std::vector<SeqMorphism> hom_seq(const SymSeq& a, const SymSeq& b, const HomCaps& caps);
long hom_seq_count(const SymSeq& a, const SymSeq& b, const HomCaps& caps);

// Levelwise wedge, coequalizer and pushout of symmetric sequences.
struct SeqWedge {
  SymSeq seq;
  std::vector<WedgeBuild> levels;
  SeqMorphism injection(int part, const std::vector<SymSeq>& parts) const;
};
SeqWedge seq_wedge(const std::vector<SymSeq>& parts);

struct SeqCoequalizer {
  SymSeq seq;
  SeqMorphism project;
  std::vector<CoequalizerBuild> levels;
};
SeqCoequalizer seq_coequalizer(const SeqMorphism& f, const SeqMorphism& g);

struct SeqPushout {
  SymSeq seq;
  SeqMorphism from_a;
  SeqMorphism from_b;
  std::vector<PushoutBuild> levels;
};
SeqPushout seq_pushout(const SeqMorphism& f, const SeqMorphism& g);

}  // namespace operadix

#endif
