#pragma once

// The slice-product structure an admissible class puts on the classifier:
// M(c) carries a commutative pomonoid (product in the slice over c, unit the
// identity), Omega carries the right action S·m = {h | m×h ∈ S}, and the two
// interact with the lattice operations, with the class topologies, and with
// double negation and the ideal topologies in ways that are checked here
// exhaustively.  Translation families generalize the action to a designated
// arrow per object and produce the weak topologies α.
//
// Every product is taken through the chosen pullbacks of the category, so any
// operation may throw InputError naming the cospan whose pullback is absent;
// constructing an OmegaAction requires the class to have all member
// pullbacks, which makes everything downstream total.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fintopos/admissible.hpp"
#include "fintopos/fincat.hpp"
#include "fintopos/ideal.hpp"
#include "fintopos/omega.hpp"
#include "fintopos/presheaf.hpp"

namespace fintopos {

// m×h = m∘m^{-1}(h), the slice product over the common codomain; throws
// InputError naming the cospan when the chosen pullback is missing.
Mor slice_product_of(const FinCat& cat, Mor m, Mor h);

// S·m = {h into c | m×h ∈ S}.  Defined for an arbitrary arrow m into c (the
// translation families act through arrows that need not be monic).
MorMask act_mask(const FinCat& cat, Obj c, MorMask s, Mor m);

// ---------------------------------------------------------------------------
// The commutative pomonoid on M

struct MonoidOnM {
  ClassPresheaf m;                             // canonical members per object
  std::vector<std::vector<std::uint32_t>> op;  // op[c][a*n+b]: rep index of reps[a]×reps[b]
  std::vector<std::uint32_t> unit;             // rep index of id_c

  const FinCat& cat() const { return *m.cls.cat; }
  std::uint32_t size_at(Obj c) const { return static_cast<std::uint32_t>(m.reps[c].size()); }
  std::uint32_t apply(Obj c, std::uint32_t a, std::uint32_t b) const {
    return op[c][a * size_at(c) + b];
  }
  // Canonical representative of x×y for members x, y into c.
  Mor product(Obj c, Mor x, Mor y) const;
};

// Builds the product table; InputError naming the cospan when a member
// pullback is missing.
MonoidOnM monoid_on_m(const AdmissibleClass& cls);

struct MonoidLaws {
  bool unit_laws = false;        // e·a = a = a·e on representatives
  bool associative = false;      // strict on representatives
  bool commutative = false;      // strict on representatives
  bool order_compatible = false; // a ≤ a', b ≤ b' ⇒ a·b ≤ a'·b' in the slice order
  std::vector<std::string> issues;
  bool valid() const { return unit_laws && associative && commutative && order_compatible; }
};

MonoidLaws monoid_laws_check(const MonoidOnM& mon);

// ---------------------------------------------------------------------------
// The action of M on Omega

class OmegaAction {
 public:
  // Requires every member pullback of the class; throws InputError naming the
  // first missing cospan otherwise.
  OmegaAction(const OmegaPresheaf& om, const AdmissibleClass& cls);

  const FinCat& cat() const { return *om_->cat; }
  const OmegaPresheaf& omega() const { return *om_; }
  const AdmissibleClass& cls() const { return mon_.m.cls; }
  const MonoidOnM& monoid() const { return mon_; }
  const std::vector<Mor>& reps(Obj c) const { return mon_.m.reps[c]; }

  MorMask act_on_mask(Obj c, MorMask s, Mor m) const;
  // Index-level action; the result of acting on a sieve is again a sieve.
  std::uint32_t act(Obj c, std::uint32_t s, Mor m) const;

 private:
  const OmegaPresheaf* om_ = nullptr;
  MonoidOnM mon_;
};

struct ActionLaws {
  bool sieve_valued = false;     // S·m is a sieve
  bool unit = false;             // S·id = S
  bool mixed_associative = false;// S·(m·n) = (S·m)·n
  bool rep_independent = false;  // slice-isomorphic members act identically
  bool natural = false;          // k*(S·m) = k*(S)·k^{-1}(m)
  bool commutes = false;         // S·(m·n) = S·(n·m)
  std::vector<std::string> issues;
  bool valid() const {
    return sieve_valued && unit && mixed_associative && rep_independent && natural && commutes;
  }
};

ActionLaws action_laws_check(const OmegaAction& a);

// W(c): the (sieve index, member rep index) pairs with m×h ∈ S for every h
// into c — the subobject of Omega×M classified by the action.
std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> w_mu(const OmegaAction& a);

struct FrameSubactReport {
  bool meet_equivariant = false;   // (S∧T)·m = S·m ∧ T·m
  bool join_equivariant = false;   // (S∨T)·m = S·m ∨ T·m
  bool top_fixed = false;          // t(c)·m = t(c)
  bool bottom_fixed = false;       // ∅·m = ∅
  bool omega_jm_subact = false;    // sieves fixed by the class topology stay fixed under ·m
  bool jsub_available = false;     // the all-monos machinery is defined on this category
  bool omega_jsub_subact = false;  // likewise for the all-monos topology (when available)
  bool sub_poset_monotone = false; // S ⊆ T fixed by jSub, m ≤ n monos ⇒ S·m ⊆ T·n
  bool w_by_both_routes = false;   // W per its condition = {(S, m) | S·m = t(c)}
  std::vector<std::string> issues;
  bool valid() const {
    return meet_equivariant && join_equivariant && top_fixed && bottom_fixed &&
           omega_jm_subact && w_by_both_routes &&
           (!jsub_available || (omega_jsub_subact && sub_poset_monotone));
  }
};

FrameSubactReport frame_and_subact_checks(const OmegaAction& a);

// Whether {S | φ(S) = t(c)} is closed under the action; combined with an
// equivariance check on φ this is the subact property of the associated
// Grothendieck topology.
bool true_pullback_action_closed(const OmegaAction& a, const OmegaEndo& phi);

// ---------------------------------------------------------------------------
// Equivariance of classifier endomorphisms

struct EquivarianceReport {
  // forward: j(S·m) ⊆ j(S)·m — the inclusion double negation satisfies
  // unconditionally; backward: j(S)·m ⊆ j(S·m).
  bool forward = false;
  bool backward = false;
  bool equivariant = false;
  std::string witness;  // first failing (object, sieve, member) triple
};

EquivarianceReport equivariance_check(const OmegaAction& a, const OmegaEndo& j);

struct TheoremAudit {
  std::string id;          // stable row identifier
  std::string hypothesis;  // what was evaluated
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  // hypothesis ⇒ conclusion not violated; rows with a false hypothesis are
  // consistent regardless of the conclusion.
  bool consistent() const { return !hypothesis_holds || conclusion_holds; }
};

// The equivariance audit table for this action: double negation (forward
// unconditional, backward under pullback completion), the class topology
// (forward unconditional, backward under class-restricted pullback
// completion), and for every enumerated ideal the stability/converse
// hypotheses against both inclusions of the ideal topology.
std::vector<TheoremAudit> equivariance_audits(const OmegaAction& a);

// ---------------------------------------------------------------------------
// Translation families and the weak topologies α

struct TranslationFamily {
  const FinCat* cat = nullptr;
  std::string name;
  std::vector<Mor> f;  // f[c] is the designated arrow into c
};

struct FamilyReport {
  bool shape = false;                // cod f[c] = c for every object
  bool law = false;                  // {h | f_C×h ∈ g*(S)} = {h | f_D×(gh) ∈ S} for all g: C→D, S
  bool sufficient_condition = false; // g^{-1}(f_D) lands in the slice class of f_C for every g
  std::vector<std::string> issues;   // violating (g, S) pairs
  bool valid() const { return shape && law; }
};

FamilyReport validate_family(const OmegaPresheaf& om, const std::vector<Mor>& f);

// Validating constructor; throws InputError quoting a violating (g, S).
TranslationFamily make_family(const OmegaPresheaf& om, std::vector<Mor> f, std::string name = "");

TranslationFamily identity_family(const FinCat& cat);  // named "ids"

// α(S) = {h | f_c×h ∈ S}, named "alpha:" + family name.
OmegaEndo translations_alpha(const OmegaPresheaf& om, const TranslationFamily& F);

// Every f_c idempotent in its slice: f_c×f_c lands in the slice class of f_c.
bool family_idempotent(const TranslationFamily& F);

// The biconditional f_c×h ∈ S ⟺ (f_c×f_c)×h ∈ S over every c, S and
// h ∈ α(S) — what idempotency of α yields on witnesses.
bool alpha_idempotency_witnesses(const OmegaPresheaf& om, const TranslationFamily& F);

// Covers of α by the direct formula: every (f_c×h)∘k lands in S.
WeakGrothendieck alpha_grothendieck(const OmegaPresheaf& om, const TranslationFamily& F);

// Closure of G ≤ host under α by the elementwise formula: keep x at c when
// host(f_c×h)(x) lies in G at dom(f_c×h) for every h into c.
Subpresheaf alpha_closure(const TranslationFamily& F, const Presheaf& host, const Subpresheaf& G);

// One translation evaluated at one stage: {h | g^{-1}(m)×h ∈ s} for m into c
// and g: d → c, a sieve on d.  InputError when cod g ≠ cod m or a pullback is
// missing.
MorMask lambda_eval(const FinCat& cat, Mor m, Mor g, MorMask s);

}  // namespace fintopos
