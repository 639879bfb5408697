#pragma once

// Ideals of the presheaf topos: a sieve per object, stable under
// post-composition.  They induce a closure operator on subobjects, a weak
// topology on Omega, and an ideal-relative double negation; this header also
// carries the pullback-stability predicates other modules use as hypotheses.

#include <cstdint>
#include <string>
#include <vector>

#include "fintopos/fincat.hpp"
#include "fintopos/omega.hpp"
#include "fintopos/presheaf.hpp"

namespace fintopos {

struct Ideal {
  const FinCat* cat = nullptr;
  std::string name;
  std::vector<MorMask> at;  // at[c]: arrows into c
};

struct IdealIssue {
  std::string kind;  // shape | not-a-sieve | not-stable
  std::string detail;
};

struct IdealReport {
  std::vector<IdealIssue> issues;
  bool valid() const { return issues.empty(); }
};

IdealReport validate_ideal(const FinCat& cat, const std::vector<MorMask>& at);
// Validating constructor; throws InputError when the family is not an ideal.
Ideal make_ideal(const FinCat& cat, std::vector<MorMask> at, std::string name = "");

Ideal yoneda_ideal(const FinCat& cat);  // every arrow, everywhere
Ideal zero_ideal(const FinCat& cat);    // nothing, anywhere

// All ideals, in lexicographic order of per-object sieve indexes.
std::vector<Ideal> enumerate_ideals(const FinCat& cat, const OmegaPresheaf& om,
                                    const Caps& caps = {});

// I²(C) = {f∘g | f ∈ I_C, g ∈ I_{dom f}}; always an ideal again.
Ideal ideal_square(const Ideal& ideal);
bool ideal_is_idempotent(const Ideal& ideal);
bool ideal_all_nonempty(const Ideal& ideal);

// Keep x at C when every arrow of I_C restricts x into G.
Subpresheaf ideal_closure(const Ideal& ideal, const Presheaf& F, const Subpresheaf& G);

// j^I: an arrow enters j^I(S) when all its I-extensions land in S.
OmegaEndo weak_ideal_topology(const Ideal& ideal, const OmegaPresheaf& om);
// Covers by the direct rule: sieves containing I_C.
WeakGrothendieck ideal_grothendieck(const Ideal& ideal, const OmegaPresheaf& om);

// Ideal-relative double negation; agrees with plain double negation whenever
// every I_C is nonempty (checked, InputError on violation).
OmegaEndo ideal_double_negation(const Ideal& ideal, const OmegaPresheaf& om);

// For f ∈ I_C and composable g, h: does h ∈ I_{dom g}  ⟺  g∘h ∈ I_{dom f}?
// The forward direction always holds for a valid ideal.
bool matching_family_check(const Ideal& ideal, Obj c);

// Fixed sieves of j^I by the literal biconditional rule (per arrow h into C:
// all I-extensions of h land in T iff h ∈ T), for cross-checking omega_j.
Subpresheaf omega_jI_literal(const Ideal& ideal, const OmegaPresheaf& om);

// Chosen-pullback stability: for every g and every f ∈ I_{cod g}, the
// pullback of f along g exists and its leg over dom g lies in I_{dom g}.
bool is_ideal_pullback_stable(const Ideal& ideal);
// Converse direction: a leg in I_{dom g} forces the pulled-back arrow into
// I_{cod g} (pairs without a pullback are vacuous).
bool is_ideal_pullback_stable_converse(const Ideal& ideal);

}  // namespace fintopos
