#pragma once

// The subobject classifier of the presheaf topos over a FinCat, realized
// concretely: every sieve on every object is enumerated and indexed, so
// endomorphisms of Omega are finite tables and every law about them
// (naturality, the weak-topology axioms, closure/Grothendieck
// correspondences, sheaf conditions) is decided by exhaustive scan.

#include <cstdint>
#include <string>
#include <vector>

#include "fintopos/fincat.hpp"
#include "fintopos/presheaf.hpp"

namespace fintopos {

// "{f,g}" with names in morphism-index order; "{}" for the empty sieve.
std::string sieve_label(const FinCat& cat, MorMask arrows);

struct OmegaPresheaf {
  const FinCat* cat = nullptr;
  // sieves[c] holds every sieve on c as a mask over arrows-into-c, sorted
  // ascending; index 0 is the empty sieve, the last index is the maximal one.
  std::vector<std::vector<MorMask>> sieves;
  // restr[f]: sieve index at cod f -> sieve index at dom f  (pullback f^*).
  std::vector<std::vector<std::uint32_t>> restr;
  Presheaf pre;  // the same data packaged as a Presheaf

  std::uint32_t size_at(Obj c) const { return static_cast<std::uint32_t>(sieves[c].size()); }
  std::uint32_t empty_at(Obj) const { return 0; }
  std::uint32_t true_at(Obj c) const { return size_at(c) - 1; }
  MorMask mask_of(Obj c, std::uint32_t i) const { return sieves[c][i]; }
  std::uint32_t index_of(Obj c, MorMask m) const;  // throws InputError if not a sieve
  std::uint32_t restrict_sieve(Mor f, std::uint32_t i) const { return restr[f][i]; }
  std::uint32_t meet(Obj c, std::uint32_t a, std::uint32_t b) const;
  std::uint32_t join(Obj c, std::uint32_t a, std::uint32_t b) const;
  bool leq(Obj c, std::uint32_t a, std::uint32_t b) const;
};

OmegaPresheaf build_omega(const FinCat& cat, const Caps& caps = {});

struct OmegaEndo {
  const OmegaPresheaf* omega = nullptr;
  std::string name;
  std::vector<std::vector<std::uint32_t>> comp;  // comp[c]: sieve index -> sieve index

  std::uint32_t apply(Obj c, std::uint32_t i) const { return comp[c][i]; }
};

OmegaEndo identity_endo(const OmegaPresheaf& om);
OmegaEndo constant_true_endo(const OmegaPresheaf& om);

bool endo_equal(const OmegaEndo& a, const OmegaEndo& b);
// Pointwise sieve inclusion a(S) ⊆ b(S) over every object and sieve.
bool endo_leq(const OmegaEndo& a, const OmegaEndo& b);

struct WeakTopologyFlags {
  bool natural = false;
  bool true_law = false;  // j(true) = true
  bool meet_le = false;   // j(S ∧ T) ≤ j(S) ∧ j(T)
  bool productive = false;
  bool idempotent = false;
  bool weak() const { return true_law && meet_le; }
  bool topology() const { return weak() && productive && idempotent; }
};

WeakTopologyFlags check_weak_topology(const OmegaEndo& j);

// Closure of G ≤ F induced by j: keep x at C when j sends the sieve of
// arrows pulling x into G to the maximal sieve.
Subpresheaf closure_from_j(const OmegaEndo& j, const Presheaf& F, const Subpresheaf& G);

struct WeakGrothendieck {
  const OmegaPresheaf* omega = nullptr;
  std::vector<std::vector<std::uint32_t>> covers;  // sorted sieve indexes per object

  bool is_cover(Obj c, std::uint32_t idx) const;
};

WeakGrothendieck grothendieck_from_j(const OmegaEndo& j);
// The two halves of the Grothendieck invariant, separated so that supplied
// candidates can be diagnosed: contains every maximal sieve / stable under
// restriction along every morphism.
bool grothendieck_contains_true(const WeakGrothendieck& J);
bool grothendieck_stable(const WeakGrothendieck& J);

struct SubobjectClass {
  bool dense = false;   // closure is everything
  bool closed = false;  // closure is G itself
};

SubobjectClass classify_subobject(const OmegaEndo& j, const Presheaf& F, const Subpresheaf& G);

// Double negation, by the nested quantifier formula; on a right-Ore category
// the one-step form (some extension lands in the sieve) must agree, and both
// are exposed so the agreement stays checkable.
OmegaEndo double_negation(const FinCat& cat, const OmegaPresheaf& om);
OmegaEndo double_negation_atomic(const FinCat& cat, const OmegaPresheaf& om);

struct SheafFlags {
  bool separated = false;
  bool sheaf = false;
};

// Matching-family check of F against the covers in J.
SheafFlags sheaf_check(const Presheaf& F, const WeakGrothendieck& J);

// Sieves fixed by j, as a subpresheaf of om.pre.
Subpresheaf omega_j(const OmegaEndo& j);

struct DeMorganEntry {
  std::string presheaf;
  bool is_sheaf = false;
  std::size_t subobjects_checked = 0;
  std::size_t failures = 0;
};

struct DeMorganReport {
  std::vector<DeMorganEntry> entries;
  bool pass = true;  // no failures among the sheaf candidates
};

// For each candidate that is a sheaf for j's covers and each of its
// subobjects G: close ¬G, close ¬ of that, and require the closed join of
// the two to be everything.
DeMorganReport de_morgan_check(const OmegaEndo& j, const std::vector<const Presheaf*>& candidates,
                               const Caps& caps = {});

// Curated candidate family for the De Morgan battery: the representables,
// Omega, Omega_j, and the pairwise products that stay small.
std::vector<Presheaf> de_morgan_candidates(const FinCat& cat, const OmegaPresheaf& om,
                                           const OmegaEndo& j);

}  // namespace fintopos
