#pragma once

// Admissible classes of monomorphisms and the structure they generate: the
// presheaf M of class members, the quantifier triple exists ⊣ sigma ⊣ forall
// between sieves and relations over the Yoneda embedding, the relation mu and
// its characteristic sieve, the induced classifier topologies j_M / j_Sub,
// and the partial-map category whose domains of definition come from the
// class.
//
// A class is stored as a mask over the global morphism index.  Everything
// that needs to move a member across an arrow (the presheaf M, mu, char,
// partial-map composition) uses the chosen pullbacks of the category; when a
// required pullback is missing those operations throw InputError naming the
// cospan, while the mask-level predicates (validation, j_M's defining
// formula) stay total.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintopos/fincat.hpp"
#include "fintopos/omega.hpp"
#include "fintopos/presheaf.hpp"

namespace fintopos {

struct AdmissibleClass {
  const FinCat* cat = nullptr;
  std::string name;
  MorMask arrows = 0;

  bool contains(Mor m) const { return mask_test(arrows, m); }
  MorMask members_into(Obj c) const { return arrows & cat->arrows_into(c); }
};

struct AdmissibleIssue {
  std::string axiom;  // monic | identities | composition | pullback
  std::string detail;
};

struct AdmissibleReport {
  std::vector<AdmissibleIssue> issues;
  bool valid() const { return issues.empty(); }
};

// The class axioms: members are monic, all identities belong, composable
// members compose into the class, and whenever the chosen pullback of a
// member along an arrow exists, the leg over that arrow belongs as well.
AdmissibleReport validate_admissible(const FinCat& cat, MorMask arrows);

// Validating constructor; throws InputError on a failing axiom.
AdmissibleClass make_admissible(const FinCat& cat, MorMask arrows, std::string name = "");

AdmissibleClass identities_class(const FinCat& cat);  // named "ids"
AdmissibleClass all_monos_class(const FinCat& cat);   // named "monos"

// Every admissible class of the category, found by closing generator sets of
// monos under composition and pullback legs; sorted by size then mask, named
// "M0", "M1", ...  Throws CapError when the count passes
// caps.max_sieves_per_object.
std::vector<AdmissibleClass> enumerate_admissible_classes(const FinCat& cat,
                                                          const Caps& caps = {});

// First (member, arrow-into-its-codomain) cospan with no chosen pullback.
// Empty exactly when the presheaf M and everything built from it is defined.
std::optional<std::pair<Mor, Mor>> missing_member_cospan(const AdmissibleClass& cls);

// ---------------------------------------------------------------------------
// The presheaf M(c) = class members into c, up to slice isomorphism

struct ClassPresheaf {
  AdmissibleClass cls;
  Presheaf pre;                        // element labels name the representatives
  std::vector<std::vector<Mor>> reps;  // reps[c][i]: canonical member into c

  // Index of the slice class of m (a member into c); InputError when m's
  // class has no representative at c.
  std::uint32_t rep_index(Obj c, Mor m) const;
};

// Throws InputError naming the cospan when a restriction pullback is absent.
ClassPresheaf m_presheaf(const AdmissibleClass& cls);

// ---------------------------------------------------------------------------
// Relations over the Yoneda embedding and the quantifier triple
//
// For a parameter presheaf X and base object c, relations live in
// Sub(y(c) × X).  sigma sends a sieve to the cylinder over it, exists and
// forall are its left and right adjoints.

class QuantSpace {
 public:
  QuantSpace(const FinCat& cat, Presheaf x, Obj c);

  const FinCat& cat() const { return *cat_; }
  Obj base() const { return c_; }
  const Presheaf& x() const { return x_; }
  const Presheaf& space() const { return *prod_; }  // y(c) × X, stable address

  Mor arrow_of(Obj d, std::uint32_t a) const { return arrow_[d][a]; }
  std::uint32_t arrow_index(Mor f) const { return aidx_[f]; }
  std::uint32_t pair_index(Obj d, std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(a * x_.size_at(d) + b);
  }

  Subpresheaf sigma(MorMask s) const;               // {(f, x) | f in s}
  MorMask exists_of(const Subpresheaf& u) const;    // {f | some (f, x) in u}
  MorMask forall_of(const Subpresheaf& u) const;    // {f | every (fh, x) in u}
  Subpresheaf t_of(const Subpresheaf& u) const;     // sigma(exists_of(u))
  Subpresheaf true_rel() const;                     // sigma of the maximal sieve

 private:
  const FinCat* cat_ = nullptr;
  Obj c_ = 0;
  Presheaf x_;
  std::unique_ptr<Presheaf> prod_;
  std::vector<std::vector<Mor>> arrow_;  // arrow_[d][a]: a-th arrow d -> c
  std::vector<std::uint32_t> aidx_;      // inverse of arrow_, indexed by Mor
};

// The endomorphism S -> forall(sigma(S)), a topology for every X.
OmegaEndo forall_sigma(const OmegaPresheaf& om, const Presheaf& x);

// ---------------------------------------------------------------------------
// The relation mu, its characteristic sieve, and the class topologies

class MCalculus {
 public:
  MCalculus(const FinCat& cat, const AdmissibleClass& cls);  // InputError when M is undefined

  const FinCat& cat() const { return *cat_; }
  const AdmissibleClass& cls() const { return mp_.cls; }
  const Presheaf& m() const { return mp_.pre; }
  const std::vector<Mor>& reps(Obj c) const { return mp_.reps[c]; }
  std::uint32_t rep_index(Obj c, Mor m) const { return mp_.rep_index(c, m); }
  const QuantSpace& space(Obj c) const { return *spaces_[c]; }

  // {(f, g) | f.g lands in s} as a relation on y(c) × M.
  Subpresheaf mu(Obj c, MorMask s) const;
  // Pull a relation at c back along f : d -> c (precompose the arrow part).
  Subpresheaf rel_pullback(Obj c, const Subpresheaf& u, Mor f) const;
  // {f | the pullback of u along f equals mu of some sieve}, by witness scan.
  MorMask char_of(const OmegaPresheaf& om, Obj c, const Subpresheaf& u) const;

 private:
  const FinCat* cat_ = nullptr;
  ClassPresheaf mp_;
  std::vector<std::unique_ptr<QuantSpace>> spaces_;
};

// j_M(S) = {f | some member into dom f lands f in S}.  Sieve-valued (and
// then a topology) exactly when members pull back along every arrow; when
// they do not, the offending value is not a sieve and InputError surfaces.
OmegaEndo topology_from_m(const OmegaPresheaf& om, const AdmissibleClass& cls);
// The same endomorphism through the adjoint route exists . mu.
OmegaEndo topology_from_m_via_mu(const MCalculus& mc, const OmegaPresheaf& om);
// Covers of j_M: sieves meeting the class.
WeakGrothendieck m_grothendieck(const OmegaPresheaf& om, const AdmissibleClass& cls);
// topology_from_m at the class of all monos, named "jSub".
OmegaEndo sub_topology(const OmegaPresheaf& om, const FinCat& cat);

// ---------------------------------------------------------------------------
// Partial maps with domains of definition in the class

struct PartialMap {
  Mor m = kNoMor;  // domain of definition, a mono into the source object
  Mor f = kNoMor;  // the map, sharing its domain with m
};

inline Obj partial_source(const FinCat& cat, const PartialMap& p) { return cat.cod(p.m); }
inline Obj partial_target(const FinCat& cat, const PartialMap& p) { return cat.cod(p.f); }

// Equality up to an isomorphism of the shared domain commuting with both
// components.
bool partial_equal(const FinCat& cat, const PartialMap& a, const PartialMap& b);

// [(n, g)] after [(m, f)] = [(m . f^{-1}(n), g . n^{-1}(f))].  InputError when
// the pair is not composable or the chosen pullback of (f, n) is missing.
PartialMap compose_partial(const FinCat& cat, const PartialMap& q, const PartialMap& p);

// P_S: the partial maps [(m, f.m)] with f into c, m a class member into
// dom f, and f.m in s; deduplicated up to partial_equal, in scan order.
std::vector<PartialMap> partial_maps_of(const FinCat& cat, const AdmissibleClass& cls,
                                        Obj c, MorMask s);

struct PartialCategoryReport {
  std::size_t arrows = 0;
  bool identities = false;   // [(id_c, id_c)] present for every object
  bool closed = false;       // composites stay in the family
  bool associative = false;  // up to partial_equal
  std::vector<std::string> issues;
  bool valid() const { return identities && closed && associative; }
};

// The category of partial maps over the class: objects of cat, arrows the
// union of P_{t(c)} over all objects.  Composites needing a missing pullback
// are reported as issues rather than thrown.
PartialCategoryReport partial_category_check(const FinCat& cat, const AdmissibleClass& cls);

}  // namespace fintopos
