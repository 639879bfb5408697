#pragma once

// Finite presheaves over a FinCat: explicit element lists per object plus
// tabulated restriction maps, one per morphism.  Subobjects are bitsets over
// those element lists, so the Heyting operations on Sub(F) and the closure
// operators built on top of them stay exhaustively checkable.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fintopos/fincat.hpp"

namespace fintopos {

using ElemSet = boost::dynamic_bitset<>;

struct Presheaf {
  std::string name;
  const FinCat* cat = nullptr;
  // elems[c] lists the elements of F(c); restr[f] maps F(cod f) -> F(dom f).
  std::vector<std::vector<std::string>> elems;
  std::vector<std::vector<std::uint32_t>> restr;

  std::size_t size_at(Obj c) const { return elems[c].size(); }
  std::uint32_t restrict_elem(Mor f, std::uint32_t x) const { return restr[f][x]; }
  std::size_t total_elements() const;
};

struct PresheafIssue {
  std::string kind;  // size-mismatch | identity-row | functoriality
  std::string detail;
};

struct PresheafReport {
  std::vector<PresheafIssue> issues;
  bool valid() const { return issues.empty(); }
};

PresheafReport validate_presheaf(const Presheaf& F);

Presheaf yoneda(const FinCat& cat, Obj c);
Presheaf empty_presheaf(const FinCat& cat);
Presheaf singleton_presheaf(const FinCat& cat);
Presheaf product_presheaf(const Presheaf& F, const Presheaf& G);

// Index of the element labelled `label` in F(c), if present.
std::optional<std::uint32_t> label_index(const Presheaf& F, Obj c, const std::string& label);

struct Subpresheaf {
  const Presheaf* parent = nullptr;
  std::vector<ElemSet> at;  // at[c] selects elements of parent->elems[c]

  bool contains(Obj c, std::uint32_t x) const { return at[c].test(x); }
  std::size_t count() const;
};

Subpresheaf empty_sub(const Presheaf& F);
Subpresheaf full_sub(const Presheaf& F);
bool is_subpresheaf(const Subpresheaf& G);

// Smallest subpresheaf containing the seed sets (closes under restriction).
Subpresheaf sub_closure(const Presheaf& F, std::vector<ElemSet> seed);
Subpresheaf sub_generated(const Presheaf& F, Obj c, std::uint32_t x);

// Every restriction-closed family of subsets, in a deterministic order
// (by element count, then bit pattern).
std::vector<Subpresheaf> enumerate_subpresheaves(const Presheaf& F, const Caps& caps = {});

bool sub_equal(const Subpresheaf& a, const Subpresheaf& b);
bool sub_leq(const Subpresheaf& a, const Subpresheaf& b);
Subpresheaf sub_meet(const Subpresheaf& a, const Subpresheaf& b);
Subpresheaf sub_join(const Subpresheaf& a, const Subpresheaf& b);
// (G => H)(C) = {x | every restriction of x landing in G also lands in H}.
Subpresheaf sub_implies(const Subpresheaf& g, const Subpresheaf& h);
Subpresheaf sub_neg(const Subpresheaf& g);  // G => empty
// Pointwise form of negation: x is kept iff no restriction of x lands in G.
Subpresheaf sub_neg_direct(const Subpresheaf& g);

// Realize a subpresheaf as a presheaf in its own right (elements renumbered,
// restriction tables cut down).
Presheaf sub_as_presheaf(const Subpresheaf& G, const std::string& name);

struct NatTrans {
  const Presheaf* source = nullptr;
  const Presheaf* target = nullptr;
  std::vector<std::vector<std::uint32_t>> comp;  // comp[c]: source elems -> target elems
};

struct NatTransReport {
  std::vector<std::string> failing;  // descriptions of broken squares / bad components
  bool valid() const { return failing.empty(); }
};

NatTransReport validate_nat_trans(const NatTrans& a);
NatTrans identity_nat(const Presheaf& F);

// Pointwise preimage of a subobject of the target along a transformation.
Subpresheaf sub_preimage(const NatTrans& a, const Subpresheaf& h);

// Postcomposition by h as a map between representable presheaves.  Both
// presheaves must have been produced by yoneda() on the same category.
NatTrans yoneda_map(const Presheaf& from, const Presheaf& to, Mor h);

}  // namespace fintopos
