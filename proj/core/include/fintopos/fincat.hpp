#pragma once

// Finite categories given by explicit composition tables.
//
// Everything downstream (sieves, classifier endomorphisms, ideals, admissible
// classes) indexes morphisms globally, so a category is capped at 64 arrows
// and sets of arrows travel as 64-bit masks.  Limits (a chosen terminal
// object and a chosen pullback per cospan) are computed eagerly when the
// category is built; "chosen" always means the first candidate in object
// order, then lexicographic morphism order, so every run of the library picks
// the same squares.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fintopos {

using Obj = std::uint32_t;
using Mor = std::uint32_t;
using MorMask = std::uint64_t;  // bitset over the global morphism index

inline constexpr Mor kNoMor = 0xffffffffu;

struct Caps {
  std::size_t max_morphisms = 64;          // hard representation limit
  std::size_t max_sieves_per_object = 4096;
  std::size_t max_elements = 4096;         // total presheaf elements
};

// Exceeding a cap (exit code 3 in the CLI).
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed or unresolvable input (exit code 2 in the CLI).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool mask_test(MorMask m, Mor i) { return (m >> i) & 1u; }
inline MorMask mask_bit(Mor i) { return MorMask{1} << i; }

template <typename F>
void for_each_bit(MorMask m, F&& f) {
  while (m) {
    f(static_cast<Mor>(std::countr_zero(m)));
    m &= m - 1;
  }
}

// ---------------------------------------------------------------------------
// Raw descriptions and validation

struct MorDecl {
  std::string name, dom, cod;
};
struct ComposeDecl {
  std::string g, f, gf;  // g after f equals gf
};

// A category as the user states it: arrow list (identities included), one
// identity name per object, and the full non-trivial composition table.
struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorDecl> morphisms;
  std::vector<std::string> identities;  // parallel to objects
  std::vector<ComposeDecl> composites;
};

// Convenience builder: auto-creates identities and fills the identity rows of
// the table, leaving explicitly supplied entries alone (so deliberately wrong
// identity composites can be expressed and caught by the validator).
class CatBuilder {
 public:
  explicit CatBuilder(std::string name) : name_(std::move(name)) {}
  CatBuilder& object(const std::string& obj, const std::string& identity_name = "");
  CatBuilder& arrow(const std::string& name, const std::string& dom, const std::string& cod);
  CatBuilder& compose_rule(const std::string& g, const std::string& f, const std::string& gf);
  RawCategory raw() const;

 private:
  std::string name_;
  std::vector<std::string> objects_, identities_;
  std::vector<MorDecl> arrows_;
  std::vector<ComposeDecl> rules_;
};

struct CategoryIssue {
  std::string kind;    // dangling-reference | duplicate-name | bad-identity |
                       // non-composable-entry | duplicate-entry |
                       // missing-composite | identity-law | associativity
  std::string detail;
};

struct CategoryReport {
  std::vector<CategoryIssue> issues;
  bool valid() const { return issues.empty(); }
  std::string summary() const;
};

// Checks the category axioms on a raw description: names resolve, the table
// is total on composable pairs, identity laws, associativity.
CategoryReport validate_category(const RawCategory& raw, const Caps& caps = {});

// ---------------------------------------------------------------------------
// Validated categories

struct PullbackSquare {
  Mor f = kNoMor, g = kNoMor;  // the cospan, cod f == cod g
  Obj apex = 0;
  Mor into_df = kNoMor;  // leg apex -> dom f  (f^{-1}(g))
  Mor into_dg = kNoMor;  // leg apex -> dom g  (g^{-1}(f))
};

struct StructuralPredicates {
  bool right_ore = false;
  bool finitely_complete = false;
  bool pullback_completion = false;  // every composable pair extends to a pullback square
};

class FinCat {
 public:
  // Throws InputError when validate_category reports issues, CapError when
  // the morphism count exceeds the cap (or the 64-arrow representation).
  static FinCat build(const RawCategory& raw, const Caps& caps = {});

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return obj_names_.size(); }
  std::size_t morphism_count() const { return mor_names_.size(); }

  const std::string& object_name(Obj c) const { return obj_names_[c]; }
  const std::string& morphism_name(Mor f) const { return mor_names_[f]; }
  std::optional<Obj> object_index(std::string_view name) const;
  std::optional<Mor> morphism_index(std::string_view name) const;

  Obj dom(Mor f) const { return dom_[f]; }
  Obj cod(Mor f) const { return cod_[f]; }
  Mor identity(Obj c) const { return identity_[c]; }
  bool is_identity(Mor f) const { return identity_[dom_[f]] == f; }

  bool composable(Mor g, Mor f) const { return cod_[f] == dom_[g]; }
  Mor compose(Mor g, Mor f) const;  // g after f; logic_error if not composable
  std::optional<Mor> try_compose(Mor g, Mor f) const;

  MorMask all_arrows() const { return all_; }
  MorMask arrows_into(Obj c) const { return into_[c]; }
  MorMask arrows_out_of(Obj c) const { return outof_[c]; }
  const std::vector<Mor>& arrows_into_list(Obj c) const { return into_list_[c]; }
  MorMask hom(Obj a, Obj b) const { return outof_[a] & into_[b]; }

  bool is_mono(Mor f) const { return mask_test(mono_, f); }
  MorMask monos() const { return mono_; }
  bool is_iso(Mor f) const { return mask_test(iso_, f); }

  // Slice order over a common codomain: m <= n iff m factors through n.
  bool slice_leq(Mor m, Mor n) const;
  bool slice_iso(Mor m, Mor n) const;  // m == n . theta for an isomorphism theta
  Mor slice_rep(Mor m) const { return slice_rep_[m]; }

  std::optional<Obj> terminal() const { return terminal_; }
  std::optional<PullbackSquare> pullback(Mor f, Mor g) const;  // chosen square
  // Diagonal of the chosen square: f x g = f . f^{-1}(g).
  std::optional<Mor> slice_product(Mor f, Mor g) const;

  // Exhaustive universal-property check for an explicit square.
  bool is_pullback_square(Mor f, Mor g, Obj apex, Mor into_df, Mor into_dg) const;

  StructuralPredicates structural_predicates() const;
  // Variant of pullback completion where the given left side lies in cls and
  // the two found sides must lie in cls as well.
  bool m_pullback_completion(MorMask cls) const;
  // First composable pair with no completion (empty when the predicate holds).
  std::string pullback_completion_witness() const;

  const Caps& caps() const { return caps_; }

 private:
  FinCat() = default;
  void build_limits();

  std::string name_;
  Caps caps_;
  std::vector<std::string> obj_names_, mor_names_;
  std::vector<Obj> dom_, cod_;
  std::vector<Mor> identity_;
  std::vector<Mor> table_;  // row g, column f
  std::vector<MorMask> into_, outof_;
  std::vector<std::vector<Mor>> into_list_;
  MorMask all_ = 0, mono_ = 0, iso_ = 0;
  std::vector<Mor> slice_rep_;
  std::optional<Obj> terminal_;
  struct SquareSlot {
    bool present = false;
    Obj apex = 0;
    Mor into_df = kNoMor, into_dg = kNoMor;
  };
  std::vector<SquareSlot> pb_;  // indexed f * n + g for cospans only
};

}  // namespace fintopos
