#include "fintopos/omega.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fintopos {

namespace {

void require_shape(const OmegaEndo& j) {
  const OmegaPresheaf& om = *j.omega;
  if (j.comp.size() != om.cat->object_count()) throw InputError("endo has wrong component count");
  for (Obj c = 0; c < om.cat->object_count(); ++c) {
    if (j.comp[c].size() != om.size_at(c))
      throw InputError("endo component at " + om.cat->object_name(c) + " has wrong length");
    for (std::uint32_t v : j.comp[c])
      if (v >= om.size_at(c))
        throw InputError("endo component at " + om.cat->object_name(c) + " is out of range");
  }
}

}  // namespace

std::string sieve_label(const FinCat& cat, MorMask arrows) {
  std::string s = "{";
  bool first = true;
  for_each_bit(arrows, [&](Mor f) {
    if (!first) s += ",";
    s += cat.morphism_name(f);
    first = false;
  });
  return s + "}";
}

std::uint32_t OmegaPresheaf::index_of(Obj c, MorMask m) const {
  auto it = std::lower_bound(sieves[c].begin(), sieves[c].end(), m);
  if (it == sieves[c].end() || *it != m)
    throw InputError("not a sieve on " + cat->object_name(c) + ": " + sieve_label(*cat, m));
  return static_cast<std::uint32_t>(it - sieves[c].begin());
}

std::uint32_t OmegaPresheaf::meet(Obj c, std::uint32_t a, std::uint32_t b) const {
  return index_of(c, sieves[c][a] & sieves[c][b]);
}

std::uint32_t OmegaPresheaf::join(Obj c, std::uint32_t a, std::uint32_t b) const {
  return index_of(c, sieves[c][a] | sieves[c][b]);
}

bool OmegaPresheaf::leq(Obj c, std::uint32_t a, std::uint32_t b) const {
  return (sieves[c][a] & ~sieves[c][b]) == 0;
}

OmegaPresheaf build_omega(const FinCat& cat, const Caps& caps) {
  OmegaPresheaf om;
  om.cat = &cat;
  om.sieves.resize(cat.object_count());

  for (Obj c = 0; c < cat.object_count(); ++c) {
    // principal sieve of f: everything factoring through f
    std::vector<MorMask> principal;
    for (Mor f : cat.arrows_into_list(c)) {
      MorMask m = 0;
      for (Mor g : cat.arrows_into_list(cat.dom(f))) m |= mask_bit(cat.compose(f, g));
      principal.push_back(m);
    }
    std::set<MorMask> seen{0};
    std::vector<MorMask> frontier{0};
    while (!frontier.empty()) {
      std::vector<MorMask> next;
      for (MorMask cur : frontier)
        for (MorMask p : principal) {
          MorMask cand = cur | p;
          if (seen.insert(cand).second) next.push_back(cand);
          if (seen.size() > caps.max_sieves_per_object)
            throw CapError("more than " + std::to_string(caps.max_sieves_per_object) +
                           " sieves on " + cat.object_name(c));
        }
      frontier = std::move(next);
    }
    om.sieves[c].assign(seen.begin(), seen.end());
  }

  om.restr.resize(cat.morphism_count());
  for (Mor f = 0; f < cat.morphism_count(); ++f) {
    Obj c = cat.cod(f), d = cat.dom(f);
    for (MorMask s : om.sieves[c]) {
      MorMask pulled = 0;
      for (Mor g : cat.arrows_into_list(d))
        if (mask_test(s, cat.compose(f, g))) pulled |= mask_bit(g);
      om.restr[f].push_back(om.index_of(d, pulled));
    }
  }

  om.pre.name = "Omega";
  om.pre.cat = &cat;
  om.pre.elems.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (MorMask s : om.sieves[c]) om.pre.elems[c].push_back(sieve_label(cat, s));
  om.pre.restr = om.restr;
  return om;
}

OmegaEndo identity_endo(const OmegaPresheaf& om) {
  OmegaEndo j;
  j.omega = &om;
  j.name = "id";
  for (Obj c = 0; c < om.cat->object_count(); ++c) {
    std::vector<std::uint32_t> row(om.size_at(c));
    for (std::uint32_t i = 0; i < row.size(); ++i) row[i] = i;
    j.comp.push_back(std::move(row));
  }
  return j;
}

OmegaEndo constant_true_endo(const OmegaPresheaf& om) {
  OmegaEndo j;
  j.omega = &om;
  j.name = "j0";
  for (Obj c = 0; c < om.cat->object_count(); ++c)
    j.comp.emplace_back(om.size_at(c), om.true_at(c));
  return j;
}

bool endo_equal(const OmegaEndo& a, const OmegaEndo& b) {
  return a.omega == b.omega && a.comp == b.comp;
}

bool endo_leq(const OmegaEndo& a, const OmegaEndo& b) {
  if (a.omega != b.omega) throw InputError("endo_leq: different classifiers");
  const OmegaPresheaf& om = *a.omega;
  for (Obj c = 0; c < om.cat->object_count(); ++c)
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      if (!om.leq(c, a.comp[c][i], b.comp[c][i])) return false;
  return true;
}

WeakTopologyFlags check_weak_topology(const OmegaEndo& j) {
  require_shape(j);
  const OmegaPresheaf& om = *j.omega;
  const FinCat& cat = *om.cat;
  WeakTopologyFlags flags;

  flags.natural = true;
  for (Mor h = 0; h < cat.morphism_count() && flags.natural; ++h) {
    Obj c = cat.cod(h), d = cat.dom(h);
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      if (om.restrict_sieve(h, j.comp[c][i]) != j.comp[d][om.restrict_sieve(h, i)]) {
        flags.natural = false;
        break;
      }
  }

  flags.true_law = true;
  for (Obj c = 0; c < cat.object_count(); ++c)
    if (j.comp[c][om.true_at(c)] != om.true_at(c)) flags.true_law = false;

  flags.meet_le = true;
  flags.productive = true;
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t a = 0; a < om.size_at(c); ++a)
      for (std::uint32_t b = 0; b < om.size_at(c); ++b) {
        std::uint32_t lhs = j.comp[c][om.meet(c, a, b)];
        std::uint32_t rhs = om.meet(c, j.comp[c][a], j.comp[c][b]);
        if (!om.leq(c, lhs, rhs)) flags.meet_le = false;
        if (lhs != rhs) flags.productive = false;
      }

  flags.idempotent = true;
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      if (j.comp[c][j.comp[c][i]] != j.comp[c][i]) flags.idempotent = false;

  return flags;
}

Subpresheaf closure_from_j(const OmegaEndo& j, const Presheaf& F, const Subpresheaf& G) {
  const OmegaPresheaf& om = *j.omega;
  const FinCat& cat = *om.cat;
  if (G.parent != &F) throw InputError("closure: subobject does not live in the given presheaf");
  Subpresheaf out = empty_sub(F);
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t x = 0; x < F.size_at(c); ++x) {
      MorMask lands = 0;
      for (Mor f : cat.arrows_into_list(c))
        if (G.at[cat.dom(f)].test(F.restr[f][x])) lands |= mask_bit(f);
      if (j.comp[c][om.index_of(c, lands)] == om.true_at(c)) out.at[c].set(x);
    }
  return out;
}

bool WeakGrothendieck::is_cover(Obj c, std::uint32_t idx) const {
  return std::binary_search(covers[c].begin(), covers[c].end(), idx);
}

WeakGrothendieck grothendieck_from_j(const OmegaEndo& j) {
  require_shape(j);
  const OmegaPresheaf& om = *j.omega;
  WeakGrothendieck J;
  J.omega = &om;
  J.covers.resize(om.cat->object_count());
  for (Obj c = 0; c < om.cat->object_count(); ++c)
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      if (j.comp[c][i] == om.true_at(c)) J.covers[c].push_back(i);
  return J;
}

bool grothendieck_contains_true(const WeakGrothendieck& J) {
  const OmegaPresheaf& om = *J.omega;
  for (Obj c = 0; c < om.cat->object_count(); ++c)
    if (!J.is_cover(c, om.true_at(c))) return false;
  return true;
}

bool grothendieck_stable(const WeakGrothendieck& J) {
  const OmegaPresheaf& om = *J.omega;
  const FinCat& cat = *om.cat;
  for (Mor f = 0; f < cat.morphism_count(); ++f)
    for (std::uint32_t i : J.covers[cat.cod(f)])
      if (!J.is_cover(cat.dom(f), om.restrict_sieve(f, i))) return false;
  return true;
}

SubobjectClass classify_subobject(const OmegaEndo& j, const Presheaf& F, const Subpresheaf& G) {
  Subpresheaf cl = closure_from_j(j, F, G);
  SubobjectClass out;
  out.dense = sub_equal(cl, full_sub(F));
  out.closed = sub_equal(cl, G);
  return out;
}

OmegaEndo double_negation_atomic(const FinCat& cat, const OmegaPresheaf& om) {
  OmegaEndo j;
  j.omega = &om;
  j.name = "nn";
  j.comp.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (MorMask s : om.sieves[c]) {
      MorMask out = 0;
      for (Mor f : cat.arrows_into_list(c)) {
        bool meets = false;
        for (Mor g : cat.arrows_into_list(cat.dom(f)))
          if (mask_test(s, cat.compose(f, g))) {
            meets = true;
            break;
          }
        if (meets) out |= mask_bit(f);
      }
      j.comp[c].push_back(om.index_of(c, out));
    }
  return j;
}

OmegaEndo double_negation(const FinCat& cat, const OmegaPresheaf& om) {
  OmegaEndo j;
  j.omega = &om;
  j.name = "nn";
  j.comp.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (MorMask s : om.sieves[c]) {
      MorMask out = 0;
      for (Mor f : cat.arrows_into_list(c)) {
        bool all_g = true;
        for (Mor g : cat.arrows_into_list(cat.dom(f))) {
          Mor fg = cat.compose(f, g);
          bool some_h = false;
          for (Mor h : cat.arrows_into_list(cat.dom(g)))
            if (mask_test(s, cat.compose(fg, h))) {
              some_h = true;
              break;
            }
          if (!some_h) {
            all_g = false;
            break;
          }
        }
        if (all_g) out |= mask_bit(f);
      }
      j.comp[c].push_back(om.index_of(c, out));
    }
  if (cat.structural_predicates().right_ore) {
    OmegaEndo atomic = double_negation_atomic(cat, om);
    if (j.comp != atomic.comp)
      throw std::logic_error("double negation: one-step form disagrees on a right-Ore category");
  }
  return j;
}

SheafFlags sheaf_check(const Presheaf& F, const WeakGrothendieck& J) {
  const OmegaPresheaf& om = *J.omega;
  const FinCat& cat = *om.cat;
  SheafFlags flags{true, true};

  for (Obj c = 0; c < cat.object_count(); ++c) {
    for (std::uint32_t ci : J.covers[c]) {
      MorMask cover = om.mask_of(c, ci);
      std::vector<Mor> fs;
      for_each_bit(cover, [&](Mor f) { fs.push_back(f); });

      // index of f within fs, for constraint lookups
      std::map<Mor, std::size_t> pos;
      for (std::size_t i = 0; i < fs.size(); ++i) pos[fs[i]] = i;
      // compatibility constraints: entry at fs[i] restricted along g must be
      // the entry at fs[i]∘g (which is in the sieve)
      struct Cn {
        std::size_t from;
        Mor g;
        std::size_t to;
      };
      std::vector<Cn> constraints;
      for (std::size_t i = 0; i < fs.size(); ++i)
        for (Mor g : cat.arrows_into_list(cat.dom(fs[i])))
          constraints.push_back({i, g, pos.at(cat.compose(fs[i], g))});

      // canonical families: the restrictions of each element of F(c)
      std::set<std::vector<std::uint32_t>> canonical;
      bool injective = true;
      for (std::uint32_t x = 0; x < F.size_at(c); ++x) {
        std::vector<std::uint32_t> fam;
        for (Mor f : fs) fam.push_back(F.restr[f][x]);
        if (!canonical.insert(fam).second) injective = false;
      }
      if (!injective) flags.separated = false;

      // backtracking enumeration of matching families
      std::vector<std::uint32_t> assign(fs.size(), 0);
      std::size_t hit = 0;
      bool extra = false;
      auto consistent = [&](std::size_t k) {
        for (const auto& cn : constraints) {
          if (cn.from > k || cn.to > k) continue;
          if (F.restr[cn.g][assign[cn.from]] != assign[cn.to]) return false;
        }
        return true;
      };
      std::size_t depth = 0;
      std::vector<std::uint32_t> cursor(fs.size() + 1, 0);
      if (fs.empty()) {
        // the empty family is the unique matching family for the empty cover
        if (canonical.count({}) != 0)
          ++hit;
        else
          extra = true;
      } else {
        while (true) {
          if (cursor[depth] >= F.size_at(cat.dom(fs[depth]))) {
            if (depth == 0) break;
            cursor[depth] = 0;
            --depth;
            ++cursor[depth];
            continue;
          }
          assign[depth] = cursor[depth];
          if (!consistent(depth)) {
            ++cursor[depth];
            continue;
          }
          if (depth + 1 == fs.size()) {
            if (canonical.count(assign) != 0)
              ++hit;
            else
              extra = true;
            ++cursor[depth];
          } else {
            ++depth;
            cursor[depth] = 0;
          }
        }
      }
      if (extra) flags.sheaf = false;
      (void)hit;
    }
  }
  flags.sheaf = flags.sheaf && flags.separated;
  return flags;
}

Subpresheaf omega_j(const OmegaEndo& j) {
  require_shape(j);
  const OmegaPresheaf& om = *j.omega;
  Subpresheaf G = empty_sub(om.pre);
  for (Obj c = 0; c < om.cat->object_count(); ++c)
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      if (j.comp[c][i] == i) G.at[c].set(i);
  return G;
}

DeMorganReport de_morgan_check(const OmegaEndo& j, const std::vector<const Presheaf*>& candidates,
                               const Caps& caps) {
  DeMorganReport rep;
  WeakGrothendieck J = grothendieck_from_j(j);
  for (const Presheaf* F : candidates) {
    DeMorganEntry entry;
    entry.presheaf = F->name;
    entry.is_sheaf = sheaf_check(*F, J).sheaf;
    if (entry.is_sheaf) {
      for (const auto& G : enumerate_subpresheaves(*F, caps)) {
        Subpresheaf a = closure_from_j(j, *F, sub_neg(G));
        Subpresheaf b = closure_from_j(j, *F, sub_neg(a));
        Subpresheaf joined = closure_from_j(j, *F, sub_join(a, b));
        ++entry.subobjects_checked;
        if (!sub_equal(joined, full_sub(*F))) ++entry.failures;
      }
    }
    if (entry.failures > 0) rep.pass = false;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

std::vector<Presheaf> de_morgan_candidates(const FinCat& cat, const OmegaPresheaf& om,
                                           const OmegaEndo& j) {
  std::vector<Presheaf> out;
  for (Obj c = 0; c < cat.object_count(); ++c) out.push_back(yoneda(cat, c));
  out.push_back(om.pre);
  out.push_back(sub_as_presheaf(omega_j(j), "Omega_" + j.name));
  std::size_t reps = cat.object_count();
  for (std::size_t i = 0; i < reps; ++i) {
    Presheaf p = product_presheaf(out[i], om.pre);
    if (p.total_elements() <= 20) out.push_back(std::move(p));
  }
  Presheaf oo = product_presheaf(om.pre, om.pre);
  if (oo.total_elements() <= 20) out.push_back(std::move(oo));
  return out;
}

}  // namespace fintopos
