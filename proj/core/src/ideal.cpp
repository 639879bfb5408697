#include "fintopos/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace fintopos {

namespace {

std::string arrow_set(const FinCat& cat, MorMask m) { return sieve_label(cat, m); }

}  // namespace

IdealReport validate_ideal(const FinCat& cat, const std::vector<MorMask>& at) {
  IdealReport rep;
  if (at.size() != cat.object_count()) {
    rep.issues.push_back({"shape", "one sieve per object required"});
    return rep;
  }
  for (Obj c = 0; c < cat.object_count(); ++c) {
    if ((at[c] & ~cat.arrows_into(c)) != 0) {
      rep.issues.push_back({"shape", "arrows at " + cat.object_name(c) + " must land in it"});
      continue;
    }
    for_each_bit(at[c], [&](Mor f) {
      for (Mor g : cat.arrows_into_list(cat.dom(f)))
        if (!mask_test(at[c], cat.compose(f, g)))
          rep.issues.push_back({"not-a-sieve", cat.morphism_name(f) + " after " +
                                                   cat.morphism_name(g) + " escapes at " +
                                                   cat.object_name(c)});
    });
  }
  if (!rep.valid()) return rep;
  for (Mor f = 0; f < cat.morphism_count(); ++f)
    for_each_bit(at[cat.dom(f)], [&](Mor g) {
      if (!mask_test(at[cat.cod(f)], cat.compose(f, g)))
        rep.issues.push_back({"not-stable", cat.morphism_name(f) + " pushes " +
                                                cat.morphism_name(g) + " outside " +
                                                arrow_set(cat, at[cat.cod(f)])});
    });
  return rep;
}

Ideal make_ideal(const FinCat& cat, std::vector<MorMask> at, std::string name) {
  auto rep = validate_ideal(cat, at);
  if (!rep.valid())
    throw InputError("not an ideal: " + rep.issues.front().kind + ", " +
                     rep.issues.front().detail);
  return Ideal{&cat, std::move(name), std::move(at)};
}

Ideal yoneda_ideal(const FinCat& cat) {
  std::vector<MorMask> at;
  for (Obj c = 0; c < cat.object_count(); ++c) at.push_back(cat.arrows_into(c));
  return Ideal{&cat, "y", std::move(at)};
}

Ideal zero_ideal(const FinCat& cat) {
  return Ideal{&cat, "0", std::vector<MorMask>(cat.object_count(), 0)};
}

std::vector<Ideal> enumerate_ideals(const FinCat& cat, const OmegaPresheaf& om, const Caps& caps) {
  std::vector<Ideal> out;
  std::vector<MorMask> cur(cat.object_count(), 0);
  constexpr std::size_t kGuard = 1u << 20;

  // incremental stability check against the objects already fixed
  auto ok_with = [&](Obj k) {
    for (Mor f = 0; f < cat.morphism_count(); ++f) {
      Obj a = cat.dom(f), b = cat.cod(f);
      if (a > k || b > k) continue;
      bool bad = false;
      for_each_bit(cur[a], [&](Mor g) {
        if (!mask_test(cur[b], cat.compose(f, g))) bad = true;
      });
      if (bad) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, Obj k) -> void {
    if (k == cat.object_count()) {
      out.push_back(Ideal{&cat, "I" + std::to_string(out.size()), cur});
      if (out.size() > kGuard) throw CapError("ideal enumeration exceeded its guard");
      return;
    }
    for (MorMask s : om.sieves[k]) {
      cur[k] = s;
      if (ok_with(k)) self(self, k + 1);
    }
    cur[k] = 0;
  };
  rec(rec, 0);
  (void)caps;
  return out;
}

Ideal ideal_square(const Ideal& ideal) {
  const FinCat& cat = *ideal.cat;
  std::vector<MorMask> sq(cat.object_count(), 0);
  for (Obj c = 0; c < cat.object_count(); ++c)
    for_each_bit(ideal.at[c], [&](Mor f) {
      for_each_bit(ideal.at[cat.dom(f)], [&](Mor g) { sq[c] |= mask_bit(cat.compose(f, g)); });
    });
  return Ideal{&cat, ideal.name + "^2", std::move(sq)};
}

bool ideal_is_idempotent(const Ideal& ideal) { return ideal_square(ideal).at == ideal.at; }

bool ideal_all_nonempty(const Ideal& ideal) {
  for (MorMask m : ideal.at)
    if (m == 0) return false;
  return true;
}

Subpresheaf ideal_closure(const Ideal& ideal, const Presheaf& F, const Subpresheaf& G) {
  if (G.parent != &F) throw InputError("closure: subobject does not live in the given presheaf");
  const FinCat& cat = *ideal.cat;
  Subpresheaf out = empty_sub(F);
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t x = 0; x < F.size_at(c); ++x) {
      bool keep = true;
      for_each_bit(ideal.at[c], [&](Mor f) {
        if (!G.at[cat.dom(f)].test(F.restr[f][x])) keep = false;
      });
      if (keep) out.at[c].set(x);
    }
  return out;
}

OmegaEndo weak_ideal_topology(const Ideal& ideal, const OmegaPresheaf& om) {
  const FinCat& cat = *ideal.cat;
  OmegaEndo j;
  j.omega = &om;
  j.name = "jI:" + ideal.name;
  j.comp.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (MorMask s : om.sieves[c]) {
      MorMask outm = 0;
      for (Mor f : cat.arrows_into_list(c)) {
        bool all = true;
        for_each_bit(ideal.at[cat.dom(f)], [&](Mor g) {
          if (!mask_test(s, cat.compose(f, g))) all = false;
        });
        if (all) outm |= mask_bit(f);
      }
      j.comp[c].push_back(om.index_of(c, outm));
    }
  return j;
}

WeakGrothendieck ideal_grothendieck(const Ideal& ideal, const OmegaPresheaf& om) {
  WeakGrothendieck J;
  J.omega = &om;
  J.covers.resize(om.cat->object_count());
  for (Obj c = 0; c < om.cat->object_count(); ++c)
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      if ((ideal.at[c] & ~om.mask_of(c, i)) == 0) J.covers[c].push_back(i);
  return J;
}

OmegaEndo ideal_double_negation(const Ideal& ideal, const OmegaPresheaf& om) {
  const FinCat& cat = *ideal.cat;
  OmegaEndo j;
  j.omega = &om;
  j.name = "nnI:" + ideal.name;
  j.comp.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (MorMask s : om.sieves[c]) {
      MorMask outm = 0;
      for (Mor f : cat.arrows_into_list(c)) {
        bool all_g = true;
        for_each_bit(ideal.at[cat.dom(f)], [&](Mor g) {
          Mor fg = cat.compose(f, g);
          bool some_h = false;
          for_each_bit(ideal.at[cat.dom(g)], [&](Mor h) {
            if (mask_test(s, cat.compose(fg, h))) some_h = true;
          });
          if (!some_h) all_g = false;
        });
        if (all_g) outm |= mask_bit(f);
      }
      j.comp[c].push_back(om.index_of(c, outm));
    }
  if (ideal_all_nonempty(ideal)) {
    OmegaEndo nn = double_negation(cat, om);
    if (j.comp != nn.comp)
      throw InputError("ideal-relative double negation disagrees with double negation although "
                       "every component of " +
                       ideal.name + " is nonempty");
  }
  return j;
}

bool matching_family_check(const Ideal& ideal, Obj c) {
  const FinCat& cat = *ideal.cat;
  bool ok = true;
  for_each_bit(ideal.at[c], [&](Mor f) {
    for (Mor g : cat.arrows_into_list(cat.dom(f)))
      for (Mor h : cat.arrows_into_list(cat.dom(g))) {
        bool lhs = mask_test(ideal.at[cat.dom(g)], h);
        bool rhs = mask_test(ideal.at[cat.dom(f)], cat.compose(g, h));
        if (lhs && !rhs)
          throw std::logic_error("post-composition stability violated inside an ideal");
        if (lhs != rhs) ok = false;
      }
  });
  return ok;
}

Subpresheaf omega_jI_literal(const Ideal& ideal, const OmegaPresheaf& om) {
  const FinCat& cat = *ideal.cat;
  Subpresheaf G = empty_sub(om.pre);
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t i = 0; i < om.size_at(c); ++i) {
      MorMask t = om.mask_of(c, i);
      bool fixed = true;
      for (Mor h : cat.arrows_into_list(c)) {
        bool all_ext = true;
        for_each_bit(ideal.at[cat.dom(h)], [&](Mor k) {
          if (!mask_test(t, cat.compose(h, k))) all_ext = false;
        });
        if (all_ext != mask_test(t, h)) {
          fixed = false;
          break;
        }
      }
      if (fixed) G.at[c].set(i);
    }
  return G;
}

bool is_ideal_pullback_stable(const Ideal& ideal) {
  const FinCat& cat = *ideal.cat;
  for (Mor g = 0; g < cat.morphism_count(); ++g) {
    bool ok = true;
    for_each_bit(ideal.at[cat.cod(g)], [&](Mor f) {
      auto sq = cat.pullback(f, g);
      if (!sq || !mask_test(ideal.at[cat.dom(g)], sq->into_dg)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_ideal_pullback_stable_converse(const Ideal& ideal) {
  const FinCat& cat = *ideal.cat;
  for (Mor g = 0; g < cat.morphism_count(); ++g)
    for (Mor f : cat.arrows_into_list(cat.cod(g))) {
      auto sq = cat.pullback(f, g);
      if (!sq) continue;
      if (mask_test(ideal.at[cat.dom(g)], sq->into_dg) &&
          !mask_test(ideal.at[cat.cod(g)], f))
        return false;
    }
  return true;
}

}  // namespace fintopos
