#include "fintopos/action.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace fintopos {

namespace {

std::string cospan_label(const FinCat& cat, Mor a, Mor b) {
  return "(" + cat.morphism_name(a) + ", " + cat.morphism_name(b) + ")";
}

// k^*(s) at the mask level: arrows whose composite with k lands in s.
MorMask restrict_mask(const FinCat& cat, Mor k, MorMask s) {
  MorMask out = 0;
  for_each_bit(cat.arrows_into(cat.dom(k)), [&](Mor u) {
    if (mask_test(s, cat.compose(k, u))) out |= MorMask{1} << u;
  });
  return out;
}

bool is_sieve_mask(const OmegaPresheaf& om, Obj c, MorMask s) {
  const auto& row = om.sieves[c];
  return std::binary_search(row.begin(), row.end(), s);
}

}  // namespace

Mor slice_product_of(const FinCat& cat, Mor m, Mor h) {
  auto d = cat.slice_product(m, h);
  if (!d) throw InputError("no pullback of " + cospan_label(cat, m, h));
  return *d;
}

MorMask act_mask(const FinCat& cat, Obj c, MorMask s, Mor m) {
  if (cat.cod(m) != c) throw InputError("act: " + cat.morphism_name(m) + " does not land in " +
                                        cat.object_name(c));
  MorMask out = 0;
  for_each_bit(cat.arrows_into(c), [&](Mor h) {
    if (mask_test(s, slice_product_of(cat, m, h))) out |= MorMask{1} << h;
  });
  return out;
}

// ---------------------------------------------------------------------------
// MonoidOnM

Mor MonoidOnM::product(Obj c, Mor x, Mor y) const {
  return m.reps[c][apply(c, m.rep_index(c, x), m.rep_index(c, y))];
}

MonoidOnM monoid_on_m(const AdmissibleClass& cls) {
  const FinCat& cat = *cls.cat;
  MonoidOnM mon;
  mon.m = m_presheaf(cls);
  mon.op.resize(cat.object_count());
  mon.unit.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c) {
    const auto& reps = mon.m.reps[c];
    const std::size_t n = reps.size();
    mon.unit[c] = mon.m.rep_index(c, cat.identity(c));
    mon.op[c].resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        mon.op[c][a * n + b] = mon.m.rep_index(c, slice_product_of(cat, reps[a], reps[b]));
  }
  return mon;
}

MonoidLaws monoid_laws_check(const MonoidOnM& mon) {
  const FinCat& cat = mon.cat();
  MonoidLaws laws;
  laws.unit_laws = laws.associative = laws.commutative = laws.order_compatible = true;
  auto note = [&](bool& flag, const std::string& what, Obj c) {
    flag = false;
    laws.issues.push_back(what + " at " + cat.object_name(c));
  };
  for (Obj c = 0; c < cat.object_count(); ++c) {
    const auto& reps = mon.m.reps[c];
    const std::uint32_t n = mon.size_at(c);
    const std::uint32_t e = mon.unit[c];
    for (std::uint32_t a = 0; a < n; ++a) {
      if (mon.apply(c, e, a) != a || mon.apply(c, a, e) != a)
        note(laws.unit_laws, "unit law fails on " + cat.morphism_name(reps[a]), c);
      for (std::uint32_t b = 0; b < n; ++b) {
        if (mon.apply(c, a, b) != mon.apply(c, b, a))
          note(laws.commutative,
               "products of " + cat.morphism_name(reps[a]) + " and " + cat.morphism_name(reps[b]) +
                   " differ by order",
               c);
        for (std::uint32_t d = 0; d < n; ++d)
          if (mon.apply(c, mon.apply(c, a, b), d) != mon.apply(c, a, mon.apply(c, b, d)))
            note(laws.associative, "associativity fails", c);
        // order compatibility: grow each argument and compare products
        for (std::uint32_t a2 = 0; a2 < n; ++a2)
          for (std::uint32_t b2 = 0; b2 < n; ++b2) {
            if (!cat.slice_leq(reps[a], reps[a2]) || !cat.slice_leq(reps[b], reps[b2])) continue;
            if (!cat.slice_leq(reps[mon.apply(c, a, b)], reps[mon.apply(c, a2, b2)]))
              note(laws.order_compatible,
                   "product order fails for " + cat.morphism_name(reps[a]) + " ≤ " +
                       cat.morphism_name(reps[a2]) + ", " + cat.morphism_name(reps[b]) + " ≤ " +
                       cat.morphism_name(reps[b2]),
                   c);
          }
      }
    }
  }
  return laws;
}

// ---------------------------------------------------------------------------
// OmegaAction

OmegaAction::OmegaAction(const OmegaPresheaf& om, const AdmissibleClass& cls) : om_(&om) {
  if (auto miss = missing_member_cospan(cls))
    throw InputError("class " + cls.name + " has no pullback of " +
                     cospan_label(*cls.cat, miss->first, miss->second));
  mon_ = monoid_on_m(cls);
}

MorMask OmegaAction::act_on_mask(Obj c, MorMask s, Mor m) const {
  return act_mask(cat(), c, s, m);
}

std::uint32_t OmegaAction::act(Obj c, std::uint32_t s, Mor m) const {
  return om_->index_of(c, act_on_mask(c, om_->mask_of(c, s), m));
}

ActionLaws action_laws_check(const OmegaAction& a) {
  const FinCat& cat = a.cat();
  const OmegaPresheaf& om = a.omega();
  ActionLaws laws;
  laws.sieve_valued = laws.unit = laws.mixed_associative = true;
  laws.rep_independent = laws.natural = laws.commutes = true;
  auto note = [&](bool& flag, const std::string& what) {
    flag = false;
    laws.issues.push_back(what);
  };

  for (Obj c = 0; c < cat.object_count(); ++c) {
    const auto& reps = a.reps(c);
    const std::uint32_t n = om.size_at(c);
    for (std::uint32_t i = 0; i < n; ++i) {
      const MorMask s = om.mask_of(c, i);
      // every member (not only representatives): the value is a sieve and
      // depends only on the slice class
      for_each_bit(a.cls().members_into(c), [&](Mor m) {
        const MorMask v = a.act_on_mask(c, s, m);
        if (!is_sieve_mask(om, c, v))
          note(laws.sieve_valued, "acting by " + cat.morphism_name(m) + " leaves the classifier");
        else if (v != a.act_on_mask(c, s, cat.slice_rep(m)))
          note(laws.rep_independent,
               cat.morphism_name(m) + " and its representative act differently");
      });
      if (a.act(c, i, cat.identity(c)) != i) note(laws.unit, "identity action moves a sieve");
      for (Mor ma : reps)
        for (Mor mb : reps) {
          const Mor ab = a.monoid().product(c, ma, mb);
          if (a.act(c, i, ab) != a.act(c, a.act(c, i, ma), mb))
            note(laws.mixed_associative,
                 "action by " + cat.morphism_name(ab) + " is not iterated action");
          if (a.act(c, a.act(c, i, ma), mb) != a.act(c, a.act(c, i, mb), ma))
            note(laws.commutes, "iterated actions do not commute");
        }
      // naturality along every arrow into c
      for_each_bit(cat.arrows_into(c), [&](Mor k) {
        for (Mor m : reps) {
          auto sq = cat.pullback(m, k);
          if (!sq) {
            note(laws.natural, "no pullback of " + cospan_label(cat, m, k));
            continue;
          }
          if (om.restrict_sieve(k, a.act(c, i, m)) !=
              a.act(cat.dom(k), om.restrict_sieve(k, i), sq->into_dg))
            note(laws.natural, "restriction along " + cat.morphism_name(k) +
                                   " does not commute with acting by " + cat.morphism_name(m));
        }
      });
    }
  }
  return laws;
}

std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> w_mu(const OmegaAction& a) {
  const FinCat& cat = a.cat();
  const OmegaPresheaf& om = a.omega();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> w(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c) {
    const auto& reps = a.reps(c);
    for (std::uint32_t i = 0; i < om.size_at(c); ++i) {
      const MorMask s = om.mask_of(c, i);
      for (std::uint32_t r = 0; r < reps.size(); ++r) {
        bool all = true;
        for_each_bit(cat.arrows_into(c), [&](Mor h) {
          if (!mask_test(s, slice_product_of(cat, reps[r], h))) all = false;
        });
        if (all) w[c].push_back({i, r});
      }
    }
  }
  return w;
}

FrameSubactReport frame_and_subact_checks(const OmegaAction& a) {
  const FinCat& cat = a.cat();
  const OmegaPresheaf& om = a.omega();
  FrameSubactReport rep;
  rep.meet_equivariant = rep.join_equivariant = rep.top_fixed = rep.bottom_fixed = true;
  rep.omega_jm_subact = rep.w_by_both_routes = true;
  auto note = [&](bool& flag, const std::string& what) {
    flag = false;
    rep.issues.push_back(what);
  };

  const Subpresheaf fixed = omega_j(topology_from_m(om, a.cls()));
  for (Obj c = 0; c < cat.object_count(); ++c) {
    const std::uint32_t n = om.size_at(c);
    for (Mor m : a.reps(c)) {
      if (a.act(c, om.true_at(c), m) != om.true_at(c))
        note(rep.top_fixed, "maximal sieve moves under " + cat.morphism_name(m));
      if (a.act(c, om.empty_at(c), m) != om.empty_at(c))
        note(rep.bottom_fixed, "empty sieve moves under " + cat.morphism_name(m));
      for (std::uint32_t i = 0; i < n; ++i) {
        if (fixed.contains(c, i) && !fixed.contains(c, a.act(c, i, m)))
          note(rep.omega_jm_subact, "fixed sieve leaves the class topology under " +
                                        cat.morphism_name(m) + " at " + cat.object_name(c));
        for (std::uint32_t j = 0; j < n; ++j) {
          if (a.act(c, om.meet(c, i, j), m) != om.meet(c, a.act(c, i, m), a.act(c, j, m)))
            note(rep.meet_equivariant, "meet is not equivariant at " + cat.object_name(c));
          if (a.act(c, om.join(c, i, j), m) != om.join(c, a.act(c, i, m), a.act(c, j, m)))
            note(rep.join_equivariant, "join is not equivariant at " + cat.object_name(c));
        }
      }
    }
  }

  // W by its defining condition against the dual description S·m = t(c)
  const auto w = w_mu(a);
  for (Obj c = 0; c < cat.object_count(); ++c) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> dual;
    const auto& reps = a.reps(c);
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      for (std::uint32_t r = 0; r < reps.size(); ++r)
        if (a.act(c, i, reps[r]) == om.true_at(c)) dual.push_back({i, r});
    if (dual != w[c])
      note(rep.w_by_both_routes, "the two descriptions of W differ at " + cat.object_name(c));
  }

  // the all-monos structure, when its pullbacks exist
  const AdmissibleClass monos = all_monos_class(cat);
  rep.jsub_available = !missing_member_cospan(monos).has_value();
  if (rep.jsub_available) {
    rep.omega_jsub_subact = rep.sub_poset_monotone = true;
    const OmegaAction sub(om, monos);
    const Subpresheaf fixed_sub = omega_j(sub_topology(om, cat));
    for (Obj c = 0; c < cat.object_count(); ++c) {
      const std::uint32_t n = om.size_at(c);
      for (std::uint32_t i = 0; i < n; ++i) {
        if (!fixed_sub.contains(c, i)) continue;
        for (Mor m : a.reps(c))
          if (!fixed_sub.contains(c, a.act(c, i, m)))
            note(rep.omega_jsub_subact, "jSub-fixed sieve escapes under the class action at " +
                                            cat.object_name(c));
        for (Mor m : sub.reps(c))
          if (!fixed_sub.contains(c, sub.act(c, i, m)))
            note(rep.omega_jsub_subact,
                 "jSub-fixed sieve escapes under a mono at " + cat.object_name(c));
        // monotonicity on the jSub-fixed sieves, both arguments growing
        for (std::uint32_t j = 0; j < n; ++j) {
          if (!fixed_sub.contains(c, j) || !om.leq(c, i, j)) continue;
          for (Mor m : sub.reps(c))
            for (Mor mn : sub.reps(c)) {
              if (!cat.slice_leq(m, mn)) continue;
              if (!om.leq(c, sub.act(c, i, m), sub.act(c, j, mn)))
                note(rep.sub_poset_monotone,
                     "acting is not monotone on the jSub-fixed sieves at " + cat.object_name(c));
            }
        }
      }
    }
  }
  return rep;
}

bool true_pullback_action_closed(const OmegaAction& a, const OmegaEndo& phi) {
  if (phi.omega != &a.omega()) throw InputError("endomorphism lives over a different classifier");
  const FinCat& cat = a.cat();
  const OmegaPresheaf& om = a.omega();
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t i = 0; i < om.size_at(c); ++i) {
      if (phi.apply(c, i) != om.true_at(c)) continue;
      for (Mor m : a.reps(c))
        if (phi.apply(c, a.act(c, i, m)) != om.true_at(c)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Equivariance

EquivarianceReport equivariance_check(const OmegaAction& a, const OmegaEndo& j) {
  if (j.omega != &a.omega()) throw InputError("endomorphism lives over a different classifier");
  const FinCat& cat = a.cat();
  const OmegaPresheaf& om = a.omega();
  EquivarianceReport rep;
  rep.forward = rep.backward = true;
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      for (Mor m : a.reps(c)) {
        const std::uint32_t of_acted = j.apply(c, a.act(c, i, m));  // j(S·m)
        const std::uint32_t acted = a.act(c, j.apply(c, i), m);     // j(S)·m
        const bool fwd = om.leq(c, of_acted, acted);
        const bool bwd = om.leq(c, acted, of_acted);
        if ((!fwd || !bwd) && rep.witness.empty())
          rep.witness = "at " + cat.object_name(c) + ", sieve " +
                        sieve_label(cat, om.mask_of(c, i)) + ", member " + cat.morphism_name(m);
        rep.forward = rep.forward && fwd;
        rep.backward = rep.backward && bwd;
      }
  rep.equivariant = rep.forward && rep.backward;
  return rep;
}

std::vector<TheoremAudit> equivariance_audits(const OmegaAction& a) {
  const FinCat& cat = a.cat();
  const OmegaPresheaf& om = a.omega();
  const StructuralPredicates preds = cat.structural_predicates();
  std::vector<TheoremAudit> rows;

  const auto nn = equivariance_check(a, double_negation(cat, om));
  rows.push_back({"nn.fwd", "none (unconditional)", true, nn.forward});
  rows.push_back({"nn.bwd", "pullback completion", preds.pullback_completion, nn.backward});

  const auto jm = equivariance_check(a, topology_from_m(om, a.cls()));
  rows.push_back({"jM.fwd", "none (unconditional)", true, jm.forward});
  rows.push_back({"jM.bwd", "class-restricted pullback completion",
                  cat.m_pullback_completion(a.cls().arrows), jm.backward});

  for (const Ideal& ideal : enumerate_ideals(cat, om)) {
    const auto ji = equivariance_check(a, weak_ideal_topology(ideal, om));
    const bool stable = is_ideal_pullback_stable(ideal);
    const bool converse = is_ideal_pullback_stable_converse(ideal);
    const std::string tag = "jI:" + ideal.name;
    rows.push_back({tag + ".stable=>bwd", "ideal stable under pullbacks", stable, ji.backward});
    rows.push_back({tag + ".stable=>fwd", "ideal stable under pullbacks", stable, ji.forward});
    rows.push_back({tag + ".converse=>bwd", "converse stability", converse, ji.backward});
    rows.push_back({tag + ".converse=>fwd", "converse stability", converse, ji.forward});
    rows.push_back({tag + ".completion+converse=>fwd", "pullback completion and converse stability",
                    preds.pullback_completion && converse, ji.forward});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Translation families

FamilyReport validate_family(const OmegaPresheaf& om, const std::vector<Mor>& f) {
  const FinCat& cat = *om.cat;
  FamilyReport rep;
  rep.shape = f.size() == cat.object_count();
  if (rep.shape)
    for (Obj c = 0; c < cat.object_count(); ++c)
      if (cat.cod(f[c]) != c) rep.shape = false;
  if (!rep.shape) {
    rep.issues.push_back("one designated arrow into each object is required");
    return rep;
  }

  rep.law = true;
  rep.sufficient_condition = true;
  for (Mor g = 0; g < cat.morphism_count(); ++g) {
    const Obj c = cat.dom(g), d = cat.cod(g);
    auto sq = cat.pullback(f[d], g);
    if (!sq || !cat.slice_iso(sq->into_dg, f[c])) rep.sufficient_condition = false;
    for (std::uint32_t i = 0; i < om.size_at(d); ++i) {
      const MorMask s = om.mask_of(d, i);
      const MorMask pulled = om.mask_of(c, om.restrict_sieve(g, i));
      MorMask lhs = 0, rhs = 0;
      try {
        for_each_bit(cat.arrows_into(c), [&](Mor h) {
          if (mask_test(pulled, slice_product_of(cat, f[c], h))) lhs |= MorMask{1} << h;
          if (mask_test(s, slice_product_of(cat, f[d], cat.compose(g, h)))) rhs |= MorMask{1} << h;
        });
      } catch (const InputError& e) {
        rep.law = false;
        rep.issues.push_back(std::string(e.what()) + " (along " + cat.morphism_name(g) + ")");
        continue;
      }
      if (lhs != rhs) {
        rep.law = false;
        rep.issues.push_back("translating along " + cat.morphism_name(g) +
                             " disagrees with restriction on sieve " + sieve_label(cat, s));
      }
    }
  }
  return rep;
}

TranslationFamily make_family(const OmegaPresheaf& om, std::vector<Mor> f, std::string name) {
  const auto rep = validate_family(om, f);
  if (!rep.valid())
    throw InputError("not a translation family: " +
                     (rep.issues.empty() ? std::string("shape") : rep.issues.front()));
  TranslationFamily out;
  out.cat = om.cat;
  out.name = std::move(name);
  out.f = std::move(f);
  return out;
}

TranslationFamily identity_family(const FinCat& cat) {
  TranslationFamily out;
  out.cat = &cat;
  out.name = "ids";
  out.f.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c) out.f[c] = cat.identity(c);
  return out;
}

OmegaEndo translations_alpha(const OmegaPresheaf& om, const TranslationFamily& F) {
  const FinCat& cat = *om.cat;
  OmegaEndo j;
  j.omega = &om;
  j.name = "alpha:" + F.name;
  j.comp.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c) {
    j.comp[c].resize(om.size_at(c));
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      j.comp[c][i] = om.index_of(c, act_mask(cat, c, om.mask_of(c, i), F.f[c]));
  }
  return j;
}

bool family_idempotent(const TranslationFamily& F) {
  const FinCat& cat = *F.cat;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    auto sq = cat.slice_product(F.f[c], F.f[c]);
    if (!sq || !cat.slice_iso(*sq, F.f[c])) return false;
  }
  return true;
}

bool alpha_idempotency_witnesses(const OmegaPresheaf& om, const TranslationFamily& F) {
  const FinCat& cat = *om.cat;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    const Mor fc = F.f[c];
    const Mor fc2 = slice_product_of(cat, fc, fc);
    for (std::uint32_t i = 0; i < om.size_at(c); ++i) {
      const MorMask s = om.mask_of(c, i);
      bool ok = true;
      for_each_bit(cat.arrows_into(c), [&](Mor h) {
        if (!mask_test(s, slice_product_of(cat, fc, h))) return;  // h outside alpha(S)
        if (mask_test(s, slice_product_of(cat, fc, h)) !=
            mask_test(s, slice_product_of(cat, fc2, h)))
          ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

WeakGrothendieck alpha_grothendieck(const OmegaPresheaf& om, const TranslationFamily& F) {
  const FinCat& cat = *om.cat;
  WeakGrothendieck J;
  J.omega = &om;
  J.covers.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t i = 0; i < om.size_at(c); ++i) {
      const MorMask s = om.mask_of(c, i);
      bool covers = true;
      for_each_bit(cat.arrows_into(c), [&](Mor h) {
        const Mor d = slice_product_of(cat, F.f[c], h);
        for_each_bit(cat.arrows_into(cat.dom(d)), [&](Mor k) {
          if (!mask_test(s, cat.compose(d, k))) covers = false;
        });
      });
      if (covers) J.covers[c].push_back(i);
    }
  return J;
}

Subpresheaf alpha_closure(const TranslationFamily& F, const Presheaf& host,
                          const Subpresheaf& G) {
  const FinCat& cat = *F.cat;
  Subpresheaf out = empty_sub(host);
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t x = 0; x < host.size_at(c); ++x) {
      bool keep = true;
      for_each_bit(cat.arrows_into(c), [&](Mor h) {
        const Mor d = slice_product_of(cat, F.f[c], h);
        if (!G.contains(cat.dom(d), host.restrict_elem(d, x))) keep = false;
      });
      if (keep) out.at[c].set(x);
    }
  return out;
}

MorMask lambda_eval(const FinCat& cat, Mor m, Mor g, MorMask s) {
  if (cat.cod(g) != cat.cod(m))
    throw InputError("lambda: " + cat.morphism_name(g) + " and " + cat.morphism_name(m) +
                     " must share a codomain");
  auto sq = cat.pullback(m, g);
  if (!sq) throw InputError("no pullback of " + cospan_label(cat, m, g));
  return act_mask(cat, cat.dom(g), s, sq->into_dg);
}

}  // namespace fintopos
