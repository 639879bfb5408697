// End-to-end audit over the builtin fixture zoo.  Each numbered criterion
// prints a single PASS/FAIL verdict followed by its evidence.  Two criteria
// (3 and 5) assert externally supplied expected values that exhaustive
// enumeration refutes; they are implemented exactly as stated, fail honestly,
// and the analysis lines explain the computed ground truth.  The process
// exits 0 when every criterion lands on its documented verdict, so a
// regression in either direction flips the exit code.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fintopos/action.hpp"
#include "fintopos/admissible.hpp"
#include "fintopos/fincat.hpp"
#include "fintopos/fixtures.hpp"
#include "fintopos/ideal.hpp"
#include "fintopos/omega.hpp"
#include "fintopos/presheaf.hpp"
#include "fintopos/workspace.hpp"

using namespace fintopos;

namespace {

struct Criterion {
  int number = 0;
  std::string label;
  bool expected_pass = true;
  bool pass = true;
  int checks = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

// The fixtures are built once; everything downstream holds pointers into the
// category, so both live behind stable addresses.
struct Fix {
  std::unique_ptr<FinCat> cat;
  std::unique_ptr<OmegaPresheaf> om;
};

std::vector<Fix> make_zoo() {
  std::vector<Fix> out;
  for (const auto& raw : fixture_zoo()) {
    Fix f;
    f.cat = std::make_unique<FinCat>(FinCat::build(raw));
    f.om = std::make_unique<OmegaPresheaf>(build_omega(*f.cat));
    out.push_back(std::move(f));
  }
  return out;
}

const Fix& fix(const std::vector<Fix>& zoo, const std::string& name) {
  for (const auto& f : zoo)
    if (f.cat->name() == name) return f;
  throw InputError("no fixture named '" + name + "'");
}

Obj o(const FinCat& c, const std::string& n) { return *c.object_index(n); }
Mor m(const FinCat& c, const std::string& n) { return *c.morphism_index(n); }

MorMask arrows(const FinCat& c, std::initializer_list<const char*> names) {
  MorMask s = 0;
  for (const char* n : names) s |= mask_bit(m(c, n));
  return s;
}

std::vector<AdmissibleClass> workable_classes(const FinCat& cat) {
  std::vector<AdmissibleClass> out;
  for (const auto& cls : enumerate_admissible_classes(cat))
    if (!missing_member_cospan(cls)) out.push_back(cls);
  return out;
}

std::string ideal_desc(const FinCat& cat, const Ideal& ideal) {
  std::string s;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    if (c) s += ", ";
    s += cat.object_name(c) + ":" + sieve_label(cat, ideal.at[c]);
  }
  return s;
}

// ---- criterion bodies ------------------------------------------------------

void c1_zoo(Criterion& cr, const std::vector<Fix>& zoo) {
  for (const auto& raw : fixture_zoo()) {
    bool built = true;
    std::string why;
    try {
      (void)FinCat::build(raw);
    } catch (const std::exception& e) {
      built = false;
      why = e.what();
    }
    cr.check(built, "'" + raw.name + "' fails to validate: " + why);
  }
  const auto gp = fix(zoo, "gamma").cat->structural_predicates();
  const auto lp = fix(zoo, "l3").cat->structural_predicates();
  const auto dp = fix(zoo, "diamond").cat->structural_predicates();
  cr.check(!gp.finitely_complete, "'gamma' should not be finitely complete");
  cr.check(lp.finitely_complete && lp.right_ore, "'l3' should be finitely complete and right-Ore");
  cr.check(dp.finitely_complete && dp.right_ore,
           "'diamond' should be finitely complete and right-Ore");
  const auto mp = fix(zoo, "mon_e").cat->structural_predicates();
  cr.note("all 5 fixtures validate; gamma: finitely_complete=0 right_ore=" +
          std::to_string(gp.right_ore) + "; mon_e: finitely_complete=" +
          std::to_string(mp.finitely_complete) + " right_ore=" + std::to_string(mp.right_ore));
}

void c2_omega_census(Criterion& cr, const std::vector<Fix>& zoo) {
  const auto& g = fix(zoo, "gamma");
  cr.check(g.om->size_at(o(*g.cat, "N")) == 2, "gamma sieve count at N should be 2");
  cr.check(g.om->size_at(o(*g.cat, "A")) == 5, "gamma sieve count at A should be 5");
  const auto& l = fix(zoo, "l3");
  cr.check(l.om->size_at(o(*l.cat, "1")) == 4, "l3 sieve count at 1 should be 4");
  cr.check(l.om->size_at(o(*l.cat, "y")) == 3, "l3 sieve count at y should be 3");
  cr.check(l.om->size_at(o(*l.cat, "x")) == 2, "l3 sieve count at x should be 2");
  // cross-module oracle: sieves on c against subpresheaves of the
  // representable at c, counted by completely independent code paths
  for (const auto& f : zoo)
    for (Obj c = 0; c < f.cat->object_count(); ++c) {
      auto subs = enumerate_subpresheaves(yoneda(*f.cat, c));
      cr.check(subs.size() == f.om->size_at(c),
               "'" + f.cat->name() + "' at " + f.cat->object_name(c) + ": " +
                   std::to_string(subs.size()) + " subpresheaves of the representable vs " +
                   std::to_string(f.om->size_at(c)) + " sieves");
    }
}

void c3_ideal_census(Criterion& cr, const std::vector<Fix>& zoo) {
  const auto& g = fix(zoo, "gamma");
  auto gideals = enumerate_ideals(*g.cat, *g.om);
  cr.check(gideals.size() == 2, "expected exactly 2 ideals on 'gamma', enumeration finds " +
                                    std::to_string(gideals.size()));
  cr.note("computed ground truth: 'gamma' carries " + std::to_string(gideals.size()) +
          " ideals, not 2 —");
  for (const auto& ideal : gideals) cr.note("  " + ideal.name + ": " + ideal_desc(*g.cat, ideal));
  bool has_empty = false, has_listed = false;
  MorMask listed_n = arrows(*g.cat, {"id_N"});
  MorMask listed_a = arrows(*g.cat, {"s", "t"});
  for (const auto& ideal : gideals) {
    if (ideal.at[o(*g.cat, "N")] == 0 && ideal.at[o(*g.cat, "A")] == 0) has_empty = true;
    if (ideal.at[o(*g.cat, "N")] == listed_n && ideal.at[o(*g.cat, "A")] == listed_a)
      has_listed = true;
  }
  cr.note(std::string("the two expected ideals (empty, and {id_N}/{s,t}) ") +
          (has_empty && has_listed ? "are both present" : "are MISSING") +
          "; the count-2 claim omits e.g. the all-arrows ideal, which satisfies "
          "precomposition stability trivially");

  const auto& me = fix(zoo, "mon_e");
  auto mideals = enumerate_ideals(*me.cat, *me.om);
  cr.check(mideals.size() == 3,
           "'mon_e' should carry 3 ideals, found " + std::to_string(mideals.size()));
  std::set<MorMask> got;
  for (const auto& ideal : mideals) got.insert(ideal.at[0]);
  std::set<MorMask> want = {0, arrows(*me.cat, {"e"}), me.cat->arrows_into(0)};
  cr.check(got == want, "'mon_e' ideals should be exactly empty, {e}, and everything");

  std::size_t revalidated = 0;
  for (const auto& f : zoo)
    for (const auto& ideal : enumerate_ideals(*f.cat, *f.om)) {
      cr.check(validate_ideal(*f.cat, ideal.at).valid(),
               "'" + f.cat->name() + "' ideal " + ideal.name + " fails revalidation");
      ++revalidated;
    }
  cr.note("monoid clause and revalidation clause hold (" + std::to_string(revalidated) +
          " enumerated ideals revalidated across the zoo)");
}

void c4_closure_routes(Criterion& cr, const std::vector<Fix>& zoo) {
  std::size_t agreements = 0;
  for (const auto& f : zoo) {
    std::vector<Presheaf> pool;
    for (Obj c = 0; c < f.cat->object_count(); ++c) pool.push_back(yoneda(*f.cat, c));
    pool.push_back(f.om->pre);

    for (const auto& ideal : enumerate_ideals(*f.cat, *f.om)) {
      auto j = weak_ideal_topology(ideal, *f.om);
      bool closure_idem = true;
      for (const auto& F : pool) {
        for (const auto& G : enumerate_subpresheaves(F)) {
          auto direct = ideal_closure(ideal, F, G);
          if (!sub_equal(direct, closure_from_j(j, F, G))) {
            cr.check(false, "'" + f.cat->name() + "' ideal " + ideal.name + " on host '" +
                                F.name + "': direct closure differs from the route through j");
          } else {
            ++agreements;
          }
          if (!sub_equal(ideal_closure(ideal, F, direct), direct)) closure_idem = false;
        }
      }
      cr.check(closure_idem == ideal_is_idempotent(ideal),
               "'" + f.cat->name() + "' ideal " + ideal.name +
                   ": closure idempotence should equal I*I == I");
      auto flags = check_weak_topology(j);
      cr.check(flags.weak() && flags.productive,
               "'" + f.cat->name() + "' ideal " + ideal.name +
                   ": its operator should always be weak and productive");
      cr.check(flags.topology() == ideal_is_idempotent(ideal),
               "'" + f.cat->name() + "' ideal " + ideal.name +
                   ": full-topology flag should equal ideal idempotence");
    }
  }
  cr.note("both closure routes agree on " + std::to_string(agreements) +
          " (host, subpresheaf, ideal) triples; idempotence biconditional and operator "
          "flags hold for every enumerated ideal");
}

void c5_known_topologies(Criterion& cr, const std::vector<Fix>& zoo) {
  for (const auto& f : zoo) {
    cr.check(endo_equal(weak_ideal_topology(yoneda_ideal(*f.cat), *f.om), identity_endo(*f.om)),
             "'" + f.cat->name() + "': operator of the all-arrows ideal should be the identity");
    cr.check(
        endo_equal(weak_ideal_topology(zero_ideal(*f.cat), *f.om), constant_true_endo(*f.om)),
        "'" + f.cat->name() + "': operator of the empty ideal should be constantly true");
  }

  const auto& g = fix(zoo, "gamma");
  auto iprime =
      make_ideal(*g.cat, {arrows(*g.cat, {"id_N"}), arrows(*g.cat, {"s", "t"})}, "I'");
  auto jp = weak_ideal_topology(iprime, *g.om);
  bool is_identity = endo_equal(jp, identity_endo(*g.om));
  cr.check(is_identity, "'gamma': operator of the {id_N}/{s,t} ideal claimed equal to the "
                        "identity — exact endo equality does not hold");
  if (!is_identity) {
    for (Obj c = 0; c < g.cat->object_count(); ++c)
      for (std::uint32_t i = 0; i < g.om->size_at(c); ++i)
        if (jp.apply(c, i) != i)
          cr.note("counterexample: at " + g.cat->object_name(c) + " the sieve " +
                  sieve_label(*g.cat, g.om->mask_of(c, i)) + " maps to " +
                  sieve_label(*g.cat, g.om->mask_of(c, jp.apply(c, i))) +
                  " (id_N precomposed into {s,t} stays inside it, so the whole sieve "
                  "passes the density test)");
    cr.note("the operator agrees with the identity at every other point and is itself a "
            "productive idempotent topology: " +
            std::string(check_weak_topology(jp).topology() ? "confirmed" : "NOT confirmed"));
  }
  cr.check(endo_equal(weak_ideal_topology(zero_ideal(*g.cat), *g.om), constant_true_endo(*g.om)),
           "'gamma': operator of the empty ideal should be constantly true");
}

void c6_ideal_double_negation(Criterion& cr, const std::vector<Fix>& zoo) {
  std::size_t matched = 0, bounded = 0;
  for (const auto& f : zoo) {
    auto nn = double_negation(*f.cat, *f.om);
    for (const auto& ideal : enumerate_ideals(*f.cat, *f.om)) {
      if (!ideal_all_nonempty(ideal)) continue;
      cr.check(endo_equal(ideal_double_negation(ideal, *f.om), nn),
               "'" + f.cat->name() + "' ideal " + ideal.name +
                   ": relative double negation should equal plain double negation");
      ++matched;
      if (!ideal_is_idempotent(ideal)) continue;
      auto j = weak_ideal_topology(ideal, *f.om);
      bool below = true;
      for (Obj c = 0; c < f.cat->object_count(); ++c)
        for (std::uint32_t i = 0; i < f.om->size_at(c); ++i)
          if (!f.om->leq(c, j.apply(c, i), nn.apply(c, i))) below = false;
      cr.check(below, "'" + f.cat->name() + "' ideal " + ideal.name +
                          ": its topology should sit below double negation pointwise");
      ++bounded;
    }
  }
  cr.note(std::to_string(matched) + " everywhere-nonempty ideals match plain double negation; " +
          std::to_string(bounded) + " idempotent ones verified below it pointwise");
}

void c7_de_morgan(Criterion& cr, const std::vector<Fix>& zoo) {
  std::size_t swept = 0;
  bool saw_l3_all_arrows = false;
  for (const auto& f : zoo) {
    if (!f.cat->structural_predicates().right_ore) continue;
    for (const auto& ideal : enumerate_ideals(*f.cat, *f.om)) {
      if (!ideal_is_idempotent(ideal) || !ideal_all_nonempty(ideal)) continue;
      if (f.cat->name() == "l3" && ideal.at == yoneda_ideal(*f.cat).at) saw_l3_all_arrows = true;
      auto j = weak_ideal_topology(ideal, *f.om);
      auto cands = de_morgan_candidates(*f.cat, *f.om, j);
      std::vector<const Presheaf*> ptrs;
      for (const auto& p : cands) ptrs.push_back(&p);
      auto rep = de_morgan_check(j, ptrs);
      cr.check(rep.pass, "'" + f.cat->name() + "' ideal " + ideal.name +
                             ": a curated sheaf fails the complement-union law");
      ++swept;
    }
  }
  cr.check(saw_l3_all_arrows, "the sweep should include 'l3' with the all-arrows ideal");
  cr.note("complement-union law verified over curated sheaf candidates for " +
          std::to_string(swept) +
          " (right-Ore fixture, idempotent everywhere-nonempty ideal) pairs");
}

void c8_member_class_laws(Criterion& cr, const std::vector<Fix>& zoo) {
  std::size_t classes_checked = 0;
  for (const auto& f : zoo) {
    if (!f.cat->structural_predicates().finitely_complete) continue;
    const auto& cat = *f.cat;
    const auto& om = *f.om;
    auto nn = double_negation(cat, om);
    auto jsub = sub_topology(om, cat);

    for (const auto& cls : enumerate_admissible_classes(cat)) {
      cr.check(!missing_member_cospan(cls),
               "'" + cat.name() + "' class " + cls.name +
                   ": a finitely complete base should leave no member cospan unfilled");
      MCalculus mc(cat, cls);
      auto jm = topology_from_m(om, cls);

      for (Obj c = 0; c < cat.object_count(); ++c) {
        const QuantSpace& qs = mc.space(c);
        // direct image after the cylinder is the identity on sieves: every
        // member component holds its identity, so nothing is lost
        for (std::uint32_t i = 0; i < om.size_at(c); ++i) {
          MorMask s = om.mask_of(c, i);
          cr.check(qs.exists_of(qs.sigma(s)) == s,
                   "'" + cat.name() + "' class " + cls.name + " at " + cat.object_name(c) +
                       ": direct image after cylinder should fix " + sieve_label(cat, s));
        }
        // the T operator is idempotent and fixes the full relation
        for (const auto& u : enumerate_subpresheaves(qs.space()))
          cr.check(sub_equal(qs.t_of(qs.t_of(u)), qs.t_of(u)),
                   "'" + cat.name() + "' class " + cls.name + " at " + cat.object_name(c) +
                       ": T should be idempotent on relations");
        cr.check(sub_equal(qs.t_of(qs.true_rel()), qs.true_rel()),
                 "'" + cat.name() + "' class " + cls.name + " at " + cat.object_name(c) +
                     ": T should fix the full relation");
        // the witnessing relation: injective on sieves and natural in the stage
        cr.check(sub_equal(mc.mu(c, cat.arrows_into(c)), full_sub(qs.space())) &&
                     sub_equal(mc.mu(c, 0), empty_sub(qs.space())),
                 "'" + cat.name() + "' class " + cls.name + " at " + cat.object_name(c) +
                     ": witness relation endpoints");
        for (std::uint32_t i = 0; i < om.size_at(c); ++i)
          for (std::uint32_t k = i + 1; k < om.size_at(c); ++k)
            cr.check(!sub_equal(mc.mu(c, om.mask_of(c, i)), mc.mu(c, om.mask_of(c, k))),
                     "'" + cat.name() + "' class " + cls.name + " at " + cat.object_name(c) +
                         ": witness relation should be injective on sieves");
        for (std::uint32_t i = 0; i < om.size_at(c); ++i) {
          auto whole = mc.mu(c, om.mask_of(c, i));
          for (Mor g : cat.arrows_into_list(c)) {
            auto restricted =
                mc.mu(cat.dom(g), om.mask_of(cat.dom(g), om.restrict_sieve(g, i)));
            cr.check(sub_equal(mc.rel_pullback(c, whole, g), restricted),
                     "'" + cat.name() + "' class " + cls.name + " at " + cat.object_name(c) +
                         ": witness relation should restrict naturally along " +
                         cat.morphism_name(g));
          }
        }
      }

      cr.check(check_weak_topology(jm).topology(),
               "'" + cat.name() + "' class " + cls.name +
                   ": its density operator should pass the full topology test");
      cr.check(endo_equal(jm, topology_from_m_via_mu(mc, om)),
               "'" + cat.name() + "' class " + cls.name +
                   ": both routes to the density operator should agree");
      // growing the class grows the operator, so the all-monos class bounds
      // every class from above, and double negation bounds that
      cr.check(endo_leq(jm, jsub), "'" + cat.name() + "' class " + cls.name +
                                       ": class operator should sit below the mono operator");
      ++classes_checked;
    }
    cr.check(endo_leq(jsub, nn),
             "'" + cat.name() + "': the mono operator should sit below double negation");
  }

  const auto& l = fix(zoo, "l3");
  cr.check(endo_equal(sub_topology(*l.om, *l.cat), double_negation(*l.cat, *l.om)),
           "'l3': the mono operator should equal double negation exactly");
  cr.note("operator laws verified for " + std::to_string(classes_checked) +
          " admissible classes across the finitely complete fixtures; chain "
          "class <= monos <= double-negation holds pointwise, with equality at "
          "the top on 'l3'");
}

void c9_action_suite(Criterion& cr, const std::vector<Fix>& zoo) {
  std::size_t actions_checked = 0, fixed_sieves = 0;
  for (const auto& f : zoo) {
    const auto& cat = *f.cat;
    const auto& om = *f.om;
    auto nn = double_negation(cat, om);
    for (const auto& cls : workable_classes(cat)) {
      const std::string tag = "'" + cat.name() + "' class " + cls.name;
      cr.check(monoid_laws_check(monoid_on_m(cls)).valid(), tag + ": monoid laws");
      OmegaAction a(om, cls);
      cr.check(action_laws_check(a).valid(), tag + ": action axioms");

      auto frame = frame_and_subact_checks(a);
      cr.check(frame.meet_equivariant && frame.join_equivariant, tag + ": meet/join equivariance");
      cr.check(frame.top_fixed && frame.bottom_fixed, tag + ": top/bottom fixed by the action");
      cr.check(frame.omega_jm_subact, tag + ": class-fixed sieves should form a subact");
      if (frame.jsub_available) {
        cr.check(frame.omega_jsub_subact, tag + ": mono-fixed sieves should form a subact");
        cr.check(frame.sub_poset_monotone,
                 tag + ": the action on mono-fixed subobjects should be monotone");
      }
      cr.check(frame.w_by_both_routes, tag + ": the W set should agree by both routes");
      cr.check(frame.valid(), tag + ": aggregate frame/subact report");

      cr.check(equivariance_check(a, nn).forward,
               tag + ": double negation of a translate should land inside the translated "
                     "double negation");

      // fixed sieves are recovered from their cylinder through the
      // characteristic sieve of the witness relation
      MCalculus mc(cat, cls);
      auto jm = topology_from_m(om, cls);
      auto fixed = omega_j(jm);
      for (Obj c = 0; c < cat.object_count(); ++c) {
        const QuantSpace& qs = mc.space(c);
        for (std::uint32_t i = 0; i < om.size_at(c); ++i) {
          if (!fixed.contains(c, i)) continue;
          MorMask s = om.mask_of(c, i);
          cr.check((s & ~mc.char_of(om, c, qs.sigma(s))) == 0,
                   tag + " at " + cat.object_name(c) + ": fixed sieve " + sieve_label(cat, s) +
                       " should sit inside the characteristic sieve of its cylinder");
          ++fixed_sieves;
        }
      }
      ++actions_checked;
    }
  }

  const auto& l = fix(zoo, "l3");
  OmegaAction meets(*l.om, make_admissible(*l.cat, chain3_meets_class(*l.cat), "meets"));
  cr.check(equivariance_check(meets, double_negation(*l.cat, *l.om)).equivariant,
           "'l3' with the meets class: double negation should be fully equivariant");
  cr.note("monoid laws, action axioms, frame equivariance, subacts, and monotonicity hold "
          "for " +
          std::to_string(actions_checked) + " workable actions; cylinder extensivity checked on " +
          std::to_string(fixed_sieves) + " fixed sieves");
}

void c10_translation_suite(Criterion& cr, const std::vector<Fix>& zoo) {
  const auto& l = fix(zoo, "l3");
  const auto& cat = *l.cat;
  const auto& om = *l.om;

  auto members = chain3_base_family(cat);
  auto famrep = validate_family(om, members);
  cr.check(famrep.valid(), "'l3' base family should validate (shape and translation law)");
  auto fam = make_family(om, members, "base");
  auto alpha = translations_alpha(om, fam);

  auto flags = check_weak_topology(alpha);
  cr.check(flags.natural, "alpha should be natural");
  cr.check(flags.weak(), "alpha should fix true and distribute under meets");
  cr.check(flags.productive, "alpha should be productive");
  cr.check(family_idempotent(fam) && flags.idempotent,
           "poset arrows are monic, so the family and alpha should be idempotent");
  cr.check(alpha_idempotency_witnesses(om, fam),
           "family idempotence should biconditionally match alpha idempotence witnesses");
  for (const auto& cls : workable_classes(cat))
    cr.check(equivariance_check(OmegaAction(om, cls), alpha).equivariant,
             "alpha should commute with the '" + cls.name + "' action");

  for (const auto& f : zoo)
    cr.check(endo_equal(translations_alpha(*f.om, identity_family(*f.cat)), identity_endo(*f.om)),
             "'" + f.cat->name() + "': the identity family should give the identity operator");

  cr.check(alpha_grothendieck(om, fam).covers == grothendieck_from_j(alpha).covers,
           "alpha covers should agree with the generic cover rule");
  std::size_t agreements = 0;
  std::vector<Presheaf> hosts;
  for (Obj c = 0; c < cat.object_count(); ++c) hosts.push_back(yoneda(cat, c));
  hosts.push_back(om.pre);
  for (const auto& host : hosts)
    for (const auto& g : enumerate_subpresheaves(host)) {
      cr.check(sub_equal(alpha_closure(fam, host, g), closure_from_j(alpha, host, g)),
               "alpha closure should agree with the generic closure on host '" + host.name + "'");
      ++agreements;
    }
  cr.note("alpha on the chain is a natural productive idempotent topology commuting with "
          "every workable action; closure routes agree on " +
          std::to_string(agreements) + " subpresheaves");
}

void c11_cli(Criterion& cr) {
  // determinism: byte-identical reports on repeated runs and across a
  // save/reload round trip
  for (const auto& [name, text] : fixture_workspaces()) {
    auto ws = load_workspace_text(text, {}, name + ".json");
    auto r1 = run(ws, {"full-audit"});
    auto r2 = run(ws, {"full-audit"});
    cr.check(r1.json == r2.json && r1.text == r2.text,
             "'" + name + "': repeated full-audit reports should be byte-identical");
    auto ws2 = load_workspace_text(save_workspace(ws), {}, name + "-reloaded.json");
    auto r3 = run(ws2, {"full-audit"});
    cr.check(r1.json == r3.json, "'" + name + "': report should survive save/reload unchanged");
    cr.check(r1.exit_code == 0 && r1.pass, "'" + name + "': full-audit should exit 0");
  }

  auto g = load_workspace_text(R"({"generator":{"kind":"gamma"}})");
  cr.check(g.cat->name() == "gamma" && g.cat->object_count() == 2 &&
               g.cat->morphism_count() == 4,
           "builtin generator should load the parallel pair");

  auto l = load_workspace_text(R"({"generator":{"kind":"poset","le":[["x","y"],["y","1"]]}})");
  cr.check(l.cat->object_count() == 3 && l.cat->morphism_count() == 6,
           "poset generator should load the three-point chain");
  cr.check(l.cat->object_index("x").has_value() && l.cat->object_index("1").has_value() &&
               l.cat->morphism_index("x<=1").has_value(),
           "poset generator should close the chain transitively");

  bool rejected = false;
  std::string msg;
  try {
    (void)load_workspace_text(
        R"({"generator":{"kind":"monoid","elements":["1","e"],"unit":"1","table":[]}})");
  } catch (const InputError& e) {
    rejected = true;
    msg = e.what();
  }
  cr.check(rejected, "a monoid table missing a product entry should be rejected at load time");
  if (rejected) cr.note("monoid rejection message: " + msg);
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  auto run_criterion = [&](int number, bool expected_pass, const std::string& label,
                           const std::function<void(Criterion&)>& body) {
    Criterion cr;
    cr.number = number;
    cr.label = label;
    cr.expected_pass = expected_pass;
    try {
      body(cr);
    } catch (const std::exception& e) {
      cr.pass = false;
      cr.notes.push_back(std::string("unexpected exception: ") + e.what());
    }
    results.push_back(std::move(cr));
  };

  std::vector<Fix> zoo;
  try {
    zoo = make_zoo();
  } catch (const std::exception& e) {
    std::printf("fixture construction failed: %s\n", e.what());
    return 1;
  }

  run_criterion(1, true, "fixture zoo validates; structural predicates match hand-derived values",
                [&](Criterion& cr) { c1_zoo(cr, zoo); });
  run_criterion(2, true, "sieve census and the representable-subpresheaf cross-check",
                [&](Criterion& cr) { c2_omega_census(cr, zoo); });
  run_criterion(3, false, "ideal census (documented discrepancy: the parallel pair carries 7 "
                          "ideals, not the claimed 2)",
                [&](Criterion& cr) { c3_ideal_census(cr, zoo); });
  run_criterion(4, true, "closure route agreement, idempotence biconditional, operator flags",
                [&](Criterion& cr) { c4_closure_routes(cr, zoo); });
  run_criterion(5, false, "known-topology identities (documented discrepancy: the {id_N}/{s,t} "
                          "ideal's operator is not the identity)",
                [&](Criterion& cr) { c5_known_topologies(cr, zoo); });
  run_criterion(6, true, "relative double negation collapses for everywhere-nonempty ideals",
                [&](Criterion& cr) { c6_ideal_double_negation(cr, zoo); });
  run_criterion(7, true, "complement-union law on right-Ore fixtures",
                [&](Criterion& cr) { c7_de_morgan(cr, zoo); });
  run_criterion(8, true, "member-class operator laws and the operator chain",
                [&](Criterion& cr) { c8_member_class_laws(cr, zoo); });
  run_criterion(9, true, "monoid action laws, frame equivariance, subacts, extensivity",
                [&](Criterion& cr) { c9_action_suite(cr, zoo); });
  run_criterion(10, true, "translation-family operator suite",
                [&](Criterion& cr) { c10_translation_suite(cr, zoo); });
  run_criterion(11, true, "workspace loading, report determinism, zoo full-audit",
                [&](Criterion& cr) { c11_cli(cr); });

  int mismatches = 0;
  int passed = 0;
  for (const auto& cr : results) {
    if (cr.pass) ++passed;
    std::printf("criterion %2d: %s — %s\n", cr.number, cr.pass ? "PASS" : "FAIL",
                cr.label.c_str());
    for (const auto& n : cr.notes) std::printf("    %s\n", n.c_str());
    if (cr.pass != cr.expected_pass) {
      ++mismatches;
      std::printf("    *** expected this criterion to %s — investigate ***\n",
                  cr.expected_pass ? "PASS" : "FAIL");
    }
  }
  std::printf("%d of %zu criteria pass; criteria asserting refuted counts/identities are "
              "expected to fail and are analyzed above\n",
              passed, results.size());
  std::printf("verdict: %s\n", mismatches == 0 ? "ACCEPT (every criterion matches its documented "
                                                 "verdict)"
                                               : "REJECT (verdict drift)");
  return mismatches == 0 ? 0 : 1;
}
