#include "fintopos/admissible.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fintopos {

namespace {

constexpr std::uint32_t kNoIndex = 0xffffffffu;

std::string plabel(const FinCat& cat, const PartialMap& p) {
  return "[(" + cat.morphism_name(p.m) + ", " + cat.morphism_name(p.f) + ")]";
}

// One pass of the closure rules; returns true when the mask grew.
bool close_once(const FinCat& cat, MorMask& arrows) {
  MorMask before = arrows;
  for_each_bit(before, [&](Mor f) {
    for_each_bit(before, [&](Mor g) {
      if (cat.composable(g, f)) arrows |= mask_bit(cat.compose(g, f));
    });
  });
  for_each_bit(before, [&](Mor m) {
    for_each_bit(cat.arrows_into(cat.cod(m)), [&](Mor k) {
      if (auto pb = cat.pullback(m, k)) arrows |= mask_bit(pb->into_dg);
    });
  });
  return arrows != before;
}

MorMask class_closure(const FinCat& cat, MorMask seed) {
  MorMask arrows = seed;
  for (Obj c = 0; c < cat.object_count(); ++c) arrows |= mask_bit(cat.identity(c));
  while (close_once(cat, arrows)) {
  }
  return arrows;
}

}  // namespace

AdmissibleReport validate_admissible(const FinCat& cat, MorMask arrows) {
  AdmissibleReport rep;
  for_each_bit(arrows, [&](Mor m) {
    if (!cat.is_mono(m))
      rep.issues.push_back({"monic", cat.morphism_name(m) + " is not a monomorphism"});
  });
  for (Obj c = 0; c < cat.object_count(); ++c)
    if (!mask_test(arrows, cat.identity(c)))
      rep.issues.push_back({"identities", "missing identity of " + cat.object_name(c)});
  for_each_bit(arrows, [&](Mor f) {
    for_each_bit(arrows, [&](Mor g) {
      if (cat.composable(g, f) && !mask_test(arrows, cat.compose(g, f)))
        rep.issues.push_back({"composition", cat.morphism_name(g) + " after " +
                                                 cat.morphism_name(f) + " escapes"});
    });
  });
  for_each_bit(arrows, [&](Mor m) {
    for_each_bit(cat.arrows_into(cat.cod(m)), [&](Mor k) {
      auto pb = cat.pullback(m, k);
      if (pb && !mask_test(arrows, pb->into_dg))
        rep.issues.push_back({"pullback", "leg " + cat.morphism_name(pb->into_dg) + " of " +
                                              cat.morphism_name(m) + " along " +
                                              cat.morphism_name(k) + " escapes"});
    });
  });
  return rep;
}

AdmissibleClass make_admissible(const FinCat& cat, MorMask arrows, std::string name) {
  auto rep = validate_admissible(cat, arrows);
  if (!rep.valid())
    throw InputError("not an admissible class: " + rep.issues.front().axiom + ", " +
                     rep.issues.front().detail);
  if (name.empty()) name = sieve_label(cat, arrows);
  return AdmissibleClass{&cat, std::move(name), arrows};
}

AdmissibleClass identities_class(const FinCat& cat) {
  MorMask m = 0;
  for (Obj c = 0; c < cat.object_count(); ++c) m |= mask_bit(cat.identity(c));
  return AdmissibleClass{&cat, "ids", m};
}

AdmissibleClass all_monos_class(const FinCat& cat) {
  return AdmissibleClass{&cat, "monos", cat.monos()};
}

std::vector<AdmissibleClass> enumerate_admissible_classes(const FinCat& cat, const Caps& caps) {
  std::set<MorMask> seen;
  std::vector<MorMask> queue{class_closure(cat, 0)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    MorMask cur = queue[head];
    for_each_bit(cat.monos() & ~cur, [&](Mor m) {
      MorMask grown = class_closure(cat, cur | mask_bit(m));
      if (seen.insert(grown).second) {
        if (seen.size() > caps.max_sieves_per_object)
          throw CapError("admissible classes exceed cap");
        queue.push_back(grown);
      }
    });
  }
  std::vector<MorMask> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](MorMask a, MorMask b) {
    auto ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<AdmissibleClass> out;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    out.push_back(AdmissibleClass{&cat, "M" + std::to_string(i), sorted[i]});
  return out;
}

std::optional<std::pair<Mor, Mor>> missing_member_cospan(const AdmissibleClass& cls) {
  const FinCat& cat = *cls.cat;
  for (Mor m = 0; m < cat.morphism_count(); ++m) {
    if (!cls.contains(m)) continue;
    for (Mor k : cat.arrows_into_list(cat.cod(m)))
      if (!cat.pullback(m, k)) return std::make_pair(m, k);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The presheaf M

std::uint32_t ClassPresheaf::rep_index(Obj c, Mor m) const {
  Mor r = cls.cat->slice_rep(m);
  auto it = std::find(reps[c].begin(), reps[c].end(), r);
  if (it == reps[c].end())
    throw InputError("no representative of " + cls.cat->morphism_name(m) + " at " +
                     cls.cat->object_name(c));
  return static_cast<std::uint32_t>(it - reps[c].begin());
}

ClassPresheaf m_presheaf(const AdmissibleClass& cls) {
  const FinCat& cat = *cls.cat;
  ClassPresheaf out;
  out.cls = cls;
  out.reps.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c) {
    for_each_bit(cls.members_into(c),
                 [&](Mor m) { out.reps[c].push_back(cat.slice_rep(m)); });
    std::sort(out.reps[c].begin(), out.reps[c].end());
    out.reps[c].erase(std::unique(out.reps[c].begin(), out.reps[c].end()), out.reps[c].end());
  }
  Presheaf& pre = out.pre;
  pre.name = "M:" + cls.name;
  pre.cat = &cat;
  pre.elems.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (Mor m : out.reps[c]) pre.elems[c].push_back(cat.morphism_name(m));
  pre.restr.resize(cat.morphism_count());
  for (Mor f = 0; f < cat.morphism_count(); ++f) {
    Obj d = cat.dom(f), c = cat.cod(f);
    for (Mor m : out.reps[c]) {
      auto pb = cat.pullback(m, f);
      if (!pb)
        throw InputError("class " + cls.name + " has no pullback of " + cat.morphism_name(m) +
                         " along " + cat.morphism_name(f));
      pre.restr[f].push_back(out.rep_index(d, pb->into_dg));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quantifier spaces

QuantSpace::QuantSpace(const FinCat& cat, Presheaf x, Obj c)
    : cat_(&cat), c_(c), x_(std::move(x)) {
  Presheaf yc = yoneda(cat, c);
  prod_ = std::make_unique<Presheaf>(product_presheaf(yc, x_));
  arrow_.resize(cat.object_count());
  aidx_.assign(cat.morphism_count(), kNoIndex);
  for (Obj d = 0; d < cat.object_count(); ++d) {
    for_each_bit(cat.hom(d, c), [&](Mor f) {
      aidx_[f] = static_cast<std::uint32_t>(arrow_[d].size());
      arrow_[d].push_back(f);
    });
  }
}

Subpresheaf QuantSpace::sigma(MorMask s) const {
  Subpresheaf u = empty_sub(*prod_);
  for (Obj d = 0; d < cat_->object_count(); ++d)
    for (std::uint32_t a = 0; a < arrow_[d].size(); ++a) {
      if (!mask_test(s, arrow_[d][a])) continue;
      for (std::uint32_t b = 0; b < x_.size_at(d); ++b) u.at[d].set(pair_index(d, a, b));
    }
  return u;
}

MorMask QuantSpace::exists_of(const Subpresheaf& u) const {
  MorMask s = 0;
  for (Obj d = 0; d < cat_->object_count(); ++d)
    for (std::uint32_t a = 0; a < arrow_[d].size(); ++a)
      for (std::uint32_t b = 0; b < x_.size_at(d); ++b)
        if (u.at[d].test(pair_index(d, a, b))) s |= mask_bit(arrow_[d][a]);
  return s;
}

MorMask QuantSpace::forall_of(const Subpresheaf& u) const {
  MorMask s = 0;
  for (Obj d = 0; d < cat_->object_count(); ++d)
    for (Mor f : arrow_[d]) {
      bool all = true;
      for (Mor h : cat_->arrows_into_list(d)) {
        Obj e = cat_->dom(h);
        std::uint32_t a = aidx_[cat_->compose(f, h)];
        for (std::uint32_t b = 0; all && b < x_.size_at(e); ++b)
          all = u.at[e].test(pair_index(e, a, b));
        if (!all) break;
      }
      if (all) s |= mask_bit(f);
    }
  return s;
}

Subpresheaf QuantSpace::t_of(const Subpresheaf& u) const { return sigma(exists_of(u)); }

Subpresheaf QuantSpace::true_rel() const { return sigma(cat_->arrows_into(c_)); }

OmegaEndo forall_sigma(const OmegaPresheaf& om, const Presheaf& x) {
  const FinCat& cat = *om.cat;
  OmegaEndo j;
  j.omega = &om;
  j.name = "forall_sigma:" + x.name;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    QuantSpace qs(cat, x, c);
    std::vector<std::uint32_t> row;
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      row.push_back(om.index_of(c, qs.forall_of(qs.sigma(om.mask_of(c, i)))));
    j.comp.push_back(std::move(row));
  }
  return j;
}

// ---------------------------------------------------------------------------
// MCalculus

MCalculus::MCalculus(const FinCat& cat, const AdmissibleClass& cls)
    : cat_(&cat), mp_(m_presheaf(cls)) {
  for (Obj c = 0; c < cat.object_count(); ++c)
    spaces_.push_back(std::make_unique<QuantSpace>(cat, mp_.pre, c));
}

Subpresheaf MCalculus::mu(Obj c, MorMask s) const {
  const QuantSpace& qs = space(c);
  Subpresheaf u = empty_sub(qs.space());
  for (Obj d = 0; d < cat_->object_count(); ++d)
    for_each_bit(cat_->hom(d, c), [&](Mor f) {
      std::uint32_t a = qs.arrow_index(f);
      for (std::uint32_t b = 0; b < mp_.reps[d].size(); ++b)
        if (mask_test(s, cat_->compose(f, mp_.reps[d][b]))) u.at[d].set(qs.pair_index(d, a, b));
    });
  return u;
}

Subpresheaf MCalculus::rel_pullback(Obj c, const Subpresheaf& u, Mor f) const {
  if (u.parent != &space(c).space())
    throw InputError("rel_pullback: relation does not live over " + cat_->object_name(c));
  if (cat_->cod(f) != c) throw InputError("rel_pullback: arrow must land in the base");
  Obj d = cat_->dom(f);
  const QuantSpace& qc = space(c);
  const QuantSpace& qd = space(d);
  Subpresheaf v = empty_sub(qd.space());
  for (Obj e = 0; e < cat_->object_count(); ++e)
    for_each_bit(cat_->hom(e, d), [&](Mor h) {
      std::uint32_t a = qc.arrow_index(cat_->compose(f, h));
      std::uint32_t ad = qd.arrow_index(h);
      for (std::uint32_t b = 0; b < mp_.reps[e].size(); ++b)
        if (u.at[e].test(qc.pair_index(e, a, b))) v.at[e].set(qd.pair_index(e, ad, b));
    });
  return v;
}

MorMask MCalculus::char_of(const OmegaPresheaf& om, Obj c, const Subpresheaf& u) const {
  MorMask s = 0;
  for (Mor f : cat_->arrows_into_list(c)) {
    Obj d = cat_->dom(f);
    Subpresheaf pulled = rel_pullback(c, u, f);
    for (std::uint32_t i = 0; i < om.size_at(d); ++i)
      if (sub_equal(pulled, mu(d, om.mask_of(d, i)))) {
        s |= mask_bit(f);
        break;
      }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Class topologies

OmegaEndo topology_from_m(const OmegaPresheaf& om, const AdmissibleClass& cls) {
  const FinCat& cat = *om.cat;
  OmegaEndo j;
  j.omega = &om;
  j.name = "jM:" + cls.name;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    std::vector<std::uint32_t> row;
    for (std::uint32_t i = 0; i < om.size_at(c); ++i) {
      MorMask s = om.mask_of(c, i), out = 0;
      for (Mor f : cat.arrows_into_list(c))
        for_each_bit(cls.members_into(cat.dom(f)), [&](Mor g) {
          if (mask_test(s, cat.compose(f, g))) out |= mask_bit(f);
        });
      row.push_back(om.index_of(c, out));
    }
    j.comp.push_back(std::move(row));
  }
  return j;
}

OmegaEndo topology_from_m_via_mu(const MCalculus& mc, const OmegaPresheaf& om) {
  const FinCat& cat = mc.cat();
  OmegaEndo j;
  j.omega = &om;
  j.name = "jMmu:" + mc.cls().name;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    std::vector<std::uint32_t> row;
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      row.push_back(om.index_of(c, mc.space(c).exists_of(mc.mu(c, om.mask_of(c, i)))));
    j.comp.push_back(std::move(row));
  }
  return j;
}

WeakGrothendieck m_grothendieck(const OmegaPresheaf& om, const AdmissibleClass& cls) {
  WeakGrothendieck J;
  J.omega = &om;
  for (Obj c = 0; c < om.cat->object_count(); ++c) {
    std::vector<std::uint32_t> covers;
    for (std::uint32_t i = 0; i < om.size_at(c); ++i)
      if (om.mask_of(c, i) & cls.members_into(c)) covers.push_back(i);
    J.covers.push_back(std::move(covers));
  }
  return J;
}

OmegaEndo sub_topology(const OmegaPresheaf& om, const FinCat& cat) {
  OmegaEndo j = topology_from_m(om, all_monos_class(cat));
  j.name = "jSub";
  return j;
}

// ---------------------------------------------------------------------------
// Partial maps

bool partial_equal(const FinCat& cat, const PartialMap& a, const PartialMap& b) {
  if (cat.cod(a.m) != cat.cod(b.m) || cat.cod(a.f) != cat.cod(b.f)) return false;
  if (a.m == b.m && a.f == b.f) return true;
  bool found = false;
  for_each_bit(cat.hom(cat.dom(b.m), cat.dom(a.m)), [&](Mor theta) {
    if (cat.is_iso(theta) && cat.compose(a.m, theta) == b.m && cat.compose(a.f, theta) == b.f)
      found = true;
  });
  return found;
}

PartialMap compose_partial(const FinCat& cat, const PartialMap& q, const PartialMap& p) {
  if (cat.cod(p.f) != cat.cod(q.m))
    throw InputError("partial maps " + plabel(cat, q) + " and " + plabel(cat, p) +
                     " are not composable");
  auto pb = cat.pullback(p.f, q.m);
  if (!pb)
    throw InputError("no pullback of (" + cat.morphism_name(p.f) + ", " +
                     cat.morphism_name(q.m) + ") for composing partial maps");
  return PartialMap{cat.compose(p.m, pb->into_df), cat.compose(q.f, pb->into_dg)};
}

std::vector<PartialMap> partial_maps_of(const FinCat& cat, const AdmissibleClass& cls, Obj c,
                                        MorMask s) {
  std::vector<PartialMap> out;
  for (Mor f : cat.arrows_into_list(c))
    for_each_bit(cls.members_into(cat.dom(f)), [&](Mor m) {
      Mor fm = cat.compose(f, m);
      if (!mask_test(s, fm)) return;
      PartialMap pm{m, fm};
      for (const PartialMap& q : out)
        if (partial_equal(cat, q, pm)) return;
      out.push_back(pm);
    });
  return out;
}

PartialCategoryReport partial_category_check(const FinCat& cat, const AdmissibleClass& cls) {
  PartialCategoryReport rep;
  std::vector<PartialMap> arrows;
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (const PartialMap& p : partial_maps_of(cat, cls, c, cat.arrows_into(c)))
      arrows.push_back(p);
  rep.arrows = arrows.size();

  auto member = [&](const PartialMap& p) {
    for (const PartialMap& q : arrows)
      if (partial_equal(cat, q, p)) return true;
    return false;
  };

  rep.identities = true;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    PartialMap idp{cat.identity(c), cat.identity(c)};
    if (!member(idp)) {
      rep.identities = false;
      rep.issues.push_back("missing identity partial map at " + cat.object_name(c));
    }
  }

  rep.closed = true;
  for (const PartialMap& p : arrows)
    for (const PartialMap& q : arrows) {
      if (partial_target(cat, p) != partial_source(cat, q)) continue;
      try {
        if (!member(compose_partial(cat, q, p))) {
          rep.closed = false;
          rep.issues.push_back("composite of " + plabel(cat, q) + " after " + plabel(cat, p) +
                               " escapes");
        }
      } catch (const InputError& e) {
        rep.closed = false;
        rep.issues.push_back(e.what());
      }
    }

  rep.associative = true;
  for (const PartialMap& p : arrows)
    for (const PartialMap& q : arrows) {
      if (partial_target(cat, p) != partial_source(cat, q)) continue;
      for (const PartialMap& r : arrows) {
        if (partial_target(cat, q) != partial_source(cat, r)) continue;
        try {
          PartialMap left = compose_partial(cat, r, compose_partial(cat, q, p));
          PartialMap right = compose_partial(cat, compose_partial(cat, r, q), p);
          if (!partial_equal(cat, left, right)) {
            rep.associative = false;
            rep.issues.push_back("associativity fails at " + plabel(cat, r) + ", " +
                                 plabel(cat, q) + ", " + plabel(cat, p));
          }
        } catch (const InputError& e) {
          rep.associative = false;
          rep.issues.push_back(e.what());
        }
      }
    }
  return rep;
}

}  // namespace fintopos
