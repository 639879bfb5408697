#include "fintopos/presheaf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fintopos {

namespace {

// Arrows E -> c in increasing index order; fixes element order for yoneda().
std::vector<Mor> hom_list(const FinCat& cat, Obj e, Obj c) {
  std::vector<Mor> out;
  for (Mor f = 0; f < cat.morphism_count(); ++f)
    if (cat.dom(f) == e && cat.cod(f) == c) out.push_back(f);
  return out;
}

std::uint32_t position_of(const std::vector<Mor>& v, Mor m) {
  return static_cast<std::uint32_t>(std::find(v.begin(), v.end(), m) - v.begin());
}

std::string flat_key(const std::vector<ElemSet>& at) {
  std::string k;
  for (const auto& s : at) {
    for (std::size_t i = 0; i < s.size(); ++i) k += s.test(i) ? '1' : '0';
    k += '|';
  }
  return k;
}

void require_same_parent(const Subpresheaf& a, const Subpresheaf& b) {
  if (a.parent != b.parent) throw InputError("subpresheaf arguments have different parents");
}

// The subpresheaf generated by a single element: its restrictions along
// every arrow into the carrier object (one pass is enough, since a
// restriction of a restriction is a restriction along a composite).
void add_element_closure(const Presheaf& F, Obj c, std::uint32_t x, std::vector<ElemSet>& at) {
  at[c].set(x);
  const FinCat& cat = *F.cat;
  for (Mor h : cat.arrows_into_list(c)) at[cat.dom(h)].set(F.restr[h][x]);
}

}  // namespace

std::size_t Presheaf::total_elements() const {
  std::size_t n = 0;
  for (const auto& e : elems) n += e.size();
  return n;
}

PresheafReport validate_presheaf(const Presheaf& F) {
  PresheafReport rep;
  const FinCat& cat = *F.cat;
  if (F.elems.size() != cat.object_count() || F.restr.size() != cat.morphism_count()) {
    rep.issues.push_back({"size-mismatch", "object or morphism table has wrong length"});
    return rep;
  }
  for (Mor f = 0; f < cat.morphism_count(); ++f) {
    if (F.restr[f].size() != F.size_at(cat.cod(f))) {
      rep.issues.push_back({"size-mismatch", "restriction along " + cat.morphism_name(f)});
      continue;
    }
    for (std::uint32_t x : F.restr[f])
      if (x >= F.size_at(cat.dom(f)))
        rep.issues.push_back({"size-mismatch",
                              "restriction along " + cat.morphism_name(f) + " leaves the domain"});
  }
  if (!rep.valid()) return rep;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    Mor id = cat.identity(c);
    for (std::uint32_t x = 0; x < F.size_at(c); ++x)
      if (F.restr[id][x] != x)
        rep.issues.push_back({"identity-row", cat.morphism_name(id) + " moves " + F.elems[c][x]});
  }
  for (Mor f = 0; f < cat.morphism_count(); ++f)
    for (Mor g = 0; g < cat.morphism_count(); ++g) {
      if (cat.dom(g) != cat.cod(f)) continue;
      Mor gf = cat.compose(g, f);
      for (std::uint32_t x = 0; x < F.size_at(cat.cod(g)); ++x)
        if (F.restr[gf][x] != F.restr[f][F.restr[g][x]])
          rep.issues.push_back({"functoriality", cat.morphism_name(g) + " after " +
                                                     cat.morphism_name(f) + " at element " +
                                                     F.elems[cat.cod(g)][x]});
    }
  return rep;
}

Presheaf yoneda(const FinCat& cat, Obj c) {
  Presheaf F;
  F.name = "y(" + cat.object_name(c) + ")";
  F.cat = &cat;
  F.elems.resize(cat.object_count());
  std::vector<std::vector<Mor>> homs(cat.object_count());
  for (Obj e = 0; e < cat.object_count(); ++e) {
    homs[e] = hom_list(cat, e, c);
    for (Mor m : homs[e]) F.elems[e].push_back(cat.morphism_name(m));
  }
  F.restr.resize(cat.morphism_count());
  for (Mor f = 0; f < cat.morphism_count(); ++f) {
    const auto& src = homs[cat.cod(f)];
    const auto& dst = homs[cat.dom(f)];
    F.restr[f].reserve(src.size());
    for (Mor h : src) F.restr[f].push_back(position_of(dst, cat.compose(h, f)));
  }
  return F;
}

Presheaf empty_presheaf(const FinCat& cat) {
  Presheaf F;
  F.name = "0";
  F.cat = &cat;
  F.elems.resize(cat.object_count());
  F.restr.resize(cat.morphism_count());
  return F;
}

Presheaf singleton_presheaf(const FinCat& cat) {
  Presheaf F;
  F.name = "1";
  F.cat = &cat;
  F.elems.assign(cat.object_count(), {"*"});
  F.restr.assign(cat.morphism_count(), {0});
  return F;
}

Presheaf product_presheaf(const Presheaf& F, const Presheaf& G) {
  if (F.cat != G.cat) throw InputError("product of presheaves over different categories");
  const FinCat& cat = *F.cat;
  Presheaf P;
  P.name = F.name + "x" + G.name;
  P.cat = &cat;
  P.elems.resize(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (const auto& a : F.elems[c])
      for (const auto& b : G.elems[c]) P.elems[c].push_back("(" + a + "," + b + ")");
  P.restr.resize(cat.morphism_count());
  for (Mor f = 0; f < cat.morphism_count(); ++f) {
    Obj s = cat.cod(f), d = cat.dom(f);
    std::uint32_t gw = static_cast<std::uint32_t>(G.size_at(d));
    for (std::uint32_t a = 0; a < F.size_at(s); ++a)
      for (std::uint32_t b = 0; b < G.size_at(s); ++b)
        P.restr[f].push_back(F.restr[f][a] * gw + G.restr[f][b]);
  }
  return P;
}

std::optional<std::uint32_t> label_index(const Presheaf& F, Obj c, const std::string& label) {
  for (std::uint32_t i = 0; i < F.size_at(c); ++i)
    if (F.elems[c][i] == label) return i;
  return std::nullopt;
}

std::size_t Subpresheaf::count() const {
  std::size_t n = 0;
  for (const auto& s : at) n += s.count();
  return n;
}

Subpresheaf empty_sub(const Presheaf& F) {
  Subpresheaf G;
  G.parent = &F;
  for (Obj c = 0; c < F.cat->object_count(); ++c) G.at.emplace_back(F.size_at(c));
  return G;
}

Subpresheaf full_sub(const Presheaf& F) {
  Subpresheaf G = empty_sub(F);
  for (auto& s : G.at) s.set();
  return G;
}

bool is_subpresheaf(const Subpresheaf& G) {
  const Presheaf& F = *G.parent;
  const FinCat& cat = *F.cat;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    if (G.at[c].size() != F.size_at(c)) return false;
    for (std::uint32_t x = 0; x < F.size_at(c); ++x) {
      if (!G.at[c].test(x)) continue;
      for (Mor h : cat.arrows_into_list(c))
        if (!G.at[cat.dom(h)].test(F.restr[h][x])) return false;
    }
  }
  return true;
}

Subpresheaf sub_closure(const Presheaf& F, std::vector<ElemSet> seed) {
  Subpresheaf G = empty_sub(F);
  for (Obj c = 0; c < F.cat->object_count(); ++c)
    for (std::uint32_t x = 0; x < seed[c].size(); ++x)
      if (seed[c].test(x)) add_element_closure(F, c, x, G.at);
  return G;
}

Subpresheaf sub_generated(const Presheaf& F, Obj c, std::uint32_t x) {
  Subpresheaf G = empty_sub(F);
  add_element_closure(F, c, x, G.at);
  return G;
}

std::vector<Subpresheaf> enumerate_subpresheaves(const Presheaf& F, const Caps& caps) {
  if (F.total_elements() > caps.max_elements)
    throw CapError("presheaf has " + std::to_string(F.total_elements()) +
                   " elements, cap is " + std::to_string(caps.max_elements));
  const FinCat& cat = *F.cat;

  std::vector<std::vector<ElemSet>> closures;  // per (object, element), flattened
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t x = 0; x < F.size_at(c); ++x) {
      std::vector<ElemSet> at;
      for (Obj d = 0; d < cat.object_count(); ++d) at.emplace_back(F.size_at(d));
      add_element_closure(F, c, x, at);
      closures.push_back(std::move(at));
    }

  std::map<std::string, std::vector<ElemSet>> seen;
  std::vector<ElemSet> bottom;
  for (Obj c = 0; c < cat.object_count(); ++c) bottom.emplace_back(F.size_at(c));
  seen.emplace(flat_key(bottom), bottom);
  std::vector<std::vector<ElemSet>> frontier{bottom};
  constexpr std::size_t kEnumGuard = 1u << 20;
  while (!frontier.empty()) {
    std::vector<std::vector<ElemSet>> next;
    for (const auto& cur : frontier)
      for (const auto& cl : closures) {
        auto cand = cur;
        for (Obj c = 0; c < cat.object_count(); ++c) cand[c] |= cl[c];
        auto key = flat_key(cand);
        if (seen.emplace(key, cand).second) next.push_back(cand);
        if (seen.size() > kEnumGuard)
          throw CapError("subpresheaf enumeration exceeded " + std::to_string(kEnumGuard));
      }
    frontier = std::move(next);
  }

  std::vector<Subpresheaf> out;
  for (auto& [key, at] : seen) {
    Subpresheaf G;
    G.parent = &F;
    G.at = at;
    out.push_back(std::move(G));
  }
  std::stable_sort(out.begin(), out.end(), [](const Subpresheaf& a, const Subpresheaf& b) {
    return a.count() < b.count();
  });
  return out;
}

bool sub_equal(const Subpresheaf& a, const Subpresheaf& b) {
  require_same_parent(a, b);
  return a.at == b.at;
}

bool sub_leq(const Subpresheaf& a, const Subpresheaf& b) {
  require_same_parent(a, b);
  for (std::size_t c = 0; c < a.at.size(); ++c)
    if ((a.at[c] & ~b.at[c]).any()) return false;
  return true;
}

Subpresheaf sub_meet(const Subpresheaf& a, const Subpresheaf& b) {
  require_same_parent(a, b);
  Subpresheaf r = a;
  for (std::size_t c = 0; c < r.at.size(); ++c) r.at[c] &= b.at[c];
  return r;
}

Subpresheaf sub_join(const Subpresheaf& a, const Subpresheaf& b) {
  require_same_parent(a, b);
  Subpresheaf r = a;
  for (std::size_t c = 0; c < r.at.size(); ++c) r.at[c] |= b.at[c];
  return r;
}

Subpresheaf sub_implies(const Subpresheaf& g, const Subpresheaf& h) {
  require_same_parent(g, h);
  const Presheaf& F = *g.parent;
  const FinCat& cat = *F.cat;
  Subpresheaf r = empty_sub(F);
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t x = 0; x < F.size_at(c); ++x) {
      bool keep = true;
      for (Mor k : cat.arrows_into_list(c)) {
        std::uint32_t xx = F.restr[k][x];
        Obj d = cat.dom(k);
        if (g.at[d].test(xx) && !h.at[d].test(xx)) {
          keep = false;
          break;
        }
      }
      if (keep) r.at[c].set(x);
    }
  return r;
}

Subpresheaf sub_neg(const Subpresheaf& g) { return sub_implies(g, empty_sub(*g.parent)); }

Subpresheaf sub_neg_direct(const Subpresheaf& g) {
  const Presheaf& F = *g.parent;
  const FinCat& cat = *F.cat;
  Subpresheaf r = empty_sub(F);
  for (Obj c = 0; c < cat.object_count(); ++c)
    for (std::uint32_t x = 0; x < F.size_at(c); ++x) {
      bool keep = true;
      for (Mor k : cat.arrows_into_list(c))
        if (g.at[cat.dom(k)].test(F.restr[k][x])) {
          keep = false;
          break;
        }
      if (keep) r.at[c].set(x);
    }
  return r;
}

Presheaf sub_as_presheaf(const Subpresheaf& G, const std::string& name) {
  const Presheaf& F = *G.parent;
  const FinCat& cat = *F.cat;
  Presheaf P;
  P.name = name;
  P.cat = &cat;
  P.elems.resize(cat.object_count());
  std::vector<std::vector<std::uint32_t>> renumber(cat.object_count());
  for (Obj c = 0; c < cat.object_count(); ++c) {
    renumber[c].assign(F.size_at(c), 0);
    for (std::uint32_t x = 0; x < F.size_at(c); ++x)
      if (G.at[c].test(x)) {
        renumber[c][x] = static_cast<std::uint32_t>(P.elems[c].size());
        P.elems[c].push_back(F.elems[c][x]);
      }
  }
  P.restr.resize(cat.morphism_count());
  for (Mor f = 0; f < cat.morphism_count(); ++f) {
    Obj s = cat.cod(f), d = cat.dom(f);
    for (std::uint32_t x = 0; x < F.size_at(s); ++x)
      if (G.at[s].test(x)) P.restr[f].push_back(renumber[d][F.restr[f][x]]);
  }
  return P;
}

NatTransReport validate_nat_trans(const NatTrans& a) {
  NatTransReport rep;
  const Presheaf& F = *a.source;
  const Presheaf& G = *a.target;
  if (F.cat != G.cat) {
    rep.failing.push_back("source and target live over different categories");
    return rep;
  }
  const FinCat& cat = *F.cat;
  if (a.comp.size() != cat.object_count()) {
    rep.failing.push_back("component count mismatch");
    return rep;
  }
  for (Obj c = 0; c < cat.object_count(); ++c) {
    if (a.comp[c].size() != F.size_at(c)) {
      rep.failing.push_back("component at " + cat.object_name(c) + " has wrong length");
      return rep;
    }
    for (std::uint32_t v : a.comp[c])
      if (v >= G.size_at(c)) {
        rep.failing.push_back("component at " + cat.object_name(c) + " leaves the target");
        return rep;
      }
  }
  for (Mor f = 0; f < cat.morphism_count(); ++f) {
    Obj c = cat.cod(f), d = cat.dom(f);
    for (std::uint32_t x = 0; x < F.size_at(c); ++x)
      if (G.restr[f][a.comp[c][x]] != a.comp[d][F.restr[f][x]])
        rep.failing.push_back("square for " + cat.morphism_name(f) + " at element " +
                              F.elems[c][x]);
  }
  return rep;
}

NatTrans identity_nat(const Presheaf& F) {
  NatTrans a;
  a.source = &F;
  a.target = &F;
  for (Obj c = 0; c < F.cat->object_count(); ++c) {
    std::vector<std::uint32_t> row(F.size_at(c));
    for (std::uint32_t i = 0; i < row.size(); ++i) row[i] = i;
    a.comp.push_back(std::move(row));
  }
  return a;
}

Subpresheaf sub_preimage(const NatTrans& a, const Subpresheaf& h) {
  if (h.parent != a.target) throw InputError("preimage: subobject does not live in the target");
  const Presheaf& F = *a.source;
  Subpresheaf out = empty_sub(F);
  for (Obj c = 0; c < F.cat->object_count(); ++c)
    for (std::uint32_t x = 0; x < F.size_at(c); ++x)
      if (h.at[c].test(a.comp[c][x])) out.at[c].set(x);
  return out;
}

NatTrans yoneda_map(const Presheaf& from, const Presheaf& to, Mor h) {
  const FinCat& cat = *from.cat;
  NatTrans a;
  a.source = &from;
  a.target = &to;
  for (Obj e = 0; e < cat.object_count(); ++e) {
    auto src = hom_list(cat, e, cat.dom(h));
    auto dst = hom_list(cat, e, cat.cod(h));
    std::vector<std::uint32_t> row;
    for (Mor g : src) row.push_back(position_of(dst, cat.compose(h, g)));
    a.comp.push_back(std::move(row));
  }
  return a;
}

}  // namespace fintopos
