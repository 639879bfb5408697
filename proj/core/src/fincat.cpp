#include "fintopos/fincat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fintopos {

// ---------------------------------------------------------------------------
// CatBuilder

CatBuilder& CatBuilder::object(const std::string& obj, const std::string& identity_name) {
  objects_.push_back(obj);
  identities_.push_back(identity_name.empty() ? "id_" + obj : identity_name);
  return *this;
}

CatBuilder& CatBuilder::arrow(const std::string& name, const std::string& dom,
                              const std::string& cod) {
  arrows_.push_back({name, dom, cod});
  return *this;
}

CatBuilder& CatBuilder::compose_rule(const std::string& g, const std::string& f,
                                     const std::string& gf) {
  rules_.push_back({g, f, gf});
  return *this;
}

RawCategory CatBuilder::raw() const {
  RawCategory r;
  r.name = name_;
  r.objects = objects_;
  r.identities = identities_;
  for (std::size_t i = 0; i < objects_.size(); ++i)
    r.morphisms.push_back({identities_[i], objects_[i], objects_[i]});
  for (const auto& a : arrows_) r.morphisms.push_back(a);

  auto has_rule = [&](const std::string& g, const std::string& f) {
    for (const auto& e : r.composites)
      if (e.g == g && e.f == f) return true;
    return false;
  };
  r.composites = rules_;
  // identity composites, implicit unless overridden
  for (const auto& m : r.morphisms) {
    auto dom_it = std::find(objects_.begin(), objects_.end(), m.dom);
    auto cod_it = std::find(objects_.begin(), objects_.end(), m.cod);
    if (dom_it != objects_.end()) {
      const std::string& idd = identities_[dom_it - objects_.begin()];
      if (!has_rule(m.name, idd)) r.composites.push_back({m.name, idd, m.name});
    }
    if (cod_it != objects_.end()) {
      const std::string& idc = identities_[cod_it - objects_.begin()];
      if (m.name != idc && !has_rule(idc, m.name))
        r.composites.push_back({idc, m.name, m.name});
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Validation

std::string CategoryReport::summary() const {
  std::ostringstream os;
  os << issues.size() << " issue(s)";
  for (const auto& i : issues) os << "; " << i.kind << ": " << i.detail;
  return os.str();
}

namespace {

struct Resolved {
  std::map<std::string, Obj> obj;
  std::map<std::string, Mor> mor;
  std::vector<Obj> dom, cod;
  std::vector<Mor> identity;
  std::vector<Mor> table;  // g * n + f, kNoMor = undefined
  bool usable = true;      // name resolution succeeded, table well-formed
};

Resolved resolve(const RawCategory& raw, CategoryReport& rep) {
  Resolved rs;
  auto issue = [&](const char* kind, std::string detail) {
    rep.issues.push_back({kind, std::move(detail)});
  };

  for (std::size_t i = 0; i < raw.objects.size(); ++i) {
    if (!rs.obj.emplace(raw.objects[i], static_cast<Obj>(i)).second) {
      issue("duplicate-name", "object '" + raw.objects[i] + "'");
      rs.usable = false;
    }
  }
  for (std::size_t i = 0; i < raw.morphisms.size(); ++i) {
    const auto& m = raw.morphisms[i];
    if (!rs.mor.emplace(m.name, static_cast<Mor>(i)).second) {
      issue("duplicate-name", "morphism '" + m.name + "'");
      rs.usable = false;
    }
  }
  if (!rs.usable) return rs;

  rs.dom.resize(raw.morphisms.size());
  rs.cod.resize(raw.morphisms.size());
  for (std::size_t i = 0; i < raw.morphisms.size(); ++i) {
    const auto& m = raw.morphisms[i];
    auto d = rs.obj.find(m.dom), c = rs.obj.find(m.cod);
    if (d == rs.obj.end()) {
      issue("dangling-reference", "morphism '" + m.name + "' has unknown dom '" + m.dom + "'");
      rs.usable = false;
    } else {
      rs.dom[i] = d->second;
    }
    if (c == rs.obj.end()) {
      issue("dangling-reference", "morphism '" + m.name + "' has unknown cod '" + m.cod + "'");
      rs.usable = false;
    } else {
      rs.cod[i] = c->second;
    }
  }

  if (raw.identities.size() != raw.objects.size()) {
    issue("bad-identity", "expected one identity per object");
    rs.usable = false;
  } else {
    rs.identity.resize(raw.objects.size());
    for (std::size_t i = 0; i < raw.identities.size(); ++i) {
      auto it = rs.mor.find(raw.identities[i]);
      if (it == rs.mor.end()) {
        issue("dangling-reference", "identity '" + raw.identities[i] + "' is not a morphism");
        rs.usable = false;
      } else {
        rs.identity[i] = it->second;
        if (rs.usable &&
            (rs.dom[it->second] != i || rs.cod[it->second] != i)) {
          issue("bad-identity", "identity '" + raw.identities[i] + "' is not an endo-arrow of '" +
                                    raw.objects[i] + "'");
        }
      }
    }
  }
  if (!rs.usable) return rs;

  const std::size_t n = raw.morphisms.size();
  rs.table.assign(n * n, kNoMor);
  for (const auto& e : raw.composites) {
    auto g = rs.mor.find(e.g), f = rs.mor.find(e.f), gf = rs.mor.find(e.gf);
    if (g == rs.mor.end() || f == rs.mor.end() || gf == rs.mor.end()) {
      issue("dangling-reference", "composite entry (" + e.g + ", " + e.f + ", " + e.gf + ")");
      rs.usable = false;
      continue;
    }
    if (rs.cod[f->second] != rs.dom[g->second]) {
      issue("non-composable-entry", e.g + " after " + e.f);
      continue;
    }
    Mor& slot = rs.table[g->second * n + f->second];
    if (slot != kNoMor && slot != gf->second) {
      issue("duplicate-entry", e.g + " after " + e.f + " given twice with different results");
      continue;
    }
    slot = gf->second;
    if (rs.dom[gf->second] != rs.dom[f->second] || rs.cod[gf->second] != rs.cod[g->second])
      issue("non-composable-entry",
            "composite " + e.gf + " of " + e.g + " after " + e.f + " has the wrong endpoints");
  }
  return rs;
}

}  // namespace

CategoryReport validate_category(const RawCategory& raw, const Caps& caps) {
  if (raw.morphisms.size() > caps.max_morphisms || raw.morphisms.size() > 64)
    throw CapError("category '" + raw.name + "' has " + std::to_string(raw.morphisms.size()) +
                   " morphisms, cap is " + std::to_string(std::min<std::size_t>(caps.max_morphisms, 64)));

  CategoryReport rep;
  Resolved rs = resolve(raw, rep);
  if (!rs.usable) return rep;

  const std::size_t n = raw.morphisms.size();
  auto name = [&](Mor i) { return raw.morphisms[i].name; };

  for (Mor g = 0; g < n; ++g)
    for (Mor f = 0; f < n; ++f)
      if (rs.cod[f] == rs.dom[g] && rs.table[g * n + f] == kNoMor)
        rep.issues.push_back({"missing-composite", name(g) + " after " + name(f)});

  for (Mor f = 0; f < n; ++f) {
    Mor idd = rs.identity[rs.dom[f]], idc = rs.identity[rs.cod[f]];
    Mor r = rs.table[f * n + idd];
    if (r != kNoMor && r != f)
      rep.issues.push_back({"identity-law", name(f) + " after " + name(idd) + " = " + name(r)});
    Mor l = rs.table[idc * n + f];
    if (l != kNoMor && l != f)
      rep.issues.push_back({"identity-law", name(idc) + " after " + name(f) + " = " + name(l)});
  }

  // associativity over all composable triples (skip where the table has holes)
  for (Mor h = 0; h < n; ++h)
    for (Mor g = 0; g < n; ++g) {
      if (rs.cod[g] != rs.dom[h]) continue;
      Mor hg = rs.table[h * n + g];
      for (Mor f = 0; f < n; ++f) {
        if (rs.cod[f] != rs.dom[g]) continue;
        Mor gf = rs.table[g * n + f];
        if (hg == kNoMor || gf == kNoMor) continue;
        Mor a = rs.table[hg * n + f], b = rs.table[h * n + gf];
        if (a != kNoMor && b != kNoMor && a != b)
          rep.issues.push_back(
              {"associativity", "(" + name(h) + " " + name(g) + ") " + name(f) + " = " + name(a) +
                                    " but " + name(h) + " (" + name(g) + " " + name(f) +
                                    ") = " + name(b)});
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// FinCat

FinCat FinCat::build(const RawCategory& raw, const Caps& caps) {
  CategoryReport rep = validate_category(raw, caps);
  if (!rep.valid())
    throw InputError("category '" + raw.name + "' is invalid: " + rep.summary());

  FinCat c;
  c.name_ = raw.name;
  c.caps_ = caps;
  c.obj_names_ = raw.objects;
  const std::size_t n = raw.morphisms.size();
  c.mor_names_.reserve(n);
  CategoryReport scratch;
  Resolved rs = resolve(raw, scratch);
  for (const auto& m : raw.morphisms) c.mor_names_.push_back(m.name);
  c.dom_ = rs.dom;
  c.cod_ = rs.cod;
  c.identity_ = rs.identity;
  c.table_ = rs.table;

  c.into_.assign(c.obj_names_.size(), 0);
  c.outof_.assign(c.obj_names_.size(), 0);
  for (Mor f = 0; f < n; ++f) {
    c.all_ |= mask_bit(f);
    c.into_[c.cod_[f]] |= mask_bit(f);
    c.outof_[c.dom_[f]] |= mask_bit(f);
  }
  c.into_list_.resize(c.obj_names_.size());
  for (Obj o = 0; o < c.obj_names_.size(); ++o)
    for_each_bit(c.into_[o], [&](Mor f) { c.into_list_[o].push_back(f); });

  // monos: left-cancellable arrows
  for (Mor f = 0; f < n; ++f) {
    bool mono = true;
    for_each_bit(c.into_[c.dom_[f]], [&](Mor g) {
      for_each_bit(c.into_[c.dom_[f]], [&](Mor h) {
        if (g != h && c.dom_[g] == c.dom_[h] && c.compose(f, g) == c.compose(f, h)) mono = false;
      });
    });
    if (mono) c.mono_ |= mask_bit(f);
  }
  // isos: two-sided inverses
  for (Mor f = 0; f < n; ++f) {
    for_each_bit(c.hom(c.cod_[f], c.dom_[f]), [&](Mor g) {
      if (c.compose(f, g) == c.identity_[c.cod_[f]] && c.compose(g, f) == c.identity_[c.dom_[f]])
        c.iso_ |= mask_bit(f);
    });
  }

  // canonical representative of each slice-isomorphism class
  c.slice_rep_.assign(n, kNoMor);
  for (Mor m = 0; m < n; ++m) {
    Mor rep = m;
    for_each_bit(c.into_[c.cod_[m]], [&](Mor k) {
      if (k < rep && c.slice_iso(m, k)) rep = k;
    });
    c.slice_rep_[m] = rep;
  }

  // chosen terminal: first object with singleton homs from everywhere
  for (Obj t = 0; t < c.obj_names_.size() && !c.terminal_; ++t) {
    bool ok = true;
    for (Obj x = 0; x < c.obj_names_.size(); ++x)
      if (std::popcount(c.hom(x, t)) != 1) ok = false;
    if (ok) c.terminal_ = t;
  }

  c.build_limits();
  return c;
}

Mor FinCat::compose(Mor g, Mor f) const {
  if (!composable(g, f)) throw std::logic_error("compose: arrows not composable");
  Mor r = table_[g * mor_names_.size() + f];
  if (r == kNoMor) throw std::logic_error("compose: table hole");
  return r;
}

std::optional<Mor> FinCat::try_compose(Mor g, Mor f) const {
  if (!composable(g, f)) return std::nullopt;
  return table_[g * mor_names_.size() + f];
}

std::optional<Obj> FinCat::object_index(std::string_view name) const {
  for (Obj o = 0; o < obj_names_.size(); ++o)
    if (obj_names_[o] == name) return o;
  return std::nullopt;
}

std::optional<Mor> FinCat::morphism_index(std::string_view name) const {
  for (Mor f = 0; f < mor_names_.size(); ++f)
    if (mor_names_[f] == name) return f;
  return std::nullopt;
}

bool FinCat::slice_leq(Mor m, Mor n) const {
  if (cod_[m] != cod_[n]) return false;
  bool found = false;
  for_each_bit(hom(dom_[m], dom_[n]), [&](Mor k) {
    if (compose(n, k) == m) found = true;
  });
  return found;
}

bool FinCat::slice_iso(Mor m, Mor n) const {
  if (cod_[m] != cod_[n]) return false;
  bool found = false;
  for_each_bit(hom(dom_[m], dom_[n]) & iso_, [&](Mor theta) {
    if (compose(n, theta) == m) found = true;
  });
  return found;
}

bool FinCat::is_pullback_square(Mor f, Mor g, Obj apex, Mor into_df, Mor into_dg) const {
  if (cod_[f] != cod_[g]) return false;
  if (dom_[into_df] != apex || dom_[into_dg] != apex) return false;
  if (cod_[into_df] != dom_[f] || cod_[into_dg] != dom_[g]) return false;
  if (compose(f, into_df) != compose(g, into_dg)) return false;
  // universal property against every cone
  for (Obj t = 0; t < obj_names_.size(); ++t) {
    bool ok = true;
    for_each_bit(hom(t, dom_[f]), [&](Mor u) {
      for_each_bit(hom(t, dom_[g]), [&](Mor v) {
        if (compose(f, u) != compose(g, v)) return;
        int mediators = 0;
        for_each_bit(hom(t, apex), [&](Mor w) {
          if (compose(into_df, w) == u && compose(into_dg, w) == v) ++mediators;
        });
        if (mediators != 1) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

void FinCat::build_limits() {
  const std::size_t n = mor_names_.size();
  pb_.assign(n * n, SquareSlot{});
  for (Mor f = 0; f < n; ++f)
    for (Mor g = 0; g < n; ++g) {
      if (cod_[f] != cod_[g]) continue;
      SquareSlot& slot = pb_[f * n + g];
      for (Obj apex = 0; apex < obj_names_.size() && !slot.present; ++apex) {
        for_each_bit(hom(apex, dom_[f]), [&](Mor p) {
          if (slot.present) return;
          for_each_bit(hom(apex, dom_[g]), [&](Mor q) {
            if (slot.present) return;
            if (compose(f, p) != compose(g, q)) return;
            if (is_pullback_square(f, g, apex, p, q)) slot = {true, apex, p, q};
          });
        });
      }
    }
}

std::optional<PullbackSquare> FinCat::pullback(Mor f, Mor g) const {
  if (cod_[f] != cod_[g]) return std::nullopt;
  const SquareSlot& s = pb_[f * mor_names_.size() + g];
  if (!s.present) return std::nullopt;
  return PullbackSquare{f, g, s.apex, s.into_df, s.into_dg};
}

std::optional<Mor> FinCat::slice_product(Mor f, Mor g) const {
  auto sq = pullback(f, g);
  if (!sq) return std::nullopt;
  return compose(f, sq->into_df);
}

StructuralPredicates FinCat::structural_predicates() const {
  StructuralPredicates p;
  const std::size_t n = mor_names_.size();

  p.right_ore = true;
  for (Mor f = 0; f < n && p.right_ore; ++f)
    for (Mor g = 0; g < n && p.right_ore; ++g) {
      if (cod_[f] != cod_[g]) continue;
      bool completed = false;
      for (Mor u = 0; u < n && !completed; ++u) {
        if (cod_[u] != dom_[f]) continue;
        for_each_bit(hom(dom_[u], dom_[g]), [&](Mor v) {
          if (compose(f, u) == compose(g, v)) completed = true;
        });
      }
      if (!completed) p.right_ore = false;
    }

  p.finitely_complete = terminal_.has_value();
  for (Mor f = 0; f < n && p.finitely_complete; ++f)
    for (Mor g = 0; g < n && p.finitely_complete; ++g)
      if (cod_[f] == cod_[g] && !pb_[f * n + g].present) p.finitely_complete = false;

  p.pullback_completion = pullback_completion_witness().empty();
  return p;
}

std::string FinCat::pullback_completion_witness() const {
  const std::size_t n = mor_names_.size();
  for (Mor s = 0; s < n; ++s)
    for (Mor t = 0; t < n; ++t) {
      if (cod_[s] != dom_[t]) continue;
      bool done = false;
      for (Mor h = 0; h < n && !done; ++h) {  // right side, into cod t
        if (cod_[h] != cod_[t]) continue;
        for_each_bit(hom(dom_[s], dom_[h]), [&](Mor k) {
          if (done) return;
          if (compose(t, s) != compose(h, k)) return;
          if (is_pullback_square(t, h, dom_[s], s, k)) done = true;
        });
      }
      if (!done) return "(" + mor_names_[s] + ", " + mor_names_[t] + ")";
    }
  return "";
}

bool FinCat::m_pullback_completion(MorMask cls) const {
  const std::size_t n = mor_names_.size();
  for (Mor s = 0; s < n; ++s) {
    if (!mask_test(cls, s)) continue;
    for (Mor t = 0; t < n; ++t) {
      if (cod_[s] != dom_[t]) continue;
      bool done = false;
      for (Mor h = 0; h < n && !done; ++h) {
        if (!mask_test(cls, h) || cod_[h] != cod_[t]) continue;
        for_each_bit(hom(dom_[s], dom_[h]) & cls, [&](Mor k) {
          if (done) return;
          if (compose(t, s) != compose(h, k)) return;
          if (is_pullback_square(t, h, dom_[s], s, k)) done = true;
        });
      }
      if (!done) return false;
    }
  }
  return true;
}

}  // namespace fintopos
