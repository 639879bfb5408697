#include "fintopos/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fintopos/fixtures.hpp"

namespace fintopos {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

void expect_object(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object");
}

void expect_array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) fail(where, "unknown key '" + it.key() + "'");
  }
}

// ---------------------------------------------------------------------------
// Caps

void apply_cap(Caps& caps, const std::string& key, std::size_t value, const std::string& where) {
  if (key == "max_morphisms")
    caps.max_morphisms = value;
  else if (key == "max_sieves_per_object")
    caps.max_sieves_per_object = value;
  else if (key == "max_elements")
    caps.max_elements = value;
  else
    fail(where, "unknown cap '" + key +
                    "' (known: max_morphisms, max_sieves_per_object, max_elements)");
}

Caps parse_caps(const json* node, const std::vector<std::string>& overrides,
                const std::string& origin) {
  Caps caps{};
  if (node) {
    const std::string where = origin + ": caps";
    expect_object(*node, where);
    for (auto it = node->begin(); it != node->end(); ++it) {
      if (!it->is_number_unsigned()) fail(where + "." + it.key(), "expected an unsigned integer");
      apply_cap(caps, it.key(), it->get<std::size_t>(), where);
    }
  }
  for (const std::string& ov : overrides) {
    const std::string where = "cap override '" + ov + "'";
    auto eq = ov.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == ov.size())
      fail(where, "expected key=value");
    std::size_t value = 0;
    try {
      std::size_t pos = 0;
      value = std::stoull(ov.substr(eq + 1), &pos);
      if (pos != ov.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      fail(where, "the value is not an unsigned integer");
    }
    apply_cap(caps, ov.substr(0, eq), value, where);
  }
  return caps;
}

// ---------------------------------------------------------------------------
// Category descriptions

RawCategory category_from_generator(const json& g, const std::string& origin) {
  const std::string where = origin + ": generator";
  expect_object(g, where);
  const std::string kind = get_string(member(g, "kind", where), where + ".kind");
  if (kind == "terminal") {
    reject_unknown_keys(g, {"kind"}, where);
    return terminal_category();
  }
  if (kind == "gamma") {
    reject_unknown_keys(g, {"kind"}, where);
    return gamma_category();
  }
  if (kind == "poset") {
    reject_unknown_keys(g, {"kind", "name", "objects", "le"}, where);
    const std::string name =
        g.contains("name") ? get_string(g.at("name"), where + ".name") : "poset";
    std::vector<std::string> objects;
    const bool explicit_objects = g.contains("objects");
    if (explicit_objects) {
      expect_array(g.at("objects"), where + ".objects");
      for (const json& o : g.at("objects")) objects.push_back(get_string(o, where + ".objects[]"));
    }
    auto see = [&](const std::string& o) {
      if (std::find(objects.begin(), objects.end(), o) == objects.end()) {
        if (explicit_objects) fail(where + ".le", "object '" + o + "' is not listed in objects");
        objects.push_back(o);
      }
    };
    std::vector<std::pair<std::string, std::string>> le;
    const json& lj = member(g, "le", where);
    expect_array(lj, where + ".le");
    for (const json& pr : lj) {
      if (!pr.is_array() || pr.size() != 2)
        fail(where + ".le", "entries are [below, above] pairs");
      std::string a = get_string(pr[0], where + ".le[]");
      std::string b = get_string(pr[1], where + ".le[]");
      see(a);
      see(b);
      le.emplace_back(std::move(a), std::move(b));
    }
    return poset_category(name, objects, le);
  }
  if (kind == "monoid") {
    reject_unknown_keys(g, {"kind", "name", "elements", "unit", "table"}, where);
    const std::string name =
        g.contains("name") ? get_string(g.at("name"), where + ".name") : "monoid";
    std::vector<std::string> elements;
    const json& ej = member(g, "elements", where);
    expect_array(ej, where + ".elements");
    for (const json& e : ej) elements.push_back(get_string(e, where + ".elements[]"));
    const std::string unit = get_string(member(g, "unit", where), where + ".unit");
    std::vector<std::vector<std::string>> rows;
    const json& tj = member(g, "table", where);
    expect_array(tj, where + ".table");
    for (const json& row : tj) {
      if (!row.is_array() || row.size() != 3)
        fail(where + ".table", "entries are [g, f, g*f] triples");
      rows.push_back({get_string(row[0], where + ".table[]"), get_string(row[1], where + ".table[]"),
                      get_string(row[2], where + ".table[]")});
    }
    return monoid_category(name, elements, unit, rows);
  }
  fail(where + ".kind", "unknown generator '" + kind + "' (known: terminal, gamma, poset, monoid)");
}

RawCategory category_explicit(const json& root, const std::string& origin) {
  CatBuilder b(root.contains("name") ? get_string(root.at("name"), origin + ": name")
                                     : std::string("workspace"));
  const json& objs = member(root, "objects", origin);
  expect_array(objs, origin + ": objects");
  std::vector<std::string> onames;
  for (const json& o : objs) onames.push_back(get_string(o, origin + ": objects[]"));
  const json* ids = root.contains("identities") ? &root.at("identities") : nullptr;
  if (ids) {
    expect_object(*ids, origin + ": identities");
    for (auto it = ids->begin(); it != ids->end(); ++it)
      if (std::find(onames.begin(), onames.end(), it.key()) == onames.end())
        fail(origin + ": identities", "unknown object '" + it.key() + "'");
  }
  for (const std::string& o : onames) {
    std::string idname;
    if (ids && ids->contains(o)) idname = get_string(ids->at(o), origin + ": identities." + o);
    b.object(o, idname);
  }
  const json& mors = member(root, "morphisms", origin);
  expect_array(mors, origin + ": morphisms");
  for (const json& m : mors) {
    const std::string where = origin + ": morphisms[]";
    expect_object(m, where);
    reject_unknown_keys(m, {"name", "dom", "cod"}, where);
    b.arrow(get_string(member(m, "name", where), where + ".name"),
            get_string(member(m, "dom", where), where + ".dom"),
            get_string(member(m, "cod", where), where + ".cod"));
  }
  if (root.contains("composition")) {
    const json& comp = root.at("composition");
    expect_array(comp, origin + ": composition");
    for (const json& r : comp) {
      const std::string where = origin + ": composition[]";
      expect_object(r, where);
      reject_unknown_keys(r, {"g", "f", "gf"}, where);
      b.compose_rule(get_string(member(r, "g", where), where + ".g"),
                     get_string(member(r, "f", where), where + ".f"),
                     get_string(member(r, "gf", where), where + ".gf"));
    }
  }
  return b.raw();
}

Obj resolve_object(const FinCat& cat, const std::string& name, const std::string& where) {
  auto o = cat.object_index(name);
  if (!o) fail(where, "unknown object '" + name + "'");
  return *o;
}

Mor resolve_morphism(const FinCat& cat, const std::string& name, const std::string& where) {
  auto m = cat.morphism_index(name);
  if (!m) fail(where, "unknown morphism '" + name + "'");
  return *m;
}

// ---------------------------------------------------------------------------
// Named structures

void load_ideals(Workspace& ws, const json& node, const std::string& origin) {
  expect_object(node, origin + ": ideals");
  const FinCat& cat = *ws.cat;
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string where = origin + ": ideals." + it.key();
    expect_object(*it, where);
    std::vector<MorMask> at(cat.object_count(), 0);
    for (auto oit = it->begin(); oit != it->end(); ++oit) {
      Obj c = resolve_object(cat, oit.key(), where);
      expect_array(*oit, where + "." + oit.key());
      for (const json& mn : *oit) {
        Mor m = resolve_morphism(cat, get_string(mn, where), where);
        if (cat.cod(m) != c)
          fail(where, "'" + cat.morphism_name(m) + "' does not land in '" + oit.key() + "'");
        at[c] |= mask_bit(m);
      }
    }
    try {
      ws.ideals.emplace(it.key(), make_ideal(cat, std::move(at), it.key()));
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
}

void load_classes(Workspace& ws, const json& node, const std::string& origin) {
  expect_object(node, origin + ": admissible_classes");
  const FinCat& cat = *ws.cat;
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string where = origin + ": admissible_classes." + it.key();
    expect_array(*it, where);
    MorMask arrows = 0;
    for (const json& mn : *it) arrows |= mask_bit(resolve_morphism(cat, get_string(mn, where), where));
    try {
      ws.classes.emplace(it.key(), make_admissible(cat, arrows, it.key()));
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
}

void load_families(Workspace& ws, const json& node, const std::string& origin) {
  expect_object(node, origin + ": families");
  const FinCat& cat = *ws.cat;
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string where = origin + ": families." + it.key();
    expect_object(*it, where);
    std::vector<Mor> f(cat.object_count(), kNoMor);
    for (auto oit = it->begin(); oit != it->end(); ++oit) {
      Obj c = resolve_object(cat, oit.key(), where);
      f[c] = resolve_morphism(cat, get_string(*oit, where + "." + oit.key()), where);
    }
    for (Obj c = 0; c < cat.object_count(); ++c)
      if (f[c] == kNoMor) fail(where, "no arrow designated for object '" + cat.object_name(c) + "'");
    try {
      ws.families.emplace(it.key(), make_family(*ws.omega, std::move(f), it.key()));
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
}

void load_presheaves(Workspace& ws, const json& node, const std::string& origin) {
  expect_object(node, origin + ": presheaves");
  const FinCat& cat = *ws.cat;
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string where = origin + ": presheaves." + it.key();
    expect_object(*it, where);
    reject_unknown_keys(*it, {"elements", "restrictions"}, where);
    Presheaf p;
    p.name = it.key();
    p.cat = &cat;
    p.elems.resize(cat.object_count());
    const json& el = member(*it, "elements", where);
    expect_object(el, where + ".elements");
    for (auto oit = el.begin(); oit != el.end(); ++oit) {
      Obj c = resolve_object(cat, oit.key(), where + ".elements");
      expect_array(*oit, where + ".elements." + oit.key());
      std::set<std::string> seen;
      for (const json& lab : *oit) {
        std::string l = get_string(lab, where + ".elements." + oit.key());
        if (!seen.insert(l).second)
          fail(where, "duplicate element label '" + l + "' at '" + oit.key() + "'");
        p.elems[c].push_back(std::move(l));
      }
    }
    const json* rs = it->contains("restrictions") ? &it->at("restrictions") : nullptr;
    if (rs) {
      expect_object(*rs, where + ".restrictions");
      for (auto rit = rs->begin(); rit != rs->end(); ++rit)
        resolve_morphism(cat, rit.key(), where + ".restrictions");
    }
    p.restr.resize(cat.morphism_count());
    for (Mor m = 0; m < cat.morphism_count(); ++m) {
      const std::string& mn = cat.morphism_name(m);
      const json* row = rs && rs->contains(mn) ? &rs->at(mn) : nullptr;
      const std::size_t need = p.elems[cat.cod(m)].size();
      if (!row) {
        if (cat.is_identity(m)) {
          p.restr[m].resize(need);
          std::iota(p.restr[m].begin(), p.restr[m].end(), 0u);
          continue;
        }
        if (need == 0) continue;  // nothing to map
        fail(where, "missing restriction along '" + mn + "'");
      }
      expect_array(*row, where + ".restrictions." + mn);
      if (row->size() != need)
        fail(where, "restriction along '" + mn + "' must list " + std::to_string(need) +
                        " labels (one per element at '" + cat.object_name(cat.cod(m)) + "')");
      for (const json& lab : *row) {
        std::string l = get_string(lab, where + ".restrictions." + mn);
        auto idx = label_index(p, cat.dom(m), l);
        if (!idx)
          fail(where, "restriction along '" + mn + "' targets unknown element '" + l + "' at '" +
                          cat.object_name(cat.dom(m)) + "'");
        p.restr[m].push_back(*idx);
      }
    }
    if (p.total_elements() > ws.caps.max_elements)
      throw CapError("presheaf '" + it.key() + "' has " + std::to_string(p.total_elements()) +
                     " elements; cap is " + std::to_string(ws.caps.max_elements));
    auto rep = validate_presheaf(p);
    if (!rep.valid()) fail(where, rep.issues.front().kind + ": " + rep.issues.front().detail);
    ws.presheaves.emplace(it.key(), std::move(p));
  }
}

void load_requests(Workspace& ws, const json& node, const std::string& origin) {
  const std::string where = origin + ": requests";
  expect_array(node, where);
  for (const json& req : node) {
    expect_array(req, where + "[]");
    if (req.empty()) fail(where, "empty request");
    std::vector<std::string> tokens;
    for (const json& t : req) tokens.push_back(get_string(t, where + "[]"));
    ws.requests.push_back(std::move(tokens));
  }
}

Workspace load_from_json(const json& root, const std::vector<std::string>& cap_overrides,
                         const std::string& origin) {
  expect_object(root, origin);
  reject_unknown_keys(root,
                      {"name", "generator", "objects", "identities", "morphisms", "composition",
                       "caps", "ideals", "admissible_classes", "families", "presheaves", "requests"},
                      origin);
  Workspace ws;
  ws.caps = parse_caps(root.contains("caps") ? &root.at("caps") : nullptr, cap_overrides, origin);
  RawCategory raw;
  if (root.contains("generator")) {
    for (const char* k : {"objects", "identities", "morphisms", "composition"})
      if (root.contains(k))
        fail(origin, std::string("'") + k + "' cannot be combined with a generator");
    if (root.contains("name"))
      fail(origin, "'name' belongs inside the generator when one is used");
    raw = category_from_generator(root.at("generator"), origin);
  } else {
    raw = category_explicit(root, origin);
  }
  ws.cat = std::make_unique<FinCat>(FinCat::build(raw, ws.caps));
  ws.omega = std::make_unique<OmegaPresheaf>(build_omega(*ws.cat, ws.caps));
  if (root.contains("ideals")) load_ideals(ws, root.at("ideals"), origin);
  if (root.contains("admissible_classes")) load_classes(ws, root.at("admissible_classes"), origin);
  if (root.contains("families")) load_families(ws, root.at("families"), origin);
  if (root.contains("presheaves")) load_presheaves(ws, root.at("presheaves"), origin);
  if (root.contains("requests")) load_requests(ws, root.at("requests"), origin);
  return ws;
}

// ---------------------------------------------------------------------------
// Name resolution shared by the command verbs

Ideal resolve_ideal(const Workspace& ws, const std::string& name) {
  auto it = ws.ideals.find(name);
  if (it != ws.ideals.end()) return it->second;
  if (name == "y") return yoneda_ideal(*ws.cat);
  if (name == "0") return zero_ideal(*ws.cat);
  throw InputError("unknown ideal '" + name + "' (named ideals plus the builtins y, 0)");
}

AdmissibleClass resolve_class(const Workspace& ws, const std::string& name) {
  auto it = ws.classes.find(name);
  if (it != ws.classes.end()) return it->second;
  if (name == "ids") return identities_class(*ws.cat);
  if (name == "monos") return all_monos_class(*ws.cat);
  throw InputError("unknown admissible class '" + name +
                   "' (named classes plus the builtins ids, monos)");
}

TranslationFamily resolve_family(const Workspace& ws, const std::string& name) {
  auto it = ws.families.find(name);
  if (it != ws.families.end()) return it->second;
  if (name == "ids") return identity_family(*ws.cat);
  throw InputError("unknown translation family '" + name +
                   "' (named families plus the builtin ids)");
}

OmegaEndo resolve_topology(const Workspace& ws, const std::string& token) {
  const FinCat& cat = *ws.cat;
  const OmegaPresheaf& om = *ws.omega;
  auto rest = [&](std::size_t n) { return token.substr(n); };
  if (token == "nn") return double_negation(cat, om);
  if (token == "id") return identity_endo(om);
  if (token == "j0") return weak_ideal_topology(zero_ideal(cat), om);
  if (token.rfind("jI:", 0) == 0) return weak_ideal_topology(resolve_ideal(ws, rest(3)), om);
  if (token.rfind("jM:", 0) == 0) return topology_from_m(om, resolve_class(ws, rest(3)));
  if (token == "jSub") return sub_topology(om, cat);
  if (token.rfind("alpha:", 0) == 0)
    return translations_alpha(om, resolve_family(ws, rest(6)));
  throw InputError("unknown topology '" + token +
                   "' (nn, id, j0, jI:<ideal>, jM:<class>, jSub, alpha:<family>)");
}

// ---------------------------------------------------------------------------
// Command verbs

struct Ctx {
  const Workspace& ws;
  bool pass = true;
  std::vector<std::string> lines;

  const FinCat& cat() const { return *ws.cat; }
  const OmegaPresheaf& om() const { return *ws.omega; }
  void note(const std::string& s) { lines.push_back("  " + s); }
  bool check(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
    return ok;
  }
};

json flags_json(const WeakTopologyFlags& f) {
  return {{"idempotent", f.idempotent}, {"meet_le", f.meet_le},       {"natural", f.natural},
          {"productive", f.productive}, {"topology", f.topology()},   {"true_law", f.true_law},
          {"weak", f.weak()}};
}

json components_json(const FinCat& cat, const std::vector<MorMask>& at) {
  json out = json::object();
  for (Obj c = 0; c < cat.object_count(); ++c) out[cat.object_name(c)] = sieve_label(cat, at[c]);
  return out;
}

std::vector<std::string> arrow_names(const FinCat& cat, MorMask mask) {
  std::vector<std::string> out;
  for_each_bit(mask, [&](Mor m) { out.push_back(cat.morphism_name(m)); });
  return out;
}

json cmd_validate(Ctx& cx) {
  const FinCat& cat = cx.cat();
  auto preds = cat.structural_predicates();
  json j;
  j["category"] = cat.name();
  j["objects"] = cat.object_count();
  j["morphisms"] = cat.morphism_count();
  j["structure"] = {{"finitely_complete", preds.finitely_complete},
                    {"pullback_completion", preds.pullback_completion},
                    {"right_ore", preds.right_ore}};
  j["named"] = {{"admissible_classes", cx.ws.classes.size()},
                {"families", cx.ws.families.size()},
                {"ideals", cx.ws.ideals.size()},
                {"presheaves", cx.ws.presheaves.size()}};
  cx.note("category '" + cat.name() + "': " + std::to_string(cat.object_count()) + " objects, " +
          std::to_string(cat.morphism_count()) + " morphisms");
  cx.note(std::string("right Ore: ") + (preds.right_ore ? "yes" : "no") +
          ", finitely complete: " + (preds.finitely_complete ? "yes" : "no") +
          ", pullback completion: " + (preds.pullback_completion ? "yes" : "no"));
  cx.check(true, "category and every named structure passed validation at load");
  return j;
}

json cmd_omega(Ctx& cx) {
  const FinCat& cat = cx.cat();
  const OmegaPresheaf& om = cx.om();
  json sizes = json::object();
  std::size_t total = 0;
  bool cross = true;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    sizes[cat.object_name(c)] = om.size_at(c);
    total += om.size_at(c);
    cross = cross &&
            enumerate_subpresheaves(yoneda(cat, c), cx.ws.caps).size() == om.size_at(c);
  }
  json j;
  j["sieve_counts"] = sizes;
  j["total"] = total;
  j["yoneda_subobjects_match"] = cross;
  cx.note("sieve table: " + std::to_string(total) + " sieves across " +
          std::to_string(cat.object_count()) + " objects");
  cx.check(cross, "sieves on each object match the subobjects of its representable");
  return j;
}

json cmd_ideals(Ctx& cx) {
  const FinCat& cat = cx.cat();
  auto ideals = enumerate_ideals(cat, cx.om(), cx.ws.caps);
  json arr = json::array();
  bool all_valid = true;
  for (const Ideal& ideal : ideals) {
    json e;
    e["name"] = ideal.name;
    e["components"] = components_json(cat, ideal.at);
    e["everywhere_nonempty"] = ideal_all_nonempty(ideal);
    e["idempotent"] = ideal_is_idempotent(ideal);
    all_valid = all_valid && validate_ideal(cat, ideal.at).valid();
    arr.push_back(std::move(e));
  }
  json j;
  j["count"] = ideals.size();
  j["ideals"] = arr;
  j["all_valid"] = all_valid;
  cx.note("the category carries " + std::to_string(ideals.size()) + " ideals");
  cx.check(all_valid, "every enumerated ideal passes the validator");
  return j;
}

json cmd_ideal_audit(Ctx& cx, const std::string& name) {
  const FinCat& cat = cx.cat();
  const OmegaPresheaf& om = cx.om();
  Ideal ideal = resolve_ideal(cx.ws, name);
  OmegaEndo ji = weak_ideal_topology(ideal, om);
  auto flags = check_weak_topology(ji);
  const bool idem = ideal_is_idempotent(ideal);
  const bool nonempty = ideal_all_nonempty(ideal);
  json j;
  j["name"] = ideal.name;
  j["components"] = components_json(cat, ideal.at);
  j["idempotent"] = idem;
  j["everywhere_nonempty"] = nonempty;
  j["pullback_stable"] = is_ideal_pullback_stable(ideal);
  j["pullback_stable_converse"] = is_ideal_pullback_stable_converse(ideal);
  json mf = json::object();
  for (Obj c = 0; c < cat.object_count(); ++c)
    mf[cat.object_name(c)] = matching_family_check(ideal, c);
  j["matching_family"] = mf;
  j["topology_flags"] = flags_json(flags);
  cx.note("ideal '" + ideal.name + "': idempotent " + (idem ? "yes" : "no") +
          ", everywhere nonempty " + (nonempty ? "yes" : "no"));
  cx.check(flags.natural && flags.weak() && flags.productive,
           "the ideal topology is a natural productive weak topology");
  cx.check(flags.topology() == idem, "it is a topology exactly when the ideal is idempotent");
  cx.check(sub_equal(omega_j(ji), omega_jI_literal(ideal, om)),
           "fixed sieves match the literal biconditional rule");
  cx.check(grothendieck_from_j(ji).covers == ideal_grothendieck(ideal, om).covers,
           "covers by the direct rule and via the endomorphism agree");
  bool closures = true;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    Presheaf host = yoneda(cat, c);
    for (const Subpresheaf& g : enumerate_subpresheaves(host, cx.ws.caps))
      closures = closures && sub_equal(ideal_closure(ideal, host, g), closure_from_j(ji, host, g));
  }
  for (const Subpresheaf& g : enumerate_subpresheaves(om.pre, cx.ws.caps))
    closures = closures && sub_equal(ideal_closure(ideal, om.pre, g), closure_from_j(ji, om.pre, g));
  cx.check(closures, "closures by the restriction rule and via the endomorphism agree");
  if (nonempty)
    cx.check(endo_equal(ideal_double_negation(ideal, om), double_negation(cat, om)),
             "the ideal-relative double negation agrees with plain double negation");
  if (idem && nonempty)
    cx.check(endo_leq(ji, double_negation(cat, om)), "the topology sits below double negation");
  return j;
}

json cmd_admissible_audit(Ctx& cx, const std::string& name) {
  const FinCat& cat = cx.cat();
  const OmegaPresheaf& om = cx.om();
  AdmissibleClass cls = resolve_class(cx.ws, name);
  json j;
  j["name"] = cls.name;
  j["arrows"] = arrow_names(cat, cls.arrows);
  auto miss = missing_member_cospan(cls);
  j["workable"] = !miss;
  if (miss)
    j["missing_pullback"] = "(" + cat.morphism_name(miss->first) + ", " +
                            cat.morphism_name(miss->second) + ")";
  cx.note("class '" + cls.name + "': " + std::to_string(arrow_names(cat, cls.arrows).size()) +
          " arrows, " + (miss ? "not workable" : "workable"));
  cx.check(validate_admissible(cat, cls.arrows).valid(), "the class satisfies its axioms");
  if (miss) {
    cx.note("member '" + cat.morphism_name(miss->first) + "' has no pullback along '" +
            cat.morphism_name(miss->second) + "'; topology checks skipped");
    return j;
  }
  ClassPresheaf mp = m_presheaf(cls);
  json counts = json::object();
  for (Obj c = 0; c < cat.object_count(); ++c)
    counts[cat.object_name(c)] = mp.reps[c].size();
  j["representative_counts"] = counts;
  auto pc = partial_category_check(cat, cls);
  j["partial_maps"] = {{"associative", pc.associative},
                       {"closed", pc.closed},
                       {"identities", pc.identities}};
  cx.check(pc.valid(), "partial maps with members as domains compose as a category");
  OmegaEndo jm = topology_from_m(om, cls);
  auto flags = check_weak_topology(jm);
  j["topology_flags"] = flags_json(flags);
  cx.check(flags.natural && flags.weak() && flags.productive,
           "the class topology is a natural productive weak topology");
  MCalculus mc(cat, cls);
  cx.check(endo_equal(jm, topology_from_m_via_mu(mc, om)),
           "the class topology via the relation calculus agrees with the direct rule");
  cx.check(grothendieck_from_j(jm).covers == m_grothendieck(om, cls).covers,
           "covers by both routes agree");
  return j;
}

json cmd_action_audit(Ctx& cx, const std::string& name) {
  const FinCat& cat = cx.cat();
  const OmegaPresheaf& om = cx.om();
  AdmissibleClass cls = resolve_class(cx.ws, name);
  OmegaAction a(om, cls);  // InputError when the class is not workable
  auto ml = monoid_laws_check(a.monoid());
  auto al = action_laws_check(a);
  auto fr = frame_and_subact_checks(a);
  json j;
  j["name"] = cls.name;
  j["monoid"] = {{"associative", ml.associative},
                 {"commutative", ml.commutative},
                 {"order_compatible", ml.order_compatible},
                 {"unit_laws", ml.unit_laws}};
  if (!ml.issues.empty()) j["monoid_issues"] = ml.issues;
  j["action"] = {{"commutes", al.commutes},
                 {"mixed_associative", al.mixed_associative},
                 {"natural", al.natural},
                 {"rep_independent", al.rep_independent},
                 {"sieve_valued", al.sieve_valued},
                 {"unit", al.unit}};
  if (!al.issues.empty()) j["action_issues"] = al.issues;
  j["frame"] = {{"bottom_fixed", fr.bottom_fixed},
                {"join_equivariant", fr.join_equivariant},
                {"jsub_available", fr.jsub_available},
                {"meet_equivariant", fr.meet_equivariant},
                {"omega_jm_subact", fr.omega_jm_subact},
                {"omega_jsub_subact", fr.omega_jsub_subact},
                {"sub_poset_monotone", fr.sub_poset_monotone},
                {"top_fixed", fr.top_fixed},
                {"w_by_both_routes", fr.w_by_both_routes}};
  if (!fr.issues.empty()) j["frame_issues"] = fr.issues;
  auto w = w_mu(a);
  json wsz = json::object();
  for (Obj c = 0; c < cat.object_count(); ++c) wsz[cat.object_name(c)] = w[c].size();
  j["w_sizes"] = wsz;
  cx.note("action of class '" + cls.name + "' on the sieve tables");
  cx.check(ml.valid(), "representatives form a commutative ordered monoid");
  cx.check(al.valid(), "the action laws hold");
  cx.check(fr.valid(), "meets, joins and the fixed-sieve subacts behave");
  return j;
}

json equivariance_hypotheses(const Workspace& ws, const std::string& token) {
  const FinCat& cat = *ws.cat;
  json hyp = json::object();
  if (token == "nn") {
    hyp["pullback_completion"] = cat.structural_predicates().pullback_completion;
  } else if (token.rfind("jM:", 0) == 0) {
    hyp["class_pullback_completion"] =
        cat.m_pullback_completion(resolve_class(ws, token.substr(3)).arrows);
  } else if (token.rfind("jI:", 0) == 0) {
    Ideal ideal = resolve_ideal(ws, token.substr(3));
    hyp["ideal_pullback_stable"] = is_ideal_pullback_stable(ideal);
    hyp["ideal_pullback_stable_converse"] = is_ideal_pullback_stable_converse(ideal);
  } else if (token == "jSub") {
    hyp["monos_pullback_completion"] = cat.m_pullback_completion(all_monos_class(cat).arrows);
  } else {
    hyp["unconditional"] = true;
  }
  return hyp;
}

json cmd_equivariance(Ctx& cx, const std::string& topo, const std::string& clsname) {
  AdmissibleClass cls = resolve_class(cx.ws, clsname);
  OmegaAction a(cx.om(), cls);
  OmegaEndo jt = resolve_topology(cx.ws, topo);
  auto eq = equivariance_check(a, jt);
  json j;
  j["topology"] = topo;
  j["class"] = cls.name;
  j["forward"] = eq.forward;    // j(S.m) contained in j(S).m
  j["backward"] = eq.backward;  // j(S).m contained in j(S.m)
  j["equivariant"] = eq.equivariant;
  j["witness"] = eq.witness.empty() ? json() : json(eq.witness);
  j["hypotheses"] = equivariance_hypotheses(cx.ws, topo);
  cx.note(std::string("forward inclusion: ") + (eq.forward ? "holds" : "fails") +
          ", backward inclusion: " + (eq.backward ? "holds" : "fails"));
  if (!eq.witness.empty()) cx.note("witness: " + eq.witness);
  cx.check(eq.equivariant, "'" + topo + "' commutes with the '" + cls.name + "' action");
  return j;
}

json cmd_demorgan(Ctx& cx, const std::string& topo) {
  const FinCat& cat = cx.cat();
  OmegaEndo jt = resolve_topology(cx.ws, topo);
  auto preds = cat.structural_predicates();
  auto cands = de_morgan_candidates(cat, cx.om(), jt);
  std::vector<const Presheaf*> ptrs;
  for (const Presheaf& p : cands) ptrs.push_back(&p);
  for (const auto& [n, p] : cx.ws.presheaves) ptrs.push_back(&p);
  auto rep = de_morgan_check(jt, ptrs, cx.ws.caps);
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"failures", e.failures},
                       {"is_sheaf", e.is_sheaf},
                       {"presheaf", e.presheaf},
                       {"subobjects_checked", e.subobjects_checked}});
  json j;
  j["topology"] = topo;
  j["right_ore"] = preds.right_ore;
  j["sheaf_candidates"] = entries;
  j["de_morgan_holds"] = rep.pass;
  if (preds.right_ore) {
    cx.check(rep.pass, "De Morgan law over the sheaf candidates (right Ore holds)");
  } else {
    cx.note(std::string("right Ore fails; De Morgan is not implied (observed: ") +
            (rep.pass ? "holds" : "fails") + ")");
    cx.check(true, "nothing to enforce without the right Ore hypothesis");
  }
  return j;
}

json cmd_family_audit(Ctx& cx, const std::string& name) {
  const FinCat& cat = cx.cat();
  const OmegaPresheaf& om = cx.om();
  TranslationFamily fam = resolve_family(cx.ws, name);
  auto rep = validate_family(om, fam.f);
  OmegaEndo alpha = translations_alpha(om, fam);
  auto flags = check_weak_topology(alpha);
  const bool fid = family_idempotent(fam);
  const bool bicond = alpha_idempotency_witnesses(om, fam);
  json j;
  j["name"] = fam.name;
  json arrows = json::object();
  for (Obj c = 0; c < cat.object_count(); ++c)
    arrows[cat.object_name(c)] = cat.morphism_name(fam.f[c]);
  j["arrows"] = arrows;
  j["translation_law"] = rep.law;
  j["sufficient_condition"] = rep.sufficient_condition;
  j["family_idempotent"] = fid;
  j["idempotency_biconditional"] = bicond;
  j["topology_flags"] = flags_json(flags);
  cx.note("family '" + fam.name + "': slice-idempotent " + (fid ? "yes" : "no") +
          ", alpha idempotent " + (flags.idempotent ? "yes" : "no"));
  cx.check(rep.law, "every translation commutes with restriction");
  cx.check(flags.natural && flags.weak() && flags.productive,
           "alpha is a natural productive weak topology");
  cx.check(!fid || flags.topology(), "a slice-idempotent family yields a topology");
  cx.check(!flags.topology() || bicond,
           "a topology forces the one-step/two-step membership biconditional");
  cx.check(alpha_grothendieck(om, fam).covers == grothendieck_from_j(alpha).covers,
           "covers by both routes agree");
  bool closures = true;
  for (Obj c = 0; c < cat.object_count(); ++c) {
    Presheaf host = yoneda(cat, c);
    for (const Subpresheaf& g : enumerate_subpresheaves(host, cx.ws.caps))
      closures = closures && sub_equal(alpha_closure(fam, host, g), closure_from_j(alpha, host, g));
  }
  for (const Subpresheaf& g : enumerate_subpresheaves(om.pre, cx.ws.caps))
    closures = closures && sub_equal(alpha_closure(fam, om.pre, g), closure_from_j(alpha, om.pre, g));
  cx.check(closures, "closures by both routes agree");
  json acting = json::object();
  for (const auto& [cn, cls] : cx.ws.classes) {
    if (missing_member_cospan(cls)) continue;
    OmegaAction a(om, cls);
    bool ok = equivariance_check(a, alpha).equivariant;
    acting[cn] = ok;
    cx.check(ok, "alpha commutes with the '" + cn + "' action");
  }
  for (const char* builtin : {"ids", "monos"}) {
    if (cx.ws.classes.count(builtin)) continue;
    AdmissibleClass cls = resolve_class(cx.ws, builtin);
    if (missing_member_cospan(cls)) continue;
    OmegaAction a(om, cls);
    bool ok = equivariance_check(a, alpha).equivariant;
    acting[builtin] = ok;
    cx.check(ok, std::string("alpha commutes with the '") + builtin + "' action");
  }
  j["action_preserving"] = acting;
  return j;
}

std::vector<std::pair<std::string, AdmissibleClass>> audit_classes(const Workspace& ws) {
  std::vector<std::pair<std::string, AdmissibleClass>> out;
  for (const auto& [n, c] : ws.classes) out.emplace_back(n, c);
  if (!ws.classes.count("ids")) out.emplace_back("ids", identities_class(*ws.cat));
  if (!ws.classes.count("monos")) out.emplace_back("monos", all_monos_class(*ws.cat));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

json cmd_full_audit(Ctx& cx) {
  const FinCat& cat = cx.cat();
  const OmegaPresheaf& om = cx.om();
  json j;
  j["validate"] = cmd_validate(cx);
  j["omega"] = cmd_omega(cx);
  j["ideals"] = cmd_ideals(cx);

  {  // the weak-topology laws over every ideal the category carries
    auto ideals = enumerate_ideals(cat, om, cx.ws.caps);
    bool weak_all = true, iff_all = true, covers_all = true, fixed_all = true;
    for (const Ideal& ideal : ideals) {
      OmegaEndo ji = weak_ideal_topology(ideal, om);
      auto flags = check_weak_topology(ji);
      weak_all = weak_all && flags.natural && flags.weak() && flags.productive;
      iff_all = iff_all && flags.topology() == ideal_is_idempotent(ideal);
      covers_all =
          covers_all && grothendieck_from_j(ji).covers == ideal_grothendieck(ideal, om).covers;
      fixed_all = fixed_all && sub_equal(omega_j(ji), omega_jI_literal(ideal, om));
    }
    j["ideal_laws"] = {{"count", ideals.size()},
                       {"covers_agree", covers_all},
                       {"fixed_points_literal", fixed_all},
                       {"topology_iff_idempotent", iff_all},
                       {"weak_productive", weak_all}};
    cx.check(weak_all, "every ideal topology is a natural productive weak topology");
    cx.check(iff_all, "ideal topologies are topologies exactly for idempotent ideals");
    cx.check(covers_all, "ideal covers agree by both routes");
    cx.check(fixed_all, "ideal fixed sieves match the literal rule");
  }

  json ia = json::object();
  for (const auto& [n, ideal] : cx.ws.ideals) {
    (void)ideal;
    ia[n] = cmd_ideal_audit(cx, n);
  }
  j["ideal_audits"] = ia;

  json ca = json::object(), aa = json::object(), eq = json::object();
  for (const auto& [n, cls] : audit_classes(cx.ws)) {
    ca[n] = cmd_admissible_audit(cx, n);
    if (missing_member_cospan(cls)) continue;
    aa[n] = cmd_action_audit(cx, n);
    OmegaAction a(om, cls);
    // Rows backed by a proved implication; the remaining rows probe the
    // converse directions and are reported as observations only.
    auto proved = [](const TheoremAudit& row) {
      auto ends_with = [&](const char* tail) {
        std::string t(tail);
        return row.id.size() >= t.size() && row.id.compare(row.id.size() - t.size(), t.size(), t) == 0;
      };
      return row.hypothesis == "none (unconditional)" || row.id == "nn.bwd" ||
             row.id == "jM.bwd" || ends_with(".stable=>bwd") ||
             ends_with(".completion+converse=>fwd");
    };
    json rows = json::array();
    bool theorem_rows = true, uncond = true;
    for (const TheoremAudit& row : equivariance_audits(a)) {
      rows.push_back({{"conclusion_holds", row.conclusion_holds},
                      {"consistent", row.consistent()},
                      {"hypothesis", row.hypothesis},
                      {"hypothesis_holds", row.hypothesis_holds},
                      {"id", row.id},
                      {"proved_implication", proved(row)}});
      if (proved(row)) theorem_rows = theorem_rows && row.consistent();
      if (row.hypothesis == "none (unconditional)") uncond = uncond && row.conclusion_holds;
    }
    eq[n] = {{"rows", rows}, {"theorem_rows_consistent", theorem_rows},
             {"unconditional_hold", uncond}};
    cx.check(uncond, "unconditional inclusions hold for the '" + n + "' action");
    cx.check(theorem_rows, "every proved equivariance implication holds for '" + n + "'");
  }
  j["class_audits"] = ca;
  j["action_audits"] = aa;
  j["equivariance_tables"] = eq;

  json fa = json::object();
  for (const auto& [n, fam] : cx.ws.families) {
    (void)fam;
    fa[n] = cmd_family_audit(cx, n);
  }
  j["family_audits"] = fa;

  json dm = json::object();
  std::vector<std::pair<std::string, Ideal>> dmi;
  for (const auto& [n, ideal] : cx.ws.ideals) dmi.emplace_back(n, ideal);
  if (!cx.ws.ideals.count("y")) dmi.emplace_back("y", yoneda_ideal(cat));
  std::sort(dmi.begin(), dmi.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [n, ideal] : dmi)
    if (ideal_is_idempotent(ideal) && ideal_all_nonempty(ideal))
      dm["jI:" + n] = cmd_demorgan(cx, "jI:" + n);
  j["de_morgan"] = dm;
  return j;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

Workspace load_workspace_text(const std::string& text, const std::vector<std::string>& cap_overrides,
                              const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
  return load_from_json(root, cap_overrides, origin);
}

Workspace load_workspace(const std::string& path, const std::vector<std::string>& cap_overrides) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read workspace file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_workspace_text(buf.str(), cap_overrides, path);
}

std::string save_workspace(const Workspace& ws) {
  const FinCat& cat = *ws.cat;
  json root;
  root["name"] = cat.name();
  root["caps"] = {{"max_elements", ws.caps.max_elements},
                  {"max_morphisms", ws.caps.max_morphisms},
                  {"max_sieves_per_object", ws.caps.max_sieves_per_object}};
  json objs = json::array();
  for (Obj c = 0; c < cat.object_count(); ++c) objs.push_back(cat.object_name(c));
  root["objects"] = objs;
  json ids = json::object();
  for (Obj c = 0; c < cat.object_count(); ++c)
    ids[cat.object_name(c)] = cat.morphism_name(cat.identity(c));
  root["identities"] = ids;
  json mors = json::array();
  for (Mor m = 0; m < cat.morphism_count(); ++m) {
    if (cat.is_identity(m)) continue;
    mors.push_back({{"cod", cat.object_name(cat.cod(m))},
                    {"dom", cat.object_name(cat.dom(m))},
                    {"name", cat.morphism_name(m)}});
  }
  root["morphisms"] = mors;
  json comp = json::array();
  for (Mor g = 0; g < cat.morphism_count(); ++g) {
    if (cat.is_identity(g)) continue;
    for (Mor f = 0; f < cat.morphism_count(); ++f) {
      if (cat.is_identity(f) || !cat.composable(g, f)) continue;
      comp.push_back({{"f", cat.morphism_name(f)},
                      {"g", cat.morphism_name(g)},
                      {"gf", cat.morphism_name(cat.compose(g, f))}});
    }
  }
  root["composition"] = comp;
  if (!ws.ideals.empty()) {
    json node = json::object();
    for (const auto& [n, ideal] : ws.ideals) {
      json io = json::object();
      for (Obj c = 0; c < cat.object_count(); ++c)
        if (ideal.at[c]) io[cat.object_name(c)] = arrow_names(cat, ideal.at[c]);
      node[n] = io;
    }
    root["ideals"] = node;
  }
  if (!ws.classes.empty()) {
    json node = json::object();
    for (const auto& [n, cls] : ws.classes) node[n] = arrow_names(cat, cls.arrows);
    root["admissible_classes"] = node;
  }
  if (!ws.families.empty()) {
    json node = json::object();
    for (const auto& [n, fam] : ws.families) {
      json fo = json::object();
      for (Obj c = 0; c < cat.object_count(); ++c)
        fo[cat.object_name(c)] = cat.morphism_name(fam.f[c]);
      node[n] = fo;
    }
    root["families"] = node;
  }
  if (!ws.presheaves.empty()) {
    json node = json::object();
    for (const auto& [n, p] : ws.presheaves) {
      json el = json::object();
      for (Obj c = 0; c < cat.object_count(); ++c) el[cat.object_name(c)] = p.elems[c];
      json rs = json::object();
      for (Mor m = 0; m < cat.morphism_count(); ++m) {
        if (cat.is_identity(m) || p.elems[cat.cod(m)].empty()) continue;
        json row = json::array();
        for (std::uint32_t x = 0; x < p.elems[cat.cod(m)].size(); ++x)
          row.push_back(p.elems[cat.dom(m)][p.restrict_elem(m, x)]);
        rs[cat.morphism_name(m)] = row;
      }
      node[n] = {{"elements", el}, {"restrictions", rs}};
    }
    root["presheaves"] = node;
  }
  if (!ws.requests.empty()) root["requests"] = ws.requests;
  return root.dump(2) + "\n";
}

Report run(const Workspace& ws, const std::vector<std::string>& command) {
  if (command.empty()) {
    if (ws.requests.empty())
      throw InputError("no command given and the workspace stores no requests");
    json reports = json::array();
    std::string text;
    bool pass = true;
    for (const auto& req : ws.requests) {
      Report r = run(ws, req);
      pass = pass && r.pass;
      reports.push_back(json::parse(r.json));
      text += r.text;
    }
    json root;
    root["category"] = ws.cat->name();
    root["command"] = "requests";
    root["pass"] = pass;
    root["reports"] = reports;
    Report out;
    out.command = "requests";
    out.pass = pass;
    out.exit_code = pass ? 0 : 1;
    out.json = root.dump(2) + "\n";
    out.text = text + (pass ? "all stored requests PASS\n" : "stored requests FAIL\n");
    return out;
  }

  Ctx cx{ws};
  const std::string& verb = command[0];
  auto need = [&](std::size_t n, const char* usage) {
    if (command.size() != n) throw InputError(std::string("usage: ") + usage);
  };
  json body;
  if (verb == "validate") {
    need(1, "validate");
    body = cmd_validate(cx);
  } else if (verb == "omega") {
    need(1, "omega");
    body = cmd_omega(cx);
  } else if (verb == "ideals") {
    need(1, "ideals");
    body = cmd_ideals(cx);
  } else if (verb == "ideal-audit") {
    need(2, "ideal-audit <ideal>");
    body = cmd_ideal_audit(cx, command[1]);
  } else if (verb == "admissible-audit") {
    need(2, "admissible-audit <class>");
    body = cmd_admissible_audit(cx, command[1]);
  } else if (verb == "action-audit") {
    need(2, "action-audit <class>");
    body = cmd_action_audit(cx, command[1]);
  } else if (verb == "equivariance") {
    need(3, "equivariance <topology> <class>");
    body = cmd_equivariance(cx, command[1], command[2]);
  } else if (verb == "demorgan") {
    need(2, "demorgan <topology>");
    body = cmd_demorgan(cx, command[1]);
  } else if (verb == "family-audit") {
    need(2, "family-audit <family>");
    body = cmd_family_audit(cx, command[1]);
  } else if (verb == "full-audit") {
    need(1, "full-audit");
    body = cmd_full_audit(cx);
  } else {
    throw InputError("unknown command '" + verb +
                     "' (validate, omega, ideals, ideal-audit, admissible-audit, action-audit, "
                     "equivariance, demorgan, family-audit, full-audit)");
  }

  json root;
  root["category"] = ws.cat->name();
  root["command"] = join_tokens(command);
  root["pass"] = cx.pass;
  root["report"] = body;
  Report out;
  out.command = join_tokens(command);
  out.pass = cx.pass;
  out.exit_code = cx.pass ? 0 : 1;
  out.json = root.dump(2) + "\n";
  std::string text = out.command + " on '" + ws.cat->name() + "'\n";
  for (const std::string& line : cx.lines) text += line + "\n";
  text += cx.pass ? "PASS\n" : "FAIL\n";
  out.text = text;
  return out;
}

std::vector<std::pair<std::string, std::string>> fixture_workspaces() {
  std::vector<std::pair<std::string, std::string>> out;
  auto add = [&](const std::string& name, const json& j) {
    out.emplace_back(name, j.dump(2) + "\n");
  };

  add("terminal", json{{"generator", {{"kind", "terminal"}}},
                       {"requests", json::array({json::array({"validate"})})}});

  add("gamma",
      json{{"generator", {{"kind", "gamma"}}},
           {"ideals", {{"Iprime", {{"A", json::array({"s", "t"})}}}}},
           {"presheaves",
            {{"loop",
              {{"elements", {{"A", json::array({"e"})}, {"N", json::array({"v"})}}},
               {"restrictions", {{"s", json::array({"v"})}, {"t", json::array({"v"})}}}}}}},
           {"requests", json::array({json::array({"validate"}), json::array({"ideals"}),
                                     json::array({"demorgan", "jI:Iprime"})})}});

  add("l3",
      json{{"generator",
            {{"kind", "poset"},
             {"name", "l3"},
             {"le", json::array({json::array({"x", "y"}), json::array({"y", "1"})})}}},
           {"admissible_classes", {{"meets", json::array({"id_x", "id_y", "id_1", "x<=y"})}}},
           {"families", {{"base", {{"1", "x<=1"}, {"x", "id_x"}, {"y", "x<=y"}}}}},
           {"ideals",
            {{"Iy",
              {{"1", json::array({"id_1", "x<=1", "y<=1"})},
               {"x", json::array({"id_x"})},
               {"y", json::array({"id_y", "x<=y"})}}}}},
           {"requests",
            json::array({json::array({"equivariance", "nn", "meets"}),
                         json::array({"family-audit", "base"}),
                         json::array({"demorgan", "jI:Iy"})})}});

  add("diamond",
      json{{"generator",
            {{"kind", "poset"},
             {"name", "diamond"},
             {"le", json::array({json::array({"0", "a"}), json::array({"0", "b"}),
                                 json::array({"a", "1"}), json::array({"b", "1"})})}}},
           {"families",
            {{"bottom", {{"0", "id_0"}, {"1", "0<=1"}, {"a", "0<=a"}, {"b", "0<=b"}}}}},
           {"requests", json::array({json::array({"action-audit", "monos"}),
                                     json::array({"family-audit", "bottom"})})}});

  add("mon_e",
      json{{"generator",
            {{"kind", "monoid"},
             {"name", "mon_e"},
             {"elements", json::array({"1", "e"})},
             {"unit", "1"},
             {"table", json::array({json::array({"e", "e", "e"})})}}},
           {"requests", json::array({json::array({"validate"}), json::array({"omega"}),
                                     json::array({"demorgan", "jI:y"})})}});

  return out;
}

}  // namespace fintopos
