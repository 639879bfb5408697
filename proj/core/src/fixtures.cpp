#include "fintopos/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fintopos {

RawCategory terminal_category() {
  return CatBuilder("terminal").object("*").raw();
}

RawCategory gamma_category() {
  return CatBuilder("gamma")
      .object("N")
      .object("A")
      .arrow("s", "N", "A")
      .arrow("t", "N", "A")
      .raw();
}

RawCategory poset_category(const std::string& name, const std::vector<std::string>& objects,
                           const std::vector<std::pair<std::string, std::string>>& le) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < objects.size(); ++i) idx[objects[i]] = i;
  const std::size_t n = objects.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : le) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end())
      throw InputError("poset '" + name + "': unknown object in relation " + a + " <= " + b);
    leq[ia->second][ib->second] = true;
  }
  for (bool changed = true; changed;) {  // transitive closure
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][j])
          for (std::size_t k = 0; k < n; ++k)
            if (leq[j][k] && !leq[i][k]) leq[i][k] = changed = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (leq[i][j] && leq[j][i])
        throw InputError("poset '" + name + "': antisymmetry fails between " + objects[i] +
                         " and " + objects[j]);

  CatBuilder b(name);
  for (const auto& o : objects) b.object(o);
  auto arrow_name = [&](std::size_t i, std::size_t j) {
    return i == j ? "id_" + objects[i] : objects[i] + "<=" + objects[j];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq[i][j]) b.arrow(arrow_name(i, j), objects[i], objects[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (i != j && j != k && leq[i][j] && leq[j][k])
          b.compose_rule(arrow_name(j, k), arrow_name(i, j), arrow_name(i, k));
  return b.raw();
}

RawCategory chain3_category() {
  RawCategory r = poset_category("l3", {"x", "y", "1"}, {{"x", "y"}, {"y", "1"}});
  return r;
}

RawCategory diamond_category() {
  return poset_category("diamond", {"0", "a", "b", "1"},
                        {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

RawCategory monoid_category(const std::string& name, const std::vector<std::string>& elements,
                            const std::string& unit,
                            const std::vector<std::vector<std::string>>& table_rows) {
  if (std::find(elements.begin(), elements.end(), unit) == elements.end())
    throw InputError("monoid '" + name + "': unit '" + unit + "' is not an element");
  std::map<std::pair<std::string, std::string>, std::string> tab;
  for (const auto& row : table_rows) {
    if (row.size() != 3) throw InputError("monoid '" + name + "': table rows are [g, f, g*f]");
    tab[{row[0], row[1]}] = row[2];
  }
  CatBuilder b(name);
  b.object("*", unit);
  for (const auto& e : elements)
    if (e != unit) b.arrow(e, "*", "*");
  for (const auto& g : elements)
    for (const auto& f : elements) {
      if (g == unit || f == unit) continue;  // identity composites are implicit
      auto it = tab.find({g, f});
      if (it == tab.end())
        throw InputError("monoid '" + name + "': missing product entry " + g + "*" + f);
      b.compose_rule(g, f, it->second);
    }
  return b.raw();
}

RawCategory mon_e_category() {
  return monoid_category("mon_e", {"1", "e"}, "1", {{"e", "e", "e"}});
}

std::vector<RawCategory> fixture_zoo() {
  return {terminal_category(), gamma_category(), chain3_category(), diamond_category(),
          mon_e_category()};
}

static Mor named(const FinCat& c, const std::string& n) {
  auto m = c.morphism_index(n);
  if (!m) throw std::logic_error("fixture morphism '" + n + "' missing");
  return *m;
}

MorMask chain3_meets_class(const FinCat& c) {
  return mask_bit(named(c, "id_x")) | mask_bit(named(c, "id_y")) | mask_bit(named(c, "id_1")) |
         mask_bit(named(c, "x<=y"));
}

std::vector<Mor> chain3_base_family(const FinCat& c) {
  std::vector<Mor> f(c.object_count());
  f[*c.object_index("x")] = named(c, "id_x");
  f[*c.object_index("y")] = named(c, "x<=y");
  f[*c.object_index("1")] = named(c, "x<=1");
  return f;
}

}  // namespace fintopos
