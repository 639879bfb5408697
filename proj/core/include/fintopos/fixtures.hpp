#pragma once

// The stock categories used throughout the tests and the CLI's --fixtures
// output, plus the two generic generators (finite posets and finite monoids)
// that the workspace loader exposes.

#include <string>
#include <utility>
#include <vector>

#include "fintopos/fincat.hpp"

namespace fintopos {

// one object "*" with its identity
RawCategory terminal_category();

// graphs base: objects N, A and two parallel arrows s,t : N -> A
RawCategory gamma_category();

// the chain x <= y <= 1
RawCategory chain3_category();

// the four-point lattice 0 <= a,b <= 1 with a,b incomparable
RawCategory diamond_category();

// the two-element monoid {1, e} with e idempotent, one object "*"
RawCategory mon_e_category();

std::vector<RawCategory> fixture_zoo();

// Poset generator: objects plus covering pairs (a <= b); arrows are the pairs
// of the reflexive-transitive closure.  Non-identity arrows are named
// "a<=b", identities "id_a".
RawCategory poset_category(const std::string& name, const std::vector<std::string>& objects,
                           const std::vector<std::pair<std::string, std::string>>& le);

// Monoid generator: one object "*", morphisms named by the elements.  The
// table maps (g, f) -> g*f and must cover every non-unit pair.
RawCategory monoid_category(const std::string& name, const std::vector<std::string>& elements,
                            const std::string& unit,
                            const std::vector<std::vector<std::string>>& table_rows);

// chain3 helpers used in many suites
MorMask chain3_meets_class(const FinCat& c);        // {id_x, id_y, id_1, x<=y}
std::vector<Mor> chain3_base_family(const FinCat& c);  // {id_x, x<=y, x<=1}

}  // namespace fintopos
