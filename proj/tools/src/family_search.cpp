#include "octic/doubly_even.hpp"
#include "octic/octic_irred.hpp"
#include "octic/quartic.hpp"
#include "octic_cli/cli.hpp"

namespace octic::cli {

std::vector<FamilyMember> family_search(Template family_template, const IntRange& t_range) {
  std::vector<FamilyMember> out;
  for (long t = t_range.lo; t <= t_range.hi; ++t) {
    FamilyMember m;
    m.t = t;
    Rational a;
    switch (family_template) {
      case Template::ft:
        a = Rational(t) * Rational(t) - 2;
        break;
    }
    m.polynomial = doubly_even_octic(a, 1);
    m.irreducible = even_quartic_irreducible(a, 1) && doubly_even_irreducible(a, 1);
    if (m.irreducible) m.group = doubly_even::classify(a, 1).group();
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace octic::cli
