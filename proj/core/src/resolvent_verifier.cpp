#include "octic/resolvent_verifier.hpp"

#include <algorithm>

#include "octic/doubly_even.hpp"
#include "octic/palindromic.hpp"

namespace octic {

namespace {

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}
  bool check(std::string name, bool passed, std::string detail = {}) {
    report_.checks.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  }

 private:
  VerificationReport& report_;
};

void append(OrbitPattern& pattern, const UniPoly& p) {
  for (int d : subset_factorization(p).degrees) pattern.push_back(d);
}

bool matches_some_group(const std::vector<GroupId>& groups, const OrbitPattern& observed) {
  return std::any_of(groups.begin(), groups.end(), [&](GroupId g) { return orbit_pattern(g) == observed; });
}

}  // namespace

UniPoly linear_resolvent(const UniPoly& f) {
  if (f.degree() != 8 || !f.is_monic()) throw PreconditionError("linear_resolvent needs a monic octic");
  if (f.coeff(0).is_zero()) throw PreconditionError("linear_resolvent needs f(0) != 0");
  const UniPoly reflected = scale_argument(f, -1);
  const ResultantSampler sampler = [&](const Rational& x0) { return std::pair{f, shift(reflected, -x0)}; };
  const UniPoly full = interpolated_resultant(sampler, 64, 8, 8);
  const UniPoly diagonal = Rational(256) * scale_argument(f, Rational(1, 2));
  const UniPoly quotient = exact_divide(full, diagonal);
  auto root = poly_square_root(quotient);
  if (!root) throw VerificationError("resultant quotient is not a square in Q[x]");
  return *root;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
}

std::string VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name;
  }
  return {};
}

Classification refine_by_pattern(const Classification& c, const OrbitPattern& observed) {
  Classification out = c;
  if (c.exact) return out;
  out.groups.clear();
  for (GroupId g : c.groups) {
    if (orbit_pattern(g) == observed) out.groups.push_back(g);
  }
  if (out.groups.empty()) {
    throw VerificationError("no candidate group has orbit pattern " + format_pattern(observed));
  }
  out.exact = out.groups.size() == 1;
  out.refined_by_pattern = observed;
  return out;
}

Classification classify_palindromic_refined(const Rational& a, const Rational& b) {
  Classification c = palindromic::classify(a, b);
  if (c.exact) return c;
  const auto [r1, r2] = palindromic::build_quartic_resolvent_factors(a, b);
  OrbitPattern observed{4};
  append(observed, palindromic::build_R16(a, b));
  append(observed, r1);
  append(observed, r2);
  std::sort(observed.begin(), observed.end());
  return refine_by_pattern(c, observed);
}

VerificationReport verify_doubly_even(const Rational& a, const Rational& b) {
  VerificationReport report;
  Recorder rec(report);
  const auto in = doubly_even::Input::make(a, b);
  report.classification = doubly_even::classify(a, b);

  const auto resolvents = doubly_even::build_resolvent_factors(in);
  const UniPoly x4 = UniPoly::monomial(1, 4);
  const std::vector<UniPoly> blocks{compose_power(resolvents.r1, 2), compose_power(resolvents.r2, 2),
                                    compose_power(resolvents.r3, 2)};
  const UniPoly resolvent = linear_resolvent(in.polynomial());
  rec.check("resolvent = x^4 R1(x^2) R2(x^2) R3(x^2)", resolvent == x4 * blocks[0] * blocks[1] * blocks[2],
            resolvent.to_string());

  OrbitPattern observed{4};
  const auto statuses = doubly_even::factor_status(in);
  for (std::size_t i = 0; i < statuses.size(); ++i) {
    const auto& s = statuses[i];
    const FactorPattern pattern = subset_factorization(s.octic);
    for (int d : pattern.degrees) observed.push_back(d);
    rec.check(s.name + " split status agrees with factorization",
              s.split() == (pattern.degrees == std::vector<int>{4, 4}));
    if (s.split()) {
      const auto& [f1, f2] = *s.factors;
      rec.check(s.name + " factors multiply back", f1 * f2 == s.octic,
                f1.to_string() + " * " + f2.to_string());
      rec.check(s.name + " factors are irreducible quartics", quartic_irreducible(f1) && quartic_irreducible(f2));
    }
  }
  std::sort(observed.begin(), observed.end());
  report.observed_pattern = observed;
  const GroupId g = report.classification.group();
  rec.check("pattern matches " + g.to_string(), orbit_pattern(g) == observed,
            format_pattern(observed) + " vs " + format_pattern(orbit_pattern(g)));
  return report;
}

VerificationReport verify_palindromic(const Rational& a, const Rational& b) {
  VerificationReport report;
  Recorder rec(report);
  const auto in = palindromic::Input::make(a, b);
  const Classification base = palindromic::classify(a, b);

  const UniPoly r16 = palindromic::build_R16(a, b);
  const auto [r1, r2] = palindromic::build_quartic_resolvent_factors(a, b);
  const UniPoly resolvent = linear_resolvent(in.polynomial());
  rec.check("resolvent = x^4 R16 R1 R2", resolvent == UniPoly::monomial(1, 4) * r16 * r1 * r2, resolvent.to_string());
  rec.check("R1 != R2", r1 != r2);
  rec.check("R1 and R2 do not divide R16", !divides(r1, r16) && !divides(r2, r16));

  if (base.quartic_group == QuarticGroup::E4) {
    const auto inv = *palindromic::compute_invariants(a, b);
    const auto [s1, s2] = palindromic::build_S_factors(a, inv);
    rec.check("S1(x^2) S2(x^2) = R16", compose_power(s1, 2) * compose_power(s2, 2) == r16);
    rec.check("(b-6+c)/2 and (b-6-c)/2 not both squares",
              !(is_rational_square(inv.P - 4) && is_rational_square(inv.Q - 4)));
    for (const auto& s : palindromic::s_factor_status(a, b, inv)) {
      const FactorPattern pattern = subset_factorization(s.octic);
      rec.check(s.name + " split status agrees with factorization",
                s.split() == (pattern.degrees == std::vector<int>{4, 4}));
    }
  }

  OrbitPattern observed{4};
  append(observed, r16);
  append(observed, r1);
  append(observed, r2);
  std::sort(observed.begin(), observed.end());
  report.observed_pattern = observed;
  if (base.exact) {
    report.classification = base;
    const GroupId g = base.group();
    rec.check("pattern matches " + g.to_string(), orbit_pattern(g) == observed,
              format_pattern(observed) + " vs " + format_pattern(orbit_pattern(g)));
  } else if (rec.check("pattern consistent with candidate set", matches_some_group(base.groups, observed),
                       format_pattern(observed))) {
    report.classification = refine_by_pattern(base, observed);
  } else {
    report.classification = base;
  }
  return report;
}

}  // namespace octic
