#include "octic/doubly_even.hpp"

#include "octic/octic_irred.hpp"
#include "octic/quartic.hpp"

namespace octic::doubly_even {

namespace {

[[noreturn]] void throw_reducible(const Rational& a, const Rational& b) {
  auto witness = power_comp_factor_witness(even_quartic(a, b));
  throw ReducibleInputError("x^8 + (" + a.to_string() + ")x^4 + (" + b.to_string() + ") is reducible",
                            witness.value_or(std::vector<UniPoly>{}));
}

}  // namespace

Input Input::make(const Rational& a, const Rational& b) {
  const auto root = rational_square_root(b);
  if (!root) {
    throw OutOfScopeError("b = " + b.to_string() +
                          " is not a rational square; this family is classified in the b-nonsquare literature");
  }
  if (!even_quartic_irreducible(a, b) || !doubly_even_irreducible(a, b)) throw_reducible(a, b);
  return Input(a, b, *root);
}

UniPoly Input::polynomial() const { return doubly_even_octic(a_, b_); }

ResolventFactors build_resolvent_factors(const Input& in) {
  const Rational& a = in.a();
  const Rational& s = in.sqrt_b();
  const Rational m = a - 2 * s;
  const Rational p = a + 2 * s;
  return {UniPoly{m * m, 0, 2 * a + 12 * s, 0, 1}, UniPoly{p * p, 0, 2 * a - 12 * s, 0, 1},
          UniPoly{16 * in.b(), 0, -4 * a, 0, 1}};
}

std::array<SplitStatus, 3> factor_status(const Input& in) {
  const Rational& a = in.a();
  const Rational& b = in.b();
  const Rational& s = in.sqrt_b();
  const auto resolvents = build_resolvent_factors(in);
  std::array<SplitStatus, 3> out{SplitStatus{"R1(x^2)", compose_power(resolvents.r1, 2), std::nullopt},
                                 SplitStatus{"R2(x^2)", compose_power(resolvents.r2, 2), std::nullopt},
                                 SplitStatus{"R3(x^2)", compose_power(resolvents.r3, 2), std::nullopt}};
  // x^4 + u x^2 + v paired with x^4 - u x^2 + v.
  const auto pair = [](const Rational& u, const Rational& v) {
    return std::pair{UniPoly{v, 0, u, 0, 1}, UniPoly{v, 0, -u, 0, 1}};
  };
  // x^4 + (c + w) paired with x^4 + (c - w).
  const auto shifted = [](const Rational& c, const Rational& w) {
    return std::pair{UniPoly{c + w, 0, 0, 0, 1}, UniPoly{c - w, 0, 0, 0, 1}};
  };

  if (auto w = rational_square_root(2 * b + a * s)) out[0].factors = shifted(a + 6 * s, 4 * *w);

  if (auto q = rational_square_root(s)) {
    out[1].factors = pair(4 * *q, a + 2 * s);
  } else if (auto w = rational_square_root(2 * b - a * s)) {
    out[1].factors = shifted(a - 6 * s, 4 * *w);
  }

  if (auto t = rational_square_root(a - 2 * s)) {
    out[2].factors = pair(2 * *t, -4 * s);
  } else if (auto t = rational_square_root(a + 2 * s)) {
    out[2].factors = pair(2 * *t, 4 * s);
  }
  return out;
}

bool theta_square_test(const Input& in, ThetaCandidate candidate) {
  const Rational& a = in.a();
  const Rational& s = in.sqrt_b();
  if (is_rational_square(s)) {
    throw PreconditionError("theta_square_test requires sqrt(b) = " + s.to_string() + " not to be a square");
  }
  const Rational r = candidate == ThetaCandidate::minus_one ? Rational(-1)
                     : candidate == ThetaCandidate::sqrt_b  ? s
                                                            : -s;
  return is_rational_square(r * (a * a - 4 * in.b())) || is_rational_square(r * (-a + 2 * s)) ||
         is_rational_square(r * (-a - 2 * s));
}

Classification classify(const Rational& a_in, const Rational& b_in) {
  const Input in = Input::make(a_in, b_in);
  const Rational& a = in.a();
  const Rational& b = in.b();
  const Rational& s = in.sqrt_b();

  Classification out;
  out.exact = true;
  out.quartic_group = QuarticGroup::E4;
  for (const auto& status : factor_status(in)) {
    if (status.split()) out.split_blocks.push_back(status.name);
  }
  ConditionTrace& t = out.trace;
  const auto done = [&](int index) {
    out.groups = {GroupId(index)};
    return out;
  };

  const Rational plus = a + 2 * s;
  const Rational minus = a - 2 * s;
  const Rational two_b_minus = 2 * b - a * s;
  const Rational two_b_plus = 2 * b + a * s;
  const Rational disc_like = 4 * b - a * a;

  if (t.test("sqrt_b", s)) {
    if (t.test("a+2sqrt_b", plus)) return done(3);
    if (t.test("a-2sqrt_b", minus)) return done(4);
    if (t.test("4b-a^2", disc_like)) return done(2);
    return done(9);
  }
  if (t.test("a+2sqrt_b", plus)) {
    if (t.test("2b-a*sqrt_b", two_b_minus)) return done(4);
    if (t.test("-(2b-a*sqrt_b)", -two_b_minus)) return done(2);
    return done(9);
  }
  if (t.test("a-2sqrt_b", minus)) {
    if (t.test("2b+a*sqrt_b", two_b_plus)) return done(4);
    if (t.test("-(2b+a*sqrt_b)", -two_b_plus)) return done(2);
    return done(9);
  }
  const bool r2_splits = t.test("2b-a*sqrt_b", two_b_minus);
  const bool r1_splits = t.test("2b+a*sqrt_b", two_b_plus);
  if (r2_splits && r1_splits) return done(4);
  if (r2_splits || r1_splits) return done(9);
  if (t.test("4b-a^2", disc_like) || t.test("sqrt_b*(a^2-4b)", s * -disc_like) ||
      t.test("sqrt_b*(4b-a^2)", s * disc_like) || t.test("-(2b-a*sqrt_b)", -two_b_minus) ||
      t.test("-(2b+a*sqrt_b)", -two_b_plus)) {
    return done(11);
  }
  return done(22);
}

GroupId classify_b1(const Rational& a) {
  if (!even_quartic_irreducible(a, 1) || !doubly_even_irreducible(a, 1)) throw_reducible(a, 1);
  if (is_rational_square(a + 2)) return GroupId(3);
  if (is_rational_square(a - 2)) return GroupId(4);
  if (is_rational_square(4 - a * a)) return GroupId(2);
  return GroupId(9);
}

}  // namespace octic::doubly_even
