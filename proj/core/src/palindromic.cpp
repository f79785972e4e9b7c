#include "octic/palindromic.hpp"

#include "octic/octic_irred.hpp"

namespace octic::palindromic {

namespace {

[[noreturn]] void throw_reducible(const Rational& a, const Rational& b) {
  auto witness = power_comp_factor_witness(palindromic_quartic(a, b));
  throw ReducibleInputError("x^8 + (" + a.to_string() + ")x^6 + (" + b.to_string() + ")x^4 + (" + a.to_string() +
                                ")x^2 + 1 is reducible",
                            witness.value_or(std::vector<UniPoly>{}));
}

void require(bool condition, const std::string& what) {
  if (!condition) throw VerificationError(what);
}

}  // namespace

Input Input::make(const Rational& a, const Rational& b) {
  if (a.is_zero()) throw OutOfScopeError("palindromic family requires a != 0");
  if (!palindromic_octic_irreducible(a, b)) throw_reducible(a, b);
  return Input(a, b);
}

UniPoly Input::polynomial() const { return palindromic_octic(a_, b_); }

std::pair<UniPoly, UniPoly> build_quartic_resolvent_factors(const Rational& a, const Rational& b) {
  return {UniPoly{b + 2 - 2 * a, 0, a - 4, 0, 1}, UniPoly{b + 2 + 2 * a, 0, a + 4, 0, 1}};
}

UniPoly build_R16(const Rational& a, const Rational& b) {
  const Rational a2 = a * a;
  const Rational a4 = a2 * a2;
  const Rational b2 = b * b;
  const Rational b3 = b2 * b;
  const Rational base = 8 + a2 - 4 * b;
  std::vector<Rational> c(17);
  c[16] = 1;
  c[14] = 4 * a;
  c[12] = 2 * (6 + 3 * a2 - b);
  c[10] = 2 * a * (6 + 2 * a2 - b);
  c[8] = 20 + 22 * a2 + a4 - 52 * b + 2 * a2 * b - 7 * b2;
  c[6] = 2 * a * (-28 + 4 * a2 - 4 * b + a2 * b - 3 * b2);
  c[4] = 192 - 32 * a2 + 2 * a4 + 16 * b - 6 * a2 * b + 16 * b2 + a2 * b2 - 4 * b3;
  c[2] = 2 * a * base * (b - 6);
  c[0] = base * base;
  return UniPoly(std::move(c));
}

std::vector<GroupId> candidate_groups(QuarticGroup group) {
  switch (group) {
    case QuarticGroup::E4:
      return {GroupId(2), GroupId(3), GroupId(4), GroupId(9)};
    case QuarticGroup::C4:
      return {GroupId(2), GroupId(10)};
    case QuarticGroup::D4:
      return {GroupId(4), GroupId(9), GroupId(10), GroupId(18)};
  }
  throw PreconditionError("unknown quartic group");
}

std::optional<InvariantPair> compute_invariants(const Rational& a, const Rational& b) {
  const auto c = rational_square_root((b + 2) * (b + 2) - 4 * a * a);
  if (!c) return std::nullopt;
  return InvariantPair{(b + 2 + *c) / 2, (b + 2 - *c) / 2, *c};
}

std::pair<UniPoly, UniPoly> build_S_factors(const Rational& a, const InvariantPair& inv) {
  const auto make = [&a](const Rational& P, const Rational& Q) {
    const Rational shifted = P - 4;
    return UniPoly{shifted * shifted, 2 * a * shifted, 8 + 2 * P - 4 * Q + a * a, 2 * a, 1};
  };
  return {make(inv.P, inv.Q), make(inv.Q, inv.P)};
}

std::array<SplitStatus, 2> s_factor_status(const Rational& a, const Rational& b, const InvariantPair& inv) {
  if (a.is_zero()) throw PreconditionError("s_factor_status requires a != 0");
  if (palindromic_quartic_classify(a, b) != QuarticGroup::E4) {
    throw PreconditionError("s_factor_status requires the E4 case");
  }
  if (inv.P + inv.Q != b + 2 || inv.P * inv.Q != a * a || inv.P - inv.Q != inv.c || inv.c.sign() < 0) {
    throw PreconditionError("invariant pair does not match (a, b)");
  }
  const Rational& P = inv.P;
  const Rational& Q = inv.Q;
  const bool sum_square = is_rational_square(b + 2 + 2 * a);
  require(!is_rational_square(a * a - 4 * b + 8), "a^2-4b+8 is a square in the E4 case");
  require(is_rational_square(P) == sum_square && is_rational_square(Q) == sum_square,
          "squareness of P, Q and b+2+2a disagree");
  require(!is_rational_square(P * (Q - 4)) && !is_rational_square(Q * (P - 4)), "P(Q-4) or Q(P-4) is a square");

  const auto [s1, s2] = build_S_factors(a, inv);
  std::array<SplitStatus, 2> out{SplitStatus{"S1(x^2)", compose_power(s1, 2), std::nullopt},
                                 SplitStatus{"S2(x^2)", compose_power(s2, 2), std::nullopt}};
  const auto even = [](const Rational& u, const Rational& v) { return UniPoly{v, 0, u, 0, 1}; };
  if (sum_square) {
    const Rational sqrt_p = *rational_square_root(P);
    const Rational sqrt_q = *rational_square_root(Q);
    const int s = a.sign();
    const Rational u1 = 2 + s * sqrt_p;
    const Rational u2 = 2 - s * sqrt_p;
    const Rational v1 = 2 + s * sqrt_q;
    const Rational v2 = 2 - s * sqrt_q;
    out[0].factors = std::pair{even(a + 2 * sqrt_q, u1 * u1), even(a - 2 * sqrt_q, u2 * u2)};
    out[1].factors = std::pair{even(a + 2 * sqrt_p, v1 * v1), even(a - 2 * sqrt_p, v2 * v2)};
  } else {
    const auto root_p4 = rational_square_root(P - 4);
    const auto root_q4 = rational_square_root(Q - 4);
    require(!(root_p4 && root_q4), "both (b-6+c)/2 and (b-6-c)/2 are squares");
    if (root_p4) out[1].factors = std::pair{even(a + 2 * *root_p4, Q - 4), even(a - 2 * *root_p4, Q - 4)};
    if (root_q4) out[0].factors = std::pair{even(a + 2 * *root_q4, P - 4), even(a - 2 * *root_q4, P - 4)};
  }
  for (const auto& status : out) {
    if (status.factors) {
      require(status.factors->first * status.factors->second == status.octic,
              "split factors of " + status.name + " do not multiply back");
    }
  }
  return out;
}

Classification classify(const Rational& a_in, const Rational& b_in) {
  const Input in = Input::make(a_in, b_in);
  const Rational& a = in.a();
  const Rational& b = in.b();

  Classification out;
  ConditionTrace& t = out.trace;
  const Rational delta = (b + 2) * (b + 2) - 4 * a * a;
  const Rational plus = b + 2 + 2 * a;
  const Rational minus = b + 2 - 2 * a;
  const Rational kaplansky = a * a - 4 * b + 8;
  const auto done = [&](int index) {
    out.exact = true;
    out.groups = {GroupId(index)};
    return out;
  };

  if (t.test("(b+2)^2-4a^2", delta)) {
    out.quartic_group = QuarticGroup::E4;
    const auto inv = *compute_invariants(a, b);
    for (const auto& status : s_factor_status(a, b, inv)) {
      if (status.split()) out.split_blocks.push_back(status.name);
    }
    if (t.test("b+2+2a", plus)) return done(3);
    if (t.test("(b-6+c)/2", inv.P - 4) || t.test("(b-6-c)/2", inv.Q - 4)) return done(4);
    if (t.test("(a^2-4b+8)(b+2+2a)", kaplansky * plus)) return done(2);
    return done(9);
  }
  if (t.test("(a^2-4b+8)((b+2)^2-4a^2)", kaplansky * delta)) {
    out.quartic_group = QuarticGroup::C4;
    if (t.test("b+2-2a", minus) || t.test("b+2+2a", plus)) return done(2);
    return done(10);
  }
  out.quartic_group = QuarticGroup::D4;
  out.exact = false;
  out.groups = candidate_groups(QuarticGroup::D4);
  return out;
}

}  // namespace octic::palindromic
