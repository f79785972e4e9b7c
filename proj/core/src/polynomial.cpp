#include "octic/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "octic/integer_factor.hpp"

namespace octic {

namespace {

const Rational& zero_rational() {
  static const Rational kZero;
  return kZero;
}

BigInt lcm_of(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw PreconditionError("monomial of negative degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::identity() { return monomial(1, 1); }

UniPoly UniPoly::parse(std::string_view text) {
  auto first = text.find('[');
  auto last = text.rfind(']');
  if (first == std::string_view::npos || last == std::string_view::npos || last < first) {
    throw ParseError("polynomial must be written as [c0, c1, ...]: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(first + 1, last - first - 1);
  std::vector<Rational> coeffs;
  if (body.find_first_not_of(" \t\n") == std::string_view::npos) return UniPoly();
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const auto piece = body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start);
    coeffs.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return UniPoly(std::move(coeffs));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (is_zero()) return zero_rational();
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

std::string UniPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) os << ", ";
    os << coeffs_[i];
  }
  if (coeffs_.empty()) os << '0';
  os << ']';
  return os.str();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly& UniPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

UniPoly product(std::span<const UniPoly> factors) {
  UniPoly acc = UniPoly::constant(1);
  for (const auto& f : factors) acc *= f;
  return acc;
}

DivRem divrem(const UniPoly& p, const UniPoly& q) {
  if (q.is_zero()) throw PreconditionError("polynomial division by zero");
  const int dq = q.degree();
  if (p.degree() < dq) return {UniPoly(), p};
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dq + 1));
  const Rational inv_lead = q.leading().inverse();
  for (int k = p.degree() - dq; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + dq)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * q.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_divide(const UniPoly& p, const UniPoly& q) {
  auto [quo, rem] = divrem(p, q);
  if (!rem.is_zero()) {
    throw VerificationError("inexact division of " + p.to_string() + " by " + q.to_string());
  }
  return quo;
}

bool divides(const UniPoly& q, const UniPoly& p) { return divrem(p, q).remainder.is_zero(); }

UniPoly gcd(UniPoly p, UniPoly q) {
  while (!q.is_zero()) {
    UniPoly r = divrem(p, q).remainder;
    p = std::move(q);
    q = r.monic();
  }
  return p.monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

UniPoly compose_power(const UniPoly& p, int k) {
  if (k < 1) throw PreconditionError("compose_power needs k >= 1");
  if (p.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree() * k + 1));
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i * k)] = p.coeff(i);
  return UniPoly(std::move(out));
}

UniPoly shift(const UniPoly& p, const Rational& s) {
  // Horner in the shifted variable: p(x + s) = (...(c_n (x+s) + c_{n-1})(x+s) ...).
  const UniPoly x_plus_s{s, 1};
  UniPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x_plus_s + UniPoly::constant(p.coeff(i));
  return acc;
}

UniPoly scale_argument(const UniPoly& p, const Rational& c) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  Rational power = 1;
  for (auto& coeff : out) {
    coeff *= power;
    power *= c;
  }
  return UniPoly(std::move(out));
}

IntegerForm integer_form(const UniPoly& p) {
  if (p.is_zero()) return {Rational(), {}};
  BigInt denominators = 1;
  for (const auto& c : p.coeffs()) denominators = lcm_of(denominators, c.den());
  std::vector<BigInt> ints;
  ints.reserve(p.coeffs().size());
  BigInt content = 0;
  for (const auto& c : p.coeffs()) {
    ints.push_back(c.num() * (denominators / c.den()));
    content = gcd_of(content, ints.back());
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return {Rational(content, denominators), std::move(ints)};
}

Rational resultant(const UniPoly& p_in, const UniPoly& q_in) {
  if (p_in.is_zero() || q_in.is_zero()) throw PreconditionError("resultant of the zero polynomial");
  UniPoly p = p_in;
  UniPoly q = q_in;
  Rational scale = 1;
  // Res(p, q) = (-1)^(dp dq) lc(q)^(dp - dr) Res(q, r) with r = p mod q.
  while (true) {
    const int dp = p.degree();
    const int dq = q.degree();
    if (dq == 0) return scale * q.leading().pow(static_cast<unsigned>(dp));
    if (dp == 0) return scale * p.leading().pow(static_cast<unsigned>(dq));
    UniPoly r = divrem(p, q).remainder;
    if (r.is_zero()) return 0;
    const int dr = r.degree();
    if ((dp * dq) % 2 != 0) scale = -scale;
    scale *= q.leading().pow(static_cast<unsigned>(dp - dr));
    p = std::move(q);
    q = std::move(r);
  }
}

Rational sylvester_resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant of the zero polynomial");
  const IntegerForm pi = integer_form(p);
  const IntegerForm qi = integer_form(q);
  const int dp = p.degree();
  const int dq = q.degree();
  const int size = dp + dq;
  BigInt det = 1;
  if (size > 0) {
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(size), std::vector<BigInt>(size, 0));
    for (int r = 0; r < dq; ++r) {
      for (int j = 0; j <= dp; ++j) m[r][r + j] = pi.coeffs[static_cast<std::size_t>(dp - j)];
    }
    for (int r = 0; r < dp; ++r) {
      for (int j = 0; j <= dq; ++j) m[dq + r][r + j] = qi.coeffs[static_cast<std::size_t>(dq - j)];
    }
    // Bareiss: every division below is exact over Z.
    BigInt previous = 1;
    int sign = 1;
    for (int k = 0; k < size; ++k) {
      if (m[k][k] == 0) {
        int pivot = k + 1;
        while (pivot < size && m[pivot][k] == 0) ++pivot;
        if (pivot == size) return 0;
        std::swap(m[k], m[pivot]);
        sign = -sign;
      }
      for (int i = k + 1; i < size; ++i) {
        for (int j = k + 1; j < size; ++j) {
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
          mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
        }
        m[i][k] = 0;
      }
      previous = m[k][k];
    }
    det = sign * m[size - 1][size - 1];
  }
  // Res(c1 P, c2 Q) = c1^deg(Q) c2^deg(P) Res(P, Q).
  return pi.content.pow(static_cast<unsigned>(dq)) * qi.content.pow(static_cast<unsigned>(dp)) * Rational(det);
}

UniPoly interpolated_resultant(const ResultantSampler& sampler, int degree_bound, int generic_p_degree,
                               int generic_q_degree) {
  if (degree_bound < 0) throw PreconditionError("negative degree bound");
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(static_cast<std::size_t>(degree_bound) + 1);
  long step = 0;
  // Degenerate abscissae are finitely many, so the loop terminates; the guard
  // catches a sampler whose generic degrees were misdeclared.
  const long guard = 4L * (degree_bound + 1) + 64;
  while (static_cast<int>(points.size()) <= degree_bound) {
    if (step > guard) throw PreconditionError("resultant sampler keeps producing degenerate samples");
    const long x0 = (step % 2 == 0) ? -(step / 2) : (step + 1) / 2;
    ++step;
    auto [py, qy] = sampler(Rational(x0));
    if (py.degree() != generic_p_degree || qy.degree() != generic_q_degree) continue;
    points.emplace_back(Rational(x0), resultant(py, qy));
  }
  return interpolate(points);
}

Rational discriminant(const UniPoly& p) {
  const int n = p.degree();
  if (n < 1) throw PreconditionError("discriminant of a constant polynomial");
  Rational value = resultant(p, p.derivative()) / p.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) value = -value;
  return value;
}

bool power_comp_disc_square_test(const UniPoly& base, int k) {
  if (k < 2 || k % 2 != 0) throw PreconditionError("power_comp_disc_square_test needs an even k; use discriminant()");
  if (!base.is_monic()) throw PreconditionError("power_comp_disc_square_test needs a monic base");
  const Rational c = base.coeff(0);
  if (c.is_zero()) throw PreconditionError("power_comp_disc_square_test needs a nonzero constant term");
  if (!is_squarefree(base)) throw PreconditionError("power_comp_disc_square_test needs a squarefree base");
  const long n = static_cast<long>(k) * base.degree();
  return is_rational_square((n / 2) % 2 == 0 ? c : -c);
}

std::optional<UniPoly> poly_square_root(const UniPoly& p) {
  if (p.is_zero()) return UniPoly();
  const int n = p.degree();
  if (n % 2 != 0) return std::nullopt;
  const auto lead_root = rational_square_root(p.leading());
  if (!lead_root) return std::nullopt;
  const int m = n / 2;
  std::vector<Rational> g(static_cast<std::size_t>(m) + 1);
  g[static_cast<std::size_t>(m)] = *lead_root;
  const Rational inv_twice_lead = (Rational(2) * *lead_root).inverse();
  for (int k = m - 1; k >= 0; --k) {
    // Coefficient of x^(m+k) in g^2 involves g_k once (times 2 g_m) and
    // products of already-known coefficients g_i g_j, i + j = m + k, k < i, j < m.
    Rational acc = p.coeff(m + k);
    for (int i = k + 1; i < m; ++i) {
      const int j = m + k - i;
      if (j > k && j < m) acc -= g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
    }
    g[static_cast<std::size_t>(k)] = acc * inv_twice_lead;
  }
  UniPoly root(std::move(g));
  if (root * root != p) return std::nullopt;
  return root;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("rational_roots of the zero polynomial");
  IntegerForm form = integer_form(p);
  std::vector<BigInt>& c = form.coeffs;
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  }
  const int n = static_cast<int>(c.size()) - 1;
  if (n >= 1) {
    // e^n P(d/e) computed by homogeneous Horner stays in Z.
    auto vanishes = [&](const BigInt& d, const BigInt& e) {
      BigInt acc = c[static_cast<std::size_t>(n)];
      BigInt epow = e;
      for (int i = n - 1; i >= 0; --i) {
        acc = acc * d + c[static_cast<std::size_t>(i)] * epow;
        epow *= e;
      }
      return acc == 0;
    };
    const auto numerators = positive_divisors(c.front());
    const auto denominators = positive_divisors(c.back());
    for (const auto& e : denominators) {
      for (const auto& d : numerators) {
        if (gcd_of(d, e) != 1) continue;
        if (vanishes(d, e)) roots.insert(Rational(d, e));
        if (vanishes(-d, e)) roots.insert(Rational(BigInt(-d), e));
      }
    }
  }
  return {roots.begin(), roots.end()};
}

UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw PreconditionError("interpolate: duplicated abscissa " + points[i].first.to_string());
      }
    }
  }
  if (n == 0) return {};
  // Newton divided differences, then nested multiplication back to the monomial basis.
  std::vector<Rational> diffs(n);
  for (std::size_t i = 0; i < n; ++i) diffs[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      diffs[i] = (diffs[i] - diffs[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  UniPoly acc = UniPoly::constant(diffs[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = acc * UniPoly{-points[i].first, 1} + UniPoly::constant(diffs[i]);
  }
  return acc;
}

}  // namespace octic
