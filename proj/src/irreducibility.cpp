#include "spanbound/irreducibility.hpp"

#include <set>

namespace spanbound {
namespace {

using PP = poly::Poly<PrimeField>;
using QP = poly::Poly<RationalField>;

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

PP x_poly(const PrimeField& f) { return poly::monomial(f, f.one(), 1); }

// x^(p^k) mod g
PP frobenius_power(const PrimeField& f, const PP& g, std::uint64_t k) {
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), f.modulus(), k);
  return poly::powmod(f, x_poly(f), e, g);
}

// Degrees of the irreducible factors of a squarefree monic g over GF(p).
std::vector<int> factor_degrees(const PrimeField& f, PP g) {
  std::vector<int> degs;
  const PP x = x_poly(f);
  PP h = poly::mod(f, x, g);
  for (int d = 1; 2 * d <= poly::degree(g); ++d) {
    h = poly::powmod(f, h, mpz_class(f.modulus()), g);
    auto gd = poly::gcd(f, g, poly::sub(f, h, poly::mod(f, x, g)));
    for (int i = 0; i < poly::degree(gd) / d; ++i) degs.push_back(d);
    if (gd.size() > 1) {
      g = poly::divmod(f, g, gd).first;
      h = poly::mod(f, h, g);
    }
  }
  if (poly::degree(g) > 0) degs.push_back(poly::degree(g));
  return degs;
}

std::set<int> subset_sums(const std::vector<int>& degs) {
  std::set<int> s{0};
  for (int d : degs) {
    auto next = s;
    for (int v : s) next.insert(v + d);
    s = std::move(next);
  }
  return s;
}

// Integer primitive multiple of a rational polynomial.
std::vector<mpz_class> integral(const QP& g) {
  mpz_class l = 1;
  for (const auto& c : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class content = 0;
  for (const auto& c : g) {
    mpz_class v = c.get_num() * (l / c.get_den());
    z.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  for (auto& v : z) v /= content;
  return z;
}

std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

bool has_rational_root(const RationalField& q, const QP& g, bool& decided) {
  auto z = integral(g);
  decided = true;
  if (z[0] == 0) return true;
  auto num = divisors(z[0]);
  auto den = divisors(z.back());
  if (!num || !den) {
    decided = false;
    return false;
  }
  for (const auto& a : *num)
    for (const auto& b : *den)
      for (int sign : {1, -1}) {
        mpq_class r(a * sign, b);
        r.canonicalize();
        if (q.is_zero(poly::eval(q, g, r))) return true;
      }
  return false;
}

// Monic polynomials of degree <= max_deg over GF(p) dividing a; nullopt when too many to try.
std::optional<std::vector<PP>> monic_divisors(const PrimeField& f, const PP& a) {
  const int n = poly::degree(a);
  std::uint64_t total = 0, count = 1;
  for (int d = 0; d <= n; ++d) {
    total += count;
    if (total > 200000) return std::nullopt;
    if (d < n) count *= f.order();
  }
  std::vector<PP> out;
  for (int d = 0; d <= n; ++d) {
    std::uint64_t per = 1;
    for (int i = 0; i < d; ++i) per *= f.order();
    for (std::uint64_t idx = 0; idx < per; ++idx) {
      PP c(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % f.order());
        v /= f.order();
      }
      c[static_cast<std::size_t>(d)] = 1;
      if (poly::mod(f, a, c).empty()) out.push_back(std::move(c));
    }
  }
  return out;
}

template <CoefficientField Base>
std::vector<poly::Poly<Base>> clear_denominators(const RationalFunctionField<Base>& rf,
                                                 const poly::Poly<RationalFunctionField<Base>>& g) {
  const Base& b = rf.base();
  poly::Poly<Base> l{b.one()};
  for (const auto& c : g) {
    auto d = poly::gcd(b, l, c.den);
    l = poly::divmod(b, poly::mul(b, l, c.den), d).first;
  }
  std::vector<poly::Poly<Base>> out;
  for (const auto& c : g) out.push_back(poly::mul(b, c.num, poly::divmod(b, l, c.den).first));
  return out;
}

template <CoefficientField Base>
std::optional<poly::Poly<Base>> specialize(const Base& b, const std::vector<poly::Poly<Base>>& coeffs,
                                           const typename Base::value_type& s0) {
  poly::Poly<Base> out;
  for (const auto& c : coeffs) out.push_back(poly::eval(b, c, s0));
  if (b.is_zero(out.back())) return std::nullopt;
  return out;
}

}  // namespace

bool is_irreducible(const PrimeField& f, const PP& input) {
  PP g = input;
  poly::trim(f, g);
  const int n = poly::degree(g);
  if (n < 1) return false;
  if (n == 1) return true;
  g = poly::monic(f, g);
  const PP x = poly::mod(f, x_poly(f), g);
  for (auto q : prime_divisors(static_cast<std::uint64_t>(n))) {
    auto h = poly::sub(f, frobenius_power(f, g, static_cast<std::uint64_t>(n) / q), x);
    if (poly::gcd(f, g, h).size() != 1) return false;
  }
  return frobenius_power(f, g, static_cast<std::uint64_t>(n)) == x;
}

void check_irreducible(const PrimeField& f, const PP& g) {
  if (!is_irreducible(f, g)) fail(ErrorKind::ReducibleModulus, poly::format(f, g, "x") + " is reducible over " + f.describe());
}

void check_irreducible(const RationalField& q, const QP& g) {
  const int n = poly::degree(g);
  if (n < 1) fail(ErrorKind::ReducibleModulus, "constant modulus");
  if (n == 1) return;
  bool decided = false;
  if (has_rational_root(q, g, decided)) fail(ErrorKind::ReducibleModulus, poly::format(q, g, "y") + " has a rational root");
  if (decided && n <= 3) return;
  // Intersect the possible factor degrees over several good primes.
  auto z = integral(g);
  std::set<int> possible;
  for (int k = 0; k <= n; ++k) possible.insert(k);
  int good = 0;
  for (std::uint32_t p = 2; p < 400 && good < 24; ++p) {
    if (!is_prime(p)) continue;
    PrimeField f(p);
    if (f.from_mpz(z.back()) == 0) continue;
    PP r;
    for (const auto& c : z) r.push_back(f.from_mpz(c));
    r = poly::monic(f, r);
    if (poly::gcd(f, r, poly::derivative(f, r)).size() != 1) continue;
    ++good;
    auto sums = subset_sums(factor_degrees(f, r));
    std::set<int> keep;
    for (int v : possible)
      if (sums.count(v)) keep.insert(v);
    possible = std::move(keep);
    if (possible.size() == 2) return;
  }
  fail(ErrorKind::UnverifiableModulus, "cannot certify irreducibility of " + poly::format(q, g, "y") + " over Q");
}

void check_irreducible(const RationalFunctionField<PrimeField>& rf, const poly::Poly<RationalFunctionField<PrimeField>>& g) {
  const PrimeField& f = rf.base();
  const int n = poly::degree(g);
  if (n < 1) fail(ErrorKind::ReducibleModulus, "constant modulus");
  if (n == 1) return;
  auto coeffs = clear_denominators(rf, g);
  const std::string shown = poly::format(rf, g, "y");
  if (coeffs.front().empty()) fail(ErrorKind::ReducibleModulus, shown + " has the root 0");
  if (n <= 3) {
    auto nums = monic_divisors(f, coeffs.front());
    auto dens = monic_divisors(f, coeffs.back());
    if (nums && dens) {
      for (const auto& u : *nums)
        for (const auto& v : *dens)
          for (std::uint32_t lambda = 1; lambda < f.modulus(); ++lambda) {
            auto r = rf.make(poly::scale(f, u, lambda), v);
            if (rf.is_zero(poly::eval(rf, g, r))) fail(ErrorKind::ReducibleModulus, shown + " has a root in " + rf.describe());
          }
      return;
    }
  }
  for (std::uint32_t s0 = 0; s0 < f.modulus() && s0 < 1000; ++s0) {
    auto spec = specialize(f, coeffs, s0);
    if (spec && is_irreducible(f, *spec)) return;
  }
  fail(ErrorKind::UnverifiableModulus, "cannot certify irreducibility of " + shown + " over " + rf.describe());
}

void check_irreducible(const RationalFunctionField<RationalField>& rf,
                       const poly::Poly<RationalFunctionField<RationalField>>& g) {
  const RationalField& q = rf.base();
  const int n = poly::degree(g);
  if (n < 1) fail(ErrorKind::ReducibleModulus, "constant modulus");
  if (n == 1) return;
  auto coeffs = clear_denominators(rf, g);
  const std::string shown = poly::format(rf, g, "y");
  if (coeffs.front().empty()) fail(ErrorKind::ReducibleModulus, shown + " has the root 0");
  for (int k = 0; k < 16; ++k) {
    mpq_class s0 = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    auto spec = specialize(q, coeffs, s0);
    if (!spec) continue;
    try {
      check_irreducible(q, *spec);
      return;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ReducibleModulus && e.kind() != ErrorKind::UnverifiableModulus) throw;
    }
  }
  fail(ErrorKind::UnverifiableModulus, "cannot certify irreducibility of " + shown + " over " + rf.describe());
}

PP smallest_irreducible(const PrimeField& f, int n) {
  if (n < 1 || n > 16) fail(ErrorKind::InvalidArgument, "extension degree must be in [1, 16]");
  std::uint64_t per = 1;
  for (int i = 0; i < n; ++i) per *= f.order();
  for (std::uint64_t idx = 0; idx < per; ++idx) {
    PP c(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t v = idx;
    for (int i = 0; i < n; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % f.order());
      v /= f.order();
    }
    c[static_cast<std::size_t>(n)] = 1;
    if (is_irreducible(f, c)) return c;
  }
  fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace spanbound
