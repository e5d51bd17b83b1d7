// Roots of polynomials over Q(zeta_n) that lie in Q(zeta_n).
//
// The square-free part is scaled to a monic polynomial with coefficients in
// Z[zeta_n], so its roots in the field are algebraic integers with integer
// power-basis coordinates. A bound A on those coordinates comes from the
// Cauchy bound and the trace form. For a prime l = 1 mod n with l > 2A + 1
// the ring Z[zeta_n]/l splits as a product of phi(n) copies of F_l, one per
// embedding zeta -> w^u. Roots are found mod l in each copy, recombined by a
// Vandermonde solve, lifted symmetrically and checked exactly.

#include <algorithm>
#include <numeric>
#include <random>

#include "hopflink/scalar.hpp"
#include "qsolve.hpp"

namespace hopf {

namespace {

using ZPoly = std::vector<Integer>;  // coefficients mod l, lowest first

struct ModRing {
  Integer l;

  Integer norm(const Integer& a) const {
    Integer r = a % l;
    if (r < 0) r += l;
    return r;
  }

  Integer powm(const Integer& base, const Integer& e) const {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), l.get_mpz_t());
    return r;
  }

  Integer inv(const Integer& a) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), l.get_mpz_t()) == 0)
      throw DivisionByZero("no inverse modulo prime");
    return r;
  }

  void trim(ZPoly& p) const {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }

  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    for (auto& c : out) c = norm(c);
    trim(out);
    return out;
  }

  // remainder of a modulo b (b nonzero)
  ZPoly rem(ZPoly a, const ZPoly& b) const {
    trim(a);
    const std::size_t db = b.size() - 1;
    Integer lead = inv(b.back());
    while (!a.empty() && a.size() - 1 >= db) {
      Integer c = norm(a.back() * lead);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j)
        a[shift + j] = norm(a[shift + j] - c * b[j]);
      trim(a);
    }
    return a;
  }

  ZPoly quo(ZPoly a, const ZPoly& b) const {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    ZPoly q(a.size() - db, Integer(0));
    Integer lead = inv(b.back());
    while (!a.empty() && a.size() - 1 >= db) {
      Integer c = norm(a.back() * lead);
      const std::size_t shift = a.size() - 1 - db;
      q[shift] = c;
      for (std::size_t j = 0; j <= db; ++j)
        a[shift + j] = norm(a[shift + j] - c * b[j]);
      a.pop_back();
      trim(a);
    }
    trim(q);
    return q;
  }

  ZPoly monic(ZPoly p) const {
    trim(p);
    if (p.empty()) return p;
    Integer li = inv(p.back());
    for (auto& c : p) c = norm(c * li);
    return p;
  }

  ZPoly gcd(ZPoly a, ZPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      ZPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // base^e modulo m
  ZPoly powmod(const ZPoly& base, Integer e, const ZPoly& m) const {
    ZPoly result{Integer(1)};
    ZPoly b = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, b), m);
      e >>= 1;
      if (e > 0) b = rem(mul(b, b), m);
    }
    return result;
  }

  // All distinct roots of a monic square-free product of linear factors.
  void split_linear(const ZPoly& f, std::mt19937_64& rng,
                    std::vector<Integer>& out) const {
    const std::size_t d = f.size() - 1;
    if (d == 0) return;
    if (d == 1) {
      out.push_back(norm(-f[0]));
      return;
    }
    Integer half = (l - 1) / 2;
    std::uniform_int_distribution<unsigned long> dist;
    for (int attempt = 0; attempt < 200; ++attempt) {
      Integer delta = norm(Integer(static_cast<unsigned long>(dist(rng))));
      ZPoly lin{delta, Integer(1)};
      ZPoly h = powmod(lin, half, f);
      if (h.empty()) h = {Integer(0)};
      h[0] = norm(h[0] - 1);
      trim(h);
      ZPoly g = gcd(f, h);
      if (g.size() > 1 && g.size() < f.size()) {
        split_linear(g, rng, out);
        split_linear(quo(f, g), rng, out);
        return;
      }
    }
    throw DegreeBound("equal-degree splitting did not converge");
  }

  std::vector<Integer> roots(const ZPoly& p, std::mt19937_64& rng) const {
    ZPoly f = monic(p);
    if (f.size() <= 1) return {};
    // gcd(f, x^l - x) keeps exactly the linear factors, once each
    ZPoly xl = powmod(ZPoly{Integer(0), Integer(1)}, l, f);
    if (xl.size() < 2) xl.resize(2, Integer(0));
    xl[1] = norm(xl[1] - 1);
    trim(xl);
    ZPoly g = xl.empty() ? f : gcd(f, xl);
    std::vector<Integer> out;
    split_linear(g, rng, out);
    std::sort(out.begin(), out.end());
    return out;
  }
};

Integer ceil_rational(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Distinct roots in Q(zeta_n) of a monic square-free polynomial s.
std::vector<Cyclo> squarefree_roots(const Poly& s, int n) {
  const int d = poly::degree(s);
  if (d <= 0) return {};
  const int phi = euler_phi(n);

  // common denominator of all coordinates
  Integer den = 1;
  std::vector<std::vector<Rational>> coords(d + 1);
  for (int i = 0; i <= d; ++i) {
    coords[i] = s[i].coeffs_at(n);
    for (const auto& c : coords[i]) {
      Integer g;
      mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      den = g;
    }
  }
  // q(x) = den^d s(x/den), monic with integer coordinates
  std::vector<std::vector<Integer>> q(d + 1, std::vector<Integer>(phi));
  Integer scale = 1;
  for (int i = d; i >= 0; --i) {
    for (int j = 0; j < phi; ++j) {
      Rational v = coords[i][j] * Rational(scale);
      v.canonicalize();
      q[i][j] = v.get_num();
    }
    scale *= den;
  }

  // Cauchy bound on |sigma(root)| for every embedding
  Integer cauchy = 0;
  for (int i = 0; i < d; ++i) {
    Integer sum = 0;
    for (int j = 0; j < phi; ++j) sum += abs(q[i][j]);
    cauchy = std::max(cauchy, sum);
  }
  cauchy += 1;

  // coordinates a = T^{-1} t with T_kj = Tr(zeta^{j-k}), |t_k| <= phi * cauchy
  detail::QMatrix trace_matrix(phi, std::vector<Rational>(phi));
  for (int k = 0; k < phi; ++k)
    for (int j = 0; j < phi; ++j)
      trace_matrix[k][j] = Cyclo::zeta(n, j - k).trace(n);
  auto tinv = detail::invert_rational(trace_matrix);
  if (!tinv) throw DivisionByZero("degenerate trace form");
  Rational rowmax = 0;
  for (const auto& row : *tinv) {
    Rational sum = 0;
    for (const auto& v : row) sum += abs(v);
    rowmax = std::max(rowmax, sum);
  }
  Integer bound = ceil_rational(rowmax * Rational(cauchy) * phi);

  // prime l = 1 mod n, l > 2*bound + 1, and not tiny
  Integer floor_l = std::max<Integer>(2 * bound + 2, Integer(1) << 20);
  Integer k = floor_l / n + 1;
  Integer l;
  for (;; ++k) {
    l = k * n + 1;
    if (mpz_probab_prime_p(l.get_mpz_t(), 30) > 0) break;
  }
  ModRing ring{l};

  // primitive n-th root of unity mod l
  Integer w = 1;
  if (n > 1) {
    auto primes = prime_factors(n);
    for (Integer a = 2;; ++a) {
      Integer cand = ring.powm(a, (l - 1) / n);
      bool ok = true;
      for (int p : primes)
        if (ring.powm(cand, Integer(n / p)) == 1) ok = false;
      if (ok) {
        w = cand;
        break;
      }
    }
  }

  std::vector<int> units;
  for (int u = 1; u <= n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u % n);

  std::mt19937_64 rng(0x5eed);
  std::vector<std::vector<Integer>> embedded_roots;
  for (int u : units) {
    Integer wu = ring.powm(w, Integer(u));
    ZPoly qu(d + 1, Integer(0));
    for (int i = 0; i <= d; ++i) {
      Integer acc = 0, pw = 1;
      for (int j = 0; j < phi; ++j) {
        acc += q[i][j] * pw;
        pw = ring.norm(pw * wu);
      }
      qu[i] = ring.norm(acc);
    }
    embedded_roots.push_back(ring.roots(qu, rng));
    if (embedded_roots.back().empty()) return {};
  }

  // Vandermonde V[u][j] = w^{u j} and its inverse mod l
  std::vector<std::vector<Integer>> vinv(phi, std::vector<Integer>(phi));
  {
    std::vector<std::vector<Integer>> v(phi, std::vector<Integer>(2 * phi));
    for (int r = 0; r < phi; ++r) {
      Integer wu = ring.powm(w, Integer(units[r]));
      Integer pw = 1;
      for (int j = 0; j < phi; ++j) {
        v[r][j] = pw;
        pw = ring.norm(pw * wu);
      }
      v[r][phi + r] = 1;
    }
    for (int c = 0; c < phi; ++c) {
      int p = c;
      while (v[p][c] == 0) ++p;
      std::swap(v[p], v[c]);
      Integer iv = ring.inv(v[c][c]);
      for (auto& x : v[c]) x = ring.norm(x * iv);
      for (int r = 0; r < phi; ++r) {
        if (r == c || v[r][c] == 0) continue;
        Integer f = v[r][c];
        for (int j = 0; j < 2 * phi; ++j) v[r][j] = ring.norm(v[r][j] - f * v[c][j]);
      }
    }
    for (int r = 0; r < phi; ++r)
      for (int j = 0; j < phi; ++j) vinv[r][j] = v[r][phi + j];
  }

  double space = 1;
  for (const auto& r : embedded_roots) space *= static_cast<double>(r.size());
  if (space > 4e6) throw DegreeBound("root search space too large");

  Poly qpoly(d + 1);
  for (int i = 0; i <= d; ++i) {
    std::vector<Rational> c(q[i].begin(), q[i].end());
    qpoly[i] = Cyclo::from_coeffs(n, c);
  }

  Integer half = l / 2;
  std::vector<Cyclo> found;
  std::vector<std::size_t> idx(phi, 0);
  while (true) {
    std::vector<Integer> a(phi);
    bool inside = true;
    for (int j = 0; j < phi && inside; ++j) {
      Integer acc = 0;
      for (int r = 0; r < phi; ++r) acc += vinv[j][r] * embedded_roots[r][idx[r]];
      acc = ring.norm(acc);
      if (acc > half) acc -= l;
      if (abs(acc) > bound) inside = false;
      a[j] = acc;
    }
    if (inside) {
      std::vector<Rational> c(a.begin(), a.end());
      Cyclo mu = Cyclo::from_coeffs(n, c);
      if (poly::eval(qpoly, mu).is_zero()) found.push_back(mu / Cyclo(Rational(den)));
      if (static_cast<int>(found.size()) == d) break;
    }
    int pos = 0;
    while (pos < phi && ++idx[pos] == embedded_roots[pos].size()) idx[pos++] = 0;
    if (pos == phi) break;
  }
  return found;
}

}  // namespace

RootResult minimal_polynomial_roots(const Poly& p_in, int field_order,
                                    int degree_bound) {
  Poly p = p_in;
  poly::trim(p);
  const int deg = poly::degree(p);
  if (deg < 0) throw DivisionByZero("roots of the zero polynomial");
  if (deg > degree_bound)
    throw DegreeBound("degree " + std::to_string(deg) + " exceeds bound " +
                      std::to_string(degree_bound));
  int n = field_order;
  for (const auto& c : p) n = std::lcm(n, c.order());
  p = poly::monic(p);

  RootResult result;
  Poly sq = poly::gcd(p, poly::derivative(p));
  Poly s = poly::monic(poly::divmod(p, sq).first);
  auto distinct = squarefree_roots(s, n);

  Poly rest = p;
  for (const auto& r : distinct) {
    Poly lin{-r, Cyclo(1L)};
    while (true) {
      auto [q, rem] = poly::divmod(rest, lin);
      if (!rem.empty()) break;
      rest = std::move(q);
      result.roots.push_back(r);
    }
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const Cyclo& a, const Cyclo& b) { return Cyclo::compare(a, b) < 0; });
  result.remainder = poly::monic(rest);
  return result;
}

}  // namespace hopf
