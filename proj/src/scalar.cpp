#include "hopflink/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qsolve.hpp"

namespace hopf {

namespace {

struct FieldTable {
  int n = 1;
  int phi = 1;
  // pow[k] = coordinates of x^k modulo Phi_n, each of length phi.
  std::vector<std::vector<Rational>> pow;
};

std::mutex g_table_mutex;

const FieldTable& field_table(int n) {
  static std::map<int, std::unique_ptr<FieldTable>> tables;
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = tables.find(n);
  if (it != tables.end()) return *it->second;

  auto t = std::make_unique<FieldTable>();
  t->n = n;
  t->phi = euler_phi(n);
  const int phi = t->phi;
  const auto& cyc = cyclotomic_polynomial(n);
  const std::size_t count = std::max<std::size_t>(
      {static_cast<std::size_t>(n), static_cast<std::size_t>(2 * phi - 1),
       std::size_t{1}});
  t->pow.reserve(count);
  std::vector<Rational> cur(phi);
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    t->pow.push_back(cur);
    // multiply by x, replacing x^phi by -sum_{i<phi} cyc[i] x^i
    Rational top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) cur[i] -= top * Rational(cyc[i]);
    }
  }
  auto& ref = *t;
  tables.emplace(n, std::move(t));
  return ref;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

int euler_phi(int n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<Integer>> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<Integer> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const int dn = static_cast<int>(den.size()) - 1;
    const int nn = static_cast<int>(num.size()) - 1;
    std::vector<Integer> q(nn - dn + 1);
    for (int i = nn - dn; i >= 0; --i) {
      Integer c = num[i + dn];  // den is monic
      q[i] = c;
      if (c != 0)
        for (int j = 0; j <= dn; ++j) num[i + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

namespace detail {

std::optional<std::vector<Rational>> solve_rational(QMatrix a,
                                                    std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

std::optional<QMatrix> invert_rational(const QMatrix& a) {
  const std::size_t n = a.size();
  QMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> e(n);
    e[k] = 1;
    // columns must be unique; check rank via a full pivot set
    auto x = solve_rational(a, e);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv[i][k] = (*x)[i];
  }
  // a singular matrix can still admit solutions for some right-hand sides
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * inv[k][j];
      if (s != (i == j ? 1 : 0)) return std::nullopt;
    }
  return inv;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace detail

Cyclo::Cyclo(long value) {
  if (value != 0) c_.emplace_back(value);
}

Cyclo::Cyclo(const Rational& value) {
  if (value != 0) {
    c_.push_back(value);
    c_.back().canonicalize();
  }
}

void Cyclo::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.size() <= 1) order_ = 1;
}

Cyclo Cyclo::from_coeffs(int n, std::vector<Rational> coeffs) {
  if (n <= 0) throw IncompatibleOrder("cyclotomic order must be positive");
  const auto& t = field_table(n);
  Cyclo out;
  out.order_ = n;
  if (static_cast<int>(coeffs.size()) <= t.phi) {
    out.c_ = std::move(coeffs);
  } else {
    out.c_.assign(t.phi, Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      if (k >= t.pow.size()) {
        // x^k with k >= n: reduce the exponent first, since x^n = 1
        const auto& pw = t.pow[k % n];
        for (int i = 0; i < t.phi; ++i) out.c_[i] += coeffs[k] * pw[i];
      } else {
        const auto& pw = t.pow[k];
        for (int i = 0; i < t.phi; ++i) out.c_[i] += coeffs[k] * pw[i];
      }
    }
  }
  for (auto& c : out.c_) c.canonicalize();
  out.trim();
  return out;
}

Cyclo Cyclo::zeta(int n, long k) {
  if (n <= 0) throw IncompatibleOrder("cyclotomic order must be positive");
  long e = ((k % n) + n) % n;
  const auto& t = field_table(n);
  Cyclo out;
  out.order_ = n;
  out.c_ = t.pow[e];
  out.trim();
  return out;
}

Cyclo Cyclo::parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty scalar");
  if (s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!valid_int(s.substr(0, slash)) ||
      (slash != std::string::npos && !valid_int(s.substr(slash + 1))))
    throw ParseError("malformed rational '" + text + "'");
  Rational q(s);
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + text + "'");
  q.canonicalize();
  return Cyclo(q);
}

std::vector<Rational> Cyclo::coeffs() const {
  std::vector<Rational> out = c_;
  out.resize(euler_phi(order_), Rational(0));
  return out;
}

std::vector<Rational> Cyclo::coeffs_at(int n) const {
  std::vector<Rational> out = promoted(n).c_;
  out.resize(euler_phi(n), Rational(0));
  return out;
}

bool Cyclo::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational Cyclo::to_rational() const {
  if (!is_rational())
    throw IncompatibleOrder("value " + to_string() + " is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclo Cyclo::promoted(int n) const {
  if (n % order_ != 0)
    throw IncompatibleOrder("cannot promote order " + std::to_string(order_) +
                            " to " + std::to_string(n));
  if (n == order_ || is_rational()) {
    Cyclo out = *this;
    if (!out.is_rational()) out.order_ = n;
    return out;
  }
  const int step = n / order_;
  const auto& t = field_table(n);
  Cyclo out;
  out.order_ = n;
  out.c_.assign(t.phi, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& pw = t.pow[i * step];
    for (int j = 0; j < t.phi; ++j) out.c_[j] += c_[i] * pw[j];
  }
  out.trim();
  return out;
}

std::optional<Cyclo> Cyclo::demoted(int m) const {
  if (m <= 0) throw IncompatibleOrder("cyclotomic order must be positive");
  if (is_rational()) return *this;
  if (m % order_ == 0) return promoted(m);
  const int big = lcm_int(order_, m);
  const int phi_m = euler_phi(m);
  const int phi_big = euler_phi(big);
  detail::QMatrix a(phi_big, std::vector<Rational>(phi_m));
  for (int j = 0; j < phi_m; ++j) {
    auto col = zeta(m, j).coeffs_at(big);
    for (int i = 0; i < phi_big; ++i) a[i][j] = col[i];
  }
  auto x = detail::solve_rational(a, coeffs_at(big));
  if (!x) return std::nullopt;
  return from_coeffs(m, *x);
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.c_.empty()) return *this;
  if (order_ != o.order_ && !o.is_rational()) {
    if (is_rational()) {
      Cyclo tmp = o;
      tmp += *this;
      return *this = std::move(tmp);
    }
    const int n = lcm_int(order_, o.order_);
    *this = promoted(n);
    return *this += o.promoted(n);
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (c_.empty()) return *this;
  if (o.c_.empty()) {
    c_.clear();
    order_ = 1;
    return *this;
  }
  if (o.is_rational()) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    Rational s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    return *this;
  }
  if (order_ != o.order_) {
    const int n = lcm_int(order_, o.order_);
    *this = promoted(n);
    return *this *= o.promoted(n);
  }
  const auto& t = field_table(order_);
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  if (static_cast<int>(prod.size()) > t.phi) {
    std::vector<Rational> red(t.phi);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      if (prod[k] == 0) continue;
      if (static_cast<int>(k) < t.phi) {
        red[k] += prod[k];
      } else {
        const auto& pw = t.pow[k];
        for (int i = 0; i < t.phi; ++i)
          if (pw[i] != 0) red[i] += prod[k] * pw[i];
      }
    }
    prod = std::move(red);
  }
  c_ = std::move(prod);
  trim();
  return *this;
}

void Cyclo::add_scaled(const Cyclo& x, const Cyclo& factor) {
  if (x.c_.empty() || factor.c_.empty()) return;
  if (factor.is_rational() &&
      (x.order_ == order_ || x.is_rational())) {
    if (c_.size() < x.c_.size()) c_.resize(x.c_.size(), Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) c_[i] += x.c_[i] * factor.c_[0];
    if (order_ == 1 && !x.is_rational()) order_ = x.order_;
    trim();
    return;
  }
  *this += x * factor;
}

Cyclo Cyclo::inv() const {
  if (c_.empty()) throw DivisionByZero("inverse of zero");
  if (is_rational()) return Cyclo(Rational(1) / c_[0]);
  // Solve (this * y) = 1 with y unknown: column j is this * x^j.
  const int phi = euler_phi(order_);
  detail::QMatrix a(phi, std::vector<Rational>(phi));
  for (int j = 0; j < phi; ++j) {
    auto col = (*this * zeta(order_, j)).coeffs_at(order_);
    for (int i = 0; i < phi; ++i) a[i][j] = col[i];
  }
  std::vector<Rational> e(phi);
  e[0] = 1;
  auto y = detail::solve_rational(std::move(a), std::move(e));
  if (!y) throw DivisionByZero("singular element");
  return from_coeffs(order_, *y);
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclo result(1L);
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational Cyclo::trace(int field) const {
  const int n = field == 0 ? order_ : field;
  const int phi = euler_phi(n);
  const std::vector<Rational> c = n == order_ ? c_ : promoted(n).c_;
  Rational total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    // Ramanujan sum: Tr(zeta_n^i) = mu(n/g) phi(n) / phi(n/g), g = gcd(i, n)
    const int g = std::gcd(static_cast<int>(i), n);
    const int m = n / g;
    total += c[i] * Rational(detail::mobius(m) * (phi / euler_phi(m)));
  }
  return total;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.order_ == b.order_ || (a.is_rational() && b.is_rational()))
    return a.c_ == b.c_;
  if (a.is_rational() != b.is_rational()) return false;
  const int n = std::lcm(a.order_, b.order_);
  return a.promoted(n).c_ == b.promoted(n).c_;
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational() ? -1 : 1;
  std::vector<Rational> x, y;
  if (a.is_rational()) {
    Rational av = a.c_.empty() ? Rational(0) : a.c_[0];
    Rational bv = b.c_.empty() ? Rational(0) : b.c_[0];
    return av < bv ? -1 : (bv < av ? 1 : 0);
  }
  const int n = std::lcm(a.order_, b.order_);
  x = a.coeffs_at(n);
  y = b.coeffs_at(n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return -1;
    if (y[i] < x[i]) return 1;
  }
  return 0;
}

std::string Cyclo::to_string() const {
  if (c_.empty()) return "0";
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z" << order_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) {
  return os << c.to_string();
}

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j].add_scaled(a[i], b[j]);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) throw DivisionByZero("polynomial division by zero");
  Poly r = a;
  trim(r);
  const int da = degree(r);
  if (da < db) return {Poly{}, r};
  Poly q(da - db + 1);
  Cyclo lead_inv = b[db].inv();
  for (int i = da - db; i >= 0; --i) {
    if (static_cast<int>(r.size()) <= i + db) continue;
    Cyclo c = r[i + db] * lead_inv;
    if (c.is_zero()) continue;
    q[i] = c;
    for (int j = 0; j <= db; ++j) r[i + j].add_scaled(b[j], -c);
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly monic(const Poly& p) {
  Poly out = p;
  trim(out);
  if (out.empty()) return out;
  Cyclo inv = out.back().inv();
  for (auto& c : out) c *= inv;
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i)
    out[i - 1] = p[i] * Cyclo(static_cast<long>(i));
  trim(out);
  return out;
}

Cyclo eval(const Poly& p, const Cyclo& x) {
  Cyclo acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::string to_string(const Poly& p) {
  if (degree(p) < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = p[i].is_one() && i > 0;
    if (!unit) os << "(" << p[i].to_string() << ")";
    if (i > 0) os << (unit ? "" : "*") << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace poly

}  // namespace hopf
