#include "hopflink/radical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

namespace hopf {

namespace {

using Product = std::function<Vec(const Vec&, const Vec&)>;

// Monic minimal polynomial of a inside an algebra with identity `one`.
Poly minimal_polynomial(const Vec& a, const Vec& one, const Product& mul) {
  const std::size_t n = a.size();
  std::vector<Vec> powers{one};
  while (true) {
    Vec next = powers.size() == 1 ? a : mul(powers.back(), a);
    Matrix m = Matrix::from_cols(powers, n);
    try {
      auto sol = solve(m, next);
      Poly p(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) p[i] = -sol.x[i];
      p.back() = Scalar(1L);
      return p;
    } catch (const Inconsistent&) {
      powers.push_back(std::move(next));
    }
    if (powers.size() > n + 1) throw Error("minimal polynomial search did not terminate");
  }
}


int suggest_order(const Poly& remainder, int n) {
  for (int m = 2; m <= 60; ++m) {
    int big = std::lcm(n, m);
    if (big == n) continue;
    try {
      if (poly::degree(minimal_polynomial_roots(remainder, big).remainder) == 0) return big;
    } catch (const Error&) {
    }
  }
  return 0;
}

[[noreturn]] void non_split(const std::string& what, const Poly& remainder, int n) {
  std::string msg = what + " does not split over Q(zeta_" + std::to_string(n) + ")";
  if (int m = suggest_order(remainder, n)) msg += "; try --field-order " + std::to_string(m);
  else msg += "; try a larger cyclotomic order";
  throw NonSplitField(msg);
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) {
      int c = Scalar::compare(a.basis()(i, j), b.basis()(i, j));
      if (c) return c < 0;
    }
  return false;
}

// Vectors of W (in W coordinates) mapped back to the ambient space.
Vec lift_from(const Subspace& w, const Vec& coords) {
  Vec out(w.ambient_dim());
  for (std::size_t a = 0; a < coords.size(); ++a)
    if (!coords[a].is_zero()) axpy(out, coords[a], w.vector(a));
  return out;
}

// Primitive central idempotents of the semisimple algebra S* (S = the
// coradical as a standalone coalgebra).
std::vector<Vec> central_idempotents(const FinCoalgebra& s) {
  const std::size_t m = s.dim;
  Product mul = [&s](const Vec& x, const Vec& y) { return dual_product(s, x, y); };
  // center: z with z b - b z = 0 for every basis element b
  Matrix eqs(0, m);
  for (std::size_t k = 0; k < m; ++k) {
    Vec bk = unit_vec(m, k);
    Matrix comm(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      Vec bi = unit_vec(m, i);
      Vec d = sub(mul(bi, bk), mul(bk, bi));
      for (std::size_t r = 0; r < m; ++r) comm(r, i) = d[r];
    }
    for (std::size_t r = 0; r < m; ++r) eqs.append_row(comm.row(r));
  }
  Subspace center = kernel(eqs);

  std::vector<Vec> done;
  std::vector<Vec> work{s.counit};
  while (!work.empty()) {
    Vec e = work.back();
    work.pop_back();
    std::vector<Vec> ez;
    for (const auto& z : center.vectors()) ez.push_back(mul(e, z));
    Subspace ezs = Subspace::span(m, ez);
    if (ezs.dim() <= 1) {
      done.push_back(e);
      continue;
    }
    Subspace line = Subspace::span(m, {e});
    Vec z;
    for (const auto& v : ezs.vectors())
      if (!line.contains(v)) {
        z = v;
        break;
      }
    Product corner = mul;
    Poly p = minimal_polynomial(z, e, corner);
    auto roots = minimal_polynomial_roots(p, s.field_order);
    if (poly::degree(roots.remainder) > 0)
      non_split("center of the coradical dual", roots.remainder, s.field_order);
    std::vector<Scalar> distinct;
    for (const auto& r : roots.roots)
      if (distinct.empty() || !(distinct.back() == r)) distinct.push_back(r);
    if (distinct.size() != roots.roots.size())
      throw Error("coradical dual is not semisimple (repeated eigenvalue)");
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      Vec idem = e;
      for (std::size_t j = 0; j < distinct.size(); ++j) {
        if (i == j) continue;
        Vec factor = sub(z, scale(e, distinct[j]));
        idem = scale(mul(idem, factor), (distinct[i] - distinct[j]).inv());
      }
      work.push_back(idem);
    }
  }
  return done;
}

struct MatrixResult {
  MultMatrix matrix;
  Vec rank_one;  // in C* coordinates
};

// Basic multiplicative matrix of a split simple subcoalgebra C of H.
MatrixResult simple_matrix(const FinCoalgebra& c, const Subspace& cs) {
  const FinCoalgebra sc = sub_coalgebra(c, cs);
  const std::size_t m = sc.dim;
  const std::size_t r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
  if (r * r != m)
    throw NonSplitField("simple subcoalgebra of dimension " + std::to_string(m) +
                        " is not a full matrix coalgebra over Q(zeta_" +
                        std::to_string(c.field_order) + ")");
  Product mul = [&sc](const Vec& x, const Vec& y) { return dual_product(sc, x, y); };
  const Vec one = sc.counit;

  Subspace left_ideal = Subspace::whole(m);
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < c.dim; ++i) {
    Vec f = restrict_functional(unit_vec(c.dim, i), cs);
    if (!is_zero(f)) candidates.push_back(f);
  }
  const std::size_t base = candidates.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i + 1; j < base; ++j) {
      candidates.push_back(add(candidates[i], candidates[j]));
      candidates.push_back(mul(candidates[i], candidates[j]));
    }
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 64; ++t) {
    Vec v(m);
    for (auto& x : v) x = Scalar(static_cast<long>(coef(rng)));
    candidates.push_back(v);
  }

  for (std::size_t ci = 0; ci < candidates.size() && left_ideal.dim() > r; ++ci) {
    const Vec& a = candidates[ci];
    if (Subspace::span(m, {one}).contains(a)) continue;
    Poly p = minimal_polynomial(a, one, mul);
    auto roots = minimal_polynomial_roots(p, c.field_order);
    for (const auto& lambda : roots.roots) {
      Vec shifted = sub(a, scale(one, lambda));
      // left annihilator {x : x (a - lambda) = 0} is a left ideal
      Matrix right_mul(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        Vec col = mul(unit_vec(m, i), shifted);
        for (std::size_t k = 0; k < m; ++k) right_mul(k, i) = col[k];
      }
      Subspace cut = intersect(left_ideal, kernel(right_mul));
      if (cut.dim() > 0 && cut.dim() < left_ideal.dim()) {
        left_ideal = cut;
        if (left_ideal.dim() == r) break;
      }
    }
  }
  if (left_ideal.dim() != r)
    throw NonSplitField("could not split a simple subcoalgebra of dimension " +
                        std::to_string(m) + " over Q(zeta_" + std::to_string(c.field_order) +
                        "); try a larger cyclotomic order");

  // rho_k = left multiplication by the k-th dual basis vector on the ideal
  HMatrix g = HMatrix::zero(r, r, c.dim);
  for (std::size_t k = 0; k < m; ++k) {
    Vec wk = unit_vec(m, k);
    Vec ck = cs.vector(k);
    for (std::size_t j = 0; j < r; ++j) {
      Vec col = left_ideal.coordinates(mul(wk, left_ideal.vector(j)));
      for (std::size_t i = 0; i < r; ++i)
        if (!col[i].is_zero()) axpy(g.at(i, j), col[i], ck);
    }
  }
  return {MultMatrix{std::move(g), true}, left_ideal.vector(0)};
}

}  // namespace

Vec restrict_functional(const Vec& f, const Subspace& w) {
  Vec out(w.dim());
  for (std::size_t a = 0; a < w.dim(); ++a) out[a] = pair(f, w.vector(a));
  return out;
}

Vec extend_functional(const Vec& g, const Subspace& w) {
  Vec out(w.ambient_dim());
  for (std::size_t a = 0; a < w.dim(); ++a) out[w.pivots()[a]] = g[a];
  return out;
}

Subspace dual_radical(const FinCoalgebra& c) {
  const std::size_t n = c.dim;
  // tau(b^m) = trace of left multiplication by b^m on H*
  Vec tau(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : c.comul[i])
      if (t.k == i) tau[t.j] += t.c;
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (tau[i].is_zero()) continue;
    for (const auto& t : c.comul[i]) gram(t.j, t.k).add_scaled(t.c, tau[i]);
  }
  return kernel(gram.transpose());
}

Subspace coradical(const FinCoalgebra& c) { return annihilator(dual_radical(c)); }

Subspace wedge(const FinCoalgebra& c, const Subspace& a, const Subspace& b) {
  const std::size_t n = c.dim;
  if (a.ambient_dim() != n || b.ambient_dim() != n)
    throw AmbientMismatch("wedge arguments outside the coalgebra");
  if (!is_subcoalgebra(c, a)) throw NotSubcoalgebra("left wedge argument");
  if (!is_subcoalgebra(c, b)) throw NotSubcoalgebra("right wedge argument");

  Subspace via_kernel = Subspace::whole(n);
  const std::size_t ca = n - a.dim(), cb = n - b.dim();
  if (ca > 0 && cb > 0) {
    std::vector<Vec> pa(n), pb(n);
    for (std::size_t j = 0; j < n; ++j) {
      pa[j] = a.quotient_coordinates(unit_vec(n, j));
      pb[j] = b.quotient_coordinates(unit_vec(n, j));
    }
    Matrix m(ca * cb, n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : c.comul[i])
        for (std::size_t x = 0; x < ca; ++x) {
          if (pa[t.j][x].is_zero()) continue;
          Scalar s = t.c * pa[t.j][x];
          for (std::size_t y = 0; y < cb; ++y)
            if (!pb[t.k][y].is_zero()) m(x * cb + y, i).add_scaled(s, pb[t.k][y]);
        }
    via_kernel = kernel(m);
  }

  Subspace aperp = annihilator(a), bperp = annihilator(b);
  std::vector<Vec> prods;
  for (const auto& f : aperp.vectors())
    for (const auto& g : bperp.vectors()) prods.push_back(dual_product(c, f, g));
  Subspace via_dual = annihilator(Subspace::span(n, prods));
  if (!(via_dual == via_kernel))
    throw Error("wedge: kernel and dual-annihilator formulations disagree");
  return via_kernel;
}

const Subspace& WedgeCache::get(const Subspace& a, const Subspace& b) {
  std::string key = a.key() + "|" + b.key();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(key, wedge(*c_, a, b)).first->second;
}

std::vector<Subspace> coradical_filtration(const FinCoalgebra& c, const Subspace& h0,
                                           WedgeCache* cache) {
  WedgeCache local(c);
  WedgeCache& wc = cache ? *cache : local;
  std::vector<Subspace> out{h0};
  while (out.back().dim() < c.dim) {
    Subspace next = wc.get(h0, out.back());
    if (next.dim() == out.back().dim())
      throw Error("coradical filtration stalled below the whole coalgebra");
    out.push_back(next);
  }
  return out;
}

std::vector<SimpleCoalgebra> simples_with_matrices(const FinCoalgebra& c, const Subspace& h0,
                                                   const Vec* one) {
  const FinCoalgebra s = sub_coalgebra(c, h0);
  const std::size_t m = s.dim;
  auto idems = central_idempotents(s);

  std::vector<SimpleCoalgebra> out;
  for (const auto& f : idems) {
    std::vector<Vec> gens;
    for (std::size_t a = 0; a < m; ++a) gens.push_back(lift_from(h0, hit_left(s, f, unit_vec(m, a))));
    SimpleCoalgebra sc;
    sc.space = Subspace::span(c.dim, gens);
    auto mr = simple_matrix(c, sc.space);
    sc.matrix = std::move(mr.matrix);
    // rank-one element: extend from C to H_0, cut down by the central idempotent
    Subspace cs_in_s = Subspace::span(m, [&] {
      std::vector<Vec> v;
      for (const auto& x : sc.space.vectors()) v.push_back(h0.coordinates(x));
      return v;
    }());
    // mr.rank_one is in C's own basis; move it to the basis of cs_in_s
    Vec y_h = Vec(c.dim);
    {
      Vec on_c(cs_in_s.dim());
      // value on each basis vector of cs_in_s = value of the functional on its lift
      Vec yfull = extend_functional(mr.rank_one, sc.space);
      for (std::size_t a = 0; a < cs_in_s.dim(); ++a)
        on_c[a] = pair(yfull, lift_from(h0, cs_in_s.vector(a)));
      Vec y_s = dual_product(s, f, extend_functional(on_c, cs_in_s));
      y_h = extend_functional(y_s, h0);
    }
    sc.rank_one = std::move(y_h);
    sc.central = extend_functional(f, h0);
    out.push_back(std::move(sc));
  }

  std::sort(out.begin(), out.end(), [one](const SimpleCoalgebra& a, const SimpleCoalgebra& b) {
    if (one) {
      bool ia = a.space.contains(*one), ib = b.space.contains(*one);
      if (ia != ib) return ia;
    }
    return subspace_less(a.space, b.space);
  });
  return out;
}

std::vector<Vec> orthonormal_idempotents(const FinCoalgebra& c, const Subspace& h0,
                                         const std::vector<SimpleCoalgebra>& simples) {
  (void)h0;
  const std::size_t n = c.dim;
  Product mul = [&c](const Vec& x, const Vec& y) { return dual_product(c, x, y); };
  const Vec eps = c.counit;
  const int max_steps = 2 + static_cast<int>(std::ceil(std::log2(static_cast<double>(n) + 1)));

  std::vector<Vec> out;
  Vec used(n);  // sum of idempotents lifted so far
  for (std::size_t t = 0; t + 1 < simples.size(); ++t) {
    Vec rest = sub(eps, used);
    Vec e = mul(mul(rest, simples[t].central), rest);
    int steps = 0;
    while (true) {
      Vec e2 = mul(e, e);
      if (e2 == e) break;
      if (++steps > max_steps)
        throw LiftDivergence("idempotent lifting exceeded " + std::to_string(max_steps) + " steps");
      Vec e3 = mul(e2, e);
      e = sub(scale(e2, Scalar(3L)), scale(e3, Scalar(2L)));
    }
    used = add(used, e);
    out.push_back(std::move(e));
  }
  if (!simples.empty()) out.push_back(sub(eps, used));

  if (!check_idempotents(c, simples, out).ok())
    throw LiftDivergence("lifted idempotents fail the defining equations");
  return out;
}

IdempotentCheck check_idempotents(const FinCoalgebra& c,
                                  const std::vector<SimpleCoalgebra>& simples,
                                  const std::vector<Vec>& idem) {
  IdempotentCheck r;
  Vec total(c.dim);
  for (std::size_t x = 0; x < idem.size(); ++x) {
    total = add(total, idem[x]);
    for (std::size_t y = 0; y < simples.size(); ++y) {
      for (const auto& v : simples[y].space.vectors()) {
        Scalar expect = x == y ? c.counit_of(v) : Scalar();
        if (!(pair(idem[x], v) == expect)) r.restriction = false;
      }
    }
    for (std::size_t y = 0; y < idem.size(); ++y) {
      Vec p = dual_product(c, idem[x], idem[y]);
      if (x == y ? p != idem[x] : !is_zero(p)) r.orthogonal = false;
    }
  }
  if (total != c.counit) r.complete = false;
  if (idem.size() != simples.size()) r.complete = false;
  return r;
}

std::optional<std::size_t> CoradicalData::simple_containing(const Vec& v) const {
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (simples[i].space.contains(v)) return i;
  return std::nullopt;
}

CoradicalData analyze_coradical(const FinCoalgebra& c, const Vec* one) {
  CoradicalData d;
  d.radical = dual_radical(c);
  d.h0 = annihilator(d.radical);
  WedgeCache cache(c);
  d.filtration = coradical_filtration(c, d.h0, &cache);
  d.simples = simples_with_matrices(c, d.h0, one);
  d.idempotents = orthonormal_idempotents(c, d.h0, d.simples);
  d.is_cosemisimple = d.h0.dim() == c.dim;
  d.is_pointed = std::all_of(d.simples.begin(), d.simples.end(),
                             [](const SimpleCoalgebra& s) { return s.space.dim() == 1; });
  return d;
}

CoradicalData analyze_coradical(const FinHopf& h) {
  const Vec* one = h.has_algebra() ? &h.unit : nullptr;
  CoradicalData d = analyze_coradical(h.coalg, one);
  if (h.has_algebra()) {
    bool closed = d.h0.contains(subspace_product(h, d.h0, d.h0));
    bool stable = h.antipode && d.h0.contains(antipode_image(h, d.h0));
    d.has_dual_chevalley = closed && stable;
  }
  return d;
}

Vec hit(const FinCoalgebra& c, const CoradicalData& data, const Vec& el, HitIndex left,
        HitIndex right) {
  Vec out = el;
  if (left) out = hit_right(c, out, data.idempotents.at(*left));
  if (right) out = hit_left(c, data.idempotents.at(*right), out);
  return out;
}

}  // namespace hopf
