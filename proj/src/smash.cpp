#include "hopflink/smash.hpp"

#include <algorithm>

#include "hopflink/matcalc.hpp"

namespace hopf {

namespace {

Matrix right_multiplication(const FinHopf& h, const Vec& y) {
  const std::size_t n = h.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec col = h.multiply(unit_vec(n, i), y);
    for (std::size_t k = 0; k < n; ++k) m(k, i) = col[k];
  }
  return m;
}

Vec column(const Matrix& m, std::size_t j) { return m.col(j); }

}  // namespace

QuotientCoalgebra quotient_Q(const FinHopf& h, const CoradicalData& data) {
  const std::size_t n = h.dim();
  const FinCoalgebra& c = h.coalg;
  Subspace ker_eps = kernel(Matrix::from_rows({c.counit}, n));
  Subspace jplus = intersect(data.h0, ker_eps);
  Subspace ideal = subspace_product(h, jplus, Subspace::whole(n));

  // complement spanned by the earliest basis vectors outside the ideal
  std::vector<Vec> cols = ideal.vectors();
  std::vector<std::size_t> picked;
  Subspace acc = ideal;
  for (std::size_t i = 0; i < n && acc.dim() < n; ++i) {
    Vec e = unit_vec(n, i);
    if (acc.contains(e)) continue;
    picked.push_back(i);
    cols.push_back(e);
    acc = sum(acc, Subspace::span(n, {e}));
  }
  auto inv = inverse(Matrix::from_cols(cols, n));
  if (!inv) throw Error("quotient complement is singular");
  const std::size_t di = ideal.dim(), dq = picked.size();
  Matrix proj(dq, n);
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t i = 0; i < n; ++i) proj(r, i) = (*inv)(di + r, i);

  for (const auto& v : ideal.vectors()) {
    if (!c.counit_of(v).is_zero()) throw NotCoideal("counit does not vanish on H_0^+ H");
    Vec t = c.comultiply(v);
    for (std::size_t x = 0; x < dq; ++x)
      for (std::size_t y = 0; y < dq; ++y) {
        Scalar s;
        for (std::size_t a = 0; a < n; ++a) {
          if (proj(x, a).is_zero()) continue;
          for (std::size_t b = 0; b < n; ++b)
            if (!proj(y, b).is_zero() && !t[a * n + b].is_zero())
              s += proj(x, a) * proj(y, b) * t[a * n + b];
        }
        if (!s.is_zero()) throw NotCoideal("Delta(H_0^+ H) leaves I (x) H + H (x) I");
      }
  }

  QuotientCoalgebra out;
  out.ideal = ideal;
  out.projection = proj;
  out.q.field_order = c.field_order;
  out.q.dim = dq;
  out.q.comul.resize(dq);
  for (std::size_t k = 0; k < dq; ++k) {
    out.q.names.push_back("[" + c.names[picked[k]] + "]");
    Vec t = c.comultiply(unit_vec(n, picked[k]));
    Vec qt(dq * dq);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (t[a * n + b].is_zero()) continue;
        for (std::size_t x = 0; x < dq; ++x) {
          if (proj(x, a).is_zero()) continue;
          for (std::size_t y = 0; y < dq; ++y)
            if (!proj(y, b).is_zero()) qt[x * dq + y] += t[a * n + b] * proj(x, a) * proj(y, b);
        }
      }
    out.q.set_comul_dense(k, qt);
    out.q.counit.push_back(c.counit_of(unit_vec(n, picked[k])));
  }
  out.one = proj.apply(h.unit);
  Subspace q0 = coradical(out.q);
  if (q0.dim() != 1 || !q0.contains(out.one))
    throw Error("quotient is not irreducible with coradical spanned by the image of 1");
  return out;
}

bool is_coaction(const FinCoalgebra& z, const Matrix& rho, std::size_t dim_v) {
  const std::size_t dz = z.dim;
  if (rho.rows() != dim_v * dz || rho.cols() != dim_v) return false;
  for (std::size_t j = 0; j < dim_v; ++j) {
    for (std::size_t i = 0; i < dim_v; ++i) {
      Scalar s;
      for (std::size_t a = 0; a < dz; ++a) s += z.counit[a] * rho(i * dz + a, j);
      if (!(s == Scalar(i == j ? 1L : 0L))) return false;
    }
    Vec left(dim_v * dz * dz), right(dim_v * dz * dz);
    for (std::size_t i = 0; i < dim_v; ++i)
      for (std::size_t a = 0; a < dz; ++a) {
        const Scalar& r1 = rho(i * dz + a, j);
        if (r1.is_zero()) continue;
        for (std::size_t m = 0; m < dim_v; ++m)
          for (std::size_t b = 0; b < dz; ++b)
            if (!rho(m * dz + b, i).is_zero())
              left[(m * dz + b) * dz + a] += r1 * rho(m * dz + b, i);
      }
    for (std::size_t m = 0; m < dim_v; ++m)
      for (std::size_t cc = 0; cc < dz; ++cc) {
        const Scalar& r = rho(m * dz + cc, j);
        if (r.is_zero()) continue;
        for (const auto& t : z.comul[cc]) right[(m * dz + t.j) * dz + t.k] += r * t.c;
      }
    if (left != right) return false;
  }
  return true;
}

Subspace coefficient_space(const FinCoalgebra& z, const Matrix& rho, std::size_t dim_v) {
  if (!is_coaction(z, rho, dim_v)) throw InvalidCoaction("not a counital coassociative coaction");
  const std::size_t dz = z.dim;
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < dim_v; ++j)
    for (std::size_t i = 0; i < dim_v; ++i) {
      Vec v(dz);
      for (std::size_t a = 0; a < dz; ++a) v[a] = rho(i * dz + a, j);
      if (!is_zero(v)) gens.push_back(std::move(v));
    }
  return subcoalgebra_closure(z, Subspace::span(dz, gens));
}

Subspace smallest_hopf_subalgebra(const FinHopf& j, const Subspace& seed) {
  Subspace w = sum(seed, Subspace::span(j.dim(), {j.unit}));
  while (true) {
    Subspace next = subcoalgebra_closure(j.coalg, w);
    next = sum(next, subspace_product(j, next, next));
    if (j.antipode) next = sum(next, antipode_image(j, next));
    if (next == w) return w;
    w = std::move(next);
  }
}

Subspace SmashCoproduct::tensor_q(const Subspace& w) const {
  const std::size_t dq = q.q.dim;
  std::vector<Vec> gens;
  for (const auto& v : w.vectors())
    for (std::size_t k = 0; k < dq; ++k) {
      Vec x(h.dim());
      for (std::size_t a = 0; a < v.size(); ++a) x[a * dq + k] = v[a];
      gens.push_back(std::move(x));
    }
  return Subspace::span(h.dim(), gens);
}

Subspace SmashCoproduct::tensor_g(const Subspace& w) const {
  const std::size_t dq = q.q.dim;
  std::vector<Vec> gens;
  for (const auto& v : w.vectors()) {
    Vec x(h.dim());
    for (std::size_t a = 0; a < v.size(); ++a) x[a * dq + q.group_like] = v[a];
    gens.push_back(std::move(x));
  }
  return Subspace::span(h.dim(), gens);
}

SmashCoproduct smash_coproduct(const FinHopf& j, const ComoduleCoalgebra& q) {
  const std::size_t dj = j.dim(), dq = q.q.dim, n = dj * dq;
  if (!is_coaction(j.coalg, q.rho, dq)) throw InvalidCoaction("rho is not a coaction of J on Q");
  {
    Vec expect(dq * dj);
    for (std::size_t a = 0; a < dj; ++a) expect[q.group_like * dj + a] = j.unit[a];
    if (column(q.rho, q.group_like) != expect)
      throw InvalidCoaction("J must coact trivially on the group-like of Q");
  }
  SmashCoproduct s;
  s.j = j;
  s.q = q;
  FinHopf& h = s.h;
  h.coalg.field_order = std::max(j.field_order(), q.q.field_order);
  h.coalg.dim = n;
  for (std::size_t a = 0; a < dj; ++a)
    for (std::size_t k = 0; k < dq; ++k) h.coalg.names.push_back(j.names()[a] + "#" + q.q.names[k]);
  h.coalg.comul.resize(n);
  h.coalg.counit.assign(n, Scalar());

  for (std::size_t a = 0; a < dj; ++a)
    for (std::size_t k = 0; k < dq; ++k) {
      Vec t(n * n);
      for (const auto& ta : j.coalg.comul[a])
        for (const auto& tq : q.q.comul[k])
          for (std::size_t m = 0; m < dq; ++m)
            for (std::size_t z = 0; z < dj; ++z) {
              const Scalar& r = q.rho(m * dj + z, tq.j);
              if (r.is_zero()) continue;
              Scalar coef = ta.c * tq.c * r;
              for (const auto& p : j.mul[ta.k * dj + z])
                t[(ta.j * dq + m) * n + (p.k * dq + tq.k)] += coef * p.c;
            }
      h.coalg.set_comul_dense(a * dq + k, t);
      h.coalg.counit[a * dq + k] = j.coalg.counit[a] * q.q.counit[k];
    }

  if (!q.q_algebra) return s;

  const FinHopf& qa = *q.q_algebra;
  if (qa.dim() != dq || !qa.has_algebra()) throw ShapeMismatch("algebra on Q has the wrong dimension");
  if (q.action.size() != dj) throw ShapeMismatch("need one action matrix per basis element of J");
  // rho must be an algebra map Q -> Q (x) J
  auto rho_of = [&](const Vec& v) { return q.rho.apply(v); };
  auto tensor_mul = [&](const Vec& x, const Vec& y) {
    Vec out(dq * dj);
    for (std::size_t m1 = 0; m1 < dq; ++m1)
      for (std::size_t z1 = 0; z1 < dj; ++z1) {
        if (x[m1 * dj + z1].is_zero()) continue;
        for (std::size_t m2 = 0; m2 < dq; ++m2)
          for (std::size_t z2 = 0; z2 < dj; ++z2) {
            if (y[m2 * dj + z2].is_zero()) continue;
            Scalar c = x[m1 * dj + z1] * y[m2 * dj + z2];
            Vec qm = qa.multiply_basis(m1, m2);
            Vec jm = j.multiply_basis(z1, z2);
            for (std::size_t u = 0; u < dq; ++u)
              if (!qm[u].is_zero())
                for (std::size_t w = 0; w < dj; ++w)
                  if (!jm[w].is_zero()) out[u * dj + w] += c * qm[u] * jm[w];
          }
      }
    return out;
  };
  for (std::size_t k = 0; k < dq; ++k)
    for (std::size_t l = 0; l < dq; ++l)
      if (rho_of(qa.multiply_basis(k, l)) != tensor_mul(rho_of(unit_vec(dq, k)), rho_of(unit_vec(dq, l))))
        throw CoactionNotAlgebraMap("rho(q p) != rho(q) rho(p) for basis elements " +
                                    q.q.names[k] + ", " + q.q.names[l]);
  {
    Vec one(dq * dj);
    for (std::size_t u = 0; u < dq; ++u)
      for (std::size_t w = 0; w < dj; ++w) one[u * dj + w] = qa.unit[u] * j.unit[w];
    if (rho_of(qa.unit) != one) throw CoactionNotAlgebraMap("rho(1) != 1 (x) 1");
  }

  // (b_a >< q_k)(b_c >< q_l) = sum b_a b_c1 >< (q_k . b_c2) q_l
  h.mul.assign(n * n, {});
  for (std::size_t a = 0; a < dj; ++a)
    for (std::size_t k = 0; k < dq; ++k)
      for (std::size_t cidx = 0; cidx < dj; ++cidx)
        for (std::size_t l = 0; l < dq; ++l) {
          Vec out(n);
          for (const auto& tc : j.coalg.comul[cidx]) {
            Vec jpart = j.multiply_basis(a, tc.j);
            Vec acted = column(q.action[tc.k], k);
            Vec qpart = qa.multiply(acted, unit_vec(dq, l));
            for (std::size_t x = 0; x < dj; ++x) {
              if (jpart[x].is_zero()) continue;
              for (std::size_t y = 0; y < dq; ++y)
                if (!qpart[y].is_zero()) out[x * dq + y] += tc.c * jpart[x] * qpart[y];
            }
          }
          h.set_mul_dense(a * dq + k, cidx * dq + l, out);
        }
  h.unit = Vec(n);
  for (std::size_t a = 0; a < dj; ++a)
    for (std::size_t k = 0; k < dq; ++k) h.unit[a * dq + k] = j.unit[a] * qa.unit[k];

  // S(b >< q) = S(1 >< q) (S(b) >< 1) since b >< q = (b >< 1)(1 >< q). The
  // unknowns X_k = S(1 >< q_k) solve sum S(h_1) h_2 = eps(h) 1 for h = 1 >< q_k.
  if (j.antipode) {
    auto embed_j = [&](const Vec& v) {
      Vec x(n);
      for (std::size_t a = 0; a < dj; ++a)
        for (std::size_t k = 0; k < dq; ++k) x[a * dq + k] = v[a] * qa.unit[k];
      return x;
    };
    std::vector<Vec> s_j(dj);
    for (std::size_t a = 0; a < dj; ++a) s_j[a] = embed_j(j.apply_antipode(unit_vec(dj, a)));
    Matrix sys(dq * n, dq * n);
    Vec rhs(dq * n);
    for (std::size_t k = 0; k < dq; ++k) {
      Vec e(n);
      for (std::size_t a = 0; a < dj; ++a) e[a * dq + k] = j.unit[a];
      Vec t = h.coalg.comultiply(e);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (t[x * n + y].is_zero()) continue;
          const std::size_t ax = x / dq, mx = x % dq;
          Matrix r = right_multiplication(h, h.multiply(s_j[ax], unit_vec(n, y)));
          for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col)
              if (!r(row, col).is_zero()) sys(k * n + row, mx * n + col) += t[x * n + y] * r(row, col);
        }
      for (std::size_t z = 0; z < n; ++z) rhs[k * n + z] = q.q.counit[k] * h.unit[z];
    }
    try {
      Vec xs = solve(sys, rhs).x;
      Matrix s_mat(n, n);
      for (std::size_t a = 0; a < dj; ++a)
        for (std::size_t k = 0; k < dq; ++k) {
          Vec xk(xs.begin() + k * n, xs.begin() + (k + 1) * n);
          Vec img = h.multiply(xk, s_j[a]);
          for (std::size_t z = 0; z < n; ++z) s_mat(z, a * dq + k) = img[z];
        }
      h.antipode = s_mat;
    } catch (const Inconsistent&) {
      // no antipode; check_axioms reports it
    }
  }
  return s;
}

std::vector<Subspace> module_subcoalgebra_decomposition(const FinHopf& j, const Subspace& k) {
  CoradicalData data = analyze_coradical(j);
  if (!data.is_cosemisimple) throw NotCosemisimple("J is not cosemisimple");
  std::vector<Subspace> parts;
  for (const auto& s : data.simples) {
    Subspace ck = subspace_product(j, s.space, k);
    if (std::none_of(parts.begin(), parts.end(), [&](const Subspace& p) { return p == ck; }))
      parts.push_back(std::move(ck));
  }
  std::size_t total = 0;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    total += parts[a].dim();
    for (std::size_t b = 0; b < a; ++b)
      if (intersect(parts[a], parts[b]).dim() != 0)
        throw Error("module subcoalgebras CK intersect nontrivially");
  }
  if (total != j.dim()) throw Error("module subcoalgebras do not exhaust J");
  return parts;
}

Subspace primitive_coefficient_hopf(LinkContext& ctx) {
  if (!ctx.hopf || !ctx.hopf->has_algebra()) throw NotApplicable("needs a Hopf algebra");
  auto one = ctx.data.simple_containing(ctx.hopf->unit);
  if (!one) throw Error("unit does not lie in a simple subcoalgebra");
  const Subspace& h1 = ctx.h1();
  Subspace seed(ctx.coalg->dim);
  for (std::size_t d = 0; d < ctx.simple_count(); ++d) {
    auto ps = primitive_space(*ctx.coalg, ctx.data.h0, ctx.data.simples[*one].matrix,
                              ctx.data.simples[d].matrix, &h1);
    if (ps.nontrivial_dim > 0) seed = sum(seed, ctx.simple(d));
  }
  return smallest_hopf_subalgebra(*ctx.hopf, seed);
}

std::vector<Check> verify_smash_decomposition(const SmashCoproduct& s) {
  std::vector<Check> out;
  const FinHopf& h = s.h;
  const FinHopf& j = s.j;
  const std::size_t dq = s.q.q.dim;

  out.push_back(make_check("smash-coalgebra-axioms", all_passed(check_coalgebra_axioms(h.coalg))));
  if (h.has_algebra()) {
    auto ax = check_axioms(h);
    std::string failed;
    for (const auto& a : ax)
      if (!a.passed) failed += (failed.empty() ? "" : ", ") + a.name;
    out.push_back(make_check("smash-hopf-axioms", failed.empty(), failed));
  } else {
    out.push_back(Check{"smash-hopf-axioms", CheckStatus::not_applicable,
                        "built as a coalgebra only"});
  }

  Vec one_g(h.dim());
  for (std::size_t a = 0; a < j.dim(); ++a) one_g[a * dq + s.q.group_like] = j.unit[a];
  CoradicalData data = analyze_coradical(h.coalg, &one_g);
  Subspace jg = s.tensor_g(Subspace::whole(j.dim()));
  out.push_back(make_check("smash-coradical-is-j-tensor-g", data.h0 == jg,
                           "dim H_0 = " + std::to_string(data.h0.dim())));

  Subspace coeff = coefficient_space(j.coalg, s.q.rho, dq);
  Subspace k = smallest_hopf_subalgebra(j, coeff);
  std::vector<Subspace> parts = module_subcoalgebra_decomposition(j, k);

  // CK = DK  <=>  C in DK  <=>  D in CK
  CoradicalData jd = analyze_coradical(j);
  bool equiv = true;
  for (const auto& c : jd.simples)
    for (const auto& d : jd.simples) {
      Subspace ck = subspace_product(j, c.space, k), dk = subspace_product(j, d.space, k);
      bool a = ck == dk, b = dk.contains(c.space), cc = ck.contains(d.space);
      equiv = equiv && a == b && b == cc;
    }
  out.push_back(make_check("ck-equivalence", equiv, std::to_string(parts.size()) + " parts CK"));

  std::vector<Subspace> smash_parts;
  bool sub_ok = true;
  std::size_t total = 0;
  Subspace all(h.dim());
  std::vector<std::size_t> dims;
  for (const auto& p : parts) {
    smash_parts.push_back(s.tensor_q(p));
    sub_ok = sub_ok && is_subcoalgebra(h.coalg, smash_parts.back());
    total += smash_parts.back().dim();
    dims.push_back(smash_parts.back().dim());
    all = sum(all, smash_parts.back());
  }
  std::string dim_text;
  for (auto d : dims) dim_text += (dim_text.empty() ? "" : ",") + std::to_string(d);
  out.push_back(make_check("smash-parts-subcoalgebras", sub_ok, "dims [" + dim_text + "]"));
  out.push_back(make_check("smash-parts-direct-sum", total == h.dim() && all.dim() == h.dim()));

  LinkContext ctx(h.coalg, data, h.has_algebra() ? &s.h : nullptr);
  LinkQuiver quiver = link_quiver(ctx);
  Decomposition dec = components(ctx, quiver);
  bool match = dec.components.size() == smash_parts.size();
  for (const auto& comp : dec.components)
    match = match && std::any_of(smash_parts.begin(), smash_parts.end(),
                                 [&](const Subspace& p) { return p == comp.space; });
  out.push_back(make_check("smash-parts-match-components", match,
                           std::to_string(dec.components.size()) + " link components"));

  // K from primitive matrices against the simple containing 1 >< g
  auto one = data.simple_containing(one_g);
  Subspace seed(j.dim());
  const Subspace& h1 = ctx.h1();
  for (std::size_t d = 0; d < data.simples.size(); ++d) {
    auto ps = primitive_space(h.coalg, data.h0, data.simples[*one].matrix, data.simples[d].matrix, &h1);
    if (ps.nontrivial_dim == 0) continue;
    for (const auto& v : data.simples[d].space.vectors()) {
      Vec jv(j.dim());
      for (std::size_t a = 0; a < j.dim(); ++a) jv[a] = v[a * dq + s.q.group_like];
      seed = sum(seed, Subspace::span(j.dim(), {jv}));
    }
  }
  Subspace kp = smallest_hopf_subalgebra(j, seed);
  out.push_back(make_check("coefficient-spaces-generate-same-k", kp == k,
                           "dim K = " + std::to_string(k.dim())));
  return out;
}

}  // namespace hopf
