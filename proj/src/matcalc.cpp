#include "hopflink/matcalc.hpp"

#include <sstream>

namespace hopf {

namespace {

void require_same_dim(const HMatrix& a, const HMatrix& b) {
  if (a.dim != b.dim) throw AmbientMismatch("matrices over different coalgebras");
}

void require_algebra(const FinHopf& h) {
  if (!h.has_algebra()) throw NotBialgebra("the coalgebra carries no product");
}

Matrix hmatrix_coeff(const HMatrix& g, std::size_t k) {
  Matrix m(g.rows, g.cols);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j) m(i, j) = g.at(i, j)[k];
  return m;
}

}  // namespace

HMatrix make_hmatrix(std::size_t rows, std::size_t cols, std::vector<Vec> entries) {
  if (entries.size() != rows * cols) throw ShapeMismatch("entry count does not match shape");
  std::size_t dim = entries.empty() ? 0 : entries[0].size();
  for (const auto& e : entries)
    if (e.size() != dim) throw AmbientMismatch("entries of different lengths");
  return HMatrix{rows, cols, dim, std::move(entries)};
}

HMatrix scalar_hmatrix(const Matrix& k, const Vec& one) {
  HMatrix out = HMatrix::zero(k.rows(), k.cols(), one.size());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j)
      if (!k(i, j).is_zero()) out.at(i, j) = scale(one, k(i, j));
  return out;
}

HMatrix transpose(const HMatrix& a) {
  HMatrix out = HMatrix::zero(a.cols, a.rows, a.dim);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

HMatrix block(const HMatrix& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  if (r0 > r1 || r1 > a.rows || c0 > c1 || c1 > a.cols) throw ShapeMismatch("block out of range");
  HMatrix out = HMatrix::zero(r1 - r0, c1 - c0, a.dim);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) out.at(i - r0, j - c0) = a.at(i, j);
  return out;
}

HMatrix apply_entrywise(const Matrix& map, const HMatrix& a) {
  HMatrix out = a;
  for (auto& e : out.entries) e = map.apply(e);
  out.dim = map.rows();
  return out;
}

Subspace entry_span(const HMatrix& a) { return Subspace::span(a.dim, a.entries); }

std::size_t entry_rank(const HMatrix& a) { return entry_span(a).dim(); }

std::string to_string(const HMatrix& a, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.rows; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < a.cols; ++j)
      os << (j ? ", " : "") << element_string(names, a.at(i, j));
  }
  os << "]";
  return os.str();
}

HMatrix tilde_tensor(const HMatrix& a, const HMatrix& b) {
  if (a.cols != b.rows) throw ShapeMismatch("tilde tensor needs a.cols == b.rows");
  require_same_dim(a, b);
  HMatrix out = HMatrix::zero(a.rows, b.cols, a.dim * a.dim);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < b.cols; ++l)
      for (std::size_t k = 0; k < a.cols; ++k) {
        const Vec& x = a.at(i, k);
        const Vec& y = b.at(k, l);
        if (is_zero(x) || is_zero(y)) continue;
        out.at(i, l) = add(out.at(i, l), tensor_vec(x, y));
      }
  return out;
}

HMatrix comultiply(const FinCoalgebra& c, const HMatrix& a) {
  HMatrix out = HMatrix::zero(a.rows, a.cols, c.dim * c.dim);
  for (std::size_t x = 0; x < a.entries.size(); ++x) out.entries[x] = c.comultiply(a.entries[x]);
  return out;
}

Matrix counit(const FinCoalgebra& c, const HMatrix& a) {
  Matrix m(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = c.counit_of(a.at(i, j));
  return m;
}

bool check_multiplicative(const FinCoalgebra& c, const HMatrix& g) {
  if (g.rows != g.cols || g.dim != c.dim) return false;
  if (!(counit(c, g) == Matrix::identity(g.rows))) return false;
  return comultiply(c, g) == tilde_tensor(g, g);
}

bool is_basic(const FinCoalgebra& c, const HMatrix& g) {
  return check_multiplicative(c, g) && entry_rank(g) == g.rows * g.cols;
}

HMatrix multiply(const FinHopf& h, const HMatrix& a, const HMatrix& b) {
  require_algebra(h);
  if (a.cols != b.rows) throw ShapeMismatch("matrix product needs a.cols == b.rows");
  require_same_dim(a, b);
  HMatrix out = HMatrix::zero(a.rows, b.cols, a.dim);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < b.cols; ++l)
      for (std::size_t k = 0; k < a.cols; ++k) {
        if (is_zero(a.at(i, k)) || is_zero(b.at(k, l))) continue;
        out.at(i, l) = add(out.at(i, l), h.multiply(a.at(i, k), b.at(k, l)));
      }
  return out;
}

HMatrix multiply(const Matrix& k, const HMatrix& a) {
  if (k.cols() != a.rows) throw ShapeMismatch("scalar matrix product shape");
  HMatrix out = HMatrix::zero(k.rows(), a.cols, a.dim);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t m = 0; m < a.rows; ++m) {
      if (k(i, m).is_zero()) continue;
      for (std::size_t j = 0; j < a.cols; ++j) axpy(out.at(i, j), k(i, m), a.at(m, j));
    }
  return out;
}

HMatrix multiply(const HMatrix& a, const Matrix& k) {
  if (a.cols != k.rows()) throw ShapeMismatch("scalar matrix product shape");
  HMatrix out = HMatrix::zero(a.rows, k.cols(), a.dim);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t m = 0; m < a.cols; ++m)
      for (std::size_t j = 0; j < k.cols(); ++j)
        if (!k(m, j).is_zero()) axpy(out.at(i, j), k(m, j), a.at(i, m));
  return out;
}

HMatrix kron(const FinHopf& h, const HMatrix& a, const HMatrix& b, KronSide side) {
  require_algebra(h);
  require_same_dim(a, b);
  const std::size_t r = a.rows, rc = a.cols, s = b.rows, sc = b.cols;
  HMatrix out = HMatrix::zero(r * s, rc * sc, a.dim);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rc; ++j) {
      if (is_zero(a.at(i, j))) continue;
      for (std::size_t k = 0; k < s; ++k)
        for (std::size_t l = 0; l < sc; ++l) {
          if (is_zero(b.at(k, l))) continue;
          Vec prod = h.multiply(a.at(i, j), b.at(k, l));
          if (side == KronSide::left)
            out.at(i * s + k, j * sc + l) = std::move(prod);
          else
            out.at(k * r + i, l * rc + j) = std::move(prod);
        }
    }
  return out;
}

MultMatrix kron(const FinHopf& h, const MultMatrix& a, const MultMatrix& b, KronSide side) {
  MultMatrix out{kron(h, a.mat, b.mat, side), false};
  if (!check_multiplicative(h.coalg, out.mat))
    throw NotBialgebra("Kronecker product is not multiplicative; the product is not a coalgebra map");
  return out;
}

AntipodeIdentityReport antipode_identities(const FinHopf& h, const HMatrix& g) {
  if (!h.antipode) throw NoAntipode("antipode identities need an antipode");
  auto sinv = inverse(*h.antipode);
  if (!sinv) throw NoAntipode("antipode is not bijective");
  const std::size_t n = g.rows;
  const HMatrix id = scalar_hmatrix(Matrix::identity(n), h.unit);
  const HMatrix sg = apply_entrywise(*h.antipode, g);
  const HMatrix sig_t = transpose(apply_entrywise(*sinv, g));
  const HMatrix gt = transpose(g);
  AntipodeIdentityReport r;
  auto test = [&](const HMatrix& x, const char* what) {
    bool ok = x == id;
    if (!ok && r.witness.empty()) r.witness = std::string(what) + " = " + to_string(x, h.names());
    return ok;
  };
  r.s_left = test(multiply(h, sg, g), "S(G)G");
  r.s_right = test(multiply(h, g, sg), "GS(G)");
  r.sinv_left = test(multiply(h, sig_t, gt), "S^-1(G)^T G^T");
  r.sinv_right = test(multiply(h, gt, sig_t), "G^T S^-1(G)^T");
  return r;
}

HMatrix MultDecomposition::segment(std::size_t a, std::size_t b) const {
  return block(conjugated, offsets.at(a), offsets.at(b + 1), offsets.at(a), offsets.at(b + 1));
}

MultDecomposition decompose_multiplicative(const FinCoalgebra& c, const CoradicalData& data,
                                           const HMatrix& g) {
  if (g.rows != g.cols || g.dim != c.dim) throw ShapeMismatch("expected a square matrix over H");
  const std::size_t n = g.rows;
  const std::size_t dim = c.dim;

  // F_k: action of the k-th dual basis functional on K^n
  std::vector<Matrix> act(dim);
  std::vector<bool> used(dim, false);
  for (std::size_t k = 0; k < dim; ++k) {
    act[k] = hmatrix_coeff(g, k);
    used[k] = !act[k].is_zero();
  }
  auto act_by = [&](const Vec& f) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < dim; ++k)
      if (used[k] && !f[k].is_zero()) m = m + f[k] * act[k];
    return m;
  };
  std::vector<Matrix> rad;
  for (const auto& r : data.radical.vectors()) {
    Matrix m = act_by(r);
    if (!m.is_zero()) rad.push_back(std::move(m));
  }
  std::vector<Matrix> idem, rank_one;
  for (std::size_t s = 0; s < data.simples.size(); ++s) {
    idem.push_back(act_by(data.idempotents[s]));
    rank_one.push_back(act_by(data.simples[s].rank_one));
  }

  std::vector<Vec> cols;
  std::vector<std::size_t> sizes, owners;
  Subspace done(n);
  while (done.dim() < n) {
    const auto np = done.non_pivots();
    const std::size_t q = np.size();
    auto quot = [&](const Matrix& f) {
      Matrix out(q, q);
      for (std::size_t a = 0; a < q; ++a) {
        Vec col = done.quotient_coordinates(f.apply(unit_vec(n, np[a])));
        for (std::size_t b = 0; b < q; ++b) out(b, a) = col[b];
      }
      return out;
    };
    auto lift = [&](const Vec& w) {
      Vec v(n);
      for (std::size_t a = 0; a < q; ++a) v[np[a]] = w[a];
      return v;
    };
    Matrix stacked(0, q);
    for (const auto& r : rad) {
      Matrix m = quot(r);
      for (std::size_t i = 0; i < q; ++i) stacked.append_row(m.row(i));
    }
    Subspace socle = stacked.rows() ? kernel(stacked) : Subspace::whole(q);
    if (socle.dim() == 0) throw Error("comodule has zero socle; radical data does not match");

    std::vector<Matrix> qact;
    for (std::size_t k = 0; k < dim; ++k) qact.push_back(used[k] ? quot(act[k]) : Matrix(q, q));
    std::vector<Vec> layer;
    for (std::size_t s = 0; s < data.simples.size(); ++s) {
      Subspace iso = image(quot(idem[s]), socle);
      if (iso.dim() == 0) continue;
      Subspace heads = image(quot(rank_one[s]), iso);
      for (const auto& u : heads.vectors()) {
        std::vector<Vec> gens{u};
        for (std::size_t k = 0; k < dim; ++k)
          if (used[k]) gens.push_back(qact[k].apply(u));
        Subspace sub = Subspace::span(q, gens);
        // e_s fixes w modulo the lower layers; using e_s w keeps every
        // idempotent block diagonal in the new basis
        for (const auto& w : sub.vectors()) {
          cols.push_back(idem[s].apply(lift(w)));
          layer.push_back(cols.back());
        }
        sizes.push_back(sub.dim());
        owners.push_back(s);
      }
    }
    std::vector<Vec> all = done.vectors();
    all.insert(all.end(), layer.begin(), layer.end());
    Subspace next = Subspace::span(n, all);
    if (next.dim() != done.dim() + layer.size())
      throw Error("socle layer is not a direct sum; radical data does not match the matrix");
    done = next;
  }

  MultDecomposition out;
  Matrix t = Matrix::from_cols(cols, n);
  auto tinv = inverse(t);
  if (!tinv) throw Error("decomposition basis is singular");
  out.L = *tinv;
  out.L_inv = t;
  out.conjugated = multiply(multiply(out.L, g), t);
  out.offsets.push_back(0);
  for (std::size_t s : sizes) out.offsets.push_back(out.offsets.back() + s);
  out.simple_index = owners;
  const std::size_t nb = sizes.size();
  for (std::size_t a = 0; a < nb; ++a) {
    HMatrix d = block(out.conjugated, out.offsets[a], out.offsets[a + 1], out.offsets[a],
                      out.offsets[a + 1]);
    if (!is_basic(c, d)) throw Error("diagonal block is not basic multiplicative");
    out.diagonal.push_back(MultMatrix{std::move(d), true});
    for (std::size_t b = 0; b < nb; ++b) {
      HMatrix x = block(out.conjugated, out.offsets[a], out.offsets[a + 1], out.offsets[b],
                        out.offsets[b + 1]);
      if (b < a) {
        for (const auto& e : x.entries)
          if (!is_zero(e)) throw Error("decomposition is not block upper triangular");
      } else if (b > a) {
        out.offdiag.emplace(std::make_pair(a, b), std::move(x));
      }
    }
  }
  return out;
}

HMatrix PrimitiveSpace::point(const Vec& v) const {
  const std::size_t r = rows(), s = cols();
  HMatrix x = HMatrix::zero(r, s, dim);
  for (std::size_t e = 0; e < r * s; ++e)
    x.entries[e] = Vec(v.begin() + e * dim, v.begin() + (e + 1) * dim);
  return x;
}

std::vector<HMatrix> PrimitiveSpace::basis() const {
  std::vector<HMatrix> out;
  for (const auto& v : space.vectors()) out.push_back(point(v));
  return out;
}

bool is_primitive(const FinCoalgebra& c, const HMatrix& x, const HMatrix& cm, const HMatrix& dm) {
  if (cm.cols != x.rows || x.cols != dm.rows) return false;
  HMatrix rhs = tilde_tensor(cm, x);
  HMatrix right = tilde_tensor(x, dm);
  for (std::size_t e = 0; e < rhs.entries.size(); ++e) rhs.entries[e] = add(rhs.entries[e], right.entries[e]);
  return comultiply(c, x) == rhs;
}

PrimitiveSpace primitive_space(const FinCoalgebra& c, const Subspace& h0, const MultMatrix& cm,
                               const MultMatrix& dm, const Subspace* support) {
  const std::size_t n = c.dim, r = cm.size(), s = dm.size();
  const Subspace whole = Subspace::whole(n);
  const Subspace& sup = support ? *support : whole;
  const std::size_t w = sup.dim();
  const std::size_t nn = n * n;

  std::vector<Vec> delta(w);
  for (std::size_t m = 0; m < w; ++m) delta[m] = c.comultiply(sup.vector(m));

  // unknown (a*s + b)*w + m is the coefficient of the m-th support vector in x_ab
  const std::size_t unknowns = r * s * w;
  std::vector<Vec> columns(unknowns, Vec(r * s * nn));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < s; ++b)
      for (std::size_t m = 0; m < w; ++m) {
        Vec& col = columns[(a * s + b) * w + m];
        const Vec wm = sup.vector(m);
        auto put = [&](std::size_t ea, std::size_t eb, const Vec& t, const Scalar& sign) {
          const std::size_t base = (ea * s + eb) * nn;
          for (std::size_t z = 0; z < nn; ++z)
            if (!t[z].is_zero()) col[base + z].add_scaled(t[z], sign);
        };
        put(a, b, delta[m], Scalar(1L));
        for (std::size_t a2 = 0; a2 < r; ++a2)
          if (!is_zero(cm.mat.at(a2, a))) put(a2, b, tensor_vec(cm.mat.at(a2, a), wm), Scalar(-1L));
        for (std::size_t b2 = 0; b2 < s; ++b2)
          if (!is_zero(dm.mat.at(b, b2))) put(a, b2, tensor_vec(wm, dm.mat.at(b, b2)), Scalar(-1L));
      }
  Matrix eqs(0, unknowns);
  for (std::size_t row = 0; row < r * s * nn; ++row) {
    Vec v(unknowns);
    bool any = false;
    for (std::size_t u = 0; u < unknowns; ++u)
      if (!columns[u][row].is_zero()) {
        v[u] = columns[u][row];
        any = true;
      }
    if (any) eqs.append_row(v);
  }
  Subspace sol = eqs.rows() ? kernel(eqs) : Subspace::whole(unknowns);

  PrimitiveSpace ps;
  ps.c_matrix = cm;
  ps.d_matrix = dm;
  ps.dim = n;
  std::vector<Vec> full, mod_h0;
  for (const auto& v : sol.vectors()) {
    Vec x(r * s * n), q;
    for (std::size_t e = 0; e < r * s; ++e) {
      Vec entry(n);
      for (std::size_t m = 0; m < w; ++m)
        if (!v[e * w + m].is_zero()) axpy(entry, v[e * w + m], sup.vector(m));
      for (std::size_t z = 0; z < n; ++z) x[e * n + z] = entry[z];
      Vec qe = h0.quotient_coordinates(entry);
      q.insert(q.end(), qe.begin(), qe.end());
    }
    full.push_back(std::move(x));
    mod_h0.push_back(std::move(q));
  }
  ps.space = Subspace::span(r * s * n, full);
  ps.nontrivial_dim = mod_h0.empty() ? 0 : Subspace::span(mod_h0[0].size(), mod_h0).dim();
  return ps;
}

NontrivialityReport nontriviality_equivalences(const FinCoalgebra& c, const Subspace& h0,
                                               const HMatrix& x, const MultMatrix& cm,
                                               const MultMatrix& dm) {
  if (!is_primitive(c, x, cm.mat, dm.mat)) throw NotPrimitive("matrix is not (C, D)-primitive");
  NontrivialityReport rep;
  rep.all_entries_outside = true;
  for (const auto& e : x.entries) {
    bool outside = !h0.contains(e);
    rep.some_entry_outside = rep.some_entry_outside || outside;
    rep.all_entries_outside = rep.all_entries_outside && outside;
  }
  const std::size_t q = c.dim - h0.dim();
  bool indep = true;
  for (std::size_t i = 0; i < x.rows && indep; ++i) {
    std::vector<Vec> row;
    for (std::size_t j = 0; j < x.cols; ++j) row.push_back(h0.quotient_coordinates(x.at(i, j)));
    indep = Subspace::span(q, row).dim() == x.cols;
  }
  for (std::size_t j = 0; j < x.cols && indep; ++j) {
    std::vector<Vec> col;
    for (std::size_t i = 0; i < x.rows; ++i) col.push_back(h0.quotient_coordinates(x.at(i, j)));
    indep = Subspace::span(q, col).dim() == x.rows;
  }
  rep.independent = indep;
  return rep;
}

}  // namespace hopf
