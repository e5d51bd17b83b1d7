#include "hopflink/coalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopf {

namespace {

using SparseVec = std::map<std::size_t, Scalar>;

void accumulate(SparseVec& acc, std::size_t idx, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = acc.find(idx);
  if (it == acc.end()) {
    acc.emplace(idx, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

std::string triple(const std::vector<std::string>& names, std::size_t i,
                   std::size_t j, std::size_t k) {
  return "(" + names[i] + ", " + names[j] + ", " + names[k] + ")";
}

}  // namespace

Vec FinCoalgebra::comultiply_basis(std::size_t i) const {
  Vec out(dim * dim);
  for (const auto& t : comul[i]) out[t.j * dim + t.k] = t.c;
  return out;
}

Vec FinCoalgebra::comultiply(const Vec& v) const {
  if (v.size() != dim) throw AmbientMismatch("element length differs from dim");
  Vec out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : comul[i]) out[t.j * dim + t.k].add_scaled(t.c, v[i]);
  }
  return out;
}

Scalar FinCoalgebra::counit_of(const Vec& v) const { return pair(counit, v); }

void FinCoalgebra::set_comul_dense(std::size_t i, const Vec& tensor) {
  comul[i].clear();
  for (std::size_t idx = 0; idx < tensor.size(); ++idx)
    if (!tensor[idx].is_zero()) comul[i].push_back({idx / dim, idx % dim, tensor[idx]});
}

Vec FinHopf::multiply_basis(std::size_t i, std::size_t j) const {
  Vec out(dim());
  for (const auto& t : mul[i * dim() + j]) out[t.k] = t.c;
  return out;
}

Vec FinHopf::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw AmbientMismatch("element length differs from dim");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar s = a[i] * b[j];
      for (const auto& t : mul[i * n + j]) out[t.k].add_scaled(t.c, s);
    }
  }
  return out;
}

Vec FinHopf::apply_antipode(const Vec& v) const {
  if (!antipode) throw NoAntipode("algebra has no antipode");
  return antipode->apply(v);
}

Vec FinHopf::tensor_multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  Vec out(n * n);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x].is_zero()) continue;
    const std::size_t p = x / n, q = x % n;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (b[y].is_zero()) continue;
      const std::size_t r = y / n, s = y % n;
      Scalar f = a[x] * b[y];
      for (const auto& t1 : mul[p * n + r])
        for (const auto& t2 : mul[q * n + s])
          out[t1.k * n + t2.k].add_scaled(t1.c * t2.c, f);
    }
  }
  return out;
}

void FinHopf::set_mul_dense(std::size_t i, std::size_t j, const Vec& v) {
  auto& slot = mul[i * dim() + j];
  slot.clear();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) slot.push_back({k, v[k]});
}

std::size_t FinHopf::index_of(const std::string& name) const {
  auto it = std::find(names().begin(), names().end(), name);
  if (it == names().end()) throw std::out_of_range("no basis element named " + name);
  return static_cast<std::size_t>(it - names().begin());
}

namespace {
bool same_terms(const std::vector<ComulTerm>& a, const std::vector<ComulTerm>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].j != b[i].j || a[i].k != b[i].k || !(a[i].c == b[i].c)) return false;
  return true;
}
bool same_terms(const std::vector<MulTerm>& a, const std::vector<MulTerm>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].k != b[i].k || !(a[i].c == b[i].c)) return false;
  return true;
}
}  // namespace

bool operator==(const FinCoalgebra& a, const FinCoalgebra& b) {
  if (a.dim != b.dim || a.field_order != b.field_order || a.names != b.names ||
      a.counit != b.counit)
    return false;
  for (std::size_t i = 0; i < a.dim; ++i)
    if (!same_terms(a.comul[i], b.comul[i])) return false;
  return true;
}

bool operator==(const FinHopf& a, const FinHopf& b) {
  if (!(a.coalg == b.coalg) || a.unit != b.unit) return false;
  if (a.antipode.has_value() != b.antipode.has_value()) return false;
  if (a.antipode && !(*a.antipode == *b.antipode)) return false;
  for (std::size_t i = 0; i < a.mul.size(); ++i)
    if (!same_terms(a.mul[i], b.mul[i])) return false;
  return true;
}

HElement::HElement(const FinHopf& parent, Vec coords)
    : parent_(&parent), coords_(std::move(coords)) {
  if (coords_.size() != parent.dim()) throw AmbientMismatch("element length differs from dim");
}

HElement HElement::basis(const FinHopf& parent, std::size_t i) {
  return HElement(parent, unit_vec(parent.dim(), i));
}

HElement HElement::scalar(const FinHopf& parent, const Scalar& s) {
  return HElement(parent, hopf::scale(parent.unit, s));
}

HElement HElement::operator+(const HElement& o) const {
  return HElement(*parent_, add(coords_, o.coords_));
}

HElement HElement::operator-(const HElement& o) const {
  return HElement(*parent_, sub(coords_, o.coords_));
}

HElement HElement::operator*(const HElement& o) const {
  return HElement(*parent_, parent_->multiply(coords_, o.coords_));
}

HElement HElement::operator*(const Scalar& s) const {
  return HElement(*parent_, hopf::scale(coords_, s));
}

HElement HElement::antipode() const {
  return HElement(*parent_, parent_->apply_antipode(coords_));
}

std::string HElement::to_string() const { return element_string(parent_->names(), coords_); }

Vec tensor_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

std::string element_string(const std::vector<std::string>& names, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (v[i].is_one()) {
      out += names[i];
    } else {
      out += "(" + v[i].to_string() + ")" + names[i];
    }
  }
  return out.empty() ? "0" : out;
}

Scalar pair(const Vec& f, const Vec& h) {
  if (f.size() != h.size()) throw AmbientMismatch("pairing lengths differ");
  Scalar s;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero() && !h[i].is_zero()) s.add_scaled(f[i], h[i]);
  return s;
}

Vec dual_product(const FinCoalgebra& c, const Vec& f, const Vec& g) {
  Vec out(c.dim);
  for (std::size_t i = 0; i < c.dim; ++i)
    for (const auto& t : c.comul[i])
      if (!f[t.j].is_zero() && !g[t.k].is_zero()) out[i].add_scaled(t.c, f[t.j] * g[t.k]);
  return out;
}

Vec hit_left(const FinCoalgebra& c, const Vec& f, const Vec& h) {
  Vec out(c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) {
    if (h[i].is_zero()) continue;
    for (const auto& t : c.comul[i])
      if (!f[t.k].is_zero()) out[t.j].add_scaled(t.c, h[i] * f[t.k]);
  }
  return out;
}

Vec hit_right(const FinCoalgebra& c, const Vec& h, const Vec& f) {
  Vec out(c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) {
    if (h[i].is_zero()) continue;
    for (const auto& t : c.comul[i])
      if (!f[t.j].is_zero()) out[t.k].add_scaled(t.c, h[i] * f[t.j]);
  }
  return out;
}

std::vector<AxiomCheck> check_coalgebra_axioms(const FinCoalgebra& c) {
  const std::size_t n = c.dim;
  std::vector<AxiomCheck> out;
  AxiomCheck coassoc{"coassociativity", true, ""};
  for (std::size_t i = 0; i < n && coassoc.passed; ++i) {
    SparseVec left, right;
    for (const auto& t : c.comul[i]) {
      for (const auto& u : c.comul[t.j]) accumulate(left, (u.j * n + u.k) * n + t.k, t.c * u.c);
      for (const auto& u : c.comul[t.k]) accumulate(right, (t.j * n + u.j) * n + u.k, t.c * u.c);
    }
    bool eq = left.size() == right.size();
    for (auto it = left.begin(), jt = right.begin(); eq && it != left.end(); ++it, ++jt)
      eq = it->first == jt->first && it->second == jt->second;
    if (!eq) {
      coassoc.passed = false;
      coassoc.witness = c.names[i];
    }
  }
  out.push_back(coassoc);

  AxiomCheck cl{"counit-left", true, ""}, cr{"counit-right", true, ""};
  for (std::size_t i = 0; i < n; ++i) {
    Vec l(n), r(n);
    for (const auto& t : c.comul[i]) {
      l[t.k].add_scaled(t.c, c.counit[t.j]);
      r[t.j].add_scaled(t.c, c.counit[t.k]);
    }
    Vec e = unit_vec(n, i);
    if (cl.passed && l != e) {
      cl.passed = false;
      cl.witness = c.names[i];
    }
    if (cr.passed && r != e) {
      cr.passed = false;
      cr.witness = c.names[i];
    }
  }
  out.push_back(cl);
  out.push_back(cr);
  return out;
}

std::vector<AxiomCheck> check_axioms(const FinHopf& h) {
  const std::size_t n = h.dim();
  const auto& names = h.names();
  auto out = check_coalgebra_axioms(h.coalg);
  if (!h.has_algebra()) return out;

  AxiomCheck assoc{"associativity", true, ""};
  for (std::size_t i = 0; i < n && assoc.passed; ++i)
    for (std::size_t j = 0; j < n && assoc.passed; ++j) {
      Vec ij = h.multiply_basis(i, j);
      for (std::size_t k = 0; k < n && assoc.passed; ++k) {
        Vec left = h.multiply(ij, unit_vec(n, k));
        Vec right = h.multiply(unit_vec(n, i), h.multiply_basis(j, k));
        if (left != right) {
          assoc.passed = false;
          assoc.witness = triple(names, i, j, k);
        }
      }
    }
  out.push_back(assoc);

  AxiomCheck unit{"unit", true, ""};
  for (std::size_t i = 0; i < n && unit.passed; ++i) {
    Vec e = unit_vec(n, i);
    if (h.multiply(h.unit, e) != e || h.multiply(e, h.unit) != e) {
      unit.passed = false;
      unit.witness = names[i];
    }
  }
  out.push_back(unit);

  AxiomCheck dm{"comul-multiplicative", true, ""};
  AxiomCheck em{"counit-multiplicative", true, ""};
  for (std::size_t i = 0; i < n; ++i) {
    Vec di = h.coalg.comultiply_basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = h.multiply_basis(i, j);
      if (dm.passed &&
          h.coalg.comultiply(prod) != h.tensor_multiply(di, h.coalg.comultiply_basis(j))) {
        dm.passed = false;
        dm.witness = "(" + names[i] + ", " + names[j] + ")";
      }
      if (em.passed && !(h.coalg.counit_of(prod) == h.coalg.counit[i] * h.coalg.counit[j])) {
        em.passed = false;
        em.witness = "(" + names[i] + ", " + names[j] + ")";
      }
    }
  }
  out.push_back(dm);
  out.push_back(em);

  AxiomCheck du{"comul-unit", h.coalg.comultiply(h.unit) == tensor_vec(h.unit, h.unit), ""};
  if (!du.passed) du.witness = "1";
  out.push_back(du);
  AxiomCheck eu{"counit-unit", h.coalg.counit_of(h.unit).is_one(), ""};
  if (!eu.passed) eu.witness = "1";
  out.push_back(eu);

  if (h.antipode) {
    const Matrix& s = *h.antipode;
    AxiomCheck sl{"antipode-left", true, ""}, sr{"antipode-right", true, ""};
    for (std::size_t i = 0; i < n; ++i) {
      Vec l(n), r(n);
      for (const auto& t : h.coalg.comul[i]) {
        axpy(l, t.c, h.multiply(s.col(t.j), unit_vec(n, t.k)));
        axpy(r, t.c, h.multiply(unit_vec(n, t.j), s.col(t.k)));
      }
      Vec expect = scale(h.unit, h.coalg.counit[i]);
      if (sl.passed && l != expect) {
        sl.passed = false;
        sl.witness = names[i];
      }
      if (sr.passed && r != expect) {
        sr.passed = false;
        sr.witness = names[i];
      }
    }
    out.push_back(sl);
    out.push_back(sr);
    AxiomCheck bij{"antipode-bijective", rank(s) == n, ""};
    if (!bij.passed) bij.witness = "rank " + std::to_string(rank(s));
    out.push_back(bij);
  }
  return out;
}

bool all_passed(const std::vector<AxiomCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

Subspace subcoalgebra_closure(const FinCoalgebra& c, const Subspace& seed) {
  const std::size_t n = c.dim;
  if (seed.ambient_dim() != n) throw AmbientMismatch("seed outside the coalgebra");
  Subspace w = seed;
  while (true) {
    std::vector<Vec> gens = w.vectors();
    for (const auto& v : w.vectors()) {
      Vec t = c.comultiply(v);
      for (std::size_t a = 0; a < n; ++a) {
        Vec left(n), right(n);
        for (std::size_t b = 0; b < n; ++b) {
          left[b] = t[b * n + a];
          right[b] = t[a * n + b];
        }
        if (!is_zero(left)) gens.push_back(std::move(left));
        if (!is_zero(right)) gens.push_back(std::move(right));
      }
    }
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == w.dim()) return w;
    w = std::move(next);
  }
}

bool is_subcoalgebra(const FinCoalgebra& c, const Subspace& w) {
  return subcoalgebra_closure(c, w).dim() == w.dim();
}

Subspace subspace_product(const FinHopf& h, const Subspace& a, const Subspace& b) {
  std::vector<Vec> prods;
  for (const auto& x : a.vectors())
    for (const auto& y : b.vectors()) prods.push_back(h.multiply(x, y));
  return Subspace::span(h.dim(), prods);
}

Subspace antipode_image(const FinHopf& h, const Subspace& a) {
  if (!h.antipode) throw NoAntipode("algebra has no antipode");
  return image(*h.antipode, a);
}

FinCoalgebra sub_coalgebra(const FinCoalgebra& c, const Subspace& w) {
  if (!is_subcoalgebra(c, w)) throw NotSubcoalgebra("subspace is not Delta-closed");
  const std::size_t n = c.dim, m = w.dim();
  const auto& piv = w.pivots();
  FinCoalgebra out;
  out.field_order = c.field_order;
  out.dim = m;
  out.comul.resize(m);
  out.counit.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    Vec v = w.vector(a);
    out.names.push_back(element_string(c.names, v));
    Vec t = c.comultiply(v);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        const Scalar& s = t[piv[x] * n + piv[y]];
        if (!s.is_zero()) out.comul[a].push_back({x, y, s});
      }
    out.counit[a] = c.counit_of(v);
  }
  return out;
}

FinHopf sub_hopf(const FinHopf& h, const Subspace& w) {
  FinHopf out;
  out.coalg = sub_coalgebra(h.coalg, w);
  const std::size_t m = w.dim();
  out.mul.resize(m * m);
  auto vecs = w.vectors();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec p = h.multiply(vecs[a], vecs[b]);
      if (!w.contains(p)) throw NotSubcoalgebra("subspace is not closed under products");
      out.set_mul_dense(a, b, w.coordinates(p));
    }
  if (!w.contains(h.unit)) throw NotSubcoalgebra("subspace does not contain 1");
  out.unit = w.coordinates(h.unit);
  if (h.antipode) {
    Matrix s(m, m);
    for (std::size_t a = 0; a < m; ++a) {
      Vec img = h.apply_antipode(vecs[a]);
      if (!w.contains(img)) throw NotSubcoalgebra("subspace is not stable under S");
      Vec co = w.coordinates(img);
      for (std::size_t k = 0; k < m; ++k) s(k, a) = co[k];
    }
    out.antipode = s;
  }
  return out;
}

}  // namespace hopf
