#include <algorithm>
#include <numeric>

#include "hopflink/coalg.hpp"

namespace hopf {

namespace {

FinHopf blank(std::size_t dim, std::vector<std::string> names, int field_order) {
  FinHopf h;
  h.coalg.field_order = field_order;
  h.coalg.dim = dim;
  h.coalg.names = std::move(names);
  h.coalg.comul.resize(dim);
  h.coalg.counit.assign(dim, Scalar());
  h.mul.resize(dim * dim);
  h.unit.assign(dim, Scalar());
  return h;
}

std::vector<int> permutation_compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a b)(x) = a(b(x))
  std::vector<int> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

std::vector<std::vector<int>> s3_elements() {
  return {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
}

}  // namespace

int validate_group_table(const GroupTable& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) throw InvalidGroupTable("empty table");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) throw InvalidGroupTable("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw InvalidGroupTable("entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw InvalidGroupTable("not associative at (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ", " + std::to_string(c) + ")");
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = t[a][b] == b && t[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw InvalidGroupTable("no identity element");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n && !has_inverse; ++b) has_inverse = t[a][b] == e && t[b][a] == e;
    if (!has_inverse) throw InvalidGroupTable("element " + std::to_string(a) + " has no inverse");
  }
  return e;
}

GroupTable cyclic_table(int n) {
  GroupTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

GroupTable s3_table() {
  auto els = s3_elements();
  GroupTable t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto p = permutation_compose(els[a], els[b]);
      t[a][b] = static_cast<int>(std::find(els.begin(), els.end(), p) - els.begin());
    }
  return t;
}

std::vector<std::string> s3_names() { return {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}; }

GroupTable direct_product_table(const GroupTable& a, const GroupTable& b) {
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  GroupTable t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y) t[x][y] = a[x / nb][y / nb] * nb + b[x % nb][y % nb];
  return t;
}

std::vector<std::string> cyclic_names(int n, const std::string& gen) {
  std::vector<std::string> out{"1"};
  for (int i = 1; i < n; ++i) out.push_back(i == 1 ? gen : gen + "^" + std::to_string(i));
  return out;
}

FinHopf group_algebra(const GroupTable& t, std::vector<std::string> names, int field_order) {
  const int e = validate_group_table(t);
  const std::size_t n = t.size();
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  if (names.size() != n) throw InvalidGroupTable("name count differs from group order");
  FinHopf h = blank(n, std::move(names), field_order);
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    h.coalg.comul[a].push_back({a, a, Scalar(1L)});
    h.coalg.counit[a] = Scalar(1L);
    for (std::size_t b = 0; b < n; ++b) {
      h.mul[a * n + b].push_back({static_cast<std::size_t>(t[a][b]), Scalar(1L)});
      if (t[a][b] == e) s(b, a) = Scalar(1L);
    }
  }
  h.unit[e] = Scalar(1L);
  h.antipode = s;
  return h;
}

FinHopf dual_group_algebra(const GroupTable& t, std::vector<std::string> names,
                           int field_order) {
  const int e = validate_group_table(t);
  const std::size_t n = t.size();
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  if (names.size() != n) throw InvalidGroupTable("name count differs from group order");
  std::vector<std::string> dnames;
  for (const auto& nm : names) dnames.push_back("p[" + nm + "]");
  FinHopf h = blank(n, std::move(dnames), field_order);
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      h.coalg.comul[t[a][b]].push_back({a, b, Scalar(1L)});
      if (t[a][b] == e) s(b, a) = Scalar(1L);
    }
  for (auto& terms : h.coalg.comul)
    std::sort(terms.begin(), terms.end(), [](const ComulTerm& x, const ComulTerm& y) {
      return x.j != y.j ? x.j < y.j : x.k < y.k;
    });
  for (std::size_t a = 0; a < n; ++a) {
    h.mul[a * n + a].push_back({a, Scalar(1L)});
    h.unit[a] = Scalar(1L);
  }
  h.coalg.counit[e] = Scalar(1L);
  h.antipode = s;
  return h;
}

FinHopf taft(int n, const Scalar& q) {
  if (n < 2) throw NotPrimitiveRoot("taft algebra needs n >= 2");
  if (!(q.pow(n) == Scalar(1L))) throw NotPrimitiveRoot(q.to_string() + " is not an n-th root of unity");
  for (int k = 1; k < n; ++k)
    if (q.pow(k) == Scalar(1L))
      throw NotPrimitiveRoot(q.to_string() + " has order " + std::to_string(k));
  const std::size_t dim = static_cast<std::size_t>(n) * n;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string g = i == 0 ? "" : (i == 1 ? "g" : "g^" + std::to_string(i));
      std::string x = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
      names.push_back(g.empty() && x.empty() ? "1" : g + x);
    }
  FinHopf h = blank(dim, std::move(names), std::lcm(1, q.order()));
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j + l < n) h.mul[idx(i, j) * dim + idx(k, l)].push_back(
                {idx((i + k) % n, j + l), q.pow(static_cast<long>(j) * k)});
  h.unit[idx(0, 0)] = Scalar(1L);
  for (int i = 0; i < n; ++i) h.coalg.counit[idx(i, 0)] = Scalar(1L);

  const Vec one = unit_vec(dim, idx(0, 0));
  const Vec g = unit_vec(dim, idx(1, 0));
  const Vec x = unit_vec(dim, idx(0, 1));
  const Vec dg = tensor_vec(g, g);
  const Vec dx = add(tensor_vec(one, x), tensor_vec(x, g));
  const Vec ginv = unit_vec(dim, idx(n - 1, 0));
  const Vec sx = scale(h.multiply(x, ginv), Scalar(-1L));

  Matrix s(dim, dim);
  Vec dgi = tensor_vec(one, one);
  Vec sgi = one;
  for (int i = 0; i < n; ++i) {
    Vec d = dgi;
    Vec sv = sgi;
    for (int j = 0; j < n; ++j) {
      h.coalg.set_comul_dense(idx(i, j), d);
      for (std::size_t k = 0; k < dim; ++k) s(k, idx(i, j)) = sv[k];
      d = h.tensor_multiply(d, dx);
      sv = h.multiply(sx, sv);  // S(g^i x^{j+1}) = S(x)^{j+1} S(g)^i
    }
    dgi = h.tensor_multiply(dgi, dg);
    sgi = h.multiply(sgi, ginv);
  }
  h.antipode = s;
  return h;
}

FinHopf sweedler() { return taft(2, Scalar(-1L)); }

FinHopf tensor(const FinHopf& a, const FinHopf& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) names.push_back(a.names()[i] + "|" + b.names()[j]);
  FinHopf h = blank(n, std::move(names), std::lcm(a.field_order(), b.field_order()));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t x = i * nb + j;
      auto& terms = h.coalg.comul[x];
      for (const auto& s : a.coalg.comul[i])
        for (const auto& t : b.coalg.comul[j])
          terms.push_back({s.j * nb + t.j, s.k * nb + t.k, s.c * t.c});
      std::sort(terms.begin(), terms.end(), [](const ComulTerm& p, const ComulTerm& q) {
        return p.j != q.j ? p.j < q.j : p.k < q.k;
      });
      h.coalg.counit[x] = a.coalg.counit[i] * b.coalg.counit[j];
      h.unit[x] = a.unit[i] * b.unit[j];
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          auto& slot = h.mul[x * n + k * nb + l];
          for (const auto& s : a.mul[i * na + k])
            for (const auto& t : b.mul[j * nb + l]) slot.push_back({s.k * nb + t.k, s.c * t.c});
          std::sort(slot.begin(), slot.end(),
                    [](const MulTerm& p, const MulTerm& q) { return p.k < q.k; });
        }
    }
  if (a.antipode && b.antipode) {
    Matrix s(n, n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t k = 0; k < na; ++k)
          for (std::size_t l = 0; l < nb; ++l)
            s(k * nb + l, i * nb + j) = (*a.antipode)(k, i) * (*b.antipode)(l, j);
    h.antipode = s;
  }
  return h;
}

FinHopf opposite(const FinHopf& a) {
  FinHopf h = a;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.mul[i * n + j] = a.mul[j * n + i];
  h.antipode.reset();
  if (a.antipode)
    if (auto inv = inverse(*a.antipode)) h.antipode = *inv;
  return h;
}

FinHopf coopposite(const FinHopf& a) {
  FinHopf h = a;
  for (auto& terms : h.coalg.comul) {
    for (auto& t : terms) std::swap(t.j, t.k);
    std::sort(terms.begin(), terms.end(), [](const ComulTerm& p, const ComulTerm& q) {
      return p.j != q.j ? p.j < q.j : p.k < q.k;
    });
  }
  h.antipode.reset();
  if (a.antipode)
    if (auto inv = inverse(*a.antipode)) h.antipode = *inv;
  return h;
}

FinHopf dual(const FinHopf& a) {
  const std::size_t n = a.dim();
  std::vector<std::string> names;
  for (const auto& nm : a.names()) names.push_back(nm + "*");
  FinHopf h = blank(n, std::move(names), a.field_order());
  // Delta(b^i) = sum_{j,k} c[j][k][i] b^j (x) b^k
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& t : a.mul[j * n + k]) h.coalg.comul[t.k].push_back({j, k, t.c});
  // b^j b^k = sum_i mu[i][j][k] b^i
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : a.coalg.comul[i]) h.mul[t.j * n + t.k].push_back({i, t.c});
  for (auto& slot : h.mul)
    std::sort(slot.begin(), slot.end(), [](const MulTerm& p, const MulTerm& q) { return p.k < q.k; });
  h.coalg.counit = a.unit;
  h.unit = a.coalg.counit;
  if (a.antipode) h.antipode = a.antipode->transpose();
  return h;
}

FinHopf with_field_order(const FinHopf& a, int n) {
  if (n % a.field_order() != 0)
    throw IncompatibleOrder("field order " + std::to_string(n) + " does not extend " +
                            std::to_string(a.field_order()));
  FinHopf h = a;
  h.coalg.field_order = n;
  return h;
}

}  // namespace hopf
