#include "hopflink/link.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hopflink/matcalc.hpp"

namespace hopf {

namespace {

std::vector<Vec> lift_all(const Subspace& w, const std::vector<Vec>& coords) {
  std::vector<Vec> out;
  for (const auto& v : coords) {
    Vec x(w.ambient_dim());
    for (std::size_t a = 0; a < v.size(); ++a)
      if (!v[a].is_zero()) axpy(x, v[a], w.vector(a));
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

const FinHopf& require_hopf(const LinkContext& ctx, const char* what) {
  if (!ctx.hopf || !ctx.hopf->has_algebra())
    throw NotApplicable(std::string(what) + " needs a Hopf algebra, not a bare coalgebra");
  return *ctx.hopf;
}

void require_dcp(const LinkContext& ctx, const char* what) {
  require_hopf(ctx, what);
  if (!ctx.data.has_dual_chevalley)
    throw NotApplicable(std::string(what) +
                        " needs the dual Chevalley property (H_0 is not a Hopf subalgebra)");
}

std::size_t index_of_simple(const LinkContext& ctx, const Subspace& s) {
  for (std::size_t i = 0; i < ctx.simple_count(); ++i)
    if (ctx.simple(i) == s) return i;
  throw Error("subspace is not one of the simple subcoalgebras");
}

std::size_t unit_component(const LinkContext& ctx, const Decomposition& dec) {
  auto s = ctx.data.simple_containing(ctx.hopf->unit);
  if (!s) throw Error("unit does not lie in a simple subcoalgebra");
  return *dec.component_of_simple(*s);
}

Matrix antipode_inverse(const FinHopf& h) {
  if (!h.antipode) throw NoAntipode("no antipode");
  auto inv = inverse(*h.antipode);
  if (!inv) throw NoAntipode("antipode is not bijective");
  return *inv;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

LinkContext::LinkContext(const FinHopf& h)
    : coalg(&h.coalg), hopf(&h), data(analyze_coradical(h)), wedges(h.coalg) {}

LinkContext::LinkContext(const FinCoalgebra& c, CoradicalData d, const FinHopf* h)
    : coalg(&c), hopf(h), data(std::move(d)), wedges(c) {}

const Subspace& LinkContext::h1() const {
  return data.filtration.size() > 1 ? data.filtration[1] : data.filtration[0];
}

LinkTest direct_link_test(LinkContext& ctx, std::size_t i, std::size_t j) {
  const Subspace& c = ctx.simple(i);
  const Subspace& d = ctx.simple(j);
  const std::size_t base = sum(c, d).dim();
  LinkTest t;
  t.wedge_cd = ctx.wedges.get(c, d).dim() > base;
  t.wedge_dc = ctx.wedges.get(d, c).dim() > base;
  const auto& cm = ctx.data.simples[i].matrix;
  const auto& dm = ctx.data.simples[j].matrix;
  const Subspace& h1 = ctx.h1();
  t.primitive_cd = primitive_space(*ctx.coalg, ctx.data.h0, cm, dm, &h1).nontrivial_dim > 0;
  t.primitive_dc =
      i == j ? t.primitive_cd
             : primitive_space(*ctx.coalg, ctx.data.h0, dm, cm, &h1).nontrivial_dim > 0;
  return t;
}

bool directly_linked(LinkContext& ctx, std::size_t i, std::size_t j) {
  const Subspace& c = ctx.simple(i);
  const Subspace& d = ctx.simple(j);
  return sum(ctx.wedges.get(c, d), ctx.wedges.get(d, c)).dim() > sum(c, d).dim();
}

LinkQuiver link_quiver(LinkContext& ctx) {
  LinkQuiver q;
  const std::size_t n = ctx.simple_count();
  q.vertices = n;
  q.tests.assign(n, std::vector<LinkTest>(n));
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      LinkTest t = direct_link_test(ctx, i, j);
      q.tests[i][j] = t;
      q.tests[j][i] = LinkTest{t.wedge_dc, t.wedge_cd, t.primitive_dc, t.primitive_cd};
      if (!t.consistent()) q.discrepancies += i == j ? 1 : 2;
      if (t.linked()) {
        q.edges.emplace_back(i, j);
        parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  q.class_of.assign(n, 0);
  std::vector<std::size_t> root_class(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find_root(parent, i);
    if (root_class[r] == n) {
      root_class[r] = q.classes.size();
      q.classes.emplace_back();
    }
    q.class_of[i] = root_class[r];
    q.classes[root_class[r]].push_back(i);
  }
  return q;
}

std::optional<std::size_t> Decomposition::component_of_simple(std::size_t simple) const {
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& s = components[k].simples;
    if (std::find(s.begin(), s.end(), simple) != s.end()) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> Decomposition::dims() const {
  std::vector<std::size_t> out;
  for (const auto& c : components) out.push_back(c.space.dim());
  return out;
}

Decomposition components(LinkContext& ctx, const LinkQuiver& quiver) {
  const std::size_t n = ctx.coalg->dim;
  Decomposition dec;
  for (const auto& cls : quiver.classes) {
    Component comp;
    comp.simples = cls;
    Subspace x(n);
    for (std::size_t s : cls) x = sum(x, ctx.simple(s));
    while (true) {
      Subspace next = ctx.wedges.get(x, x);
      if (next == x) break;
      x = std::move(next);
      if (++comp.saturation_steps > n) throw Error("wedge saturation did not stabilize");
    }
    comp.space = std::move(x);
    dec.components.push_back(std::move(comp));
  }
  std::size_t total = 0;
  Subspace all(n);
  for (std::size_t a = 0; a < dec.components.size(); ++a) {
    const Subspace& sa = dec.components[a].space;
    for (std::size_t b = 0; b < a; ++b)
      if (intersect(sa, dec.components[b].space).dim() != 0)
        throw SaturationOverlap("components " + std::to_string(b) + " and " + std::to_string(a) +
                                " intersect");
    total += sa.dim();
    all = sum(all, sa);
  }
  dec.is_direct_sum = total == n && all.dim() == n;
  return dec;
}

std::vector<Check> link_theorem_checks(LinkContext& ctx, const LinkQuiver& quiver,
                                       const Decomposition& dec) {
  std::vector<Check> out;
  const std::size_t n = ctx.coalg->dim, ns = ctx.simple_count();

  out.push_back(make_check("wedge-primitive-equivalence", quiver.discrepancies == 0,
                           std::to_string(ns * ns) + " ordered pairs, " +
                               std::to_string(quiver.discrepancies) + " discrepancies"));

  std::size_t nontrivial = 0, bad = 0;
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < ns; ++j) {
      bool outside = false;
      for (std::size_t k = 0; k < n && !outside; ++k) {
        Vec p = hit(*ctx.coalg, ctx.data, unit_vec(n, k), i, j);
        outside = !ctx.data.h0.contains(p);
      }
      if (!outside) continue;
      ++nontrivial;
      if (quiver.class_of[i] != quiver.class_of[j]) ++bad;
    }
  out.push_back(make_check("hit-projection-implies-linked", bad == 0,
                           std::to_string(nontrivial) + " pairs with a nontrivial projection"));

  std::size_t crossing = 0;
  for (const auto& [i, j] : quiver.edges)
    if (dec.component_of_simple(i) != dec.component_of_simple(j)) ++crossing;
  out.push_back(make_check("no-direct-links-across-components", crossing == 0,
                           std::to_string(quiver.edges.size()) + " direct links"));

  out.push_back(make_check("components-direct-sum", dec.is_direct_sum,
                           "dims " + join(dec.dims()) + ", total dim " + std::to_string(n)));
  if (ctx.data.is_cosemisimple) {
    bool same = dec.components.size() == ns;
    for (std::size_t k = 0; same && k < dec.components.size(); ++k)
      same = dec.components[k].simples.size() == 1 &&
             dec.components[k].space == ctx.simple(dec.components[k].simples[0]);
    out.push_back(make_check("cosemisimple-components-are-simples", same));
  }
  return out;
}

std::vector<Check> antipode_on_components(LinkContext& ctx, const Decomposition& dec) {
  const FinHopf& h = require_hopf(ctx, "antipode check");
  if (!h.antipode) throw NoAntipode("antipode check needs an antipode");
  antipode_inverse(h);
  const Matrix& s = *h.antipode;
  bool simples_ok = true, comps_ok = true;
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < ctx.simple_count(); ++i) {
    Subspace img = image(s, ctx.simple(i));
    std::size_t j = ctx.simple_count();
    for (std::size_t k = 0; k < ctx.simple_count(); ++k)
      if (ctx.simple(k) == img) j = k;
    if (j == ctx.simple_count()) {
      simples_ok = false;
      continue;
    }
    perm.push_back(j);
    auto ci = dec.component_of_simple(i);
    auto cj = dec.component_of_simple(j);
    if (!(image(s, dec.components[*ci].space) == dec.components[*cj].space)) comps_ok = false;
  }
  return {make_check("antipode-permutes-simples", simples_ok, "S(C_i) = C_" + join(perm)),
          make_check("antipode-maps-components", comps_ok)};
}

Subspace coradical_of(const FinCoalgebra& c, const Subspace& x) {
  if (x.dim() == 0) return x;
  FinCoalgebra sub = sub_coalgebra(c, x);
  return Subspace::span(c.dim, lift_all(x, coradical(sub).vectors()));
}

ProductConditions product_conditions(LinkContext& ctx, std::size_t c1, std::size_t c2,
                                     std::size_t d) {
  const FinHopf& h = require_hopf(ctx, "product conditions");
  if (!h.antipode) throw NoAntipode("product conditions need an antipode");
  const Matrix sinv = antipode_inverse(h);
  const Subspace& a = ctx.simple(c1);
  const Subspace& b = ctx.simple(c2);
  const Subspace& dd = ctx.simple(d);
  Subspace twist = sum(image(*h.antipode, dd), image(sinv, dd));
  ProductConditions pc;
  Subspace left = sum(coradical_of(*ctx.coalg, subspace_product(h, a, dd)),
                      coradical_of(*ctx.coalg, subspace_product(h, b, dd)));
  pc.left = ctx.data.h0.contains(subspace_product(h, left, twist));
  Subspace right = sum(coradical_of(*ctx.coalg, subspace_product(h, dd, a)),
                       coradical_of(*ctx.coalg, subspace_product(h, dd, b)));
  pc.right = ctx.data.h0.contains(subspace_product(h, twist, right));
  return pc;
}

std::vector<Check> product_condition_checks(LinkContext& ctx, const Decomposition& dec) {
  const FinHopf& h = require_hopf(ctx, "product conditions");
  const std::size_t ns = ctx.simple_count();
  std::size_t triples = 0, left_fail = 0, right_fail = 0;
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = a; b < ns; ++b)
      for (std::size_t d = 0; d < ns; ++d) {
        auto pc = product_conditions(ctx, a, b, d);
        ++triples;
        left_fail += !pc.left;
        right_fail += !pc.right;
      }
  std::vector<Check> out;
  out.push_back(make_check("product-condition-left", left_fail == 0,
                           std::to_string(left_fail) + " of " + std::to_string(triples) +
                               " triples fail"));
  out.push_back(make_check("product-condition-right", right_fail == 0,
                           std::to_string(right_fail) + " of " + std::to_string(triples) +
                               " triples fail"));
  const Subspace& h1 = dec.components[unit_component(ctx, dec)].space;
  Subspace k = coradical_of(*ctx.coalg, h1);
  Subspace cube = subspace_product(h, subspace_product(h, k, k), k);
  out.push_back(make_check("h1-coradical-cube-in-h0", ctx.data.h0.contains(cube),
                           "dim (H_(1))_0 = " + std::to_string(k.dim())));
  return out;
}

std::vector<Check> verify_dcp(LinkContext& ctx, const Decomposition& dec) {
  require_dcp(ctx, "component structure check");
  const FinHopf& h = *ctx.hopf;
  const FinCoalgebra& c = *ctx.coalg;
  const std::size_t ns = ctx.simple_count();
  const std::size_t u = unit_component(ctx, dec);
  const Subspace& h1 = dec.components[u].space;
  std::vector<Check> out;

  std::size_t left_bad = 0, right_bad = 0;
  for (std::size_t i = 0; i < ns; ++i) {
    const Subspace& comp = dec.components[*dec.component_of_simple(i)].space;
    if (!(subspace_product(h, ctx.simple(i), h1) == comp)) ++left_bad;
    if (!(subspace_product(h, h1, ctx.simple(i)) == comp)) ++right_bad;
  }
  out.push_back(make_check("dcp-component-left", left_bad == 0,
                           "H_(C) = C H_(1) for " + std::to_string(ns - left_bad) + "/" +
                               std::to_string(ns) + " simples"));
  out.push_back(make_check("dcp-component-right", right_bad == 0,
                           "H_(C) = H_(1) C for " + std::to_string(ns - right_bad) + "/" +
                               std::to_string(ns) + " simples"));

  std::size_t prod_bad = 0;
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < ns; ++j) {
      Subspace cd = subspace_product(h, ctx.simple(i), ctx.simple(j));
      FinCoalgebra sub = sub_coalgebra(c, cd);
      auto parts = simples_with_matrices(sub, Subspace::whole(sub.dim));
      Subspace target(c.dim);
      for (const auto& e : parts) {
        Subspace es = Subspace::span(c.dim, lift_all(cd, e.space.vectors()));
        std::size_t idx = index_of_simple(ctx, es);
        target = sum(target, dec.components[*dec.component_of_simple(idx)].space);
      }
      const Subspace& ci = dec.components[*dec.component_of_simple(i)].space;
      const Subspace& cj = dec.components[*dec.component_of_simple(j)].space;
      if (!target.contains(subspace_product(h, ci, cj))) ++prod_bad;
    }
  out.push_back(make_check("dcp-component-products", prod_bad == 0,
                           std::to_string(ns * ns - prod_bad) + "/" + std::to_string(ns * ns) +
                               " pairs contained in the sum over E in CD"));

  bool closed = h1.contains(subspace_product(h, h1, h1));
  bool unit = h1.contains(h.unit);
  bool stable = h1.contains(antipode_image(h, h1));
  bool coalg = is_subcoalgebra(c, h1);
  out.push_back(make_check("dcp-h1-hopf-subalgebra", closed && unit && stable && coalg,
                           std::string("product ") + (closed ? "closed" : "open") + ", unit " +
                               (unit ? "in" : "missing") + ", antipode " +
                               (stable ? "stable" : "unstable")));

  // representatives of CK = DK classes, K the coradical of H_(1)
  Subspace k = intersect(h1, ctx.data.h0);
  std::vector<Subspace> ck;
  for (std::size_t i = 0; i < ns; ++i) ck.push_back(subspace_product(h, ctx.simple(i), k));
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < ns; ++i) {
    bool seen = false;
    for (std::size_t r : reps) seen = seen || ck[r] == ck[i];
    if (!seen) reps.push_back(i);
  }
  std::size_t total = 0;
  Subspace all(c.dim);
  bool each_component = true;
  for (std::size_t r : reps) {
    Subspace part = subspace_product(h, ctx.simple(r), h1);
    total += part.dim();
    all = sum(all, part);
    bool match = false;
    for (const auto& comp : dec.components) match = match || comp.space == part;
    each_component = each_component && match;
  }
  bool reassembled = total == c.dim && all.dim() == c.dim && each_component &&
                     reps.size() == dec.components.size();
  out.push_back(make_check("dcp-reassembly", reassembled,
                           std::to_string(reps.size()) + " representatives " + join(reps)));
  return out;
}

std::vector<Check> ideal_complement_check(LinkContext& ctx, const Decomposition& dec) {
  require_dcp(ctx, "ideal complement check");
  const FinHopf& h = *ctx.hopf;
  const std::size_t u = unit_component(ctx, dec);
  const Subspace& h1 = dec.components[u].space;
  Subspace m(h.dim());
  for (std::size_t k = 0; k < dec.components.size(); ++k)
    if (k != u) m = sum(m, dec.components[k].space);
  const std::string dims = "dim M = " + std::to_string(m.dim());
  std::vector<Check> out;
  out.push_back(make_check("complement-left-stable", m.contains(subspace_product(h, h1, m)), dims));
  out.push_back(make_check("complement-right-stable", m.contains(subspace_product(h, m, h1)), dims));
  out.push_back(Check{"projective-generator", CheckStatus::not_applicable,
                      "only the complement containments are checked; projectivity is not certified"});
  return out;
}

bool is_normal(LinkContext& ctx, const Decomposition& dec) {
  const FinHopf& h = require_hopf(ctx, "normality check");
  if (!h.antipode) throw NoAntipode("normality check needs an antipode");
  const Subspace& h1 = dec.components[unit_component(ctx, dec)].space;
  const std::size_t n = h.dim();
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& k : h1.vectors()) {
      Vec acc(n);
      for (const auto& t : h.coalg.comul[b]) {
        Vec left = h.multiply(unit_vec(n, t.j), k);
        Vec term = h.multiply(left, h.apply_antipode(unit_vec(n, t.k)));
        axpy(acc, t.c, term);
      }
      if (!h1.contains(acc)) return false;
    }
  return true;
}

std::string to_dot(const LinkContext& ctx, const LinkQuiver& quiver, const Decomposition& dec) {
  std::ostringstream os;
  os << "graph link_quiver {\n";
  for (std::size_t k = 0; k < dec.components.size(); ++k) {
    os << "  subgraph cluster_" << k << " {\n";
    os << "    label=\"component " << k << " (dim " << dec.components[k].space.dim() << ")\";\n";
    for (std::size_t s : dec.components[k].simples)
      os << "    C" << s << " [label=\"C" << s << ":dim" << ctx.simple(s).dim() << "\"];\n";
    os << "  }\n";
  }
  for (const auto& [i, j] : quiver.edges) os << "  C" << i << " -- C" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hopf
