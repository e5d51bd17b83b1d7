#pragma once

// Link relation between simple subcoalgebras, the link quiver, the
// link-indecomposable components, and checks of their behavior under the
// product and antipode of a Hopf algebra.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflink/coalg.hpp"
#include "hopflink/radical.hpp"
#include "hopflink/report.hpp"

namespace hopf {

/// A coalgebra (optionally with its Hopf structure) together with its
/// coradical data and a wedge cache.
struct LinkContext {
  const FinCoalgebra* coalg;
  const FinHopf* hopf = nullptr;
  CoradicalData data;
  WedgeCache wedges;

  explicit LinkContext(const FinHopf& h);
  LinkContext(const FinCoalgebra& c, CoradicalData d, const FinHopf* h = nullptr);

  const Subspace& simple(std::size_t i) const { return data.simples.at(i).space; }
  std::size_t simple_count() const { return data.simples.size(); }
  /// H_1 = H_0 ^ H_0.
  const Subspace& h1() const;
};

struct LinkTest {
  bool wedge_cd = false;       // C ^ D strictly contains C + D
  bool wedge_dc = false;
  bool primitive_cd = false;   // a nontrivial (C, D)-primitive matrix exists
  bool primitive_dc = false;
  bool linked() const { return wedge_cd || wedge_dc; }
  bool consistent() const { return wedge_cd == primitive_cd && wedge_dc == primitive_dc; }
};

/// Compares C + D with C ^ D + D ^ C and cross-checks with primitive spaces.
LinkTest direct_link_test(LinkContext& ctx, std::size_t i, std::size_t j);
bool directly_linked(LinkContext& ctx, std::size_t i, std::size_t j);

struct LinkQuiver {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i <= j, sorted
  std::vector<std::vector<std::size_t>> classes;           // sorted by smallest member
  std::vector<std::size_t> class_of;
  std::vector<std::vector<LinkTest>> tests;                // all ordered pairs
  std::size_t discrepancies = 0;  // pairs where wedge growth and primitives disagree
};

LinkQuiver link_quiver(LinkContext& ctx);

struct Component {
  std::vector<std::size_t> simples;
  Subspace space;
  std::size_t saturation_steps = 0;
};

struct Decomposition {
  std::vector<Component> components;
  bool is_direct_sum = false;

  std::optional<std::size_t> component_of_simple(std::size_t simple) const;
  std::vector<std::size_t> dims() const;
};

/// Wedge-saturation of each link class. Throws SaturationOverlap when two
/// saturations meet.
Decomposition components(LinkContext& ctx, const LinkQuiver& quiver);

/// Checks that hit projections ^C H ^D outside H_0 only occur for linked C, D
/// and that simples in different components are never directly linked.
std::vector<Check> link_theorem_checks(LinkContext& ctx, const LinkQuiver& quiver,
                                       const Decomposition& dec);

/// S(H_(C)) = H_(S(C)) for every component. Throws NotApplicable for a bare
/// coalgebra and NoAntipode without an antipode.
std::vector<Check> antipode_on_components(LinkContext& ctx, const Decomposition& dec);

/// Coradical of a subcoalgebra X of H, as a subspace of H.
Subspace coradical_of(const FinCoalgebra& c, const Subspace& x);

struct ProductConditions {
  bool left = false;    // ((C1 D)_0 + (C2 D)_0)(S(D) + S^-1(D)) in H_0
  bool right = false;   // (S(D) + S^-1(D))((D C1)_0 + (D C2)_0) in H_0
};
/// The two containments for the triple (C1, C2, D). Throws NoAntipode.
ProductConditions product_conditions(LinkContext& ctx, std::size_t c1, std::size_t c2,
                                     std::size_t d);
/// All triples plus the cube condition ((H_(1))_0)^3 in H_0.
std::vector<Check> product_condition_checks(LinkContext& ctx, const Decomposition& dec);

/// Component structure of a Hopf algebra with the dual Chevalley property:
/// H_(C) = C H_(1) = H_(1) C, products of components, H_(1) a Hopf
/// subalgebra, and the reassembly over CK-classes. Throws NotApplicable.
std::vector<Check> verify_dcp(LinkContext& ctx, const Decomposition& dec);

/// The sum M of the other components is stable under multiplication by
/// H_(1) on both sides. Throws NotApplicable.
std::vector<Check> ideal_complement_check(LinkContext& ctx, const Decomposition& dec);

/// Adjoint stability sum h_1 k S(h_2) in H_(1) for basis pairs. Exploration
/// only; nothing is asserted either way.
bool is_normal(LinkContext& ctx, const Decomposition& dec);

/// Vertices C{i}:dim{d}, one cluster per component, undirected edges.
std::string to_dot(const LinkContext& ctx, const LinkQuiver& quiver, const Decomposition& dec);

}  // namespace hopf
