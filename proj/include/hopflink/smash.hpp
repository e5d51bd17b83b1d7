#pragma once

// Quotient coalgebra Q = H / H_0^+ H, coefficient spaces of comodules,
// smallest Hopf subalgebras, smash coproducts J >< Q, and their
// decomposition into K_i >< Q.

#include <optional>
#include <string>
#include <vector>

#include "hopflink/coalg.hpp"
#include "hopflink/link.hpp"
#include "hopflink/radical.hpp"
#include "hopflink/report.hpp"

namespace hopf {

struct QuotientCoalgebra {
  FinCoalgebra q;
  Subspace ideal;      // H_0^+ H
  Matrix projection;   // dim Q x dim H
  Vec one;             // image of 1, spans the coradical of Q
};

/// Throws NotCoideal if H_0^+ H is not a coideal, Error if Q is not
/// irreducible with coradical spanned by the image of 1.
QuotientCoalgebra quotient_Q(const FinHopf& h, const CoradicalData& data);

/// A right coaction rho: V -> V (x) Z stored as a (dim V * dim Z) x dim V matrix;
/// row i * dim Z + a is the coefficient of v_i (x) z_a.
bool is_coaction(const FinCoalgebra& z, const Matrix& rho, std::size_t dim_v);

/// Smallest subcoalgebra Z' with rho(V) in V (x) Z'. Throws InvalidCoaction.
Subspace coefficient_space(const FinCoalgebra& z, const Matrix& rho, std::size_t dim_v);

/// Closes seed under Delta, products, the antipode and the unit.
Subspace smallest_hopf_subalgebra(const FinHopf& j, const Subspace& seed);

struct ComoduleCoalgebra {
  FinCoalgebra q;
  Matrix rho;                 // right J-coaction on Q
  std::size_t group_like = 0; // index of the group-like g of Q
  /// Optional data for a Hopf structure on J >< Q: an algebra structure on
  /// Q (mul and unit of q_algebra, sharing q's basis) and a right action
  /// of J on Q, action[a] = matrix of q -> q . b_a.
  std::optional<FinHopf> q_algebra;
  std::vector<Matrix> action;
};

struct SmashCoproduct {
  FinHopf h;                  // basis b_a >< q_k at index a * dim Q + k
  FinHopf j;
  ComoduleCoalgebra q;
  bool has_hopf_structure() const { return h.has_algebra(); }
  /// Image of a subspace W of J as W >< Q.
  Subspace tensor_q(const Subspace& w) const;
  /// W >< g.
  Subspace tensor_g(const Subspace& w) const;
};

/// Builds Delta(a >< q) = sum (a_1 >< q_1(0)) (x) (a_2 q_1(1) >< q_2). With
/// algebra data, also builds (a >< q)(b >< p) = sum a b_1 >< (q . b_2) p and
/// the antipode. Throws InvalidCoaction, CoactionNotAlgebraMap.
SmashCoproduct smash_coproduct(const FinHopf& j, const ComoduleCoalgebra& q);

/// Parts C K of a cosemisimple J, deduplicated. Throws NotCosemisimple.
std::vector<Subspace> module_subcoalgebra_decomposition(const FinHopf& j, const Subspace& k);

/// The Hopf subalgebra generated by the simples D admitting a nontrivial
/// (k1, D)-primitive matrix.
Subspace primitive_coefficient_hopf(LinkContext& ctx);

/// Lemma-level checks of a smash coproduct: coalgebra axioms, coradical
/// J (x) g, the K_i >< Q decomposition, and agreement with the link
/// components computed by wedge saturation.
std::vector<Check> verify_smash_decomposition(const SmashCoproduct& s);

}  // namespace hopf
