#pragma once

// Coradical machinery: the Jacobson radical of H*, the coradical H_0, wedge
// products and the coradical filtration, simple subcoalgebras with basic
// multiplicative matrices, and coradical orthonormal idempotents.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopflink/coalg.hpp"
#include "hopflink/hmatrix.hpp"

namespace hopf {

struct SimpleCoalgebra {
  Subspace space;       // C inside H
  MultMatrix matrix;    // basic multiplicative matrix with entries spanning C
  /// Functional on H whose restriction to H_0 is a rank-one element of C*
  /// and vanishes on the other simples.
  Vec rank_one;
  /// Functional on H restricting to counit on C and to zero on the other
  /// simples (a preimage of the central idempotent of H_0*).
  Vec central;
  std::size_t size() const { return matrix.size(); }
};

struct CoradicalData {
  Subspace radical;                    // Jacobson radical of H*, in H* coordinates
  Subspace h0;
  std::vector<Subspace> filtration;    // H_0, H_1, ..., ending at H
  std::vector<SimpleCoalgebra> simples;
  std::vector<Vec> idempotents;        // e_C, parallel to simples
  bool is_cosemisimple = false;
  bool is_pointed = false;
  bool has_dual_chevalley = false;     // only meaningful for Hopf algebras

  /// Index of the simple containing v (v must lie in one simple), or nullopt.
  std::optional<std::size_t> simple_containing(const Vec& v) const;
};

/// Radical of H* as the kernel of the trace form of the regular representation.
Subspace dual_radical(const FinCoalgebra& c);
/// H_0 = annihilator of the dual radical.
Subspace coradical(const FinCoalgebra& c);

/// A ^ B = ker((pi_A (x) pi_B) Delta). Both the kernel and the dual-annihilator
/// formulations are computed and compared. Throws NotSubcoalgebra.
Subspace wedge(const FinCoalgebra& c, const Subspace& a, const Subspace& b);

/// Wedge products memoized by the canonical bases of the arguments.
class WedgeCache {
 public:
  explicit WedgeCache(const FinCoalgebra& c) : c_(&c) {}
  const Subspace& get(const Subspace& a, const Subspace& b);
  std::size_t size() const { return cache_.size(); }

 private:
  const FinCoalgebra* c_;
  std::map<std::string, Subspace> cache_;
};

std::vector<Subspace> coradical_filtration(const FinCoalgebra& c, const Subspace& h0,
                                           WedgeCache* cache = nullptr);

/// Simple subcoalgebras of H_0 with basic multiplicative matrices; the simple
/// containing 1 (if given) comes first, then by dimension and basis.
/// Throws NonSplitField.
std::vector<SimpleCoalgebra> simples_with_matrices(const FinCoalgebra& c, const Subspace& h0,
                                                   const Vec* one = nullptr);

/// Lifts the central idempotents of H_0* through the radical; all defining
/// equations are verified before returning. Throws LiftDivergence.
std::vector<Vec> orthonormal_idempotents(const FinCoalgebra& c, const Subspace& h0,
                                         const std::vector<SimpleCoalgebra>& simples);

struct IdempotentCheck {
  bool restriction = true;   // e_C|_D = delta_{C,D} counit|_D
  bool orthogonal = true;    // e_C e_D = delta_{C,D} e_C
  bool complete = true;      // sum e_C = counit
  bool ok() const { return restriction && orthogonal && complete; }
};
IdempotentCheck check_idempotents(const FinCoalgebra& c,
                                  const std::vector<SimpleCoalgebra>& simples,
                                  const std::vector<Vec>& idempotents);

CoradicalData analyze_coradical(const FinCoalgebra& c, const Vec* one = nullptr);
CoradicalData analyze_coradical(const FinHopf& h);

/// Index of a simple for hit projections; nullopt stands for the counit.
using HitIndex = std::optional<std::size_t>;
/// e_D -> el <- e_C with C = left, D = right.
Vec hit(const FinCoalgebra& c, const CoradicalData& data, const Vec& el, HitIndex left,
        HitIndex right);

/// Restriction of a functional on H to the subspace W, in W's basis.
Vec restrict_functional(const Vec& f, const Subspace& w);
/// A functional on H extending g (given on W's basis) and vanishing on the
/// standard complement of W.
Vec extend_functional(const Vec& g, const Subspace& w);

}  // namespace hopf
