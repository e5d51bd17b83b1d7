#pragma once

// Multiplicative matrices used by the matcalc tests and the acceptance run.

#include <random>
#include <vector>

#include "hopflink/matcalc.hpp"
#include "hopflink/radical.hpp"

namespace fixtures {

using namespace hopf;

/// A multiplicative matrix with its diagonal simples (indices into data).
struct Known {
  MultMatrix g;
  std::vector<std::size_t> diagonal_simples;
};

/// [[C, X], [0, D]] for every pair of group-like simples with a nontrivial
/// (C, D)-primitive X, plus the simples themselves.
inline std::vector<Known> triangular_pool(const FinHopf& h, const CoradicalData& d) {
  std::vector<Known> out;
  for (std::size_t c = 0; c < d.simples.size(); ++c) {
    out.push_back({d.simples[c].matrix, {c}});
    if (d.simples[c].size() != 1) continue;
    for (std::size_t e = 0; e < d.simples.size(); ++e) {
      if (d.simples[e].size() != 1) continue;
      auto ps = primitive_space(h.coalg, d.h0, d.simples[c].matrix, d.simples[e].matrix);
      if (ps.nontrivial_dim == 0) continue;
      for (const auto& x : ps.basis()) {
        if (entry_span(x).dim() == 0 || d.h0.contains(x.at(0, 0))) continue;
        HMatrix m = HMatrix::zero(2, 2, h.dim());
        m.at(0, 0) = d.simples[c].matrix.mat.at(0, 0);
        m.at(0, 1) = x.at(0, 0);
        m.at(1, 1) = d.simples[e].matrix.mat.at(0, 0);
        out.push_back({MultMatrix{m, false}, {c, e}});
      }
    }
  }
  return out;
}

inline std::size_t simple_of(const CoradicalData& d, const Vec& v) {
  auto s = d.simple_containing(v);
  return s ? *s : d.simples.size();
}

/// Kronecker products of pool members; diagonal entries are products of group-likes.
inline Known kron_known(const FinHopf& h, const CoradicalData& d, const Known& a, const Known& b,
                        KronSide side) {
  MultMatrix k = kron(h, a.g, b.g, side);
  std::vector<std::size_t> diag;
  for (std::size_t i = 0; i < k.size(); ++i) diag.push_back(simple_of(d, k.mat.at(i, i)));
  return {k, diag};
}

inline HMatrix conjugate(const HMatrix& g, const Matrix& p, const Matrix& p_inv) {
  return multiply(multiply(p, g), p_inv);
}

}  // namespace fixtures
