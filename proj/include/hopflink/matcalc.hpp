#pragma once

// Matrices over a coalgebra: the tilde tensor product, multiplicative and
// primitive matrices, Kronecker products over a bialgebra, and block
// decomposition of multiplicative matrices.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopflink/coalg.hpp"
#include "hopflink/hmatrix.hpp"
#include "hopflink/radical.hpp"

namespace hopf {

HMatrix make_hmatrix(std::size_t rows, std::size_t cols, std::vector<Vec> entries);
/// k * 1 for a scalar matrix k, where `one` is the unit of H.
HMatrix scalar_hmatrix(const Matrix& k, const Vec& one);
HMatrix transpose(const HMatrix& a);
HMatrix block(const HMatrix& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1);
/// Entrywise application of a linear map of H.
HMatrix apply_entrywise(const Matrix& map, const HMatrix& a);
/// Entries as vectors; rank of the entry span.
std::size_t entry_rank(const HMatrix& a);
Subspace entry_span(const HMatrix& a);
std::string to_string(const HMatrix& a, const std::vector<std::string>& names);

/// (a ~(x) b)_{il} = sum_k a_ik (x) b_kl, a matrix over H (x) H. Throws ShapeMismatch.
HMatrix tilde_tensor(const HMatrix& a, const HMatrix& b);
/// Entrywise Delta, a matrix over H (x) H.
HMatrix comultiply(const FinCoalgebra& c, const HMatrix& a);
Matrix counit(const FinCoalgebra& c, const HMatrix& a);
bool check_multiplicative(const FinCoalgebra& c, const HMatrix& g);
/// Multiplicative and with linearly independent entries.
bool is_basic(const FinCoalgebra& c, const HMatrix& g);

/// Matrix product over the algebra H. Throws ShapeMismatch, NotBialgebra.
HMatrix multiply(const FinHopf& h, const HMatrix& a, const HMatrix& b);
HMatrix multiply(const Matrix& k, const HMatrix& a);
HMatrix multiply(const HMatrix& a, const Matrix& k);

enum class KronSide { left, right };
/// left:  (a . b)  block (i, j) = a_ij b,  entry (i*s + k, j*s' + l) = a_ij b_kl;
/// right: (a .' b) block (k, l) = a b_kl,  entry (k*r + i, l*r' + j) = a_ij b_kl.
/// Defined for arbitrary shapes. Throws NotBialgebra when H has no product.
HMatrix kron(const FinHopf& h, const HMatrix& a, const HMatrix& b, KronSide side);
/// Kronecker product of multiplicative matrices; the result is checked.
MultMatrix kron(const FinHopf& h, const MultMatrix& a, const MultMatrix& b, KronSide side);

struct AntipodeIdentityReport {
  bool s_left = false;       // S(G) G = I
  bool s_right = false;      // G S(G) = I
  bool sinv_left = false;    // S^-1(G)^T G^T = I
  bool sinv_right = false;   // G^T S^-1(G)^T = I
  std::string witness;
  bool ok() const { return s_left && s_right && sinv_left && sinv_right; }
};
/// Throws NoAntipode when S is absent or not bijective.
AntipodeIdentityReport antipode_identities(const FinHopf& h, const HMatrix& g);

struct MultDecomposition {
  Matrix L;                            // L G L^-1 is block upper triangular
  Matrix L_inv;
  HMatrix conjugated;                  // L G L^-1
  std::vector<std::size_t> offsets;    // start of each diagonal block, plus the end
  std::vector<MultMatrix> diagonal;    // basic blocks C_1, ..., C_t
  std::vector<std::size_t> simple_index;  // simple of each block in the coradical data
  std::map<std::pair<std::size_t, std::size_t>, HMatrix> offdiag;  // (a, b), a < b

  std::size_t blocks() const { return diagonal.size(); }
  /// Contiguous principal block matrix covering diagonal blocks a..b.
  HMatrix segment(std::size_t a, std::size_t b) const;
};

/// Views K^n as a right comodule with rho(v_j) = sum_i v_i (x) g_ij and builds
/// a flag of subcomodules from socle layers. When every entry of g lies in
/// H_0 the comodule is semisimple and all off-diagonal blocks vanish.
/// The basis is adapted to the orthonormal idempotents: every e_C pairs to
/// zero with each off-diagonal block, so X_ab equals its hit projection
/// ^{C_a} X_ab ^{C_b}.
MultDecomposition decompose_multiplicative(const FinCoalgebra& c, const CoradicalData& data,
                                           const HMatrix& g);

struct PrimitiveSpace {
  MultMatrix c_matrix, d_matrix;
  std::size_t dim = 0;                  // dimension of H
  /// Solutions X, as vectors of length r*s*dim with entry (a, b) at block a*s + b.
  Subspace space;
  std::size_t nontrivial_dim = 0;       // dim of space modulo matrices over H_0

  std::size_t rows() const { return c_matrix.size(); }
  std::size_t cols() const { return d_matrix.size(); }
  /// The matrix stored in a vector of `space`.
  HMatrix point(const Vec& v) const;
  std::vector<HMatrix> basis() const;
};

/// All (C, D)-primitive matrices: Delta(X) = C ~(x) X + X ~(x) D. Entries are
/// searched inside `support` (default: all of H); H_1 always suffices.
PrimitiveSpace primitive_space(const FinCoalgebra& c, const Subspace& h0, const MultMatrix& cm,
                               const MultMatrix& dm, const Subspace* support = nullptr);
bool is_primitive(const FinCoalgebra& c, const HMatrix& x, const HMatrix& cm, const HMatrix& dm);

struct NontrivialityReport {
  bool some_entry_outside = false;   // X nontrivial
  bool all_entries_outside = false;
  bool independent = false;          // rows and columns independent modulo H_0
  bool equivalent() const {
    return some_entry_outside == all_entries_outside && all_entries_outside == independent;
  }
};
/// Throws NotPrimitive when x is not (C, D)-primitive.
NontrivialityReport nontriviality_equivalences(const FinCoalgebra& c, const Subspace& h0,
                                               const HMatrix& x, const MultMatrix& cm,
                                               const MultMatrix& dm);

}  // namespace hopf
