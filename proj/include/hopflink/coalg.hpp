#pragma once

// Finite-dimensional coalgebras and Hopf algebras given by structure
// constants on a fixed basis b_0, ..., b_{n-1}.
//
// Conventions used throughout the library:
//   * an element of H is a Vec of length dim;
//   * an element of H (x) H is a Vec of length dim^2, index j * dim + k for
//     b_j (x) b_k;
//   * a functional f in H* is a Vec of length dim with f_i = f(b_i);
//   * a linear map is a Matrix M with M(k, i) = coefficient of b_k in M(b_i).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopflink/linalg.hpp"

namespace hopf {

struct ComulTerm {
  std::size_t j, k;
  Scalar c;
};

struct MulTerm {
  std::size_t k;
  Scalar c;
};

struct FinCoalgebra {
  int field_order = 1;
  std::size_t dim = 0;
  std::vector<std::string> names;
  /// comul[i] lists the nonzero terms of Delta(b_i), sorted by (j, k).
  std::vector<std::vector<ComulTerm>> comul;
  Vec counit;

  Vec comultiply(const Vec& v) const;
  Vec comultiply_basis(std::size_t i) const;
  Scalar counit_of(const Vec& v) const;
  /// Rebuilds comul from a dense tensor; zero entries are dropped.
  void set_comul_dense(std::size_t i, const Vec& tensor);
};

struct FinHopf {
  FinCoalgebra coalg;
  /// mul[i * dim + j] lists the nonzero terms of b_i b_j, sorted by k.
  std::vector<std::vector<MulTerm>> mul;
  Vec unit;
  std::optional<Matrix> antipode;

  std::size_t dim() const { return coalg.dim; }
  /// False for a bare coalgebra (no product, unit or antipode).
  bool has_algebra() const { return !mul.empty(); }
  int field_order() const { return coalg.field_order; }
  const std::vector<std::string>& names() const { return coalg.names; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec multiply_basis(std::size_t i, std::size_t j) const;
  Vec one() const { return unit; }
  /// S(v); throws NoAntipode when the antipode is absent.
  Vec apply_antipode(const Vec& v) const;
  /// Product in the algebra H (x) H.
  Vec tensor_multiply(const Vec& a, const Vec& b) const;
  void set_mul_dense(std::size_t i, std::size_t j, const Vec& v);
  /// Index of a basis name, or throws std::out_of_range.
  std::size_t index_of(const std::string& name) const;
  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
  Vec basis(const std::string& name) const { return basis(index_of(name)); }
};

bool operator==(const FinCoalgebra& a, const FinCoalgebra& b);
bool operator==(const FinHopf& a, const FinHopf& b);

/// An element of H together with its parent algebra.
class HElement {
 public:
  HElement(const FinHopf& parent, Vec coords);
  static HElement basis(const FinHopf& parent, std::size_t i);
  static HElement scalar(const FinHopf& parent, const Scalar& s);

  const FinHopf& parent() const { return *parent_; }
  const Vec& coords() const { return coords_; }
  bool is_zero() const { return hopf::is_zero(coords_); }

  HElement operator+(const HElement& o) const;
  HElement operator-(const HElement& o) const;
  HElement operator*(const HElement& o) const;
  HElement operator*(const Scalar& s) const;
  Vec comultiply() const { return parent_->coalg.comultiply(coords_); }
  Scalar counit() const { return parent_->coalg.counit_of(coords_); }
  HElement antipode() const;
  bool operator==(const HElement& o) const { return coords_ == o.coords_; }
  std::string to_string() const;

 private:
  const FinHopf* parent_;
  Vec coords_;
};

Vec tensor_vec(const Vec& a, const Vec& b);
/// Human readable form of an element using the basis names.
std::string element_string(const std::vector<std::string>& names, const Vec& v);

// Dual algebra H*. Product (fg)(h) = sum f(h_1) g(h_2), unit = counit.
Vec dual_product(const FinCoalgebra& c, const Vec& f, const Vec& g);
/// f -> h = sum h_1 f(h_2)
Vec hit_left(const FinCoalgebra& c, const Vec& f, const Vec& h);
/// h <- f = sum f(h_1) h_2
Vec hit_right(const FinCoalgebra& c, const Vec& h, const Vec& f);
Scalar pair(const Vec& f, const Vec& h);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // empty when passed
};

std::vector<AxiomCheck> check_coalgebra_axioms(const FinCoalgebra& c);
std::vector<AxiomCheck> check_axioms(const FinHopf& h);
bool all_passed(const std::vector<AxiomCheck>& checks);

/// Smallest subcoalgebra containing seed.
Subspace subcoalgebra_closure(const FinCoalgebra& c, const Subspace& seed);
bool is_subcoalgebra(const FinCoalgebra& c, const Subspace& w);
Subspace subspace_product(const FinHopf& h, const Subspace& a, const Subspace& b);
Subspace antipode_image(const FinHopf& h, const Subspace& a);

/// Restriction of the coalgebra structure to a subcoalgebra W; the basis is
/// W's canonical basis. Throws NotSubcoalgebra.
FinCoalgebra sub_coalgebra(const FinCoalgebra& c, const Subspace& w);
/// Restriction to a Hopf subalgebra (closed under Delta, product, S, with 1).
FinHopf sub_hopf(const FinHopf& h, const Subspace& w);

// Constructors.
using GroupTable = std::vector<std::vector<int>>;

/// Validates a group table (closure, associativity, identity, inverses);
/// returns the identity index. Throws InvalidGroupTable.
int validate_group_table(const GroupTable& t);
GroupTable cyclic_table(int n);
GroupTable s3_table();
GroupTable direct_product_table(const GroupTable& a, const GroupTable& b);
std::vector<std::string> cyclic_names(int n, const std::string& gen = "g");
std::vector<std::string> s3_names();

FinHopf group_algebra(const GroupTable& t, std::vector<std::string> names = {},
                      int field_order = 1);
FinHopf dual_group_algebra(const GroupTable& t, std::vector<std::string> names = {},
                           int field_order = 1);
/// Basis g^i x^j at index i * n + j; xg = q gx, Delta(x) = 1 (x) x + x (x) g.
/// Throws NotPrimitiveRoot.
FinHopf taft(int n, const Scalar& q);
FinHopf sweedler();
FinHopf tensor(const FinHopf& a, const FinHopf& b);
FinHopf opposite(const FinHopf& a);
FinHopf coopposite(const FinHopf& a);
FinHopf dual(const FinHopf& a);
/// The same structure viewed over Q(zeta_n) for a multiple n of the order.
FinHopf with_field_order(const FinHopf& a, int n);

}  // namespace hopf
