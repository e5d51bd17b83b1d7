#pragma once

// Small dense rational solver shared by the scalar and root code. The
// general-purpose matrix type lives in linalg, which sits above scalar.

#include <optional>
#include <vector>

#include "hopflink/scalar.hpp"

namespace hopf::detail {

using QMatrix = std::vector<std::vector<Rational>>;

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_rational(QMatrix a,
                                                    std::vector<Rational> b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<QMatrix> invert_rational(const QMatrix& a);

int mobius(int n);

}  // namespace hopf::detail
