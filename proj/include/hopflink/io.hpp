#pragma once

// Structure-constant JSON files.
//
//   {"field": {"cyclotomic_order": n}, "dim": d, "basis": [names],
//    "comul": [[i, j, k, s], ...], "counit": [s, ...],
//    "mul": [[i, j, k, s], ...], "unit": [s, ...], "antipode": [[s, ...], ...] | null}
//
// Scalars are "p/q" strings (plain JSON integers are accepted on input) or
// arrays of power-basis coordinates in Q(zeta_n). Omitted triples are zero.
// A file without "mul" describes a bare coalgebra. The antipode matrix is
// row-major with entry [k][i] the coefficient of b_k in S(b_i).

#include <string>

#include "hopflink/coalg.hpp"

namespace hopf {

std::string scalar_to_text(const Scalar& s);

/// Deterministic serialization; load_string(save_string(h)) == h.
std::string save_string(const FinHopf& h);
/// Throws ParseError carrying line, column and byte offset.
FinHopf load_string(const std::string& text);

void save_file(const FinHopf& h, const std::string& path);
FinHopf load_file(const std::string& path);

}  // namespace hopf
