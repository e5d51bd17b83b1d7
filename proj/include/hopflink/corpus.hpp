#pragma once

// Built-in algebras addressed by short generator specs, and the fixture
// corpus written from them.
//
//   sweedler | group:Z4 | group:S3 | dual-group:S3 | taft:3:zeta3
//   tensor(a,b) | dual(a) | op(a) | cop(a) | smash:H12 | smash:H4 | smash:H24
//
// Anything else is read as a path to a structure-constant JSON file.

#include <string>
#include <vector>

#include "hopflink/coalg.hpp"
#include "hopflink/smash.hpp"

namespace hopf {

/// Throws ParseError for an unknown generator or malformed parameters.
FinHopf build_algebra(const std::string& spec);

/// True when spec names a smash fixture (smash:NAME).
bool is_smash_spec(const std::string& spec);

/// The smash coproducts H12, H4 and H24. Throws ParseError.
SmashCoproduct smash_fixture(const std::string& name);

/// J = k^{S3}, Q = k[v]/(v^2) as a coalgebra, rho(v) = v (x) sgn. Without
/// algebra data the result is a 12-dimensional coalgebra.
ComoduleCoalgebra h12_comodule();

/// H12 with Q = k[v]/(v^2) as an algebra and J acting through the counit,
/// the only diagonal action available since S3 has no odd central element.
/// check_axioms rejects the result; see the README.
SmashCoproduct h12_hopf_candidate();

struct CorpusEntry {
  std::string spec;
  std::string file;  // fixture file name
};

const std::vector<CorpusEntry>& corpus_entries();

/// Writes every corpus fixture into dir; returns the paths written.
std::vector<std::string> regen_corpus(const std::string& dir);

}  // namespace hopf
