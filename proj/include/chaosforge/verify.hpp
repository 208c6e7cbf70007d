#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaosforge/chaos.hpp"
#include "chaosforge/report.hpp"

namespace chaosforge {

// One member of the random identity-check corpus.
struct CorpusCase {
  int index = 0;
  int m = 0, n = 0, d = 0;
  std::uint64_t seed = 0;
  KernelTensor kernel;
};

// Random symmetrized corpus: the grade cycles through
// {(1,1),(2,0),(0,2),(2,1),(1,2),(2,2)}, the dimension through {1,2,3},
// entries standard complex Gaussian, per-case seeds derived from the
// master seed.
std::vector<CorpusCase> identity_corpus(std::uint64_t master_seed, int count = 200);

const std::vector<std::string>& verify_suites();

// Executes one named suite {hermite, chaos, malliavin, identities, lemma31}
// deterministically; one report per check. Unknown names throw
// std::invalid_argument.
std::vector<VerificationReport> run_verify(const std::string& suite, std::uint64_t seed);

}  // namespace chaosforge
