#ifndef LAGCORR_VERIFY_HPP
#define LAGCORR_VERIFY_HPP

#include <random>
#include <string>
#include <vector>

#include "lagcorr/cocycle.hpp"
#include "lagcorr/heisenberg.hpp"

namespace lag {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int samples = 100;
  int shear_bound = 64;
  long brute_bound = 1 << 12;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;

  bool pass() const { return failures == 0 && checks > 0; }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

// The acceptance criteria, with the sample counts and tolerances pinned.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0);

// Seeded generators shared by the suites and the tests.
class RandomAlgebra {
public:
  RandomAlgebra(BaseRing ring, std::uint64_t seed) : ring_(ring), rng_(seed) {}

  long uniform(long lo, long hi);
  Rat small_rational(long num_bound, long den_bound);
  QuadElem small_integral(long bound);
  // Word in the standard generators of U(X, Q), genus 1.
  SymplecticAuto symplectic_word(int length, bool allow_rational = true);
  // Random g x g Hermitian integral matrix, nondegenerate.
  Mat hermitian(int g, long bound);
  // Random invertible g x g matrix over K.
  Mat invertible(int g, long bound);
  // Random positive definite Hermitian reference.
  Mat positive_reference(int g, long bound);

  std::mt19937_64& rng() { return rng_; }
  BaseRing ring() const { return ring_; }

private:
  BaseRing ring_;
  std::mt19937_64 rng_;
};

}  // namespace lag

#endif
