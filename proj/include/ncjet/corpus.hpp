#pragma once

#include "ncjet/differential_operator.hpp"
#include "ncjet/jet.hpp"
#include "ncjet/schouten.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ncjet {

/// Seeded generator with platform-independent bounded draws.
class Random
{
  public:
	explicit Random(std::uint64_t seed) : engine_(seed) {}

	/// Uniform in [lo, hi].
	int uniform(int lo, int hi);
	bool chance(int numerator, int denominator);
	/// A nonzero integer in [-bound, bound].
	Rational nonzero(int bound = 3);

  private:
	std::mt19937_64 engine_;
};

struct WordShape
{
	int min_length = 1;
	int max_length = 4;
	int max_order = 3;
	/// Exact number of odd letters per word; -1 for none required.
	int odd_letters = 0;
	/// Maximal degree of the x-monomial attached to a term.
	int x_degree = 0;
	int terms = 2;
};

Letters random_letters(Random &rng, const JetContext &ctx, const WordShape &shape);
Poly random_coefficient(Random &rng, const JetContext &ctx, int x_degree);
CyclicSum random_density(Random &rng, const JetContext &ctx, const WordShape &shape);
OpenSum random_open_sum(Random &rng, const JetContext &ctx, const WordShape &shape);

/// A k-vector with a nonzero class whenever one is found within a few draws.
Multivector random_multivector(Random &rng, const JetContext &ctx, int degree, int max_length = 4,
                               int max_order = 3);

/// Covector with polynomial components in x only.
Covector random_x_covector(Random &rng, const JetContext &ctx);
/// Covector whose components are words in the even letters.
Covector random_jet_covector(Random &rng, const JetContext &ctx);
/// delta H / delta a for a random functional H.
Covector random_exact_covector(Random &rng, const JetContext &ctx);

DifferentialOperator random_operator(Random &rng, const JetContext &ctx, int terms = 3);

struct OperatorCase
{
	std::string name;
	DifferentialOperator op;
};

/// Skew-adjoint operators for m = 1, n = 1: constant and x-dependent
/// coefficients together with a-dependent candidates.
std::vector<OperatorCase> operator_corpus(const JetContext &ctx);

} // namespace ncjet
