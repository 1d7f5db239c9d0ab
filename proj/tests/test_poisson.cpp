#include "helpers.hpp"
#include "oracles.hpp"

#include "ncjet/error.hpp"
#include "ncjet/poisson.hpp"
#include "ncjet/variational.hpp"

#include "doctest.h"

using namespace ncjet;
using testing::cyc;
using testing::op;

TEST_SUITE("poisson")
{
	TEST_CASE("bracket of functionals")
	{
		const JetContext ctx;
		const DifferentialOperator d = op("op(D)");
		// {a^2, a^3}_D = <2a, 3 D(a^2)>
		const CyclicSum h1 = cyc("cyc(a*a)"), h2 = cyc("cyc(a*a*a)");
		CHECK(poisson_bracket(h1, h2, d, ctx).is_zero());
		const CyclicSum h3 = cyc("cyc(a*a_x*a_x)");
		CHECK_FALSE(poisson_bracket(h2, h3, d, ctx).is_zero());
		CHECK_THROWS_AS(poisson_bracket(h1, h2, op("op(D^2)"), ctx), PreconditionError);
	}

	TEST_CASE("bracket is bilinear and skew")
	{
		Random rng(61);
		const JetContext ctx;
		const DifferentialOperator a = op("op(D^3 + a*D*1 + 1*D*a)");
		WordShape shape;
		shape.min_length = 2;
		shape.max_length = 3;
		shape.max_order = 1;
		for (int i = 0; i < 20; ++i)
		{
			const CyclicSum f = random_density(rng, ctx, shape);
			const CyclicSum g = random_density(rng, ctx, shape);
			const CyclicSum h = random_density(rng, ctx, shape);
			const CyclicSum fg = poisson_bracket(f, g, a, ctx);
			CHECK(fg == -poisson_bracket(g, f, a, ctx));
			CHECK(poisson_bracket(f + h * Rational(2), g, a, ctx) ==
			      reduce(fg + poisson_bracket(h, g, a, ctx) * Rational(2), ctx));
			CHECK(poisson_bracket(f + total_derivative(h, 1, ctx), g, a, ctx) == fg);
		}
	}

	TEST_CASE("Hamiltonian operators")
	{
		const JetContext ctx;
		for (const char *text : {"op(D)", "op(D^3)", "op(D^3 + x*D*1 + 1*D*x)", "op(D + D^3)",
		                         "op(x*D*1 + 1*D*x)", "op(x^2*D*1 + 1*D*x^2)"})
		{
			CAPTURE(text);
			const HamiltonianReport r = is_hamiltonian(op(text), ctx);
			CHECK(r.hamiltonian);
			CHECK(r.defect.is_zero());
			CHECK_FALSE(r.witness.has_value());
		}
		CHECK_THROWS_AS(is_hamiltonian(op("op(D^2)"), ctx), PreconditionError);
	}

	TEST_CASE("a-dependent candidates fail with a witness")
	{
		const JetContext ctx;
		const DifferentialOperator a = op("op(a*D*1 + 1*D*a)");
		const HamiltonianReport r = is_hamiltonian(a, ctx);
		CHECK_FALSE(r.hamiltonian);
		CHECK(r.defect.degree == 3);
		REQUIRE(r.witness.has_value());
		const auto &[h1, h2, h3] = *r.witness;
		CHECK_FALSE(jacobi_defect(a, h1, h2, h3, ctx).is_zero());
		CHECK_FALSE(oracle::trivial(oracle::jacobi(a, oracle::from(h1), oracle::from(h2), oracle::from(h3)), 1));
	}

	TEST_CASE("two expansions of the Jacobi defect agree")
	{
		Random rng(62);
		const JetContext ctx;
		const std::vector<CyclicSum> corpus = functional_corpus(ctx, 3, 1);
		for (const char *text : {"op(D)", "op(a*D*1 + 1*D*a)", "op(a*D*a + a*D*a)"})
		{
			const DifferentialOperator a = op(text);
			for (int i = 0; i < 6; ++i)
			{
				const auto &h1 = corpus[rng.uniform(0, static_cast<int>(corpus.size()) - 1)];
				const auto &h2 = corpus[rng.uniform(0, static_cast<int>(corpus.size()) - 1)];
				const auto &h3 = corpus[rng.uniform(0, static_cast<int>(corpus.size()) - 1)];
				const CyclicSum j = jacobi_defect(a, h1, h2, h3, ctx);
				CHECK(j == jacobi_defect_expanded(a, h1, h2, h3, ctx));
				CHECK(j.is_zero() ==
				      oracle::trivial(oracle::jacobi(a, oracle::from(h1), oracle::from(h2), oracle::from(h3)), 1));
			}
		}
	}

	TEST_CASE("functional corpus")
	{
		const JetContext ctx;
		const auto corpus = functional_corpus(ctx, 3, 1);
		CHECK(corpus.size() >= 5);
		for (std::size_t i = 0; i < corpus.size(); ++i)
		{
			CHECK_FALSE(is_trivial(corpus[i], ctx));
			for (std::size_t j = 0; j < i; ++j)
				CHECK(corpus[i] != corpus[j]);
		}
	}

	TEST_CASE("involutivity witness")
	{
		Random rng(63);
		const JetContext ctx;
		for (const char *text : {"op(D)", "op(D^3)", "op(D + D^3)"})
			for (int i = 0; i < 5; ++i)
			{
				const auto w = involutivity_witness(op(text), random_jet_covector(rng, ctx),
				                                    random_jet_covector(rng, ctx), ctx);
				for (const auto &c : w)
					CHECK(c.is_zero());
			}
		// the a-dependent operator does not have an involutive image for free
		bool nonzero = false;
		for (int i = 0; i < 5 && !nonzero; ++i)
			for (const auto &c : involutivity_witness(op("op(a*D*1 + 1*D*a)"), random_jet_covector(rng, ctx),
			                                          random_jet_covector(rng, ctx), ctx))
				nonzero |= !c.is_zero();
		CHECK(nonzero);
	}

	TEST_CASE("substitution harness")
	{
		const JetContext ctx;
		CHECK_THROWS_AS(find_identity("no-such-identity"), PreconditionError);
		const auto zero = substitution_harness(find_identity("zero"), CovectorClass::JetDependent, 10, 1, ctx);
		CHECK(zero.ok());
		CHECK(zero.trials == 10);
		for (const auto &id : substitution_identities())
		{
			CAPTURE(id.name);
			const auto x = substitution_harness(id, CovectorClass::XOnly, 8, 5, ctx);
			const auto j = substitution_harness(id, CovectorClass::JetDependent, 8, 5, ctx);
			CHECK(x.ok());
			CHECK(j.ok());
			const auto again = substitution_harness(id, CovectorClass::JetDependent, 8, 5, ctx);
			CHECK(again.passed == j.passed);
		}
		CHECK(substitution_harness(find_identity("jacobi-dx"), CovectorClass::Exact, 8, 2, ctx).ok());
	}

	TEST_CASE("a false identity is caught by the harness")
	{
		const JetContext ctx;
		SubstitutionIdentity bad;
		bad.name = "not-skew";
		bad.arity = 2;
		bad.residual = [](const std::vector<Covector> &p, const JetContext &c) {
			const DifferentialOperator d2 = DifferentialOperator::derivative(MultiIndex{2});
			return coupling(p[0], op_apply(d2, p[1], c)) + coupling(p[1], op_apply(d2, p[0], c));
		};
		const auto r = substitution_harness(bad, CovectorClass::JetDependent, 10, 3, ctx);
		CHECK_FALSE(r.ok());
		CHECK(r.first_failure.has_value());
	}
}
