#include "helpers.hpp"
#include "oracles.hpp"

#include "ncjet/syntax.hpp"
#include "ncjet/variational.hpp"

#include "doctest.h"

using namespace ncjet;
using testing::cyc;
using testing::op;
using testing::open;

namespace {

WordShape density_shape(int odd = 0)
{
	WordShape s;
	s.max_length = 4;
	s.max_order = 2;
	s.x_degree = 1;
	s.odd_letters = odd;
	s.terms = 3;
	return s;
}

} // namespace

TEST_SUITE("variational")
{
	TEST_CASE("variational derivatives of small densities")
	{
		const JetContext ctx;
		CHECK(euler_derivative(cyc("cyc(a*a*a)"), LetterKind::Even, 1, ctx) == open("3*a*a"));
		CHECK(euler_derivative(cyc("cyc(a_x*a_x)"), LetterKind::Even, 1, ctx) == open("-2*a_xx"));
		CHECK(euler_derivative(cyc("x*cyc(a)"), LetterKind::Even, 1, ctx) == open("x"));
		CHECK(euler_derivative(cyc("cyc(a*a_x)"), LetterKind::Even, 1, ctx).is_zero());
		CHECK(euler_derivative(cyc("cyc(b*b_x)"), LetterKind::Odd, 1, ctx) == open("2*b_x"));
	}

	TEST_CASE("left variation agrees with the oracle")
	{
		Random rng(41);
		JetContext ctx;
		ctx.m = 2;
		for (int i = 0; i < 100; ++i)
		{
			const CyclicSum f = random_density(rng, ctx, density_shape(i % 3));
			for (int j = 1; j <= 2; ++j)
				for (LetterKind kind : {LetterKind::Even, LetterKind::Odd})
					CHECK(oracle::from(euler_derivative(f, kind, j, ctx)) ==
					      oracle::euler(oracle::from(f), kind, j));
		}
	}

	TEST_CASE("right variation")
	{
		const JetContext ctx;
		const CyclicSum f = cyc("cyc(a*a_x*a)");
		CHECK(euler_derivative(f, LetterKind::Even, 1, ctx, Side::Right) ==
		      euler_derivative(f, LetterKind::Even, 1, ctx, Side::Left));
		// one odd letter: both sides coincide, two odd letters: they differ by a sign
		const CyclicSum g = cyc("cyc(b*a*a_x)");
		CHECK(euler_derivative(g, LetterKind::Odd, 1, ctx, Side::Right) ==
		      euler_derivative(g, LetterKind::Odd, 1, ctx, Side::Left));
		const CyclicSum h = cyc("cyc(b*a*b_x)");
		CHECK(euler_derivative(h, LetterKind::Odd, 1, ctx, Side::Right) ==
		      -euler_derivative(h, LetterKind::Odd, 1, ctx, Side::Left));
	}

	TEST_CASE("total derivatives are trivial")
	{
		Random rng(42);
		JetContext ctx;
		ctx.m = 2;
		CHECK(is_trivial(cyc("cyc(a*a_x)"), ctx));
		CHECK(is_trivial(cyc("x^3*cyc(0) + cyc(a_x)"), ctx));
		CHECK_FALSE(is_trivial(cyc("cyc(a*a)"), ctx));
		CHECK_FALSE(is_trivial(cyc("cyc(a*a_x*a2)", ctx), ctx));
		for (int i = 0; i < 100; ++i)
		{
			const CyclicSum g = random_density(rng, ctx, density_shape(i % 3));
			const CyclicSum dg = total_derivative(g, 1, ctx);
			CHECK(is_trivial(dg, ctx));
			CHECK(oracle::trivial(oracle::from(dg), ctx.m));
		}
	}

	TEST_CASE("triviality agrees with the oracle")
	{
		Random rng(43);
		const JetContext ctx;
		int nontrivial = 0;
		for (int i = 0; i < 100; ++i)
		{
			WordShape shape = density_shape(i % 2);
			shape.terms = 1;
			CyclicSum f = random_density(rng, ctx, shape);
			if (i % 2 == 0)
				f += total_derivative(random_density(rng, ctx, shape), 1, ctx);
			const bool t = is_trivial(f, ctx);
			CHECK(t == oracle::trivial(oracle::from(f), ctx.m));
			nontrivial += !t;
		}
		CHECK(nontrivial > 20);
	}

	TEST_CASE("reduce picks one representative per class")
	{
		Random rng(44);
		const JetContext ctx;
		for (int i = 0; i < 60; ++i)
		{
			const CyclicSum f = random_density(rng, ctx, density_shape(i % 3));
			const CyclicSum g = random_density(rng, ctx, density_shape(i % 3));
			const CyclicSum r = reduce(f, ctx);
			CHECK(reduce(r, ctx) == r);
			CHECK(reduce(f + total_derivative(g, 1, ctx), ctx) == r);
			CHECK(is_trivial(f - r, ctx));
		}
		CHECK(reduce(cyc("cyc(a*a_x)"), ctx).is_zero());
	}

	TEST_CASE("adjoints of basic operators")
	{
		const JetContext ctx;
		CHECK(adjoint(op("op(D)"), ctx) == op("op(-p_x)"));
		CHECK(adjoint(op("op(D^2)"), ctx) == op("op(D^2)"));
		CHECK(adjoint(op("op(a*D*1)"), ctx) == op("op(-p_x*a - p*a_x)"));
		CHECK(adjoint(op("op(x*p)"), ctx) == op("op(x*p)"));
		CHECK(is_skew_adjoint(op("op(D)"), ctx));
		CHECK(is_skew_adjoint(op("op(D^3 + x*D*1 + 1*D*x)"), ctx));
		CHECK(is_skew_adjoint(op("op(a*D*1 + 1*D*a)"), ctx));
		CHECK_FALSE(is_skew_adjoint(op("op(D^2)"), ctx));
		CHECK_FALSE(is_skew_adjoint(op("op(a*D*1)"), ctx));
	}

	TEST_CASE("adjoint is an involution and satisfies the coupling identity")
	{
		Random rng(45);
		JetContext ctx;
		ctx.m = 2;
		for (int i = 0; i < 40; ++i)
		{
			const DifferentialOperator a = random_operator(rng, ctx);
			const DifferentialOperator at = adjoint(a, ctx);
			CHECK(adjoint(at, ctx) == a);
			const Covector p1 = random_jet_covector(rng, ctx);
			const Covector p2 = random_jet_covector(rng, ctx);
			const CyclicSum lhs = coupling(p1, op_apply(a, p2, ctx));
			const CyclicSum rhs = coupling(p2, op_apply(at, p1, ctx));
			CHECK(is_trivial(lhs - rhs, ctx));
		}
	}

	TEST_CASE("operator application agrees with the oracle")
	{
		Random rng(46);
		const JetContext ctx;
		for (int i = 0; i < 40; ++i)
		{
			const DifferentialOperator a = random_operator(rng, ctx);
			const Covector p = random_jet_covector(rng, ctx);
			const auto got = op_apply(a, p, ctx);
			const auto expect = oracle::apply(a, {oracle::from(p.at(0))});
			CHECK(oracle::from(got.at(0)) == expect.at(0));
		}
	}

	TEST_CASE("velocity of a transported covector")
	{
		// along phi = a_x only the explicit x dependence of p survives
		const JetContext ctx;
		CHECK(lift_covector_velocity({open("a_x")}, {open("a*a_x + x")}, ctx).at(0) == open("-1"));
		CHECK(lift_covector_velocity({open("a_x")}, {open("a_xx*a")}, ctx).at(0).is_zero());
	}
}
