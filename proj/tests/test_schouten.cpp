#include "helpers.hpp"

#include "ncjet/error.hpp"
#include "ncjet/schouten.hpp"
#include "ncjet/variational.hpp"

#include "doctest.h"

using namespace ncjet;
using testing::cyc;
using testing::op;

namespace {

Multivector mv(const char *text, const JetContext &ctx = {})
{
	return normalize_multivector(cyc(text, ctx), ctx);
}

} // namespace

TEST_SUITE("schouten")
{
	TEST_CASE("normal form of multivectors")
	{
		const JetContext ctx;
		const Multivector p = mv("1/2*cyc(b*b_x)");
		CHECK(p.degree == 2);
		REQUIRE(p.components.size() == 1);
		CHECK(p.components[0] == testing::open("b_x"));
		CHECK(p.bivector_operator() == op("op(D)"));

		// equivalent densities give the same normal form
		CHECK(mv("cyc(b*b_x) + cyc(b_x*b_xx)") == mv("cyc(b*b_x) + cyc(b_x*b_xx) + cyc(b*b_xx)"));
		CHECK(mv("cyc(a*a_x*b)") == mv("cyc(a*a_x*b) + cyc(b_x*a) + cyc(a_x*b)"));
		CHECK(mv("cyc(a*a_x)").is_zero());

		CHECK_THROWS_AS(mv("cyc(b) + cyc(b*b_x)"), PreconditionError);
		CHECK_THROWS_AS(normalize_multivector(cyc("cyc(b)"), ctx, 2), PreconditionError);
		CHECK(normalize_multivector(CyclicSum{}, ctx, 3).degree == 3);
	}

	TEST_CASE("bivector of an operator")
	{
		const JetContext ctx;
		for (const char *text : {"op(D)", "op(D^3 + x*D*1 + 1*D*x)", "op(a*D*1 + 1*D*a)"})
		{
			const DifferentialOperator a = op(text);
			const Multivector p = bivector(a, ctx);
			CHECK(p.degree == 2);
			CHECK(p.bivector_operator() == a);
			CHECK(adjoint(p.bivector_operator(), ctx) == -p.bivector_operator());
		}
		// only the skew part survives
		CHECK(bivector(op("op(D^2)"), ctx).is_zero());
	}

	TEST_CASE("evaluation")
	{
		Random rng(51);
		const JetContext ctx;
		const Multivector p = bivector(op("op(D^3 + a*D*1 + 1*D*a)"), ctx);
		const DifferentialOperator a = p.bivector_operator();
		for (int i = 0; i < 20; ++i)
		{
			const Covector p1 = random_jet_covector(rng, ctx);
			const Covector p2 = random_jet_covector(rng, ctx);
			const CyclicSum v = evaluate(p, {p1, p2}, ctx);
			CHECK(v == -evaluate(p, {p2, p1}, ctx));
			CHECK(is_trivial(v - coupling(p1, op_apply(a, p2, ctx)), ctx));
		}
		CHECK_THROWS_AS(evaluate(p, {random_jet_covector(rng, ctx)}, ctx), PreconditionError);
		const Multivector h = mv("cyc(a*a*a_x) + cyc(a*a)");
		CHECK(evaluate(h, {}, ctx) == reduce(h.density, ctx));
	}

	TEST_CASE("trivector evaluation is alternating")
	{
		Random rng(52);
		const JetContext ctx;
		const Multivector t = random_multivector(rng, ctx, 3, 4, 2);
		REQUIRE_FALSE(t.is_zero());
		for (int i = 0; i < 5; ++i)
		{
			const Covector p1 = random_jet_covector(rng, ctx);
			const Covector p2 = random_jet_covector(rng, ctx);
			const Covector p3 = random_jet_covector(rng, ctx);
			const CyclicSum v = evaluate(t, {p1, p2, p3}, ctx);
			CHECK(v == -evaluate(t, {p2, p1, p3}, ctx));
			CHECK(v == evaluate(t, {p2, p3, p1}, ctx));
		}
	}

	TEST_CASE("bracket from the field equals the coordinate formula")
	{
		Random rng(53);
		const JetContext ctx;
		for (int i = 0; i < 30; ++i)
		{
			const Multivector xi = random_multivector(rng, ctx, rng.uniform(0, 3), 3, 2);
			const Multivector eta = random_multivector(rng, ctx, rng.uniform(0, 3), 3, 2);
			const Multivector s = schouten_bracket(xi, eta, ctx);
			CHECK(s == schouten_coordinate(xi, eta, ctx));
			CHECK(s.degree == std::max(0, xi.degree + eta.degree - 1));
		}
	}

	TEST_CASE("skew symmetry, commutator rule and Jacobi on small samples")
	{
		Random rng(54);
		const JetContext ctx;
		for (int i = 0; i < 20; ++i)
		{
			const Multivector xi = random_multivector(rng, ctx, rng.uniform(0, 3), 3, 2);
			const Multivector eta = random_multivector(rng, ctx, rng.uniform(0, 3), 3, 2);
			CHECK(check_skew(xi, eta, ctx));
			if (i < 8)
				CHECK(check_prop1(xi, eta, ctx));
		}
		for (int i = 0; i < 4; ++i)
		{
			const Multivector xi = random_multivector(rng, ctx, rng.uniform(1, 2), 3, 2);
			const Multivector eta = random_multivector(rng, ctx, rng.uniform(1, 2), 3, 2);
			const Multivector omega = random_multivector(rng, ctx, rng.uniform(0, 2), 3, 2);
			CHECK(check_jacobi(xi, eta, omega, ctx));
		}
	}

	TEST_CASE("a broken bracket is detected")
	{
		// for k = 2, l = 0 the two orders agree; the wrong sign is caught
		const JetContext ctx;
		const Multivector p = bivector(op("op(a*D*1 + 1*D*a)"), ctx);
		const Multivector h = mv("cyc(a*a*a)");
		const Multivector ph = schouten_bracket(p, h, ctx);
		const Multivector hp = schouten_bracket(h, p, ctx);
		REQUIRE_FALSE(ph.is_zero());
		CHECK(is_trivial(ph.density - hp.density, ctx));
		CHECK_FALSE(is_trivial(ph.density + hp.density, ctx));
	}

	TEST_CASE("field of a bivector")
	{
		const JetContext ctx;
		const GeneratingSection q = q_field(bivector(op("op(D)"), ctx), ctx);
		CHECK(q.parity == 1);
		REQUIRE(q.even.size() == 1);
		CHECK(q.even[0] == testing::open("b_x"));
		CHECK(q.odd.at(0).is_zero());
	}
}
