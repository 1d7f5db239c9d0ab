#include "ncjet/corpus.hpp"
#include "ncjet/variational.hpp"

#include <algorithm>

namespace ncjet {

int Random::uniform(int lo, int hi)
{
	const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
	return lo + static_cast<int>(engine_() % span);
}

bool Random::chance(int numerator, int denominator)
{
	return uniform(1, denominator) <= numerator;
}

Rational Random::nonzero(int bound)
{
	const int v = uniform(1, bound);
	return chance(1, 2) ? Rational(v) : Rational(-v);
}

namespace {

MultiIndex random_order(Random &rng, const JetContext &ctx, int max_order)
{
	MultiIndex order{};
	int budget = rng.uniform(0, max_order);
	// Low orders are drawn more often so that words stay short under derivatives.
	if (budget > 0 && rng.chance(1, 3))
		budget = rng.uniform(0, budget);
	while (budget-- > 0)
		++order[rng.uniform(0, ctx.n - 1)];
	return order;
}

} // namespace

Letters random_letters(Random &rng, const JetContext &ctx, const WordShape &shape)
{
	const int odd = std::max(shape.odd_letters, 0);
	const int length = std::max(rng.uniform(shape.min_length, std::max(shape.min_length, shape.max_length)), odd);
	std::vector<bool> is_odd(static_cast<std::size_t>(length), false);
	for (int placed = 0; placed < odd;)
	{
		const int i = rng.uniform(0, length - 1);
		if (!is_odd[i])
		{
			is_odd[i] = true;
			++placed;
		}
	}
	Letters s;
	s.reserve(static_cast<std::size_t>(length));
	for (int i = 0; i < length; ++i)
	{
		const int field = rng.uniform(1, ctx.m);
		const MultiIndex order = random_order(rng, ctx, shape.max_order);
		s.push_back(is_odd[i] ? Letter::odd(field, order) : Letter::even(field, order));
	}
	return s;
}

Poly random_coefficient(Random &rng, const JetContext &ctx, int x_degree)
{
	Poly c = rng.nonzero();
	if (x_degree > 0 && rng.chance(1, 3))
	{
		MultiIndex e{};
		e[rng.uniform(0, ctx.n - 1)] = static_cast<std::uint16_t>(rng.uniform(1, x_degree));
		c += Poly::monomial(e, rng.nonzero());
	}
	return c;
}

CyclicSum random_density(Random &rng, const JetContext &ctx, const WordShape &shape)
{
	CyclicSum r;
	for (int t = 0; t < shape.terms; ++t)
		r.add_letters(random_letters(rng, ctx, shape), random_coefficient(rng, ctx, shape.x_degree));
	return r;
}

OpenSum random_open_sum(Random &rng, const JetContext &ctx, const WordShape &shape)
{
	OpenSum r;
	for (int t = 0; t < shape.terms; ++t)
		r.add_letters(random_letters(rng, ctx, shape), random_coefficient(rng, ctx, shape.x_degree));
	return r;
}

Multivector random_multivector(Random &rng, const JetContext &ctx, int degree, int max_length, int max_order)
{
	WordShape shape;
	shape.min_length = std::max(degree, 1);
	shape.max_length = std::max(max_length, shape.min_length);
	shape.max_order = max_order;
	shape.odd_letters = degree;
	shape.terms = rng.uniform(1, 2);
	shape.x_degree = 1;
	Multivector r;
	for (int attempt = 0; attempt < 8; ++attempt)
	{
		r = normalize_multivector(random_density(rng, ctx, shape), ctx, degree);
		if (!r.is_zero())
			break;
	}
	return r;
}

Covector random_x_covector(Random &rng, const JetContext &ctx)
{
	Covector p(static_cast<std::size_t>(ctx.m));
	for (auto &c : p)
		for (int t = rng.uniform(1, 2); t > 0; --t)
		{
			MultiIndex e{};
			e[rng.uniform(0, ctx.n - 1)] = static_cast<std::uint16_t>(rng.uniform(0, 2));
			c += OpenSum::scalar(Poly::monomial(e, rng.nonzero()));
		}
	return p;
}

Covector random_jet_covector(Random &rng, const JetContext &ctx)
{
	WordShape shape;
	shape.min_length = 0;
	shape.max_length = 2;
	shape.max_order = 2;
	shape.x_degree = 1;
	Covector p(static_cast<std::size_t>(ctx.m));
	for (auto &c : p)
	{
		shape.terms = rng.uniform(1, 2);
		c = random_open_sum(rng, ctx, shape);
	}
	return p;
}

Covector random_exact_covector(Random &rng, const JetContext &ctx)
{
	WordShape shape;
	shape.min_length = 2;
	shape.max_length = 3;
	shape.max_order = 1;
	shape.terms = rng.uniform(1, 2);
	Covector p;
	for (int attempt = 0; attempt < 8; ++attempt)
	{
		p = euler_derivatives(random_density(rng, ctx, shape), LetterKind::Even, ctx);
		if (std::any_of(p.begin(), p.end(), [](const OpenSum &s) { return !s.is_zero(); }))
			break;
	}
	return p;
}

DifferentialOperator random_operator(Random &rng, const JetContext &ctx, int terms)
{
	WordShape side;
	side.min_length = 0;
	side.max_length = 2;
	side.max_order = 1;
	side.odd_letters = 0;
	DifferentialOperator a;
	for (int t = 0; t < terms; ++t)
	{
		OpTerm term;
		term.row = rng.uniform(1, ctx.m);
		term.col = rng.uniform(1, ctx.m);
		term.left = OpenWord(random_letters(rng, ctx, side));
		term.right = OpenWord(random_letters(rng, ctx, side));
		term.order = random_order(rng, ctx, 3);
		a.add(term, random_coefficient(rng, ctx, 1));
	}
	return a;
}

namespace {

DifferentialOperator dx(int k, const Poly &c = 1)
{
	return DifferentialOperator::derivative(MultiIndex{static_cast<std::uint16_t>(k)}) * c;
}

DifferentialOperator term(const Letters &left, int k, const Letters &right, const Poly &c = 1)
{
	DifferentialOperator r;
	r.add(OpTerm{1, 1, OpenWord(left), MultiIndex{static_cast<std::uint16_t>(k)}, OpenWord(right)}, c);
	return r;
}

} // namespace

std::vector<OperatorCase> operator_corpus(const JetContext &ctx)
{
	const Poly x = Poly::coordinate(0);
	const Letter a = Letter::even(1);
	auto skew_part = [&](const DifferentialOperator &b) { return b - adjoint(b, ctx); };

	std::vector<OperatorCase> cases;
	cases.push_back({"D", dx(1)});
	cases.push_back({"D^3", dx(3)});
	cases.push_back({"xD+Dx", dx(1, 2 * x) + dx(0)});
	cases.push_back({"D+D^3", dx(1) + dx(3)});
	cases.push_back({"x^2D+Dx^2", dx(1, 2 * x * x) + dx(0, 2 * x)});
	cases.push_back({"aD-(aD)*", skew_part(term({a}, 1, {}))});
	cases.push_back({"aDa-(aDa)*", skew_part(term({a}, 1, {a}))});
	cases.push_back({"aD^3-(aD^3)*", skew_part(term({a}, 3, {}))});
	cases.push_back({"aa-(aa)*", skew_part(term({a, a}, 0, {}))});
	return cases;
}

} // namespace ncjet
