#include "ncjet/schouten.hpp"
#include "ncjet/error.hpp"
#include "ncjet/variational.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace ncjet {

namespace {

int homogeneous_degree(const CyclicSum &density, std::optional<int> degree)
{
	std::optional<int> found;
	for (const auto &[w, c] : density)
	{
		if (found && *found != w.odd_count())
			throw PreconditionError("density is not homogeneous in the odd letters");
		found = w.odd_count();
	}
	if (degree && found && *degree != *found)
		throw PreconditionError(fmt::format("density has degree {}, expected {}", *found, *degree));
	if (degree && *degree < 0)
		throw PreconditionError("negative multivector degree");
	return found ? *found : degree.value_or(0);
}

Rational factorial(int k)
{
	Rational r = 1;
	for (int i = 2; i <= k; ++i)
		r *= i;
	return r;
}

int sign_power(int e) { return (e & 1) ? -1 : 1; }

} // namespace

DifferentialOperator Multivector::bivector_operator() const
{
	if (degree != 2)
		throw PreconditionError("operator form is defined for bi-vectors only");
	std::vector<OpenSum> rows(components.size());
	for (std::size_t i = 0; i < components.size(); ++i)
		for (const auto &[w, c] : components[i])
		{
			Letters s = w.letters();
			for (Letter &l : s)
				if (l.kind == LetterKind::Odd)
					l.kind = LetterKind::Slot;
			rows[i].add_letters(s, c);
		}
	return DifferentialOperator::from_slotted(rows);
}

Multivector normalize_multivector(const CyclicSum &density, const JetContext &ctx, std::optional<int> degree)
{
	Multivector r;
	r.degree = homogeneous_degree(density, degree);
	if (r.degree == 0)
	{
		r.density = reduce(density, ctx);
		return r;
	}
	const int m = std::max<int>(ctx.m, [&] {
		int f = 0;
		for (const auto &[w, c] : density)
			for (const Letter &l : w.letters())
				f = std::max<int>(f, l.field);
		return f;
	}());
	JetContext wide = ctx;
	wide.m = m;
	const Covector e = euler_derivatives(density, LetterKind::Odd, wide);
	const Rational inv_k(1, r.degree);
	const Rational scale = factorial(r.degree - 1);
	r.components.resize(static_cast<std::size_t>(m));
	for (int j = 1; j <= m; ++j)
		for (const auto &[w, c] : e[j - 1])
		{
			Letters s{Letter::odd(j)};
			s.insert(s.end(), w.letters().begin(), w.letters().end());
			r.density.add_letters(s, c * inv_k);
			r.components[j - 1].add(w, c * scale);
		}
	return r;
}

Multivector bivector(const DifferentialOperator &a, const JetContext &ctx)
{
	const int m = std::max(ctx.m, a.dimension());
	Covector b(static_cast<std::size_t>(m));
	for (int j = 1; j <= m; ++j)
		b[j - 1] = OpenSum::of_letters(Letters{Letter::odd(j)});
	CyclicSum density = coupling(b, op_apply(a, b, ctx)) * Rational(1, 2);
	return normalize_multivector(density, ctx, 2);
}

GeneratingSection q_field(const Multivector &xi, const JetContext &ctx)
{
	GeneratingSection q;
	q.parity = (xi.degree + 1) & 1;
	q.even = euler_derivatives(xi.density, LetterKind::Odd, ctx, Side::Right);
	for (auto &s : q.even)
		s = -s;
	q.odd = euler_derivatives(xi.density, LetterKind::Even, ctx);
	return q;
}

Multivector schouten_bracket(const Multivector &xi, const Multivector &eta, const JetContext &ctx)
{
	const int degree = std::max(0, xi.degree + eta.degree - 1);
	return normalize_multivector(evolutionary_apply(q_field(xi, ctx), eta.density, ctx), ctx, degree);
}

Multivector schouten_coordinate(const Multivector &xi, const Multivector &eta, const JetContext &ctx)
{
	const int degree = std::max(0, xi.degree + eta.degree - 1);
	const Covector xa = euler_derivatives(xi.density, LetterKind::Even, ctx, Side::Right);
	const Covector xb = euler_derivatives(xi.density, LetterKind::Odd, ctx, Side::Right);
	const Covector ea = euler_derivatives(eta.density, LetterKind::Even, ctx);
	const Covector eb = euler_derivatives(eta.density, LetterKind::Odd, ctx);
	CyclicSum density = coupling(xa, eb) - coupling(xb, ea);
	return normalize_multivector(density, ctx, degree);
}

namespace {

/// Replaces the odd letters of w, in reading order, by D^tau of the matching
/// components of the covectors args[0], args[1], ...
OpenSum substitute_arguments(const OpenSum &f, const std::vector<const Covector *> &args,
                             const JetContext &ctx)
{
	OpenSum r;
	for (const auto &[w, c] : f)
	{
		OpenSum acc = OpenSum::scalar(c);
		Letters pending;
		std::size_t t = 0;
		for (const Letter &l : w.letters())
		{
			if (l.kind != LetterKind::Odd)
			{
				pending.push_back(l);
				continue;
			}
			if (t >= args.size())
				throw PreconditionError("too few arguments for the multivector");
			const Covector &p = *args[t++];
			OpenSum value;
			if (l.field <= p.size())
				value = derivative_power(p[l.field - 1], l.order, ctx);
			acc = acc * OpenSum::of_letters(pending) * value;
			pending.clear();
			if (acc.is_zero())
				break;
		}
		if (!acc.is_zero())
			r += acc * OpenSum::of_letters(pending);
	}
	return r;
}

int permutation_sign(const std::vector<int> &perm)
{
	int inversions = 0;
	for (std::size_t i = 0; i < perm.size(); ++i)
		for (std::size_t j = i + 1; j < perm.size(); ++j)
			inversions += perm[i] > perm[j];
	return sign_power(inversions);
}

} // namespace

CyclicSum evaluate(const Multivector &xi, const std::vector<Covector> &args, const JetContext &ctx)
{
	if (static_cast<int>(args.size()) != xi.degree)
		throw PreconditionError(
		    fmt::format("a {}-vector takes {} arguments, got {}", xi.degree, xi.degree, args.size()));
	if (xi.degree == 0)
		return reduce(xi.density, ctx);

	std::vector<int> perm(args.size());
	std::iota(perm.begin(), perm.end(), 0);
	CyclicSum total;
	do
	{
		std::vector<const Covector *> rest;
		for (std::size_t t = 1; t < perm.size(); ++t)
			rest.push_back(&args[perm[t]]);
		const Covector &head = args[perm[0]];
		CyclicSum term;
		for (std::size_t j = 0; j < xi.components.size() && j < head.size(); ++j)
			term += close(head[j] * substitute_arguments(xi.components[j], rest, ctx));
		if (permutation_sign(perm) < 0)
			total -= term;
		else
			total += term;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return reduce(total * (Rational(1) / factorial(xi.degree)), ctx);
}

namespace {

/// Q^xi(eta) on raw densities; the class of the result depends only on the
/// classes of the arguments, so no intermediate normalization is needed.
CyclicSum raw_bracket(const CyclicSum &xi, int k, const CyclicSum &eta, const JetContext &ctx)
{
	Multivector m;
	m.degree = k;
	m.density = xi;
	return evolutionary_apply(q_field(m, ctx), eta, ctx);
}

} // namespace

bool check_skew(const Multivector &xi, const Multivector &eta, const JetContext &ctx)
{
	CyclicSum defect = raw_bracket(xi.density, xi.degree, eta.density, ctx);
	const CyclicSum back = raw_bracket(eta.density, eta.degree, xi.density, ctx);
	if (sign_power((xi.degree - 1) * (eta.degree - 1)) > 0)
		defect += back;
	else
		defect -= back;
	return is_trivial(defect, ctx);
}

bool check_jacobi(const Multivector &xi, const Multivector &eta, const Multivector &omega,
                  const JetContext &ctx)
{
	const int k = xi.degree, l = eta.degree;
	const CyclicSum eta_omega = raw_bracket(eta.density, l, omega.density, ctx);
	const CyclicSum xi_eta = raw_bracket(xi.density, k, eta.density, ctx);
	const CyclicSum xi_omega = raw_bracket(xi.density, k, omega.density, ctx);
	CyclicSum defect = raw_bracket(xi.density, k, eta_omega, ctx);
	defect -= raw_bracket(xi_eta, std::max(0, k + l - 1), omega.density, ctx);
	const CyclicSum last = raw_bracket(eta.density, l, xi_omega, ctx);
	if (sign_power((k - 1) * (l - 1)) > 0)
		defect -= last;
	else
		defect += last;
	return is_trivial(defect, ctx);
}

bool check_prop1(const Multivector &xi, const Multivector &eta, const JetContext &ctx)
{
	const GeneratingSection lhs = graded_commutator(q_field(xi, ctx), q_field(eta, ctx), ctx);
	Multivector bracket;
	bracket.degree = std::max(0, xi.degree + eta.degree - 1);
	bracket.density = raw_bracket(xi.density, xi.degree, eta.density, ctx);
	const GeneratingSection rhs = q_field(bracket, ctx);
	return lhs == rhs;
}

} // namespace ncjet
