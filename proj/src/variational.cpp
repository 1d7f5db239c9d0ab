#include "ncjet/variational.hpp"
#include "ncjet/error.hpp"

#include <algorithm>
#include <map>

namespace ncjet {

namespace {

/// sum over sigma of (-D)^sigma (parts[sigma]) by nested Horner schemes, one
/// base direction at a time; orders in directions below `dir` are zero.
OpenSum alternating_sum(const std::map<MultiIndex, OpenSum> &parts, int dir, const JetContext &ctx)
{
	if (parts.empty())
		return {};
	if (dir == ctx.n)
		return parts.begin()->second;
	std::map<int, std::map<MultiIndex, OpenSum>> groups;
	for (const auto &[order, s] : parts)
	{
		MultiIndex rest = order;
		rest[dir] = 0;
		groups[order[dir]][rest] += s;
	}
	OpenSum acc;
	for (int k = groups.rbegin()->first; k >= 0; --k)
	{
		if (!acc.is_zero())
			acc = -total_derivative(acc, dir + 1, ctx);
		auto it = groups.find(k);
		if (it != groups.end())
			acc += alternating_sum(it->second, dir + 1, ctx);
	}
	return acc;
}

} // namespace

OpenSum euler_derivative(const CyclicSum &f, LetterKind kind, int field, const JetContext &ctx,
                         Side side)
{
	std::map<MultiIndex, OpenSum> parts;
	for (const auto &[w, c] : f)
		for (std::size_t i = 0; i < w.size(); ++i)
			if (w[i].kind == kind && w[i].field == field)
			{
				auto [open, sign] = cut_after(w, i);
				parts[w[i].order].add(open, sign > 0 ? c : -c);
			}

	OpenSum r = alternating_sum(parts, 0, ctx);
	if (side == Side::Right && kind == LetterKind::Odd)
	{
		OpenSum signed_r;
		for (const auto &[w, c] : r)
			signed_r.add(w, (w.odd_count() & 1) ? -c : c);
		return signed_r;
	}
	return r;
}

Covector euler_derivatives(const CyclicSum &f, LetterKind kind, const JetContext &ctx, Side side)
{
	Covector r;
	r.reserve(ctx.m);
	for (int j = 1; j <= ctx.m; ++j)
		r.push_back(euler_derivative(f, kind, j, ctx, side));
	return r;
}

namespace {

/// Fields of each kind that occur in f; may exceed the context's m when the
/// caller built f by hand.
int max_field(const CyclicSum &f, int m)
{
	for (const auto &[w, c] : f)
		for (const Letter &l : w.letters())
			m = std::max<int>(m, l.field);
	return m;
}

} // namespace

bool is_trivial(const CyclicSum &f, const JetContext &ctx)
{
	const int m = max_field(f, ctx.m);
	for (LetterKind kind : {LetterKind::Even, LetterKind::Odd})
		for (int j = 1; j <= m; ++j)
			if (!euler_derivative(f, kind, j, ctx).is_zero())
				return false;
	return true;
}

CyclicSum reduce(const CyclicSum &f, const JetContext &ctx)
{
	const int m = max_field(f, ctx.m);
	CyclicSum r;
	for (LetterKind kind : {LetterKind::Even, LetterKind::Odd})
		for (int j = 1; j <= m; ++j)
		{
			const Letter head = kind == LetterKind::Even ? Letter::even(j) : Letter::odd(j);
			for (const auto &[w, c] : euler_derivative(f, kind, j, ctx))
			{
				Letters s{head};
				s.insert(s.end(), w.letters().begin(), w.letters().end());
				r.add_letters(s, c * Rational(1, static_cast<long>(s.size())));
			}
		}
	return r;
}

CyclicSum coupling(const Covector &p, const std::vector<OpenSum> &phi)
{
	CyclicSum r;
	const std::size_t n = std::min(p.size(), phi.size());
	for (std::size_t j = 0; j < n; ++j)
		r += close(p[j] * phi[j]);
	return r;
}

OpenSum substitute_slots(const OpenSum &f, const Covector &p, const JetContext &ctx)
{
	std::map<Letter, OpenSum> cache;
	auto value = [&](const Letter &l) -> const OpenSum & {
		auto it = cache.find(l);
		if (it != cache.end())
			return it->second;
		OpenSum v;
		if (l.field >= 1 && l.field <= static_cast<int>(p.size()))
			v = derivative_power(p[l.field - 1], l.order, ctx);
		return cache.emplace(l, std::move(v)).first->second;
	};

	OpenSum r;
	for (const auto &[w, c] : f)
	{
		OpenSum acc = OpenSum::scalar(c);
		Letters pending;
		for (const Letter &l : w.letters())
		{
			if (l.kind != LetterKind::Slot)
			{
				pending.push_back(l);
				continue;
			}
			if (!pending.empty())
			{
				acc = acc * OpenSum::of_letters(pending);
				pending.clear();
			}
			acc = acc * value(l);
			if (acc.is_zero())
				break;
		}
		if (!pending.empty() && !acc.is_zero())
			acc = acc * OpenSum::of_letters(pending);
		r += acc;
	}
	return r;
}

std::vector<OpenSum> op_apply(const DifferentialOperator &a, const Covector &p, const JetContext &ctx)
{
	const int rows = std::max<int>(a.dimension(), static_cast<int>(p.size()));
	std::vector<OpenSum> slotted = a.slotted(rows);
	for (auto &row : slotted)
		row = substitute_slots(row, p, ctx);
	return slotted;
}

DifferentialOperator adjoint(const DifferentialOperator &a, const JetContext &ctx)
{
	std::vector<OpenSum> rows(static_cast<std::size_t>(a.dimension()));
	for (const auto &[t, c] : a)
	{
		Letters s = t.right.letters();
		s.push_back(Letter::slot(t.row));
		s.insert(s.end(), t.left.letters().begin(), t.left.letters().end());
		const bool negative =
		    ((total_degree(t.order) + t.left.odd_count() * t.right.odd_count()) & 1) != 0;
		OpenSum moved = derivative_power(OpenSum::of_letters(s, c), t.order, ctx);
		if (negative)
			moved = -moved;
		rows[t.col - 1] += moved;
	}
	return DifferentialOperator::from_slotted(rows);
}

bool is_skew_adjoint(const DifferentialOperator &a, const JetContext &ctx)
{
	return (a + adjoint(a, ctx)).is_zero();
}

Covector lift_covector_velocity(const std::vector<OpenSum> &phi, const Covector &p, const JetContext &ctx)
{
	const GeneratingSection q = GeneratingSection::even_field(phi);
	Covector r = evolutionary_apply(q, p, ctx);
	const std::vector<OpenSum> extra = op_apply(adjoint(linearization(phi), ctx), p, ctx);
	if (r.size() < extra.size())
		r.resize(extra.size());
	for (std::size_t j = 0; j < extra.size(); ++j)
		r[j] += extra[j];
	return r;
}

} // namespace ncjet
