#include "ncjet/poisson.hpp"
#include "ncjet/corpus.hpp"
#include "ncjet/error.hpp"
#include "ncjet/variational.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace ncjet {

namespace {

void require_skew(const DifferentialOperator &a, const JetContext &ctx)
{
	if (!is_skew_adjoint(a, ctx))
		throw PreconditionError("operator is not skew-adjoint");
}

Covector variation(const CyclicSum &h, const JetContext &ctx)
{
	return euler_derivatives(h, LetterKind::Even, ctx);
}

CyclicSum bracket_unchecked(const CyclicSum &h1, const CyclicSum &h2, const DifferentialOperator &a,
                            const JetContext &ctx)
{
	return reduce(coupling(variation(h1, ctx), op_apply(a, variation(h2, ctx), ctx)), ctx);
}

} // namespace

CyclicSum poisson_bracket(const CyclicSum &h1, const CyclicSum &h2, const DifferentialOperator &a,
                          const JetContext &ctx)
{
	require_skew(a, ctx);
	return bracket_unchecked(h1, h2, a, ctx);
}

CyclicSum jacobi_defect(const DifferentialOperator &a, const CyclicSum &h1, const CyclicSum &h2,
                        const CyclicSum &h3, const JetContext &ctx)
{
	require_skew(a, ctx);
	const CyclicSum *h[3] = {&h1, &h2, &h3};
	CyclicSum r;
	for (int i = 0; i < 3; ++i)
	{
		const CyclicSum inner = bracket_unchecked(*h[i], *h[(i + 1) % 3], a, ctx);
		r += bracket_unchecked(inner, *h[(i + 2) % 3], a, ctx);
	}
	return reduce(r, ctx);
}

CyclicSum jacobi_defect_expanded(const DifferentialOperator &a, const CyclicSum &h1, const CyclicSum &h2,
                                 const CyclicSum &h3, const JetContext &ctx)
{
	require_skew(a, ctx);
	const Covector dh[3] = {variation(h1, ctx), variation(h2, ctx), variation(h3, ctx)};
	std::vector<OpenSum> adh[3];
	for (int i = 0; i < 3; ++i)
		adh[i] = op_apply(a, dh[i], ctx);

	static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
	CyclicSum r;
	for (int s = 0; s < 6; ++s)
	{
		const auto &p = perms[s];
		const CyclicSum half = coupling(dh[p[0]], adh[p[1]]) * Rational(1, 2);
		const CyclicSum moved = evolutionary_apply(GeneratingSection::even_field(adh[p[2]]), half, ctx);
		if (s < 3)
			r += moved;
		else
			r -= moved;
	}
	return reduce(r, ctx);
}

Multivector master_defect(const DifferentialOperator &a, const JetContext &ctx)
{
	require_skew(a, ctx);
	const Multivector p = bivector(a, ctx);
	return schouten_bracket(p, p, ctx);
}

std::vector<CyclicSum> functional_corpus(const JetContext &ctx, int max_length, int max_order)
{
	Letters alphabet;
	for (int j = 1; j <= ctx.m; ++j)
	{
		// Multi-indices of total order <= max_order, grouped by order.
		std::vector<MultiIndex> orders{MultiIndex{}};
		for (std::size_t i = 0; i < orders.size(); ++i)
			if (total_degree(orders[i]) < max_order)
				for (int d = 0; d < ctx.n; ++d)
				{
					MultiIndex next = orders[i];
					++next[d];
					if (std::find(orders.begin(), orders.end(), next) == orders.end())
						orders.push_back(next);
				}
		for (const auto &o : orders)
			alphabet.push_back(Letter::even(j, o));
	}
	std::sort(alphabet.begin(), alphabet.end());

	std::vector<CyclicSum> result;
	for (int len = 2; len <= max_length; ++len)
	{
		std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
		while (true)
		{
			Letters s;
			for (std::size_t i : idx)
				s.push_back(alphabet[i]);
			CyclicSum f = CyclicSum::of_letters(s);
			if (!f.is_zero())
			{
				CyclicSum red = reduce(f, ctx);
				if (!red.is_zero() && std::find(result.begin(), result.end(), red) == result.end())
					result.push_back(red);
			}
			std::size_t k = 0;
			while (k < idx.size() && ++idx[k] == alphabet.size())
				idx[k++] = 0;
			if (k == idx.size())
				break;
		}
	}
	return result;
}

HamiltonianReport is_hamiltonian(const DifferentialOperator &a, const JetContext &ctx,
                                 const std::vector<CyclicSum> &search)
{
	HamiltonianReport report;
	report.defect = master_defect(a, ctx);
	report.hamiltonian = is_trivial(report.defect.density, ctx);
	if (report.hamiltonian)
		return report;
	const std::vector<CyclicSum> corpus = search.empty() ? functional_corpus(ctx) : search;
	for (std::size_t i = 0; i < corpus.size(); ++i)
		for (std::size_t j = i + 1; j < corpus.size(); ++j)
			for (std::size_t k = j + 1; k < corpus.size(); ++k)
				if (!jacobi_defect(a, corpus[i], corpus[j], corpus[k], ctx).is_zero())
				{
					report.witness = std::array<CyclicSum, 3>{corpus[i], corpus[j], corpus[k]};
					return report;
				}
	return report;
}

std::vector<OpenSum> involutivity_witness(const DifferentialOperator &a, const Covector &p1, const Covector &p2,
                                          const JetContext &ctx)
{
	const GeneratingSection q1 = GeneratingSection::even_field(op_apply(a, p1, ctx));
	const GeneratingSection q2 = GeneratingSection::even_field(op_apply(a, p2, ctx));
	std::vector<OpenSum> r = graded_commutator(q1, q2, ctx).even;

	Covector inner = evolutionary_apply(q1, p2, ctx);
	const Covector back = evolutionary_apply(q2, p1, ctx);
	inner.resize(std::max(inner.size(), back.size()));
	for (std::size_t j = 0; j < back.size(); ++j)
		inner[j] -= back[j];
	const std::vector<OpenSum> image = op_apply(a, inner, ctx);
	r.resize(std::max(r.size(), image.size()));
	for (std::size_t j = 0; j < image.size(); ++j)
		r[j] -= image[j];
	return r;
}

const char *to_string(CovectorClass c)
{
	switch (c)
	{
	case CovectorClass::XOnly:
		return "x-only";
	case CovectorClass::JetDependent:
		return "jet";
	case CovectorClass::Exact:
		return "exact";
	}
	return "?";
}

namespace {

DifferentialOperator first_order(const Poly &c1, const Poly &c0)
{
	return DifferentialOperator::derivative(MultiIndex{1}) * c1 + DifferentialOperator::derivative(MultiIndex{}) * c0;
}

CyclicSum adjoint_residual(const DifferentialOperator &a, const std::vector<Covector> &p, const JetContext &ctx)
{
	return coupling(p[0], op_apply(a, p[1], ctx)) - coupling(p[1], op_apply(adjoint(a, ctx), p[0], ctx));
}

DifferentialOperator nc_operator()
{
	const Letter a = Letter::even(1);
	DifferentialOperator r;
	r.add(OpTerm{1, 1, OpenWord{a}, MultiIndex{1}, OpenWord{}}, 1);
	r.add(OpTerm{1, 1, OpenWord{}, MultiIndex{2}, OpenWord{a, a}}, Poly::coordinate(0));
	return r;
}

std::vector<SubstitutionIdentity> build_identities()
{
	const Poly x = Poly::coordinate(0);
	std::vector<SubstitutionIdentity> ids;
	ids.push_back({"zero", 1, [](const std::vector<Covector> &, const JetContext &) { return CyclicSum(); }});
	ids.push_back({"adjoint-dx", 2, [](const std::vector<Covector> &p, const JetContext &ctx) {
		               return adjoint_residual(DifferentialOperator::derivative(MultiIndex{1}), p, ctx);
	               }});
	ids.push_back({"adjoint-xdx", 2, [x](const std::vector<Covector> &p, const JetContext &ctx) {
		               return adjoint_residual(first_order(2 * x, 1), p, ctx);
	               }});
	ids.push_back({"adjoint-nc", 2, [](const std::vector<Covector> &p, const JetContext &ctx) {
		               return adjoint_residual(nc_operator(), p, ctx);
	               }});
	ids.push_back({"jacobi-dx", 3, [](const std::vector<Covector> &p, const JetContext &ctx) {
		               return evaluate(master_defect(DifferentialOperator::derivative(MultiIndex{1}), ctx), p, ctx);
	               }});
	ids.push_back({"jacobi-xdx", 3, [x](const std::vector<Covector> &p, const JetContext &ctx) {
		               return evaluate(master_defect(first_order(2 * x, 1), ctx), p, ctx);
	               }});
	ids.push_back({"skew-bivector", 2, [](const std::vector<Covector> &p, const JetContext &ctx) {
		               const DifferentialOperator b = nc_operator();
		               const Multivector bv = bivector(b - adjoint(b, ctx), ctx);
		               return evaluate(bv, {p[0], p[1]}, ctx) + evaluate(bv, {p[1], p[0]}, ctx);
	               }});
	return ids;
}

} // namespace

const std::vector<SubstitutionIdentity> &substitution_identities()
{
	static const std::vector<SubstitutionIdentity> ids = build_identities();
	return ids;
}

const SubstitutionIdentity &find_identity(const std::string &name)
{
	for (const auto &id : substitution_identities())
		if (id.name == name)
			return id;
	throw PreconditionError(fmt::format("unknown identity '{}'", name));
}

SubstitutionReport substitution_harness(const SubstitutionIdentity &identity, CovectorClass covectors,
                                        int trials, std::uint64_t seed, const JetContext &ctx)
{
	SubstitutionReport report;
	report.identity = identity.name;
	report.covectors = covectors;
	report.trials = trials;
	Random rng(seed);
	for (int t = 0; t < trials; ++t)
	{
		std::vector<Covector> args;
		for (int i = 0; i < identity.arity; ++i)
			switch (covectors)
			{
			case CovectorClass::XOnly:
				args.push_back(random_x_covector(rng, ctx));
				break;
			case CovectorClass::JetDependent:
				args.push_back(random_jet_covector(rng, ctx));
				break;
			case CovectorClass::Exact:
				args.push_back(random_exact_covector(rng, ctx));
				break;
			}
		if (is_trivial(identity.residual(args, ctx), ctx))
			++report.passed;
		else if (!report.first_failure)
			report.first_failure = t;
	}
	return report;
}

} // namespace ncjet
