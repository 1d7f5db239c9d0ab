#include "ncjet/suites.hpp"
#include "ncjet/corpus.hpp"
#include "ncjet/poisson.hpp"
#include "ncjet/schouten.hpp"
#include "ncjet/variational.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace ncjet {

namespace {

/// Counts checks and remembers the first failure.
class Tally
{
  public:
	void check(bool ok, const std::string &what)
	{
		++total_;
		if (!ok && failure_.empty())
			failure_ = what;
	}
	SuiteResult result(int id, const std::string &summary) const
	{
		SuiteResult r;
		r.id = id;
		r.name = suite_name(id);
		r.passed = failure_.empty();
		r.detail = r.passed ? fmt::format("{} ({} checks)", summary, total_) : "failed: " + failure_;
		return r;
	}

  private:
	int total_ = 0;
	std::string failure_;
};

Letters word(std::initializer_list<int> fields)
{
	Letters s;
	for (int f : fields)
		s.push_back(Letter::even(f));
	return s;
}

SuiteResult necklaces(int id)
{
	// a < b < c are the fields 1, 2, 3.
	Tally t;
	const Normalized ref = normalize(word({1, 1, 2, 3, 3}));
	for (auto w : {word({1, 2, 3, 3, 1}), word({2, 3, 3, 1, 1}), word({3, 3, 1, 1, 2}), word({3, 1, 1, 2, 3})})
	{
		const Normalized n = normalize(w);
		t.check(!n.is_zero() && n.word == ref.word && n.sign == 1, "rotation of aabcc");
	}
	t.check(normalize(word({1, 2, 1, 3, 3})).word != ref.word, "abacc is a different necklace");
	t.check(normalize(Letters{Letter::odd(1), Letter::odd(1)}).is_zero(), "bb vanishes");
	return t.result(id, "aabcc ~ abcca ~ bccaa ~ ccaab ~ caabc, abacc differs");
}

SuiteResult product_example(int id)
{
	Tally t;
	const CyclicSum f = CyclicSum::of_letters(word({1, 2}));
	const CyclicSum g = CyclicSum::of_letters(word({3, 4}));
	CyclicSum expected;
	for (auto w : {word({1, 2, 3, 4}), word({2, 1, 3, 4}), word({3, 1, 2, 4}), word({3, 2, 1, 4})})
		expected.add_letters(w, Rational(1, 4));
	t.check(times(f, g) == expected, "a1a2 x a3a4");
	t.check(times(g, f) == expected, "a3a4 x a1a2");
	t.check(times(CyclicSum::scalar(1), f) == f, "unit");
	return t.result(id, "a1a2 x a3a4 = 1/4 (four words) = a3a4 x a1a2");
}

SuiteResult commutativity(int id, std::uint64_t seed)
{
	Tally t;
	JetContext ctx;
	ctx.m = 2;
	Random rng(seed);
	for (int i = 0; i < 200; ++i)
	{
		WordShape shape;
		shape.max_length = 3;
		shape.max_order = 1;
		shape.odd_letters = i % 4 == 3 ? rng.uniform(0, 2) : 0;
		const int pf = shape.odd_letters;
		const CyclicSum f = random_density(rng, ctx, shape);
		shape.odd_letters = i % 4 == 3 ? rng.uniform(0, 2) : 0;
		const CyclicSum g = random_density(rng, ctx, shape);
		const CyclicSum fg = times(f, g);
		const CyclicSum gf = times(g, f);
		t.check(((pf * shape.odd_letters) & 1) ? fg == -gf : fg == gf, fmt::format("pair {}", i));
	}
	const auto witness = nonassociativity_witness();
	t.check(witness.has_value(), "no nonassociative triple of length <= 3");
	return t.result(id, "x commutes on 200 random pairs; nonassociative triple found");
}

std::pair<Multivector, Multivector> random_pair(Random &rng, const JetContext &ctx)
{
	const int k = rng.uniform(0, 3);
	const int l = rng.uniform(0, 3);
	return {random_multivector(rng, ctx, k), random_multivector(rng, ctx, l)};
}

SuiteResult schouten_skew(int id, std::uint64_t seed)
{
	Tally t;
	JetContext ctx;
	Random rng(seed);
	for (int i = 0; i < 100; ++i)
	{
		auto [xi, eta] = random_pair(rng, ctx);
		t.check(check_skew(xi, eta, ctx), fmt::format("pair {} (degrees {}, {})", i, xi.degree, eta.degree));
	}
	return t.result(id, "[[xi,eta]] + (-1)^((k-1)(l-1)) [[eta,xi]] trivial on 100 pairs");
}

SuiteResult schouten_prop1_jacobi(int id, std::uint64_t seed)
{
	Tally t;
	JetContext ctx;
	Random rng(seed);
	for (int i = 0; i < 50; ++i)
	{
		auto [xi, eta] = random_pair(rng, ctx);
		t.check(check_prop1(xi, eta, ctx), fmt::format("commutator pair {}", i));
	}
	for (int i = 0; i < 50; ++i)
	{
		const Multivector xi = random_multivector(rng, ctx, rng.uniform(0, 3));
		const Multivector eta = random_multivector(rng, ctx, rng.uniform(0, 3));
		const Multivector omega = random_multivector(rng, ctx, rng.uniform(0, 3));
		t.check(check_jacobi(xi, eta, omega, ctx), fmt::format("Jacobi triple {}", i));
	}
	return t.result(id, "[Q^xi, Q^eta] = Q^[[xi,eta]] on 50 pairs, Jacobi on 50 triples");
}

SuiteResult skew_is_hamiltonian(int id, std::uint64_t seed)
{
	Tally t;
	JetContext ctx;
	Random rng(seed);
	const Poly x = Poly::coordinate(0);
	auto d = [](int k) { return DifferentialOperator::derivative(MultiIndex{static_cast<std::uint16_t>(k)}); };
	struct Case
	{
		const char *name;
		DifferentialOperator op;
		bool constant;
	};
	const Case cases[] = {
	    {"D", d(1), true},
	    {"D^3", d(3), true},
	    {"xD+Dx", d(1) * (2 * x) + d(0), false},
	    {"D+D^3", d(1) + d(3), true},
	};
	for (const auto &c : cases)
	{
		const HamiltonianReport r = is_hamiltonian(c.op, ctx);
		t.check(r.hamiltonian && r.defect.is_zero(), fmt::format("{} is Hamiltonian", c.name));
		if (!c.constant)
			continue;
		for (int i = 0; i < 10; ++i)
		{
			const Covector p1 = random_jet_covector(rng, ctx);
			const Covector p2 = random_jet_covector(rng, ctx);
			const auto w = involutivity_witness(c.op, p1, p2, ctx);
			t.check(std::all_of(w.begin(), w.end(), [](const OpenSum &s) { return s.is_zero(); }),
			        fmt::format("involutivity witness of {}", c.name));
		}
	}
	return t.result(id, "D, D^3, xD+Dx, D+D^3 Hamiltonian with zero defect; involutive images");
}

SuiteResult criterion_equivalence(int id)
{
	Tally t;
	JetContext ctx;
	const std::vector<CyclicSum> corpus = functional_corpus(ctx);
	int certified = 0;
	for (const auto &c : operator_corpus(ctx))
	{
		const HamiltonianReport r = is_hamiltonian(c.op, ctx, corpus);
		bool all_trivial = true;
		for (std::size_t i = 0; i < corpus.size() && all_trivial; ++i)
			for (std::size_t j = i + 1; j < corpus.size() && all_trivial; ++j)
				for (std::size_t k = j + 1; k < corpus.size() && all_trivial; ++k)
					all_trivial = jacobi_defect(c.op, corpus[i], corpus[j], corpus[k], ctx).is_zero();
		t.check(r.hamiltonian == all_trivial, fmt::format("criteria disagree on {}", c.name));
		if (!r.hamiltonian && r.witness)
		{
			const auto &w = *r.witness;
			const bool confirmed = !jacobi_defect_expanded(c.op, w[0], w[1], w[2], ctx).is_zero();
			t.check(confirmed, fmt::format("expanded Jacobi form does not confirm the witness for {}", c.name));
			certified += confirmed;
		}
	}
	t.check(certified > 0, "no operator certified non-Hamiltonian");
	return t.result(id, fmt::format("master equation agrees with Jacobi on the operator corpus; {} certified "
	                                "non-Hamiltonian",
	                                certified));
}

SuiteResult substitution(int id, std::uint64_t seed)
{
	Tally t;
	JetContext ctx;
	int shipped = 0;
	for (const auto &identity : substitution_identities())
	{
		const SubstitutionReport x = substitution_harness(identity, CovectorClass::XOnly, 100, seed, ctx);
		if (!x.ok())
			continue;
		++shipped;
		const SubstitutionReport jet = substitution_harness(identity, CovectorClass::JetDependent, 100, seed, ctx);
		t.check(jet.ok(), fmt::format("{} passes for x-only covectors but fails for jet covectors", identity.name));
	}
	t.check(shipped > 0, "no identity passed on x-only covectors");
	return t.result(id, fmt::format("{} identities pass for x-only and jet-dependent covectors", shipped));
}

SuiteResult adjoints(int id, std::uint64_t seed)
{
	Tally t;
	JetContext ctx;
	Random rng(seed);
	for (int i = 0; i < 100; ++i)
	{
		const DifferentialOperator a = random_operator(rng, ctx);
		const DifferentialOperator adj = adjoint(a, ctx);
		t.check(adjoint(adj, ctx) == a, fmt::format("involution on operator {}", i));
		if (i % 5 == 0)
		{
			const Covector p1 = random_jet_covector(rng, ctx);
			const Covector p2 = random_jet_covector(rng, ctx);
			const CyclicSum residual = coupling(p1, op_apply(a, p2, ctx)) - coupling(p2, op_apply(adj, p1, ctx));
			t.check(is_trivial(residual, ctx), fmt::format("coupling identity on operator {}", i));
		}
	}
	for (int i = 0; i < 20; ++i)
	{
		const Multivector p = random_multivector(rng, ctx, 2);
		const DifferentialOperator a = p.bivector_operator();
		t.check(adjoint(a, ctx) == -a, fmt::format("bi-vector operator {} is not skew", i));
	}
	return t.result(id, "(A^+)^+ = A on 100 operators, coupling identity, bi-vector operators skew");
}

} // namespace

const char *suite_name(int id)
{
	static constexpr const char *names[] = {
	    "necklace equivalence",  "product example",       "commutativity",
	    "schouten skew",         "prop1 and jacobi",      "skew operators hamiltonian",
	    "criterion equivalence", "substitution principle", "adjoint layer",
	};
	return id >= 1 && id <= kSuiteCount ? names[id - 1] : "unknown";
}

SuiteResult run_suite(int id, std::uint64_t seed)
{
	switch (id)
	{
	case 1:
		return necklaces(id);
	case 2:
		return product_example(id);
	case 3:
		return commutativity(id, seed);
	case 4:
		return schouten_skew(id, seed);
	case 5:
		return schouten_prop1_jacobi(id, seed);
	case 6:
		return skew_is_hamiltonian(id, seed);
	case 7:
		return criterion_equivalence(id);
	case 8:
		return substitution(id, seed);
	case 9:
		return adjoints(id, seed);
	}
	return SuiteResult{id, "unknown", false, "no such suite"};
}

std::optional<std::array<CyclicSum, 3>> nonassociativity_witness(int max_length)
{
	// All necklaces over a1..a3 of length 1..max_length.
	std::vector<CyclicSum> words;
	for (int len = 1; len <= max_length; ++len)
	{
		std::vector<int> idx(static_cast<std::size_t>(len), 1);
		while (true)
		{
			Letters s;
			for (int f : idx)
				s.push_back(Letter::even(f));
			const Normalized n = normalize(s);
			if (n.sign == 1 && n.word->letters() == s)
				words.push_back(CyclicSum::of_letters(s));
			std::size_t k = 0;
			while (k < idx.size() && ++idx[k] > 3)
				idx[k++] = 1;
			if (k == idx.size())
				break;
		}
	}
	for (const auto &f : words)
		for (const auto &g : words)
		{
			const CyclicSum fg = times(f, g);
			for (const auto &h : words)
				if (times(fg, h) != times(f, times(g, h)))
					return std::array<CyclicSum, 3>{f, g, h};
		}
	return std::nullopt;
}

} // namespace ncjet
