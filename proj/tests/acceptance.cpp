// One line per acceptance criterion; exits nonzero when any of them fails.

#include "helpers.hpp"
#include "oracles.hpp"

#include "ncjet/corpus.hpp"
#include "ncjet/poisson.hpp"
#include "ncjet/schouten.hpp"
#include "ncjet/syntax.hpp"
#include "ncjet/variational.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sys/wait.h>
#include <string>
#include <vector>

using namespace ncjet;
using testing::evens;

namespace {

constexpr std::uint64_t kSeed = 20261015;

struct Outcome
{
	bool ok = true;
	std::string detail;

	void require(bool cond, const std::string &what)
	{
		if (!cond && ok)
		{
			ok = false;
			detail = what;
		}
	}
};

Outcome necklaces()
{
	Outcome o;
	const auto ref = normalize(evens({1, 1, 2, 3, 3}));
	const auto brute = oracle::normalize(evens({1, 1, 2, 3, 3}));
	o.require(brute && ref.word && ref.word->letters() == brute->first, "canonical form differs from enumeration");
	for (auto w : {evens({1, 2, 3, 3, 1}), evens({2, 3, 3, 1, 1}), evens({3, 3, 1, 1, 2}), evens({3, 1, 1, 2, 3})})
	{
		const auto n = normalize(w);
		o.require(n.word == ref.word && n.sign == 1, "a rotation of aabcc has another normal form");
	}
	o.require(normalize(evens({1, 2, 1, 3, 3})).word != ref.word, "abacc has the normal form of aabcc");
	o.detail = o.ok ? "aabcc, abcca, bccaa, ccaab, caabc -> " + to_string(CyclicSum::of_letters(evens({1, 1, 2, 3, 3})), JetContext{1, 3}) + "; abacc differs" : o.detail;
	return o;
}

Outcome product_example()
{
	Outcome o;
	const JetContext ctx{1, 4};
	const CyclicSum f = parse_density("cyc(a1*a2)", ctx);
	const CyclicSum g = parse_density("cyc(a3*a4)", ctx);
	const CyclicSum expected =
	    parse_density("1/4*cyc(a1*a2*a3*a4) + 1/4*cyc(a2*a1*a3*a4) + 1/4*cyc(a1*a2*a4*a3) + 1/4*cyc(a2*a1*a4*a3)", ctx);
	o.require(times(f, g) == expected, "a1a2 x a3a4 is not the four-term sum");
	o.require(times(g, f) == expected, "a3a4 x a1a2 is not the four-term sum");
	o.require(expected.size() == 4, "expected sum does not have four words");
	if (o.ok)
		o.detail = to_string(expected, ctx);
	return o;
}

Outcome commutativity()
{
	Outcome o;
	JetContext ctx;
	ctx.m = 3;
	Random rng(kSeed);
	for (int i = 0; i < 200; ++i)
	{
		WordShape shape;
		shape.max_length = 3;
		shape.max_order = 1;
		shape.x_degree = 1;
		const CyclicSum f = random_density(rng, ctx, shape);
		const CyclicSum g = random_density(rng, ctx, shape);
		o.require(times(f, g) == times(g, f), fmt::format("pair {} does not commute", i));
	}

	// exhaustive search with the brute force product
	std::vector<oracle::Terms> words;
	for (int len = 1; len <= 3; ++len)
	{
		std::vector<int> idx(len, 1);
		for (bool more = true; more;)
		{
			Letters s;
			for (int f : idx)
				s.push_back(Letter::even(f));
			if (auto n = oracle::normalize(s); n && n->first == s)
				words.push_back(oracle::Terms{{s, Poly(1)}});
			std::size_t k = 0;
			while (k < idx.size() && ++idx[k] > 3)
				idx[k++] = 1;
			more = k < idx.size();
		}
	}
	std::string witness;
	for (std::size_t i = 0; i < words.size() && witness.empty(); ++i)
		for (std::size_t j = 0; j < words.size() && witness.empty(); ++j)
		{
			const auto fg = oracle::times(words[i], words[j]);
			for (std::size_t k = 0; k < words.size() && witness.empty(); ++k)
			{
				if (oracle::times(fg, words[k]) == oracle::times(words[i], oracle::times(words[j], words[k])))
					continue;
				auto cyc = [](const oracle::Terms &t) {
					CyclicSum s;
					for (const auto &[w, c] : t)
						s.add_letters(w, c);
					return s;
				};
				const CyclicSum f = cyc(words[i]), g = cyc(words[j]), h = cyc(words[k]);
				o.require(times(times(f, g), h) != times(f, times(g, h)), "engine product is associative on the witness");
				witness = fmt::format("({}, {}, {})", to_string(f, JetContext{1, 3}), to_string(g, JetContext{1, 3}),
				                      to_string(h, JetContext{1, 3}));
			}
		}
	o.require(!witness.empty(), "no nonassociative triple of length <= 3");
	if (o.ok)
		o.detail = "200 pairs commute; nonassociative triple " + witness;
	return o;
}

Outcome schouten_skew()
{
	Outcome o;
	const JetContext ctx;
	Random rng(kSeed + 4);
	int checked = 0;
	for (int i = 0; i < 100; ++i)
	{
		const Multivector xi = random_multivector(rng, ctx, rng.uniform(0, 3));
		const Multivector eta = random_multivector(rng, ctx, rng.uniform(0, 3));
		o.require(check_skew(xi, eta, ctx), fmt::format("pair {} (degrees {}, {})", i, xi.degree, eta.degree));
		++checked;
	}
	if (o.ok)
		o.detail = fmt::format("{} pairs of degrees 0..3, length <= 4, order <= 3", checked);
	return o;
}

Outcome prop1_jacobi()
{
	Outcome o;
	const JetContext ctx;
	Random rng(kSeed + 5);
	for (int i = 0; i < 50; ++i)
	{
		const Multivector xi = random_multivector(rng, ctx, rng.uniform(0, 3));
		const Multivector eta = random_multivector(rng, ctx, rng.uniform(0, 3));
		o.require(check_prop1(xi, eta, ctx), fmt::format("commutator rule fails on pair {}", i));
	}
	for (int i = 0; i < 50; ++i)
	{
		const Multivector xi = random_multivector(rng, ctx, rng.uniform(0, 3));
		const Multivector eta = random_multivector(rng, ctx, rng.uniform(0, 3));
		const Multivector omega = random_multivector(rng, ctx, rng.uniform(0, 3));
		o.require(check_jacobi(xi, eta, omega, ctx), fmt::format("Jacobi fails on triple {}", i));
	}
	if (o.ok)
		o.detail = "50 pairs for [Q^xi, Q^eta] = Q^[[xi,eta]], 50 Jacobi triples";
	return o;
}

Outcome hamiltonian_examples()
{
	Outcome o;
	const JetContext ctx;
	Random rng(kSeed + 6);
	for (auto [text, constant] : {std::pair{"op(D)", true}, std::pair{"op(D^3)", true},
	                              std::pair{"op(x*D*1 + 1*D*x)", false}, std::pair{"op(D + D^3)", true}})
	{
		const DifferentialOperator a = parse_operator(text, ctx);
		const HamiltonianReport r = is_hamiltonian(a, ctx);
		o.require(r.hamiltonian && r.defect.is_zero(), fmt::format("{} is not Hamiltonian", text));
		if (!constant)
			continue;
		for (int i = 0; i < 10; ++i)
			for (const auto &c : involutivity_witness(a, random_jet_covector(rng, ctx), random_jet_covector(rng, ctx), ctx))
				o.require(c.is_zero(), fmt::format("involutivity witness of {} is nonzero", text));
	}
	if (o.ok)
		o.detail = "D, D^3, xD+Dx, D+D^3 have zero master defect; witnesses vanish for D, D^3, D+D^3";
	return o;
}

Outcome criterion_equivalence()
{
	Outcome o;
	const JetContext ctx;
	const std::vector<CyclicSum> corpus = functional_corpus(ctx);
	std::vector<oracle::Terms> brute;
	for (const auto &h : corpus)
		brute.push_back(oracle::from(h));
	int certified = 0;
	std::string example;
	for (const auto &c : operator_corpus(ctx))
	{
		const HamiltonianReport r = is_hamiltonian(c.op, ctx, corpus);
		bool jacobi_ok = true;
		for (std::size_t i = 0; i < brute.size() && jacobi_ok; ++i)
			for (std::size_t j = i + 1; j < brute.size() && jacobi_ok; ++j)
				for (std::size_t k = j + 1; k < brute.size() && jacobi_ok; ++k)
					jacobi_ok = oracle::trivial(oracle::jacobi(c.op, brute[i], brute[j], brute[k]), 1);
		o.require(r.hamiltonian == r.defect.is_zero(), fmt::format("report of {} is inconsistent", c.name));
		o.require(r.hamiltonian == jacobi_ok, fmt::format("master equation and Jacobi disagree on {}", c.name));
		if (r.hamiltonian)
			continue;
		o.require(r.witness.has_value(), fmt::format("no witness for {}", c.name));
		if (!r.witness)
			continue;
		const auto &[h1, h2, h3] = *r.witness;
		const bool confirmed = !oracle::trivial(oracle::jacobi(c.op, oracle::from(h1), oracle::from(h2), oracle::from(h3)), 1);
		o.require(confirmed, fmt::format("brute force Jacobi does not confirm the witness for {}", c.name));
		if (confirmed && certified++ == 0)
			example = fmt::format("{} via ({}, {}, {})", c.name, to_string(h1, ctx), to_string(h2, ctx), to_string(h3, ctx));
	}
	o.require(certified > 0, "no a-dependent operator certified non-Hamiltonian");
	if (o.ok)
		o.detail = fmt::format("{} operators, {} functionals; {} certified non-Hamiltonian, e.g. {}",
		                       operator_corpus(ctx).size(), corpus.size(), certified, example);
	return o;
}

Outcome substitution()
{
	Outcome o;
	const JetContext ctx;
	int shipped = 0;
	for (const auto &identity : substitution_identities())
	{
		if (!substitution_harness(identity, CovectorClass::XOnly, 100, kSeed, ctx).ok())
			continue;
		++shipped;
		const auto jet = substitution_harness(identity, CovectorClass::JetDependent, 100, kSeed, ctx);
		o.require(jet.ok(), fmt::format("{} fails on jet-dependent covectors", identity.name));
		const auto again = substitution_harness(identity, CovectorClass::JetDependent, 100, kSeed, ctx);
		o.require(again.passed == jet.passed && again.first_failure == jet.first_failure,
		          fmt::format("{} is not reproducible", identity.name));
	}
	o.require(shipped > 0, "no identity passes on x-only covectors");
	if (o.ok)
		o.detail = fmt::format("{} identities, 100 x-only and 100 jet-dependent covectors each", shipped);
	return o;
}

Outcome adjoint_layer()
{
	Outcome o;
	const JetContext ctx;
	Random rng(kSeed + 9);
	for (int i = 0; i < 100; ++i)
	{
		const DifferentialOperator a = random_operator(rng, ctx);
		const DifferentialOperator at = adjoint(a, ctx);
		o.require(adjoint(at, ctx) == a, fmt::format("involution fails on operator {}", i));
		if (i % 4 == 0)
		{
			const Covector p1 = random_jet_covector(rng, ctx);
			const Covector p2 = random_jet_covector(rng, ctx);
			const auto lhs = oracle::close(oracle::product(oracle::from(p1[0]), oracle::apply(a, {oracle::from(p2[0])})[0]));
			const auto rhs = oracle::close(oracle::product(oracle::from(p2[0]), oracle::apply(at, {oracle::from(p1[0])})[0]));
			auto diff = lhs;
			for (const auto &[w, c] : rhs)
				oracle::accumulate(diff, w, -c);
			o.require(oracle::trivial(diff, 1), fmt::format("coupling identity fails on operator {}", i));
		}
	}
	for (int i = 0; i < 20; ++i)
	{
		const Multivector p = random_multivector(rng, ctx, 2);
		const DifferentialOperator a = p.bivector_operator();
		o.require(adjoint(a, ctx) == -a, fmt::format("bi-vector operator {} is not skew", i));
	}
	if (o.ok)
		o.detail = "(A^+)^+ = A on 100 operators, 25 coupling probes, 20 bi-vectors with A^+ = -A";
	return o;
}

std::pair<int, std::string> run(const std::string &command)
{
	std::string out;
	FILE *pipe = popen((command + " 2>&1").c_str(), "r");
	if (!pipe)
		return {-1, out};
	char buf[4096];
	while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
		out.append(buf, n);
	const int status = pclose(pipe);
	return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli()
{
	Outcome o;
	const std::string exe = NCJET_CLI;
	const std::string corpus = NCJET_TEST_DATA "/expressions.txt";

	const auto [status, report] = run(exe + " --output machine selftest");
	o.require(status == 0, fmt::format("selftest exited with {}:\n{}", status, report));

	const auto first = run(exe + " --output machine normalize @" + corpus);
	o.require(first.first == 0, "normalize failed on the corpus: " + first.second);
	const std::string printed_path = "acceptance_printed.txt";
	int values = 0;
	{
		std::FILE *f = std::fopen(printed_path.c_str(), "w");
		std::size_t pos = 0;
		const std::string &text = first.second;
		while (pos < text.size())
		{
			std::size_t end = text.find('\n', pos);
			if (end == std::string::npos)
				end = text.size();
			const std::string line = text.substr(pos, end - pos);
			if (line.rfind("result", 0) == 0)
			{
				const std::string value = line.substr(line.find(": ") + 2);
				std::fputs((value + "\n").c_str(), f);
				++values;
			}
			pos = end + 1;
		}
		std::fclose(f);
	}
	const auto second = run(exe + " --output machine normalize @" + printed_path);
	o.require(values > 20 && second.first == 0 && second.second == first.second,
	          "printing and reparsing the corpus changes a value");

	const std::string harness = " --output machine --seed 7 subst-check jacobi-xdx --trials 20";
	const auto r1 = run(exe + harness), r2 = run(exe + harness);
	const auto w1 = run(exe + " --output machine --seed 7 witness \"op(a*D*1 + 1*D*a)\" \"a*a_x\" \"a_x\"");
	const auto w2 = run(exe + " --output machine --seed 7 witness \"op(a*D*1 + 1*D*a)\" \"a*a_x\" \"a_x\"");
	o.require(r1.first == 0 && r1.second == r2.second && w1.second == w2.second,
	          "machine output differs between identical runs");
	if (o.ok)
		o.detail = fmt::format("selftest exit 0; {} corpus values round-trip; repeated runs byte-identical", values);
	return o;
}

} // namespace

int main()
{
	const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
	    {"necklace equivalences", necklaces},
	    {"product example", product_example},
	    {"commutativity and nonassociativity", commutativity},
	    {"schouten skew symmetry", schouten_skew},
	    {"commutator rule and jacobi", prop1_jacobi},
	    {"hamiltonian examples", hamiltonian_examples},
	    {"criterion equivalence", criterion_equivalence},
	    {"substitution principle", substitution},
	    {"adjoint layer", adjoint_layer},
	    {"cli", cli},
	};
	int failed = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i)
	{
		const auto start = std::chrono::steady_clock::now();
		Outcome o;
		try
		{
			o = criteria[i].second();
		}
		catch (const std::exception &e)
		{
			o.ok = false;
			o.detail = std::string("exception: ") + e.what();
		}
		const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
		fmt::print("criterion {:2} {} {}: {} [{} ms]\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first, o.detail, ms);
		std::fflush(stdout);
		failed += !o.ok;
	}
	fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
	return failed == 0 ? 0 : 1;
}
