// Command line front end for the ncjet engine.

#include "ncjet/corpus.hpp"
#include "ncjet/error.hpp"
#include "ncjet/poisson.hpp"
#include "ncjet/schouten.hpp"
#include "ncjet/suites.hpp"
#include "ncjet/syntax.hpp"
#include "ncjet/variational.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <future>
#include <string>
#include <utility>
#include <vector>

using namespace ncjet;

namespace {

struct Session
{
	JetContext ctx;
	std::uint64_t seed = 1;
	std::string output = "pretty";
};

/// Ordered key/value lines of one command's result.
class Report
{
  public:
	void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
	void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }

	void print(const std::string &command, bool machine) const
	{
		if (machine)
		{
			fmt::print("command: {}\n", command);
			for (const auto &[k, v] : lines_)
				fmt::print("{}: {}\n", k, v);
			return;
		}
		std::size_t width = 0;
		for (const auto &[k, v] : lines_)
			width = std::max(width, k.size());
		for (const auto &[k, v] : lines_)
			fmt::print("{:<{}}  {}\n", k, width, v);
	}

  private:
	std::vector<std::pair<std::string, std::string>> lines_;
};

/// Expands @file arguments into the expressions listed in the file.
std::vector<std::string> expand(const std::vector<std::string> &args)
{
	std::vector<std::string> r;
	for (const auto &a : args)
	{
		if (a.size() > 1 && a[0] == '@')
		{
			auto lines = read_expression_file(a.substr(1));
			r.insert(r.end(), lines.begin(), lines.end());
		}
		else
			r.push_back(a);
	}
	return r;
}

void need(const std::vector<std::string> &args, std::size_t count, const char *usage)
{
	if (args.size() != count)
		throw ParseError(fmt::format("expected {} argument(s): {}", count, usage), 0);
}

int run(const std::string &command, const std::vector<std::string> &raw, const Session &s,
        const std::map<std::string, std::string> &opts)
{
	const JetContext &ctx = s.ctx;
	const std::vector<std::string> args = expand(raw);
	auto opt = [&](const char *name) -> std::string {
		auto it = opts.find(name);
		return it == opts.end() ? std::string() : it->second;
	};
	Report report;
	int status = 0;

	if (command == "normalize")
	{
		if (args.empty())
			throw ParseError("expected at least one expression", 0);
		if (args.size() == 1)
			report.add("result", to_string(parse_value(args[0], ctx), ctx));
		else
			for (std::size_t i = 0; i < args.size(); ++i)
				report.add(fmt::format("result.{}", i + 1), to_string(parse_value(args[i], ctx), ctx));
	}
	else if (command == "times")
	{
		need(args, 2, "F G");
		report.add("result", to_string(times(parse_density(args[0], ctx), parse_density(args[1], ctx)), ctx));
	}
	else if (command == "tderiv")
	{
		need(args, 1, "F");
		const int dir = opt("dir").empty() ? 1 : std::stoi(opt("dir"));
		Value v = parse_value(args[0], ctx);
		if (auto *c = std::get_if<CyclicSum>(&v))
			report.add("result", to_string(total_derivative(*c, dir, ctx), ctx));
		else if (auto *o = std::get_if<OpenSum>(&v))
			report.add("result", to_string(total_derivative(*o, dir, ctx), ctx));
		else
			throw ParseError("tderiv expects an open sum or a density", 0);
	}
	else if (command == "euler")
	{
		need(args, 1, "F");
		const CyclicSum f = parse_density(args[0], ctx);
		const Side side = opt("side") == "right" ? Side::Right : Side::Left;
		report.add("delta_a", to_string(euler_derivatives(f, LetterKind::Even, ctx, side), ctx));
		report.add("delta_b", to_string(euler_derivatives(f, LetterKind::Odd, ctx, side), ctx));
	}
	else if (command == "is-trivial")
	{
		need(args, 1, "F");
		const CyclicSum f = parse_density(args[0], ctx);
		report.add("result", is_trivial(f, ctx));
		report.add("reduced", to_string(reduce(f, ctx), ctx));
	}
	else if (command == "adjoint")
	{
		need(args, 1, "OP");
		const DifferentialOperator a = parse_operator(args[0], ctx);
		const DifferentialOperator adj = adjoint(a, ctx);
		report.add("result", to_string(adj, ctx));
		report.add("skew_adjoint", (a + adj).is_zero());
	}
	else if (command == "couple")
	{
		need(args, 2, "P PHI");
		const CyclicSum f = coupling(parse_covector(args[0], ctx), parse_covector(args[1], ctx));
		report.add("result", to_string(f, ctx));
		report.add("reduced", to_string(reduce(f, ctx), ctx));
	}
	else if (command == "schouten")
	{
		need(args, 2, "XI ETA");
		const Multivector xi = normalize_multivector(parse_density(args[0], ctx), ctx);
		const Multivector eta = normalize_multivector(parse_density(args[1], ctx), ctx);
		const Multivector r = opts.count("coordinate") ? schouten_coordinate(xi, eta, ctx)
		                                               : schouten_bracket(xi, eta, ctx);
		report.add("degree", std::to_string(r.degree));
		report.add("result", to_string(r.density, ctx));
	}
	else if (command == "evaluate")
	{
		if (args.empty())
			throw ParseError("expected XI P1 ... Pk", 0);
		const Multivector xi = normalize_multivector(parse_density(args[0], ctx), ctx);
		std::vector<Covector> ps;
		for (std::size_t i = 1; i < args.size(); ++i)
			ps.push_back(parse_covector(args[i], ctx));
		report.add("result", to_string(evaluate(xi, ps, ctx), ctx));
	}
	else if (command == "qfield")
	{
		need(args, 1, "XI");
		const Multivector xi = normalize_multivector(parse_density(args[0], ctx), ctx);
		report.add("degree", std::to_string(xi.degree));
		report.add("result", to_string(q_field(xi, ctx), ctx));
	}
	else if (command == "poisson")
	{
		need(args, 3, "H1 H2 OP");
		report.add("result", to_string(poisson_bracket(parse_density(args[0], ctx), parse_density(args[1], ctx),
		                                               parse_operator(args[2], ctx), ctx),
		                               ctx));
	}
	else if (command == "jacobi")
	{
		need(args, 4, "OP H1 H2 H3");
		const CyclicSum d = jacobi_defect(parse_operator(args[0], ctx), parse_density(args[1], ctx),
		                                  parse_density(args[2], ctx), parse_density(args[3], ctx), ctx);
		report.add("trivial", d.is_zero());
		report.add("defect", to_string(d, ctx));
	}
	else if (command == "is-hamiltonian")
	{
		need(args, 1, "OP");
		const HamiltonianReport r = is_hamiltonian(parse_operator(args[0], ctx), ctx);
		report.add("result", r.hamiltonian);
		report.add("defect", to_string(r.defect.density, ctx));
		if (r.witness)
			for (int i = 0; i < 3; ++i)
				report.add(fmt::format("witness.{}", i + 1), to_string((*r.witness)[i], ctx));
	}
	else if (command == "witness")
	{
		need(args, 3, "OP P1 P2");
		const auto w = involutivity_witness(parse_operator(args[0], ctx), parse_covector(args[1], ctx),
		                                    parse_covector(args[2], ctx), ctx);
		report.add("zero", std::all_of(w.begin(), w.end(), [](const OpenSum &x) { return x.is_zero(); }));
		report.add("result", to_string(Covector(w), ctx));
	}
	else if (command == "subst-check")
	{
		const int trials = opt("trials").empty() ? 100 : std::stoi(opt("trials"));
		std::vector<const SubstitutionIdentity *> ids;
		if (args.empty())
			for (const auto &id : substitution_identities())
				ids.push_back(&id);
		for (const auto &name : args)
			ids.push_back(&find_identity(name));
		for (const auto *id : ids)
		{
			const auto x = substitution_harness(*id, CovectorClass::XOnly, trials, s.seed, ctx);
			const auto jet = substitution_harness(*id, CovectorClass::JetDependent, trials, s.seed, ctx);
			const auto exact = substitution_harness(*id, CovectorClass::Exact, trials, s.seed, ctx);
			for (const auto *r : {&x, &jet, &exact})
			{
				report.add(fmt::format("{}.{}", id->name, to_string(r->covectors)),
				           fmt::format("{}/{}", r->passed, r->trials));
				if (!r->ok())
					status = static_cast<int>(ErrorKind::IdentityFailure);
			}
		}
	}
	else if (command == "selftest")
	{
		std::vector<int> ids;
		if (!opt("suite").empty())
			ids.push_back(std::stoi(opt("suite")));
		else
			for (int i = 1; i <= kSuiteCount; ++i)
				ids.push_back(i);
		std::vector<std::future<SuiteResult>> jobs;
		for (int id : ids)
			jobs.push_back(std::async(std::launch::async, run_suite, id, s.seed));
		for (auto &job : jobs)
		{
			const SuiteResult r = job.get();
			report.add(fmt::format("suite.{}", r.id),
			           fmt::format("{} {}: {}", r.passed ? "pass" : "FAIL", r.name, r.detail));
			if (!r.passed)
				status = static_cast<int>(ErrorKind::IdentityFailure);
		}
	}
	report.print(command, s.output == "machine");
	return status;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Symbolic calculus on noncommutative cyclic jet spaces"};
	app.require_subcommand(1);
	app.fallthrough();
	app.set_config("--config", "", "Read options from a TOML/INI file; flags on the command line win");

	Session s;
	app.add_option("--n", s.ctx.n, "Base dimension")->check(CLI::Range(1, static_cast<int>(kMaxBaseDim)));
	app.add_option("--m", s.ctx.m, "Number of fields")->check(CLI::Range(1, 255));
	app.add_option("--max-order", s.ctx.max_order, "Bound on the total order of jet letters")
	    ->check(CLI::NonNegativeNumber);
	app.add_option("--seed", s.seed, "Seed for random harnesses");
	app.add_option("--output", s.output, "Output mode")->check(CLI::IsMember({"pretty", "machine"}));

	struct Command
	{
		const char *name;
		const char *help;
	};
	static constexpr Command commands[] = {
	    {"normalize", "Canonical form of expressions"},
	    {"times", "The product F x G of two densities"},
	    {"tderiv", "Total derivative"},
	    {"euler", "Variational derivatives"},
	    {"is-trivial", "Whether a density is a total divergence"},
	    {"adjoint", "Adjoint of an operator"},
	    {"couple", "Coupling <P, PHI>"},
	    {"schouten", "Schouten bracket of two multivectors"},
	    {"evaluate", "Evaluate a k-vector on k covectors"},
	    {"qfield", "Generating section of Q^xi"},
	    {"poisson", "Poisson bracket {H1, H2} of an operator"},
	    {"jacobi", "Jacobi defect of an operator on three functionals"},
	    {"is-hamiltonian", "Hamiltonian test through the master equation"},
	    {"witness", "Involutivity witness A([[p1, p2]]_A)"},
	    {"subst-check", "Substitution principle harness"},
	    {"selftest", "Run the invariant suites"},
	};

	std::vector<std::string> args;
	std::map<std::string, std::string> opts;
	std::string chosen;
	for (const auto &c : commands)
	{
		CLI::App *sub = app.add_subcommand(c.name, c.help);
		sub->add_option("args", args, "Expressions, or @file for one expression per line");
		sub->callback([&chosen, name = c.name] { chosen = name; });
		std::string name = c.name;
		if (name == "tderiv")
			sub->add_option_function<std::string>("--dir", [&opts](const std::string &v) { opts["dir"] = v; },
			                                      "Base direction (1-based)");
		if (name == "euler")
			sub->add_option_function<std::string>("--side", [&opts](const std::string &v) { opts["side"] = v; },
			                                      "left or right variation")
			    ->check(CLI::IsMember({"left", "right"}));
		if (name == "schouten")
			sub->add_flag_function("--coordinate", [&opts](std::int64_t) { opts["coordinate"] = "1"; },
			                       "Use the coordinate formula");
		if (name == "subst-check")
			sub->add_option_function<std::string>("--trials", [&opts](const std::string &v) { opts["trials"] = v; },
			                                      "Trials per covector class");
		if (name == "selftest")
			sub->add_option_function<std::string>("--suite", [&opts](const std::string &v) { opts["suite"] = v; },
			                                      "Run a single suite");
	}

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::Success &e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e);
		return static_cast<int>(ErrorKind::Parse);
	}

	try
	{
		s.ctx.validate();
		return run(chosen, args, s, opts);
	}
	catch (const Error &e)
	{
		fmt::print(stderr, "error: {}\n", e.what());
		return e.exit_code();
	}
	catch (const std::exception &e)
	{
		fmt::print(stderr, "error: {}\n", e.what());
		return static_cast<int>(ErrorKind::Parse);
	}
}
