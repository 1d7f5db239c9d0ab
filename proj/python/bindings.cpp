#include "ncjet/error.hpp"
#include "ncjet/poisson.hpp"
#include "ncjet/schouten.hpp"
#include "ncjet/suites.hpp"
#include "ncjet/syntax.hpp"
#include "ncjet/variational.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ncjet;

namespace {

// Values cross the boundary as text in the expression grammar.
std::string show(const CyclicSum &f, const JetContext &ctx) { return to_string(f, ctx); }

Multivector multivector(const std::string &text, const JetContext &ctx)
{
	return normalize_multivector(parse_density(text, ctx), ctx);
}

LetterKind kind_of(const std::string &kind)
{
	if (kind == "a")
		return LetterKind::Even;
	if (kind == "b")
		return LetterKind::Odd;
	throw PreconditionError("kind must be 'a' or 'b'");
}

py::dict hamiltonian(const std::string &op, const JetContext &ctx)
{
	const HamiltonianReport r = is_hamiltonian(parse_operator(op, ctx), ctx);
	py::dict d;
	d["hamiltonian"] = r.hamiltonian;
	d["defect"] = show(r.defect.density, ctx);
	if (r.witness)
		d["witness"] = py::make_tuple(show((*r.witness)[0], ctx), show((*r.witness)[1], ctx), show((*r.witness)[2], ctx));
	else
		d["witness"] = py::none();
	return d;
}

py::dict subst_check(const std::string &name, int trials, std::uint64_t seed, const JetContext &ctx)
{
	const SubstitutionIdentity &id = find_identity(name);
	py::dict d;
	for (CovectorClass c : {CovectorClass::XOnly, CovectorClass::JetDependent, CovectorClass::Exact})
	{
		const SubstitutionReport r = substitution_harness(id, c, trials, seed, ctx);
		d[to_string(c)] = py::make_tuple(r.passed, r.trials);
	}
	return d;
}

} // namespace

PYBIND11_MODULE(_ncjet, m)
{
	m.doc() = "Symbolic calculus on noncommutative cyclic jet spaces";

	auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
	py::register_exception<ParseError>(m, "ParseError", error);
	py::register_exception<PreconditionError>(m, "PreconditionError", error);
	py::register_exception<ResourceError>(m, "ResourceError", error);

	py::class_<JetContext>(m, "Context")
	    .def(py::init([](int n, int m, int max_order) {
		         JetContext c{n, m, max_order};
		         c.validate();
		         return c;
	         }),
	         py::arg("n") = 1, py::arg("m") = 1, py::arg("max_order") = 32)
	    .def_readonly("n", &JetContext::n)
	    .def_readonly("m", &JetContext::m)
	    .def_readonly("max_order", &JetContext::max_order)
	    .def("__repr__", [](const JetContext &c) {
		    return "Context(n=" + std::to_string(c.n) + ", m=" + std::to_string(c.m) +
		           ", max_order=" + std::to_string(c.max_order) + ")";
	    });

	const JetContext dflt;
	auto ctx_arg = py::arg("ctx") = dflt;

	m.def(
	    "normalize", [](const std::string &text, const JetContext &ctx) { return to_string(parse_value(text, ctx), ctx); },
	    py::arg("text"), ctx_arg, "Canonical form of any expression.");
	m.def(
	    "times",
	    [](const std::string &f, const std::string &g, const JetContext &ctx) {
		    return show(times(parse_density(f, ctx), parse_density(g, ctx)), ctx);
	    },
	    py::arg("f"), py::arg("g"), ctx_arg);
	m.def(
	    "total_derivative",
	    [](const std::string &f, int dir, const JetContext &ctx) {
		    return show(total_derivative(parse_density(f, ctx), dir, ctx), ctx);
	    },
	    py::arg("f"), py::arg("dir") = 1, ctx_arg);
	m.def(
	    "euler",
	    [](const std::string &f, const std::string &kind, const JetContext &ctx) {
		    return to_string(euler_derivatives(parse_density(f, ctx), kind_of(kind), ctx), ctx);
	    },
	    py::arg("f"), py::arg("kind") = "a", ctx_arg);
	m.def(
	    "is_trivial", [](const std::string &f, const JetContext &ctx) { return is_trivial(parse_density(f, ctx), ctx); },
	    py::arg("f"), ctx_arg);
	m.def(
	    "reduce", [](const std::string &f, const JetContext &ctx) { return show(reduce(parse_density(f, ctx), ctx), ctx); },
	    py::arg("f"), ctx_arg);
	m.def(
	    "adjoint",
	    [](const std::string &op, const JetContext &ctx) { return to_string(adjoint(parse_operator(op, ctx), ctx), ctx); },
	    py::arg("op"), ctx_arg);
	m.def(
	    "is_skew_adjoint",
	    [](const std::string &op, const JetContext &ctx) { return is_skew_adjoint(parse_operator(op, ctx), ctx); },
	    py::arg("op"), ctx_arg);
	m.def(
	    "couple",
	    [](const std::string &p, const std::string &phi, const JetContext &ctx) {
		    return show(reduce(coupling(parse_covector(p, ctx), parse_covector(phi, ctx)), ctx), ctx);
	    },
	    py::arg("p"), py::arg("phi"), ctx_arg);
	m.def(
	    "schouten",
	    [](const std::string &xi, const std::string &eta, const JetContext &ctx) {
		    return show(schouten_bracket(multivector(xi, ctx), multivector(eta, ctx), ctx).density, ctx);
	    },
	    py::arg("xi"), py::arg("eta"), ctx_arg);
	m.def(
	    "evaluate",
	    [](const std::string &xi, const std::vector<std::string> &args, const JetContext &ctx) {
		    std::vector<Covector> ps;
		    for (const auto &a : args)
			    ps.push_back(parse_covector(a, ctx));
		    return show(evaluate(multivector(xi, ctx), ps, ctx), ctx);
	    },
	    py::arg("xi"), py::arg("args"), ctx_arg);
	m.def(
	    "poisson",
	    [](const std::string &h1, const std::string &h2, const std::string &op, const JetContext &ctx) {
		    return show(poisson_bracket(parse_density(h1, ctx), parse_density(h2, ctx), parse_operator(op, ctx), ctx), ctx);
	    },
	    py::arg("h1"), py::arg("h2"), py::arg("op"), ctx_arg);
	m.def(
	    "jacobi",
	    [](const std::string &op, const std::string &h1, const std::string &h2, const std::string &h3,
	       const JetContext &ctx) {
		    return show(jacobi_defect(parse_operator(op, ctx), parse_density(h1, ctx), parse_density(h2, ctx),
		                              parse_density(h3, ctx), ctx),
		                ctx);
	    },
	    py::arg("op"), py::arg("h1"), py::arg("h2"), py::arg("h3"), ctx_arg);
	m.def("is_hamiltonian", &hamiltonian, py::arg("op"), ctx_arg,
	      "Master equation test; returns hamiltonian, defect and an optional witness triple.");
	m.def("subst_check", &subst_check, py::arg("name"), py::arg("trials") = 100, py::arg("seed") = 1, ctx_arg);
	m.def("identities", [] {
		std::vector<std::string> names;
		for (const auto &id : substitution_identities())
			names.push_back(id.name);
		return names;
	});
	m.def(
	    "selftest",
	    [](int suite, std::uint64_t seed) {
		    py::gil_scoped_release release;
		    const SuiteResult r = run_suite(suite, seed);
		    py::gil_scoped_acquire acquire;
		    return py::make_tuple(r.passed, r.name, r.detail);
	    },
	    py::arg("suite"), py::arg("seed") = 1);
}
