#pragma once

#include "ncjet/schouten.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ncjet {

/// {H1, H2}_A = <delta H1/delta a, A(delta H2/delta a)>, reduced.
/// Throws PreconditionError unless A is skew-adjoint.
CyclicSum poisson_bracket(const CyclicSum &h1, const CyclicSum &h2, const DifferentialOperator &a,
                          const JetContext &ctx);

/// Cyclic sum of {{H1, H2}, H3}, reduced.
CyclicSum jacobi_defect(const DifferentialOperator &a, const CyclicSum &h1, const CyclicSum &h2,
                        const CyclicSum &h3, const JetContext &ctx);

/// The same defect through the expanded form: the signed sum over S_3 of
/// d_{A delta H3} (1/2 <delta H1, A delta H2>), reduced.
CyclicSum jacobi_defect_expanded(const DifferentialOperator &a, const CyclicSum &h1, const CyclicSum &h2,
                                 const CyclicSum &h3, const JetContext &ctx);

/// [[P, P]] for P = 1/2 <b, A(b)>.
Multivector master_defect(const DifferentialOperator &a, const JetContext &ctx);

/// Densities in the even letters used to look for Jacobi violations: all
/// words of length 2..max_length over the letters of jet order <= max_order,
/// one representative per necklace.
std::vector<CyclicSum> functional_corpus(const JetContext &ctx, int max_length = 3, int max_order = 1);

struct HamiltonianReport
{
	bool hamiltonian = false;
	Multivector defect;
	/// Functionals with a nontrivial Jacobi defect, when one was found.
	std::optional<std::array<CyclicSum, 3>> witness;
};

/// Decides whether the skew-adjoint operator A is Hamiltonian by the master
/// equation; on failure searches the functional corpus for a witness triple.
HamiltonianReport is_hamiltonian(const DifferentialOperator &a, const JetContext &ctx,
                                 const std::vector<CyclicSum> &search = {});

/// [A p1, A p2] - A(d_{A p1} p2 - d_{A p2} p1) = A([[p1, p2]]_A).
std::vector<OpenSum> involutivity_witness(const DifferentialOperator &a, const Covector &p1, const Covector &p2,
                                          const JetContext &ctx);

/// Kinds of covectors fed into a substitution identity.
enum class CovectorClass
{
	XOnly,
	JetDependent,
	Exact,
};

const char *to_string(CovectorClass c);

/// A named identity: a residual built from a fixed number of covector
/// arguments that must be a total divergence.
struct SubstitutionIdentity
{
	std::string name;
	int arity = 0;
	std::function<CyclicSum(const std::vector<Covector> &, const JetContext &)> residual;
};

const std::vector<SubstitutionIdentity> &substitution_identities();
/// Throws PreconditionError for an unknown name.
const SubstitutionIdentity &find_identity(const std::string &name);

struct SubstitutionReport
{
	std::string identity;
	CovectorClass covectors = CovectorClass::XOnly;
	int trials = 0;
	int passed = 0;
	/// Index of the first failing trial, if any.
	std::optional<int> first_failure;

	bool ok() const { return passed == trials; }
};

SubstitutionReport substitution_harness(const SubstitutionIdentity &identity, CovectorClass covectors,
                                        int trials, std::uint64_t seed, const JetContext &ctx);

} // namespace ncjet
