#pragma once

#include "ncjet/formal_sum.hpp"
#include "ncjet/jet.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncjet {

struct SuiteResult
{
	int id = 0;
	std::string name;
	bool passed = false;
	/// One line describing what was checked, or the first failure.
	std::string detail;
};

inline constexpr int kSuiteCount = 9;

const char *suite_name(int id);

/// Runs the invariant suite `id` (1..kSuiteCount) with the given seed.
SuiteResult run_suite(int id, std::uint64_t seed);

/// First triple (f, g, h) of single necklaces of length <= max_length over
/// the letters a1..a3 with (f x g) x h != f x (g x h).
std::optional<std::array<CyclicSum, 3>> nonassociativity_witness(int max_length = 3);

} // namespace ncjet
