// The chromatic splitting bookkeeping: the exterior-algebra series
// eps_k(T), five independent routes to the Poincare polynomial L_n(T),
// the combinatorial enumerators behind them, the wedge-of-unitary-groups
// model, and a cross-validating verifier.
//
// The routes, all exact over Z[T]:
//   l_direct      sum over index sequences I of T^{|I|+1} L_{n-1-i_l}
//   l_recursive   Lt_n = sum_{k<n} eps_{n-k-1} Lt_k, L_n = T^{2n} Lt_n
//   l_genfun      coefficient of u^n in (1 - sum_k eps_{k-1} (uT^2)^k)^{-1}
//   l_closed_form T^{2n} sum over compositions (k_1..k_r) of prod eps_{k_j-1}
//   spectrum      Poincare series of \/ S^{2n} (prod U(k_j - 1))_+

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lseries/polynomial.hpp"

namespace lseries {

// Strictly increasing 0 <= i_1 < ... < i_l < n, nonempty.
struct IndexSequence {
	int n = 0; // ambient height
	std::vector<int> indices;

	IndexSequence(int n, std::vector<int> indices);

	// |I| = 2 * sum(indices) + length, always >= 1
	Exponent weight() const;

	friend bool operator==(const IndexSequence &, const IndexSequence &) = default;
};

// Ordered list of positive integers with sum n.
struct Composition {
	std::vector<int> parts;

	explicit Composition(std::vector<int> parts);

	int total() const;

	friend bool operator==(const Composition &, const Composition &) = default;
};

// A partition of n recorded as counts m_j of parts equal to j; it
// collapses r!/prod m_j! compositions, r = sum m_j.
struct PartitionWithMultiplicity {
	std::map<int, int> multiplicities;

	explicit PartitionWithMultiplicity(std::map<int, int> multiplicities);

	int total() const;      // n = sum j * m_j
	int part_count() const; // r = sum m_j

	// r! / prod_j m_j!
	Integer composition_count() const;

	friend bool operator==(const PartitionWithMultiplicity &,
	                       const PartitionWithMultiplicity &) = default;
};

// One wedge summand S^{susp} (prod_j U(rank_j))_+; rank 0 is a point.
struct WedgeSummand {
	Exponent suspension = 0;
	std::vector<int> unitary_ranks;

	// T^{suspension} * prod_j unitary_poincare(rank_j)
	Polynomial poincare() const;

	friend bool operator==(const WedgeSummand &, const WedgeSummand &) = default;
};

// Lt_n(T) = T^{-2n} L_n(T); coefficients are non-negative and the
// constant term is 2^{n-1} for n >= 1 (1 for n = 0).
struct NormalizedL {
	int n = 0;
	Polynomial poly;

	Polynomial full() const; // T^{2n} * poly
};

// eps_k(T) = prod_{i=0}^{k-1} (1 + T^{2i+1}): Poincare series of an
// exterior algebra on generators in degrees 1, 3, ..., 2k-1. Cached;
// the cache is append-only, entries are never mutated.
const Polynomial &epsilon(int k);

// prod_{i=1}^{k} (1 + T^{2i-1}): rational cohomology of U(k).
// Coincides with epsilon(k) identically; kept as a separate computation
// so the identity stays checkable.
Polynomial unitary_poincare(int k);

// All 2^n - 1 index sequences in [0, n-1], lexicographic. n >= 1.
std::vector<IndexSequence> enumerate_index_sequences(int n);

// All 2^{n-1} compositions of n, first part descending. n >= 1.
std::vector<Composition> enumerate_compositions(int n);

// All partitions of n, parts descending, reverse-lexicographic. n >= 1.
std::vector<PartitionWithMultiplicity> enumerate_partitions(int n);

// Route 1: the index-sequence sum, memoized by height.
Polynomial l_direct(int n);

// Route 2: the normalized recursion; l_recursive returns T^{2n} Lt_n.
NormalizedL l_normalized(int n);
Polynomial l_recursive(int n);

// Route 3: invert the master generating function at truncation order
// trunc (trunc >= n) and read off the u^n coefficient.
Polynomial l_genfun(int n, Exponent trunc);

// Route 4: sum over compositions.
Polynomial l_closed_form(int n);

// Partition-collapsed form of route 4: T^{2n} * sum over partitions of
// (r!/prod m_j!) prod_j eps_{j-1}^{m_j}. Must equal l_closed_form.
Polynomial l_multinomial(int n);

// Route 5: one summand per composition (k_1..k_r): suspension 2n,
// unitary ranks (k_1 - 1, ..., k_r - 1). n >= 1.
std::vector<WedgeSummand> spectrum_summands(int n);
Polynomial spectrum_poincare(int n);

// L_n(1): 1 for n = 0, 3^{n-1} for n >= 1.
Integer total_rank(int n);

struct CheckRecord {
	int height = 0;
	std::string check;
	bool pass = false;
	std::string counterexample; // empty when the check passes
};

struct VerificationReport {
	std::vector<CheckRecord> records; // ordered by (height, check)

	bool all_passed() const;
	const CheckRecord *first_failure() const; // nullptr when all pass
};

// Replaces the eps source feeding the eps-dependent routes and checks;
// used to prove the verifier catches a corrupted input (fault injection).
struct VerifyHooks {
	std::function<Polynomial(int)> epsilon; // empty = the real epsilon
};

// For 0 <= n <= n_max: route agreement, the 3^{n-1} counting law, the
// edge-coefficient and degree laws, eps palindromicity, and
// eps_k = unitary_poincare(k). Failures are report content, not errors.
VerificationReport verify(int n_max);
VerificationReport verify(int n_max, const VerifyHooks &hooks);

} // namespace lseries
