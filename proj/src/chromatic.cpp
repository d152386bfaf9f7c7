#include "lseries/chromatic.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "lseries/series.hpp"

namespace lseries {

namespace {

using EpsFn = std::function<Polynomial(int)>;

Polynomial real_epsilon(int k)
{
	return epsilon(k);
}

// Extends table so it holds Lt_0..Lt_n of the normalized recursion
// Lt_n = sum_{0<=k<n} eps_{n-k-1} Lt_k, Lt_0 = 1.
void extend_normalized(std::vector<Polynomial> &table, int n, const EpsFn &eps)
{
	for (int m = static_cast<int>(table.size()); m <= n; ++m)
	{
		if (m == 0)
		{
			table.emplace_back(1);
			continue;
		}
		Polynomial s;
		for (int k = 0; k < m; ++k)
			s += eps(m - k - 1) * table[static_cast<std::size_t>(k)];
		table.push_back(std::move(s));
	}
}

Polynomial genfun_with(int n, Exponent trunc, const EpsFn &eps)
{
	if (n < 0)
		throw std::invalid_argument("l_genfun: negative height");
	if (trunc < n)
		throw std::out_of_range("l_genfun: truncation order " +
		                        std::to_string(trunc) + " cannot reach u^" +
		                        std::to_string(n));
	std::vector<Polynomial> cs(static_cast<std::size_t>(trunc) + 1);
	for (Exponent k = 1; k <= trunc; ++k)
		cs[static_cast<std::size_t>(k)] = eps(static_cast<int>(k) - 1);
	Series master = Series(std::move(cs)).substitute_u_scale(
	    Polynomial::monomial(1, 2));
	Series inv = (Series::constant(Polynomial(1), trunc) - master).inverse();
	return inv.coefficient_at(n);
}

Polynomial closed_form_with(int n, const EpsFn &eps)
{
	if (n < 0)
		throw std::invalid_argument("l_closed_form: negative height");
	if (n == 0)
		return Polynomial(1); // empty composition, empty product
	Polynomial sum;
	for (const Composition &comp : enumerate_compositions(n))
	{
		Polynomial prod(1);
		for (int part : comp.parts)
			prod *= eps(part - 1);
		sum += prod;
	}
	return Polynomial::monomial(1, 2 * static_cast<Exponent>(n)) * sum;
}

Polynomial multinomial_with(int n, const EpsFn &eps)
{
	if (n < 0)
		throw std::invalid_argument("l_multinomial: negative height");
	if (n == 0)
		return Polynomial(1);
	Polynomial sum;
	for (const PartitionWithMultiplicity &part : enumerate_partitions(n))
	{
		Polynomial prod(part.composition_count());
		for (const auto &[j, m] : part.multiplicities)
			prod *= pow(eps(j - 1), m);
		sum += prod;
	}
	return Polynomial::monomial(1, 2 * static_cast<Exponent>(n)) * sum;
}

// Wraps a replacement eps source with a per-call memo.
EpsFn memoized(std::function<Polynomial(int)> fn)
{
	auto memo = std::make_shared<std::map<int, Polynomial>>();
	return [fn = std::move(fn), memo](int k) -> Polynomial {
		auto it = memo->find(k);
		if (it != memo->end())
			return it->second;
		Polynomial v = fn(k);
		memo->emplace(k, v);
		return v;
	};
}

} // namespace

IndexSequence::IndexSequence(int n_, std::vector<int> indices_)
    : n(n_), indices(std::move(indices_))
{
	if (n < 1)
		throw std::invalid_argument("index sequence: height must be >= 1");
	if (indices.empty())
		throw std::invalid_argument("index sequence: must be nonempty");
	for (std::size_t i = 0; i < indices.size(); ++i)
	{
		if (indices[i] < 0 || indices[i] >= n)
			throw std::invalid_argument("index sequence: entry out of [0, n-1]");
		if (i > 0 && indices[i - 1] >= indices[i])
			throw std::invalid_argument("index sequence: not strictly increasing");
	}
}

Exponent IndexSequence::weight() const
{
	Exponent sum = 0;
	for (int i : indices)
		sum += i;
	return 2 * sum + static_cast<Exponent>(indices.size());
}

Composition::Composition(std::vector<int> parts_) : parts(std::move(parts_))
{
	if (parts.empty())
		throw std::invalid_argument("composition: must have at least one part");
	for (int p : parts)
		if (p < 1)
			throw std::invalid_argument("composition: parts must be positive");
}

int Composition::total() const
{
	int n = 0;
	for (int p : parts)
		n += p;
	return n;
}

PartitionWithMultiplicity::PartitionWithMultiplicity(
    std::map<int, int> multiplicities_)
    : multiplicities(std::move(multiplicities_))
{
	if (multiplicities.empty())
		throw std::invalid_argument("partition: must have at least one part");
	for (const auto &[j, m] : multiplicities)
		if (j < 1 || m < 1)
			throw std::invalid_argument("partition: parts and counts must be >= 1");
}

int PartitionWithMultiplicity::total() const
{
	int n = 0;
	for (const auto &[j, m] : multiplicities)
		n += j * m;
	return n;
}

int PartitionWithMultiplicity::part_count() const
{
	int r = 0;
	for (const auto &[j, m] : multiplicities)
		r += m;
	return r;
}

Integer PartitionWithMultiplicity::composition_count() const
{
	auto factorial = [](int m) {
		Integer f = 1;
		for (int i = 2; i <= m; ++i)
			f *= i;
		return f;
	};
	Integer count = factorial(part_count());
	for (const auto &[j, m] : multiplicities)
		count /= factorial(m);
	return count;
}

Polynomial WedgeSummand::poincare() const
{
	Polynomial p = Polynomial::monomial(1, suspension);
	for (int rank : unitary_ranks)
		p *= unitary_poincare(rank);
	return p;
}

Polynomial NormalizedL::full() const
{
	return Polynomial::monomial(1, 2 * static_cast<Exponent>(n)) * poly;
}

const Polynomial &epsilon(int k)
{
	if (k < 0)
		throw std::invalid_argument("epsilon: k must be >= 0");
	static std::mutex mutex;
	static std::deque<Polynomial> cache; // append-only; deque keeps refs stable
	std::scoped_lock lock(mutex);
	if (cache.empty())
		cache.emplace_back(1); // eps_0 = 1, the empty product
	while (static_cast<int>(cache.size()) <= k)
	{
		int j = static_cast<int>(cache.size()); // next index: eps_j
		cache.push_back(cache.back() *
		                (Polynomial(1) + Polynomial::monomial(1, 2 * (j - 1) + 1)));
	}
	return cache[static_cast<std::size_t>(k)];
}

Polynomial unitary_poincare(int k)
{
	if (k < 0)
		throw std::invalid_argument("unitary_poincare: k must be >= 0");
	Polynomial p(1);
	for (int i = 1; i <= k; ++i)
		p *= Polynomial(1) + Polynomial::monomial(1, 2 * i - 1);
	return p;
}

std::vector<IndexSequence> enumerate_index_sequences(int n)
{
	if (n < 1)
		throw std::invalid_argument("index sequences: height must be >= 1");
	std::vector<IndexSequence> out;
	out.reserve((std::size_t{1} << n) - 1);
	std::vector<int> prefix;
	auto extend = [&](auto &&self, int from) -> void {
		for (int i = from; i < n; ++i)
		{
			prefix.push_back(i);
			out.emplace_back(n, prefix);
			self(self, i + 1);
			prefix.pop_back();
		}
	};
	extend(extend, 0);
	return out;
}

std::vector<Composition> enumerate_compositions(int n)
{
	if (n < 1)
		throw std::invalid_argument("compositions: n must be >= 1");
	std::vector<Composition> out;
	out.reserve(std::size_t{1} << (n - 1));
	std::vector<int> prefix;
	auto extend = [&](auto &&self, int remaining) -> void {
		if (remaining == 0)
		{
			out.emplace_back(prefix);
			return;
		}
		for (int first = remaining; first >= 1; --first)
		{
			prefix.push_back(first);
			self(self, remaining - first);
			prefix.pop_back();
		}
	};
	extend(extend, n);
	return out;
}

std::vector<PartitionWithMultiplicity> enumerate_partitions(int n)
{
	if (n < 1)
		throw std::invalid_argument("partitions: n must be >= 1");
	std::vector<PartitionWithMultiplicity> out;
	std::vector<int> parts;
	auto extend = [&](auto &&self, int remaining, int max_part) -> void {
		if (remaining == 0)
		{
			std::map<int, int> mult;
			for (int p : parts)
				++mult[p];
			out.emplace_back(std::move(mult));
			return;
		}
		for (int p = std::min(remaining, max_part); p >= 1; --p)
		{
			parts.push_back(p);
			self(self, remaining - p, p);
			parts.pop_back();
		}
	};
	extend(extend, n, n);
	return out;
}

Polynomial l_direct(int n)
{
	if (n < 0)
		throw std::invalid_argument("l_direct: negative height");
	static std::mutex mutex;
	static std::vector<Polynomial> cache; // L_0..; append-only
	std::scoped_lock lock(mutex);
	for (int m = static_cast<int>(cache.size()); m <= n; ++m)
	{
		if (m == 0)
		{
			cache.emplace_back(1);
			continue;
		}
		Polynomial sum;
		for (const IndexSequence &seq : enumerate_index_sequences(m))
			sum += Polynomial::monomial(1, seq.weight() + 1) *
			       cache[static_cast<std::size_t>(m - 1 - seq.indices.back())];
		cache.push_back(std::move(sum));
	}
	return cache[static_cast<std::size_t>(n)];
}

NormalizedL l_normalized(int n)
{
	if (n < 0)
		throw std::invalid_argument("l_recursive: negative height");
	static std::mutex mutex;
	static std::vector<Polynomial> cache; // Lt_0..; append-only
	std::scoped_lock lock(mutex);
	extend_normalized(cache, n, real_epsilon);
	return NormalizedL{n, cache[static_cast<std::size_t>(n)]};
}

Polynomial l_recursive(int n)
{
	return l_normalized(n).full();
}

Polynomial l_genfun(int n, Exponent trunc)
{
	return genfun_with(n, trunc, real_epsilon);
}

Polynomial l_closed_form(int n)
{
	return closed_form_with(n, real_epsilon);
}

Polynomial l_multinomial(int n)
{
	return multinomial_with(n, real_epsilon);
}

std::vector<WedgeSummand> spectrum_summands(int n)
{
	if (n < 1)
		throw std::invalid_argument("spectrum: height must be >= 1");
	std::vector<WedgeSummand> out;
	out.reserve(std::size_t{1} << (n - 1));
	for (const Composition &comp : enumerate_compositions(n))
	{
		WedgeSummand s;
		s.suspension = 2 * static_cast<Exponent>(n);
		s.unitary_ranks.reserve(comp.parts.size());
		for (int part : comp.parts)
			s.unitary_ranks.push_back(part - 1);
		out.push_back(std::move(s));
	}
	return out;
}

Polynomial spectrum_poincare(int n)
{
	Polynomial sum;
	for (const WedgeSummand &s : spectrum_summands(n))
		sum += s.poincare();
	return sum;
}

Integer total_rank(int n)
{
	return l_recursive(n).evaluate(1);
}

bool VerificationReport::all_passed() const
{
	return first_failure() == nullptr;
}

const CheckRecord *VerificationReport::first_failure() const
{
	for (const CheckRecord &r : records)
		if (!r.pass)
			return &r;
	return nullptr;
}

VerificationReport verify(int n_max)
{
	return verify(n_max, VerifyHooks{});
}

VerificationReport verify(int n_max, const VerifyHooks &hooks)
{
	if (n_max < 1)
		throw std::invalid_argument("verify: n_max must be >= 1");
	EpsFn eps = hooks.epsilon ? memoized(hooks.epsilon) : EpsFn(real_epsilon);

	std::vector<Polynomial> normalized;
	extend_normalized(normalized, n_max, eps);

	VerificationReport report;
	auto record = [&](int height, std::string check, bool pass,
	                  std::string counterexample) {
		report.records.push_back(CheckRecord{height, std::move(check), pass,
		                                     pass ? "" : std::move(counterexample)});
	};

	for (int h = 0; h <= n_max; ++h)
	{
		Polynomial recursive =
		    Polynomial::monomial(1, 2 * static_cast<Exponent>(h)) *
		    normalized[static_cast<std::size_t>(h)];

		// edge-laws
		{
			bool pass = true;
			std::string note;
			if (h == 0)
			{
				pass = recursive == Polynomial(1);
				if (!pass)
					note = "L_0 = " + recursive.to_string();
			}
			else
			{
				Integer lead = boost::multiprecision::pow(Integer(2), h - 1);
				Exponent top = static_cast<Exponent>(h) * h + 1;
				if (recursive.lowest_exponent() != std::optional<Exponent>(2 * h) ||
				    recursive.coefficient(2 * h) != lead)
				{
					pass = false;
					note = "support minimum of " + recursive.to_string() +
					       " is not " + std::to_string(2 * h) +
					       " with coefficient " + lead.str();
				}
				else if (recursive.degree() != std::optional<Exponent>(top) ||
				         recursive.coefficient(top) != 1)
				{
					pass = false;
					note = "degree of L_" + std::to_string(h) + " is not " +
					       std::to_string(top) + " with coefficient 1";
				}
				else
					for (const auto &[e, c] : recursive.terms())
						if (c < 0)
						{
							pass = false;
							note = "negative coefficient " + c.str() + " at T^" +
							       std::to_string(e);
							break;
						}
			}
			record(h, "edge-laws", pass, std::move(note));
		}

		// epsilon-palindromic
		{
			Polynomial e = eps(h);
			Exponent d = e.degree().value_or(0);
			bool pass = !e.is_zero();
			Exponent bad = -1;
			for (Exponent i = 0; pass && 2 * i <= d; ++i)
				if (e.coefficient(i) != e.coefficient(d - i))
				{
					pass = false;
					bad = i;
				}
			record(h, "epsilon-palindromic", pass,
			       pass ? ""
			            : "eps_" + std::to_string(h) + " = " + e.to_string() +
			                  " breaks symmetry at T^" + std::to_string(bad));
		}

		// epsilon-unitary
		{
			Polynomial e = eps(h);
			Polynomial u = unitary_poincare(h);
			record(h, "epsilon-unitary", e == u,
			       "eps_" + std::to_string(h) + " = " + e.to_string() +
			           " but U(" + std::to_string(h) + ") has " + u.to_string());
		}

		// route-agreement
		{
			struct Route {
				const char *name;
				Polynomial value;
			};
			std::vector<Route> routes;
			routes.push_back({"direct", l_direct(h)});
			routes.push_back({"recursive", recursive});
			routes.push_back({"genfun", genfun_with(h, h, eps)});
			routes.push_back({"closed", closed_form_with(h, eps)});
			if (h >= 1)
				routes.push_back({"spectrum", spectrum_poincare(h)});
			bool pass = true;
			for (const Route &r : routes)
				pass = pass && r.value == routes.front().value;
			std::string note;
			if (!pass)
			{
				for (const Route &r : routes)
				{
					if (!note.empty())
						note += ", ";
					note += std::string(r.name) + "=" + r.value.to_string();
				}
			}
			record(h, "route-agreement", pass, std::move(note));
		}

		// total-rank
		{
			Integer got = recursive.evaluate(1);
			Integer want =
			    h == 0 ? Integer(1) : boost::multiprecision::pow(Integer(3), h - 1);
			record(h, "total-rank", got == want,
			       "L_" + std::to_string(h) + "(1) = " + got.str() + ", expected " +
			           want.str());
		}
	}
	return report;
}

} // namespace lseries
