#include "lseries/polynomial.hpp"

#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lseries {

namespace {

Integer integer_pow(const Integer &t, Exponent e)
{
	if (e > std::numeric_limits<unsigned>::max())
		throw std::overflow_error("polynomial evaluation: exponent too large");
	return boost::multiprecision::pow(t, static_cast<unsigned>(e));
}

} // namespace

Polynomial::Polynomial(Integer c)
{
	if (c != 0)
		terms_.emplace(0, std::move(c));
}

Polynomial Polynomial::monomial(Integer c, Exponent e)
{
	if (e < 0)
		throw std::invalid_argument("monomial: negative exponent " +
		                            std::to_string(e));
	Polynomial p;
	if (c != 0)
		p.terms_.emplace(e, std::move(c));
	return p;
}

std::optional<Exponent> Polynomial::degree() const
{
	if (terms_.empty())
		return std::nullopt;
	return terms_.rbegin()->first;
}

std::optional<Exponent> Polynomial::lowest_exponent() const
{
	if (terms_.empty())
		return std::nullopt;
	return terms_.begin()->first;
}

const Integer &Polynomial::coefficient(Exponent e) const
{
	static const Integer zero = 0;
	auto it = terms_.find(e);
	return it == terms_.end() ? zero : it->second;
}

Integer Polynomial::evaluate(const Integer &t) const
{
	// Horner over the sparse support, highest exponent first.
	Integer acc = 0;
	Exponent prev = 0;
	bool first = true;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		if (first)
		{
			acc = it->second;
			first = false;
		}
		else
		{
			acc *= integer_pow(t, prev - it->first);
			acc += it->second;
		}
		prev = it->first;
	}
	if (!first && prev > 0)
		acc *= integer_pow(t, prev);
	return acc;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
	for (const auto &[e, c] : o.terms_)
	{
		auto it = terms_.find(e);
		if (it == terms_.end())
		{
			terms_.emplace(e, c);
			continue;
		}
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
	return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
	for (const auto &[e, c] : o.terms_)
	{
		auto it = terms_.find(e);
		if (it == terms_.end())
		{
			terms_.emplace(e, -c);
			continue;
		}
		it->second -= c;
		if (it->second == 0)
			terms_.erase(it);
	}
	return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &o)
{
	constexpr Exponent max_e = std::numeric_limits<Exponent>::max();
	std::map<Exponent, Integer> prod;
	for (const auto &[ea, ca] : terms_)
		for (const auto &[eb, cb] : o.terms_)
		{
			if (ea > max_e - eb)
				throw std::overflow_error("polynomial product: exponent overflow");
			prod[ea + eb] += ca * cb;
		}
	std::erase_if(prod, [](const auto &term) { return term.second == 0; });
	terms_ = std::move(prod);
	return *this;
}

Polynomial Polynomial::operator-() const
{
	Polynomial r;
	for (const auto &[e, c] : terms_)
		r.terms_.emplace(e, -c);
	return r;
}

Polynomial operator+(Polynomial a, const Polynomial &b)
{
	a += b;
	return a;
}

Polynomial operator-(Polynomial a, const Polynomial &b)
{
	a -= b;
	return a;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
	Polynomial r = a;
	r *= b;
	return r;
}

Polynomial pow(const Polynomial &p, Exponent m)
{
	if (m < 0)
		throw std::invalid_argument("pow: negative exponent " + std::to_string(m));
	Polynomial acc(1);
	Polynomial base = p;
	while (m > 0)
	{
		if (m & 1)
			acc *= base;
		m >>= 1;
		if (m > 0)
			base *= base;
	}
	return acc;
}

std::string Polynomial::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[e, c] : terms_)
	{
		bool negative = c < 0;
		Integer mag = boost::multiprecision::abs(c);
		if (first)
		{
			if (negative)
				out += '-';
			first = false;
		}
		else
			out += negative ? " - " : " + ";
		if (e == 0 || mag != 1)
			out += mag.str();
		if (e > 0)
		{
			out += 'T';
			if (e > 1)
				out += '^' + std::to_string(e);
		}
	}
	return out;
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p)
{
	return os << p.to_string();
}

} // namespace lseries
