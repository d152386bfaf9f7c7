#include "lseries/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace lseries {

Series::Series(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs))
{
	if (coeffs_.empty())
		throw std::invalid_argument("series: needs at least the u^0 coefficient");
}

Series Series::constant(Polynomial p, Exponent trunc)
{
	if (trunc < 0)
		throw std::invalid_argument("series: negative truncation " +
		                            std::to_string(trunc));
	std::vector<Polynomial> cs(static_cast<std::size_t>(trunc) + 1);
	cs[0] = std::move(p);
	return Series(std::move(cs));
}

const Polynomial &Series::coefficient_at(Exponent n) const
{
	if (n < 0 || n > truncation())
		throw std::out_of_range("series: coefficient of u^" + std::to_string(n) +
		                        " is beyond truncation order " +
		                        std::to_string(truncation()));
	return coeffs_[static_cast<std::size_t>(n)];
}

Series Series::inverse() const
{
	const Polynomial &c0 = coeffs_[0];
	if (c0 != Polynomial(1) && c0 != Polynomial(-1))
		throw std::domain_error("series is not invertible: constant coefficient " +
		                        c0.to_string() + " is not 1 or -1");
	// g_0 = c_0 (self-inverse), g_n = -c_0 * sum_{j=1}^{n} f_j g_{n-j}
	std::vector<Polynomial> g(coeffs_.size());
	g[0] = c0;
	for (std::size_t n = 1; n < coeffs_.size(); ++n)
	{
		Polynomial s;
		for (std::size_t j = 1; j <= n; ++j)
			s += coeffs_[j] * g[n - j];
		g[n] = -(c0 * s);
	}
	return Series(std::move(g));
}

Series Series::substitute_u_scale(const Polynomial &p) const
{
	std::vector<Polynomial> cs(coeffs_.size());
	Polynomial scale(1);
	for (std::size_t n = 0; n < coeffs_.size(); ++n)
	{
		cs[n] = coeffs_[n] * scale;
		if (n + 1 < coeffs_.size())
			scale *= p;
	}
	return Series(std::move(cs));
}

Series Series::truncated(Exponent new_trunc) const
{
	if (new_trunc < 0 || new_trunc > truncation())
		throw std::invalid_argument("series: cannot truncate order " +
		                            std::to_string(truncation()) + " to " +
		                            std::to_string(new_trunc));
	std::vector<Polynomial> cs(coeffs_.begin(),
	                           coeffs_.begin() + new_trunc + 1);
	return Series(std::move(cs));
}

Series operator+(const Series &f, const Series &g)
{
	Exponent t = std::min(f.truncation(), g.truncation());
	std::vector<Polynomial> cs(static_cast<std::size_t>(t) + 1);
	for (Exponent n = 0; n <= t; ++n)
		cs[static_cast<std::size_t>(n)] = f.coefficient_at(n) + g.coefficient_at(n);
	return Series(std::move(cs));
}

Series operator-(const Series &f, const Series &g)
{
	Exponent t = std::min(f.truncation(), g.truncation());
	std::vector<Polynomial> cs(static_cast<std::size_t>(t) + 1);
	for (Exponent n = 0; n <= t; ++n)
		cs[static_cast<std::size_t>(n)] = f.coefficient_at(n) - g.coefficient_at(n);
	return Series(std::move(cs));
}

Series operator*(const Series &f, const Series &g)
{
	Exponent t = std::min(f.truncation(), g.truncation());
	std::vector<Polynomial> cs(static_cast<std::size_t>(t) + 1);
	for (Exponent n = 0; n <= t; ++n)
		for (Exponent j = 0; j <= n; ++j)
			cs[static_cast<std::size_t>(n)] +=
			    f.coefficient_at(j) * g.coefficient_at(n - j);
	return Series(std::move(cs));
}

Series pow(const Series &f, Exponent m)
{
	if (m < 0)
		throw std::invalid_argument("pow: negative exponent " + std::to_string(m));
	Series acc = Series::constant(Polynomial(1), f.truncation());
	Series base = f;
	while (m > 0)
	{
		if (m & 1)
			acc = acc * base;
		m >>= 1;
		if (m > 0)
			base = base * base;
	}
	return acc;
}

std::string Series::to_string() const
{
	std::string out;
	for (Exponent n = 0; n <= truncation(); ++n)
	{
		const Polynomial &c = coeffs_[static_cast<std::size_t>(n)];
		if (c.is_zero())
			continue;
		std::string piece;
		if (n == 0)
			piece = c.support_size() > 1 ? "(" + c.to_string() + ")" : c.to_string();
		else
		{
			std::string u_part = n == 1 ? "u" : "u^" + std::to_string(n);
			if (c == Polynomial(1))
				piece = u_part;
			else if (c == Polynomial(-1))
				piece = "-" + u_part;
			else if (c.support_size() == 1 && c.degree() == 0)
				piece = c.to_string() + u_part; // bare integer coefficient
			else
				piece = "(" + c.to_string() + ")" + u_part;
		}
		if (out.empty())
			out = piece;
		else if (piece.front() == '-')
			out += " - " + piece.substr(1);
		else
			out += " + " + piece;
	}
	if (out.empty())
		out = "0";
	out += " + O(u^" + std::to_string(truncation() + 1) + ")";
	return out;
}

std::ostream &operator<<(std::ostream &os, const Series &f)
{
	return os << f.to_string();
}

} // namespace lseries
