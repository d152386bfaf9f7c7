// Truncated formal power series in u with Polynomial coefficients:
// elements of Z[T][[u]] known modulo u^{N+1}. Mixed-truncation operands
// produce the minimum truncation; a coefficient request past the
// truncation is an error, never a silent zero.

#pragma once

#include <string>
#include <vector>

#include "lseries/polynomial.hpp"

namespace lseries {

class Series {
  public:
	// coefficients c_0..c_N; the vector must be nonempty (N = size - 1)
	explicit Series(std::vector<Polynomial> coeffs);

	// p + 0u + ... + 0u^trunc; rejects trunc < 0
	static Series constant(Polynomial p, Exponent trunc);

	Exponent truncation() const
	{
		return static_cast<Exponent>(coeffs_.size()) - 1;
	}

	// c_n for 0 <= n <= truncation, otherwise out_of_range
	const Polynomial &coefficient_at(Exponent n) const;

	// multiplicative inverse mod u^{N+1}; the constant coefficient must
	// be 1 or -1, the only units over the integers
	Series inverse() const;

	// u -> u * p: the coefficient of u^n picks up a factor p^n
	Series substitute_u_scale(const Polynomial &p) const;

	// discard coefficients above new_trunc (new_trunc <= truncation)
	Series truncated(Exponent new_trunc) const;

	friend bool operator==(const Series &, const Series &) = default;

	std::string to_string() const;

  private:
	std::vector<Polynomial> coeffs_;
};

Series operator+(const Series &f, const Series &g);
Series operator-(const Series &f, const Series &g);
Series operator*(const Series &f, const Series &g);

Series pow(const Series &f, Exponent m);

std::ostream &operator<<(std::ostream &os, const Series &f);

} // namespace lseries
