// Sparse exact polynomials in one variable T over arbitrary-precision
// integers. Canonical form: no stored coefficient is zero; the zero
// polynomial has empty support and no degree.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lseries {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

class Polynomial {
  public:
	Polynomial() = default; // the zero polynomial
	Polynomial(Integer c);
	Polynomial(long long c) : Polynomial(Integer(c)) {}

	// c * T^e; empty support when c = 0. Rejects e < 0.
	static Polynomial monomial(Integer c, Exponent e);
	static Polynomial variable() { return monomial(1, 1); }

	bool is_zero() const { return terms_.empty(); }

	// nullopt for the zero polynomial; never a fake integer.
	std::optional<Exponent> degree() const;
	std::optional<Exponent> lowest_exponent() const;

	// stored coefficient of T^e, zero outside the support
	const Integer &coefficient(Exponent e) const;

	std::size_t support_size() const { return terms_.size(); }
	const std::map<Exponent, Integer> &terms() const { return terms_; }

	// exact value at an integer point; evaluate(1) is the coefficient sum
	Integer evaluate(const Integer &t) const;

	Polynomial &operator+=(const Polynomial &o);
	Polynomial &operator-=(const Polynomial &o);
	Polynomial &operator*=(const Polynomial &o);
	Polynomial operator-() const;

	friend bool operator==(const Polynomial &, const Polynomial &) = default;

	// ascending exponents, '^' powers, unit coefficients and the
	// exponent-1 marker omitted: "2T^4 + T^5"
	std::string to_string() const;

  private:
	std::map<Exponent, Integer> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial &b);
Polynomial operator-(Polynomial a, const Polynomial &b);
Polynomial operator*(const Polynomial &a, const Polynomial &b);

// p^m by repeated squaring; rejects m < 0
Polynomial pow(const Polynomial &p, Exponent m);

std::ostream &operator<<(std::ostream &os, const Polynomial &p);

} // namespace lseries
