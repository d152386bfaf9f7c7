// A small expression language over polynomials in T and truncated series
// in u, so the generating-function identities can be stated and checked
// from the command line.
//
// Grammar:
//   expr   := term (("+" | "-") term)*
//   term   := unary ("*" unary)*
//   unary  := "-" unary | factor
//   factor := atom ("^" nat)?
//   atom   := nat | "T" | "u" | "eps" "(" nat ")" | "L" "(" nat ")"
//           | "inv" "(" expr ")" | "subst2" "(" expr ")"
//           | "coeff" "(" expr "," nat ")" | "(" expr ")"
// Whitespace is insignificant; there is no juxtaposition product.

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "lseries/polynomial.hpp"
#include "lseries/series.hpp"

namespace lseries::dsl {

// Syntax error with the byte offset into the input.
class ParseError : public std::runtime_error {
  public:
	ParseError(std::size_t offset, const std::string &expected);

	std::size_t offset() const { return offset_; }

  private:
	std::size_t offset_;
};

// Well-formed input that cannot be evaluated (non-unit inversion,
// coefficient index beyond the truncation, out-of-range argument).
class EvalError : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
	struct Nat {
		Integer value;
	};
	struct VarT {};
	struct VarU {};
	struct Eps {
		Integer k;
	};
	struct LFun {
		Integer n;
	};
	struct Inv {
		ExprPtr arg;
	};
	struct Subst2 {
		ExprPtr arg;
	};
	struct Coeff {
		ExprPtr arg;
		Integer index;
	};
	struct Neg {
		ExprPtr arg;
	};
	struct Add {
		ExprPtr lhs, rhs;
	};
	struct Sub {
		ExprPtr lhs, rhs;
	};
	struct Mul {
		ExprPtr lhs, rhs;
	};
	struct Pow {
		ExprPtr base;
		Integer exponent;
	};

	using Node = std::variant<Nat, VarT, VarU, Eps, LFun, Inv, Subst2, Coeff,
	                          Neg, Add, Sub, Mul, Pow>;
	Node node;
};

bool equal(const Expr &a, const Expr &b);

ExprPtr parse(std::string_view input); // throws ParseError

// Canonical text with minimal parentheses; parse(render(e)) == e.
std::string render(const Expr &e);

// A value is a u-free Polynomial or a Series at the ambient truncation;
// polynomials promote to constant series only when an operation mixes
// the two kinds.
using Value = std::variant<Polynomial, Series>;

Value evaluate(const Expr &e, Exponent trunc); // throws EvalError

std::string to_string(const Value &v);

} // namespace lseries::dsl
