#include "lseries/dsl.hpp"

#include <cctype>
#include <limits>
#include <utility>
#include <vector>

#include "lseries/chromatic.hpp"

namespace lseries::dsl {

namespace {

enum class Tok { Nat, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };

struct Token {
	Tok kind;
	std::size_t offset;
	Integer nat;      // Tok::Nat
	std::string text; // Tok::Ident
};

std::vector<Token> lex(std::string_view in)
{
	std::vector<Token> out;
	std::size_t i = 0;
	while (i < in.size())
	{
		char c = in[i];
		if (std::isspace(static_cast<unsigned char>(c)))
		{
			++i;
			continue;
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			std::size_t start = i;
			while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i])))
				++i;
			out.push_back(Token{Tok::Nat, start,
			                    Integer(std::string(in.substr(start, i - start))),
			                    {}});
			continue;
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			std::size_t start = i;
			while (i < in.size() &&
			       (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '_'))
				++i;
			out.push_back(Token{Tok::Ident, start, 0,
			                    std::string(in.substr(start, i - start))});
			continue;
		}
		Tok kind;
		switch (c)
		{
		case '+': kind = Tok::Plus; break;
		case '-': kind = Tok::Minus; break;
		case '*': kind = Tok::Star; break;
		case '^': kind = Tok::Caret; break;
		case '(': kind = Tok::LParen; break;
		case ')': kind = Tok::RParen; break;
		case ',': kind = Tok::Comma; break;
		default:
			throw ParseError(i, std::string("a token (found '") + c + "')");
		}
		out.push_back(Token{kind, i, 0, {}});
		++i;
	}
	out.push_back(Token{Tok::End, in.size(), 0, {}});
	return out;
}

template <class... Args> ExprPtr make(Args &&...args)
{
	return std::make_shared<const Expr>(Expr{std::forward<Args>(args)...});
}

struct Parser {
	std::vector<Token> tokens;
	std::size_t pos = 0;

	const Token &peek() const { return tokens[pos]; }

	Token take() { return tokens[pos++]; }

	void expect(Tok kind, const std::string &what)
	{
		if (peek().kind != kind)
			throw ParseError(peek().offset, what);
		++pos;
	}

	Integer expect_nat()
	{
		if (peek().kind != Tok::Nat)
			throw ParseError(peek().offset, "a non-negative integer");
		return take().nat;
	}

	ExprPtr parse_expr()
	{
		ExprPtr lhs = parse_term();
		while (peek().kind == Tok::Plus || peek().kind == Tok::Minus)
		{
			bool plus = take().kind == Tok::Plus;
			ExprPtr rhs = parse_term();
			if (plus)
				lhs = make(Expr::Add{lhs, rhs});
			else
				lhs = make(Expr::Sub{lhs, rhs});
		}
		return lhs;
	}

	ExprPtr parse_term()
	{
		ExprPtr lhs = parse_unary();
		while (peek().kind == Tok::Star)
		{
			take();
			lhs = make(Expr::Mul{lhs, parse_unary()});
		}
		return lhs;
	}

	ExprPtr parse_unary()
	{
		if (peek().kind == Tok::Minus)
		{
			take();
			return make(Expr::Neg{parse_unary()});
		}
		return parse_factor();
	}

	ExprPtr parse_factor()
	{
		ExprPtr base = parse_atom();
		if (peek().kind == Tok::Caret)
		{
			take();
			return make(Expr::Pow{base, expect_nat()});
		}
		return base;
	}

	ExprPtr parse_atom()
	{
		const Token &t = peek();
		if (t.kind == Tok::Nat)
			return make(Expr::Nat{take().nat});
		if (t.kind == Tok::LParen)
		{
			take();
			ExprPtr e = parse_expr();
			expect(Tok::RParen, "')'");
			return e;
		}
		if (t.kind == Tok::Ident)
		{
			Token id = take();
			if (id.text == "T")
				return make(Expr::VarT{});
			if (id.text == "u")
				return make(Expr::VarU{});
			if (id.text == "eps" || id.text == "L")
			{
				expect(Tok::LParen, "'('");
				Integer arg = expect_nat();
				expect(Tok::RParen, "')'");
				if (id.text == "eps")
					return make(Expr::Eps{std::move(arg)});
				return make(Expr::LFun{std::move(arg)});
			}
			if (id.text == "inv" || id.text == "subst2")
			{
				expect(Tok::LParen, "'('");
				ExprPtr arg = parse_expr();
				expect(Tok::RParen, "')'");
				if (id.text == "inv")
					return make(Expr::Inv{arg});
				return make(Expr::Subst2{arg});
			}
			if (id.text == "coeff")
			{
				expect(Tok::LParen, "'('");
				ExprPtr arg = parse_expr();
				expect(Tok::Comma, "','");
				Integer index = expect_nat();
				expect(Tok::RParen, "')'");
				return make(Expr::Coeff{arg, std::move(index)});
			}
			throw ParseError(id.offset, "'T', 'u', 'eps', 'L', 'inv', 'subst2', or "
			                            "'coeff' (found '" +
			                                id.text + "')");
		}
		throw ParseError(t.offset,
		                 "a number, 'T', 'u', a function call, '-', or '('");
	}
};

// precedence levels: additive 0, multiplicative 1, unary 2, power 3, atom 4
int precedence(const Expr &e)
{
	return std::visit(
	    [](const auto &node) -> int {
		    using N = std::decay_t<decltype(node)>;
		    if constexpr (std::is_same_v<N, Expr::Add> ||
		                  std::is_same_v<N, Expr::Sub>)
			    return 0;
		    else if constexpr (std::is_same_v<N, Expr::Mul>)
			    return 1;
		    else if constexpr (std::is_same_v<N, Expr::Neg>)
			    return 2;
		    else if constexpr (std::is_same_v<N, Expr::Pow>)
			    return 3;
		    else
			    return 4;
	    },
	    e.node);
}

std::string render_at(const Expr &e, int min_prec)
{
	std::string s = render(e);
	if (precedence(e) < min_prec)
		return "(" + s + ")";
	return s;
}

int to_int(const Integer &v, const char *what)
{
	if (v < 0 || v > std::numeric_limits<int>::max())
		throw EvalError(std::string(what) + ": argument " + v.str() +
		                " out of range");
	return v.convert_to<int>();
}

Exponent to_exponent(const Integer &v, const char *what)
{
	if (v < 0 || v > std::numeric_limits<Exponent>::max())
		throw EvalError(std::string(what) + ": exponent " + v.str() +
		                " out of range");
	return v.convert_to<Exponent>();
}

struct Evaluator {
	Exponent trunc;

	Series to_series(const Value &v) const
	{
		if (std::holds_alternative<Series>(v))
			return std::get<Series>(v);
		return Series::constant(std::get<Polynomial>(v), trunc);
	}

	Value eval(const Expr &e) const
	{
		return std::visit([&](const auto &node) { return eval_node(node); },
		                  e.node);
	}

	Value eval_node(const Expr::Nat &n) const { return Polynomial(n.value); }

	Value eval_node(const Expr::VarT &) const { return Polynomial::variable(); }

	Value eval_node(const Expr::VarU &) const
	{
		std::vector<Polynomial> cs(static_cast<std::size_t>(trunc) + 1);
		if (trunc >= 1)
			cs[1] = Polynomial(1);
		return Series(std::move(cs));
	}

	Value eval_node(const Expr::Eps &e) const
	{
		return epsilon(to_int(e.k, "eps"));
	}

	Value eval_node(const Expr::LFun &l) const
	{
		return l_recursive(to_int(l.n, "L"));
	}

	Value eval_node(const Expr::Inv &i) const
	{
		try
		{
			return to_series(eval(*i.arg)).inverse();
		}
		catch (const std::domain_error &err)
		{
			throw EvalError(err.what());
		}
	}

	Value eval_node(const Expr::Subst2 &s) const
	{
		Value v = eval(*s.arg);
		if (std::holds_alternative<Polynomial>(v))
			return v; // u-free: the substitution is the identity
		return std::get<Series>(v).substitute_u_scale(Polynomial::monomial(1, 2));
	}

	Value eval_node(const Expr::Coeff &c) const
	{
		Exponent index = to_exponent(c.index, "coeff");
		Series s = to_series(eval(*c.arg));
		if (index > s.truncation())
			throw EvalError("coeff: index " + std::to_string(index) +
			                " is beyond truncation order " +
			                std::to_string(s.truncation()));
		return s.coefficient_at(index);
	}

	Value eval_node(const Expr::Neg &n) const
	{
		Value v = eval(*n.arg);
		if (std::holds_alternative<Polynomial>(v))
			return -std::get<Polynomial>(v);
		const Series &s = std::get<Series>(v);
		return Series::constant(Polynomial(0), s.truncation()) - s;
	}

	Value eval_node(const Expr::Add &a) const
	{
		Value l = eval(*a.lhs), r = eval(*a.rhs);
		if (std::holds_alternative<Polynomial>(l) &&
		    std::holds_alternative<Polynomial>(r))
			return std::get<Polynomial>(l) + std::get<Polynomial>(r);
		return to_series(l) + to_series(r);
	}

	Value eval_node(const Expr::Sub &s) const
	{
		Value l = eval(*s.lhs), r = eval(*s.rhs);
		if (std::holds_alternative<Polynomial>(l) &&
		    std::holds_alternative<Polynomial>(r))
			return std::get<Polynomial>(l) - std::get<Polynomial>(r);
		return to_series(l) - to_series(r);
	}

	Value eval_node(const Expr::Mul &m) const
	{
		Value l = eval(*m.lhs), r = eval(*m.rhs);
		if (std::holds_alternative<Polynomial>(l) &&
		    std::holds_alternative<Polynomial>(r))
			return std::get<Polynomial>(l) * std::get<Polynomial>(r);
		return to_series(l) * to_series(r);
	}

	Value eval_node(const Expr::Pow &p) const
	{
		Exponent m = to_exponent(p.exponent, "pow");
		Value base = eval(*p.base);
		if (std::holds_alternative<Polynomial>(base))
			return pow(std::get<Polynomial>(base), m);
		return pow(std::get<Series>(base), m);
	}
};

} // namespace

ParseError::ParseError(std::size_t offset, const std::string &expected)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                         ": expected " + expected),
      offset_(offset)
{
}

ExprPtr parse(std::string_view input)
{
	Parser p{lex(input)};
	ExprPtr e = p.parse_expr();
	if (p.peek().kind != Tok::End)
		throw ParseError(p.peek().offset, "end of input");
	return e;
}

bool equal(const Expr &a, const Expr &b)
{
	if (a.node.index() != b.node.index())
		return false;
	return std::visit(
	    [&b](const auto &na) -> bool {
		    using N = std::decay_t<decltype(na)>;
		    const N &nb = std::get<N>(b.node);
		    if constexpr (std::is_same_v<N, Expr::Nat>)
			    return na.value == nb.value;
		    else if constexpr (std::is_same_v<N, Expr::VarT> ||
		                       std::is_same_v<N, Expr::VarU>)
			    return true;
		    else if constexpr (std::is_same_v<N, Expr::Eps>)
			    return na.k == nb.k;
		    else if constexpr (std::is_same_v<N, Expr::LFun>)
			    return na.n == nb.n;
		    else if constexpr (std::is_same_v<N, Expr::Inv> ||
		                       std::is_same_v<N, Expr::Subst2> ||
		                       std::is_same_v<N, Expr::Neg>)
			    return equal(*na.arg, *nb.arg);
		    else if constexpr (std::is_same_v<N, Expr::Coeff>)
			    return na.index == nb.index && equal(*na.arg, *nb.arg);
		    else if constexpr (std::is_same_v<N, Expr::Pow>)
			    return na.exponent == nb.exponent && equal(*na.base, *nb.base);
		    else
			    return equal(*na.lhs, *nb.lhs) && equal(*na.rhs, *nb.rhs);
	    },
	    a.node);
}

std::string render(const Expr &e)
{
	return std::visit(
	    [](const auto &node) -> std::string {
		    using N = std::decay_t<decltype(node)>;
		    if constexpr (std::is_same_v<N, Expr::Nat>)
			    return node.value.str();
		    else if constexpr (std::is_same_v<N, Expr::VarT>)
			    return "T";
		    else if constexpr (std::is_same_v<N, Expr::VarU>)
			    return "u";
		    else if constexpr (std::is_same_v<N, Expr::Eps>)
			    return "eps(" + node.k.str() + ")";
		    else if constexpr (std::is_same_v<N, Expr::LFun>)
			    return "L(" + node.n.str() + ")";
		    else if constexpr (std::is_same_v<N, Expr::Inv>)
			    return "inv(" + render(*node.arg) + ")";
		    else if constexpr (std::is_same_v<N, Expr::Subst2>)
			    return "subst2(" + render(*node.arg) + ")";
		    else if constexpr (std::is_same_v<N, Expr::Coeff>)
			    return "coeff(" + render(*node.arg) + ", " + node.index.str() +
			           ")";
		    else if constexpr (std::is_same_v<N, Expr::Neg>)
			    return "-" + render_at(*node.arg, 2);
		    else if constexpr (std::is_same_v<N, Expr::Add>)
			    return render_at(*node.lhs, 0) + " + " + render_at(*node.rhs, 1);
		    else if constexpr (std::is_same_v<N, Expr::Sub>)
			    return render_at(*node.lhs, 0) + " - " + render_at(*node.rhs, 1);
		    else if constexpr (std::is_same_v<N, Expr::Mul>)
			    return render_at(*node.lhs, 1) + "*" + render_at(*node.rhs, 2);
		    else
			    return render_at(*node.base, 4) + "^" + node.exponent.str();
	    },
	    e.node);
}

Value evaluate(const Expr &e, Exponent trunc)
{
	if (trunc < 0)
		throw EvalError("evaluate: negative truncation order " +
		                std::to_string(trunc));
	return Evaluator{trunc}.eval(e);
}

std::string to_string(const Value &v)
{
	if (std::holds_alternative<Polynomial>(v))
		return std::get<Polynomial>(v).to_string();
	return std::get<Series>(v).to_string();
}

} // namespace lseries::dsl
