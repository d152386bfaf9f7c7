#include "lseries/cli.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lseries/chromatic.hpp"
#include "lseries/dsl.hpp"
#include "lseries/polynomial.hpp"

namespace lseries::cli {

namespace {

std::string braced(Exponent e)
{
	std::string s = std::to_string(e);
	return s.size() == 1 ? s : "{" + s + "}";
}

// to_string with multi-digit exponents braced: 2T^4 + T^{10}
std::string latex_poly(const Polynomial &p)
{
	if (p.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[e, c] : p.terms())
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
				out += '^' + braced(e);
		}
	}
	return out;
}

std::string summand_text(const WedgeSummand &s)
{
	std::string line = "S^" + std::to_string(s.suspension) + " (";
	for (std::size_t i = 0; i < s.unitary_ranks.size(); ++i)
	{
		if (i > 0)
			line += " x ";
		line += "U(" + std::to_string(s.unitary_ranks[i]) + ")";
	}
	return line + ")_+";
}

int run_ln(int n, const std::string &method, std::ostream &out,
           std::ostream &err)
{
	if (method == "all")
	{
		std::vector<std::pair<std::string, Polynomial>> routes;
		routes.emplace_back("direct", l_direct(n));
		routes.emplace_back("recursive", l_recursive(n));
		routes.emplace_back("genfun", l_genfun(n, n));
		routes.emplace_back("closed", l_closed_form(n));
		if (n >= 1)
			routes.emplace_back("spectrum", spectrum_poincare(n));
		for (const auto &[name, value] : routes)
			out << name << ": " << value.to_string() << '\n';
		for (const auto &[name, value] : routes)
			if (value != routes.front().second)
			{
				err << "error: routes disagree at n=" << n << '\n';
				return 1;
			}
		return 0;
	}
	Polynomial value;
	if (method == "direct")
		value = l_direct(n);
	else if (method == "recursive")
		value = l_recursive(n);
	else if (method == "genfun")
		value = l_genfun(n, n);
	else if (method == "closed")
		value = l_closed_form(n);
	else
		value = spectrum_poincare(n);
	out << value.to_string() << '\n';
	return 0;
}

void run_table(int max_n, const std::string &format, std::ostream &out)
{
	if (format == "csv")
	{
		out << "n,exponent,coefficient\n";
		for (int n = 0; n <= max_n; ++n)
		{
			Polynomial p = l_recursive(n);
			for (const auto &[e, c] : p.terms())
				out << n << ',' << e << ',' << c.str() << '\n';
		}
	}
	else if (format == "json")
	{
		nlohmann::ordered_json rows = nlohmann::ordered_json::array();
		for (int n = 0; n <= max_n; ++n)
		{
			Polynomial p = l_recursive(n);
			nlohmann::ordered_json poly = nlohmann::ordered_json::object();
			for (const auto &[e, c] : p.terms())
				poly[std::to_string(e)] = c.str(); // decimal strings, never numbers
			rows.push_back({{"n", n}, {"poly", std::move(poly)}});
		}
		out << rows.dump(2) << '\n';
	}
	else if (format == "latex")
	{
		for (int n = 0; n <= max_n; ++n)
			out << "\\[ L_" << braced(n) << "(T) = " << latex_poly(l_recursive(n))
			    << " \\]\n";
	}
	else
	{
		for (int n = 0; n <= max_n; ++n)
			out << "L_" << n << "(T) = " << l_recursive(n).to_string() << '\n';
	}
}

int run_verify(int n_max, int corrupt_k, std::ostream &out)
{
	VerifyHooks hooks;
	if (corrupt_k >= 0)
		hooks.epsilon = [corrupt_k](int k) {
			Polynomial p = epsilon(k);
			if (k == corrupt_k)
				p += Polynomial::variable();
			return p;
		};
	VerificationReport report = verify(n_max, hooks);
	std::size_t failed = 0;
	for (const CheckRecord &rec : report.records)
	{
		if (rec.pass)
			out << "PASS n=" << rec.height << ' ' << rec.check << '\n';
		else
		{
			++failed;
			out << "FAIL n=" << rec.height << ' ' << rec.check << ": "
			    << rec.counterexample << '\n';
		}
	}
	out << report.records.size() << " checks, " << failed << " failed\n";
	return failed == 0 ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Poincare series of the chromatic splitting wedge", "lseries"};
	app.require_subcommand(1);

	CLI::App *eps_cmd = app.add_subcommand("epsilon", "Print eps_k(T)");
	int eps_k = 0;
	eps_cmd->add_option("--k", eps_k, "exterior-algebra index k")
	    ->required()
	    ->check(CLI::NonNegativeNumber);

	CLI::App *ln_cmd = app.add_subcommand("ln", "Print L_n(T)");
	int ln_n = 0;
	std::string method = "recursive";
	ln_cmd->add_option("--n", ln_n, "height n")
	    ->required()
	    ->check(CLI::NonNegativeNumber);
	ln_cmd->add_option("--method", method, "route (default recursive)")
	    ->check(CLI::IsMember(
	        {"direct", "recursive", "genfun", "closed", "spectrum", "all"}));

	CLI::App *table_cmd = app.add_subcommand("table", "Tabulate L_0 .. L_M");
	int max_n = 0;
	std::string format = "text";
	table_cmd->add_option("--max-n", max_n, "largest height M")
	    ->required()
	    ->check(CLI::NonNegativeNumber);
	table_cmd->add_option("--format", format, "text | csv | json | latex")
	    ->check(CLI::IsMember({"text", "csv", "json", "latex"}));

	CLI::App *spec_cmd =
	    app.add_subcommand("spectrum", "List the wedge summands at height n");
	int spec_n = 1;
	spec_cmd->add_option("--n", spec_n, "height n")
	    ->required()
	    ->check(CLI::PositiveNumber);

	CLI::App *eval_cmd =
	    app.add_subcommand("eval", "Evaluate a series expression");
	std::string input;
	Exponent trunc = 16;
	eval_cmd->add_option("expr", input, "expression, e.g. \"coeff(inv(1 - eps(0)*u*T^2), 1)\"")
	    ->required();
	eval_cmd->add_option("--trunc", trunc, "truncation order in u (default 16)")
	    ->check(CLI::NonNegativeNumber);

	CLI::App *verify_cmd =
	    app.add_subcommand("verify", "Cross-validate heights 0 .. M");
	int verify_max = 1;
	int corrupt_k = -1;
	verify_cmd->add_option("--max-n", verify_max, "largest height M")
	    ->required()
	    ->check(CLI::PositiveNumber);
	verify_cmd
	    ->add_option("--corrupt-epsilon", corrupt_k,
	                 "fault injection: add T to eps_K before checking")
	    ->check(CLI::NonNegativeNumber);

	try
	{
		std::reverse(args.begin(), args.end());
		app.parse(std::move(args));
	}
	catch (const CLI::CallForHelp &)
	{
		out << app.help();
		return 0;
	}
	catch (const CLI::CallForAllHelp &)
	{
		out << app.help("", CLI::AppFormatMode::All);
		return 0;
	}
	catch (const CLI::ParseError &e)
	{
		err << "error: " << e.what() << '\n' << app.help();
		return 2;
	}

	try
	{
		if (app.got_subcommand(eps_cmd))
			out << epsilon(eps_k).to_string() << '\n';
		else if (app.got_subcommand(ln_cmd))
			return run_ln(ln_n, method, out, err);
		else if (app.got_subcommand(table_cmd))
			run_table(max_n, format, out);
		else if (app.got_subcommand(spec_cmd))
			for (const WedgeSummand &s : spectrum_summands(spec_n))
				out << summand_text(s) << '\n';
		else if (app.got_subcommand(eval_cmd))
		{
			dsl::ExprPtr e = dsl::parse(input);
			out << dsl::to_string(dsl::evaluate(*e, trunc)) << '\n';
		}
		else if (app.got_subcommand(verify_cmd))
			return run_verify(verify_max, corrupt_k, out);
		return 0;
	}
	catch (const dsl::ParseError &e)
	{
		err << "error: " << e.what() << '\n';
		return 3;
	}
	catch (const dsl::EvalError &e)
	{
		err << "error: " << e.what() << '\n';
		return 3;
	}
	catch (const std::exception &e)
	{
		err << "error: " << e.what() << '\n';
		return 2;
	}
}

} // namespace lseries::cli
