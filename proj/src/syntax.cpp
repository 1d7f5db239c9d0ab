#include "ncjet/syntax.hpp"
#include "ncjet/error.hpp"

#include <fmt/format.h>

#include <cctype>
#include <fstream>
#include <optional>

namespace ncjet {

namespace {

/// Intermediate result of an arithmetic expression: an open sum (scalars
/// included) or a density.
struct Expr
{
	bool cyclic = false;
	OpenSum open;
	CyclicSum cyc;

	static Expr of(OpenSum s) { return Expr{false, std::move(s), {}}; }
	static Expr of(CyclicSum s) { return Expr{true, {}, std::move(s)}; }
};

std::optional<Poly> as_scalar(const OpenSum &s)
{
	Poly c;
	for (const auto &[w, k] : s)
	{
		if (!w.empty())
			return std::nullopt;
		c += k;
	}
	return c;
}

class Parser
{
  public:
	Parser(std::string_view text, const JetContext &ctx) : s_(text), ctx_(ctx) {}

	Value parse_top()
	{
		skip();
		const std::size_t start = pos_;
		const std::string id = identifier();
		skip();
		Value v;
		if (id == "cov" && peek() == '(')
			v = covector();
		else if (id == "sec" && peek() == '(')
			v = section();
		else if (id == "op" && peek() == '(')
			v = op();
		else
		{
			pos_ = start;
			Expr e = sum();
			if (e.cyclic)
				v = std::move(e.cyc);
			else
				v = std::move(e.open);
		}
		skip();
		if (pos_ != s_.size())
			fail("unexpected input");
		return v;
	}

  private:
	[[noreturn]] void fail(const std::string &what) const { throw ParseError(what, pos_); }
	[[noreturn]] void fail_at(const std::string &what, std::size_t at) const { throw ParseError(what, at); }

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}
	char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
	bool eat(char c)
	{
		skip();
		if (peek() != c)
			return false;
		++pos_;
		return true;
	}
	void expect(char c)
	{
		if (!eat(c))
			fail(fmt::format("expected '{}'", c));
	}

	std::string identifier()
	{
		const std::size_t start = pos_;
		while (std::isalpha(static_cast<unsigned char>(peek())))
			++pos_;
		return std::string(s_.substr(start, pos_ - start));
	}

	std::string digits()
	{
		const std::size_t start = pos_;
		while (std::isdigit(static_cast<unsigned char>(peek())))
			++pos_;
		return std::string(s_.substr(start, pos_ - start));
	}

	int small_number(const std::string &text, std::size_t at, int limit)
	{
		if (text.empty() || text.size() > 6)
			fail_at("expected a small nonnegative integer", at);
		const int v = std::stoi(text);
		if (v > limit)
			fail_at(fmt::format("index {} exceeds {}", v, limit), at);
		return v;
	}

	int exponent()
	{
		skip();
		if (peek() != '^')
			return 1;
		++pos_;
		skip();
		const std::size_t at = pos_;
		return small_number(digits(), at, 1 << 16);
	}

	/// Jet suffix of a letter; the letter's name has been consumed.
	MultiIndex suffix()
	{
		MultiIndex order{};
		while (peek() == '_')
		{
			++pos_;
			if (peek() == '{')
			{
				++pos_;
				skip();
				if (peek() != 'x')
					fail("expected 'x' in jet index");
				++pos_;
				int dir = 1;
				skip();
				if (eat('^'))
				{
					skip();
					const std::size_t at = pos_;
					dir = small_number(digits(), at, ctx_.n);
					if (dir < 1)
						fail_at("base direction must be positive", at);
				}
				expect(',');
				skip();
				const std::size_t at = pos_;
				const int k = small_number(digits(), at, 1 << 15);
				expect('}');
				order[dir - 1] = static_cast<std::uint16_t>(order[dir - 1] + k);
			}
			else if (peek() == 'x')
			{
				if (ctx_.n != 1)
					fail("use _{x^i,k} jet indices when n > 1");
				while (peek() == 'x')
				{
					++pos_;
					++order[0];
				}
			}
			else
				fail("malformed jet index");
		}
		return order;
	}

	Letter make_letter(LetterKind kind, int field, const MultiIndex &order, std::size_t at)
	{
		if (field < 1 || field > ctx_.m)
			fail_at(fmt::format("field index {} outside 1..{}", field, ctx_.m), at);
		Letter l{kind, static_cast<std::uint8_t>(field), order};
		ctx_.check_order(l);
		return l;
	}

	Expr sum()
	{
		skip();
		bool negative = false;
		if (peek() == '-' || peek() == '+')
			negative = s_[pos_++] == '-';
		Expr acc = product();
		if (negative)
			negate(acc);
		while (true)
		{
			skip();
			if (peek() != '+' && peek() != '-')
				return acc;
			const std::size_t at = pos_;
			const bool minus = s_[pos_++] == '-';
			Expr rhs = product();
			if (minus)
				negate(rhs);
			add(acc, rhs, at);
		}
	}

	static void negate(Expr &e)
	{
		if (e.cyclic)
			e.cyc = -e.cyc;
		else
			e.open = -e.open;
	}

	void add(Expr &acc, const Expr &rhs, std::size_t at)
	{
		if (acc.cyclic != rhs.cyclic)
		{
			// A zero of either kind adapts to the other operand.
			if (!acc.cyclic && acc.open.is_zero())
				acc = Expr::of(CyclicSum());
			else if (acc.cyclic && rhs.open.is_zero())
				return;
			else
				fail_at("cannot add an open sum and a density", at);
		}
		if (acc.cyclic)
			acc.cyc += rhs.cyc;
		else
			acc.open += rhs.open;
	}

	Expr multiply(const Expr &lhs, const Expr &rhs, std::size_t at)
	{
		if (!lhs.cyclic && !rhs.cyclic)
			return Expr::of(lhs.open * rhs.open);
		if (lhs.cyclic && rhs.cyclic)
			fail_at("densities cannot be multiplied here; use the times command", at);
		const Expr &word = lhs.cyclic ? rhs : lhs;
		const Expr &density = lhs.cyclic ? lhs : rhs;
		auto c = as_scalar(word.open);
		if (!c)
			fail_at("a density can only be scaled by a coefficient", at);
		return Expr::of(CyclicSum(density.cyc * *c));
	}

	Expr product()
	{
		skip();
		const std::size_t at = pos_;
		std::optional<Expr> acc;
		while (true)
		{
			skip();
			const std::size_t fat = pos_;
			if (op_mode_ && composition_ahead())
			{
				// L*D^k*R: everything right of D joins the argument.
				const MultiIndex order = derivative_symbol();
				Expr rest = Expr::of(OpenSum::scalar(1));
				if (eat('*'))
					rest = product();
				Expr composed = Expr::of(compose(order, rest, fat));
				return acc ? multiply(*acc, composed, at) : composed;
			}
			Expr f = factor();
			acc = acc ? multiply(*acc, f, fat) : std::move(f);
			if (!eat('*'))
				return *acc;
		}
	}

	/// Whether a bare derivative symbol D (not applied to a parenthesized
	/// argument) starts at the current position.
	bool composition_ahead()
	{
		const std::size_t save = pos_;
		bool bare = false;
		if (peek() == 'D')
		{
			derivative_symbol();
			skip();
			bare = peek() != '(';
		}
		pos_ = save;
		return bare;
	}

	/// D, D^k, D_i, D_i^k, and products such as D_1*D_2^2 are not merged.
	MultiIndex derivative_symbol()
	{
		MultiIndex order{};
		const std::size_t at = pos_;
		if (peek() != 'D')
			fail("expected D");
		++pos_;
		int dir = 1;
		if (peek() == '_')
		{
			++pos_;
			const std::size_t dat = pos_;
			dir = small_number(digits(), dat, ctx_.n);
			if (dir < 1)
				fail_at("base direction must be positive", dat);
		}
		else if (ctx_.n != 1)
			fail_at("D needs a direction subscript when n > 1", at);
		order[dir - 1] = static_cast<std::uint16_t>(exponent());
		return order;
	}

	OpenSum compose(const MultiIndex &order, const Expr &rest, std::size_t at)
	{
		if (rest.cyclic)
			fail_at("densities cannot appear inside an operator", at);
		if (ctx_.m != 1)
			fail_at("composition form needs m = 1; write the argument as p1, p2, ...", at);
		const OpenSum arg = OpenSum::of_letters(Letters{Letter::slot(1)}) * rest.open;
		return derivative_power(arg, order, ctx_);
	}

	Expr factor()
	{
		skip();
		const std::size_t at = pos_;
		const char c = peek();
		if (c == '(')
		{
			++pos_;
			Expr e = sum();
			expect(')');
			return e;
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			std::string num = digits();
			if (peek() == '/')
			{
				++pos_;
				const std::string den = digits();
				if (den.empty())
					fail("expected a denominator");
				num += "/" + den;
			}
			Rational q(num);
			if (q.get_den() == 0)
				fail_at("zero denominator", at);
			q.canonicalize();
			return Expr::of(OpenSum::scalar(q));
		}
		if (c == 'D' && op_mode_)
		{
			const MultiIndex order = derivative_symbol();
			expect('(');
			Expr e = sum();
			expect(')');
			if (e.cyclic)
				fail_at("densities cannot appear inside an operator", at);
			return Expr::of(derivative_power(e.open, order, ctx_));
		}
		const std::string id = identifier();
		if (id.empty())
			fail("expected a term");
		if (id == "cyc")
		{
			expect('(');
			Expr e = sum();
			expect(')');
			if (e.cyclic)
				fail_at("nested cyc", at);
			return Expr::of(close(e.open));
		}
		const std::string idx = digits();
		if (id == "x")
		{
			int dir = 1;
			if (!idx.empty())
				dir = small_number(idx, at, ctx_.n);
			else if (ctx_.n != 1)
				fail_at("write x1, x2, ... when n > 1", at);
			if (dir < 1)
				fail_at("base direction must be positive", at);
			MultiIndex e{};
			e[dir - 1] = static_cast<std::uint16_t>(exponent());
			return Expr::of(OpenSum::scalar(Poly::monomial(e)));
		}
		LetterKind kind;
		if (id == "a")
			kind = LetterKind::Even;
		else if (id == "b")
			kind = LetterKind::Odd;
		else if (id == "p" && op_mode_)
			kind = LetterKind::Slot;
		else
			fail_at(fmt::format("unknown identifier '{}'", id + idx), at);
		const int field = idx.empty() ? 1 : small_number(idx, at, 255);
		const MultiIndex order = suffix();
		return Expr::of(OpenSum::of_letters(Letters{make_letter(kind, field, order, at)}));
	}

	OpenSum open_sum()
	{
		const std::size_t at = pos_;
		Expr e = sum();
		if (e.cyclic)
			fail_at("expected an open sum, found a density", at);
		return e.open;
	}

	Covector covector()
	{
		expect('(');
		Covector p;
		do
			p.push_back(open_sum());
		while (eat(';'));
		expect(')');
		if (static_cast<int>(p.size()) > ctx_.m)
			fail("covector has more components than fields");
		p.resize(static_cast<std::size_t>(ctx_.m));
		return p;
	}

	GeneratingSection section()
	{
		expect('(');
		skip();
		const std::size_t at = pos_;
		GeneratingSection q;
		q.parity = small_number(digits(), at, 1);
		q.even.resize(static_cast<std::size_t>(ctx_.m));
		q.odd.resize(static_cast<std::size_t>(ctx_.m));
		while (eat(';'))
		{
			skip();
			const std::size_t kat = pos_;
			const std::string id = identifier();
			const std::string idx = digits();
			if (id != "a" && id != "b")
				fail_at("expected a component name a, b, a1, b1, ...", kat);
			const int field = idx.empty() ? 1 : small_number(idx, kat, 255);
			if (field < 1 || field > ctx_.m)
				fail_at(fmt::format("field index {} outside 1..{}", field, ctx_.m), kat);
			expect(':');
			(id == "a" ? q.even : q.odd)[field - 1] += open_sum();
		}
		expect(')');
		try
		{
			q.validate();
		}
		catch (const PreconditionError &e)
		{
			fail_at(e.what(), at);
		}
		return q;
	}

	DifferentialOperator op()
	{
		expect('(');
		op_mode_ = true;
		std::vector<OpenSum> rows;
		do
		{
			skip();
			const std::size_t at = pos_;
			rows.push_back(open_sum());
			for (const auto &[w, c] : rows.back())
			{
				int slots = 0;
				for (const Letter &l : w.letters())
					slots += l.kind == LetterKind::Slot;
				if (slots != 1)
					fail_at("every operator term must act on exactly one argument", at);
			}
		} while (eat(';'));
		op_mode_ = false;
		expect(')');
		if (static_cast<int>(rows.size()) > ctx_.m)
			fail("operator has more rows than fields");
		return DifferentialOperator::from_slotted(rows);
	}

	std::string_view s_;
	const JetContext &ctx_;
	std::size_t pos_ = 0;
	bool op_mode_ = false;
};

const char *kind_name(const Value &v)
{
	static constexpr const char *names[] = {"open sum", "density", "covector", "operator", "section"};
	return names[v.index()];
}

template <class T>
T expect_kind(Value v, const char *want)
{
	if (auto *p = std::get_if<T>(&v))
		return std::move(*p);
	throw ParseError(fmt::format("expected {}, found {}", want, kind_name(v)), 0);
}

} // namespace

Value parse_value(std::string_view text, const JetContext &ctx)
{
	return Parser(text, ctx).parse_top();
}

OpenSum parse_open(std::string_view text, const JetContext &ctx)
{
	return expect_kind<OpenSum>(parse_value(text, ctx), "an open sum");
}

CyclicSum parse_density(std::string_view text, const JetContext &ctx)
{
	Value v = parse_value(text, ctx);
	if (auto *open = std::get_if<OpenSum>(&v))
		return close(*open);
	return expect_kind<CyclicSum>(std::move(v), "a density");
}

Covector parse_covector(std::string_view text, const JetContext &ctx)
{
	Value v = parse_value(text, ctx);
	if (auto *open = std::get_if<OpenSum>(&v); open && ctx.m == 1)
		return Covector{*open};
	return expect_kind<Covector>(std::move(v), "a covector");
}

DifferentialOperator parse_operator(std::string_view text, const JetContext &ctx)
{
	return expect_kind<DifferentialOperator>(parse_value(text, ctx), "an operator");
}

GeneratingSection parse_section(std::string_view text, const JetContext &ctx)
{
	Value v = parse_value(text, ctx);
	if (auto *q = std::get_if<GeneratingSection>(&v))
		return *q;
	if (auto *open = std::get_if<OpenSum>(&v); open && ctx.m == 1)
		return GeneratingSection::even_field({*open});
	GeneratingSection q = GeneratingSection::even_field(expect_kind<Covector>(std::move(v), "a section"));
	try
	{
		q.validate();
	}
	catch (const PreconditionError &e)
	{
		throw ParseError(e.what(), 0);
	}
	return q;
}

namespace {

std::string rational_text(const Rational &q)
{
	return q.get_str();
}

std::string monomial_text(const MultiIndex &e, const JetContext &ctx)
{
	std::string r;
	for (int d = 0; d < static_cast<int>(kMaxBaseDim); ++d)
	{
		if (e[d] == 0)
			continue;
		if (!r.empty())
			r += '*';
		r += ctx.n == 1 ? std::string("x") : fmt::format("x{}", d + 1);
		if (e[d] > 1)
			r += fmt::format("^{}", e[d]);
	}
	return r;
}

/// A term "c * body" with the sign pulled out when c is a single monomial.
/// Returns (negative, text).
std::pair<bool, std::string> scaled(const Poly &c, const std::string &body, const JetContext &ctx)
{
	if (c.size() == 1)
	{
		const auto &[e, q] = *c.terms().begin();
		const bool negative = q < 0;
		const Rational mag = abs(q);
		std::string factors;
		if (mag != 1 || (total_degree(e) == 0 && body.empty()))
			factors = rational_text(mag);
		if (total_degree(e) > 0)
			factors += (factors.empty() ? "" : "*") + monomial_text(e, ctx);
		if (body.empty())
			return {negative, factors};
		return {negative, factors.empty() ? body : factors + "*" + body};
	}
	const std::string poly = "(" + to_string(c, ctx) + ")";
	return {false, body.empty() ? poly : poly + "*" + body};
}

std::string join_terms(const std::vector<std::pair<bool, std::string>> &terms)
{
	if (terms.empty())
		return "0";
	std::string r;
	for (std::size_t i = 0; i < terms.size(); ++i)
	{
		const auto &[negative, text] = terms[i];
		if (i == 0)
			r += negative ? "-" + text : text;
		else
			r += (negative ? " - " : " + ") + text;
	}
	return r;
}

std::string letters_text(const Letters &s, const JetContext &ctx)
{
	std::string r;
	for (const Letter &l : s)
	{
		if (!r.empty())
			r += '*';
		r += to_string(l, ctx);
	}
	return r;
}

} // namespace

std::string to_string(const Poly &p, const JetContext &ctx)
{
	std::vector<std::pair<bool, std::string>> terms;
	// Highest degree first reads naturally.
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
		terms.push_back(scaled(Poly::monomial(it->first, it->second), "", ctx));
	return join_terms(terms);
}

std::string to_string(const Letter &l, const JetContext &ctx)
{
	static constexpr char names[] = {'a', 'b', 'p'};
	std::string r(1, names[static_cast<int>(l.kind)]);
	if (ctx.m != 1 || l.field != 1)
		r += std::to_string(l.field);
	if (total_degree(l.order) == 0)
		return r;
	if (ctx.n == 1)
		return r + "_" + std::string(l.order[0], 'x');
	for (int d = 0; d < static_cast<int>(kMaxBaseDim); ++d)
		if (l.order[d] > 0)
			r += fmt::format("_{{x^{},{}}}", d + 1, l.order[d]);
	return r;
}

std::string to_string(const OpenSum &s, const JetContext &ctx)
{
	std::vector<std::pair<bool, std::string>> terms;
	for (const auto &[w, c] : s.sorted())
		terms.push_back(scaled(*c, letters_text(w->letters(), ctx), ctx));
	return join_terms(terms);
}

std::string to_string(const CyclicSum &s, const JetContext &ctx)
{
	if (s.is_zero())
		return "cyc(0)";
	std::vector<std::pair<bool, std::string>> terms;
	for (const auto &[w, c] : s.sorted())
		terms.push_back(
		    scaled(*c, "cyc(" + (w->empty() ? std::string("1") : letters_text(w->letters(), ctx)) + ")", ctx));
	return join_terms(terms);
}

std::string to_string(const Covector &p, const JetContext &ctx)
{
	std::string r = "cov(";
	for (std::size_t j = 0; j < p.size(); ++j)
		r += (j ? "; " : "") + to_string(p[j], ctx);
	return r + ")";
}

std::string to_string(const DifferentialOperator &a, const JetContext &ctx)
{
	const std::vector<OpenSum> rows = a.slotted(std::max(1, a.dimension()));
	std::string r = "op(";
	for (std::size_t i = 0; i < rows.size(); ++i)
		r += (i ? "; " : "") + to_string(rows[i], ctx);
	return r + ")";
}

std::string to_string(const GeneratingSection &q, const JetContext &ctx)
{
	std::string r = fmt::format("sec({}", q.parity & 1);
	for (std::size_t j = 0; j < q.even.size(); ++j)
		if (!q.even[j].is_zero())
			r += fmt::format("; {}: {}", to_string(Letter::even(static_cast<int>(j) + 1), ctx),
			                 to_string(q.even[j], ctx));
	for (std::size_t j = 0; j < q.odd.size(); ++j)
		if (!q.odd[j].is_zero())
			r += fmt::format("; {}: {}", to_string(Letter::odd(static_cast<int>(j) + 1), ctx),
			                 to_string(q.odd[j], ctx));
	return r + ")";
}

std::string to_string(const Value &v, const JetContext &ctx)
{
	return std::visit([&](const auto &x) { return to_string(x, ctx); }, v);
}

std::vector<std::string> read_expression_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw PreconditionError(fmt::format("cannot open '{}'", path));
	std::vector<std::string> r;
	std::string line;
	while (std::getline(in, line))
	{
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		const auto first = line.find_first_not_of(" \t\r");
		if (first == std::string::npos)
			continue;
		const auto last = line.find_last_not_of(" \t\r");
		r.push_back(line.substr(first, last - first + 1));
	}
	return r;
}

} // namespace ncjet
