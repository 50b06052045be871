#include "arclift/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>

namespace arclift::text {

namespace {

[[noreturn]] void fail(const std::string& message, std::string_view input) {
    throw Error(ErrorKind::parse_error, message, std::string(input));
}

enum class Tok { number, ident, op, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::number, std::string(s.substr(i, j - i))});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(s.substr(i, j - i))});
            i = j;
        } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Tok::op, std::string(1, c)});
            ++i;
        } else {
            fail(std::string("unexpected character '") + c + "'", s);
        }
    }
    out.push_back({Tok::end, ""});
    return out;
}

// Recursive descent over + - * / ^ ( ) with implicit multiplication.
template <class T>
class ExprParser {
public:
    struct Algebra {
        std::function<T(const mpz_class&)> number;
        std::function<T(const std::string&)> ident;
        std::function<T(const T&, const T&)> divide;
    };

    ExprParser(std::string_view input, Algebra alg) : input_(input), toks_(tokenize(input)), alg_(std::move(alg)) {}

    T parse() {
        if (peek().kind == Tok::end) fail("empty expression", input_);
        T v = expr();
        if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'", input_);
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(const char* op) {
        if (peek().kind == Tok::op && peek().text == op) {
            ++pos_;
            return true;
        }
        return false;
    }

    T expr() {
        T v = term();
        while (true) {
            if (accept("+"))
                v = v + term();
            else if (accept("-"))
                v = v - term();
            else
                return v;
        }
    }

    bool starts_atom() const {
        const Token& t = peek();
        return t.kind == Tok::number || t.kind == Tok::ident || (t.kind == Tok::op && t.text == "(");
    }

    T term() {
        T v = factor();
        while (true) {
            if (accept("*"))
                v = v * factor();
            else if (accept("/"))
                v = alg_.divide(v, factor());
            else if (starts_atom())
                v = v * factor();
            else
                return v;
        }
    }

    T factor() {
        if (accept("-")) return -factor();
        if (accept("+")) return factor();
        T base = atom();
        if (accept("^")) {
            if (peek().kind != Tok::number) fail("exponent must be a non-negative integer", input_);
            unsigned long e = 0;
            const std::string& digits = peek().text;
            auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
            if (ec != std::errc() || e > 100000) fail("exponent out of range", input_);
            ++pos_;
            T result = alg_.number(1);
            for (unsigned long i = 0; i < e; ++i) result = result * base;
            return result;
        }
        return base;
    }

    T atom() {
        const Token t = peek();
        if (t.kind == Tok::number) {
            ++pos_;
            return alg_.number(mpz_class(t.text));
        }
        if (t.kind == Tok::ident) {
            ++pos_;
            return alg_.ident(t.text);
        }
        if (accept("(")) {
            T v = expr();
            if (!accept(")")) fail("missing ')'", input_);
            return v;
        }
        fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", input_);
    }

    std::string_view input_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Algebra alg_;
};

std::size_t parse_size(std::string_view s, std::string_view what) {
    s = trim(s);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(std::string(what) + " must be a non-negative integer", s);
    return v;
}

long parse_long(std::string_view s, std::string_view what) {
    s = trim(s);
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(std::string(what) + " must be an integer", s);
    return v;
}

bool consume_prefix(std::string_view& s, std::string_view prefix) {
    if (s.substr(0, prefix.size()) != prefix) return false;
    s.remove_prefix(prefix.size());
    s = trim(s);
    return true;
}

// "[a, b, c]" -> items.
std::vector<std::string> parse_list(std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail("expected a bracketed list", s);
    const std::string_view inner = trim(s.substr(1, s.size() - 2));
    if (inner.empty()) return {};
    return split_top_level(inner, ',');
}

// "{k: v, ...}" -> key/value pairs in order.
std::map<std::string, std::string> parse_record(std::string_view s, std::vector<std::string> keys) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') fail("expected a braced record", s);
    std::map<std::string, std::string> out;
    for (const auto& item : split_top_level(s.substr(1, s.size() - 2), ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) fail("expected 'key: value'", item);
        const std::string key(trim(std::string_view(item).substr(0, colon)));
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail("unknown field '" + key + "'", s);
        if (!out.emplace(key, std::string(trim(std::string_view(item).substr(colon + 1)))).second)
            fail("duplicate field '" + key + "'", s);
    }
    for (const auto& k : keys)
        if (!out.contains(k)) fail("missing field '" + k + "'", s);
    return out;
}

// Splits "body + O(t^N)" into body and N.
std::pair<std::string_view, std::optional<std::size_t>> split_big_o(std::string_view s) {
    s = trim(s);
    const auto pos = s.rfind("O(");
    if (pos == std::string_view::npos) return {s, std::nullopt};
    std::string_view tail = s.substr(pos + 2);
    if (tail.empty() || tail.back() != ')') fail("malformed O(t^N)", s);
    tail = trim(tail.substr(0, tail.size() - 1));
    std::size_t n = 0;
    if (tail == "t") {
        n = 1;
    } else {
        if (!consume_prefix(tail, "t")) fail("malformed O(t^N)", s);
        if (!consume_prefix(tail, "^")) fail("malformed O(t^N)", s);
        if (!tail.empty() && tail.front() == '(' && tail.back() == ')') tail = tail.substr(1, tail.size() - 2);
        n = parse_size(tail, "precision");
    }
    std::string_view body = trim(s.substr(0, pos));
    if (body.empty() || body.back() != '+') fail("expected '+ O(t^N)'", s);
    body = trim(body.substr(0, body.size() - 1));
    return {body, n};
}

// Univariate polynomial in t (constant term first).
std::vector<RingElement> parse_t_polynomial(const Ring& ring, std::string_view s) {
    const MPoly p = parse_polynomial(ring, {"t"}, s);
    const long deg = p.total_degree();
    std::vector<RingElement> out(deg < 0 ? 1 : static_cast<std::size_t>(deg) + 1, ring.zero());
    for (const auto& [e, c] : p.terms()) out[e[0]] = c;
    return out;
}

bool is_compound(const std::string& s) {
    return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
}

// Joins signed terms: each term is (negative?, body).
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [neg, body] : terms) {
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

// Coefficient c times a monomial string m (m may be empty).
std::pair<bool, std::string> signed_term(const RingElement& c, const std::string& m) {
    std::string cs = to_string(c);
    if (is_compound(cs)) return {false, m.empty() ? cs : "(" + cs + ")*" + m};
    const bool neg = c.prints_negative();
    if (neg) cs = to_string(-c);
    if (m.empty()) return {neg, cs};
    if (cs == "1") return {neg, m};
    return {neg, cs + "*" + m};
}

std::string t_power(std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

std::string format_t_polynomial(const std::vector<RingElement>& coeffs, bool monic_leading) {
    std::vector<std::pair<bool, std::string>> terms;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k].is_zero()) continue;
        if (monic_leading && k + 1 == coeffs.size())
            terms.emplace_back(false, k == 0 ? "1" : t_power(k));
        else
            terms.push_back(signed_term(coeffs[k], t_power(k)));
    }
    return join_terms(terms);
}

}  // namespace

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') {
            if (--depth < 0) fail("unbalanced brackets", s);
        }
        if (c == sep && depth == 0) {
            out.emplace_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (depth != 0) fail("unbalanced brackets", s);
    out.emplace_back(trim(s.substr(start)));
    return out;
}

Ring parse_ring(std::string_view s) {
    const std::string_view input = s;
    s = trim(s);
    if (s == "Q") return Ring(RingDescriptor::rationals());
    auto args_of = [&](std::string_view name) -> std::optional<std::string_view> {
        std::string_view rest = s;
        if (!consume_prefix(rest, name)) return std::nullopt;
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') fail("malformed ring descriptor", input);
        return rest.substr(1, rest.size() - 2);
    };
    auto int_arg = [&](std::string_view a) -> std::int64_t { return parse_long(a, "ring modulus"); };
    if (auto a = args_of("Fp")) return Ring(RingDescriptor::prime_field(int_arg(*a)));
    if (auto a = args_of("Zmod")) return Ring(RingDescriptor::modular_ints(int_arg(*a)));
    if (auto a = args_of("Artin")) {
        const auto parts = split_top_level(*a, ';');
        if (parts.size() != 3) fail("Artin(base; generators; e) needs three parts", input);
        const Ring base = parse_ring(parts[0]);
        if (!base.is_field()) fail("Artin base must be Fp(p) or Q", input);
        std::vector<std::string> gens;
        for (const auto& g : split_top_level(parts[1], ',')) {
            const auto toks = tokenize(g);
            if (toks.size() != 2 || toks[0].kind != Tok::ident) fail("generator names must be identifiers", input);
            if (g == "t" || g == "O") fail("'" + g + "' is reserved", input);
            gens.push_back(g);
        }
        const long e = parse_long(parts[2], "truncation order");
        return Ring(RingDescriptor::artinian(base.descriptor(), std::move(gens), static_cast<int>(e)));
    }
    fail("unknown ring descriptor", input);
}

RingElement parse_element(const Ring& ring, std::string_view s) {
    typename ExprParser<RingElement>::Algebra alg{
        [&](const mpz_class& n) { return ring.from_integer(n); },
        [&](const std::string& name) {
            auto idx = ring.generator_index(name);
            if (!idx) fail("unknown generator '" + name + "'", s);
            return ring.generator(*idx);
        },
        [](const RingElement& a, const RingElement& b) { return a * invert(b); },
    };
    return ExprParser<RingElement>(s, std::move(alg)).parse();
}

MPoly parse_polynomial(const Ring& ring, const std::vector<std::string>& vars, std::string_view s) {
    const std::size_t n = vars.size();
    typename ExprParser<MPoly>::Algebra alg{
        [&](const mpz_class& v) { return MPoly::constant(ring.from_integer(v), n); },
        [&](const std::string& name) {
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it != vars.end()) return MPoly::variable(ring, n, static_cast<std::size_t>(it - vars.begin()));
            auto idx = ring.generator_index(name);
            if (!idx) fail("unknown variable '" + name + "'", s);
            return MPoly::constant(ring.generator(*idx), n);
        },
        [&](const MPoly& a, const MPoly& b) {
            if (b.total_degree() > 0) fail("division by a non-constant polynomial", s);
            if (b.is_zero()) fail("division by zero", s);
            return a * invert(b.coefficient(Exponents(n, 0)));
        },
    };
    return ExprParser<MPoly>(s, std::move(alg)).parse();
}

std::string format_polynomial(const MPoly& p, const std::vector<std::string>& vars) {
    if (vars.size() != p.nvars()) throw Error(ErrorKind::arity_mismatch, "wrong number of variable names");
    std::vector<std::pair<bool, std::string>> terms;
    for (const auto& [e, c] : p.terms()) {
        std::string m;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!m.empty()) m += "*";
            m += vars[i];
            if (e[i] > 1) m += "^" + std::to_string(e[i]);
        }
        terms.push_back(signed_term(c, m));
    }
    return join_terms(terms);
}

TruncatedSeries parse_series(const Ring& ring, std::string_view s, std::optional<std::size_t> default_precision) {
    auto [body, n] = split_big_o(s);
    if (!body.empty() && body.front() == '[') {
        std::vector<RingElement> coeffs;
        for (const auto& item : parse_list(body)) coeffs.push_back(parse_element(ring, item));
        const std::size_t prec = n.value_or(coeffs.size());
        if (prec == 0) fail("series precision must be >= 1", s);
        if (coeffs.size() > prec) fail("more coefficients than the stated precision", s);
        return TruncatedSeries::from_polynomial(ring, coeffs, prec);
    }
    if (!n) n = default_precision;
    if (!n) fail("a polynomial series needs + O(t^N) or an explicit precision", s);
    if (*n == 0) fail("series precision must be >= 1", s);
    return TruncatedSeries::from_polynomial(ring, parse_t_polynomial(ring, body), *n);
}

std::string format_series(const TruncatedSeries& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.precision(); ++i) {
        if (i) out += ", ";
        out += to_string(s[i]);
    }
    return out + "] + O(t^" + std::to_string(s.precision()) + ")";
}

LaurentSeries parse_laurent(const Ring& ring, std::string_view s) {
    const std::string_view input = s;
    s = trim(s);
    if (!consume_prefix(s, "t^(")) return LaurentSeries{0, parse_series(ring, s)};
    const auto close = s.find(')');
    if (close == std::string_view::npos) fail("missing ')' after the exponent", input);
    const long offset = parse_long(s.substr(0, close), "exponent");
    s = trim(s.substr(close + 1));
    if (!consume_prefix(s, "*")) fail("expected '*' after t^(k)", input);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail("expected a parenthesised series", input);
    return LaurentSeries{offset, parse_series(ring, s.substr(1, s.size() - 2))};
}

std::string format_laurent(const LaurentSeries& s) {
    return "t^(" + std::to_string(s.offset) + ") * (" + format_series(s.body) + ")";
}

MonicPoly parse_monic(const Ring& ring, std::string_view s) {
    auto c = parse_t_polynomial(ring, s);
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    if (!c.back().is_one()) fail("polynomial is not monic", s);
    c.pop_back();
    return MonicPoly(ring, std::move(c));
}

std::string format_monic(const MonicPoly& q) { return format_t_polynomial(q.coefficients(), true); }

LowPoly parse_low(const Ring& ring, std::string_view s, std::size_t bound) {
    auto c = parse_t_polynomial(ring, s);
    while (c.size() > bound) {
        if (!c.back().is_zero()) fail("degree must be below " + std::to_string(bound), s);
        c.pop_back();
    }
    c.resize(bound, ring.zero());
    return LowPoly(ring, std::move(c));
}

std::string format_low(const LowPoly& a) { return format_t_polynomial(a.coefficients(), false); }

std::string format_factorization(const FactorizationRecord& f) {
    return "{u: " + format_series(f.u) + ", q: " + format_monic(f.q) + ", n: " + std::to_string(f.n) +
           ", N: " + std::to_string(f.precision) + "}";
}

FactorizationRecord parse_factorization(const Ring& ring, std::string_view s) {
    auto rec = parse_record(s, {"u", "q", "n", "N"});
    FactorizationRecord out;
    out.u = parse_series(ring, rec["u"]);
    out.q = parse_monic(ring, rec["q"]);
    out.n = parse_size(rec["n"], "n");
    out.precision = parse_size(rec["N"], "N");
    return out;
}

std::string format_modq(const ModQVector& v) {
    std::string out = "{q: " + format_monic(v.q) + ", comps: [";
    for (std::size_t i = 0; i < v.comps.size(); ++i) {
        if (i) out += ", ";
        out += format_low(v.comps[i]);
    }
    return out + "]}";
}

ModQVector parse_modq(const Ring& ring, std::string_view s) {
    auto rec = parse_record(s, {"q", "comps"});
    ModQVector out{parse_monic(ring, rec["q"]), {}};
    for (const auto& c : parse_list(rec["comps"])) out.comps.push_back(parse_low(ring, c, out.q.degree()));
    return out;
}

PolyMap parse_map(const Ring& ring, std::string_view s) {
    std::map<std::string, std::string> fields;
    for (const auto& part : split_top_level(s, ';')) {
        if (part.empty()) continue;
        const auto colon = part.find(':');
        if (colon == std::string::npos) fail("expected 'key: value'", part);
        const std::string key(trim(std::string_view(part).substr(0, colon)));
        if (key != "vars" && key != "split" && key != "eqs") fail("unknown map field '" + key + "'", s);
        if (!fields.emplace(key, std::string(trim(std::string_view(part).substr(colon + 1)))).second)
            fail("duplicate map field '" + key + "'", s);
    }
    if (!fields.contains("vars") || !fields.contains("eqs")) fail("a map needs vars and eqs", s);
    std::vector<std::string> vars;
    for (const auto& v : parse_list(fields["vars"])) {
        const auto toks = tokenize(v);
        if (toks.size() != 2 || toks[0].kind != Tok::ident) fail("variable names must be identifiers", v);
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) fail("duplicate variable '" + v + "'", s);
        vars.push_back(v);
    }
    std::vector<MPoly> eqs;
    for (const auto& e : parse_list(fields["eqs"])) eqs.push_back(parse_polynomial(ring, vars, e));
    std::size_t split = vars.size() >= eqs.size() ? vars.size() - eqs.size() : 0;
    if (fields.contains("split")) split = parse_size(fields["split"], "split");
    return PolyMap::make(ring, std::move(vars), split, std::move(eqs));
}

std::string format_map(const PolyMap& f) {
    std::string out = "vars: [";
    for (std::size_t i = 0; i < f.vars.size(); ++i) out += (i ? ", " : "") + f.vars[i];
    out += "]; split: " + std::to_string(f.split) + "; eqs: [";
    for (std::size_t i = 0; i < f.eqs.size(); ++i) out += (i ? ", " : "") + format_polynomial(f.eqs[i], f.vars);
    return out + "]";
}

std::vector<TruncatedSeries> parse_arc(const Ring& ring, std::string_view s,
                                       std::optional<std::size_t> default_precision) {
    std::vector<TruncatedSeries> out;
    for (const auto& c : split_top_level(s, ';')) out.push_back(parse_series(ring, c, default_precision));
    return out;
}

}  // namespace arclift::text
