#include "toricdd/format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace toricdd {

std::string to_string(const Monomial& m, const RingSpec& ring) {
    if (m.is_one()) return "1";
    std::string out;
    for (int k = 0; k < m.nvars(); ++k) {
        std::int32_t e = m.exp(k);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.roster[k].name();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

static std::string coeff_string(const mpq_class& c) {
    return c.get_str();  // p or p/q, canonical form
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const RingSpec& ring = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        mpq_class a = abs(t.coeff);
        bool neg = t.coeff < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms = to_string(t.mono, ring);
        if (ms == "1") {
            out += coeff_string(a);
        } else if (a == 1) {
            out += ms;
        } else {
            out += coeff_string(a) + "*" + ms;
        }
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument(std::string("expected '") + c + "' at position " +
                                        std::to_string(pos) + " in polynomial text");
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer at position " +
                                                      std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }
};

VarId parse_var(Lexer& lx) {
    char kind = lx.peek();
    ++lx.pos;
    lx.expect('[');
    if (kind == 's' || kind == 't') {
        long a = lx.integer();
        lx.expect(']');
        return kind == 's' ? VarId::s(static_cast<int>(a)) : VarId::t(static_cast<int>(a));
    }
    long l = lx.integer();
    lx.expect(',');
    long i = lx.integer();
    lx.expect(',');
    long j = lx.integer();
    lx.expect(']');
    if (kind == 'x') return VarId::x(static_cast<int>(l), static_cast<int>(i), static_cast<int>(j));
    if (kind == 'z') return VarId::z(static_cast<int>(l), static_cast<int>(i), static_cast<int>(j));
    throw std::invalid_argument(std::string("unknown variable family '") + kind + "'");
}

bool at_var(Lexer& lx) {
    char c = lx.peek();
    return c == 'x' || c == 's' || c == 't' || c == 'z';
}

// term := [rational '*'] var ('*' var)* | rational, with var := name '[' .. ']' ['^' k]
Term parse_term(Lexer& lx, const RingPtr& ring) {
    mpq_class coeff = 1;
    std::vector<std::int32_t> exps(ring->nvars(), 0);
    bool saw_factor = false;

    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        long p = lx.integer();
        long q = 1;
        if (lx.accept('/')) q = lx.integer();
        coeff = make_rational(p, q);
        saw_factor = true;
        if (!lx.accept('*')) return {Monomial(std::move(exps)), coeff};
    }
    while (true) {
        if (!at_var(lx)) {
            if (saw_factor) throw std::invalid_argument("expected variable at position " +
                                                        std::to_string(lx.pos));
            break;
        }
        VarId v = parse_var(lx);
        std::int32_t e = 1;
        if (lx.accept('^')) e = static_cast<std::int32_t>(lx.integer());
        exps[ring->index_of_checked(v)] += e;
        saw_factor = true;
        if (!lx.accept('*')) break;
    }
    if (!saw_factor) throw std::invalid_argument("empty term at position " + std::to_string(lx.pos));
    return {Monomial(std::move(exps)), coeff};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Lexer lx(text);
    std::vector<Term> terms;
    bool neg = lx.accept('-');
    if (!neg) lx.accept('+');
    if (lx.done()) throw std::invalid_argument("empty polynomial text");
    while (true) {
        Term t = parse_term(lx, ring);
        if (neg) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        if (lx.done()) break;
        if (lx.accept('+'))
            neg = false;
        else if (lx.accept('-'))
            neg = true;
        else
            throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(lx.pos));
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> parse_ideal_lines(const std::string& text, const RingPtr& ring) {
    std::vector<Polynomial> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        out.push_back(parse_polynomial(line, ring));
    }
    return out;
}

std::vector<VarId> scan_variables(const std::string& text) {
    std::vector<VarId> out;
    Lexer lx(text);
    while (!lx.done()) {
        if (lx.s[lx.pos] == '#') {
            while (lx.pos < lx.s.size() && lx.s[lx.pos] != '\n') ++lx.pos;
        } else if (at_var(lx)) {
            out.push_back(parse_var(lx));
        } else {
            ++lx.pos;
        }
    }
    return out;
}

}  // namespace toricdd
