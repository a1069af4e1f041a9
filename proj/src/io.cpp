#include "pd3c/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace pd3c {

MonomialOrder order_by_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    if (name == "grlex") return MonomialOrder::grlex();
    throw ParseError("unknown monomial order: " + name, 1, 1);
}

std::string polynomial_to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const PolyRing& R = *f.ring();
    std::string out;
    bool first = true;
    for (const Term& t : f.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        for (size_t i = 0; i < R.nvars(); ++i) {
            uint16_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += R.name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            out += mono;
        } else {
            out += std::to_string(t.coeff) + "*" + mono;
        }
    }
    return out;
}

namespace {

struct Scanner {
    std::string_view s;
    size_t i = 0;
    int line;

    explicit Scanner(std::string_view text, int line_no) : s(text), line(line_no) {}

    int col() const { return static_cast<int>(i) + 1; }
    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col()); }

    unsigned long long integer() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected an integer");
        unsigned long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (v > (1ull << 60)) fail("integer literal too large");
            v = v * 10 + static_cast<unsigned long long>(s[i] - '0');
            ++i;
        }
        return v;
    }

    std::string name() {
        skip_ws();
        if (i >= s.size()) fail("expected a name");
        char c = s[i];
        if (c == '@') fail("names starting with '@' are reserved");
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a name");
        std::string out;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            out += s[i];
            ++i;
        }
        return out;
    }
};

} // namespace

Polynomial polynomial_from_string(const RingPtr& r, std::string_view text, int line) {
    Scanner sc(text, line);
    const PrimeField& F = r->field();
    std::vector<Term> terms;

    bool negative = false;
    if (sc.peek() == '+' || sc.peek() == '-') {
        negative = sc.peek() == '-';
        ++sc.i;
    }
    if (sc.eof()) sc.fail("empty polynomial");

    for (;;) {
        // one term: factors joined by '*'
        uint32_t coeff = 1;
        Monomial mono(r->nvars());
        bool more = true;
        bool any_factor = false;
        while (more) {
            char c = sc.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                unsigned long long v = sc.integer();
                coeff = F.mul(coeff, F.from_int(static_cast<long long>(v % F.p())));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '@') {
                int name_col = sc.col();
                std::string nm = sc.name();
                int vi = r->var_index(nm);
                if (vi < 0) throw ParseError("unknown variable: " + nm, line, name_col);
                unsigned long long e = 1;
                if (sc.peek() == '^') {
                    ++sc.i;
                    e = sc.integer();
                    if (e > 0xffff) sc.fail("exponent exceeds 65535");
                }
                mono = mono * Monomial::variable(r->nvars(), static_cast<size_t>(vi),
                                                 static_cast<uint16_t>(e));
            } else {
                sc.fail("expected a coefficient or a variable");
            }
            any_factor = true;
            if (sc.peek() == '*') {
                ++sc.i;
            } else {
                more = false;
            }
        }
        if (!any_factor) sc.fail("empty term");
        if (negative) coeff = F.neg(coeff);
        terms.push_back({coeff, std::move(mono)});

        if (sc.eof()) break;
        char c = sc.peek();
        if (c == '+' || c == '-') {
            negative = c == '-';
            ++sc.i;
            if (sc.eof()) sc.fail("trailing sign");
        } else {
            sc.fail("expected '+', '-' or end of polynomial");
        }
    }
    return Polynomial::from_terms(r, std::move(terms));
}

std::string ring_header_line(const PolyRing& r) {
    std::string out = "ring " + std::to_string(r.field().p()) + " " + std::to_string(r.nvars()) +
                      " " + r.order().name();
    for (const auto& n : r.names()) out += " " + n;
    return out;
}

std::string ideal_to_text(const Ideal& I) {
    std::string out = ring_header_line(*I.ring()) + "\n";
    for (const Polynomial& g : I.gens()) out += polynomial_to_string(g) + "\n";
    return out;
}

namespace {

std::string strip_comment(const std::string& raw) {
    size_t h = raw.find('#');
    std::string s = h == std::string::npos ? raw : raw.substr(0, h);
    return s;
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

bool valid_name(const std::string& n) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) return false;
    for (char c : n)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

IdealFileContents read_ideal_file(std::istream& in) {
    std::string raw;
    int line_no = 0;
    RingPtr ring;
    std::vector<Polynomial> gens;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string s = strip_comment(raw);
        if (blank(s)) continue;
        if (!ring) {
            std::istringstream hs(s);
            std::string kw;
            hs >> kw;
            if (kw != "ring") throw ParseError("expected 'ring' header", line_no, 1);
            long long p = 0, n = 0;
            std::string order_name;
            if (!(hs >> p >> n >> order_name))
                throw ParseError("ring header needs '<p> <n> <order> <names...>'", line_no, 1);
            if (p <= 2 || p >= (1ll << 31))
                throw ParseError("prime out of range (odd prime below 2^31 required)", line_no, 1);
            if (n < 0 || n > 4096) throw ParseError("variable count out of range", line_no, 1);
            std::vector<std::string> names;
            std::string nm;
            while (hs >> nm) {
                if (!valid_name(nm))
                    throw ParseError("invalid variable name: " + nm, line_no, 1);
                names.push_back(nm);
            }
            if (static_cast<long long>(names.size()) != n)
                throw ParseError("variable count does not match the names listed", line_no, 1);
            MonomialOrder ord = [&] {
                try {
                    return order_by_name(order_name);
                } catch (const ParseError&) {
                    throw ParseError("unknown monomial order: " + order_name, line_no, 1);
                }
            }();
            PrimeField field = [&] {
                try {
                    return PrimeField(static_cast<uint32_t>(p));
                } catch (const Error& e) {
                    throw ParseError(e.what(), line_no, 1);
                }
            }();
            try {
                ring = PolyRing::make(field, std::move(names), ord);
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no, 1);
            }
            continue;
        }
        gens.push_back(polynomial_from_string(ring, s, line_no));
    }
    if (!ring) throw ParseError("missing 'ring' header", line_no == 0 ? 1 : line_no, 1);
    return {ring, std::move(gens)};
}

Ideal read_ideal(std::istream& in) {
    IdealFileContents c = read_ideal_file(in);
    return Ideal(c.ring, std::move(c.gens));
}

} // namespace pd3c
