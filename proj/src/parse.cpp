#include "nh/exactpoly.hpp"

#include <algorithm>
#include <cctype>

namespace nh {

namespace {

class Parser {
public:
    Parser(const RingPtr& ring, std::string_view s) : ring_(ring), s_(s) {}

    Polynomial run()
    {
        std::vector<Term> terms;
        skip();
        if (at_end())
            throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            Term t = term();
            if (sign < 0)
                t.c = -t.c;
            terms.push_back(std::move(t));
            first = false;
            skip();
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    Term term()
    {
        Term t{Monomial(ring_->nvars()), Coeff(1)};
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            t.c = coefficient();
            skip();
            if (at_end() || peek() != '*')
                return t;
            ++pos_;
            skip();
            factor(t.m);
        } else {
            factor(t.m);
        }
        skip();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip();
            factor(t.m);
            skip();
        }
        return t;
    }

    Coeff coefficient()
    {
        std::size_t start = pos_;
        mpz_class num = digits();
        mpz_class den = 1;
        skip();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected denominator", pos_);
            den = digits();
            if (den == 0)
                throw ParseError("zero denominator", start);
        }
        Coeff c(num, den);
        c.canonicalize();
        return c;
    }

    mpz_class digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    void factor(Monomial& m)
    {
        std::size_t start = pos_;
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("expected variable name", pos_);
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        std::string_view name = s_.substr(start, pos_ - start);
        auto idx = ring_->index(name);
        if (!idx)
            throw ParseError("unknown variable '" + std::string(name) + "'", start);
        int e = 1;
        skip();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected exponent", pos_);
            std::size_t es = pos_;
            mpz_class v = digits();
            if (!v.fits_sint_p() || v > 100000)
                throw ParseError("exponent too large", es);
            e = static_cast<int>(v.get_si());
        }
        m[*idx] += e;
    }

    const RingPtr& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text)
{
    return Parser(ring, text).run();
}

Coeff parse_coeff(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty())
        throw ParseError("empty coefficient", 0);
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    std::size_t slash = s.find('/');
    auto all_digits = [&](std::size_t a, std::size_t b) {
        if (a >= b)
            return false;
        for (std::size_t k = a; k < b; ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                return false;
        return true;
    };
    std::size_t end_num = slash == std::string::npos ? s.size() : slash;
    if (!all_digits(i, end_num))
        throw ParseError("malformed coefficient '" + s + "'", i);
    if (slash != std::string::npos && !all_digits(slash + 1, s.size()))
        throw ParseError("malformed denominator", slash + 1);
    Coeff c;
    if (s[0] == '+')
        s.erase(0, 1);
    c.set_str(s, 10);
    if (c.get_den() == 0)
        throw ParseError("zero denominator", slash);
    c.canonicalize();
    return c;
}

std::string to_string(const Coeff& c) { return c.get_str(); }

std::string to_string(const Monomial& m, const Ring& ring)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.name(i);
        if (m[i] > 1)
            out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

// Terms are printed by descending total degree, ties by the storage order.
std::string to_string(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::vector<const Term*> ts;
    for (auto& t : f.terms())
        ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(),
                     [](const Term* a, const Term* b) { return a->m.degree() > b->m.degree(); });
    std::string out;
    bool first = true;
    for (const Term* t : ts) {
        Coeff c = t->c;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        bool unit = c == 1;
        if (t->m.is_one()) {
            out += c.get_str();
        } else {
            if (!unit)
                out += c.get_str() + "*";
            out += to_string(t->m, *f.ring());
        }
    }
    return out;
}

}  // namespace nh
