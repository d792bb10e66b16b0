#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "ncl/element.hpp"

namespace ncl {

// ---------------------------------------------------------------------------
// Printing. Terms render as (coefficient)*factors*zop, e.g.
//   ((1)/(z - 1))*q[1,1]*p[2,1]^2*dz
// which the parser below reads back verbatim.
// ---------------------------------------------------------------------------

inline std::string zop_str(ZKind kind, long k) {
    if (k == 0) return "";
    if (kind == ZKind::Diff) return k == 1 ? "dz" : "dz^" + std::to_string(k);
    return k == 1 ? "S" : "S^" + std::to_string(k);
}

inline std::string Element::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : t_) {
        if (!s.empty()) s += " + ";
        std::string term = "(" + c.str() + ")";
        for (auto& [g, e] : k.w.f) {
            term += "*" + pres_->gen(g).name;
            if (e > 1) term += "^" + std::to_string(e);
        }
        std::string z = zop_str(kind_, k.zexp);
        if (!z.empty()) term += "*" + z;
        s += term;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

namespace parse_detail {

struct Lexer {
    explicit Lexer(const std::string& s) : s_(s) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool ident_ahead() { return std::isalpha(static_cast<unsigned char>(peek())); }
    bool digit_ahead() { return std::isdigit(static_cast<unsigned char>(peek())); }

    std::string ident() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }

    long integer() {
        skip();
        bool neg = accept('-');
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " +
                                    why + " in \"" + s_ + "\"");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

inline RatFun parse_ratexpr(Lexer& lx);

inline RatFun parse_ratom(Lexer& lx) {
    if (lx.accept('(')) {
        RatFun r = parse_ratexpr(lx);
        lx.expect(')');
        return r;
    }
    if (lx.ident_ahead()) {
        std::string id = lx.ident();
        if (id == "z") return RatFun::var();
        lx.fail("unknown symbol '" + id + "' in coefficient");
    }
    return RatFun(Rational(lx.integer()));
}

inline RatFun parse_rpow(Lexer& lx) {
    if (lx.accept('-')) return -parse_rpow(lx);
    RatFun base = parse_ratom(lx);
    if (lx.accept('^')) {
        long e = lx.integer();
        RatFun r(Rational(1));
        RatFun b = e < 0 ? base.inverse() : base;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * b;
        return r;
    }
    return base;
}

inline RatFun parse_rterm(Lexer& lx) {
    RatFun r = parse_rpow(lx);
    for (;;) {
        if (lx.accept('*'))
            r = r * parse_rpow(lx);
        else if (lx.accept('/'))
            r = r / parse_rpow(lx);
        else
            return r;
    }
}

inline RatFun parse_ratexpr(Lexer& lx) {
    RatFun r = parse_rterm(lx);
    for (;;) {
        if (lx.accept('+'))
            r = r + parse_rterm(lx);
        else if (lx.peek() == '-') {
            lx.accept('-');
            r = r - parse_rterm(lx);
        } else
            return r;
    }
}

inline Element parse_atom(Lexer& lx, const PresPtr& pres) {
    if (lx.accept('(')) {
        RatFun f = parse_ratexpr(lx);
        lx.expect(')');
        return Element::with_coeff(pres, f);
    }
    if (lx.digit_ahead()) return Element::scalar(pres, Rational(lx.integer()));
    std::string id = lx.ident();
    if (id == "dz") return Element::dz_power(pres, 1);
    if (id == "S") return Element::shift_power(pres, 1);
    if (id == "lam" || id == "laminv") {
        int g = id == "lam" ? pres->lam() : pres->lam_inv();
        if (g < 0) lx.fail("'" + id + "' not available in this presentation");
        return Element::generator(pres, g);
    }
    GenKind kind;
    bool has_col = false, has_site = true;
    if (id == "q")
        kind = GenKind::HeisenbergQ;
    else if (id == "p")
        kind = GenKind::HeisenbergP;
    else if (id == "e") {
        kind = GenKind::GlBasis;
        has_col = true;
    } else if (id == "E") {
        kind = GenKind::ExpPos;
    } else if (id == "Einv") {
        kind = GenKind::ExpNeg;
    } else {
        lx.fail("unknown symbol '" + id + "'");
    }
    lx.expect('[');
    int row = static_cast<int>(lx.integer());
    int col = 0, site = 0;
    if (has_col) {
        lx.expect(',');
        col = static_cast<int>(lx.integer());
        lx.expect(';');
        site = static_cast<int>(lx.integer());
    } else if (kind == GenKind::ExpPos || kind == GenKind::ExpNeg) {
        site = row;
        row = 1;
        has_site = false;
    } else {
        lx.expect(',');
        site = static_cast<int>(lx.integer());
    }
    (void)has_site;
    lx.expect(']');
    int g = pres->find(kind, row, col, site);
    if (g < 0) lx.fail("generator '" + id + "[...]' outside presentation bounds");
    return Element::generator(pres, g);
}

inline Element parse_factor(Lexer& lx, const PresPtr& pres) {
    // exponent applies to the parsed atom; S admits negative powers
    size_t mark = lx.pos_;
    if (lx.ident_ahead()) {
        std::string id = lx.ident();
        if (id == "dz" || id == "S") {
            long e = 1;
            if (lx.accept('^')) e = lx.integer();
            if (id == "dz") return Element::dz_power(pres, e);
            return Element::shift_power(pres, e);
        }
        lx.pos_ = mark;
    }
    Element base = parse_atom(lx, pres);
    if (lx.accept('^')) {
        long e = lx.integer();
        if (e < 0) lx.fail("negative exponent on a non-invertible factor");
        Element r = Element::one(pres);
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    }
    return base;
}

inline Element parse_term(Lexer& lx, const PresPtr& pres) {
    Element r = parse_factor(lx, pres);
    while (lx.accept('*')) r = r * parse_factor(lx, pres);
    return r;
}

}  // namespace parse_detail

/// Parse an element in the expression grammar: q[i,j], p[i,j], e[i,j;a],
/// E[i], Einv[i], dz, S, S^-1, lam, rational-function coefficients in
/// parentheses, joined with *, +, -, ^.
inline Element parse_element(const std::string& text, const PresPtr& pres) {
    parse_detail::Lexer lx(text);
    bool neg = lx.accept('-');
    Element r = parse_detail::parse_term(lx, pres);
    if (neg) r = -r;
    while (!lx.eof()) {
        if (lx.accept('+'))
            r += parse_detail::parse_term(lx, pres);
        else if (lx.accept('-'))
            r -= parse_detail::parse_term(lx, pres);
        else
            lx.fail("trailing input");
    }
    return r;
}

inline PresPtr presentation_from_spec_impl(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::map<std::string, int> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad presentation spec: " + spec);
            kv[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
        }
    }
    auto get = [&](const std::string& k, int dflt) {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    };
    if (head == "weyl") return Presentation::weyl(get("n", 1), get("k", 1));
    if (head == "glsum") return Presentation::gl_sum(get("n", 2), get("m", 1));
    if (head == "glpoly") return Presentation::gl_poly(get("n", 2), get("N", 1));
    if (head == "toda") return Presentation::toda(get("n", 2));
    if (head == "commutative") return Presentation::commutative(get("n", 1), get("k", 1));
    throw std::invalid_argument("unknown presentation kind: " + head);
}

inline PresPtr presentation_from_spec(const std::string& spec) {
    return presentation_from_spec_impl(spec);
}

}  // namespace ncl
