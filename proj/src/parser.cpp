#include "cayley/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cayley {

namespace {

enum class Base { UDual, U, Q, Uperp };

class Parser {
  public:
    Parser(const std::string& text, bool allow_shift)
        : text_(text), allow_shift_(allow_shift) {}

    FormalComplex run() {
        auto x = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return x;
    }

  private:
    const std::string& text_;
    bool allow_shift_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_consume(const std::string& token) {
        skip_ws();
        if (text_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        return std::stoi(text_.substr(start, pos_ - start));
    }

    static bool plain(const FormalComplex& x) {
        return x.terms.size() == 1 && x.terms.begin()->first == 0;
    }

    FormalComplex parse_expr() {
        FormalComplex acc = parse_term();
        while (try_consume("+")) {
            FormalComplex rhs = parse_term();
            for (auto& [deg, sum] : rhs.terms) {
                auto& slot = acc.terms[deg];
                slot = add(slot, sum);
            }
            acc.kernel_cert.reset();
        }
        return acc;
    }

    FormalComplex parse_term() {
        FormalComplex acc = parse_factor();
        while (peek() == '*') {
            std::size_t at = pos_;
            ++pos_;
            FormalComplex rhs = parse_factor();
            if (!plain(acc) || !plain(rhs)) {
                pos_ = at;
                fail("'*' requires plain bundle operands, not shifted complexes");
            }
            FormalComplex prod;
            prod.terms[0] = tensor(acc.terms.at(0), rhs.terms.at(0));
            acc = prod;
        }
        return acc;
    }

    FormalComplex parse_factor() {
        FormalComplex x = parse_atom();
        if (peek() == '(') {
            ++pos_;
            int t = parse_int();
            expect(')');
            x = twist(x, t);
        }
        if (peek() == '[') {
            std::size_t at = pos_;
            ++pos_;
            int m = parse_int();
            expect(']');
            if (!allow_shift_) {
                pos_ = at;
                fail("homological shift is not accepted in this context");
            }
            x = shift(x, m);
        }
        return x;
    }

    Base parse_base() {
        bool wrapped = false;
        if (peek() == '(') {
            wrapped = true;
            ++pos_;
        }
        Base b;
        if (try_consume("Uperp"))
            b = Base::Uperp;
        else if (try_consume("U*"))
            b = Base::UDual;
        else if (try_consume("U"))
            b = Base::U;
        else if (try_consume("Q"))
            b = Base::Q;
        else
            fail("expected a base bundle: U, U*, Q or Uperp");
        if (wrapped) expect(')');
        return b;
    }

    FormalComplex schur_of(Weight w, Base base, std::size_t at) {
        int rank = (base == Base::UDual || base == Base::U) ? 3 : 4;
        if (static_cast<int>(w.size()) > rank) {
            pos_ = at;
            fail("Schur weight has more entries than the rank of the base");
        }
        w.resize(rank, 0);
        if (base == Base::U || base == Base::Q) {
            // Sigma^w of the dual bundle equals Sigma^{-reverse(w)} of the base.
            std::reverse(w.begin(), w.end());
            for (int& e : w) e = -e;
        }
        if (!std::is_sorted(w.rbegin(), w.rend())) {
            pos_ = at;
            fail("Schur weight must be non-increasing (after zero-padding)");
        }
        SchurBundle s = (base == Base::UDual || base == Base::U)
                            ? make_bundle(3, 7, w)
                            : make_bundle(3, 7, {0, 0, 0}, w);
        return FormalComplex::bundle(s);
    }

    FormalComplex parse_atom() {
        skip_ws();
        std::size_t at = pos_;
        if (try_consume("(")) {
            FormalComplex x = parse_expr();
            expect(')');
            return x;
        }
        if (try_consume("S{")) {
            Weight w;
            w.push_back(parse_int());
            while (try_consume(",")) w.push_back(parse_int());
            expect('}');
            return schur_of(w, parse_base(), at);
        }
        if (try_consume("Sym")) {
            int m = parse_int();
            if (m < 0) {
                pos_ = at;
                fail("symmetric power must be non-negative");
            }
            return schur_of(m == 0 ? Weight{} : Weight{m}, parse_base(), at);
        }
        if (try_consume("W")) {
            int m = parse_int();
            Base b = parse_base();
            int rank = (b == Base::UDual || b == Base::U) ? 3 : 4;
            if (m < 0 || m > rank) {
                pos_ = at;
                fail("wedge power must lie between 0 and the rank of the base");
            }
            return schur_of(Weight(m, 1), b, at);
        }
        if (try_consume("Uperp"))
            return FormalComplex::bundle(make_bundle(3, 7, {0, 0, 0}, {1, 0, 0, 0}));
        if (try_consume("U*"))
            return FormalComplex::bundle(make_bundle(3, 7, {1, 0, 0}));
        if (try_consume("U"))
            return FormalComplex::bundle(make_bundle(3, 7, {0, 0, -1}));
        if (try_consume("Q"))
            return FormalComplex::bundle(make_bundle(3, 7, {0, 0, 0}, {0, 0, 0, -1}));
        if (try_consume("O")) return presets::O();
        if (try_consume("E10")) return presets::E10();
        if (try_consume("E16")) return presets::E16();
        if (try_consume("R")) return presets::R();
        if (try_consume("K")) return presets::K();
        fail("expected an atom (O, U, U*, Q, Uperp, S{...}, W, Sym, R, K, E10, E16 or '(')");
    }
};

std::string join_weight(const Weight& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ",";
        out << w[i];
    }
    return out.str();
}

bool all_zero(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int e) { return e == 0; });
}

}  // namespace

FormalComplex parse_expression(const std::string& text, bool allow_shift) {
    return Parser(text, allow_shift).run();
}

std::string print_bundle(const SchurBundle& s) {
    bool bz = all_zero(s.b), cz = all_zero(s.c);
    if (bz && cz) return "O";
    std::string bs = "S{" + join_weight(s.b) + "}U*";
    std::string cs = "S{" + join_weight(s.c) + "}Uperp";
    if (cz) return bs;
    if (bz) return cs;
    return bs + " * " + cs;
}

std::string print_complex(const FormalComplex& x) {
    std::vector<std::string> parts;
    for (const auto& [deg, sum] : x.terms) {
        for (const auto& [bundle, mult] : sum) {
            std::string piece = print_bundle(bundle);
            if (deg != 0) {
                if (piece.find(' ') != std::string::npos) piece = "(" + piece + ")";
                piece += "[" + std::to_string(-deg) + "]";
            }
            for (long long i = 0; i < mult; ++i) parts.push_back(piece);
        }
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

CollectionSpec parse_collection_text(const std::string& content) {
    CollectionSpec spec;
    std::istringstream in(content);
    std::string line;
    int since_separator = 0;
    bool saw_separator = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string body = line.substr(a, b - a + 1);
        if (body[0] == '#') continue;
        if (body.rfind("---", 0) == 0) {
            saw_separator = true;
            if (since_separator > 0) spec.theta.push_back(since_separator);
            since_separator = 0;
            continue;
        }
        try {
            spec.objects.push_back(parse_expression(body));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                             e.position);
        }
        spec.names.push_back(body);
        ++since_separator;
    }
    if (saw_separator && since_separator > 0) spec.theta.push_back(since_separator);
    return spec;
}

}  // namespace cayley
