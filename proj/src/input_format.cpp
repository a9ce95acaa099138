#include "fsing/input_format.hpp"

#include "fsing/errors.hpp"

#include <cctype>
#include <sstream>

namespace fsing {

namespace {

class ExprParser {
public:
    ExprParser(const RingPtr& ring, const std::string& s, int line, int col0)
        : R_(ring), s_(s), line_(line), col0_(col0) {}

    Polynomial parse() {
        Polynomial f = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(line_, col0_ + static_cast<int>(pos_) + 1, what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Polynomial expr() {
        Polynomial f = term();
        for (;;) {
            if (eat('+')) f = f + term();
            else if (eat('-')) f = f - term();
            else return f;
        }
    }
    Polynomial term() {
        Polynomial f = unary();
        while (eat('*')) f = f * unary();
        return f;
    }
    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Polynomial power() {
        Polynomial b = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            std::uint64_t e = std::stoull(s_.substr(start, pos_ - start));
            if (e > 100000) fail("exponent too large");
            return b.pow(e);
        }
        return b;
    }
    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial f = expr();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = (v * 10 + (s_[pos_] - '0')) % static_cast<std::int64_t>(R_->p());
                ++pos_;
            }
            return Polynomial::constant(R_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int i = R_->index_of(name);
            if (i < 0) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Polynomial::variable(R_, i);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const RingPtr& R_;
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_, col0_;
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text, int line, int column_offset) {
    return ExprParser(ring, text, line, column_offset).parse();
}

const Polynomial& RingInput::element(const std::string& name) const {
    auto it = elements.find(name);
    if (it == elements.end()) throw InputError("no element named '" + name + "' is declared");
    return it->second;
}

RingInput parse_input(const std::string& text) {
    RingInput in;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    bool in_ideal = false;
    bool have_char = false, have_vars = false;
    struct Pending {
        int line, col;
        std::string text;
    };
    std::vector<Pending> gens;
    std::vector<std::pair<Pending, std::string>> elems;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        if (auto h = s.find('#'); h != std::string::npos) s = s.substr(0, h);
        if (trim(s).empty()) continue;
        bool indented = std::isspace(static_cast<unsigned char>(s[0]));
        if (in_ideal && indented) {
            std::size_t col = s.find_first_not_of(" \t");
            gens.push_back({line, static_cast<int>(col), s.substr(col)});
            continue;
        }
        in_ideal = false;
        std::istringstream ls(s);
        std::string kw;
        ls >> kw;
        if (kw == "char") {
            std::int64_t p = -1;
            if (!(ls >> p) || p < 0) throw ParseError(line, 6, "expected characteristic");
            if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
                throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
            in.characteristic = static_cast<std::uint32_t>(p);
            have_char = true;
        } else if (kw == "vars") {
            std::string tok;
            while (ls >> tok) {
                auto c = tok.find(':');
                std::string name = tok.substr(0, c);
                std::int64_t w = 1;
                if (c != std::string::npos) {
                    try {
                        w = std::stoll(tok.substr(c + 1));
                    } catch (...) {
                        throw ParseError(line, static_cast<int>(s.find(tok)) + 1, "bad weight in '" + tok + "'");
                    }
                }
                if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') || w < 1)
                    throw ParseError(line, static_cast<int>(s.find(tok)) + 1, "bad variable declaration '" + tok + "'");
                in.var_names.push_back(name);
                in.weights.push_back(w);
            }
            if (in.var_names.empty()) throw ParseError(line, 5, "no variables declared");
            have_vars = true;
        } else if (kw == "order") {
            std::string o;
            ls >> o;
            if (o != "grevlex") throw ParseError(line, static_cast<int>(s.find(o)) + 1, "unsupported order '" + o + "'");
            in.order = o;
        } else if (kw == "ideal") {
            in_ideal = true;
        } else if (kw == "element") {
            auto eq = s.find('=');
            if (eq == std::string::npos) throw ParseError(line, static_cast<int>(s.size()) + 1, "expected '='");
            std::string name = trim(s.substr(s.find("element") + 7, eq - s.find("element") - 7));
            if (name.empty()) throw ParseError(line, 9, "missing element name");
            elems.push_back({{line, static_cast<int>(eq + 1), s.substr(eq + 1)}, name});
        } else {
            throw ParseError(line, static_cast<int>(s.find(kw)) + 1, "unknown directive '" + kw + "'");
        }
    }
    if (!have_char) throw ParseError(line + 1, 1, "missing 'char' line");
    if (!have_vars) throw ParseError(line + 1, 1, "missing 'vars' line");
    in.ring = make_ring(in.characteristic, in.var_names, in.weights);
    std::vector<Polynomial> polys;
    for (const auto& g : gens) {
        Polynomial f = parse_polynomial(in.ring, g.text, g.line, g.col);
        if (!f.is_zero() && !f.is_homogeneous())
            throw NonHomogeneous("line " + std::to_string(g.line) + ": generator " + trim(g.text) +
                                 " is not homogeneous under the declared weights");
        in.ideal_text.push_back(trim(g.text));
        polys.push_back(std::move(f));
    }
    in.ideal = Ideal(in.ring, std::move(polys));
    for (const auto& [e, name] : elems) {
        Polynomial f = parse_polynomial(in.ring, e.text, e.line, e.col);
        in.element_text.emplace_back(name, trim(e.text));
        in.elements[name] = std::move(f);
    }
    return in;
}

std::string print_input(const RingInput& in) {
    std::string s = "char " + std::to_string(in.characteristic) + "\nvars";
    for (std::size_t i = 0; i < in.var_names.size(); ++i)
        s += " " + in.var_names[i] + ":" + std::to_string(in.weights[i]);
    s += "\norder " + in.order + "\nideal\n";
    for (const auto& g : in.ideal.generators()) s += "  " + g.to_string() + "\n";
    for (const auto& [name, text] : in.element_text) s += "element " + name + " = " + in.element(name).to_string() + "\n";
    return s;
}

}  // namespace fsing
