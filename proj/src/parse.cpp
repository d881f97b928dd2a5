#include "curvefree/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace curvefree {

namespace {

// Polynomial with mixed degrees, used only while parsing.
using Sparse = std::map<Monomial, Eisenstein, GrlexFirst>;

Sparse sparse_constant(const Eisenstein& c) {
    Sparse s;
    if (!c.is_zero()) s.emplace(Monomial{}, c);
    return s;
}

Sparse add(Sparse a, const Sparse& b, bool negate) {
    for (const auto& [m, c] : b) {
        auto [it, inserted] = a.try_emplace(m, negate ? -c : c);
        if (!inserted) {
            it->second += negate ? -c : c;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

Sparse mul(const Sparse& a, const Sparse& b) {
    Sparse r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            auto [it, inserted] = r.try_emplace(ma * mb, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    for (auto it = r.begin(); it != r.end();) {
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    }
    return r;
}

bool is_constant(const Sparse& s) { return s.empty() || (s.size() == 1 && s.begin()->first.degree() == 0); }

Eisenstein constant_value(const Sparse& s) { return s.empty() ? Eisenstein() : s.begin()->second; }

class Parser {
public:
    Parser(std::string_view text, bool allow_vars) : text_(text), allow_vars_(allow_vars) {}

    Sparse parse() {
        Sparse value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Sparse expression() {
        Sparse value = term();
        while (true) {
            if (accept('+')) {
                value = add(std::move(value), term(), false);
            } else if (accept('-')) {
                value = add(std::move(value), term(), true);
            } else {
                return value;
            }
        }
    }

    Sparse term() {
        Sparse value = unary();
        while (true) {
            if (accept('*')) {
                value = mul(value, unary());
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Sparse divisor = unary();
                if (!is_constant(divisor)) {
                    pos_ = at;
                    fail("division by a non-constant");
                }
                const Eisenstein d = constant_value(divisor);
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                value = mul(value, sparse_constant(d.inverse()));
            } else {
                return value;
            }
        }
    }

    Sparse unary() {
        if (accept('-')) {
            return add(Sparse{}, unary(), true);
        }
        if (accept('+')) return unary();
        return power();
    }

    Sparse power() {
        Sparse base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            const std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 3) fail("exponent too large");
            const int e = std::stoi(digits);
            Sparse result = sparse_constant(Eisenstein(1));
            for (int i = 0; i < e; ++i) result = mul(result, base);
            return result;
        }
        return base;
    }

    Sparse primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Sparse inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
            return sparse_constant(Eisenstein(Rational::parse(text_.substr(start, pos_ - start))));
        }
        if (c == 'w') {
            ++pos_;
            return sparse_constant(Eisenstein::omega());
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            if (!allow_vars_) fail("variable in constant expression");
            ++pos_;
            Monomial m;
            m.e[c - 'x'] = 1;
            Sparse s;
            s.emplace(m, Eisenstein(1));
            return s;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    bool allow_vars_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Eisenstein parse_constant(std::string_view text) {
    return constant_value(Parser(text, false).parse());
}

Eisenstein Eisenstein::parse(std::string_view text) { return parse_constant(text); }

HomogeneousPoly parse_polynomial(std::string_view text) {
    const Sparse s = Parser(text, true).parse();
    if (s.empty()) return HomogeneousPoly(0);
    const int degree = s.begin()->first.degree();
    std::vector<std::string> offending;
    TermMap<Eisenstein> terms;
    for (const auto& [m, c] : s) {
        if (m.degree() != degree) {
            offending.push_back(m.degree() == 0 ? std::string("1") : m.str());
        } else {
            terms.emplace(m, c);
        }
    }
    if (!offending.empty()) {
        std::string list;
        for (const auto& o : offending) list += (list.empty() ? "" : ", ") + o;
        throw ParseError("non-homogeneous polynomial of leading degree " + std::to_string(degree) +
                             "; offending monomials: " + list,
                         offending);
    }
    return HomogeneousPoly::from_terms(degree, terms);
}

ProjectivePoint<Eisenstein> parse_point(std::string_view text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        parts.emplace_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3) throw ParseError("point must have three ':'-separated coordinates: '" + std::string(text) + "'");
    try {
        return ProjectivePoint<Eisenstein>(parse_constant(parts[0]), parse_constant(parts[1]), parse_constant(parts[2]));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

HomogeneousPoly CurveFile::product() const {
    HomogeneousPoly result = HomogeneousPoly::constant(Eisenstein(1));
    for (const auto& c : components) result = result * c.poly;
    return result;
}

std::string CurveFile::str() const {
    std::ostringstream os;
    for (const auto& c : components) {
        os << "# " << c.label << "\n" << c.poly.str() << "\n";
    }
    return os.str();
}

CurveFile parse_curve_file(std::string_view text) {
    CurveFile file;
    std::string pending_label;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = line;
        std::string comment;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            body = line.substr(0, hash);
            comment = trim(std::string_view(line).substr(hash + 1));
        }
        body = trim(body);
        if (body.empty()) {
            pending_label = comment;
            continue;
        }
        std::string label = pending_label;
        pending_label.clear();
        if (const auto colon = body.find(':'); colon != std::string::npos) {
            label = trim(std::string_view(body).substr(0, colon));
            body = trim(std::string_view(body).substr(colon + 1));
        }
        if (label.empty()) label = "c" + std::to_string(file.components.size() + 1);
        try {
            file.components.push_back({label, parse_polynomial(body)});
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offending());
        }
    }
    if (file.components.empty()) throw ParseError("curve file contains no polynomial");
    return file;
}

CurveFile read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open curve file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_curve_file(buffer.str());
}

}  // namespace curvefree
