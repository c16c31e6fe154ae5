#include "bosonorder/parser.hpp"

#include <cctype>
#include <sstream>

#include "bosonorder/errors.hpp"

namespace bosonorder {

bool operator==(const Factor& a, const Factor& b) {
    return a.exponent == b.exponent && a.generator == b.generator && a.sub == b.sub;
}

bool operator==(const ExprTerm& a, const ExprTerm& b) {
    return a.coefficient == b.coefficient && a.factors == b.factors;
}

bool operator==(const ExprNode& a, const ExprNode& b) { return a.terms == b.terms; }

namespace {

constexpr std::string_view kDagger = "†";  // UTF-8 dagger

class Parser {
public:
    explicit Parser(std::string_view input) : input_(input) {}

    ExprNode run() {
        skip_space();
        if (pos_ >= input_.size()) {
            throw SyntaxError(pos_, "an expression (input is empty)");
        }
        ExprNode expr = parse_expr();
        skip_space();
        if (pos_ < input_.size()) {
            throw SyntaxError(pos_, "'+', '-', or end of input");
        }
        return expr;
    }

private:
    void skip_space() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < input_.size() && input_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < input_.size() ? input_[pos_] : '\0';
    }

    ExprNode parse_expr() {
        ExprNode expr;
        bool negate = consume('-');
        if (!negate) consume('+');
        expr.terms.push_back(parse_term(negate));
        while (true) {
            skip_space();
            if (consume('+')) {
                expr.terms.push_back(parse_term(false));
            } else if (consume('-')) {
                expr.terms.push_back(parse_term(true));
            } else {
                break;
            }
        }
        return expr;
    }

    ExprTerm parse_term(bool negate) {
        ExprTerm term;
        skip_space();
        if (pos_ < input_.size() &&
            std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
            term.coefficient = parse_rational();
        }
        if (negate) term.coefficient = -term.coefficient;
        while (true) {
            const char c = peek();
            if (c == 'a' || c == '(') {
                term.factors.push_back(parse_factor());
            } else {
                break;
            }
        }
        if (term.factors.empty()) {
            throw SyntaxError(pos_, "'a', 'ad', or '('");
        }
        return term;
    }

    Factor parse_factor() {
        Factor f;
        skip_space();
        if (consume('(')) {
            f.sub.push_back(parse_expr());
            if (!consume(')')) throw SyntaxError(pos_, "')'");
        } else if (pos_ < input_.size() && input_[pos_] == 'a') {
            ++pos_;
            if (pos_ < input_.size() && input_[pos_] == 'd') {
                ++pos_;
                f.generator = Generator::kCreate;
            } else if (input_.substr(pos_).starts_with(kDagger)) {
                pos_ += kDagger.size();
                f.generator = Generator::kCreate;
            } else {
                f.generator = Generator::kAnnihilate;
            }
        } else {
            throw SyntaxError(pos_, "'a', 'ad', or '('");
        }
        if (consume('^')) {
            f.exponent = parse_uint();
        }
        return f;
    }

    Rat parse_rational() {
        const Int numerator = parse_digits();
        if (consume('/')) {
            const Int denominator = parse_digits();
            if (denominator == 0) throw SyntaxError(pos_, "a nonzero denominator");
            return Rat(numerator, denominator);
        }
        return Rat(numerator);
    }

    Int parse_digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) throw SyntaxError(pos_, "a digit");
        return Int(std::string(input_.substr(start, pos_ - start)));
    }

    unsigned parse_uint() {
        skip_space();
        std::size_t digits_from = pos_;
        unsigned value = 0;
        while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
            value = value * 10 + static_cast<unsigned>(input_[pos_] - '0');
            if (value > 1000000) throw SyntaxError(digits_from, "an exponent below 10^6");
            ++pos_;
        }
        if (pos_ == digits_from) throw SyntaxError(pos_, "a digit");
        return value;
    }

    std::string_view input_;
    std::size_t pos_ = 0;
};

void print_term(std::ostringstream& os, const ExprTerm& term) {
    Rat coeff = term.coefficient;
    if (coeff < 0) {
        os << "-";
        coeff = -coeff;
    }
    bool printed = false;
    if (coeff != 1 || term.factors.empty()) {
        os << coeff;
        printed = true;
    }
    for (const Factor& f : term.factors) {
        if (printed) os << " ";
        if (f.is_generator()) {
            os << (*f.generator == Generator::kCreate ? "ad" : "a");
        } else {
            os << "(" << to_string(f.sub.front()) << ")";
        }
        if (f.exponent != 1) os << "^" << f.exponent;
        printed = true;
    }
}

}  // namespace

ExprNode parse_expression(std::string_view input) { return Parser(input).run(); }

std::string to_string(const ExprNode& ast) {
    std::ostringstream os;
    bool first = true;
    for (const ExprTerm& term : ast.terms) {
        if (!first) {
            os << (term.coefficient < 0 ? " - " : " + ");
            ExprTerm abs_term = term;
            if (term.coefficient < 0) abs_term.coefficient = -term.coefficient;
            print_term(os, abs_term);
        } else {
            print_term(os, term);
        }
        first = false;
    }
    return os.str();
}

NormalForm to_normal_form(const ExprNode& ast) {
    NormalForm sum;
    for (const ExprTerm& term : ast.terms) {
        NormalForm product = NormalForm::identity();
        for (const Factor& f : term.factors) {
            NormalForm base;
            if (f.is_generator()) {
                base = *f.generator == Generator::kCreate ? NormalForm::monomial(1, 0)
                                                          : NormalForm::monomial(0, 1);
            } else {
                base = to_normal_form(f.sub.front());
            }
            product = multiply(product, power(base, f.exponent));
        }
        product *= term.coefficient;
        sum += product;
    }
    return sum;
}

namespace {

using WeightedWords = std::vector<std::pair<Rat, Word>>;

void check_cap(std::size_t size, std::size_t cap) {
    if (size > cap) {
        throw OutOfRangeError("expression expands to more than " + std::to_string(cap) +
                              " words");
    }
}

WeightedWords expand_node(const ExprNode& ast, std::size_t cap);

WeightedWords expand_factor(const Factor& f, std::size_t cap) {
    WeightedWords base;
    if (f.is_generator()) {
        base.emplace_back(Rat(1), Word{*f.generator});
    } else {
        base = expand_node(f.sub.front(), cap);
    }
    WeightedWords out;
    out.emplace_back(Rat(1), Word{});
    for (unsigned i = 0; i < f.exponent; ++i) {
        WeightedWords next;
        for (const auto& [c1, w1] : out) {
            for (const auto& [c2, w2] : base) {
                Word joined = w1;
                joined.insert(joined.end(), w2.begin(), w2.end());
                next.emplace_back(c1 * c2, std::move(joined));
                check_cap(next.size(), cap);
            }
        }
        out = std::move(next);
    }
    return out;
}

WeightedWords expand_node(const ExprNode& ast, std::size_t cap) {
    WeightedWords out;
    for (const ExprTerm& term : ast.terms) {
        WeightedWords product;
        product.emplace_back(term.coefficient, Word{});
        for (const Factor& f : term.factors) {
            const WeightedWords expanded = expand_factor(f, cap);
            WeightedWords next;
            for (const auto& [c1, w1] : product) {
                for (const auto& [c2, w2] : expanded) {
                    Word joined = w1;
                    joined.insert(joined.end(), w2.begin(), w2.end());
                    next.emplace_back(c1 * c2, std::move(joined));
                    check_cap(next.size(), cap);
                }
            }
            product = std::move(next);
        }
        for (auto& p : product) out.push_back(std::move(p));
        check_cap(out.size(), cap);
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rat, Word>> expand_words(const ExprNode& ast, std::size_t max_words) {
    return expand_node(ast, max_words);
}

}  // namespace bosonorder
