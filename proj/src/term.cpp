#include "omega/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <random>
#include <stdexcept>

namespace omega {

Term::Term() : Term(zero()) {}

Term Term::zero() {
    static const auto node = std::make_shared<const Node>();
    return Term(node);
}

Term Term::var(std::size_t index) {
    if (index == 0) throw Error(ErrorKind::UnboundVariable, "variables are numbered from 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Var;
    node->index = index;
    return Term(std::move(node));
}

Term Term::neg(Term t) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Neg;
    node->children.push_back(std::move(t));
    return Term(std::move(node));
}

Term Term::add(Term lhs, Term rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Add;
    node->children.push_back(std::move(lhs));
    node->children.push_back(std::move(rhs));
    return Term(std::move(node));
}

Term Term::op(std::string name, std::vector<Term> children) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Op;
    node->name = std::move(name);
    node->children = std::move(children);
    return Term(std::move(node));
}

std::size_t Term::depth() const {
    std::size_t d = 0;
    for (const Term& c : children()) d = std::max(d, c.depth());
    return d + 1;
}

std::size_t Term::max_var() const {
    std::size_t m = kind() == Kind::Var ? var_index() : 0;
    for (const Term& c : children()) m = std::max(m, c.max_var());
    return m;
}

bool Term::contains_op() const {
    if (kind() == Kind::Op) return true;
    return std::any_of(children().begin(), children().end(), [](const Term& c) { return c.contains_op(); });
}

std::string Term::to_string() const {
    switch (kind()) {
        case Kind::Zero: return "0";
        case Kind::Var: return "x" + std::to_string(var_index());
        case Kind::Neg: return "(- " + children()[0].to_string() + ")";
        case Kind::Add: return "(" + children()[0].to_string() + " + " + children()[1].to_string() + ")";
        case Kind::Op: {
            std::string out = op_name() + "(";
            for (std::size_t i = 0; i < children().size(); ++i) {
                if (i) out += ",";
                out += children()[i].to_string();
            }
            return out + ")";
        }
    }
    return {};
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.var_index() != b.var_index() || a.op_name() != b.op_name()) return false;
    return a.children() == b.children();
}

namespace {

// Resolves an Op node against the algebra's signature.
std::size_t resolve(const FiniteOmegaGroup& algebra, const Term& t) {
    auto index = algebra.find_operation(t.op_name());
    if (!index) throw Error(ErrorKind::UnknownOperation, "no operation '" + t.op_name() + "' in " + algebra.name());
    if (algebra.operation(*index).arity != t.children().size()) {
        throw Error(ErrorKind::ArityMismatch, t.op_name() + " has arity " +
                                                  std::to_string(algebra.operation(*index).arity) + ", term applies it to " +
                                                  std::to_string(t.children().size()) + " arguments");
    }
    return *index;
}

}  // namespace

Element eval_term(const FiniteOmegaGroup& algebra, const Term& t, std::span<const Element> point) {
    switch (t.kind()) {
        case Term::Kind::Zero: return 0;
        case Term::Kind::Var:
            if (t.var_index() > point.size()) {
                throw Error(ErrorKind::UnboundVariable, "x" + std::to_string(t.var_index()) + " not bound by a " +
                                                            std::to_string(point.size()) + "-tuple");
            }
            return point[t.var_index() - 1];
        case Term::Kind::Neg: return algebra.neg(eval_term(algebra, t.children()[0], point));
        case Term::Kind::Add:
            return algebra.add(eval_term(algebra, t.children()[0], point), eval_term(algebra, t.children()[1], point));
        case Term::Kind::Op: {
            const std::size_t index = resolve(algebra, t);
            std::array<Element, kMaxArity> args{};
            for (std::size_t i = 0; i < t.children().size(); ++i) args[i] = eval_term(algebra, t.children()[i], point);
            return algebra.apply(index, std::span<const Element>(args.data(), t.children().size()));
        }
    }
    return 0;
}

std::vector<Element> term_function(const FiniteOmegaGroup& algebra, const Term& t, std::size_t n_vars,
                                   std::size_t max_points) {
    const std::size_t n = algebra.size();
    std::size_t points = 1;
    for (std::size_t i = 0; i < n_vars; ++i) {
        points *= n;
        if (points > max_points) {
            throw Error(ErrorKind::TooLarge, std::to_string(n) + "^" + std::to_string(n_vars) +
                                                 " points exceeds the enumeration guard of " +
                                                 std::to_string(max_points));
        }
    }
    std::vector<Element> out(points, 0);
    switch (t.kind()) {
        case Term::Kind::Zero: break;
        case Term::Kind::Var: {
            if (t.var_index() > n_vars) {
                throw Error(ErrorKind::UnboundVariable,
                            "x" + std::to_string(t.var_index()) + " exceeds " + std::to_string(n_vars) + " variables");
            }
            std::size_t stride = 1;
            for (std::size_t i = t.var_index(); i < n_vars; ++i) stride *= n;
            for (std::size_t p = 0; p < points; ++p) out[p] = static_cast<Element>((p / stride) % n);
            break;
        }
        case Term::Kind::Neg: {
            out = term_function(algebra, t.children()[0], n_vars, max_points);
            for (auto& v : out) v = algebra.neg(v);
            break;
        }
        case Term::Kind::Add: {
            out = term_function(algebra, t.children()[0], n_vars, max_points);
            const auto rhs = term_function(algebra, t.children()[1], n_vars, max_points);
            for (std::size_t p = 0; p < points; ++p) out[p] = algebra.add(out[p], rhs[p]);
            break;
        }
        case Term::Kind::Op: {
            const std::size_t index = resolve(algebra, t);
            std::vector<std::vector<Element>> args;
            for (const Term& c : t.children()) args.push_back(term_function(algebra, c, n_vars, max_points));
            std::array<Element, kMaxArity> tuple{};
            for (std::size_t p = 0; p < points; ++p) {
                for (std::size_t i = 0; i < args.size(); ++i) tuple[i] = args[i][p];
                out[p] = algebra.apply(index, std::span<const Element>(tuple.data(), args.size()));
            }
            break;
        }
    }
    return out;
}

Element omega_commutator(const FiniteOmegaGroup& algebra, const std::string& op, std::span<const Element> a,
                         std::span<const Element> b) {
    auto index = algebra.find_operation(op);
    if (!index) throw Error(ErrorKind::UnknownOperation, "no operation '" + op + "' in " + algebra.name());
    for (Element e : a)
        if (e >= algebra.size()) throw Error(ErrorKind::MalformedTable, "argument outside carrier");
    for (Element e : b)
        if (e >= algebra.size()) throw Error(ErrorKind::MalformedTable, "argument outside carrier");
    return algebra.omega_commutator(*index, a, b);
}

bool is_commutator_word(const FiniteOmegaGroup& algebra, const Term& t, const std::vector<bool>& in_x_block,
                        std::size_t max_points) {
    const std::size_t n_vars = in_x_block.size();
    if (t.max_var() > n_vars) {
        throw Error(ErrorKind::UnboundVariable, "split covers " + std::to_string(n_vars) + " variables but term uses x" +
                                                    std::to_string(t.max_var()));
    }
    const auto values = term_function(algebra, t, n_vars, max_points);
    const std::size_t n = algebra.size();
    for (std::size_t p = 0; p < values.size(); ++p) {
        if (values[p] == 0) continue;
        // p vanishes on one block iff it is a point of the "other block zero" family.
        bool x_zero = true;
        bool y_zero = true;
        std::size_t rest = p;
        for (std::size_t i = n_vars; i-- > 0;) {
            if (rest % n != 0) (in_x_block[i] ? x_zero : y_zero) = false;
            rest /= n;
        }
        if (x_zero || y_zero) return false;
    }
    return true;
}

Term normalize_equation(const Term& lhs, const Term& rhs) { return Term::add(lhs, Term::neg(rhs)); }

namespace {

Term random_term_impl(std::mt19937_64& rng, const Signature& signature, std::size_t n_vars, std::size_t budget) {
    // Kinds: 0 = Zero, 1 = Var, 2 = Neg, 3 = Add, 4+i = signature[i].
    const std::size_t choices = budget <= 1 ? 2 : 4 + signature.size();
    const std::size_t pick = static_cast<std::size_t>(rng() % choices);
    switch (pick) {
        case 0: return Term::zero();
        case 1: return Term::var(1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(n_vars, 1)));
        case 2: return Term::neg(random_term_impl(rng, signature, n_vars, budget - 1));
        case 3: {
            Term lhs = random_term_impl(rng, signature, n_vars, budget - 1);
            Term rhs = random_term_impl(rng, signature, n_vars, budget - 1);
            return Term::add(std::move(lhs), std::move(rhs));
        }
        default: {
            const OperationSymbol& sym = signature[pick - 4];
            std::vector<Term> children;
            for (unsigned i = 0; i < sym.arity; ++i) children.push_back(random_term_impl(rng, signature, n_vars, budget - 1));
            return Term::op(sym.name, std::move(children));
        }
    }
}

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    Term parse_all() {
        Term lhs = parse_sum();
        skip_space();
        if (peek() == '=') {
            ++pos_;
            Term rhs = parse_sum();
            skip_space();
            expect_end();
            return normalize_equation(lhs, rhs);
        }
        expect_end();
        return lhs;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + what);
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect_end() {
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

    Term parse_sum() {
        Term acc = parse_unary();
        for (;;) {
            skip_space();
            if (peek() != '+') return acc;
            ++pos_;
            acc = Term::add(std::move(acc), parse_unary());
        }
    }

    Term parse_unary() {
        skip_space();
        if (peek() == '-') {
            ++pos_;
            return Term::neg(parse_unary());
        }
        return parse_primary();
    }

    Term parse_primary() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Term inner = parse_sum();
            expect(')');
            return inner;
        }
        if (c == '0') {
            ++pos_;
            if (std::isalnum(static_cast<unsigned char>(peek()))) fail("malformed constant");
            return Term::zero();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string word(text_.substr(start, pos_ - start));
            skip_space();
            if (peek() == '(') {
                ++pos_;
                std::vector<Term> args;
                skip_space();
                if (peek() == ')') fail("operation '" + word + "' needs arguments");
                args.push_back(parse_sum());
                for (;;) {
                    skip_space();
                    if (peek() == ',') {
                        ++pos_;
                        args.push_back(parse_sum());
                        continue;
                    }
                    expect(')');
                    break;
                }
                return Term::op(word, std::move(args));
            }
            if (word.size() >= 2 && word[0] == 'x' &&
                std::all_of(word.begin() + 1, word.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
                const std::size_t index = std::stoul(word.substr(1));
                if (index == 0) {
                    pos_ = start;
                    fail("variables are numbered from x1");
                }
                return Term::var(index);
            }
            pos_ = start;
            fail("unknown symbol '" + word + "'");
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Term random_term(std::uint64_t seed, const Signature& signature, std::size_t n_vars, std::size_t max_depth) {
    if (max_depth == 0) throw std::invalid_argument("random_term needs max_depth >= 1");
    std::mt19937_64 rng(seed);
    return random_term_impl(rng, signature, n_vars, max_depth);
}

Term parse_term(std::string_view text) { return TermParser(text).parse_all(); }

}  // namespace omega
