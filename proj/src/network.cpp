#include "network.hpp"

#include "halton.hpp"
#include "seed.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>

namespace crnkit {

int ReactionNetwork::species_index(const std::string& name) const {
    for (std::size_t i = 0; i < species.size(); ++i)
        if (species[i] == name) return static_cast<int>(i);
    return -1;
}

int ReactionNetwork::param_index(const std::string& name) const {
    for (std::size_t i = 0; i < params.size(); ++i)
        if (params[i] == name) return static_cast<int>(i);
    return -1;
}

const std::string& ReactionNetwork::var_name(std::size_t v) const {
    return v < species.size() ? species[v] : params[v - species.size()];
}

bool ReactionNetwork::operator==(const ReactionNetwork& o) const {
    if (species != o.species || params != o.params) return false;
    if (reactions.size() != o.reactions.size()) return false;
    for (std::size_t r = 0; r < reactions.size(); ++r) {
        if (reactions[r].reactants != o.reactions[r].reactants) return false;
        if (reactions[r].products != o.reactions[r].products) return false;
        if (!(reactions[r].rate == o.reactions[r].rate)) return false;
    }
    return true;
}

namespace {

// ---------------------------------------------------------------------------
// Rate expressions are parsed to a small tree first; symbols are resolved to
// variable indices only after the whole file is read (parameters may be
// auto-declared from rate expressions when no params: header is present).

struct Expr {
    enum class Op { number, symbol, add, sub, mul, div, neg, pow };
    Op op;
    Rational value;          // number
    std::string name;        // symbol
    int line = 0, col = 0;
    unsigned exponent = 0;   // pow
    std::unique_ptr<Expr> lhs, rhs;
};

struct Token {
    enum class Type { number, ident, op, end };
    Type type = Type::end;
    std::string text;
    Rational value;
    int col = 0;
};

class ExprLexer {
public:
    ExprLexer(const std::string& src, int line, int col_base)
        : src_(src), line_(line), col_base_(col_base) {
        advance();
    }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    int line() const { return line_; }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_ = Token{};
        tok_.col = col_base_ + static_cast<int>(pos_);
        if (pos_ >= src_.size()) {
            tok_.type = Token::Type::end;
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                ++pos_;
            // Scientific exponent is part of the literal only when a digit follows.
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                std::size_t look = pos_ + 1;
                if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
                if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
                    pos_ = look;
                    while (pos_ < src_.size() &&
                           std::isdigit(static_cast<unsigned char>(src_[pos_])))
                        ++pos_;
                }
            }
            tok_.type = Token::Type::number;
            tok_.text = src_.substr(start, pos_ - start);
            try {
                tok_.value = parse_rational(tok_.text);
            } catch (const std::exception& e) {
                parse_fail(e.what(), line_, tok_.col);
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            tok_.type = Token::Type::ident;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            tok_.type = Token::Type::op;
            tok_.text = std::string(1, c);
            ++pos_;
            return;
        }
        parse_fail(std::string("unexpected character '") + c + "' in rate expression", line_,
                   tok_.col);
    }

    std::string src_;
    int line_;
    int col_base_;
    std::size_t pos_ = 0;
    Token tok_;
};

class ExprParser {
public:
    explicit ExprParser(ExprLexer& lex) : lex_(lex) {}

    std::unique_ptr<Expr> parse() {
        auto e = parse_sum();
        if (lex_.peek().type != Token::Type::end)
            parse_fail("trailing input in rate expression: '" + lex_.peek().text + "'",
                       lex_.line(), lex_.peek().col);
        return e;
    }

private:
    std::unique_ptr<Expr> parse_sum() {
        auto e = parse_product();
        while (lex_.peek().type == Token::Type::op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            Token t = lex_.take();
            auto node = std::make_unique<Expr>();
            node->op = (t.text == "+") ? Expr::Op::add : Expr::Op::sub;
            node->line = lex_.line();
            node->col = t.col;
            node->lhs = std::move(e);
            node->rhs = parse_product();
            e = std::move(node);
        }
        return e;
    }

    std::unique_ptr<Expr> parse_product() {
        auto e = parse_factor();
        while (lex_.peek().type == Token::Type::op &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            Token t = lex_.take();
            auto node = std::make_unique<Expr>();
            node->op = (t.text == "*") ? Expr::Op::mul : Expr::Op::div;
            node->line = lex_.line();
            node->col = t.col;
            node->lhs = std::move(e);
            node->rhs = parse_factor();
            e = std::move(node);
        }
        return e;
    }

    std::unique_ptr<Expr> parse_factor() {
        if (lex_.peek().type == Token::Type::op && lex_.peek().text == "-") {
            Token t = lex_.take();
            auto node = std::make_unique<Expr>();
            node->op = Expr::Op::neg;
            node->line = lex_.line();
            node->col = t.col;
            node->lhs = parse_factor();
            return node;
        }
        if (lex_.peek().type == Token::Type::op && lex_.peek().text == "+") {
            lex_.take();
            return parse_factor();
        }
        auto e = parse_primary();
        if (lex_.peek().type == Token::Type::op && lex_.peek().text == "^") {
            Token t = lex_.take();
            Token exp = lex_.take();
            if (exp.type != Token::Type::number || exp.value < 0 ||
                exp.value.get_den() != 1)
                parse_fail("exponent must be a nonnegative integer literal", lex_.line(),
                           exp.col == 0 ? t.col : exp.col);
            auto node = std::make_unique<Expr>();
            node->op = Expr::Op::pow;
            node->line = lex_.line();
            node->col = t.col;
            node->exponent = static_cast<unsigned>(exp.value.get_num().get_ui());
            node->lhs = std::move(e);
            return node;
        }
        return e;
    }

    std::unique_ptr<Expr> parse_primary() {
        Token t = lex_.take();
        if (t.type == Token::Type::number) {
            auto node = std::make_unique<Expr>();
            node->op = Expr::Op::number;
            node->value = t.value;
            node->line = lex_.line();
            node->col = t.col;
            return node;
        }
        if (t.type == Token::Type::ident) {
            auto node = std::make_unique<Expr>();
            node->op = Expr::Op::symbol;
            node->name = t.text;
            node->line = lex_.line();
            node->col = t.col;
            return node;
        }
        if (t.type == Token::Type::op && t.text == "(") {
            auto e = parse_sum();
            Token close = lex_.take();
            if (close.type != Token::Type::op || close.text != ")")
                parse_fail("expected ')' in rate expression", lex_.line(), close.col);
            return e;
        }
        parse_fail(t.type == Token::Type::end
                       ? "unexpected end of rate expression"
                       : "unexpected token '" + t.text + "' in rate expression",
                   lex_.line(), t.col);
    }

    ExprLexer& lex_;
};

void collect_symbols(const Expr* e, std::vector<std::string>& out) {
    if (!e) return;
    if (e->op == Expr::Op::symbol) {
        if (std::find(out.begin(), out.end(), e->name) == out.end()) out.push_back(e->name);
    }
    collect_symbols(e->lhs.get(), out);
    collect_symbols(e->rhs.get(), out);
}

Polynomial compile_expr(const Expr* e, const std::map<std::string, std::size_t>& symtab,
                        std::size_t nvars) {
    switch (e->op) {
        case Expr::Op::number:
            return Polynomial::constant(nvars, e->value);
        case Expr::Op::symbol: {
            auto it = symtab.find(e->name);
            if (it == symtab.end())
                parse_fail("undeclared symbol '" + e->name + "'", e->line, e->col);
            return Polynomial::variable(nvars, it->second);
        }
        case Expr::Op::add:
            return compile_expr(e->lhs.get(), symtab, nvars) +
                   compile_expr(e->rhs.get(), symtab, nvars);
        case Expr::Op::sub:
            return compile_expr(e->lhs.get(), symtab, nvars) -
                   compile_expr(e->rhs.get(), symtab, nvars);
        case Expr::Op::mul:
            return compile_expr(e->lhs.get(), symtab, nvars) *
                   compile_expr(e->rhs.get(), symtab, nvars);
        case Expr::Op::div: {
            Polynomial den = compile_expr(e->rhs.get(), symtab, nvars);
            if (!den.is_constant())
                parse_fail("division by a non-constant expression", e->line, e->col);
            Rational d = den.constant_value();
            if (d == 0) parse_fail("division by zero", e->line, e->col);
            return compile_expr(e->lhs.get(), symtab, nvars).scaled(Rational(1) / d);
        }
        case Expr::Op::neg:
            return -compile_expr(e->lhs.get(), symtab, nvars);
        case Expr::Op::pow:
            return compile_expr(e->lhs.get(), symtab, nvars).pow(e->exponent);
    }
    parse_fail("internal: unhandled expression node");
}

struct RawTerm {
    long coeff = 1;
    std::string name;  // empty marks the literal empty complex "0"
    int col = 0;
};

struct RawReaction {
    std::vector<RawTerm> reactants;
    std::vector<RawTerm> products;
    std::unique_ptr<Expr> rate;  // null when the rate comes from a rates: block
    int line = 0;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Parses one `+`-separated complex; `0` alone denotes the empty complex.
std::vector<RawTerm> parse_complex(const std::string& text, int line, int col_base) {
    std::vector<RawTerm> terms;
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        std::size_t plus = text.find('+', pos);
        std::string piece = text.substr(pos, plus == std::string::npos ? std::string::npos
                                                                       : plus - pos);
        int col = col_base + static_cast<int>(pos);
        std::string t = trim(piece);
        if (t.empty())
            parse_fail("empty term in complex", line, col);
        any = true;
        RawTerm term;
        term.col = col;
        std::size_t i = 0;
        if (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '-' || t[0] == '.') {
            std::size_t j = 0;
            if (t[j] == '-') ++j;
            while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) ||
                                    t[j] == '.' || t[j] == '/'))
                ++j;
            std::string num = t.substr(0, j);
            Rational v;
            try {
                v = parse_rational(num);
            } catch (const std::exception&) {
                parse_fail("malformed stoichiometric coefficient '" + num + "'", line, col);
            }
            if (v < 0)
                parse_fail("negative stoichiometric coefficient '" + num + "'", line, col);
            if (v.get_den() != 1)
                parse_fail("non-integer stoichiometric coefficient '" + num + "'", line, col);
            term.coeff = v.get_num().get_si();
            i = j;
            while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
            if (i < t.size() && t[i] == '*') {
                ++i;
                while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
            }
            if (i >= t.size()) {
                // A bare number: only `0` as the whole complex is meaningful.
                if (term.coeff != 0 || terms.size() > 0 || plus != std::string::npos)
                    parse_fail("bare coefficient without species name", line, col);
                return {};
            }
        }
        std::size_t name_start = i;
        while (i < t.size() && (std::isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_'))
            ++i;
        std::string name = t.substr(name_start, i - name_start);
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
            parse_fail("expected species name in complex, got '" + t.substr(name_start) + "'",
                       line, col);
        if (trim(t.substr(i)) != "")
            parse_fail("trailing input after species name '" + name + "'", line, col);
        term.name = name;
        if (term.coeff != 0) terms.push_back(term);
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    if (!any) parse_fail("empty complex", line, col_base);
    return terms;
}

std::vector<std::string> split_names(const std::string& s, int line) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : s + " ") {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) {
                names.push_back(cur);
                cur.clear();
            }
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            cur += c;
        } else {
            parse_fail(std::string("invalid character '") + c + "' in declaration", line);
        }
    }
    return names;
}

}  // namespace

ReactionNetwork parse_network(const std::string& text) {
    std::vector<std::string> declared_species, declared_params;
    bool have_species_header = false, have_params_header = false;
    std::vector<RawReaction> raw;
    std::vector<std::pair<std::unique_ptr<Expr>, int>> rate_block;  // expr, line
    bool have_rates_block = false;

    enum class Section { preamble, reactions, rates };
    Section section = Section::preamble;

    std::istringstream in(text);
    std::string rawline;
    int lineno = 0;
    while (std::getline(in, rawline)) {
        ++lineno;
        std::string line = rawline;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string t = trim(line);
        if (t.empty()) continue;

        if (t == "reactions:") {
            if (section != Section::preamble)
                parse_fail("duplicate reactions: block", lineno);
            section = Section::reactions;
            continue;
        }
        if (t == "rates:") {
            if (section != Section::reactions)
                parse_fail("rates: block must follow the reactions: block", lineno);
            section = Section::rates;
            have_rates_block = true;
            continue;
        }
        if (section == Section::preamble) {
            if (t.rfind("species:", 0) == 0) {
                if (have_species_header) parse_fail("duplicate species: header", lineno);
                have_species_header = true;
                declared_species = split_names(t.substr(8), lineno);
                if (declared_species.empty())
                    parse_fail("species: header declares no names", lineno);
                continue;
            }
            if (t.rfind("params:", 0) == 0) {
                if (have_params_header) parse_fail("duplicate params: header", lineno);
                have_params_header = true;
                declared_params = split_names(t.substr(7), lineno);
                continue;
            }
            parse_fail("expected species:, params:, or reactions:", lineno);
        }
        if (section == Section::rates) {
            std::string expr_text = t;
            if (!expr_text.empty() && expr_text.back() == ',')
                expr_text.pop_back();
            if (trim(expr_text).empty()) continue;
            int col_base = static_cast<int>(rawline.find(trim(expr_text))) + 1;
            ExprLexer lex(trim(expr_text), lineno, col_base);
            ExprParser ep(lex);
            rate_block.emplace_back(ep.parse(), lineno);
            continue;
        }

        // Reaction line: reactants -> products [@ rate]
        std::size_t arrow = t.find("->");
        if (arrow == std::string::npos)
            parse_fail("expected '->' in reaction", lineno,
                       static_cast<int>(rawline.find(t)) + 1);
        std::string lhs = t.substr(0, arrow);
        std::string rest = t.substr(arrow + 2);
        std::string rhs = rest, rate_text;
        bool has_rate = false;
        std::size_t at = rest.find('@');
        if (at != std::string::npos) {
            rhs = rest.substr(0, at);
            rate_text = trim(rest.substr(at + 1));
            has_rate = true;
            if (rate_text.empty()) parse_fail("missing rate after '@'", lineno);
        }
        RawReaction rr;
        rr.line = lineno;
        int lhs_col = static_cast<int>(rawline.find(trim(lhs).empty() ? lhs : trim(lhs))) + 1;
        rr.reactants = parse_complex(trim(lhs), lineno, lhs_col);
        rr.products = parse_complex(trim(rhs), lineno,
                                    static_cast<int>(arrow) + 3);
        if (has_rate) {
            int col_base = static_cast<int>(rawline.find('@')) + 2;
            ExprLexer lex(rate_text, lineno, col_base);
            ExprParser ep(lex);
            rr.rate = ep.parse();
        }
        raw.push_back(std::move(rr));
    }

    if (raw.empty()) parse_fail("model declares no reactions");

    // Pair up rates supplied via a rates: block.
    if (have_rates_block) {
        for (const auto& rr : raw)
            if (rr.rate)
                parse_fail("duplicate rate: reaction on line " + std::to_string(rr.line) +
                               " has an inline rate and a rates: block is present",
                           rr.line);
        if (rate_block.size() != raw.size())
            parse_fail("rate list length mismatch: " + std::to_string(raw.size()) +
                       " reactions but " + std::to_string(rate_block.size()) + " rates");
        for (std::size_t i = 0; i < raw.size(); ++i) raw[i].rate = std::move(rate_block[i].first);
    } else {
        for (const auto& rr : raw)
            if (!rr.rate)
                parse_fail("missing rate (use '@ expr' or a rates: block)", rr.line);
    }

    // Species: header order, or first appearance in complexes.
    ReactionNetwork net;
    auto add_species = [&](const std::string& name, int line, int col) {
        if (net.species_index(name) >= 0) return;
        if (have_species_header)
            parse_fail("undeclared species '" + name + "'", line, col);
        net.species.push_back(name);
    };
    if (have_species_header) {
        for (const auto& n : declared_species) {
            if (std::count(declared_species.begin(), declared_species.end(), n) > 1)
                parse_fail("duplicate species name '" + n + "'");
            net.species.push_back(n);
        }
    }
    for (const auto& rr : raw) {
        for (const auto& term : rr.reactants) add_species(term.name, rr.line, term.col);
        for (const auto& term : rr.products) add_species(term.name, rr.line, term.col);
    }

    // Parameters: header order, else auto-declared from rate symbols.
    if (have_params_header) {
        for (const auto& n : declared_params) {
            if (std::count(declared_params.begin(), declared_params.end(), n) > 1)
                parse_fail("duplicate parameter name '" + n + "'");
            if (net.species_index(n) >= 0)
                parse_fail("name '" + n + "' declared both as species and parameter");
            net.params.push_back(n);
        }
    } else {
        std::vector<std::string> syms;
        for (const auto& rr : raw) collect_symbols(rr.rate.get(), syms);
        for (const auto& n : syms)
            if (net.species_index(n) < 0) net.params.push_back(n);
    }

    std::map<std::string, std::size_t> symtab;
    for (std::size_t i = 0; i < net.species.size(); ++i) symtab[net.species[i]] = i;
    for (std::size_t i = 0; i < net.params.size(); ++i)
        symtab[net.params[i]] = net.param_var(i);

    std::size_t nvars = net.nvars();
    for (auto& rr : raw) {
        Reaction r;
        r.line = rr.line;
        for (const auto& term : rr.reactants) {
            int idx = net.species_index(term.name);
            r.reactants[idx] += term.coeff;
        }
        for (const auto& term : rr.products) {
            int idx = net.species_index(term.name);
            r.products[idx] += term.coeff;
        }
        r.rate = compile_expr(rr.rate.get(), symtab, nvars);
        net.reactions.push_back(std::move(r));
    }
    return net;
}

std::string complex_to_string(const ReactionNetwork& net, const Multiset& ms) {
    if (ms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, mult] : ms) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult << "*";
        os << net.species[static_cast<std::size_t>(idx)];
    }
    return os.str();
}

std::string reaction_to_string(const ReactionNetwork& net, const Reaction& r) {
    auto name = [&](std::size_t v) { return net.var_name(v); };
    return complex_to_string(net, r.reactants) + " -> " + complex_to_string(net, r.products) +
           " @ " + r.rate.to_string(name);
}

std::string serialize_network(const ReactionNetwork& net) {
    std::ostringstream os;
    os << "species:";
    for (const auto& s : net.species) os << " " << s;
    os << "\n";
    if (!net.params.empty()) {
        os << "params:";
        for (const auto& p : net.params) os << " " << p;
        os << "\n";
    }
    os << "reactions:\n";
    for (const auto& r : net.reactions) os << reaction_to_string(net, r) << "\n";
    return os.str();
}

StoichStructure stoichiometry(const ReactionNetwork& net) {
    std::size_t n = net.species.size(), m = net.reactions.size();
    StoichStructure st;
    st.alpha = IntMatrix(n, m);
    st.beta = IntMatrix(n, m);
    st.gamma = IntMatrix(n, m);
    for (std::size_t r = 0; r < m; ++r) {
        for (const auto& [i, mult] : net.reactions[r].reactants)
            st.alpha.at(static_cast<std::size_t>(i), r) = mult;
        for (const auto& [i, mult] : net.reactions[r].products)
            st.beta.at(static_cast<std::size_t>(i), r) = mult;
        for (std::size_t i = 0; i < n; ++i)
            st.gamma.at(i, r) = st.beta.at(i, r) - st.alpha.at(i, r);
    }
    return st;
}

std::vector<Polynomial> build_rhs(const ReactionNetwork& net) {
    StoichStructure st = stoichiometry(net);
    std::size_t n = net.species.size();
    std::vector<Polynomial> rhs(n, Polynomial(net.nvars()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < net.reactions.size(); ++r) {
            long g = st.gamma.at(i, r);
            if (g != 0) rhs[i] = rhs[i] + net.reactions[r].rate.scaled(Rational(g));
        }
    }
    return rhs;
}

MassActionReport validate_mass_action(const ReactionNetwork& net) {
    StoichStructure st = stoichiometry(net);
    MassActionReport rep;
    rep.reaction_ok.resize(net.reactions.size(), false);
    for (std::size_t r = 0; r < net.reactions.size(); ++r) {
        const Polynomial& rate = net.reactions[r].rate;
        bool ok = rate.terms().size() == 1;
        if (ok) {
            const Monomial& m = rate.terms()[0];
            if (m.coeff <= 0) ok = false;
            for (std::size_t i = 0; ok && i < net.species.size(); ++i) {
                if (static_cast<long>(m.exps[i]) != st.alpha.at(i, r)) ok = false;
            }
        }
        rep.reaction_ok[r] = ok;
        if (!ok) rep.all_ok = false;
    }
    return rep;
}

RateSignReport validate_rates(const ReactionNetwork& net,
                              const std::map<std::string, double>& params, int samples) {
    RateSignReport rep;
    std::size_t n = net.species.size();
    rep.flagged.resize(net.reactions.size(), false);
    std::vector<double> point(net.nvars(), 1.0);
    for (const auto& [name, value] : params) {
        int p = net.param_index(name);
        if (p < 0) analysis_fail("unknown parameter '" + name + "'");
        point[net.param_var(static_cast<std::size_t>(p))] = value;
    }
    unsigned long offset = static_cast<unsigned long>(sample_seed() < 0 ? 0 : sample_seed());
    for (int k = 0; k <= samples; ++k) {
        // Sample 0 is the origin (containment corner), then Halton points.
        std::vector<double> xs(n, 0.0);
        if (k > 0) xs = halton_point(static_cast<unsigned long>(k) + offset, n, 0.0, 10.0);
        for (std::size_t i = 0; i < n; ++i) point[i] = xs[i];
        for (std::size_t r = 0; r < net.reactions.size(); ++r) {
            if (rep.flagged[r]) continue;
            double v = net.reactions[r].rate.eval(point);
            if (v < 0) {
                rep.flagged[r] = true;
                rep.all_nonnegative = false;
                rep.findings.push_back({static_cast<int>(r), xs, v});
            }
        }
    }
    return rep;
}

std::vector<bool> input_species(const ReactionNetwork& net, const StoichStructure& st) {
    std::vector<bool> input(net.species.size(), false);
    for (std::size_t r = 0; r < net.reactions.size(); ++r) {
        if (!net.reactions[r].reactants.empty()) continue;
        for (const auto& [i, mult] : net.reactions[r].products)
            if (mult > 0) input[static_cast<std::size_t>(i)] = true;
    }
    (void)st;
    return input;
}

std::vector<int> hidden_inflow_reactions(const ReactionNetwork& net, const StoichStructure& st) {
    std::vector<int> out;
    for (std::size_t r = 0; r < net.reactions.size(); ++r) {
        if (net.reactions[r].reactants.empty()) continue;
        bool nonneg = true, nonzero = false;
        for (std::size_t i = 0; i < net.species.size(); ++i) {
            long g = st.gamma.at(i, r);
            if (g < 0) nonneg = false;
            if (g != 0) nonzero = true;
        }
        if (nonneg && nonzero) out.push_back(static_cast<int>(r));
    }
    return out;
}

}  // namespace crnkit
