#include "semwidth/cq.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>

#include "semwidth/errors.hpp"

namespace semwidth {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_tail(char c) { return is_lower(c) || is_upper(c) || is_digit(c) || c == '_'; }

bool is_variable_name(const std::string& s) {
    if (s.empty() || !is_lower(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), is_ident_tail);
}

bool is_relation_name(const std::string& s) {
    if (s.empty() || !is_upper(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), is_ident_tail);
}

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size() || s.empty()) return false;
    for (; i < s.size(); ++i)
        if (!is_digit(s[i])) return false;
    return true;
}

// Recursive-descent parser for the one-statement query grammar. Tracks
// line/column for error reporting; whitespace is insignificant.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ConjunctiveQuery parse() {
        ConjunctiveQuery q;
        skip_ws();
        expect_keyword("ans");
        expect('(');
        skip_ws();
        if (peek() != ')') {
            q.head_vars.push_back(parse_variable());
            skip_ws();
            while (peek() == ',') {
                get();
                q.head_vars.push_back(parse_variable());
                skip_ws();
            }
        }
        expect(')');
        skip_ws();
        expect('<');
        expect('-');
        q.body.insert(parse_atom());
        skip_ws();
        while (peek() == ',') {
            get();
            q.body.insert(parse_atom());
            skip_ws();
        }
        expect('.');
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected input after '.'");
        return q;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char get() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\r' || text_[pos_] == '\n'))
            get();
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    void expect_keyword(const std::string& kw) {
        skip_ws();
        for (char c : kw) {
            if (peek() != c) fail("expected '" + kw + "'");
            get();
        }
        if (is_ident_tail(peek())) fail("expected '" + kw + "'");
    }

    std::string parse_identifier(bool (*first)(char), const char* what) {
        skip_ws();
        if (!first(peek())) fail(std::string("expected ") + what);
        std::string s;
        s += get();
        while (is_ident_tail(peek())) s += get();
        return s;
    }

    std::string parse_variable() { return parse_identifier(is_lower, "variable"); }

    Term parse_term() {
        skip_ws();
        char c = peek();
        if (c == '"') {
            get();
            std::string value;
            while (peek() != '"') {
                if (peek() == '\0' || peek() == '\n') fail("unterminated string constant");
                value += get();
            }
            get();
            return Term::constant(value);
        }
        if (c == '-' || is_digit(c)) {
            std::string value;
            if (c == '-') value += get();
            if (!is_digit(peek())) fail("expected digit after '-'");
            while (is_digit(peek())) value += get();
            return Term::constant(value);
        }
        if (is_lower(c)) return Term::var(parse_variable());
        fail("expected term");
    }

    Atom parse_atom() {
        Atom a;
        a.relation = parse_identifier(is_upper, "relation name");
        expect('(');
        skip_ws();
        if (peek() != ')') {
            a.args.push_back(parse_term());
            skip_ws();
            while (peek() == ',') {
                get();
                a.args.push_back(parse_term());
                skip_ws();
            }
        }
        expect(')');
        return a;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

std::string render_term(const Term& t) {
    if (t.is_variable()) return t.text;
    if (is_integer_literal(t.text)) return t.text;
    return "\"" + t.text + "\"";
}

std::string render_atom(const Atom& a) {
    std::string s = a.relation + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) s += ",";
        s += render_term(a.args[i]);
    }
    return s + ")";
}

}  // namespace

std::set<std::string> ConjunctiveQuery::variables() const {
    std::set<std::string> vars;
    for (const Atom& a : body)
        for (const Term& t : a.args)
            if (t.is_variable()) vars.insert(t.text);
    return vars;
}

std::set<std::string> ConjunctiveQuery::constants() const {
    std::set<std::string> consts;
    for (const Atom& a : body)
        for (const Term& t : a.args)
            if (t.is_constant()) consts.insert(t.text);
    return consts;
}

std::set<std::string> Database::universe() const {
    std::set<std::string> values;
    for (const auto& [name, tuples] : relations)
        for (const auto& tuple : tuples) values.insert(tuple.begin(), tuple.end());
    return values;
}

void validate_query(const ConjunctiveQuery& q) {
    if (q.body.empty()) throw DomainError("query body is empty");
    std::map<std::string, std::size_t> arity;
    for (const Atom& a : q.body) {
        if (!is_relation_name(a.relation))
            throw DomainError("invalid relation name: '" + a.relation + "'");
        auto [it, inserted] = arity.emplace(a.relation, a.args.size());
        if (!inserted && it->second != a.args.size())
            throw DomainError("arity mismatch for relation '" + a.relation + "'");
        for (const Term& t : a.args) {
            if (t.is_variable() && !is_variable_name(t.text))
                throw DomainError("invalid variable name: '" + t.text + "'");
            if (t.is_constant() && t.text.find_first_of("\"\n") != std::string::npos)
                throw DomainError("constant contains a quote or newline");
        }
    }
    const std::set<std::string> vars = q.variables();
    for (const std::string& h : q.head_vars) {
        if (!is_variable_name(h)) throw DomainError("invalid head variable name: '" + h + "'");
        if (!vars.count(h))
            throw DomainError("safety violation: head variable '" + h + "' not in body");
    }
}

ConjunctiveQuery parse_query(const std::string& text) {
    ConjunctiveQuery q = Parser(text).parse();
    validate_query(q);
    return q;
}

std::string render_query(const ConjunctiveQuery& q) {
    std::string s = "ans(";
    for (std::size_t i = 0; i < q.head_vars.size(); ++i) {
        if (i) s += ",";
        s += q.head_vars[i];
    }
    s += ") <- ";
    bool first = true;
    for (const Atom& a : q.body) {  // std::set order = canonical order
        if (!first) s += ", ";
        first = false;
        s += render_atom(a);
    }
    return s + ".";
}

Database canonical_database(const ConjunctiveQuery& q) {
    validate_query(q);
    const std::set<std::string> consts = q.constants();
    std::string prefix = "_";
    for (bool clash = true; clash;) {
        clash = false;
        for (const std::string& v : q.variables()) {
            if (consts.count(prefix + v)) {
                prefix += "_";
                clash = true;
                break;
            }
        }
    }
    Database db;
    for (const Atom& a : q.body) {
        std::vector<std::string> tuple;
        tuple.reserve(a.args.size());
        for (const Term& t : a.args)
            tuple.push_back(t.is_variable() ? prefix + t.text : t.text);
        db.relations[a.relation].insert(std::move(tuple));
    }
    return db;
}

AnswerRelation evaluate(const ConjunctiveQuery& q, const Database& db) {
    validate_query(q);
    for (const auto& [name, tuples] : db.relations) {
        std::size_t arity = 0;
        bool first = true;
        for (const auto& tuple : tuples) {
            if (first) {
                arity = tuple.size();
                first = false;
            } else if (tuple.size() != arity) {
                throw DomainError("database relation '" + name + "' has mixed arities");
            }
        }
    }
    for (const Atom& a : q.body) {
        auto it = db.relations.find(a.relation);
        if (it != db.relations.end() && !it->second.empty() &&
            it->second.begin()->size() != a.args.size())
            throw DomainError("arity mismatch between query and database for relation '" +
                              a.relation + "'");
    }

    const std::set<std::string> var_set = q.variables();
    const std::vector<std::string> vars(var_set.begin(), var_set.end());
    const std::set<std::string> universe_set = db.universe();
    const std::vector<std::string> universe(universe_set.begin(), universe_set.end());

    AnswerRelation answer;
    answer.attributes = q.head_vars;

    std::map<std::string, std::string> sigma;
    auto satisfied = [&]() {
        for (const Atom& a : q.body) {
            auto it = db.relations.find(a.relation);
            if (it == db.relations.end()) return false;
            std::vector<std::string> tuple;
            tuple.reserve(a.args.size());
            for (const Term& t : a.args)
                tuple.push_back(t.is_variable() ? sigma.at(t.text) : t.text);
            if (!it->second.count(tuple)) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
        if (i == vars.size()) {
            if (!satisfied()) return;
            std::vector<std::string> head_tuple;
            head_tuple.reserve(q.head_vars.size());
            for (const std::string& h : q.head_vars) head_tuple.push_back(sigma.at(h));
            answer.tuples.insert(std::move(head_tuple));
            return;
        }
        for (const std::string& value : universe) {
            sigma[vars[i]] = value;
            enumerate(i + 1);
        }
        sigma.erase(vars[i]);
    };

    if (vars.empty() || !universe.empty()) enumerate(0);
    return answer;
}

}  // namespace semwidth
