#include "crystallo/terms.hpp"
#include "crystallo/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace crystallo {

int Signature::op_index(const std::string & name) const
{
    for (std::size_t i = 0; i < ops.size(); ++i)
        if (ops[i].name == name)
            return static_cast<int>(i);
    return -1;
}

int Signature::const_index(const std::string & name) const
{
    for (std::size_t i = 0; i < consts.size(); ++i)
        if (consts[i] == name)
            return static_cast<int>(i);
    return -1;
}

bool Signature::has_name(const std::string & name) const
{
    return op_index(name) >= 0 || const_index(name) >= 0;
}

void Signature::validate() const
{
    std::unordered_set<std::string> seen;
    for (const auto & op : ops) {
        if (op.arity < 1)
            throw ValidationError("operation '" + op.name + "' must have arity >= 1");
        if (! seen.insert(op.name).second)
            throw ValidationError("duplicate name '" + op.name + "' in signature");
    }
    for (const auto & c : consts)
        if (! seen.insert(c).second)
            throw ValidationError("duplicate name '" + c + "' in signature");
}

Term Term::var(std::string n)
{
    Term t;
    t.kind = Kind::Variable;
    t.name = std::move(n);
    return t;
}

Term Term::cons(std::string n)
{
    Term t;
    t.kind = Kind::Constant;
    t.name = std::move(n);
    return t;
}

Term Term::apply(std::string n, std::vector<Term> a)
{
    Term t;
    t.kind = Kind::Apply;
    t.name = std::move(n);
    t.args = std::move(a);
    return t;
}

bool Term::operator==(const Term & other) const
{
    return kind == other.kind && name == other.name && args == other.args;
}

void Term::collect_variables(std::vector<std::string> & out) const
{
    if (kind == Kind::Variable) {
        if (std::find(out.begin(), out.end(), name) == out.end())
            out.push_back(name);
    }
    else if (kind == Kind::Apply) {
        for (const auto & a : args)
            a.collect_variables(out);
    }
}

std::string Term::to_string() const
{
    if (kind != Kind::Apply)
        return name;
    std::string s = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += args[i].to_string();
    }
    return s + ")";
}

bool Equation::operator==(const Equation & other) const
{
    return lhs == other.lhs && rhs == other.rhs;
}

std::string Equation::to_string() const
{
    return lhs.to_string() + " = " + rhs.to_string();
}

std::vector<std::string> Equation::variables() const
{
    std::vector<std::string> vars;
    lhs.collect_variables(vars);
    rhs.collect_variables(vars);
    return vars;
}

void validate_term(const Term & t, const Signature & sig)
{
    switch (t.kind) {
    case Term::Kind::Variable:
        if (sig.has_name(t.name))
            throw ValidationError("variable '" + t.name + "' shadows a signature name");
        break;
    case Term::Kind::Constant:
        if (sig.const_index(t.name) < 0)
            throw ValidationError("unknown constant '" + t.name + "'");
        break;
    case Term::Kind::Apply: {
        int op = sig.op_index(t.name);
        if (op < 0)
            throw ValidationError("unknown operation '" + t.name + "'");
        int arity = sig.ops[op].arity;
        if (static_cast<int>(t.args.size()) != arity)
            throw ValidationError("arity mismatch: '" + t.name + "' takes "
                                  + std::to_string(arity) + " arguments, got "
                                  + std::to_string(t.args.size()));
        for (const auto & a : t.args)
            validate_term(a, sig);
        break;
    }
    }
}

void VarietyPresentation::validate() const
{
    signature.validate();
    for (const auto & eq : equations) {
        validate_term(eq.lhs, signature);
        validate_term(eq.rhs, signature);
    }
}

std::string pretty_print(const VarietyPresentation & v)
{
    std::ostringstream out;
    out << "variety " << v.name << " {\n";
    for (const auto & op : v.signature.ops)
        out << "  op " << op.name << "/" << op.arity << ";\n";
    for (const auto & c : v.signature.consts)
        out << "  const " << c << ";\n";
    for (const auto & eq : v.equations)
        out << "  eq " << eq.lhs.to_string() << " = " << eq.rhs.to_string() << ";\n";
    out << "}\n";
    return out.str();
}

namespace {
    bool match_terms(const Term & a, const Term & b,
                     std::map<std::string, std::string> & fwd,
                     std::map<std::string, std::string> & bwd)
    {
        if (a.kind != b.kind)
            return false;
        if (a.kind == Term::Kind::Variable) {
            auto f = fwd.find(a.name);
            auto g = bwd.find(b.name);
            if (f == fwd.end() && g == bwd.end()) {
                fwd[a.name] = b.name;
                bwd[b.name] = a.name;
                return true;
            }
            return f != fwd.end() && g != bwd.end() && f->second == b.name && g->second == a.name;
        }
        if (a.name != b.name || a.args.size() != b.args.size())
            return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (! match_terms(a.args[i], b.args[i], fwd, bwd))
                return false;
        return true;
    }
}

bool equal_up_to_renaming(const Equation & a, const Equation & b)
{
    std::map<std::string, std::string> fwd, bwd;
    return match_terms(a.lhs, b.lhs, fwd, bwd) && match_terms(a.rhs, b.rhs, fwd, bwd);
}

}
