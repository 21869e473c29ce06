#include "crystallo/algebra.hpp"
#include "crystallo/errors.hpp"
#include "crystallo/util.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crystallo {

std::uint64_t pow_u64(std::uint64_t n, unsigned k)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (n != 0 && r > UINT64_MAX / n)
            throw CapExceeded("table size overflow");
        r *= n;
    }
    return r;
}

void FiniteAlgebra::validate() const
{
    signature.validate();
    if (size < 0)
        throw ValidationError("negative carrier size");
    if (size == 0 && ! signature.consts.empty())
        throw ValidationError("empty carrier requires a constant-free signature");
    if (tables.size() != signature.ops.size())
        throw ValidationError("expected " + std::to_string(signature.ops.size()) + " tables");
    for (std::size_t i = 0; i < tables.size(); ++i) {
        std::size_t want = table_size(size, signature.ops[i].arity);
        if (tables[i].size() != want)
            throw ValidationError("table '" + signature.ops[i].name + "' has length "
                                  + std::to_string(tables[i].size()) + ", expected "
                                  + std::to_string(want));
        for (int e : tables[i])
            if (e < 0 || e >= size)
                throw ValidationError("entry " + std::to_string(e) + " out of range in table '"
                                      + signature.ops[i].name + "'");
    }
    if (consts.size() != signature.consts.size())
        throw ValidationError("expected " + std::to_string(signature.consts.size()) + " constants");
    for (int e : consts)
        if (e < 0 || e >= size)
            throw ValidationError("constant value " + std::to_string(e) + " out of range");
}

int FiniteAlgebra::apply(int op, std::span<const int> args) const
{
    std::size_t idx = 0;
    for (int a : args)
        idx = idx * static_cast<std::size_t>(size) + static_cast<std::size_t>(a);
    return tables[op][idx];
}

std::vector<int> FiniteAlgebra::table_key() const
{
    std::vector<int> key = consts;
    for (const auto & t : tables)
        key.insert(key.end(), t.begin(), t.end());
    return key;
}

AlgebraPtr make_algebra(FiniteAlgebra a)
{
    a.validate();
    return std::make_shared<const FiniteAlgebra>(std::move(a));
}

// --- term semantics -------------------------------------------------------

int eval_term(const Term & t, const FiniteAlgebra & a, const Env & env)
{
    switch (t.kind) {
    case Term::Kind::Variable: {
        auto it = env.find(t.name);
        if (it == env.end())
            throw ValidationError("unbound variable '" + t.name + "'");
        return it->second;
    }
    case Term::Kind::Constant: {
        int c = a.signature.const_index(t.name);
        if (c < 0)
            throw ValidationError("unknown constant '" + t.name + "'");
        return a.consts[c];
    }
    case Term::Kind::Apply: {
        int op = a.signature.op_index(t.name);
        if (op < 0)
            throw ValidationError("unknown operation '" + t.name + "'");
        std::vector<int> vals(t.args.size());
        for (std::size_t i = 0; i < t.args.size(); ++i)
            vals[i] = eval_term(t.args[i], a, env);
        return a.apply(op, vals);
    }
    }
    throw ValidationError("corrupt term");
}

namespace {

    // Terms flattened for the n^vars scan: slot-resolved variables and
    // pre-resolved constants/op indices, evaluated over a value stack.
    struct FlatTerm {
        struct Node {
            int kind;   // 0 var slot, 1 const element, 2 op apply
            int index;  // slot / element / op index
            int arity;
        };
        std::vector<Node> postfix;

        static FlatTerm compile(const Term & t, const FiniteAlgebra & a,
                                const std::vector<std::string> & vars)
        {
            FlatTerm f;
            f.add(t, a, vars);
            return f;
        }

        void add(const Term & t, const FiniteAlgebra & a, const std::vector<std::string> & vars)
        {
            switch (t.kind) {
            case Term::Kind::Variable: {
                auto it = std::find(vars.begin(), vars.end(), t.name);
                postfix.push_back({0, static_cast<int>(it - vars.begin()), 0});
                break;
            }
            case Term::Kind::Constant:
                postfix.push_back({1, a.consts[a.signature.const_index(t.name)], 0});
                break;
            case Term::Kind::Apply: {
                for (const auto & arg : t.args)
                    add(arg, a, vars);
                postfix.push_back({2, a.signature.op_index(t.name),
                                   static_cast<int>(t.args.size())});
                break;
            }
            }
        }

        int eval(const FiniteAlgebra & a, const std::vector<int> & env,
                 std::vector<int> & stack) const
        {
            stack.clear();
            for (const auto & node : postfix) {
                if (node.kind == 0)
                    stack.push_back(env[node.index]);
                else if (node.kind == 1)
                    stack.push_back(node.index);
                else {
                    std::size_t base = stack.size() - node.arity;
                    std::size_t idx = 0;
                    for (int i = 0; i < node.arity; ++i)
                        idx = idx * a.size + stack[base + i];
                    stack.resize(base);
                    stack.push_back(a.tables[node.index][idx]);
                }
            }
            return stack.back();
        }
    };

}

SatisfactionReport check_identities(const FiniteAlgebra & a, const std::vector<Equation> & eqs)
{
    SatisfactionReport report;
    if (a.size == 0)
        return report;

    std::vector<int> stack;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        validate_term(eqs[e].lhs, a.signature);
        validate_term(eqs[e].rhs, a.signature);
        auto vars = eqs[e].variables();
        FlatTerm lhs = FlatTerm::compile(eqs[e].lhs, a, vars);
        FlatTerm rhs = FlatTerm::compile(eqs[e].rhs, a, vars);

        std::vector<int> env(vars.size(), 0);
        IdentityViolation violation;
        bool seen = false;
        while (true) {
            int l = lhs.eval(a, env, stack);
            int r = rhs.eval(a, env, stack);
            if (l != r) {
                if (! seen) {
                    seen = true;
                    violation.equation = e;
                    violation.lhs_value = l;
                    violation.rhs_value = r;
                    for (std::size_t i = 0; i < vars.size(); ++i)
                        violation.assignment[vars[i]] = env[i];
                }
                ++violation.total;
            }
            if (vars.empty() || ! next_tuple(a.size, env))
                break;
        }
        if (seen) {
            report.satisfied = false;
            report.violations.push_back(std::move(violation));
        }
    }
    return report;
}

// --- homomorphisms ---------------------------------------------------------

bool is_homomorphism(const FiniteAlgebra & dom, const FiniteAlgebra & cod,
                     const std::vector<int> & map)
{
    if (dom.signature != cod.signature || static_cast<int>(map.size()) != dom.size)
        return false;
    for (int x : map)
        if (x < 0 || x >= cod.size)
            return false;
    for (std::size_t c = 0; c < dom.consts.size(); ++c)
        if (map[dom.consts[c]] != cod.consts[c])
            return false;
    for (std::size_t op = 0; op < dom.signature.ops.size(); ++op) {
        int k = dom.signature.ops[op].arity;
        if (dom.size == 0)
            continue;
        std::vector<int> args(k, 0), mapped(k);
        do {
            for (int i = 0; i < k; ++i)
                mapped[i] = map[args[i]];
            if (map[dom.apply(op, args)] != cod.apply(op, mapped))
                return false;
        } while (next_tuple(dom.size, args));
    }
    return true;
}

Homomorphism Homomorphism::checked(AlgebraPtr dom, AlgebraPtr cod, std::vector<int> map)
{
    if (! is_homomorphism(*dom, *cod, map))
        throw ValidationError("map is not a homomorphism");
    return Homomorphism{std::move(dom), std::move(cod), std::move(map)};
}

Homomorphism identity_hom(AlgebraPtr a)
{
    std::vector<int> map(a->size);
    std::iota(map.begin(), map.end(), 0);
    return Homomorphism{a, a, std::move(map)};
}

Homomorphism compose(const Homomorphism & g, const Homomorphism & f)
{
    if (f.cod->size != g.dom->size)
        throw ValidationError("composition domain mismatch");
    std::vector<int> map(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i)
        map[i] = g.map[f.map[i]];
    return Homomorphism{f.dom, g.cod, std::move(map)};
}

namespace {

    struct HomSearch {
        const FiniteAlgebra & dom;
        const FiniteAlgebra & cod;
        const std::vector<int> & seed;
        bool bijective;
        std::size_t max_results;
        std::vector<int> map;
        std::vector<bool> used;
        std::vector<std::vector<int>> & results;

        // Checks every op instance whose arguments and result all lie in
        // the assigned prefix [0..depth] and involve depth itself.
        bool consistent_at(int depth) const
        {
            for (std::size_t c = 0; c < dom.consts.size(); ++c)
                if (dom.consts[c] == depth && map[depth] != cod.consts[c])
                    return false;
            for (std::size_t op = 0; op < dom.signature.ops.size(); ++op) {
                int k = dom.signature.ops[op].arity;
                std::vector<int> args(k, 0), mapped(k);
                do {
                    int r = dom.apply(op, args);
                    if (r > depth)
                        continue;
                    bool touches = (r == depth);
                    for (int i = 0; i < k && ! touches; ++i)
                        touches = (args[i] == depth);
                    if (! touches)
                        continue;
                    for (int i = 0; i < k; ++i)
                        mapped[i] = map[args[i]];
                    if (map[r] != cod.apply(op, mapped))
                        return false;
                } while (next_tuple_bounded(args, depth));
            }
            return true;
        }

        // Odometer over [0..bound]^k.
        static bool next_tuple_bounded(std::vector<int> & args, int bound)
        {
            for (std::size_t i = args.size(); i-- > 0;) {
                if (++args[i] <= bound)
                    return true;
                args[i] = 0;
            }
            return false;
        }

        bool search(int depth)
        {
            if (depth == dom.size) {
                results.push_back(map);
                return max_results == 0 || results.size() < max_results;
            }
            if (seed.empty() || seed[depth] < 0) {
                for (int v = 0; v < cod.size; ++v) {
                    if (bijective && used[v])
                        continue;
                    map[depth] = v;
                    if (consistent_at(depth)) {
                        if (bijective) used[v] = true;
                        if (! search(depth + 1))
                            return false;
                        if (bijective) used[v] = false;
                    }
                }
                map[depth] = -1;
                return true;
            }
            int v = seed[depth];
            if (bijective && used[v])
                return true;
            map[depth] = v;
            bool keep = true;
            if (consistent_at(depth)) {
                if (bijective) used[v] = true;
                keep = search(depth + 1);
                if (bijective) used[v] = false;
            }
            map[depth] = -1;
            return keep;
        }
    };

    std::vector<Homomorphism> run_hom_search(AlgebraPtr a, AlgebraPtr b,
                                             const std::vector<int> & seed,
                                             bool only_bijective, std::size_t max_results)
    {
        if (a->signature != b->signature)
            throw ValidationError("signature mismatch in homomorphism search");
        std::vector<Homomorphism> out;
        if (only_bijective && a->size != b->size)
            return out;
        std::vector<std::vector<int>> maps;
        if (a->size == 0) {
            maps.push_back({});
        }
        else {
            HomSearch search{*a, *b, seed, only_bijective, max_results,
                             std::vector<int>(a->size, -1),
                             std::vector<bool>(b->size, false), maps};
            search.search(0);
        }
        out.reserve(maps.size());
        for (auto & m : maps)
            out.push_back(Homomorphism{a, b, std::move(m)});
        return out;
    }

}

std::vector<Homomorphism> enumerate_homs(AlgebraPtr a, AlgebraPtr b, bool only_bijective)
{
    static const std::vector<int> no_seed;
    return run_hom_search(std::move(a), std::move(b), no_seed, only_bijective, 0);
}

std::vector<Homomorphism> enumerate_homs_seeded(AlgebraPtr a, AlgebraPtr b,
                                                const std::vector<int> & seed,
                                                std::size_t max_results)
{
    return run_hom_search(std::move(a), std::move(b), seed, false, max_results);
}

// --- products, subalgebras -------------------------------------------------

ProductResult product(const std::vector<AlgebraPtr> & factors)
{
    if (factors.empty())
        throw ValidationError("product of zero factors needs a signature");
    const Signature & sig = factors[0]->signature;
    for (const auto & f : factors)
        if (f->signature != sig)
            throw ValidationError("signature mismatch in product");

    std::size_t m = factors.size();
    std::uint64_t size64 = 1;
    for (const auto & f : factors) {
        size64 *= static_cast<std::uint64_t>(f->size);
        if (size64 > 1'000'000)
            throw CapExceeded("product carrier too large");
    }
    int n = static_cast<int>(size64);

    // strides for the mixed-radix encoding, first factor most significant
    std::vector<std::size_t> stride(m, 1);
    for (std::size_t i = m; i-- > 1;)
        stride[i - 1] = stride[i] * factors[i]->size;

    auto decode = [&](int e, std::size_t i) {
        return static_cast<int>((e / stride[i]) % factors[i]->size);
    };

    FiniteAlgebra p;
    p.signature = sig;
    p.size = n;
    std::string label;
    for (std::size_t i = 0; i < m; ++i)
        label += (i ? "x" : "") + factors[i]->name;
    p.name = label;

    for (std::size_t op = 0; op < sig.ops.size(); ++op) {
        int k = sig.ops[op].arity;
        std::vector<int> table(table_size(n, k));
        if (n > 0) {
            std::vector<int> args(k, 0), comp(k);
            std::size_t idx = 0;
            do {
                std::size_t enc = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    for (int j = 0; j < k; ++j)
                        comp[j] = decode(args[j], i);
                    enc += static_cast<std::size_t>(factors[i]->apply(op, comp)) * stride[i];
                }
                table[idx++] = static_cast<int>(enc);
            } while (next_tuple(n, args));
        }
        p.tables.push_back(std::move(table));
    }
    for (std::size_t c = 0; c < sig.consts.size(); ++c) {
        std::size_t enc = 0;
        for (std::size_t i = 0; i < m; ++i)
            enc += static_cast<std::size_t>(factors[i]->consts[c]) * stride[i];
        p.consts.push_back(static_cast<int>(enc));
    }

    ProductResult result;
    result.algebra = make_algebra(std::move(p));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<int> map(n);
        for (int e = 0; e < n; ++e)
            map[e] = decode(e, i);
        result.projections.push_back(Homomorphism{result.algebra, factors[i], std::move(map)});
    }
    return result;
}

std::vector<int> subalgebra_closure(const FiniteAlgebra & a, const std::vector<int> & seed)
{
    std::vector<bool> in(a.size, false);
    std::vector<int> work;
    auto push = [&](int e) {
        if (! in[e]) {
            in[e] = true;
            work.push_back(e);
        }
    };
    for (int e : seed) {
        if (e < 0 || e >= a.size)
            throw ValidationError("seed element out of range");
        push(e);
    }
    for (int c : a.consts)
        push(c);

    std::vector<int> members = work;
    for (std::size_t next = 0; next < work.size(); ++next) {
        int fresh = work[next];
        members.assign(work.begin(), work.begin() + next + 1);
        for (std::size_t op = 0; op < a.signature.ops.size(); ++op) {
            int k = a.signature.ops[op].arity;
            // every tuple over current members that uses `fresh` at least once
            std::vector<int> pos(k, 0), args(k);
            do {
                bool uses_fresh = false;
                for (int i = 0; i < k; ++i) {
                    args[i] = members[pos[i]];
                    if (args[i] == fresh)
                        uses_fresh = true;
                }
                if (uses_fresh)
                    push(a.apply(op, args));
            } while (next_tuple(static_cast<int>(members.size()), pos));
        }
    }
    std::vector<int> out;
    for (int e = 0; e < a.size; ++e)
        if (in[e])
            out.push_back(e);
    return out;
}

SubalgebraResult subalgebra(AlgebraPtr a, const std::vector<int> & closed_elements)
{
    std::vector<int> elems = closed_elements;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

    std::vector<int> pos(a->size, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 0 || elems[i] >= a->size)
            throw ValidationError("subalgebra element out of range");
        pos[elems[i]] = static_cast<int>(i);
    }

    FiniteAlgebra s;
    s.signature = a->signature;
    s.size = static_cast<int>(elems.size());
    s.name = a->name + "_sub";
    for (std::size_t op = 0; op < a->signature.ops.size(); ++op) {
        int k = a->signature.ops[op].arity;
        std::vector<int> table(table_size(s.size, k));
        if (s.size > 0) {
            std::vector<int> idx(k, 0), args(k);
            std::size_t flat = 0;
            do {
                for (int i = 0; i < k; ++i)
                    args[i] = elems[idx[i]];
                int r = a->apply(op, args);
                if (pos[r] < 0)
                    throw ValidationError("element set not closed under '"
                                          + a->signature.ops[op].name + "'");
                table[flat++] = pos[r];
            } while (next_tuple(s.size, idx));
        }
        s.tables.push_back(std::move(table));
    }
    for (int c : a->consts) {
        if (pos[c] < 0)
            throw ValidationError("element set does not contain a constant");
        s.consts.push_back(pos[c]);
    }

    SubalgebraResult result;
    result.algebra = make_algebra(std::move(s));
    result.inclusion = Homomorphism{result.algebra, a, elems};
    return result;
}

// --- model enumeration ------------------------------------------------------

namespace {

    struct ModelSearch {
        const VarietyPresentation & v;
        int n;
        NodeBudget budget;

        // flat variables: constants first, then one block of cells per op
        std::vector<int> val;
        std::vector<std::size_t> op_offset;
        std::vector<int> trail;

        struct EqInfo {
            const Equation * eq;
            std::vector<std::string> vars;
        };
        std::vector<EqInfo> eq_infos;

        struct Instance {
            std::size_t eq;
            std::vector<int> env;  // values for the equation's variable slots
        };
        std::vector<Instance> instances;

        ModelEnumeration out;

        ModelSearch(const VarietyPresentation & vp, int size, std::uint64_t b)
            : v(vp), n(size), budget(b)
        {
            std::size_t total = v.signature.consts.size();
            for (const auto & op : v.signature.ops) {
                op_offset.push_back(total);
                total += table_size(n, op.arity);
            }
            val.assign(total, -1);
            for (const auto & eq : v.equations)
                eq_infos.push_back({&eq, eq.variables()});
            for (std::size_t e = 0; e < eq_infos.size(); ++e) {
                const auto & vars = eq_infos[e].vars;
                if (n == 0) {
                    if (vars.empty())
                        instances.push_back({e, {}});
                    continue;
                }
                std::vector<int> env(vars.size(), 0);
                do {
                    instances.push_back({e, env});
                } while (! vars.empty() && next_tuple(n, env));
            }
        }

        struct PEval {
            bool known = false;
            int value = -1;
            int force = -1;  // variable slot that would pin the root cell
        };

        PEval eval(const Term & t, const std::vector<int> & env,
                   const std::vector<std::string> & vars) const
        {
            PEval r;
            switch (t.kind) {
            case Term::Kind::Variable: {
                auto it = std::find(vars.begin(), vars.end(), t.name);
                r.known = true;
                r.value = env[it - vars.begin()];
                return r;
            }
            case Term::Kind::Constant: {
                int slot = v.signature.const_index(t.name);
                if (val[slot] >= 0) {
                    r.known = true;
                    r.value = val[slot];
                }
                else {
                    r.force = slot;
                }
                return r;
            }
            case Term::Kind::Apply: {
                int op = v.signature.op_index(t.name);
                std::size_t idx = 0;
                for (const auto & arg : t.args) {
                    PEval s = eval(arg, env, vars);
                    if (! s.known)
                        return r;  // unknown, not forcible through a blocked child
                    idx = idx * n + s.value;
                }
                int slot = static_cast<int>(op_offset[op] + idx);
                if (val[slot] >= 0) {
                    r.known = true;
                    r.value = val[slot];
                }
                else {
                    r.force = slot;
                }
                return r;
            }
            }
            return r;
        }

        bool assign(int slot, int value)
        {
            if (val[slot] >= 0)
                return val[slot] == value;
            val[slot] = value;
            trail.push_back(slot);
            return true;
        }

        // Fixpoint pass over all equation instances. Returns false on conflict.
        bool propagate()
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto & inst : instances) {
                    const EqInfo & info = eq_infos[inst.eq];
                    const auto & vars = info.vars;
                    PEval l = eval(info.eq->lhs, inst.env, vars);
                    PEval r = eval(info.eq->rhs, inst.env, vars);
                    if (l.known && r.known) {
                        if (l.value != r.value)
                            return false;
                    }
                    else if (l.known && r.force >= 0) {
                        if (! assign(r.force, l.value))
                            return false;
                        changed = true;
                    }
                    else if (r.known && l.force >= 0) {
                        if (! assign(l.force, r.value))
                            return false;
                        changed = true;
                    }
                }
            }
            return true;
        }

        void emit()
        {
            FiniteAlgebra a;
            a.signature = v.signature;
            a.size = n;
            a.name = v.name + "_model";
            for (std::size_t c = 0; c < v.signature.consts.size(); ++c)
                a.consts.push_back(val[c]);
            for (std::size_t op = 0; op < v.signature.ops.size(); ++op) {
                std::size_t len = table_size(n, v.signature.ops[op].arity);
                a.tables.emplace_back(val.begin() + op_offset[op],
                                      val.begin() + op_offset[op] + len);
            }
            out.models.push_back(make_algebra(std::move(a)));
        }

        bool search()
        {
            std::size_t slot = 0;
            while (slot < val.size() && val[slot] >= 0)
                ++slot;
            if (slot == val.size()) {
                emit();
                return true;
            }
            for (int value = 0; value < n; ++value) {
                if (! budget.tick()) {
                    out.truncated = true;
                    return false;
                }
                std::size_t mark = trail.size();
                if (assign(static_cast<int>(slot), value) && propagate()) {
                    if (! search())
                        return false;
                }
                while (trail.size() > mark) {
                    val[trail.back()] = -1;
                    trail.pop_back();
                }
            }
            return true;
        }
    };

}

ModelEnumeration enumerate_models(const VarietyPresentation & v, int size,
                                  std::uint64_t budget, const std::map<std::string, int> & pinned)
{
    v.validate();
    if (size < 0)
        throw ValidationError("negative model size");
    if (size == 0 && ! v.signature.consts.empty())
        return {};

    ModelSearch search(v, size, budget);
    for (const auto & [name, value] : pinned) {
        int slot = v.signature.const_index(name);
        if (slot < 0)
            throw ValidationError("cannot pin unknown constant '" + name + "'");
        if (value < 0 || value >= size)
            throw ValidationError("pinned value out of range for '" + name + "'");
        search.val[slot] = value;
    }
    if (size == 0) {
        search.emit();
    }
    else if (search.propagate()) {
        search.search();
    }
    search.out.nodes = search.budget.used;
    return search.out;
}

// --- canonical labeling -----------------------------------------------------

FiniteAlgebra relabel(const FiniteAlgebra & a, const std::vector<int> & perm)
{
    FiniteAlgebra b;
    b.signature = a.signature;
    b.size = a.size;
    b.name = a.name;
    for (std::size_t op = 0; op < a.signature.ops.size(); ++op) {
        int k = a.signature.ops[op].arity;
        std::vector<int> table(a.tables[op].size());
        if (a.size > 0) {
            std::vector<int> args(k, 0), mapped(k);
            do {
                for (int i = 0; i < k; ++i)
                    mapped[i] = perm[args[i]];
                table[tuple_index(a.size, mapped)] = perm[a.apply(op, args)];
            } while (next_tuple(a.size, args));
        }
        b.tables.push_back(std::move(table));
    }
    for (int c : a.consts)
        b.consts.push_back(perm[c]);
    return b;
}

std::vector<int> canonical_key(const FiniteAlgebra & a)
{
    if (a.size > 6)
        throw CapExceeded("canonical form restricted to carriers of size <= 6");
    std::vector<int> perm(a.size);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = a.table_key();
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<int> key = relabel(a, perm).table_key();
        if (key < best)
            best = key;
    }
    return best;
}

std::vector<AlgebraPtr> canonical_filter(const std::vector<AlgebraPtr> & models)
{
    std::vector<AlgebraPtr> out;
    for (const auto & m : models)
        if (m->table_key() == canonical_key(*m))
            out.push_back(m);
    return out;
}

std::string pretty_print(const FiniteAlgebra & a, const std::string & variety_name)
{
    std::ostringstream out;
    out << "algebra " << a.name << " : " << variety_name << " {\n";
    out << "  size " << a.size << ";\n";
    for (std::size_t op = 0; op < a.signature.ops.size(); ++op) {
        out << "  " << a.signature.ops[op].name << " : [";
        for (std::size_t i = 0; i < a.tables[op].size(); ++i) {
            if (i) out << ",";
            out << a.tables[op][i];
        }
        out << "];\n";
    }
    for (std::size_t c = 0; c < a.signature.consts.size(); ++c)
        out << "  " << a.signature.consts[c] << " = " << a.consts[c] << ";\n";
    out << "}\n";
    return out.str();
}

}
