#include "crystallo/constructions.hpp"
#include "crystallo/errors.hpp"
#include "crystallo/util.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace crystallo {

namespace {

    Term V(const std::string & n) { return Term::var(n); }
    Term C(const std::string & n) { return Term::cons(n); }
    Term ap(const std::string & n, std::vector<Term> args) { return Term::apply(n, std::move(args)); }

    bool is_prime(int p)
    {
        if (p < 2)
            return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }

    // multiplicative inverse mod p by extended Euclid
    int mod_inverse(int a, int p)
    {
        int old_r = a % p, r = p;
        int old_s = 1, s = 0;
        while (r != 0) {
            int q = old_r / r;
            int tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
        }
        if (old_r != 1 && old_r != -1)
            throw ValidationError("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
        int inv = old_s * old_r;  // normalize sign when gcd == -1
        return ((inv % p) + p) % p;
    }

    void require_satisfied(const FiniteAlgebra & a, const VarietyPresentation & v)
    {
        auto report = check_identities(a, v.equations);
        if (! report.satisfied)
            throw ValidationError("constructed algebra '" + a.name + "' violates '" + v.name
                                  + "' (equation " + std::to_string(report.violations[0].equation)
                                  + ")");
    }

    // digit-wise view of F_p^d with the first coordinate most significant
    struct VectorSpace {
        int p;
        int d;
        int n;

        VectorSpace(int p_, int d_) : p(p_), d(d_), n(static_cast<int>(pow_u64(p_, d_))) {}

        int digit(int e, int i) const
        {
            int div = 1;
            for (int j = d - 1; j > i; --j)
                div *= p;
            return (e / div) % p;
        }

        int build(const std::function<int(int)> & digit_fn) const
        {
            int e = 0;
            for (int i = 0; i < d; ++i)
                e = e * p + ((digit_fn(i) % p) + p) % p;
            return e;
        }
    };

}

std::vector<Equation> chyper_schema(int k, const std::vector<std::string> & op_names)
{
    if (k < 1 || static_cast<int>(op_names.size()) != 2 * k + 1)
        throw ValidationError("chyper_schema needs 2k+1 operation names");
    auto p = [&](int i) { return op_names[i - 1]; };  // 1-based

    std::vector<Equation> eqs;
    eqs.push_back({ap(p(1), {V("a"), C("0"), C("0")}), V("a")});
    for (int i = 2; i <= 2 * k; ++i)
        eqs.push_back({ap(p(i), {V("a"), C("0"), V("a")}), V("a")});
    eqs.push_back({ap(p(2 * k + 1), {C("0"), C("0"), V("a")}), V("a")});
    for (int i = 1; i <= k; ++i)
        eqs.push_back({ap(p(2 * i - 1), {V("a"), V("a"), V("b")}),
                       ap(p(2 * i), {V("a"), V("a"), V("b")})});
    for (int i = 1; i <= k; ++i)
        eqs.push_back({ap(p(2 * i), {V("a"), V("b"), V("b")}),
                       ap(p(2 * i + 1), {V("a"), V("b"), V("b")})});
    for (int i = 1; i <= 2 * k + 1; ++i)
        eqs.push_back({ap(p(i), {V("b"), V("b"), V("b")}), V("b")});
    return eqs;
}

VarietyPresentation builtin_variety(const std::string & name, int k)
{
    VarietyPresentation v;
    if (name == "Hex3" || (name == "CHyper" && k == 1)) {
        v.name = "Hex3";
        v.signature.ops = {{"p1", 3}, {"p2", 3}, {"p3", 3}};
        v.signature.consts = {"0"};
        v.equations = chyper_schema(1, {"p1", "p2", "p3"});
    }
    else if (name == "CHyper") {
        if (k < 1)
            throw ValidationError("CHyper needs k >= 1");
        v.name = "CHyper" + std::to_string(2 * k + 1);
        std::vector<std::string> names;
        for (int i = 1; i <= 2 * k + 1; ++i) {
            names.push_back("p" + std::to_string(i));
            v.signature.ops.push_back({names.back(), 3});
        }
        v.signature.consts = {"0"};
        v.equations = chyper_schema(k, names);
    }
    else if (name == "CM3") {
        v.name = "CM3";
        v.signature.ops = {{"p1", 3}, {"p2", 3}, {"p3", 3}};
        v.equations = {
            {ap("p1", {V("a"), V("b"), V("b")}), V("a")},
            {ap("p2", {V("a"), V("b"), V("a")}), V("a")},
            {ap("p3", {V("b"), V("b"), V("a")}), V("a")},
            {ap("p1", {V("a"), V("a"), V("b")}), ap("p2", {V("a"), V("a"), V("b")})},
            {ap("p2", {V("a"), V("b"), V("b")}), ap("p3", {V("a"), V("b"), V("b")})},
        };
    }
    else if (name == "Imp") {
        v.name = "Imp";
        v.signature.ops = {{"imp", 2}};
        v.signature.consts = {"1"};
        v.equations = {
            {ap("imp", {V("x"), V("x")}), C("1")},
            {ap("imp", {ap("imp", {V("x"), V("y")}), V("x")}), V("x")},
            {ap("imp", {ap("imp", {V("x"), V("y")}), V("y")}),
             ap("imp", {ap("imp", {V("y"), V("x")}), V("x")})},
            {ap("imp", {V("x"), ap("imp", {V("y"), V("z")})}),
             ap("imp", {V("y"), ap("imp", {V("x"), V("z")})})},
        };
    }
    else if (name == "Grp" || name == "AbGrp") {
        v.name = name;
        v.signature.ops = {{"mul", 2}, {"inv", 1}};
        v.signature.consts = {"e"};
        v.equations = {
            {ap("mul", {ap("mul", {V("x"), V("y")}), V("z")}),
             ap("mul", {V("x"), ap("mul", {V("y"), V("z")})})},
            {ap("mul", {V("x"), C("e")}), V("x")},
            {ap("mul", {C("e"), V("x")}), V("x")},
            {ap("mul", {V("x"), ap("inv", {V("x")})}), C("e")},
            {ap("mul", {ap("inv", {V("x")}), V("x")}), C("e")},
        };
        if (name == "AbGrp")
            v.equations.push_back({ap("mul", {V("x"), V("y")}), ap("mul", {V("y"), V("x")})});
    }
    else if (name == "ComMon") {
        v.name = "ComMon";
        v.signature.ops = {{"add", 2}};
        v.signature.consts = {"0"};
        v.equations = {
            {ap("add", {ap("add", {V("x"), V("y")}), V("z")}),
             ap("add", {V("x"), ap("add", {V("y"), V("z")})})},
            {ap("add", {V("x"), C("0")}), V("x")},
            {ap("add", {C("0"), V("x")}), V("x")},
            {ap("add", {V("x"), V("y")}), ap("add", {V("y"), V("x")})},
        };
    }
    else if (name == "Mag") {
        v.name = "Mag";
        v.signature.ops = {{"add", 2}};
        v.signature.consts = {"0"};
        v.equations = {
            {ap("add", {V("x"), C("0")}), V("x")},
            {ap("add", {C("0"), V("x")}), V("x")},
        };
    }
    else if (name == "Disc") {
        v.name = "Disc";
        v.signature.ops = {{"t", 3}};
        v.equations = {
            {ap("t", {V("x"), V("y"), V("y")}), V("x")},
            {ap("t", {V("y"), V("y"), V("x")}), V("x")},
            {ap("t", {V("x"), V("y"), V("x")}), V("x")},
        };
    }
    else if (name == "Mal") {
        v.name = "Mal";
        v.signature.ops = {{"p", 3}};
        v.equations = {
            {ap("p", {V("x"), V("y"), V("y")}), V("x")},
            {ap("p", {V("y"), V("y"), V("x")}), V("x")},
        };
    }
    else if (name == "PtMag") {
        v.name = "PtMag";
        v.signature.ops = {{"b", 2}};
        v.signature.consts = {"0"};
    }
    else if (name == "U1") {
        v.name = "U1";
        v.signature.ops = {{"u", 1}};
    }
    else {
        throw ValidationError("unknown builtin variety '" + name + "'");
    }
    v.validate();
    return v;
}

std::vector<std::string> builtin_variety_names()
{
    return {"Hex3", "CM3", "CHyper", "Imp", "Grp", "AbGrp", "ComMon", "Mag",
            "Disc", "Mal", "PtMag", "U1"};
}

// --- functors ---------------------------------------------------------------

AlgebraPtr apply_h(const AlgebraPtr & group)
{
    VarietyPresentation grp = builtin_variety("Grp");
    if (group->signature != grp.signature)
        throw ValidationError("apply_h needs an algebra over the Grp signature");
    require_satisfied(*group, grp);

    VarietyPresentation hex3 = builtin_variety("Hex3");
    int n = group->size;
    const auto & mul = group->tables[0];
    const auto & inv = group->tables[1];

    FiniteAlgebra a;
    a.name = "h" + group->name;
    a.signature = hex3.signature;
    a.size = n;
    std::vector<int> p1(table_size(n, 3)), proj3(table_size(n, 3));
    std::size_t idx = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                p1[idx] = mul[static_cast<std::size_t>(mul[x * n + inv[y]]) * n + z];
                proj3[idx] = z;
                ++idx;
            }
    a.tables = {std::move(p1), proj3, proj3};
    a.consts = {group->consts[0]};
    require_satisfied(a, hex3);
    return make_algebra(std::move(a));
}

AlgebraPtr apply_w(int p, int d)
{
    if (! is_prime(p))
        throw ValidationError("w needs a prime field order, got " + std::to_string(p));
    if (p == 2)
        throw ValidationError("w is undefined in characteristic 2");
    if (d < 1)
        throw ValidationError("w needs dimension >= 1");

    VarietyPresentation hex3 = builtin_variety("Hex3");
    VectorSpace vs(p, d);
    int half = mod_inverse(2, p);

    FiniteAlgebra a;
    a.name = "wF" + std::to_string(p) + "_" + std::to_string(d);
    a.signature = hex3.signature;
    a.size = vs.n;
    std::vector<int> t1(table_size(vs.n, 3)), t2(t1.size()), t3(t1.size());
    std::size_t idx = 0;
    for (int x = 0; x < vs.n; ++x)
        for (int y = 0; y < vs.n; ++y)
            for (int z = 0; z < vs.n; ++z) {
                t1[idx] = vs.build([&](int i) {
                    return vs.digit(x, i) + (vs.digit(z, i) - vs.digit(y, i)) * half;
                });
                t2[idx] = vs.build([&](int i) {
                    return (vs.digit(x, i) + vs.digit(z, i)) * half;
                });
                t3[idx] = vs.build([&](int i) {
                    return (vs.digit(x, i) - vs.digit(y, i)) * half + vs.digit(z, i);
                });
                ++idx;
            }
    a.tables = {std::move(t1), std::move(t2), std::move(t3)};
    a.consts = {0};
    require_satisfied(a, hex3);
    return make_algebra(std::move(a));
}

AlgebraPtr apply_m(const AlgebraPtr & maltsev)
{
    if (maltsev->signature.ops.size() != 1 || maltsev->signature.ops[0].arity != 3
        || ! maltsev->signature.consts.empty())
        throw ValidationError("apply_m needs a single ternary operation and no constants");
    VarietyPresentation mal = builtin_variety("Mal");
    VarietyPresentation check = mal;
    check.signature = maltsev->signature;
    const std::string & opname = maltsev->signature.ops[0].name;
    check.equations = {
        {ap(opname, {V("x"), V("y"), V("y")}), V("x")},
        {ap(opname, {V("y"), V("y"), V("x")}), V("x")},
    };
    require_satisfied(*maltsev, check);

    VarietyPresentation cm3 = builtin_variety("CM3");
    int n = maltsev->size;
    FiniteAlgebra a;
    a.name = "m" + maltsev->name;
    a.signature = cm3.signature;
    a.size = n;
    std::vector<int> proj3(table_size(n, 3));
    for (std::size_t idx = 0; idx < proj3.size(); ++idx)
        proj3[idx] = static_cast<int>(idx % n);
    a.tables = {maltsev->tables[0], proj3, proj3};
    require_satisfied(a, cm3);
    return make_algebra(std::move(a));
}

AlgebraPtr apply_a(int p, int d)
{
    if (! is_prime(p))
        throw ValidationError("a needs a prime field order, got " + std::to_string(p));
    if (p == 2)
        throw ValidationError("a is undefined in characteristic 2");
    if (d < 1)
        throw ValidationError("a needs dimension >= 1");

    VarietyPresentation cm3 = builtin_variety("CM3");
    VectorSpace vs(p, d);
    int half = mod_inverse(2, p);

    FiniteAlgebra a;
    a.name = "aF" + std::to_string(p) + "_" + std::to_string(d);
    a.signature = cm3.signature;
    a.size = vs.n;
    std::vector<int> t1(table_size(vs.n, 3)), t2(t1.size()), t3(t1.size());
    std::size_t idx = 0;
    for (int x = 0; x < vs.n; ++x)
        for (int y = 0; y < vs.n; ++y)
            for (int z = 0; z < vs.n; ++z) {
                t1[idx] = vs.build([&](int i) {
                    return vs.digit(x, i) + (vs.digit(z, i) - vs.digit(y, i)) * half;
                });
                t2[idx] = vs.build([&](int i) {
                    return (vs.digit(x, i) + vs.digit(z, i)) * half;
                });
                t3[idx] = vs.build([&](int i) {
                    return (vs.digit(x, i) - vs.digit(y, i)) * half + vs.digit(z, i);
                });
                ++idx;
            }
    a.tables = {std::move(t1), std::move(t2), std::move(t3)};
    require_satisfied(a, cm3);
    return make_algebra(std::move(a));
}

// --- sample factories ---------------------------------------------------------

AlgebraPtr cyclic_group(int n)
{
    if (n < 1)
        throw ValidationError("cyclic group needs n >= 1");
    VarietyPresentation grp = builtin_variety("Grp");
    FiniteAlgebra a;
    a.name = "Z" + std::to_string(n);
    a.signature = grp.signature;
    a.size = n;
    std::vector<int> mul(table_size(n, 2)), inv(n);
    for (int x = 0; x < n; ++x) {
        inv[x] = (n - x) % n;
        for (int y = 0; y < n; ++y)
            mul[x * n + y] = (x + y) % n;
    }
    a.tables = {std::move(mul), std::move(inv)};
    a.consts = {0};
    return make_algebra(std::move(a));
}

AlgebraPtr klein_group()
{
    VarietyPresentation grp = builtin_variety("Grp");
    FiniteAlgebra a;
    a.name = "Klein";
    a.signature = grp.signature;
    a.size = 4;
    std::vector<int> mul(16), inv(4);
    for (int x = 0; x < 4; ++x) {
        inv[x] = x;
        for (int y = 0; y < 4; ++y)
            mul[x * 4 + y] = x ^ y;
    }
    a.tables = {std::move(mul), std::move(inv)};
    a.consts = {0};
    return make_algebra(std::move(a));
}

AlgebraPtr fp_vector_space(int p, int d)
{
    if (! is_prime(p) || d < 1)
        throw ValidationError("fp_vector_space needs a prime p and d >= 1");
    VarietyPresentation ab = builtin_variety("AbGrp");
    VectorSpace vs(p, d);
    FiniteAlgebra a;
    a.name = "F" + std::to_string(p) + "_" + std::to_string(d);
    a.signature = ab.signature;
    a.size = vs.n;
    std::vector<int> mul(table_size(vs.n, 2)), inv(vs.n);
    for (int x = 0; x < vs.n; ++x) {
        inv[x] = vs.build([&](int i) { return -vs.digit(x, i); });
        for (int y = 0; y < vs.n; ++y)
            mul[x * vs.n + y] = vs.build([&](int i) { return vs.digit(x, i) + vs.digit(y, i); });
    }
    a.tables = {std::move(mul), std::move(inv)};
    a.consts = {0};
    require_satisfied(a, ab);
    return make_algebra(std::move(a));
}

AlgebraPtr cyclic_monoid(int n)
{
    if (n < 1)
        throw ValidationError("cyclic monoid needs n >= 1");
    VarietyPresentation mon = builtin_variety("ComMon");
    FiniteAlgebra a;
    a.name = "monZ" + std::to_string(n);
    a.signature = mon.signature;
    a.size = n;
    std::vector<int> add(table_size(n, 2));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            add[x * n + y] = (x + y) % n;
    a.tables = {std::move(add)};
    a.consts = {0};
    return make_algebra(std::move(a));
}

AlgebraPtr max_monoid()
{
    VarietyPresentation mon = builtin_variety("ComMon");
    FiniteAlgebra a;
    a.name = "maxMon";
    a.signature = mon.signature;
    a.size = 2;
    a.tables = {{0, 1, 1, 1}};
    a.consts = {0};
    require_satisfied(a, mon);
    return make_algebra(std::move(a));
}

AlgebraPtr discriminator(int n)
{
    if (n < 1)
        throw ValidationError("discriminator needs n >= 1");
    VarietyPresentation disc = builtin_variety("Disc");
    FiniteAlgebra a;
    a.name = "disc" + std::to_string(n);
    a.signature = disc.signature;
    a.size = n;
    std::vector<int> t(table_size(n, 3));
    std::size_t idx = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                t[idx++] = (x == y) ? z : x;
    a.tables = {std::move(t)};
    require_satisfied(a, disc);
    return make_algebra(std::move(a));
}

AlgebraPtr boolean_implication(int atoms)
{
    if (atoms < 0 || atoms > 10)
        throw ValidationError("boolean_implication needs 0 <= atoms <= 10");
    VarietyPresentation imp = builtin_variety("Imp");
    int n = 1 << atoms;
    int mask = n - 1;
    FiniteAlgebra a;
    a.name = "boolImp" + std::to_string(atoms);
    a.signature = imp.signature;
    a.size = n;
    std::vector<int> t(table_size(n, 2));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x * n + y] = (~x | y) & mask;
    a.tables = {std::move(t)};
    a.consts = {mask};
    require_satisfied(a, imp);
    return make_algebra(std::move(a));
}

AlgebraPtr one_element(const VarietyPresentation & v)
{
    FiniteAlgebra a;
    a.name = "one" + v.name;
    a.signature = v.signature;
    a.size = 1;
    for (const auto & op : v.signature.ops)
        a.tables.push_back(std::vector<int>(table_size(1, op.arity), 0));
    a.consts.assign(v.signature.consts.size(), 0);
    return make_algebra(std::move(a));
}

AlgebraPtr empty_algebra(const VarietyPresentation & v)
{
    if (! v.signature.consts.empty())
        throw ValidationError("empty algebra needs a constant-free signature");
    FiniteAlgebra a;
    a.name = "empty" + v.name;
    a.signature = v.signature;
    a.size = 0;
    a.tables.assign(v.signature.ops.size(), {});
    return make_algebra(std::move(a));
}

AlgebraPtr affine_maltsev(int p, int d)
{
    if (! is_prime(p) || d < 1)
        throw ValidationError("affine_maltsev needs a prime p and d >= 1");
    VarietyPresentation mal = builtin_variety("Mal");
    VectorSpace vs(p, d);
    FiniteAlgebra a;
    a.name = "affF" + std::to_string(p) + "_" + std::to_string(d);
    a.signature = mal.signature;
    a.size = vs.n;
    std::vector<int> t(table_size(vs.n, 3));
    std::size_t idx = 0;
    for (int x = 0; x < vs.n; ++x)
        for (int y = 0; y < vs.n; ++y)
            for (int z = 0; z < vs.n; ++z)
                t[idx++] = vs.build([&](int i) {
                    return vs.digit(x, i) - vs.digit(y, i) + vs.digit(z, i);
                });
    a.tables = {std::move(t)};
    require_satisfied(a, mal);
    return make_algebra(std::move(a));
}

AlgebraPtr constant_pointed_magma()
{
    VarietyPresentation ptmag = builtin_variety("PtMag");
    FiniteAlgebra a;
    a.name = "cpm2";
    a.signature = ptmag.signature;
    a.size = 2;
    a.tables = {{0, 0, 0, 0}};
    a.consts = {0};
    return make_algebra(std::move(a));
}

AlgebraPtr shifting_violation_fixture()
{
    VarietyPresentation u1 = builtin_variety("U1");
    FiniteAlgebra a;
    a.name = "shift4";
    a.signature = u1.signature;
    a.size = 4;
    a.tables = {{0, 1, 2, 3}};
    return make_algebra(std::move(a));
}

AlgebraPtr jt_noncommuting_fixture()
{
    // Unitary magma on {0,1,2}: add(1,2) = 2, add(2,1) = 1, diagonal kept
    // idempotent. {0,1} and {0,2} are subalgebras and exhaustive search
    // over the cooperator candidates comes back empty (see tests).
    VarietyPresentation mag = builtin_variety("Mag");
    FiniteAlgebra a;
    a.name = "jtFix3";
    a.signature = mag.signature;
    a.size = 3;
    a.tables = {{0, 1, 2,
                 1, 1, 2,
                 2, 1, 2}};
    a.consts = {0};
    require_satisfied(a, mag);
    return make_algebra(std::move(a));
}

// --- catalog -------------------------------------------------------------------

AlgebraPtr builtin_algebra(const std::string & name)
{
    if (name == "Z2") return cyclic_group(2);
    if (name == "Z3") return cyclic_group(3);
    if (name == "Z4") return cyclic_group(4);
    if (name == "Z5") return cyclic_group(5);
    if (name == "Klein") return klein_group();
    if (name == "monZ2") return cyclic_monoid(2);
    if (name == "monZ3") return cyclic_monoid(3);
    if (name == "maxMon") return max_monoid();
    if (name == "disc2") return discriminator(2);
    if (name == "disc3") return discriminator(3);
    if (name == "boolImp1") return boolean_implication(1);
    if (name == "boolImp2") return boolean_implication(2);
    if (name == "hZ2") return apply_h(cyclic_group(2));
    if (name == "hZ3") return apply_h(cyclic_group(3));
    if (name == "hZ4") return apply_h(cyclic_group(4));
    if (name == "hKlein") return apply_h(klein_group());
    if (name == "wF3_1") return apply_w(3, 1);
    if (name == "wF5_1") return apply_w(5, 1);
    if (name == "wF3_2") return apply_w(3, 2);
    if (name == "F3_1") return fp_vector_space(3, 1);
    if (name == "F5_1") return fp_vector_space(5, 1);
    if (name == "affF3_1") return affine_maltsev(3, 1);
    if (name == "mZ3aff") return apply_m(affine_maltsev(3, 1));
    if (name == "aF3_1") return apply_a(3, 1);
    if (name == "cpm2") return constant_pointed_magma();
    if (name == "shift4") return shifting_violation_fixture();
    if (name == "jtFix3") return jt_noncommuting_fixture();
    if (name == "oneHex3") return one_element(builtin_variety("Hex3"));
    if (name == "oneGrp") return one_element(builtin_variety("Grp"));
    if (name == "oneImp") return one_element(builtin_variety("Imp"));
    if (name == "oneCM3") return one_element(builtin_variety("CM3"));
    if (name == "emptyMal") return empty_algebra(builtin_variety("Mal"));
    throw ValidationError("unknown builtin algebra '" + name + "'");
}

std::vector<std::string> builtin_algebra_names()
{
    return {"Z2", "Z3", "Z4", "Z5", "Klein", "monZ2", "monZ3", "maxMon",
            "disc2", "disc3", "boolImp1", "boolImp2",
            "hZ2", "hZ3", "hZ4", "hKlein", "wF3_1", "wF5_1", "wF3_2",
            "F3_1", "F5_1", "affF3_1", "mZ3aff", "aF3_1",
            "cpm2", "shift4", "jtFix3",
            "oneHex3", "oneGrp", "oneImp", "oneCM3", "emptyMal"};
}

std::vector<AlgebraPtr> paper71_samples()
{
    std::vector<AlgebraPtr> base = {
        builtin_algebra("hZ2"), builtin_algebra("hZ3"), builtin_algebra("hZ4"),
        builtin_algebra("hKlein"), builtin_algebra("wF3_1"), builtin_algebra("wF5_1"),
        builtin_algebra("wF3_2"),
    };
    std::vector<AlgebraPtr> out = base;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
            out.push_back(product({base[i], base[j]}).algebra);
    return out;
}

std::vector<AlgebraPtr> builtin_small_algebras()
{
    std::vector<AlgebraPtr> out;
    for (const char * name : {"Z2", "Z3", "monZ2", "monZ3", "maxMon", "disc2", "disc3",
                              "boolImp1", "hZ2", "hZ3", "wF3_1", "mZ3aff", "aF3_1",
                              "jtFix3", "cpm2", "oneHex3", "oneGrp", "oneImp", "oneCM3",
                              "emptyMal"})
        out.push_back(builtin_algebra(name));
    return out;
}

std::vector<AlgebraPtr> builtin_sample_set(const std::string & name)
{
    if (name == "paper7.1")
        return paper71_samples();
    if (name == "groups234")
        return {builtin_algebra("Z2"), builtin_algebra("Z3"), builtin_algebra("Z4"),
                builtin_algebra("Klein")};
    if (name == "disc23") {
        auto d2 = builtin_algebra("disc2");
        auto d3 = builtin_algebra("disc3");
        return {d2, d3, product({d2, d3}).algebra};
    }
    if (name == "small")
        return builtin_small_algebras();
    throw ValidationError("unknown builtin sample set '" + name + "'");
}

// --- CHyper padding -----------------------------------------------------------

namespace {

    Term rename_ops(const Term & t, const std::vector<std::string> & from,
                    const std::vector<std::string> & to)
    {
        if (t.kind != Term::Kind::Apply)
            return t;
        std::vector<Term> args;
        for (const auto & a : t.args)
            args.push_back(rename_ops(a, from, to));
        auto it = std::find(from.begin(), from.end(), t.name);
        return Term::apply(it == from.end() ? t.name : to[it - from.begin()], std::move(args));
    }

    bool matches_some(const Equation & eq, const std::vector<Equation> & axioms, int & which)
    {
        for (std::size_t i = 0; i < axioms.size(); ++i) {
            if (equal_up_to_renaming(eq, axioms[i])
                || equal_up_to_renaming({eq.rhs, eq.lhs}, axioms[i])) {
                which = static_cast<int>(i);
                return true;
            }
        }
        return false;
    }

}

PadResult pad_chyper(const VarietyPresentation & v, const std::vector<AlgebraPtr> & models)
{
    // schema shape: 2k+1 ternary ops and exactly one constant
    std::size_t m = v.signature.ops.size();
    if (m < 3 || m % 2 == 0 || v.signature.consts.size() != 1)
        throw ValidationError("presentation does not match the CHyper schema shape");
    for (const auto & op : v.signature.ops)
        if (op.arity != 3)
            throw ValidationError("presentation does not match the CHyper schema shape");
    int k = static_cast<int>((m - 1) / 2);

    std::vector<std::string> src_names;
    for (const auto & op : v.signature.ops)
        src_names.push_back(op.name);

    if (v.signature.consts[0] != "0")
        throw ValidationError("CHyper padding expects the constant to be named '0'");
    std::vector<Equation> schema = chyper_schema(k, src_names);

    for (const auto & eq : schema) {
        int ignore;
        if (! matches_some(eq, v.equations, ignore))
            throw ValidationError("schema equation '" + eq.to_string()
                                  + "' missing from the presentation");
    }
    for (const auto & eq : v.equations) {
        int ignore;
        if (! matches_some(eq, schema, ignore))
            throw ValidationError("equation '" + eq.to_string() + "' is outside the schema");
    }

    // tail duplication: q_i = p_i for i <= 2k, q_{2k+1} = q_{2k+2} = p_{2k},
    // q_{2k+3} = p_{2k+1}
    PadResult result;
    int new_count = 2 * k + 3;
    for (int i = 0; i < 2 * k; ++i)
        result.definition.push_back(i);
    result.definition.push_back(2 * k - 1);
    result.definition.push_back(2 * k - 1);
    result.definition.push_back(2 * k);

    std::vector<std::string> new_names;
    for (int i = 1; i <= new_count; ++i)
        new_names.push_back("p" + std::to_string(i));

    result.padded.name = v.name + "_pad" + std::to_string(new_count);
    for (const auto & n : new_names)
        result.padded.signature.ops.push_back({n, 3});
    result.padded.signature.consts = {"0"};
    result.padded.equations = chyper_schema(k + 1, new_names);
    result.padded.validate();

    std::vector<std::string> translated_names;
    for (int i = 0; i < new_count; ++i)
        translated_names.push_back(src_names[result.definition[i]]);

    result.verified = true;
    for (const auto & eq : result.padded.equations) {
        PadItem item;
        item.schema_equation = eq;
        item.translated = {rename_ops(eq.lhs, new_names, translated_names),
                           rename_ops(eq.rhs, new_names, translated_names)};
        if (item.translated.lhs == item.translated.rhs) {
            item.how = PadItem::How::Syntactic;
        }
        else if (int which; matches_some(item.translated, v.equations, which)) {
            item.how = PadItem::How::AxiomMatch;
            item.axiom = which;
        }
        else {
            bool all_models_pass = ! models.empty();
            for (const auto & model : models)
                if (! check_identities(*model, {item.translated}).satisfied) {
                    all_models_pass = false;
                    break;
                }
            if (all_models_pass)
                item.how = PadItem::How::Semantic;
            else
                result.verified = false;
        }
        result.items.push_back(std::move(item));
    }
    return result;
}

}
