#include "hopf/characters.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace hopf {

ClassFunction::ClassFunction(Subgroup domain, std::vector<Cyclotomic> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_.order())
        throw Error("ClassFunction: value count does not match subgroup order");
    const FiniteGroup& G = domain_.group();
    for (FiniteGroup::Elem a : domain_.elements())
        for (FiniteGroup::Elem x : domain_.elements())
            if (!(value(G.conjugate(x, a)) == value(a)))
                throw Error("ClassFunction: values are not constant on conjugacy classes");
}

const Cyclotomic& ClassFunction::value(FiniteGroup::Elem g) const {
    return values_[domain_.position(g)];
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const {
    if (!(domain_ == rhs.domain_))
        throw Error("ClassFunction: mismatched domains");
    std::vector<Cyclotomic> out(values_);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += rhs.values_[i];
    return ClassFunction(domain_, std::move(out));
}

ClassFunction ClassFunction::operator*(const ClassFunction& rhs) const {
    if (!(domain_ == rhs.domain_))
        throw Error("ClassFunction: mismatched domains");
    std::vector<Cyclotomic> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = values_[i] * rhs.values_[i];
    return ClassFunction(domain_, std::move(out));
}

bool ClassFunction::operator==(const ClassFunction& rhs) const {
    if (!(domain_ == rhs.domain_))
        return false;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!(values_[i] == rhs.values_[i]))
            return false;
    return true;
}

Rat ClassFunction::inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (!(a.domain_ == b.domain_))
        throw Error("inner_product: mismatched domains");
    Cyclotomic sum;
    for (std::size_t i = 0; i < a.values_.size(); ++i)
        sum += a.values_[i] * b.values_[i].conjugate();
    return sum.rational_value() / Rat(a.domain_.order());
}

CharacterTable::CharacterTable(Subgroup domain, std::vector<ClassFunction> irreducibles)
    : domain_(std::move(domain)), irreducibles_(std::move(irreducibles)) {
    Rat degree_sum = 0;
    for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
        for (std::size_t j = 0; j < irreducibles_.size(); ++j) {
            Rat ip = ClassFunction::inner_product(irreducibles_[i], irreducibles_[j]);
            if (ip != (i == j ? 1 : 0))
                throw Error("CharacterTable: row orthogonality fails at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
        Rat d = irreducibles_[i].degree();
        degree_sum += d * d;
    }
    if (degree_sum != Rat(domain_.order()))
        throw Error("CharacterTable: degrees do not sum to the group order");
}

namespace {

// Character table of an abelian subgroup: all homomorphisms into the group of
// e-th roots of unity, e = exponent, built by extending along a generator
// chain. Values are stored as exponents of ζ_e until the end.
std::vector<ClassFunction> abelian_irreducibles(const Subgroup& A) {
    const FiniteGroup& G = A.group();
    std::size_t e = 1;
    for (FiniteGroup::Elem a : A.elements()) {
        std::size_t k = 1;
        FiniteGroup::Elem x = a;
        while (x != 0) {
            x = G.mul(x, a);
            ++k;
        }
        e = std::lcm(e, k);
    }

    // partial characters: exponent of ζ_e per covered element
    std::vector<std::map<FiniteGroup::Elem, std::size_t>> chars;
    chars.push_back({{0, 0}});

    auto covered = [&](FiniteGroup::Elem g) { return chars[0].count(g) > 0; };

    while (chars[0].size() < A.order()) {
        FiniteGroup::Elem g = 0;
        for (FiniteGroup::Elem a : A.elements())
            if (!covered(a)) {
                g = a;
                break;
            }
        // minimal k >= 1 with g^k already covered
        std::size_t k = 1;
        FiniteGroup::Elem p = g;
        while (!covered(p)) {
            p = G.mul(p, g);
            ++k;
        }
        const FiniteGroup::Elem gk = p;

        std::vector<std::map<FiniteGroup::Elem, std::size_t>> extended;
        for (const auto& chi : chars) {
            const std::size_t target = chi.at(gk);
            std::size_t found = 0;
            for (std::size_t t = 0; t < e; ++t) {
                if ((k * t) % e != target % e)
                    continue;
                ++found;
                auto ext = chi;
                FiniteGroup::Elem gi = 0; // g^i
                for (std::size_t i = 0; i < k; ++i) {
                    if (i > 0)
                        gi = G.mul(gi, g);
                    for (const auto& [s, v] : chi)
                        ext[G.mul(s, gi)] = (v + i * t) % e;
                }
                extended.push_back(std::move(ext));
            }
            if (found != k)
                throw Error("abelian_irreducibles: extension count mismatch");
        }
        chars = std::move(extended);
    }

    std::vector<ClassFunction> out;
    for (const auto& chi : chars) {
        std::vector<Cyclotomic> values;
        values.reserve(A.order());
        for (FiniteGroup::Elem a : A.elements())
            values.push_back(Cyclotomic::root_of_unity(e, chi.at(a)));
        out.emplace_back(A, std::move(values));
    }
    // trivial character first, then by value vector for determinism
    std::sort(out.begin(), out.end(), [&](const ClassFunction& x, const ClassFunction& y) {
        auto key = [&](const ClassFunction& f) {
            std::vector<std::string> k;
            for (const auto& v : f.values())
                k.push_back(v.str());
            return k;
        };
        return key(x) < key(y);
    });
    auto is_trivial = [](const ClassFunction& f) {
        for (const auto& v : f.values())
            if (!(v == Cyclotomic(Rat(1))))
                return false;
        return true;
    };
    std::stable_partition(out.begin(), out.end(), is_trivial);
    return out;
}

// Conjugacy classes of the subgroup viewed as a group in itself, in order of
// least member.
std::vector<std::vector<FiniteGroup::Elem>> inner_classes(const Subgroup& A) {
    const FiniteGroup& G = A.group();
    std::vector<std::vector<FiniteGroup::Elem>> classes;
    std::set<FiniteGroup::Elem> seen;
    for (FiniteGroup::Elem a : A.elements()) {
        if (seen.count(a))
            continue;
        std::set<FiniteGroup::Elem> cls;
        for (FiniteGroup::Elem x : A.elements())
            cls.insert(G.conjugate(x, a));
        seen.insert(cls.begin(), cls.end());
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

struct ShippedTable {
    // class signatures (element order, class size) in the fixed column order
    std::vector<std::pair<std::size_t, std::size_t>> signatures;
    // rows of values aligned with `signatures`
    std::vector<std::vector<Cyclotomic>> rows;
};

Cyclotomic cyc_int(long v) { return Cyclotomic(Rat(v)); }

ShippedTable shipped_s3() {
    return ShippedTable{
        {{1, 1}, {2, 3}, {3, 2}},
        {
            {cyc_int(1), cyc_int(1), cyc_int(1)},
            {cyc_int(1), cyc_int(-1), cyc_int(1)},
            {cyc_int(2), cyc_int(0), cyc_int(-1)},
        }};
}

// D4 and Q8 share the same character table shape; the two signature-colliding
// class slots are filled in appearance order (a group automorphism swaps
// them, so either assignment is a genuine character table).
ShippedTable shipped_order8(bool dihedral) {
    std::pair<std::size_t, std::size_t> slot =
        dihedral ? std::make_pair<std::size_t, std::size_t>(2, 2)
                 : std::make_pair<std::size_t, std::size_t>(4, 2);
    ShippedTable t;
    if (dihedral)
        t.signatures = {{1, 1}, {2, 1}, {4, 2}, slot, slot};
    else
        t.signatures = {{1, 1}, {2, 1}, slot, slot, slot};
    t.rows = {
        {cyc_int(1), cyc_int(1), cyc_int(1), cyc_int(1), cyc_int(1)},
        {cyc_int(1), cyc_int(1), cyc_int(1), cyc_int(-1), cyc_int(-1)},
        {cyc_int(1), cyc_int(1), cyc_int(-1), cyc_int(1), cyc_int(-1)},
        {cyc_int(1), cyc_int(1), cyc_int(-1), cyc_int(-1), cyc_int(1)},
        {cyc_int(2), cyc_int(-2), cyc_int(0), cyc_int(0), cyc_int(0)},
    };
    return t;
}

ShippedTable shipped_a4() {
    Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    Cyclotomic w2 = Cyclotomic::root_of_unity(3, 2);
    return ShippedTable{
        {{1, 1}, {2, 3}, {3, 4}, {3, 4}},
        {
            {cyc_int(1), cyc_int(1), cyc_int(1), cyc_int(1)},
            {cyc_int(1), cyc_int(1), w, w2},
            {cyc_int(1), cyc_int(1), w2, w},
            {cyc_int(3), cyc_int(-1), cyc_int(0), cyc_int(0)},
        }};
}

std::vector<ClassFunction> nonabelian_irreducibles(const Subgroup& A) {
    const FiniteGroup& G = A.group();
    ShippedTable shipped;
    if (A.order() == 6) {
        shipped = shipped_s3();
    } else if (A.order() == 8) {
        std::size_t order2 = 0;
        for (FiniteGroup::Elem a : A.elements())
            if (a != 0 && G.mul(a, a) == 0)
                ++order2;
        if (order2 != 5 && order2 != 1)
            throw UnsupportedSubgroup("order-8 subgroup is neither D4 nor Q8");
        shipped = shipped_order8(order2 == 5);
    } else if (A.order() == 12) {
        for (FiniteGroup::Elem a : A.elements())
            if (G.element_order(a) > 3)
                throw UnsupportedSubgroup("nonabelian order-12 subgroup is not A4");
        shipped = shipped_a4();
    } else {
        throw UnsupportedSubgroup("no shipped character table for nonabelian subgroup of order " +
                                  std::to_string(A.order()));
    }

    // match each conjugacy class (appearance order) to the next unused
    // shipped column with the same (element order, size) signature
    auto classes = inner_classes(A);
    if (classes.size() != shipped.signatures.size())
        throw UnsupportedSubgroup("conjugacy class count does not match shipped table");
    std::vector<bool> used(classes.size(), false);
    std::vector<std::size_t> column(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto sig = std::make_pair(G.element_order(classes[c][0]), classes[c].size());
        bool matched = false;
        for (std::size_t s = 0; s < shipped.signatures.size() && !matched; ++s)
            if (!used[s] && shipped.signatures[s] == sig) {
                used[s] = true;
                column[c] = s;
                matched = true;
            }
        if (!matched)
            throw UnsupportedSubgroup("class signature does not match shipped table");
    }

    std::vector<std::size_t> class_of(G.order(), classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (FiniteGroup::Elem e : classes[c])
            class_of[e] = c;

    std::vector<ClassFunction> out;
    for (const auto& row : shipped.rows) {
        std::vector<Cyclotomic> values;
        values.reserve(A.order());
        for (FiniteGroup::Elem a : A.elements())
            values.push_back(row[column[class_of[a]]]);
        out.emplace_back(A, std::move(values));
    }
    return out;
}

} // namespace

CharacterTable character_table(const Subgroup& domain) {
    bool abelian = true;
    const FiniteGroup& G = domain.group();
    for (FiniteGroup::Elem a : domain.elements())
        for (FiniteGroup::Elem b : domain.elements())
            if (G.mul(a, b) != G.mul(b, a))
                abelian = false;
    auto irr = abelian ? abelian_irreducibles(domain) : nonabelian_irreducibles(domain);
    return CharacterTable(domain, std::move(irr));
}

ClassFunction induce(const ClassFunction& chi, const Subgroup& target) {
    const Subgroup& A = chi.domain();
    if (!A.subset_of(target))
        throw NotASubgroup("induce: character domain is not a subgroup of the target");
    const FiniteGroup& G = A.group();
    std::vector<Cyclotomic> values;
    values.reserve(target.order());
    for (FiniteGroup::Elem g : target.elements()) {
        Cyclotomic sum;
        for (FiniteGroup::Elem y : target.elements()) {
            FiniteGroup::Elem conj = G.mul(G.mul(G.inverse(y), g), y);
            if (A.contains(conj))
                sum += chi.value(conj);
        }
        values.push_back(sum * Rat(1, static_cast<unsigned>(A.order())));
    }
    return ClassFunction(target, std::move(values));
}

ClassFunction restrict(const ClassFunction& chi, const Subgroup& target) {
    if (!target.subset_of(chi.domain()))
        throw NotASubgroup("restrict: target is not a subgroup of the domain");
    std::vector<Cyclotomic> values;
    values.reserve(target.order());
    for (FiniteGroup::Elem g : target.elements())
        values.push_back(chi.value(g));
    return ClassFunction(target, std::move(values));
}

ClassFunction conjugate_char(const ClassFunction& chi, FiniteGroup::Elem x) {
    const FiniteGroup& G = chi.domain().group();
    Subgroup dom = conjugate_subgroup(G, x, chi.domain());
    std::vector<Cyclotomic> values;
    values.reserve(dom.order());
    for (FiniteGroup::Elem g : dom.elements())
        values.push_back(chi.value(G.mul(G.mul(G.inverse(x), g), x)));
    return ClassFunction(dom, std::move(values));
}

namespace {

Subgroup full_subgroup(const FiniteGroup& G) {
    std::vector<FiniteGroup::Elem> all(G.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(G, std::move(all));
}

} // namespace

bool check_classical_mackey(const FiniteGroup& G, const Subgroup& M, const Subgroup& N,
                            const ClassFunction& chi) {
    const Subgroup whole = full_subgroup(G);
    ClassFunction lhs = restrict(induce(chi, whole), N);

    // the decomposition is indexed by N\G/M: one term per coset NxM
    ClassFunction rhs(N, std::vector<Cyclotomic>(N.order()));
    for (const auto& coset : double_cosets_group(G, N, M)) {
        FiniteGroup::Elem x = coset.front();
        ClassFunction xchi = conjugate_char(chi, x);
        Subgroup cap = intersect(conjugate_subgroup(G, x, M), N);
        rhs = rhs + induce(restrict(xchi, cap), N);
    }
    return lhs == rhs;
}

NormalInductionResult check_normal_induction(const FiniteGroup& G, const Subgroup& N, const ClassFunction& chi) {
    if (!N.is_normal())
        throw NotNormal("check_normal_induction: subgroup is not normal");
    const Subgroup whole = full_subgroup(G);
    ClassFunction induced = induce(chi, whole);

    ClassFunction sum(N, std::vector<Cyclotomic>(N.order()));
    std::vector<FiniteGroup::Elem> reps;
    for (const auto& coset : right_cosets_group(G, N))
        reps.push_back(coset.front());
    for (FiniteGroup::Elem g : reps)
        sum = sum + conjugate_char(chi, g); // domain stays N by normality
    bool restriction_identity = (restrict(induced, N) == sum);

    bool induced_irreducible = (ClassFunction::inner_product(induced, induced) == 1);
    bool disjoint_from_conjugates = true;
    for (FiniteGroup::Elem x : reps) {
        if (N.contains(x))
            continue;
        if (ClassFunction::inner_product(chi, conjugate_char(chi, x)) != 0)
            disjoint_from_conjugates = false;
    }
    bool chi_irreducible = (ClassFunction::inner_product(chi, chi) == 1);

    bool biconditional =
        (induced_irreducible == (chi_irreducible && disjoint_from_conjugates));
    return NormalInductionResult{restriction_identity, biconditional};
}

bool check_projection_formula(const FiniteGroup& G, const Subgroup& M, const ClassFunction& chi,
                  const ClassFunction& psi) {
    const Subgroup whole = full_subgroup(G);
    ClassFunction lhs = induce(chi, whole) * psi;
    ClassFunction rhs = induce(chi * restrict(psi, M), whole);
    return lhs == rhs;
}

bool check_induced_tensor_group(const FiniteGroup& G, const Subgroup& M, const Subgroup& N,
                          const ClassFunction& chi, const ClassFunction& psi) {
    const Subgroup whole = full_subgroup(G);
    ClassFunction lhs = induce(chi, whole) * induce(psi, whole);

    // indexed by N\G/M, as in the restriction-of-induction decomposition
    ClassFunction rhs(whole, std::vector<Cyclotomic>(whole.order()));
    for (const auto& coset : double_cosets_group(G, N, M)) {
        FiniteGroup::Elem x = coset.front();
        Subgroup cap = intersect(conjugate_subgroup(G, x, M), N);
        ClassFunction term =
            restrict(conjugate_char(chi, x), cap) * restrict(psi, cap);
        rhs = rhs + induce(term, whole);
    }
    return lhs == rhs;
}

std::vector<ClassFunction> ordered_irreducibles(const CharacterTable& table) {
    std::vector<std::size_t> order(table.rank());
    std::iota(order.begin(), order.end(), 0);
    auto is_trivial = [&](std::size_t i) {
        for (const auto& v : table.irreducibles()[i].values())
            if (!(v == Cyclotomic(Rat(1))))
                return false;
        return true;
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto key = [&](std::size_t i) {
            return std::make_pair(is_trivial(i) ? Rat(0) : Rat(1),
                                  table.irreducibles()[i].degree());
        };
        return key(a) < key(b);
    });
    std::vector<ClassFunction> out;
    out.reserve(order.size());
    for (std::size_t i : order)
        out.push_back(table.irreducibles()[i]);
    return out;
}

FusionRing character_fusion_ring(const CharacterTable& table, const std::string& name) {
    std::vector<ClassFunction> ordered = ordered_irreducibles(table);
    std::vector<const ClassFunction*> irr;
    for (const auto& chi : ordered)
        irr.push_back(&chi);

    const std::size_t n = irr.size();
    FusionRing ring;
    ring.name = name;
    ring.unit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rat deg = irr[i]->degree();
        if (!is_integer(deg) || deg <= 0)
            throw NonIntegralFusion("character degree is not a positive integer");
        ring.dims.push_back(numerator(deg));
        ring.basis.push_back("chi" + std::to_string(i));
    }

    ring.dual.resize(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Cyclotomic> conj;
        for (const auto& v : irr[i]->values())
            conj.push_back(v.conjugate());
        ClassFunction conj_chi(table.domain(), std::move(conj));
        for (std::size_t j = 0; j < n; ++j)
            if (*irr[j] == conj_chi) {
                ring.dual[i] = j;
                break;
            }
        if (ring.dual[i] == n)
            throw NonIntegralFusion("conjugate character is not in the table");
    }

    ring.products.assign(n, std::vector<std::vector<std::pair<FusionRing::Index, Int>>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ClassFunction prod = *irr[i] * *irr[j];
            for (std::size_t k = 0; k < n; ++k) {
                Rat mult = ClassFunction::inner_product(prod, *irr[k]);
                if (!is_integer(mult) || mult < 0)
                    throw NonIntegralFusion("fusion multiplicity is not a nonnegative integer");
                if (mult > 0)
                    ring.products[i][j].push_back({k, numerator(mult)});
            }
        }
    return ring;
}

FusionRing group_fusion_ring(const FiniteGroup& G, const std::string& name) {
    const std::size_t n = G.order();
    FusionRing ring;
    ring.name = name;
    ring.unit = 0;
    for (std::size_t g = 0; g < n; ++g) {
        ring.basis.push_back("g" + std::to_string(g));
        ring.dims.push_back(1);
        ring.dual.push_back(G.inverse(g));
    }
    ring.products.assign(n, std::vector<std::vector<std::pair<FusionRing::Index, Int>>>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            ring.products[g][h].push_back({G.mul(g, h), 1});
    return ring;
}

namespace builtin {

namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& a, const Perm& b) { // (a∘b)(x) = a(b(x))
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[b[i]];
    return out;
}

FiniteGroup from_permutations(std::string name, const std::vector<Perm>& elems) {
    const std::size_t n = elems.size();
    std::vector<std::vector<FiniteGroup::Elem>> table(n, std::vector<FiniteGroup::Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Perm p = compose(elems[i], elems[j]);
            auto it = std::find(elems.begin(), elems.end(), p);
            if (it == elems.end())
                throw Error("from_permutations: set not closed");
            table[i][j] = static_cast<FiniteGroup::Elem>(it - elems.begin());
        }
    return FiniteGroup(std::move(name), std::move(table));
}

} // namespace

FiniteGroup symmetric3() {
    return from_permutations("S3", {
                                       {0, 1, 2}, // e
                                       {1, 0, 2}, // (01)
                                       {2, 1, 0}, // (02)
                                       {0, 2, 1}, // (12)
                                       {1, 2, 0}, // (012)
                                       {2, 0, 1}, // (021)
                                   });
}

FiniteGroup dihedral4() {
    // symmetries of the square on vertices 0..3; r = rotation, s = reflection
    Perm e{0, 1, 2, 3}, r{1, 2, 3, 0}, s{1, 0, 3, 2};
    Perm r2 = compose(r, r), r3 = compose(r2, r);
    return from_permutations(
        "D4", {e, r, r2, r3, s, compose(r, s), compose(r2, s), compose(r3, s)});
}

FiniteGroup quaternion8() {
    // 1, -1, i, -i, j, -j, k, -k with the quaternion relations
    auto mul = [](std::size_t a, std::size_t b) -> std::size_t {
        // encode as (unit u in {1,i,j,k}, sign) with index = 2*u + (sign<0)
        static const int unit_table[4][4] = {// result unit
                                             {0, 1, 2, 3},
                                             {1, 0, 3, 2},
                                             {2, 3, 0, 1},
                                             {3, 2, 1, 0}};
        static const int sign_table[4][4] = {// +1 or -1
                                             {1, 1, 1, 1},
                                             {1, -1, 1, -1},
                                             {1, -1, -1, 1},
                                             {1, 1, -1, -1}};
        std::size_t ua = a / 2, ub = b / 2;
        int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_table[ua][ub];
        return 2 * static_cast<std::size_t>(unit_table[ua][ub]) + (sign < 0 ? 1 : 0);
    };
    std::vector<std::vector<FiniteGroup::Elem>> table(8, std::vector<FiniteGroup::Elem>(8));
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            table[a][b] = mul(a, b);
    return FiniteGroup("Q8", std::move(table));
}

FiniteGroup alternating4() {
    std::vector<Perm> elems;
    Perm p{0, 1, 2, 3};
    std::sort(p.begin(), p.end());
    do {
        // parity
        std::size_t inv = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (p[i] > p[j])
                    ++inv;
        if (inv % 2 == 0)
            elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // identity is the first permutation in lexicographic order
    return from_permutations("A4", elems);
}

FiniteGroup cyclic(std::size_t n) {
    std::vector<std::vector<FiniteGroup::Elem>> table(n, std::vector<FiniteGroup::Elem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    return FiniteGroup("Z" + std::to_string(n), std::move(table));
}

namespace {

FusionRing relabel(FusionRing ring, const std::vector<std::string>& labels) {
    if (labels.size() == ring.basis.size())
        ring.basis = labels;
    return ring;
}

Subgroup whole(const FiniteGroup& G) {
    std::vector<FiniteGroup::Elem> all(G.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(G, std::move(all));
}

} // namespace

FusionRing fixture_ring(const std::string& name) {
    if (name == "rep_s3") {
        static const FiniteGroup g = symmetric3();
        return relabel(character_fusion_ring(character_table(whole(g)), name), {"1", "s", "v"});
    }
    if (name == "rep_d4") {
        static const FiniteGroup g = dihedral4();
        return relabel(character_fusion_ring(character_table(whole(g)), name),
                       {"1", "a", "b", "c", "v"});
    }
    if (name == "rep_q8") {
        static const FiniteGroup g = quaternion8();
        return relabel(character_fusion_ring(character_table(whole(g)), name),
                       {"1", "a", "b", "c", "v"});
    }
    if (name == "rep_a4") {
        static const FiniteGroup g = alternating4();
        return relabel(character_fusion_ring(character_table(whole(g)), name),
                       {"1", "w", "wbar", "T"});
    }
    if (name == "group_ring_s3") {
        static const FiniteGroup g = symmetric3();
        return group_fusion_ring(g, name);
    }
    if (name == "group_ring_d4") {
        static const FiniteGroup g = dihedral4();
        return group_fusion_ring(g, name);
    }
    throw UnknownFixture("unknown fixture ring: " + name);
}

std::vector<std::string> fixture_ring_names() {
    return {"rep_s3", "rep_d4", "rep_q8", "rep_a4", "group_ring_s3", "group_ring_d4"};
}

FiniteGroup fixture_group(const std::string& name) {
    if (name == "group_s3")
        return symmetric3();
    if (name == "group_d4")
        return dihedral4();
    if (name == "group_q8")
        return quaternion8();
    if (name == "group_a4")
        return alternating4();
    if (name.rfind("group_z", 0) == 0) {
        std::size_t n = std::stoul(name.substr(7));
        if (n >= 1 && n <= 12)
            return cyclic(n);
    }
    throw UnknownFixture("unknown fixture group: " + name);
}

std::vector<std::string> fixture_group_names() {
    std::vector<std::string> out{"group_s3", "group_d4", "group_q8", "group_a4"};
    for (std::size_t n = 2; n <= 12; ++n)
        out.push_back("group_z" + std::to_string(n));
    return out;
}

} // namespace builtin

} // namespace hopf
