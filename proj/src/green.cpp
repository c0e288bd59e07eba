#include "hopf/green.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hopf {

std::vector<Rat> BasedRing::multiply(const std::vector<Rat>& a,
                                     const std::vector<Rat>& b) const {
    std::vector<Rat> out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (b[j] == 0)
                continue;
            for (std::size_t k = 0; k < rank(); ++k)
                out[k] += a[i] * b[j] * Rat(constants[i][j][k]);
        }
    }
    return out;
}

std::vector<Rat> MultMatrix::apply(const std::vector<Rat>& v) const {
    std::vector<Rat> out(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (entries[r * cols + c] != 0)
                out[r] += Rat(entries[r * cols + c]) * v[c];
    return out;
}

std::size_t GreenFunctorDatum::lattice_index(const Subgroup& s) const {
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (lattice[i].elements() == s.elements())
            return i;
    throw MalformedDatum("subgroup not present in the lattice");
}

bool AxiomReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

namespace {

std::vector<Rat> basis_vector(std::size_t rank, std::size_t i) {
    std::vector<Rat> v(rank);
    v[i] = 1;
    return v;
}

MultMatrix compose(const MultMatrix& outer, const MultMatrix& inner) {
    if (outer.cols != inner.rows)
        throw MalformedDatum("matrix composition shape mismatch");
    MultMatrix out;
    out.rows = outer.rows;
    out.cols = inner.cols;
    out.entries.assign(out.rows * out.cols, 0);
    for (std::size_t r = 0; r < out.rows; ++r)
        for (std::size_t k = 0; k < outer.cols; ++k)
            if (outer.at(r, k) != 0)
                for (std::size_t c = 0; c < out.cols; ++c)
                    out.at(r, c) += outer.at(r, k) * inner.at(k, c);
    return out;
}

MultMatrix identity_matrix(std::size_t n) {
    MultMatrix m;
    m.rows = m.cols = n;
    m.entries.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

// Double cosets JxL inside the subgroup K, each sorted.
std::vector<std::vector<FiniteGroup::Elem>>
double_cosets_within(const FiniteGroup& G, const Subgroup& K, const Subgroup& J,
                     const Subgroup& L) {
    std::set<FiniteGroup::Elem> remaining(K.elements().begin(), K.elements().end());
    std::vector<std::vector<FiniteGroup::Elem>> out;
    while (!remaining.empty()) {
        FiniteGroup::Elem x = *remaining.begin();
        std::set<FiniteGroup::Elem> coset;
        for (FiniteGroup::Elem j : J.elements())
            for (FiniteGroup::Elem l : L.elements())
                coset.insert(G.mul(G.mul(j, x), l));
        for (FiniteGroup::Elem e : coset)
            remaining.erase(e);
        out.emplace_back(coset.begin(), coset.end());
    }
    return out;
}

struct AxiomContext {
    const GreenFunctorDatum& d;
    AxiomReport& report;
    bool stop;

    bool should_stop() const {
        return stop && !report.checks.empty() && !report.checks.back().passed;
    }

    void record(const std::string& name, bool ok, const std::string& witness) {
        for (auto& c : report.checks)
            if (c.name == name) {
                if (c.passed && !ok) {
                    c.passed = false;
                    c.witness = witness;
                }
                return;
            }
        report.checks.push_back(AxiomCheck{name, ok, ok ? "" : witness});
    }
};

const MultMatrix& lookup(const std::map<std::pair<std::size_t, std::size_t>, MultMatrix>& m,
                         std::size_t a, std::size_t b, const char* what) {
    auto it = m.find({a, b});
    if (it == m.end())
        throw MalformedDatum(std::string("missing ") + what + " matrix");
    return it->second;
}

std::string subgroup_str(const Subgroup& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.elements().size(); ++i)
        os << (i ? "," : "") << s.elements()[i];
    os << "}";
    return os.str();
}

void check_well_formed(const GreenFunctorDatum& d) {
    if (d.lattice.size() != d.rings.size())
        throw MalformedDatum("ring count does not match lattice size");
    for (std::size_t i = 0; i < d.rings.size(); ++i) {
        const BasedRing& ring = d.rings[i];
        const std::size_t n = ring.rank();
        if (n == 0 || ring.unit >= n || ring.constants.size() != n)
            throw MalformedDatum("ring " + std::to_string(i) + " malformed");
        for (const auto& row : ring.constants) {
            if (row.size() != n)
                throw MalformedDatum("ring constants not square");
            for (const auto& cell : row) {
                if (cell.size() != n)
                    throw MalformedDatum("ring constants depth mismatch");
                for (const Int& v : cell)
                    if (v < 0)
                        throw MalformedDatum("negative structure constant");
            }
        }
        // unit and associativity of each value ring
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (ring.constants[ring.unit][a][b] != (a == b ? 1 : 0) ||
                    ring.constants[a][ring.unit][b] != (a == b ? 1 : 0))
                    throw MalformedDatum("ring unit law fails");
                for (std::size_t g = 0; g < n; ++g)
                    for (std::size_t f = 0; f < n; ++f) {
                        Int lhs = 0, rhs = 0;
                        for (std::size_t e = 0; e < n; ++e) {
                            lhs += ring.constants[a][b][e] * ring.constants[e][g][f];
                            rhs += ring.constants[b][g][e] * ring.constants[a][e][f];
                        }
                        if (lhs != rhs)
                            throw MalformedDatum("ring associativity fails");
                    }
            }
    }
    for (std::size_t sub = 0; sub < d.lattice.size(); ++sub) {
        for (std::size_t super = 0; super < d.lattice.size(); ++super) {
            if (!d.lattice[sub].subset_of(d.lattice[super]))
                continue;
            const MultMatrix& ind = lookup(d.induction, sub, super, "induction");
            const MultMatrix& res = lookup(d.restriction, sub, super, "restriction");
            if (ind.rows != d.rings[super].rank() || ind.cols != d.rings[sub].rank())
                throw MalformedDatum("induction matrix shape mismatch");
            if (res.rows != d.rings[sub].rank() || res.cols != d.rings[super].rank())
                throw MalformedDatum("restriction matrix shape mismatch");
        }
        for (std::size_t g = 0; g < d.group->order(); ++g) {
            auto it = d.conjugation.find({sub, g});
            if (it == d.conjugation.end())
                throw MalformedDatum("missing conjugation matrix");
            std::size_t target =
                d.lattice_index(conjugate_subgroup(*d.group, g, d.lattice[sub]));
            if (it->second.rows != d.rings[target].rank() ||
                it->second.cols != d.rings[sub].rank())
                throw MalformedDatum("conjugation matrix shape mismatch");
        }
    }
}

} // namespace

AxiomReport verify_green(const GreenFunctorDatum& datum, std::uint64_t seed,
                         bool stop_at_first_failure) {
    check_well_formed(datum);

    AxiomReport report;
    report.seed = seed;
    AxiomContext ctx{datum, report, stop_at_first_failure};
    const GreenFunctorDatum& d = datum;
    const std::size_t nsub = d.lattice.size();

    // (1) identity morphisms
    for (std::size_t h = 0; h < nsub && !ctx.should_stop(); ++h) {
        const MultMatrix id = identity_matrix(d.rings[h].rank());
        bool ok = lookup(d.induction, h, h, "induction") == id &&
                  lookup(d.restriction, h, h, "restriction") == id;
        for (FiniteGroup::Elem g : d.lattice[h].elements())
            ok = ok && d.conjugation.at({h, g}) == id;
        ctx.record("axiom1_identity", ok, "at subgroup " + subgroup_str(d.lattice[h]));
    }

    // (2),(3) transitivity of restriction and induction
    for (std::size_t j = 0; j < nsub && !ctx.should_stop(); ++j)
        for (std::size_t k = 0; k < nsub; ++k)
            for (std::size_t h = 0; h < nsub; ++h) {
                if (!d.lattice[j].subset_of(d.lattice[k]) ||
                    !d.lattice[k].subset_of(d.lattice[h]))
                    continue;
                std::string witness = "chain " + subgroup_str(d.lattice[j]) + " <= " +
                                      subgroup_str(d.lattice[k]) + " <= " +
                                      subgroup_str(d.lattice[h]);
                ctx.record("axiom2_restriction_transitivity",
                           compose(d.restriction.at({j, k}), d.restriction.at({k, h})) ==
                               d.restriction.at({j, h}),
                           witness);
                ctx.record("axiom3_induction_transitivity",
                           compose(d.induction.at({k, h}), d.induction.at({j, k})) ==
                               d.induction.at({j, h}),
                           witness);
            }

    // (4) conjugation composes along the group law
    for (std::size_t k = 0; k < nsub && !ctx.should_stop(); ++k)
        for (std::size_t g = 0; g < d.group->order(); ++g)
            for (std::size_t h = 0; h < d.group->order(); ++h) {
                std::size_t hk = d.lattice_index(conjugate_subgroup(*d.group, h, d.lattice[k]));
                bool ok = compose(d.conjugation.at({hk, g}), d.conjugation.at({k, h})) ==
                          d.conjugation.at({k, d.group->mul(g, h)});
                ctx.record("axiom4_conjugation_composition", ok,
                           "at K=" + subgroup_str(d.lattice[k]) + ", g=" + std::to_string(g) +
                               ", h=" + std::to_string(h));
            }

    // (5) Mackey axiom, canonical and randomized representatives
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < nsub && !ctx.should_stop(); ++k)
        for (std::size_t j = 0; j < nsub; ++j)
            for (std::size_t l = 0; l < nsub; ++l) {
                if (!d.lattice[j].subset_of(d.lattice[k]) ||
                    !d.lattice[l].subset_of(d.lattice[k]))
                    continue;
                MultMatrix lhs =
                    compose(d.restriction.at({l, k}), d.induction.at({j, k}));

                auto cosets = double_cosets_within(*d.group, d.lattice[k], d.lattice[l],
                                                   d.lattice[j]);
                auto rhs_for = [&](const std::vector<FiniteGroup::Elem>& reps) {
                    MultMatrix rhs;
                    rhs.rows = d.rings[l].rank();
                    rhs.cols = d.rings[j].rank();
                    rhs.entries.assign(rhs.rows * rhs.cols, 0);
                    for (FiniteGroup::Elem x : reps) {
                        std::size_t xj =
                            d.lattice_index(conjugate_subgroup(*d.group, x, d.lattice[j]));
                        std::size_t cap = d.lattice_index(
                            intersect(d.lattice[xj], d.lattice[l]));
                        MultMatrix term = compose(
                            d.induction.at({cap, l}),
                            compose(d.restriction.at({cap, xj}), d.conjugation.at({j, x})));
                        for (std::size_t e = 0; e < term.entries.size(); ++e)
                            rhs.entries[e] += term.entries[e];
                    }
                    return rhs;
                };

                std::vector<FiniteGroup::Elem> canonical, randomized;
                for (const auto& coset : cosets) {
                    canonical.push_back(coset.front());
                    randomized.push_back(
                        coset[std::uniform_int_distribution<std::size_t>(
                            0, coset.size() - 1)(rng)]);
                }
                std::string witness = "(J=" + subgroup_str(d.lattice[j]) +
                                      ", K=" + subgroup_str(d.lattice[k]) +
                                      ", L=" + subgroup_str(d.lattice[l]) + ")";
                ctx.record("axiom5_mackey", rhs_for(canonical) == lhs, witness);
                ctx.record("axiom5_mackey_randomized_reps", rhs_for(randomized) == lhs,
                           witness);
            }

    // (6) restriction and conjugation are unital ring maps
    for (std::size_t sub = 0; sub < nsub && !ctx.should_stop(); ++sub)
        for (std::size_t super = 0; super < nsub; ++super) {
            if (!d.lattice[sub].subset_of(d.lattice[super]))
                continue;
            const MultMatrix& res = d.restriction.at({sub, super});
            const BasedRing& rl = d.rings[super];
            const BasedRing& rk = d.rings[sub];
            bool ok = res.apply(basis_vector(rl.rank(), rl.unit)) ==
                      basis_vector(rk.rank(), rk.unit);
            for (std::size_t a = 0; a < rl.rank() && ok; ++a)
                for (std::size_t b = 0; b < rl.rank() && ok; ++b) {
                    auto prod = rl.multiply(basis_vector(rl.rank(), a),
                                            basis_vector(rl.rank(), b));
                    ok = res.apply(prod) ==
                         rk.multiply(res.apply(basis_vector(rl.rank(), a)),
                                     res.apply(basis_vector(rl.rank(), b)));
                }
            ctx.record("axiom6_restriction_ring_map", ok,
                       subgroup_str(d.lattice[sub]) + " <= " + subgroup_str(d.lattice[super]));
        }
    for (std::size_t sub = 0; sub < nsub && !ctx.should_stop(); ++sub)
        for (std::size_t g = 0; g < d.group->order(); ++g) {
            const MultMatrix& c = d.conjugation.at({sub, g});
            std::size_t target =
                d.lattice_index(conjugate_subgroup(*d.group, g, d.lattice[sub]));
            const BasedRing& rk = d.rings[sub];
            const BasedRing& rt = d.rings[target];
            bool ok = c.apply(basis_vector(rk.rank(), rk.unit)) ==
                      basis_vector(rt.rank(), rt.unit);
            for (std::size_t a = 0; a < rk.rank() && ok; ++a)
                for (std::size_t b = 0; b < rk.rank() && ok; ++b) {
                    auto prod = rk.multiply(basis_vector(rk.rank(), a),
                                            basis_vector(rk.rank(), b));
                    ok = c.apply(prod) == rt.multiply(c.apply(basis_vector(rk.rank(), a)),
                                                      c.apply(basis_vector(rk.rank(), b)));
                }
            ctx.record("axiom6_conjugation_ring_map", ok,
                       "at K=" + subgroup_str(d.lattice[sub]) + ", g=" + std::to_string(g));
        }

    // (7),(8) Frobenius projection identities
    for (std::size_t sub = 0; sub < nsub && !ctx.should_stop(); ++sub)
        for (std::size_t super = 0; super < nsub; ++super) {
            if (!d.lattice[sub].subset_of(d.lattice[super]))
                continue;
            const MultMatrix& ind = d.induction.at({sub, super});
            const MultMatrix& res = d.restriction.at({sub, super});
            const BasedRing& rk = d.rings[sub];
            const BasedRing& rl = d.rings[super];
            bool ok7 = true, ok8 = true;
            for (std::size_t a = 0; a < rk.rank(); ++a)
                for (std::size_t b = 0; b < rl.rank(); ++b) {
                    auto av = basis_vector(rk.rank(), a);
                    auto bv = basis_vector(rl.rank(), b);
                    auto rb = res.apply(bv);
                    if (ind.apply(rk.multiply(av, rb)) != rl.multiply(ind.apply(av), bv))
                        ok7 = false;
                    if (ind.apply(rk.multiply(rb, av)) != rl.multiply(bv, ind.apply(av)))
                        ok8 = false;
                }
            std::string witness =
                subgroup_str(d.lattice[sub]) + " <= " + subgroup_str(d.lattice[super]);
            ctx.record("axiom7_frobenius_right", ok7, witness);
            ctx.record("axiom8_frobenius_left", ok8, witness);
        }

    std::sort(report.checks.begin(), report.checks.end(),
              [](const AxiomCheck& a, const AxiomCheck& b) { return a.name < b.name; });
    return report;
}

GreenFunctorDatum classical_instance(const FiniteGroup& G) {
    GreenFunctorDatum d;
    d.group = std::make_shared<FiniteGroup>(G);
    d.lattice = subgroups(*d.group);

    std::vector<std::vector<ClassFunction>> irr;
    for (const Subgroup& s : d.lattice) {
        // rebind the subgroup to the datum's own group copy
        Subgroup bound(*d.group, s.elements());
        std::vector<ClassFunction> chars;
        try {
            chars = ordered_irreducibles(character_table(bound));
        } catch (const UnsupportedSubgroup& e) {
            throw UnsupportedSubgroup(std::string("classical_instance: ") + e.what());
        }
        irr.push_back(std::move(chars));
    }
    // rebuild lattice against the datum's group object
    std::vector<Subgroup> bound_lattice;
    for (const Subgroup& s : d.lattice)
        bound_lattice.emplace_back(*d.group, s.elements());
    d.lattice = std::move(bound_lattice);

    for (std::size_t i = 0; i < d.lattice.size(); ++i) {
        const auto& chars = irr[i];
        BasedRing ring;
        ring.unit = 0;
        for (std::size_t a = 0; a < chars.size(); ++a)
            ring.basis.push_back("chi" + std::to_string(a));
        ring.constants.assign(
            chars.size(),
            std::vector<std::vector<Int>>(chars.size(), std::vector<Int>(chars.size())));
        for (std::size_t a = 0; a < chars.size(); ++a)
            for (std::size_t b = 0; b < chars.size(); ++b) {
                ClassFunction prod = chars[a] * chars[b];
                for (std::size_t c = 0; c < chars.size(); ++c) {
                    Rat mult = ClassFunction::inner_product(prod, chars[c]);
                    if (!is_integer(mult) || mult < 0)
                        throw NonIntegralFusion("character ring multiplicity not integral");
                    ring.constants[a][b][c] = numerator(mult);
                }
            }
        d.rings.push_back(std::move(ring));
    }

    for (std::size_t sub = 0; sub < d.lattice.size(); ++sub)
        for (std::size_t super = 0; super < d.lattice.size(); ++super) {
            if (!d.lattice[sub].subset_of(d.lattice[super]))
                continue;
            MultMatrix ind, res;
            ind.rows = irr[super].size();
            ind.cols = irr[sub].size();
            ind.entries.assign(ind.rows * ind.cols, 0);
            res.rows = irr[sub].size();
            res.cols = irr[super].size();
            res.entries.assign(res.rows * res.cols, 0);
            for (std::size_t j = 0; j < irr[sub].size(); ++j) {
                ClassFunction up = induce(irr[sub][j], d.lattice[super]);
                for (std::size_t i = 0; i < irr[super].size(); ++i) {
                    Rat m = ClassFunction::inner_product(up, irr[super][i]);
                    if (!is_integer(m) || m < 0)
                        throw NonIntegralFusion("induction multiplicity not integral");
                    ind.at(i, j) = numerator(m);
                }
            }
            for (std::size_t j = 0; j < irr[super].size(); ++j) {
                ClassFunction down = restrict(irr[super][j], d.lattice[sub]);
                for (std::size_t i = 0; i < irr[sub].size(); ++i) {
                    Rat m = ClassFunction::inner_product(down, irr[sub][i]);
                    if (!is_integer(m) || m < 0)
                        throw NonIntegralFusion("restriction multiplicity not integral");
                    res.at(i, j) = numerator(m);
                }
            }
            d.induction[{sub, super}] = std::move(ind);
            d.restriction[{sub, super}] = std::move(res);
        }

    for (std::size_t sub = 0; sub < d.lattice.size(); ++sub)
        for (std::size_t g = 0; g < d.group->order(); ++g) {
            std::size_t target =
                d.lattice_index(conjugate_subgroup(*d.group, g, d.lattice[sub]));
            MultMatrix c;
            c.rows = irr[target].size();
            c.cols = irr[sub].size();
            c.entries.assign(c.rows * c.cols, 0);
            for (std::size_t j = 0; j < irr[sub].size(); ++j) {
                ClassFunction conj = conjugate_char(irr[sub][j], g);
                bool found = false;
                for (std::size_t i = 0; i < irr[target].size(); ++i)
                    if (irr[target][i] == conj) {
                        c.at(i, j) = 1;
                        found = true;
                        break;
                    }
                if (!found)
                    throw Error("classical_instance: conjugate character missing from target");
            }
            d.conjugation[{sub, g}] = std::move(c);
        }
    return d;
}

GreenFunctorDatum grading_instance(const FusionRing& ring, const RepData& repdata) {
    Grading grading = universal_grading(ring);
    GreenFunctorDatum d;
    d.group = std::make_shared<FiniteGroup>(grading.group);
    for (const Subgroup& s : subgroups(*d.group))
        d.lattice.emplace_back(*d.group, s.elements());

    for (const Subgroup& s : d.lattice) {
        auto it = repdata.rings.find(s.elements());
        if (it == repdata.rings.end())
            throw IncompleteRepData("missing ring for subgroup of the grading group");
        d.rings.push_back(it->second);
    }
    for (std::size_t sub = 0; sub < d.lattice.size(); ++sub) {
        for (std::size_t super = 0; super < d.lattice.size(); ++super) {
            if (!d.lattice[sub].subset_of(d.lattice[super]))
                continue;
            auto key = std::make_pair(d.lattice[sub].elements(), d.lattice[super].elements());
            auto iti = repdata.induction.find(key);
            auto itr = repdata.restriction.find(key);
            if (iti == repdata.induction.end() || itr == repdata.restriction.end())
                throw IncompleteRepData("missing induction/restriction for a lattice pair");
            d.induction[{sub, super}] = iti->second;
            d.restriction[{sub, super}] = itr->second;
        }
        for (std::size_t g = 0; g < d.group->order(); ++g) {
            auto itc = repdata.conjugation.find({d.lattice[sub].elements(), g});
            if (itc == repdata.conjugation.end())
                throw IncompleteRepData("missing conjugation matrix");
            d.conjugation[{sub, g}] = itc->second;
        }
    }
    // reject extraneous subgroups (lattice mismatch)
    if (repdata.rings.size() != d.lattice.size())
        throw IncompleteRepData("rep data lattice does not match the grading group");
    return d;
}

} // namespace hopf
