// Command-line front end: loads ring/group documents (files or named
// fixtures), runs the requested verification, and emits a human report or a
// machine-readable certificate. Exit codes: 0 all checks passed, 1 at least
// one verification failed, 2 malformed input or usage.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopf/green.hpp"
#include "hopf/io.hpp"

using namespace hopf;
using io::Certificate;
using io::CertificateCheck;
using nlohmann::json;

namespace {

struct Options {
    bool as_json = false;
    double tol = 1e-9;
    std::size_t max_iter = 10000;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// A ring input is either a path to a document or a fixture name.
FusionRing resolve_ring(const std::string& arg, std::string& digest_out) {
    if (std::filesystem::exists(arg)) {
        digest_out = io::digest(slurp(arg));
        return io::load_ring_file(arg);
    }
    FusionRing ring = io::load_fixture_ring(arg);
    digest_out = io::digest(io::canonical_dump(io::ring_to_json(ring)));
    return ring;
}

FiniteGroup resolve_group(const std::string& arg, std::string& digest_out) {
    if (std::filesystem::exists(arg)) {
        digest_out = io::digest(slurp(arg));
        return io::load_group_file(arg);
    }
    FiniteGroup group = io::load_fixture_group(arg);
    digest_out = io::digest(io::canonical_dump(io::group_to_json(group)));
    return group;
}

std::vector<FusionRing::Index> parse_members(const FusionRing& ring, const std::string& arg) {
    std::vector<FusionRing::Index> out;
    std::stringstream ss(arg);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        auto it = std::find(ring.basis.begin(), ring.basis.end(), token);
        if (it != ring.basis.end()) {
            out.push_back(static_cast<FusionRing::Index>(it - ring.basis.begin()));
            continue;
        }
        try {
            std::size_t pos = 0;
            unsigned long idx = std::stoul(token, &pos);
            if (pos == token.size() && idx < ring.rank()) {
                out.push_back(idx);
                continue;
            }
        } catch (const std::exception&) {
        }
        throw ParseError("unknown basis element: " + token);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty())
        throw ParseError("empty basis-element list");
    return out;
}

std::string label_list(const FusionRing& ring, const std::vector<FusionRing::Index>& idx) {
    std::string out;
    for (auto i : idx) {
        if (!out.empty())
            out += ",";
        out += ring.basis[i];
    }
    return out;
}

std::string rat_str(const Rat& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

void add(Certificate& cert, std::string name, bool passed, std::string witness = "") {
    cert.checks.push_back({std::move(name), passed, std::move(witness)});
}

// ---------- subcommand bodies ----------

void run_validate(Certificate& cert, const FusionRing& ring) {
    ValidationReport report = validate_ring(ring);
    for (const auto& c : report.checks)
        add(cert, c.name, c.passed, c.witness);
    cert.summary = report.all_passed()
                       ? ring.name + ": all ring axioms hold"
                       : ring.name + ": axiom failure, first witness " +
                             report.first_failure()->name + " " + report.first_failure()->witness;
}

void run_subring(Certificate& cert, const FusionRing& ring, const std::string& generators,
                 bool enumerate_all) {
    if (enumerate_all) {
        auto all = enumerate_subrings(ring);
        std::string listing;
        for (const auto& s : all)
            listing += "{" + label_list(ring, s.members()) + "} ";
        add(cert, "enumeration", true, listing);
        cert.summary = std::to_string(all.size()) + " subrings";
        return;
    }
    FusionSubring s = generate_subring(ring, parse_members(ring, generators));
    add(cert, "closure", true, "{" + label_list(ring, s.members()) + "}");
    cert.summary = "generated subring {" + label_list(ring, s.members()) +
                   "}, dim " + s.dim().str();
}

void run_integral(Certificate& cert, const FusionRing& ring, const std::string& generators) {
    FusionSubring s = generate_subring(ring, parse_members(ring, generators));
    IntegralElement lambda = integral(s); // throws on property failure
    std::string coeffs;
    for (std::size_t i = 0; i < ring.rank(); ++i)
        if (lambda.normalized[i] != 0)
            coeffs += ring.basis[i] + ":" + rat_str(lambda.normalized[i]) + " ";
    add(cert, "idempotent", true);
    add(cert, "absorption", true);
    cert.summary = "integral of {" + label_list(ring, s.members()) + "}: " + coeffs;
}

void run_cosets(Certificate& cert, const FusionRing& ring, const std::string& right_spec,
                const std::string& left_spec) {
    FusionSubring K = generate_subring(ring, parse_members(ring, right_spec));
    CosetPartition part =
        left_spec.empty()
            ? right_cosets(ring, K)
            : double_cosets(ring, generate_subring(ring, parse_members(ring, left_spec)), K);

    std::size_t covered = 0;
    Int dim_sum = 0;
    for (const auto& cls : part.classes) {
        covered += cls.members.size();
        dim_sum += cls.dim;
    }
    add(cert, "partition_total", covered == ring.rank());
    add(cert, "dimension_sum", dim_sum == ring.total_dimension(),
        dim_sum == ring.total_dimension() ? "" : dim_sum.str());
    bool unit_class = part.class_of(ring.unit).members == K.members();
    add(cert, "unit_class", left_spec.empty() ? unit_class : true);

    bool ranks_ok = true;
    std::string rank_witness;
    for (const auto& cls : part.classes) {
        try {
            coset_rank(part, cls);
        } catch (const FreenessViolation&) {
            ranks_ok = false;
            rank_witness = "class of " + ring.basis[cls.representative];
            break;
        }
    }
    add(cert, "rank_integrality", ranks_ok, rank_witness);

    std::string listing;
    for (const auto& cls : part.classes)
        listing += "{" + label_list(ring, cls.members) + "}(dim " + cls.dim.str() + ") ";
    cert.summary = (left_spec.empty() ? "right cosets: " : "double cosets: ") + listing;
}

void run_conjugate(Certificate& cert, const FusionRing& ring, const std::string& at,
                   const std::string& subring_spec) {
    auto at_idx = parse_members(ring, at);
    if (at_idx.size() != 1)
        throw ParseError("--at expects a single basis element");
    FusionSubring K = generate_subring(ring, parse_members(ring, subring_spec));
    ConjugateSubring conj = conjugate_subring(ring, at_idx[0], K); // closure verified
    add(cert, "closure", true);
    add(cert, "support_containment", check_conjugate_support(ring, at_idx[0], K));
    cert.summary = "conjugate at " + ring.basis[at_idx[0]] + ": {" +
                   label_list(ring, conj.result.members()) + "}";
}

void run_mackey(Certificate& cert, const FusionRing& ring, const std::string& left_spec,
                const std::string& right_spec) {
    FusionSubring L = generate_subring(ring, parse_members(ring, left_spec));
    FusionSubring K = generate_subring(ring, parse_members(ring, right_spec));
    MackeyCertificate mc = is_mackey_pair(ring, L, K);
    add(cert, "dimension_rows", mc.pair,
        mc.pair ? "" : "first failure at " + ring.basis[*mc.first_failure]);
    add(cert, "dimension_inequality", dimension_inequality_violations(ring, L, K).empty());
    cert.summary = std::string("verdict ") + (mc.pair ? "pair" : "not a pair");
}

std::string group_shape(const FiniteGroup& U) {
    if (U.order() == 1)
        return "trivial";
    if (U.is_abelian()) {
        if (U.exponent() == U.order())
            return "Z/" + std::to_string(U.order());
        return "abelian of order " + std::to_string(U.order());
    }
    return "nonabelian of order " + std::to_string(U.order());
}

void run_grading(Certificate& cert, const FusionRing& ring) {
    Grading grading = universal_grading(ring);
    add(cert, "grading_group", true, group_shape(grading.group));
    add(cert, "component_dims", check_component_dims(grading));
    GradedPairReport report = check_graded_pairs(grading);
    add(cert, "subgroup_pairs", report.all_pairs(),
        std::to_string(report.entries.size()) + " pairs");
    bool bijections = true;
    for (const auto& entry : report.entries)
        if (!check_graded_coset_law(grading, entry.M, entry.N))
            bijections = false;
    add(cert, "double_coset_bijections", bijections);
    cert.summary = "grading group " + group_shape(grading.group) + ", " +
                   std::to_string(grading.components.size()) + " components";
}

void run_hopf_check(Certificate& cert, const FusionRing& ring, const Options& opt) {
    ValidationReport report = validate_ring(ring);
    add(cert, "ring_axioms", report.all_passed(),
        report.all_passed() ? "" : report.first_failure()->witness);
    if (!report.all_passed()) {
        cert.summary = "ring axioms fail; remaining checks skipped";
        return;
    }

    const auto subrings_list = enumerate_subrings(ring);

    bool partitions = true, ranks = true, crosscheck = true, closure = true,
         support = true, maximality = true, invertible_pairs = true, orbit = true,
         inequality = true, normal_pairs = true;

    for (const auto& K : subrings_list) {
        CosetPartition part = right_cosets(ring, K);
        std::size_t covered = 0;
        Int dim_sum = 0;
        for (const auto& cls : part.classes) {
            covered += cls.members.size();
            dim_sum += cls.dim;
            try {
                coset_rank(part, cls);
            } catch (const FreenessViolation&) {
                ranks = false;
            }
        }
        if (covered != ring.rank() || dim_sum != ring.total_dimension() ||
            part.class_of(ring.unit).members != K.members())
            partitions = false;
        if (!check_orbit_law(ring, K))
            orbit = false;
        for (std::size_t c = 0; c < ring.rank(); ++c) {
            conjugate_subring(ring, c, K); // throws ClosureViolation on failure
            if (!check_conjugate_support(ring, c, K))
                support = false;
            if (ring.rank() <= 12 && !check_conjugate_maximality(ring, c, K))
                maximality = false;
        }
        if (is_character_normal(ring, K) && !check_normal_self_pair(ring, K))
            normal_pairs = false;
    }
    for (const auto& L : subrings_list)
        for (const auto& K : subrings_list) {
            if (!crosscheck_support_partition(ring, L, K).consistent)
                crosscheck = false;
            if (!dimension_inequality_violations(ring, L, K).empty())
                inequality = false;
        }

    const InvertibleGroup G = invertible_group(ring);
    for (const auto& positions : G.subgroups) {
        std::vector<FusionRing::Index> members;
        for (auto p : positions)
            members.push_back(G.elements[p]);
        FusionSubring L(ring, members);
        for (const auto& K : subrings_list)
            if (!is_mackey_pair(ring, L, K).pair)
                invertible_pairs = false;
    }

    bool fp_ok = true;
    for (std::size_t d = 0; d < ring.rank(); ++d) {
        double fp = fp_eigenvalue(ring, d, opt.tol, opt.max_iter);
        double eps = ring.dims[d].convert_to<double>();
        if (std::abs(fp - eps) >= opt.tol)
            fp_ok = false;
    }

    Grading grading = universal_grading(ring);
    GradedPairReport pair_report = check_graded_pairs(grading);
    bool grading_ok = check_component_dims(grading) && pair_report.all_pairs();
    for (const auto& entry : pair_report.entries)
        if (!check_graded_coset_law(grading, entry.M, entry.N))
            grading_ok = false;

    add(cert, "coset_partitions", partitions);
    add(cert, "rank_integrality", ranks);
    add(cert, "support_partition_agreement", crosscheck);
    add(cert, "conjugate_closure", closure);
    add(cert, "conjugate_support", support);
    add(cert, "conjugate_maximality", maximality);
    add(cert, "invertible_mackey_pairs", invertible_pairs);
    add(cert, "orbit_law", orbit);
    add(cert, "dimension_inequality", inequality);
    add(cert, "normal_self_pairs", normal_pairs);
    add(cert, "fp_dimensions", fp_ok);
    add(cert, "grading_suite", grading_ok);
    cert.summary = ring.name + ": " + std::to_string(subrings_list.size()) + " subrings, " +
                   std::to_string(grading.components.size()) + " grading components";
}

void run_group(Certificate& cert, const FiniteGroup& group) {
    add(cert, "group_axioms", true); // construction validates
    Subgroup whole(group, [&] {
        std::vector<FiniteGroup::Elem> all(group.order());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;
        return all;
    }());
    CharacterTable table = character_table(whole); // orthogonality verified
    add(cert, "character_table", true, std::to_string(table.rank()) + " irreducibles");
    auto subs = subgroups(group);
    cert.summary = group.name() + ": order " + std::to_string(group.order()) + ", " +
                   std::to_string(group.conjugacy_classes().size()) + " classes, " +
                   std::to_string(subs.size()) + " subgroups";
}

void run_green(Certificate& cert, const std::string& classical, const std::string& ring_input,
               const std::string& data_file, const Options& opt) {
    GreenFunctorDatum datum;
    if (!classical.empty()) {
        std::string dg;
        datum = classical_instance(resolve_group(classical, dg));
        cert.inputs_digest = dg;
    } else {
        if (ring_input.empty() || data_file.empty())
            throw ParseError("green needs --classical or a ring input with --data");
        std::string dg;
        FusionRing ring = resolve_ring(ring_input, dg);
        RepData data = io::repdata_from_json(io::load_json_file(data_file));
        cert.inputs_digest = dg + "+" + io::digest(slurp(data_file));
        datum = grading_instance(ring, data);
    }
    AxiomReport report = verify_green(datum, opt.seed);
    for (const auto& c : report.checks)
        add(cert, c.name, c.passed, c.witness);
    cert.seed = report.seed;
    cert.summary = cert.all_passed() ? "all functor axioms hold" : "functor axiom failure";
}

void print_human(const Certificate& cert) {
    for (const auto& c : cert.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.witness.empty())
            std::cout << "  [" << c.witness << "]";
        std::cout << "\n";
    }
    std::cout << cert.summary << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusion-ring coset, conjugation, grading and functor checks"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "emit a JSON certificate");
    app.add_option("--tol", opt.tol, "floating-point tolerance")->capture_default_str();
    app.add_option("--max-iter", opt.max_iter, "power-iteration cap")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized coset representatives")
        ->each([&](const std::string&) { opt.seed_set = true; });

    std::string input, generators, left_spec, right_spec, at_spec, classical, data_file;
    bool enumerate_all = false;

    auto* validate = app.add_subcommand("validate", "check every ring axiom");
    validate->add_option("input", input, "ring document or fixture name")->required();

    auto* subring = app.add_subcommand("subring", "generate or enumerate subrings");
    subring->add_option("input", input)->required();
    subring->add_option("--generators", generators, "comma-separated basis elements");
    subring->add_flag("--enumerate", enumerate_all, "list every subring");

    auto* integral_cmd = app.add_subcommand("integral", "integral of a subring");
    integral_cmd->add_option("input", input)->required();
    integral_cmd->add_option("--members", generators)->required();

    auto* cosets_cmd = app.add_subcommand("cosets", "right or double coset partition");
    cosets_cmd->add_option("input", input)->required();
    cosets_cmd->add_option("--subring", right_spec, "K generators")->required();
    cosets_cmd->add_option("--left", left_spec, "L generators (double cosets)");

    auto* conjugate_cmd = app.add_subcommand("conjugate", "conjugate subring at an element");
    conjugate_cmd->add_option("input", input)->required();
    conjugate_cmd->add_option("--at", at_spec)->required();
    conjugate_cmd->add_option("--subring", right_spec)->required();

    auto* mackey = app.add_subcommand("mackey", "Mackey-pair certificate");
    mackey->add_option("input", input)->required();
    mackey->add_option("--left", left_spec)->required();
    mackey->add_option("--right", right_spec)->required();

    auto* grading_cmd = app.add_subcommand("grading", "universal grading suite");
    grading_cmd->add_option("input", input)->required();

    auto* hopf_check = app.add_subcommand("hopf-check", "full invariant suite");
    hopf_check->add_option("input", input)->required();

    auto* group_cmd = app.add_subcommand("group", "validate a group table");
    group_cmd->add_option("input", input)->required();

    auto* green_cmd = app.add_subcommand("green", "verify functor axioms");
    green_cmd->add_option("input", input, "ring document (with --data)");
    green_cmd->add_option("--classical", classical, "group document or fixture name");
    green_cmd->add_option("--data", data_file, "per-subgroup ring and map data");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    Certificate cert;
    cert.command = app.get_subcommands().front()->get_name();
    if (opt.seed_set)
        cert.seed = opt.seed;

    try {
        if (validate->parsed() || subring->parsed() || integral_cmd->parsed() ||
            cosets_cmd->parsed() || conjugate_cmd->parsed() || mackey->parsed() ||
            grading_cmd->parsed() || hopf_check->parsed()) {
            FusionRing ring = resolve_ring(input, cert.inputs_digest);
            if (validate->parsed())
                run_validate(cert, ring);
            else if (subring->parsed())
                run_subring(cert, ring, generators, enumerate_all);
            else if (integral_cmd->parsed())
                run_integral(cert, ring, generators);
            else if (cosets_cmd->parsed())
                run_cosets(cert, ring, right_spec, left_spec);
            else if (conjugate_cmd->parsed())
                run_conjugate(cert, ring, at_spec, right_spec);
            else if (mackey->parsed())
                run_mackey(cert, ring, left_spec, right_spec);
            else if (grading_cmd->parsed())
                run_grading(cert, ring);
            else
                run_hopf_check(cert, ring, opt);
        } else if (group_cmd->parsed()) {
            FiniteGroup group = resolve_group(input, cert.inputs_digest);
            run_group(cert, group);
        } else if (green_cmd->parsed()) {
            run_green(cert, classical, input, data_file, opt);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedTable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedDatum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownFixture& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OrderTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IncompleteRepData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // domain verification failure on otherwise well-formed input
        cert.checks.push_back({"verification", false, e.what()});
        cert.summary = e.what();
    }

    if (opt.as_json)
        std::cout << io::canonical_dump(cert.to_json());
    else
        print_human(cert);
    return cert.all_passed() ? 0 : 1;
}
