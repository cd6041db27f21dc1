#include "oporbits/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "oporbits/fredholm.hpp"
#include "oporbits/io.hpp"
#include "oporbits/matrix_lab.hpp"
#include "oporbits/orbit.hpp"
#include "oporbits/verify.hpp"

namespace oporbits {

namespace {

std::string fmt12(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(12) << v;
    return s.str();
}

OrbitGroup parse_group(const std::string& g) {
    if (g == "gg") return OrbitGroup::GG;
    if (g == "ur") return OrbitGroup::URight;
    if (g == "ul") return OrbitGroup::ULeft;
    if (g == "gr") return OrbitGroup::GRight;
    if (g == "uu") return OrbitGroup::UU;
    throw InputError("unknown group \"" + g + "\" (expected gg, ur, ul, gr or uu)");
}

std::vector<Cardinal> parse_universe(const std::string& list) {
    std::vector<Cardinal> u;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (!item.empty()) u.push_back(parse_cardinal(item));
    }
    if (u.empty()) throw InputError("--universe: no cardinals given");
    return u;
}

LambdaTriple parse_triple(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        parts.push_back(item);
    }
    if (parts.size() != 3)
        throw InputError("--triple: expected \"left,mid,right\", got \"" + text + "\"");
    return LambdaTriple{parse_cardinal(parts[0]), parse_cardinal(parts[1]),
                        parse_cardinal(parts[2])};
}

std::string class_line(const OperatorDescriptor& d) {
    if (dim_domain(d) != Cardinal::aleph0() || dim_codomain(d) != Cardinal::aleph0())
        return "n/a (classification needs dim H = dim K = aleph_0)";
    const SeparableClassification c = classify_separable(d);
    switch (c.kind) {
        case SeparableClass::FiniteRank:
            return "finite-rank (rank = " + format_cardinal(c.rank) + ")";
        case SeparableClass::CompactInfRank:
            return "compact-infinite-rank";
        case SeparableClass::NonSemiFredholm:
            return "non-semi-fredholm";
        case SeparableClass::SemiFredholm:
            return "semi-fredholm (ind = " + format_signed_index(c.index) +
                   ", iota_m = " + format_cardinal(c.min_index) + ")";
    }
    return "";
}

void print_index_table(std::ostream& out, const OperatorDescriptor& d) {
    const IndexVector v = indices(d);
    out << "dim_H   = " << format_cardinal(dim_domain(d)) << "\n";
    out << "dim_K   = " << format_cardinal(dim_codomain(d)) << "\n";
    out << "iota_r  = " << format_cardinal(v.iota_r) << "\n";
    out << "iota_i  = " << format_cardinal(v.iota_i) << "\n";
    out << "iota_f  = " << format_cardinal(v.iota_f) << "\n";
    out << "iota_b  = " << v.iota_b << "\n";
    out << "iota_R  = " << format_cardinal(iota_R(d)) << "\n";
    out << "iota_m  = " << format_cardinal(iota_m(d)) << "\n";
    out << "compact = " << (is_compact(d) ? "yes" : "no") << "\n";
    out << "class   = " << class_line(d) << "\n";
    out << "ind = " << format_signed_index(ind(d)) << "\n";
}

const char* group_rule(OrbitGroup g, bool exact) {
    switch (g) {
        case OrbitGroup::GG: return exact ? "rank-equality" : "rank-comparison";
        case OrbitGroup::URight: return "gram-match";
        case OrbitGroup::ULeft: return "cogram-match";
        case OrbitGroup::GRight: return exact ? "column-space-equality" : "column-space";
        case OrbitGroup::UU: return "singular-values";
    }
    return "";
}

struct CliOptions {
    std::string file_a, file_b;
    std::string group = "gg";
    std::string gamma, m_cut, alpha, beta, ambient, triple, universe, suite = "all";
    double eps = 1e-8;
    int n_samples = 100;
    std::uint64_t seed = 0;
    bool matrix_mode = false;
    bool exact = false;
};

int cmd_idx(const CliOptions& opt, std::ostream& out) {
    print_index_table(out, load_descriptor_file(opt.file_a));
    return 0;
}

int cmd_orbit_contains(const CliOptions& opt, std::ostream& out) {
    const OrbitGroup group = parse_group(opt.group);
    if (opt.matrix_mode) {
        const ComplexMatrix a = load_matrix_file(opt.file_a);
        const ComplexMatrix b = load_matrix_file(opt.file_b);
        if (opt.exact) {
            const bool member = orbit_member_exact(a, b, group, opt.eps);
            out << (member ? "member" : "non-member") << " (exact orbit)  [rule "
                << group_rule(group, true) << "]\n";
            return 0;
        }
        switch (group) {
            case OrbitGroup::GG: {
                const bool member = closure_gg_contains_matrix(a, b);
                out << (member ? "member" : "non-member") << "  [rule rank-comparison]\n";
                return 0;
            }
            case OrbitGroup::URight:
            case OrbitGroup::ULeft: {
                const UnitaryWitness w = group == OrbitGroup::URight
                                             ? closure_u_right_contains(a, b, opt.eps)
                                             : closure_u_left_contains(a, b, opt.eps);
                if (w.member)
                    out << "member (witness residual " << fmt12(w.residual) << ")  [rule "
                        << group_rule(group, false) << "]\n";
                else
                    out << "non-member (gram gap " << fmt12(w.gram_gap) << ")  [rule "
                        << group_rule(group, false) << "]\n";
                return 0;
            }
            case OrbitGroup::GRight: {
                const bool member = closure_g_right_contains(a, b, opt.eps);
                out << (member ? "member" : "non-member") << "  [rule column-space]\n";
                return 0;
            }
            case OrbitGroup::UU: {
                const bool member = closure_uu_contains(a, b, opt.eps);
                out << (member ? "member" : "non-member") << "  [rule singular-values]\n";
                return 0;
            }
        }
        return 0;
    }
    if (group != OrbitGroup::GG)
        throw PreconditionError(
            "descriptor-level closure queries are defined for --group gg only; "
            "use --matrix for the finite-dimensional one-sided and unitary groups");
    const OperatorDescriptor a = load_descriptor_file(opt.file_a);
    const OperatorDescriptor b = load_descriptor_file(opt.file_b);
    const OrbitVerdict v = closure_gg_contains(a, b);
    if (v.member) {
        out << "member";
        if (v.alpha && !v.alpha->is_empty()) {
            if (v.alpha->kind() == AlphaSolutionSet::Kind::Point)
                out << " (alpha = " << format_cardinal(v.alpha->min_element()) << ")";
            else
                out << " (alpha in " << format_solution_set(*v.alpha) << ")";
        }
        out << "  [rule orbit-closure]\n";
    } else {
        out << "non-member: condition (" << *v.failed_condition << ") fails  [rule orbit-closure("
            << *v.failed_condition << ")]\n";
    }
    return 0;
}

int cmd_orbit_equal(const CliOptions& opt, std::ostream& out) {
    if (opt.matrix_mode) {
        const ComplexMatrix a = load_matrix_file(opt.file_a);
        const ComplexMatrix b = load_matrix_file(opt.file_b);
        const bool eq = closure_gg_contains_matrix(a, b) && closure_gg_contains_matrix(b, a);
        out << (eq ? "equal" : "not equal") << "  [rule rank-equality]\n";
        return 0;
    }
    const bool eq =
        closure_gg_equal(load_descriptor_file(opt.file_a), load_descriptor_file(opt.file_b));
    out << (eq ? "equal" : "not equal") << "  [rule index-equality]\n";
    return 0;
}

int cmd_lambda_member(const CliOptions& opt, std::ostream& out) {
    const OperatorDescriptor a = load_descriptor_file(opt.file_a);
    const LambdaTriple t = parse_triple(opt.triple);
    out << (lambda_member(a, t) ? "member" : "non-member") << " " << format_lambda_triple(t)
        << "  [rule lambda-triples]\n";
    return 0;
}

int cmd_lambda_enum(const CliOptions& opt, std::ostream& out) {
    const OperatorDescriptor a = load_descriptor_file(opt.file_a);
    const std::vector<Cardinal> u =
        opt.universe.empty() ? default_universe() : parse_universe(opt.universe);
    const auto triples = lambda_enumerate(a, u);
    for (const auto& t : triples) out << format_lambda_triple(t) << "\n";
    out << triples.size() << " triple(s)  [rule lambda-triples]\n";
    return 0;
}

int cmd_invertible_closure(const CliOptions& opt, std::ostream& out) {
    const bool member = invertible_closure_member(load_descriptor_file(opt.file_a));
    out << (member ? "member" : "non-member") << "  [rule invertible-closure]\n";
    return 0;
}

int cmd_fredholm(const std::string& verb, const CliOptions& opt, std::ostream& out) {
    const OperatorDescriptor a = load_descriptor_file(opt.file_a);
    const Cardinal ambient = opt.ambient.empty() ? dim_domain(a) : parse_cardinal(opt.ambient);
    const SignedIndex gamma = parse_signed_index(opt.gamma);
    if (!gamma.is_defined()) throw InputError("--gamma: \"undefined\" is not a region");
    const IndexRegionQuery q(gamma, ambient);
    bool result = false;
    const char* rule = "";
    if (verb == "member") {
        result = ind_region_member(a, q);
        rule = "index-region";
    } else if (verb == "closure") {
        result = ind_closure_member(a, q);
        rule = "region-closure";
    } else if (verb == "boundary") {
        result = ind_boundary_member(a, q);
        rule = "region-boundary";
    } else {
        if (opt.m_cut.empty()) throw InputError("fredholm cut: --m is required");
        result = ind_cut_member(a, q, parse_cardinal(opt.m_cut));
        rule = "region-cut";
    }
    out << (result ? "member" : "non-member") << "  [rule " << rule << "]\n";
    return 0;
}

int cmd_ideal_member(const CliOptions& opt, std::ostream& out) {
    const OperatorDescriptor a = load_descriptor_file(opt.file_a);
    const Cardinal ambient = opt.ambient.empty() ? dim_domain(a) : parse_cardinal(opt.ambient);
    const IdealHandle j(parse_cardinal(opt.alpha), ambient);
    out << (ideal_member(a, j) ? "member" : "non-member") << "  [rule ideal-membership]\n";
    return 0;
}

int cmd_ideal_compare(const CliOptions& opt, std::ostream& out) {
    const Cardinal ambient = parse_cardinal(opt.ambient);
    const IdealOrder o = ideal_compare(IdealHandle(parse_cardinal(opt.alpha), ambient),
                                       IdealHandle(parse_cardinal(opt.beta), ambient));
    const char* word =
        o == IdealOrder::Less ? "less" : o == IdealOrder::Equal ? "equal" : "greater";
    out << word << "  [rule ideal-order]\n";
    return 0;
}

int cmd_matrix_indices(const CliOptions& opt, std::ostream& out) {
    const ComplexMatrix m = load_matrix_file(opt.file_a);
    const RankInfo info = matrix_rank(m);
    print_index_table(out, svd_indices(m));
    if (info.marginal) out << "warning: rank decision is marginal near the threshold\n";
    return 0;
}

int cmd_matrix_distance(const CliOptions& opt, std::ostream& out) {
    const ComplexMatrix a = load_matrix_file(opt.file_a);
    const ComplexMatrix b = load_matrix_file(opt.file_b);
    const OrbitGroup group = parse_group(opt.group);
    if (group == OrbitGroup::GG) {
        out << fmt12(gg_distance(a, b)) << "\n";
    } else if (group == OrbitGroup::UU) {
        out << fmt12(uu_distance(a, b)) << "\n";
    } else {
        throw InputError("matrix distance: closed forms exist for --group gg and uu; "
                         "use matrix sample for the one-sided groups");
    }
    return 0;
}

int cmd_matrix_approx(const CliOptions& opt, std::ostream& out) {
    const ComplexMatrix a = load_matrix_file(opt.file_a);
    const ComplexMatrix b = load_matrix_file(opt.file_b);
    const GgApproximation res = gg_approximate(a, b, opt.eps);
    if (!res.feasible) {
        out << "infeasible: rank(B) exceeds rank(A)  [rule rank-comparison]\n";
        return 0;
    }
    out << "achieved_error = " << fmt12(res.achieved_error) << "\n";
    out << "condition(G)   = " << fmt12(res.condition_number) << "\n";
    return 0;
}

int cmd_matrix_sample(const CliOptions& opt, std::ostream& out) {
    const ComplexMatrix a = load_matrix_file(opt.file_a);
    const ComplexMatrix b = load_matrix_file(opt.file_b);
    const double d = sample_orbit_distance(a, b, parse_group(opt.group), opt.n_samples, opt.seed);
    out << fmt12(d) << "\n";
    return 0;
}

int cmd_verify(const CliOptions& opt, std::ostream& out) {
    const bool symbolic = opt.suite == "all" || opt.suite == "symbolic";
    const bool numeric = opt.suite == "all" || opt.suite == "numeric";
    if (!symbolic && !numeric) throw InputError("--suite: expected all, symbolic or numeric");
    return verify::run_acceptance(out, symbolic, numeric) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"decision toolkit for operator orbit closures, extended indices and ideals"};
    app.require_subcommand(1);
    CliOptions opt;

    auto* idx = app.add_subcommand("idx", "index table of a descriptor");
    idx->add_option("file", opt.file_a, "descriptor JSON file")->required();

    auto* orbit = app.add_subcommand("orbit", "orbit closure queries");
    orbit->require_subcommand(1);
    auto* contains = orbit->add_subcommand("contains", "is B in the closure of the orbit of A");
    contains->add_option("--group", opt.group, "gg|ur|ul|gr|uu (default gg)");
    contains->add_option("--A", opt.file_a)->required();
    contains->add_option("--B", opt.file_b)->required();
    contains->add_flag("--matrix", opt.matrix_mode, "operands are matrices");
    contains->add_flag("--exact", opt.exact, "exact orbit membership (matrix mode)");
    contains->add_option("--eps", opt.eps, "numerical tolerance (default 1e-8)");
    auto* equal = orbit->add_subcommand("equal", "do the orbit closures coincide");
    equal->add_option("--A", opt.file_a)->required();
    equal->add_option("--B", opt.file_b)->required();
    equal->add_flag("--matrix", opt.matrix_mode, "operands are matrices");

    auto* lambda = app.add_subcommand("lambda", "bounded-below subspace triples");
    lambda->require_subcommand(1);
    auto* lmember = lambda->add_subcommand("member", "test one triple");
    lmember->add_option("--A", opt.file_a)->required();
    lmember->add_option("--triple", opt.triple, "\"left,mid,right\"")->required();
    auto* lenum = lambda->add_subcommand("enum", "enumerate triples over a universe");
    lenum->add_option("--A", opt.file_a)->required();
    lenum->add_option("--universe", opt.universe, "comma-separated cardinals");

    auto* inv = app.add_subcommand("invertible-closure",
                                   "membership in the closure of the invertible group");
    inv->add_option("--A", opt.file_a)->required();

    auto* fred = app.add_subcommand("fredholm", "extended index regions");
    fred->require_subcommand(1);
    for (const char* verb : {"member", "closure", "boundary", "cut"}) {
        auto* sub = fred->add_subcommand(verb);
        sub->add_option("--A", opt.file_a)->required();
        sub->add_option("--gamma", opt.gamma, "signed cardinal")->required();
        sub->add_option("--ambient", opt.ambient, "ambient dimension (default: derived)");
        if (std::string(verb) == "cut") sub->add_option("--m", opt.m_cut, "cut height");
    }

    auto* ideal = app.add_subcommand("ideal", "the closed two-sided ideal lattice");
    ideal->require_subcommand(1);
    auto* imember = ideal->add_subcommand("member");
    imember->add_option("--A", opt.file_a)->required();
    imember->add_option("--alpha", opt.alpha)->required();
    imember->add_option("--ambient", opt.ambient);
    auto* icompare = ideal->add_subcommand("compare");
    icompare->add_option("--alpha", opt.alpha)->required();
    icompare->add_option("--beta", opt.beta)->required();
    icompare->add_option("--ambient", opt.ambient)->required();

    auto* matrix = app.add_subcommand("matrix", "finite-dimensional oracle");
    matrix->require_subcommand(1);
    auto* mindices = matrix->add_subcommand("indices");
    mindices->add_option("--A", opt.file_a)->required();
    auto* mdistance = matrix->add_subcommand("distance");
    mdistance->add_option("--group", opt.group)->required();
    mdistance->add_option("--A", opt.file_a)->required();
    mdistance->add_option("--B", opt.file_b)->required();
    auto* mapprox = matrix->add_subcommand("approx");
    mapprox->add_option("--A", opt.file_a)->required();
    mapprox->add_option("--B", opt.file_b)->required();
    mapprox->add_option("--eps", opt.eps, "target error (default 1e-8)");
    auto* msample = matrix->add_subcommand("sample");
    msample->add_option("--group", opt.group)->required();
    msample->add_option("--A", opt.file_a)->required();
    msample->add_option("--B", opt.file_b)->required();
    msample->add_option("--n", opt.n_samples, "number of samples (default 100)");
    msample->add_option("--seed", opt.seed, "random seed (default 0)");

    auto* ver = app.add_subcommand("verify", "run the acceptance suites");
    ver->add_option("--suite", opt.suite, "all|symbolic|numeric (default all)");

    std::vector<std::string> args(argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*idx) return cmd_idx(opt, out);
        if (*contains) return cmd_orbit_contains(opt, out);
        if (*equal) return cmd_orbit_equal(opt, out);
        if (*lmember) return cmd_lambda_member(opt, out);
        if (*lenum) return cmd_lambda_enum(opt, out);
        if (*inv) return cmd_invertible_closure(opt, out);
        if (*fred) {
            for (auto* sub : fred->get_subcommands()) return cmd_fredholm(sub->get_name(), opt, out);
        }
        if (*imember) return cmd_ideal_member(opt, out);
        if (*icompare) return cmd_ideal_compare(opt, out);
        if (*mindices) return cmd_matrix_indices(opt, out);
        if (*mdistance) return cmd_matrix_distance(opt, out);
        if (*mapprox) return cmd_matrix_approx(opt, out);
        if (*msample) return cmd_matrix_sample(opt, out);
        if (*ver) return cmd_verify(opt, out);
        err << "error: no command\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace oporbits
