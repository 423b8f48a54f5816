#include "lscat/cli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "lscat/cover_verifier.hpp"
#include "lscat/orbit_classifier.hpp"
#include "lscat/realizations/clifford.hpp"
#include "lscat/realizations/symplectic.hpp"
#include "lscat/realizations/unitary.hpp"
#include "lscat/serialize.hpp"

namespace lscat {

namespace {

// Search-heavy commands refuse larger ranks unless --force is given.
constexpr int kMaxUnforcedRank = 8;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TypeFlags {
    std::string family;
    int rank = 0;
    bool json = false;

    [[nodiscard]] LieType lie_type() const { return LieType::make(parse_family(family), rank); }
};

void add_type_flags(CLI::App* cmd, TypeFlags& flags) {
    cmd->add_option("--family", flags.family, "Lie family letter A-G")->required();
    cmd->add_option("--rank", flags.rank, "rank n")->required();
    cmd->add_flag("--json", flags.json, "emit JSON instead of a text table");
}

void check_rank_limit(const LieType& t, bool force) {
    if (t.rank > kMaxUnforcedRank && !force)
        throw UsageError("rank " + std::to_string(t.rank) + " exceeds " + std::to_string(kMaxUnforcedRank) +
                         "; pass --force to run anyway");
}

// "k=v" with nonnegative integers.
std::pair<std::size_t, int> parse_override(const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
        throw UsageError("override '" + s + "' is not of the form k=v");
    std::size_t used_k = 0, used_v = 0;
    long k = 0, v = 0;
    try {
        k = std::stol(s.substr(0, eq), &used_k);
        v = std::stol(s.substr(eq + 1), &used_v);
    } catch (const std::exception&) {
        throw UsageError("override '" + s + "' is not of the form k=v");
    }
    if (used_k != eq || used_v != s.size() - eq - 1 || k < 0)
        throw UsageError("override '" + s + "' is not of the form k=v");
    return {static_cast<std::size_t>(k), static_cast<int>(v)};
}

std::vector<Check> parse_checks(const std::vector<std::string>& tokens, const LieType& t) {
    std::vector<std::string> names;
    for (const auto& tok : tokens) {
        std::stringstream ss(tok);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) names.push_back(part);
    }
    if (names.empty() || (names.size() == 1 && names[0] == "all")) return supported_checks(t);
    std::vector<Check> out;
    for (const auto& n : names) {
        if (n == "all") throw UsageError("'all' cannot be combined with named checks");
        out.push_back(parse_check(n));
    }
    return out;
}

void realize(const LieType& t, std::size_t k, const std::string& model, bool json, std::ostream& out) {
    const int n = t.rank;
    if (k > static_cast<std::size_t>(n)) throw UsageError("--k must lie in 0.." + std::to_string(n));
    Json doc{{"lie_type", t.name()}, {"k", k}, {"model", model}};
    std::ostringstream text;
    text << "exp v_" << k << " in " << t.name() << " (" << model << " model)\n";
    if (model == "su") {
        if (t.family != Family::A) throw UsageError("model su needs family A");
        const UnitaryDiagonal d = su_exp_vertex(n, k);
        doc["turns"] = to_json(d.turns);
        const auto s = d.scalar_turn();
        doc["scalar_turn"] = s ? Json(s->str()) : Json(nullptr);
        if (s) text << "exp(2 pi i * " << s->str() << ") Id_" << n + 1 << '\n';
        else text << "diag of exp(2 pi i * t) with t = " << to_string(d.turns) << '\n';
    } else if (model == "quat") {
        if (t.family != Family::C) throw UsageError("model quat needs family C");
        const QuatMatrix g = sp_exp_vertex(n, static_cast<int>(k));
        doc["matrix"] = to_json(g);
        doc["symplectic"] = is_symplectic(g);
        text << matrix_text(g);
    } else if (model == "clifford" || model == "so") {
        if (t.family != Family::B && t.family != Family::D) throw UsageError("model " + model + " needs family B or D");
        const CliffordElement g = spin_vertex_element(t.family, n, k);
        if (model == "clifford") {
            doc["element"] = to_json(g);
            doc["spin"] = is_spin(g);
            text << to_string(g) << '\n';
        } else {
            const QMat a = vector_action(g);
            doc["matrix"] = to_json(a);
            text << matrix_text(a);
        }
    } else {
        throw UsageError("unknown model '" + model + "' (expected su, quat, clifford or so)");
    }
    out << (json ? dump_json(doc) : text.str());
}

}  // namespace

int verify_exit_code(const VerifyReport& report) { return report.passed() ? kExitOk : kExitVerifyFailed; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alcove geometry, distinguished conjugacy classes and LS-category bounds of compact Lie groups",
                 "lscat"};
    app.require_subcommand(1);

    TypeFlags roots_f, marks_f, alcove_f, orbits_f, bound_f, realize_f, verify_f;
    bool alcove_force = false, verify_force = false, assume_conjecture = false, timing = false;
    std::vector<std::string> overrides, check_names{"all"};
    std::size_t realize_k = 0, samples = 500, word_length = 8;
    std::string model;
    std::uint64_t seed = 0;
    long grid_denominator = 12;

    auto* roots_cmd = app.add_subcommand("roots", "root data, root count and highest root");
    add_type_flags(roots_cmd, roots_f);
    auto* marks_cmd = app.add_subcommand("marks", "coefficients of the highest root");
    add_type_flags(marks_cmd, marks_f);
    auto* alcove_cmd = app.add_subcommand("alcove", "vertices, faces and vertex stabilizer orders");
    add_type_flags(alcove_cmd, alcove_f);
    alcove_cmd->add_flag("--force", alcove_force, "allow rank above 8");
    auto* orbits_cmd = app.add_subcommand("orbits", "conjugacy class of each exp v_k");
    add_type_flags(orbits_cmd, orbits_f);
    auto* bound_cmd = app.add_subcommand("bound", "upper bound for the LS category");
    add_type_flags(bound_cmd, bound_f);
    bound_cmd->add_flag("--assume-conjecture", assume_conjecture, "count conjectured values of cat_G(O_k)");
    bound_cmd->add_option("--override", overrides, "assume cat_G(O_k) = v, given as k=v");
    auto* realize_cmd = app.add_subcommand("realize", "exp v_k in a matrix or Clifford model");
    add_type_flags(realize_cmd, realize_f);
    realize_cmd->add_option("--k", realize_k, "vertex index")->required();
    realize_cmd->add_option("--model", model, "su, quat, clifford or so (default by family)");
    auto* verify_cmd = app.add_subcommand("verify", "finite verification campaign");
    add_type_flags(verify_cmd, verify_f);
    verify_cmd->add_option("--checks", check_names, "'all' or a comma-separated list of checks");
    verify_cmd->add_option("--seed", seed, "generator seed");
    verify_cmd->add_option("--samples", samples, "sampled instances per check");
    verify_cmd->add_option("--word-length", word_length, "word-length bound for affine Weyl elements");
    verify_cmd->add_option("--grid-denominator", grid_denominator, "denominator of sampled points");
    verify_cmd->add_flag("--timing", timing, "report per-check durations");
    verify_cmd->add_flag("--force", verify_force, "allow rank above 8");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (roots_cmd->parsed()) {
            const RootSystem rs = build(roots_f.lie_type());
            out << (roots_f.json ? dump_json(root_data_json(rs)) : root_data_text(rs));
        } else if (marks_cmd->parsed()) {
            const RootSystem rs = build(marks_f.lie_type());
            out << (marks_f.json ? dump_json(marks_json(rs)) : marks_text(rs));
        } else if (alcove_cmd->parsed()) {
            const LieType t = alcove_f.lie_type();
            check_rank_limit(t, alcove_force);
            const FundamentalAlcove alcove(build(t));
            out << (alcove_f.json ? dump_json(alcove_json(alcove)) : alcove_text(alcove));
        } else if (orbits_cmd->parsed()) {
            const RootSystem rs = build(orbits_f.lie_type());
            out << (orbits_f.json ? dump_json(orbits_json(rs)) : orbits_text(rs));
        } else if (bound_cmd->parsed()) {
            const RootSystem rs = build(bound_f.lie_type());
            BoundOptions opts;
            opts.assume_conjecture = assume_conjecture;
            for (const auto& o : overrides) {
                const auto [k, v] = parse_override(o);
                if (!opts.overrides.emplace(k, v).second)
                    throw UsageError("override for k = " + std::to_string(k) + " given twice");
            }
            const BoundReport report = ls_bound(rs, opts);
            out << (bound_f.json ? dump_json(to_json(report)) : bound_text(report));
        } else if (realize_cmd->parsed()) {
            const LieType t = realize_f.lie_type();
            if (model.empty()) {
                switch (t.family) {
                    case Family::A: model = "su"; break;
                    case Family::C: model = "quat"; break;
                    case Family::B:
                    case Family::D: model = "clifford"; break;
                    default: throw UsageError("no matrix model for family " + std::string(1, family_letter(t.family)));
                }
            }
            realize(t, realize_k, model, realize_f.json, out);
        } else if (verify_cmd->parsed()) {
            VerifyPlan plan;
            plan.lie_type = verify_f.lie_type();
            check_rank_limit(plan.lie_type, verify_force);
            plan.checks = parse_checks(check_names, plan.lie_type);
            plan.seed = seed;
            plan.samples = samples;
            plan.word_length_bound = word_length;
            plan.grid_denominator = grid_denominator;
            const VerifyReport report = run(plan);
            out << (verify_f.json ? dump_json(to_json(report, timing)) : verify_text(report, timing));
            return verify_exit_code(report);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace lscat
