#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oresolve/denbound.hpp"
#include "oresolve/io.hpp"
#include "oresolve/oracle.hpp"
#include "oresolve/solver.hpp"

namespace {

using namespace oresolve;

constexpr int kExitOk = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<long> parse_powers(const std::string& text, std::size_t expected) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    if (out.size() != expected)
        throw Error("expected " + std::to_string(expected) + " powers, got " +
                    std::to_string(out.size()));
    return out;
}

std::string disp_line(const FieldSpec& field, const DenBound& db) {
    std::ostringstream out;
    Disp overall = Disp::neg_inf();
    for (const auto& gb : db.per_generator) {
        out << "D[" << field.vars()->name(field.gen_var(gb.gen)) << "] = " << to_string(gb.disp)
            << "\n";
        if (overall < gb.disp) overall = gb.disp;
    }
    out << "D = " << to_string(overall) << "\n";
    return out.str();
}

void print_vector(std::ostream& os, const std::string& label, const std::vector<RatFunc>& v) {
    os << label << " = [";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << to_string(v[i]);
    }
    os << "]\n";
}

int cmd_spread(const std::string& field_text, const std::string& a_text,
               const std::string& b_text, const std::string& gen_name, std::uint64_t seed) {
    FieldSpecPtr field = parse_field(field_text);
    MultiPoly a = parse_poly(field->vars(), a_text);
    MultiPoly b = parse_poly(field->vars(), b_text);
    std::size_t gen = field->generator_count() - 1;
    if (!gen_name.empty()) {
        bool found = false;
        for (std::size_t g = 0; g < field->generator_count(); ++g)
            if (field->generator(g).name == gen_name) {
                gen = g;
                found = true;
            }
        if (!found) throw Error("unknown generator: " + gen_name);
    }
    SpreadResult sp = spread(*field, a, b, gen, seed);
    if (sp.is_infinite) {
        std::cout << "spread = infinite; disp = +inf\n";
        return kExitOk;
    }
    std::cout << "spread = {";
    for (std::size_t i = 0; i < sp.finite_set.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << sp.finite_set[i];
    }
    std::cout << "}; disp = "
              << (sp.finite_set.empty() ? std::string("-inf")
                                        : std::to_string(sp.finite_set.back()))
              << "\n";
    return kExitOk;
}

int cmd_rowreduce(const std::string& path) {
    SystemFile sf = parse_system(read_file(path));
    RowReduction rr = row_reduce(sf.system.op, +1);
    std::cout << "rank = " << rr.rank << "\n";
    Degrees d = degrees(rr.R);
    std::cout << "row degrees = [";
    for (std::size_t i = 0; i < d.row_degrees.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << (d.row_degrees[i] ? std::to_string(*d.row_degrees[i]) : std::string("-inf"));
    }
    std::cout << "]\n";
    std::cout << "R:\n" << to_string(rr.R) << "\n";
    std::cout << "P:\n" << to_string(rr.P.fwd) << "\n";
    std::cout << "P^-1:\n" << to_string(rr.P.inv) << "\n";
    return kExitOk;
}

int cmd_regularize(const std::string& path) {
    SystemFile sf = parse_system(read_file(path));
    RegulariseResult r = regularise(sf.system);
    if (!r.solvable) {
        std::cout << "unsolvable\ncompatibility conditions:\n";
        for (const auto& c : r.compat) std::cout << "  " << to_string(c) << "\n";
        return kExitUnsolvable;
    }
    const RegularisedSystem& reg = *r.system;
    std::cout << "rank = " << reg.head.size() << "\n";
    std::cout << "head order = " << reg.head_order << "\n";
    if (reg.compat.empty()) {
        std::cout << "compatibility conditions: none\n";
    } else {
        std::cout << "compatibility conditions (all satisfied):\n";
        for (const auto& c : reg.compat) std::cout << "  " << to_string(c) << "\n";
    }
    std::cout << "free variables: ";
    if (reg.free_vars.empty()) {
        std::cout << "none\n";
    } else {
        std::cout << "[";
        for (std::size_t i = 0; i < reg.free_vars.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << reg.free_vars[i];
        }
        std::cout << "]\n";
    }
    std::cout << "head system:\n" << to_string(reg.head) << "\n";
    std::cout << "tail system:\n" << to_string(reg.tail) << "\n";
    std::cout << "P:\n" << to_string(reg.P_total.fwd) << "\n";
    std::cout << "Q:\n" << to_string(reg.Q_total.fwd) << "\n";
    std::cout << "tail transform:\n" << to_string(reg.tail_transform.fwd) << "\n";
    return kExitOk;
}

int cmd_denbound(const std::string& path, const std::string& merge, const std::string& powers,
                 std::uint64_t seed) {
    SystemFile sf = parse_system(read_file(path));
    bool improved = merge != "lcm";
    if (merge != "lcm" && merge != "improved") throw Error("--merge expects improved or lcm");

    RegulariseResult r = regularise(sf.system);
    if (!r.solvable) {
        std::cerr << "system is unsolvable; compatibility witness:\n";
        for (const auto& c : r.compat)
            if (!c.is_zero()) std::cerr << "  " << to_string(c) << "\n";
        return kExitUnsolvable;
    }
    const FieldSpec& field = *sf.field;
    DenBound db = denbound_all(field, *r.system, improved, seed);
    std::cout << "field: " << field.header() << "\n";
    std::cout << "head order = " << r.system->head_order << "\n";
    std::cout << "m = " << to_string(db.per_generator.front().head_den) << "\n";
    std::cout << "p = " << to_string(db.per_generator.front().tail_den) << "\n";
    std::cout << disp_line(field, db);
    std::cout << "d = " << to_string(db.d) << "\n";
    if (!powers.empty()) {
        std::vector<long> pw = parse_powers(powers, field.generator_count());
        std::cout << "complete bound guess = " << to_string(complete_bound_guess(field, db, pw))
                  << "\n";
    }
    return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& denbound_arg, long degree,
              const std::string& powers, std::uint64_t seed) {
    SystemFile sf = parse_system(read_file(path));
    const FieldSpec& field = *sf.field;
    const VarSetPtr& vars = field.vars();

    MultiPoly den = MultiPoly::constant(vars, 1);
    if (denbound_arg == "auto") {
        RegulariseResult r = regularise(sf.system);
        if (!r.solvable) {
            std::cerr << "system is unsolvable; compatibility witness:\n";
            for (const auto& c : r.compat)
                if (!c.is_zero()) std::cerr << "  " << to_string(c) << "\n";
            return kExitUnsolvable;
        }
        DenBound db = denbound_all(field, *r.system, true, seed);
        std::vector<long> pw(field.generator_count(), 0);
        if (!powers.empty()) pw = parse_powers(powers, field.generator_count());
        den = complete_bound_guess(field, db, pw);
        if (!r.system->free_vars.empty())
            std::cerr << "note: rank-deficient system; solving with free variables set to zero\n";
    } else {
        den = parse_poly(vars, denbound_arg);
    }

    long b = degree;
    if (b < 0) {
        // Heuristic default: twice the largest coefficient degree.
        long maxdeg = 0;
        for (long k = 0; !sf.system.op.is_zero() && k <= sf.system.op.hi(); ++k)
            for (std::size_t i = 0; i < sf.system.op.rows(); ++i)
                for (std::size_t j = 0; j < sf.system.op.cols(); ++j) {
                    const RatFunc& e = sf.system.op.entry(k, i, j);
                    if (!e.is_zero()) maxdeg = std::max(maxdeg, static_cast<long>(e.num().total_degree()));
                }
        b = 2 * maxdeg;
        std::cerr << "note: using heuristic degree bound " << b << "\n";
    }

    SolutionBasis sol = rational_solutions(sf.system, den, b);
    std::cout << "denominator bound used = " << to_string(sol.denbound_used) << "\n";
    std::cout << "degree bound used = " << sol.degree_bound_used << "\n";
    std::cout << "dimension = " << sol.basis.size() << "\n";
    if (sol.particular) {
        print_vector(std::cout, "particular", *sol.particular);
    } else {
        std::cout << "particular = none (" << sol.diagnostic << ")\n";
    }
    for (std::size_t i = 0; i < sol.basis.size(); ++i)
        print_vector(std::cout, "basis[" + std::to_string(i) + "]", sol.basis[i]);
    return sol.particular || sol.diagnostic.empty() ? kExitOk : kExitUnsolvable;
}

int cmd_selftest(std::size_t cases, std::uint64_t seed) {
    if (const char* env = std::getenv("ORESOLVE_SELFTEST_SEED")) seed = std::stoull(env);
    std::vector<SuiteReport> reports;
    reports.push_back(run_soundness_suite(cases, seed));
    reports.push_back(run_dispersion_suite(std::max<std::size_t>(cases / 4, 1), seed + 1));
    reports.push_back(run_ledger_suite(cases, seed + 2));
    reports.push_back(run_equivalence_suite(std::max<std::size_t>(cases / 2, 1), seed + 3));

    bool all_ok = true;
    std::cout << "suite                        cases  passes  status\n";
    for (const auto& r : reports) {
        std::cout << r.name;
        for (std::size_t i = r.name.size(); i < 29; ++i) std::cout << ' ';
        std::cout << r.cases << "      " << r.passes << "      " << (r.ok() ? "ok" : "FAIL")
                  << "\n";
        for (const auto& f : r.failures) std::cerr << "  " << r.name << ": " << f << "\n";
        all_ok = all_ok && r.ok();
    }
    return all_ok ? kExitOk : kExitUnsolvable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact denominator bounds and rational solutions for linear recurrence systems"};
    app.require_subcommand(1);

    std::string field_text, a_text, b_text, gen_name, file, merge = "improved", powers;
    std::string denbound_arg = "auto";
    long degree = -1;
    std::uint64_t seed = 1;
    std::size_t cases = 50;

    CLI::App* sp = app.add_subcommand("spread", "spread and dispersion of two polynomials");
    sp->add_option("--field", field_text, "field header, e.g. rational(t)")->required();
    sp->add_option("--a", a_text, "first polynomial")->required();
    sp->add_option("--b", b_text, "second polynomial")->required();
    sp->add_option("--gen", gen_name, "generator name (default: last)");
    sp->add_option("--seed", seed, "seed for the evaluation points");

    CLI::App* rr = app.add_subcommand("rowreduce", "row reduce the system operator");
    rr->add_option("file", file, "system file")->required();

    CLI::App* rg = app.add_subcommand("regularize", "related fully regular system");
    rg->add_option("file", file, "system file")->required();

    CLI::App* db = app.add_subcommand("denbound", "aperiodic universal denominator bound");
    db->add_option("file", file, "system file")->required();
    db->add_option("--merge", merge, "improved | lcm (default improved)");
    db->add_option("--powers", powers, "comma-separated Pi powers for the complete bound guess");
    db->add_option("--seed", seed, "seed for the evaluation points");

    CLI::App* sv = app.add_subcommand("solve", "rational solution basis");
    sv->add_option("file", file, "system file")->required();
    sv->add_option("--denbound", denbound_arg, "auto | explicit polynomial (default auto)");
    sv->add_option("--degree", degree, "numerator total-degree bound (default heuristic)");
    sv->add_option("--powers", powers, "Pi powers for the complete bound guess");
    sv->add_option("--seed", seed, "seed for the evaluation points");

    CLI::App* st = app.add_subcommand("selftest", "run the planted-instance suites");
    st->add_option("--cases", cases, "cases per suite (default 50)");
    st->add_option("--seed", seed, "base seed (env ORESOLVE_SELFTEST_SEED overrides)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sp->parsed()) return cmd_spread(field_text, a_text, b_text, gen_name, seed);
        if (rr->parsed()) return cmd_rowreduce(file);
        if (rg->parsed()) return cmd_regularize(file);
        if (db->parsed()) return cmd_denbound(file, merge, powers, seed);
        if (sv->parsed()) return cmd_solve(file, denbound_arg, degree, powers, seed);
        if (st->parsed()) return cmd_selftest(cases, seed);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
