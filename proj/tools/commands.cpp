#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include <zqdyn/analysis.hpp>
#include <zqdyn/phase_graph.hpp>
#include <zqdyn/product.hpp>

#include "system_file.hpp"

namespace zqdyn::cli {

namespace {

using json = nlohmann::ordered_json;

json matrix_to_json(const MatrixZq& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_matrix(std::ostream& out, const MatrixZq& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j);
        out << "\n";
    }
}

std::string moduli_string(const RingSpec& ring) {
    std::string s;
    for (std::size_t i = 0; i < ring.moduli().size(); ++i)
        s += (i ? "," : "") + std::to_string(ring.moduli()[i]);
    return s;
}

json header_json(const SystemFile& sys, const std::string& command) {
    json j;
    j["command"] = command;
    j["input"] = sys.source_path;
    j["moduli"] = sys.ring.moduli();
    j["n"] = sys.n;
    return j;
}

void print_header(std::ostream& out, const SystemFile& sys) {
    out << "system: " << sys.source_path << "\n"
        << "ring: Z_" << moduli_string(sys.ring) << ", n = " << sys.n << "\n";
}

const char* shortcut_name(ShortcutVerdict v) {
    switch (v) {
        case ShortcutVerdict::NotFixedPoint: return "unit_determinant";
        case ShortcutVerdict::FixedPointIdentity: return "identity";
        case ShortcutVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

int cmd_lfps(const SystemFile& sys, const CommandOptions& opts, std::ostream& out) {
    const PeriodSearchConfig cfg{opts.max_period, opts.early_exit};
    const u64 bound = iteration_bound(sys.n, sys.ring);

    bool any_unit_det = false, all_identity = true, overall = true;
    json components = json::array();
    for (const auto& [modulus, m] : decompose_product(sys.system)) {
        const ShortcutVerdict sv = unit_det_shortcut(m);
        bool verdict;
        switch (sv) {
            case ShortcutVerdict::FixedPointIdentity: verdict = true; break;
            case ShortcutVerdict::NotFixedPoint: verdict = false; break;
            default: verdict = lfps_test(m, cfg); break;
        }
        any_unit_det |= sv == ShortcutVerdict::NotFixedPoint;
        all_identity &= sv == ShortcutVerdict::FixedPointIdentity;
        overall &= verdict;
        json c;
        c["modulus"] = modulus;
        c["bound"] = iteration_bound(sys.n, RingSpec({modulus}));
        c["shortcut"] = shortcut_name(sv);
        c["fixed_point_system"] = verdict;
        components.push_back(std::move(c));
    }
    const bool by_shortcut = any_unit_det || all_identity;

    json j = header_json(sys, "lfps");
    j["bound"] = bound;
    j["fixed_point_system"] = overall;
    j["decided_by_shortcut"] = by_shortcut;
    j["components"] = std::move(components);

    if (opts.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        print_header(out, sys);
        out << "bound: " << bound << "\n"
            << "decided by shortcut: " << (by_shortcut ? "true" : "false") << "\n";
        for (const json& c : j["components"]) {
            out << "  component mod " << c["modulus"] << ": bound " << c["bound"] << ", shortcut "
                << c["shortcut"].get<std::string>() << ", fixed point system "
                << (c["fixed_point_system"].get<bool>() ? "true" : "false") << "\n";
        }
        out << "fixed point system: " << (overall ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_stabilize(const SystemFile& sys, const CommandOptions& opts, std::ostream& out) {
    const PeriodSearchConfig cfg{opts.max_period, opts.early_exit};
    const ProductStabilization rep = stabilization_report(sys.system, cfg);

    json j = header_json(sys, "stabilize");
    j["bound"] = rep.bound;
    j["fixed_point_system"] = rep.is_fixed_point;
    if (rep.minimal_fixed_exponent)
        j["minimal_fixed_exponent"] = *rep.minimal_fixed_exponent;
    else
        j["minimal_fixed_exponent"] = nullptr;
    json components = json::array();
    for (std::size_t i = 0; i < rep.stabilized.size(); ++i) {
        json c;
        c["modulus"] = sys.ring.moduli()[i];
        c["stabilized"] = matrix_to_json(rep.stabilized[i]);
        components.push_back(std::move(c));
    }
    j["components"] = std::move(components);

    if (opts.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        print_header(out, sys);
        out << "bound: " << rep.bound << "\n";
        for (std::size_t i = 0; i < rep.stabilized.size(); ++i) {
            out << "stabilized matrix (A^" << rep.bound << ") mod " << sys.ring.moduli()[i]
                << ":\n";
            print_matrix(out, rep.stabilized[i], "  ");
        }
        out << "minimal fixed exponent: ";
        if (rep.minimal_fixed_exponent)
            out << *rep.minimal_fixed_exponent << "\n";
        else
            out << "none\n";
        out << "fixed point system: " << (rep.is_fixed_point ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_charpoly(const SystemFile& sys, const CommandOptions& opts, std::ostream& out) {
    json j = header_json(sys, "charpoly");
    json components = json::array();
    for (const auto& [modulus, m] : decompose_product(sys.system)) {
        const PolyZq ch = charpoly_berkowitz(m);
        json c;
        c["modulus"] = modulus;
        c["coefficients_ascending"] = ch.coeffs();
        components.push_back(std::move(c));
    }
    j["components"] = std::move(components);

    if (opts.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        print_header(out, sys);
        for (const json& c : j["components"]) {
            out << "charpoly mod " << c["modulus"] << " (coefficients ascending):";
            for (const json& v : c["coefficients_ascending"]) out << " " << v;
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_cycles(const SystemFile& sys, const CommandOptions& opts, std::ostream& out) {
    const PeriodSearchConfig cfg{opts.max_period, opts.early_exit};
    const CycleStructure cs = cycle_structure(sys.system, cfg);

    json j = header_json(sys, "cycles");
    j["eventual_period"] = cs.eventual_period;
    json table = json::array();
    for (const PeriodClass& c : cs.classes) {
        json row;
        row["k"] = c.k;
        row["N"] = c.points_dividing.str();
        row["P"] = c.points_exact.str();
        row["C"] = c.cycles.str();
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    j["total_periodic"] = cs.total_periodic.str();

    if (opts.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        print_header(out, sys);
        out << "eventual period: " << cs.eventual_period << "\n"
            << "k N_k P_k C_k\n";
        for (const PeriodClass& c : cs.classes)
            out << c.k << " " << c.points_dividing << " " << c.points_exact << " " << c.cycles
                << "\n";
        out << "total periodic points: " << cs.total_periodic << "\n";
    }
    return kExitOk;
}

int cmd_phase_graph(const SystemFile& sys, const CommandOptions& opts, std::ostream& out,
                    std::ostream& err) {
    const PhaseGraph g = enumerate_phase_graph(sys.system, opts.oracle_cap);
    std::ofstream file;
    std::ostream* target = &out;
    if (!opts.output_path.empty()) {
        file.open(opts.output_path);
        if (!file) {
            err << "error: cannot write '" << opts.output_path << "'\n";
            return kExitInvalid;
        }
        target = &file;
    }
    *target << "digraph {\n";
    for (u64 s = 0; s < g.state_count; ++s)
        *target << "  " << s << " -> " << g.successor[s] << ";\n";
    *target << "}\n";
    return kExitOk;
}

int cmd_crosscheck(const SystemFile& sys, const CommandOptions& opts, std::ostream& out) {
    const PeriodSearchConfig cfg{opts.max_period, opts.early_exit};
    const CrosscheckReport rep = oracle_crosscheck(sys.system, opts.oracle_cap, cfg);

    json j = header_json(sys, "crosscheck");
    j["states"] = rep.state_count;
    j["pass"] = rep.pass;
    j["mismatches"] = rep.mismatches;

    if (opts.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        print_header(out, sys);
        out << "states: " << rep.state_count << "\n";
        for (const std::string& m : rep.mismatches) out << "mismatch: " << m << "\n";
        out << "crosscheck: " << (rep.pass ? "pass" : "fail") << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::string& subcommand, const std::string& input_path,
                const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.format != "text" && opts.format != "json") {
        err << "error: unknown format '" << opts.format << "'\n";
        return kExitInvalid;
    }
    try {
        const SystemFile sys = load_system_file(input_path);
        for (const std::string& w : sys.warnings) err << "warning: " << w << "\n";

        if (subcommand == "lfps") return cmd_lfps(sys, opts, out);
        if (subcommand == "stabilize") return cmd_stabilize(sys, opts, out);
        if (subcommand == "charpoly") return cmd_charpoly(sys, opts, out);
        if (subcommand == "cycles") return cmd_cycles(sys, opts, out);
        if (subcommand == "phase-graph") return cmd_phase_graph(sys, opts, out, err);
        if (subcommand == "crosscheck") return cmd_crosscheck(sys, opts, out);
        err << "error: unknown subcommand '" << subcommand << "'\n";
        return kExitInvalid;
    } catch (const PeriodExceedsCap& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const StateSpaceTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const SystemFileError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace zqdyn::cli
