#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jkres/corpus.hpp"
#include "jkres/json_io.hpp"
#include "jkres/models.hpp"
#include "jkres/oracle.hpp"
#include "jkres/partition.hpp"
#include "jkres/selftest.hpp"

namespace {

using namespace jkres;

constexpr unsigned long long kDefaultBudget = 10000000ULL;

struct Common {
    std::string file;
    std::string format = "json";
    std::string chamber_point;
    unsigned long long budget = 0; // 0: fall back to JKRES_BUDGET, then default
    bool use_oracle = false;
    bool do_check = false;
    bool symbolic = false;
};

void add_io_flags(CLI::App* cmd, Common& c) {
    cmd->add_option("--file", c.file, "read the instance JSON from this file (default: stdin)");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

void add_budget_flag(CLI::App* cmd, Common& c) {
    cmd->add_option("--budget", c.budget, "enumeration table cap (overrides JKRES_BUDGET)");
}

unsigned long long effective_budget(const Common& c) {
    if (c.budget > 0) return c.budget;
    if (const char* env = std::getenv("JKRES_BUDGET")) {
        try {
            unsigned long long v = std::stoull(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadInput, "JKRES_BUDGET is not a positive integer");
        }
    }
    return kDefaultBudget;
}

Json read_instance(const Common& c) {
    std::string text;
    if (!c.file.empty()) {
        std::ifstream in(c.file);
        if (!in) throw Error(ErrorCode::BadInput, "cannot open " + c.file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::BadInput, std::string("malformed JSON: ") + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.contains(key))
        throw Error(ErrorCode::BadInput, std::string("missing \"") + key + "\" field");
    return j.at(key);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

RatVec parse_point(const std::string& text, int expected_len) {
    RatVec out;
    for (const std::string& part : split(text, ','))
        out.push_back(Rational::parse(part));
    if (static_cast<int>(out.size()) != expected_len)
        throw Error(ErrorCode::BadInput, "point has wrong length");
    return out;
}

IntVec parse_int_list(const std::string& text) {
    IntVec out;
    for (const std::string& part : split(text, ','))
        out.push_back(parse_int(part));
    return out;
}

// The chamber for the symbolic commands: --chamber-point wins, otherwise the
// instance's "xi" field.
Chamber chamber_from_request(const LinearSystem& s, const Json& j, const Common& c) {
    if (!c.chamber_point.empty())
        return resolve_chamber(s, parse_point(c.chamber_point, s.r));
    if (j.contains("xi")) return resolve_chamber(s, rat_vec_from_json(field(j, "xi"), s.r));
    throw Error(ErrorCode::BadInput, "need --chamber-point or an \"xi\" field to pick a chamber");
}

void print_text(const Json& doc, std::ostream& os, const std::string& prefix) {
    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            std::string name = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object())
                print_text(value, os, name);
            else if (value.is_string())
                os << name << ": " << value.get<std::string>() << "\n";
            else
                os << name << ": " << value.dump() << "\n";
        }
    } else {
        os << doc.dump() << "\n";
    }
}

void emit(const Json& doc, const Common& c) {
    if (c.format == "text")
        print_text(doc, std::cout, "");
    else
        std::cout << doc.dump(2) << "\n";
}

int run_chamber(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    Chamber ch = resolve_chamber(s, rat_vec_from_json(field(j, "xi"), s.r));
    emit(chamber_to_json(ch), c);
    return 0;
}

int run_volume(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    RatVec xi = rat_vec_from_json(field(j, "xi"), s.r);
    VolumeResult v = volume(s, xi);
    Json out;
    out["volume"] = v.value.str();
    if (!v.feasible) out["feasible"] = false;
    if (c.symbolic && v.feasible) {
        ChamberPolynomial p = volume_polynomial(s, resolve_chamber(s, xi));
        out["polynomial"] = poly_to_json(p.poly, s.r);
    }
    int rc = 0;
    if (c.do_check) {
        IntVec ixi(xi.size());
        for (size_t i = 0; i < xi.size(); ++i) {
            if (!xi[i].is_integer())
                throw Error(ErrorCode::BadInput, "--check needs an integral xi");
            ixi[i] = xi[i].to_int();
        }
        Rational oracle = oracle_volume(s, ixi, effective_budget(c));
        out["oracle"] = oracle.str();
        out["agree"] = (oracle == v.value);
        if (oracle != v.value) rc = 1;
    }
    emit(out, c);
    return rc;
}

int run_count(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    IntVec xi = int_vec_from_json(field(j, "xi"), s.r);
    Json out;
    int rc = 0;
    if (c.use_oracle) {
        out["count"] = int_to_string(dp_count(s, xi, effective_budget(c)));
    } else {
        CountResult r = count(s, xi);
        out["count"] = int_to_string(r.value);
        if (!r.feasible) out["feasible"] = false;
        if (c.symbolic && r.feasible) {
            ChamberPolynomial p = count_polynomial(s, resolve_chamber(s, to_rational_vec(xi)));
            out["polynomial"] = poly_to_json(p.poly, s.r);
        }
        if (c.do_check) {
            Int oracle = dp_count(s, xi, effective_budget(c));
            out["oracle"] = int_to_string(oracle);
            out["agree"] = (oracle == r.value);
            if (oracle != r.value) rc = 1;
        }
    }
    emit(out, c);
    return rc;
}

int run_volume_poly(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    Chamber ch = chamber_from_request(s, j, c);
    ChamberPolynomial p = volume_polynomial(s, ch);
    Json out;
    out["chamber"] = chamber_to_json(ch);
    out["volume_polynomial"] = poly_to_json(p.poly, s.r);
    emit(out, c);
    return 0;
}

int run_count_poly(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    Chamber ch = chamber_from_request(s, j, c);
    ChamberPolynomial p = count_polynomial(s, ch);
    Json out;
    out["chamber"] = chamber_to_json(ch);
    out["count_polynomial"] = poly_to_json(p.poly, s.r);
    emit(out, c);
    return 0;
}

int run_ehrhart(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    IntVec xi = int_vec_from_json(field(j, "xi"), s.r);
    EhrhartPolynomial e = ehrhart(s, xi, effective_budget(c));
    Json out;
    out["ehrhart"] = ehrhart_to_json(e);
    emit(out, c);
    return 0;
}

int run_toric(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    if (!j.contains("p")) throw Error(ErrorCode::BadInput, "missing \"p\" polynomial");
    MPoly<Rational> p = poly_from_json(field(j, "p"));
    Chamber ch = chamber_from_request(s, j, c);
    Json out;
    out["integral"] = toric_integral(s, ch, p).str();
    emit(out, c);
    return 0;
}

int run_oracle_count(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    IntVec xi = int_vec_from_json(field(j, "xi"), s.r);
    Json out;
    out["count"] = int_to_string(dp_count(s, xi, effective_budget(c)));
    emit(out, c);
    return 0;
}

int run_oracle_volume(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    IntVec xi = int_vec_from_json(field(j, "xi"), s.r);
    Json out;
    out["volume"] = oracle_volume(s, xi, effective_budget(c)).str();
    emit(out, c);
    return 0;
}

int run_check(const Common& c) {
    Json j = read_instance(c);
    LinearSystem s = system_from_json(j);
    IntVec xi = int_vec_from_json(field(j, "xi"), s.r);
    unsigned long long budget = effective_budget(c);
    bool agree = true;
    Json out;

    Rational v = volume(s, to_rational_vec(xi)).value;
    Rational ov = oracle_volume(s, xi, budget);
    out["volume"] = Json{{"residues", v.str()}, {"oracle", ov.str()}};
    agree = agree && (v == ov);

    if (s.unimodular) {
        Int n1 = count(s, xi).value;
        Int n2 = dp_count(s, xi, budget);
        out["count"] = Json{{"residues", int_to_string(n1)}, {"oracle", int_to_string(n2)}};
        agree = agree && (n1 == n2);
    }
    out["agree"] = agree;
    emit(out, c);
    return agree ? 0 : 1;
}

int run_selftest(const Common& c, bool quick) {
    auto results = jkres::run_selftest(quick);
    bool all = true;
    for (const CriterionResult& r : results) all = all && r.passed;
    if (c.format == "text") {
        for (const CriterionResult& r : results) {
            std::ostringstream line;
            line << (r.passed ? "[PASS] " : "[FAIL] ") << r.number << ". " << r.name << " — "
                 << r.detail;
            std::cout << line.str() << "\n";
        }
        std::cout << (all ? "all criteria passed" : "FAILURES PRESENT") << "\n";
    } else {
        // Timing strings stay out of the JSON document so identical requests
        // keep byte-identical output.
        Json arr = Json::array();
        for (const CriterionResult& r : results)
            arr.push_back(Json{{"number", r.number}, {"name", r.name}, {"passed", r.passed}});
        Json out;
        out["criteria"] = arr;
        out["all_passed"] = all;
        std::cout << out.dump(2) << "\n";
    }
    return all ? 0 : 1;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::BudgetExceeded: return 3;
        case ErrorCode::NonUnimodular: return 4;
        case ErrorCode::Internal: return 1;
        default: return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chamber / volume / lattice-count toolkit for partition polytopes"};
    app.require_subcommand(1);
    Common c;

    CLI::App* cmd_chamber = app.add_subcommand("chamber", "resolve the chamber of xi");
    add_io_flags(cmd_chamber, c);

    CLI::App* cmd_volume = app.add_subcommand("volume", "volume of the partition polytope at xi");
    add_io_flags(cmd_volume, c);
    add_budget_flag(cmd_volume, c);
    cmd_volume->add_flag("--check", c.do_check, "also run the enumeration oracle and compare");
    cmd_volume->add_flag("--symbolic", c.symbolic, "include the chamber volume polynomial");

    CLI::App* cmd_count = app.add_subcommand("count", "lattice-point count at xi (residue route)");
    add_io_flags(cmd_count, c);
    add_budget_flag(cmd_count, c);
    cmd_count->add_flag("--oracle", c.use_oracle, "use the enumeration oracle instead");
    cmd_count->add_flag("--check", c.do_check, "also run the enumeration oracle and compare");
    cmd_count->add_flag("--symbolic", c.symbolic, "include the chamber counting polynomial");

    CLI::App* cmd_vpoly = app.add_subcommand("volume-poly", "symbolic volume polynomial of a chamber");
    add_io_flags(cmd_vpoly, c);
    cmd_vpoly->add_option("--chamber-point", c.chamber_point,
                          "comma-separated point selecting the chamber");

    CLI::App* cmd_cpoly = app.add_subcommand("count-poly", "symbolic counting polynomial of a chamber");
    add_io_flags(cmd_cpoly, c);
    cmd_cpoly->add_option("--chamber-point", c.chamber_point,
                          "comma-separated point selecting the chamber");

    CLI::App* cmd_ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial of the polytope at xi");
    add_io_flags(cmd_ehr, c);
    add_budget_flag(cmd_ehr, c);

    CLI::App* cmd_toric = app.add_subcommand("toric-integral",
                                             "intersection-number functional of a chamber");
    add_io_flags(cmd_toric, c);
    cmd_toric->add_option("--chamber-point", c.chamber_point,
                          "comma-separated point selecting the chamber");

    CLI::App* cmd_ocount = app.add_subcommand("oracle-count", "lattice-point count by enumeration");
    add_io_flags(cmd_ocount, c);
    add_budget_flag(cmd_ocount, c);

    CLI::App* cmd_ovol = app.add_subcommand("oracle-volume", "volume by dilation interpolation");
    add_io_flags(cmd_ovol, c);
    add_budget_flag(cmd_ovol, c);

    CLI::App* cmd_check = app.add_subcommand("check", "run residue and oracle routes, compare");
    add_io_flags(cmd_check, c);
    add_budget_flag(cmd_check, c);

    CLI::App* cmd_gen = app.add_subcommand("gen", "emit a model system as instance JSON");
    cmd_gen->require_subcommand(1);
    int gen_rank = 1;
    std::string gen_rows, gen_cols, gen_arcs;
    CLI::App* gen_kostant = cmd_gen->add_subcommand("kostant", "type-A positive-root system");
    gen_kostant->add_option("--rank", gen_rank, "Lie algebra rank")->required();
    add_io_flags(gen_kostant, c);
    CLI::App* gen_transport = cmd_gen->add_subcommand("transport", "transportation system + margins");
    gen_transport->add_option("--rows", gen_rows, "comma-separated row margins")->required();
    gen_transport->add_option("--cols", gen_cols, "comma-separated column margins")->required();
    add_io_flags(gen_transport, c);
    CLI::App* gen_network = cmd_gen->add_subcommand("network", "incidence system of a digraph");
    gen_network->add_option("--arcs", gen_arcs, "arcs as \"u>v,u>v,...\"")->required();
    add_io_flags(gen_network, c);

    CLI::App* cmd_selftest = app.add_subcommand("selftest", "run the acceptance checks");
    bool quick = false;
    cmd_selftest->add_flag("--quick", quick, "only the fast subset (1, 2, 5)");
    add_io_flags(cmd_selftest, c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_chamber->parsed()) return run_chamber(c);
        if (cmd_volume->parsed()) return run_volume(c);
        if (cmd_count->parsed()) return run_count(c);
        if (cmd_vpoly->parsed()) return run_volume_poly(c);
        if (cmd_cpoly->parsed()) return run_count_poly(c);
        if (cmd_ehr->parsed()) return run_ehrhart(c);
        if (cmd_toric->parsed()) return run_toric(c);
        if (cmd_ocount->parsed()) return run_oracle_count(c);
        if (cmd_ovol->parsed()) return run_oracle_volume(c);
        if (cmd_check->parsed()) return run_check(c);
        if (cmd_selftest->parsed()) return run_selftest(c, quick);
        if (cmd_gen->parsed()) {
            Json out;
            if (gen_kostant->parsed()) {
                out = system_to_json(kostant_system(gen_rank));
            } else if (gen_transport->parsed()) {
                IntVec rows = parse_int_list(gen_rows);
                IntVec cols = parse_int_list(gen_cols);
                LinearSystem s =
                    transportation_system(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
                out = system_to_json(s);
                out["xi"] = int_vec_to_json(margins_to_xi(rows, cols));
            } else if (gen_network->parsed()) {
                std::vector<std::pair<int, int>> arcs;
                for (const std::string& part : split(gen_arcs, ',')) {
                    size_t pos = part.find('>');
                    if (pos == std::string::npos)
                        throw Error(ErrorCode::BadInput, "arc must look like u>v: " + part);
                    arcs.emplace_back(static_cast<int>(parse_int(part.substr(0, pos)).get_si()),
                                      static_cast<int>(parse_int(part.substr(pos + 1)).get_si()));
                }
                out = system_to_json(network_system(arcs));
            }
            emit(out, c);
            return 0;
        }
    } catch (const Error& e) {
        Json err;
        err["error"] = error_code_name(e.code());
        err["detail"] = e.detail();
        std::cout << err.dump(2) << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        Json err;
        err["error"] = "Internal";
        err["detail"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 0;
}
