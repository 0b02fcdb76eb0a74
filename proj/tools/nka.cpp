// Batch front door: descriptor parsing, command dispatch, structured output.
// Exit codes: 0 success, 2 input error, 3 precondition or budget refusal.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nka/amenability.hpp"
#include "nka/catalogue.hpp"
#include "nka/cohomology.hpp"
#include "nka/descriptor.hpp"
#include "nka/errors.hpp"
#include "nka/field.hpp"
#include "nka/quasimorphism.hpp"
#include "nka/topo.hpp"

namespace {

using nka::den;
using nka::num;
using nka::Rational;
using ordered_json = nlohmann::ordered_json;

std::string format_choice;  // json, text or csv

void emit(const ordered_json& report) {
    if (format_choice == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // text / csv: flat key,value lines in document order
    const char sep = format_choice == "csv" ? ',' : ' ';
    std::function<void(const std::string&, const ordered_json&)> walk =
        [&](const std::string& prefix, const ordered_json& node) {
            if (node.is_object()) {
                for (const auto& [k, v] : node.items())
                    walk(prefix.empty() ? k : prefix + "." + k, v);
            } else if (node.is_array()) {
                int i = 0;
                for (const auto& v : node) walk(prefix + "[" + std::to_string(i++) + "]", v);
            } else {
                std::cout << prefix << sep
                          << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
            }
        };
    walk("", report);
}

ordered_json norm_to_json(const nka::ExtendedNorm& n) {
    if (n.is_infinity()) return "infinity";
    auto v = n.value();
    if (v <= nka::Integer(std::numeric_limits<std::int64_t>::max()))
        return v.convert_to<std::int64_t>();
    return v.str();
}

std::string rational_str(const Rational& r) {
    return den(r) == 1 ? num(r).str() : num(r).str() + "/" + den(r).str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(nka::Integer(s));
    return Rational(nka::Integer(s.substr(0, slash)), nka::Integer(s.substr(slash + 1)));
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nka::input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw nka::input_error("parse error in '" + path + "': " + e.what());
    }
    return j;
}

nka::GroupDescriptor load_descriptor(const std::string& spec) {
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return nka::GroupDescriptor::from_json(load_json_file(spec));
    if (std::filesystem::exists(spec))
        return nka::GroupDescriptor::from_json(load_json_file(spec));
    return nka::descriptor_from_string(spec);
}

nka::GroupPtr load_group(const std::string& spec) {
    using nka::FiniteGroup;
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
        auto j = load_json_file(spec);
        if (j.contains("table"))
            return std::make_shared<FiniteGroup>(
                FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>()));
        if (j.contains("generators")) {
            const auto& g = j.at("generators");
            return std::make_shared<FiniteGroup>(FiniteGroup::from_permutation_generators(
                g.at("degree").get<int>(), g.at("perms").get<std::vector<std::vector<int>>>()));
        }
        throw nka::input_error("group file needs a 'table' or 'generators' entry");
    }
    if (spec == "klein4")
        return std::make_shared<FiniteGroup>(
            FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    if (spec.rfind("Z/", 0) == 0) {
        auto x = spec.find('x');
        if (x == std::string::npos)
            return std::make_shared<FiniteGroup>(FiniteGroup::cyclic(std::stol(spec.substr(2))));
        // Z/axZ/b
        long a = std::stol(spec.substr(2, x - 2));
        long b = std::stol(spec.substr(x + 3));
        return std::make_shared<FiniteGroup>(
            FiniteGroup::direct_product(FiniteGroup::cyclic(a), FiniteGroup::cyclic(b)));
    }
    if (spec.rfind("S", 0) == 0 && spec.size() == 2)
        return std::make_shared<FiniteGroup>(FiniteGroup::symmetric(spec[1] - '0'));
    throw nka::input_error("unknown group '" + spec + "' (try Z/<n>, Z/<a>xZ/<b>, S<n>, klein4 or a .json file)");
}

nka::QmTable load_table(const nlohmann::json& j) {
    nka::QmTable f;
    f.p = j.at("p").get<long>();
    if (j.contains("cyclic"))
        f.domain = std::make_shared<nka::FiniteGroup>(
            nka::FiniteGroup::cyclic(j.at("cyclic").get<long>()));
    else if (j.contains("table"))
        f.domain = std::make_shared<nka::FiniteGroup>(
            nka::FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>()));
    else
        throw nka::input_error("qm table needs a 'cyclic' or 'table' domain");
    for (const auto& v : j.at("values")) f.values.push_back(rational_from_string(v.get<std::string>()));
    if (f.values.size() != static_cast<std::size_t>(f.domain->order()))
        throw nka::input_error("qm table: wrong number of values");
    return f;
}

nka::SimplicialComplex load_complex(const std::string& spec) {
    if (std::filesystem::exists(spec) ||
        (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")) {
        auto j = load_json_file(spec);
        return nka::SimplicialComplex::from_maximal(
            j.at("vertices").get<int>(), j.at("maximal").get<std::vector<std::vector<int>>>());
    }
    return nka::builtin_simplicial(spec);
}

int run_field(const std::string& label) {
    auto fd = nka::field_from_label(label);
    ordered_json report;
    report["command"] = "field";
    report["options"] = {{"label", label}};
    ordered_json rec;
    for (const auto& [k, v] : fd.record()) rec[k] = v;
    report["result"] = rec;
    emit(report);
    return 0;
}

int run_norm(const std::string& group_spec, const std::string& field_label, int depth) {
    auto g = load_descriptor(group_spec);
    auto fd = nka::field_from_label(field_label);
    auto verdict = nka::amenability_norm(g, fd, depth);
    ordered_json report;
    report["command"] = "norm";
    report["options"] = {{"group", group_spec}, {"field", field_label}, {"depth", depth}};
    ordered_json result;
    result["group"] = g.describe();
    result["norm"] = norm_to_json(verdict.norm);
    result["certified"] = verdict.certified;
    if (!verdict.certified) result["note"] = "lower bound only";
    result["reason"] = nka::reason_tag(verdict.reason);
    report["result"] = result;
    if (format_choice == "text") {
        std::cout << "norm " << (verdict.certified ? "= " : ">= ") << verdict.norm.str() << "  ("
                  << nka::reason_tag(verdict.reason) << (verdict.certified ? "" : ", lower bound only")
                  << ")\n";
        return 0;
    }
    emit(report);
    return 0;
}

int run_cohomology(const std::string& group_spec, long field_char, int degree) {
    auto group = load_group(group_spec);
    auto summary = nka::cohomology_dim(group, field_char, degree);
    ordered_json report;
    report["command"] = "cohomology";
    report["options"] = {{"group", group_spec}, {"char", field_char}, {"degree", degree}};
    ordered_json result;
    result["group"] = group->name();
    result["degree"] = summary.degree;
    result["dim_cocycles"] = summary.dim_cocycles;
    result["dim_coboundaries"] = summary.dim_coboundaries;
    result["dim_cohomology"] = summary.dim_cohomology;
    ordered_json reps = ordered_json::array();
    for (const auto& rep : summary.sample_representatives) {
        ordered_json entries = ordered_json::array();
        for (std::size_t flat = 0; flat < rep.size(); ++flat) {
            if (rep[flat] == 0) continue;
            ordered_json e;
            e["tuple"] = rep.unflatten(flat);
            e["value"] = rational_str(rep[flat]);
            entries.push_back(std::move(e));
        }
        reps.push_back(std::move(entries));
    }
    result["representatives"] = std::move(reps);
    report["result"] = result;
    emit(report);
    return 0;
}

int run_qm(const std::string& mode, long p, int N, const std::string& table_path) {
    ordered_json report;
    report["command"] = "qm";
    report["options"] = {{"mode", mode}, {"p", p}, {"N", N}, {"table", table_path}};
    ordered_json result;
    if (mode == "section") {
        auto sd = nka::section_defect(p, N);
        result["defect"] = rational_str(sd.defect);
        if (sd.attained_at) {
            result["bound_attained_at"] = {sd.attained_at->first.str(),
                                           sd.attained_at->second.str()};
        }
        // projection round-trip on the truncation when small enough
        if (N <= 10 && nka::pow_integer(nka::Integer(p), N) <= 4096) {
            auto table = nka::section_table(p, N);
            bool round_trip = true;
            for (int k = 0; k < table.domain->order(); ++k) {
                auto e = nka::PruferElement::from_index(p, N, k);
                if (!(nka::project_to_prufer(nka::standard_section(e), p) == e)) round_trip = false;
            }
            result["projection_round_trip"] = round_trip;
        }
    } else if (mode == "defect") {
        if (table_path.empty()) throw nka::input_error("qm defect: --table required");
        auto f = load_table(load_json_file(table_path));
        result["defect"] = rational_str(nka::defect(f));
    } else if (mode == "laurent") {
        auto rep = nka::laurent_section_check(N, p);
        result["homomorphism"] = rep.homomorphism;
        result["defect"] = rational_str(rep.defect);
        result["pairs_checked"] = rep.pairs_checked;
    } else if (mode == "product") {
        if (table_path.empty()) throw nka::input_error("qm product: --table required");
        auto doc = load_json_file(table_path);
        std::vector<nka::QmTable> tables;
        for (const auto& t : doc.at("tables")) tables.push_back(load_table(t));
        auto combined = nka::product_combine(tables);
        result["combined_order"] = combined.domain->order();
        result["combined_defect"] = rational_str(nka::defect(combined));
        ordered_json defects = ordered_json::array();
        for (const auto& t : tables) defects.push_back(rational_str(nka::defect(t)));
        result["component_defects"] = std::move(defects);
    } else {
        throw nka::input_error("qm: unknown mode '" + mode + "'");
    }
    report["result"] = result;
    emit(report);
    return 0;
}

int run_topo(const std::string& complex_spec, const std::string& op, long field_char, long p,
             int degree) {
    ordered_json report;
    report["command"] = "topo";
    report["options"] = {{"complex", complex_spec}, {"op", op}, {"char", field_char}, {"p", p},
                         {"degree", degree}};
    ordered_json result;
    if (op == "dims") {
        nka::CellComplex cc = [&] {
            if (complex_spec == "torus_cw") return nka::builtin_cell(complex_spec);
            if (std::filesystem::exists(complex_spec)) {
                auto j = load_json_file(complex_spec);
                if (j.contains("cells")) {  // explicit cell/boundary-matrix form
                    nka::CellComplex raw;
                    raw.cells = j.at("cells").get<std::vector<int>>();
                    raw.boundary =
                        j.at("boundary").get<std::vector<std::vector<std::vector<long>>>>();
                    raw.validate();
                    return raw;
                }
            }
            return load_complex(complex_spec).to_cells();
        }();
        result["dims"] = nka::cellular_cohomology_dims(cc, field_char);
    } else if (op == "subdiv") {
        auto x = load_complex(complex_spec);
        auto rep = nka::subdivision_norm_check(x, degree, field_char);
        result["dual_norm_bounded"] = rep.dual_norm_bounded;
        result["dims_preserved"] = rep.dims_preserved;
        result["induced_iso"] = rep.induced_iso;
        result["dims_before"] = rep.dims_before;
        result["dims_after"] = rep.dims_after;
    } else if (op == "mv") {
        nka::MvInstance inst = [&] {
            if (complex_spec == "wedge" || complex_spec == "torus")
                return nka::builtin_mv(complex_spec);
            auto j = load_json_file(complex_spec);
            auto x = nka::SimplicialComplex::from_maximal(
                j.at("vertices").get<int>(), j.at("maximal").get<std::vector<std::vector<int>>>());
            auto a = x.subcomplex(j.at("a_simplices").get<std::vector<std::vector<int>>>());
            auto b = x.subcomplex(j.at("b_simplices").get<std::vector<std::vector<int>>>());
            return nka::MvInstance{std::move(x), std::move(a), std::move(b)};
        }();
        auto rep = nka::mayer_vietoris_check(inst.x, inst.a, inst.b, field_char);
        result["exact"] = rep.exact;
        result["dims_x"] = rep.dims_x;
        result["dims_a"] = rep.dims_a;
        result["dims_b"] = rep.dims_b;
        result["dims_intersection"] = rep.dims_ab;
        result["alternating_sum"] = rep.alternating_sum;
        if (!rep.failures.empty()) result["failures"] = rep.failures;
    } else if (op == "volume") {
        auto x = load_complex(complex_spec);
        auto cert = nka::na_simplicial_volume(x, p);
        result["volume"] = rational_str(cert.max_norm);
        result["cycle"] = cert.cycle;
        result["top_kernel_rank"] = cert.top_kernel_rank;
        result["primitive"] = cert.primitive;
        result["lower_bound_certified"] = cert.lower_bound_certified;
    } else {
        throw nka::input_error("topo: unknown op '" + op + "'");
    }
    report["result"] = result;
    emit(report);
    return 0;
}

int run_catalogue(int depth) {
    auto rows = nka::norm_catalogue(depth);
    if (format_choice == "json") {
        ordered_json report;
        report["command"] = "catalogue";
        report["options"] = {{"depth", depth}};
        ordered_json out = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["family"] = r.family;
            row["params"] = r.params;
            row["prime"] = r.prime;
            row["norm"] = norm_to_json(r.norm);
            row["certified"] = r.certified;
            row["theorem_tag"] = r.rule;
            out.push_back(std::move(row));
        }
        report["result"] = out;
        emit(report);
    } else {
        std::cout << nka::catalogue_csv(rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact non-Archimedean amenability and bounded cohomology calculator"};
    app.require_subcommand(1);
    app.add_option("--format", format_choice, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->default_val("json");

    std::string field_label, group_spec, mode = "section", table_path, complex_spec, topo_op = "dims";
    long field_char = 0, prime = 2;
    int depth = 5, degree = 1, truncation = 1;

    auto* field_cmd = app.add_subcommand("field", "resolve a field label");
    field_cmd->add_option("--label", field_label, "field label")->required();

    auto* norm_cmd = app.add_subcommand("norm", "amenability norm of a descriptor");
    norm_cmd->add_option("--group", group_spec, "descriptor string or .json path")->required();
    norm_cmd->add_option("--field", field_label, "field label")->required();
    norm_cmd->add_option("--depth", depth, "sampling depth for uncertified streams");

    auto* coh_cmd = app.add_subcommand("cohomology", "bounded cohomology of a finite group");
    coh_cmd->add_option("--group", group_spec, "group name or table.json")->required();
    coh_cmd->add_option("--char", field_char, "coefficient characteristic (0 or p)");
    coh_cmd->add_option("--degree", degree, "degree")->required();

    auto* qm_cmd = app.add_subcommand("qm", "quasimorphism and defect-group reports");
    qm_cmd->add_option("--mode", mode, "section, defect, laurent or product")->required();
    qm_cmd->add_option("--p", prime, "prime");
    qm_cmd->add_option("--N", truncation, "truncation depth");
    qm_cmd->add_option("--table", table_path, "table document");

    auto* topo_cmd = app.add_subcommand("topo", "bounded cellular cohomology of finite complexes");
    topo_cmd->add_option("--complex", complex_spec, "built-in name or document")->required();
    topo_cmd->add_option("--op", topo_op, "dims, mv, subdiv or volume")->required();
    topo_cmd->add_option("--char", field_char, "coefficient characteristic (0 or p)");
    topo_cmd->add_option("--p", prime, "prime for volume");
    topo_cmd->add_option("--degree", degree, "degree for subdiv");

    auto* cat_cmd = app.add_subcommand("catalogue", "regenerate the norm catalogue");
    cat_cmd->add_option("--depth", depth, "sampling depth");

    for (auto* sub : {field_cmd, norm_cmd, coh_cmd, qm_cmd, topo_cmd, cat_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (field_cmd->parsed()) return run_field(field_label);
        if (norm_cmd->parsed()) return run_norm(group_spec, field_label, depth);
        if (coh_cmd->parsed()) return run_cohomology(group_spec, field_char, degree);
        if (qm_cmd->parsed()) return run_qm(mode, prime, truncation, table_path);
        if (topo_cmd->parsed()) return run_topo(complex_spec, topo_op, field_char, prime, degree);
        if (cat_cmd->parsed()) return run_catalogue(depth);
    } catch (const nka::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nka::budget_error& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const nka::precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const nka::descriptor_error& e) {
        std::cerr << "descriptor error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
