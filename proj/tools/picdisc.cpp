#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "picdisc/checks.hpp"
#include "picdisc/encode.hpp"
#include "picdisc/fq.hpp"
#include "picdisc/graded.hpp"
#include "picdisc/lubin_tate.hpp"
#include "picdisc/padic.hpp"
#include "picdisc/picard.hpp"
#include "picdisc/power_series.hpp"
#include "picdisc/trunc.hpp"

using json = nlohmann::ordered_json;
using namespace picdisc;

namespace {

std::string iso_now() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json envelope(const std::string& command, json params, std::uint64_t seed, bool stamp) {
    json j;
    j["schema"] = "picdisc/1";
    j["command"] = command;
    j["seed"] = seed;
    j["params"] = std::move(params);
    if (stamp) j["timestamp"] = iso_now();
    return j;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path path(out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("PICDISC_OUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path.string());
    f << text;
}

std::uint32_t power_of(std::uint64_t q, std::uint32_t p) {
    std::uint32_t r = 0;
    std::uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++r;
    }
    if (acc != q || r == 0) throw std::invalid_argument("--q must be a power of --p");
    return r;
}

RFieldPtr build_rfield(std::uint32_t p, std::int64_t e, const std::vector<std::int64_t>& eis,
                       std::int64_t prec) {
    if (!eis.empty()) {
        if (static_cast<std::int64_t>(eis.size()) != e + 1)
            throw std::invalid_argument("--eis must list e+1 coefficients, constant term first");
        return RamifiedField::make(p, eis, prec);
    }
    if (e == 1) return RamifiedField::qp(p, prec);
    throw std::invalid_argument("--eis is required when --e is greater than 1");
}

RFieldPtr parse_field_desc(const std::string& desc, std::int64_t prec) {
    if (desc.rfind("qp", 0) == 0) {
        const auto p = static_cast<std::uint32_t>(std::stoul(desc.substr(2)));
        return RamifiedField::qp(p, prec);
    }
    const auto colon = desc.find(':');
    if (colon != std::string::npos) {
        const auto p = static_cast<std::uint32_t>(std::stoul(desc.substr(0, colon)));
        std::vector<std::int64_t> eis;
        std::stringstream ss(desc.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) eis.push_back(std::stoll(tok));
        return RamifiedField::make(p, eis, prec);
    }
    throw std::invalid_argument("--field must look like qp2 or 2:-2,0,1");
}

json coeff_info(const RamifiedElem& c) {
    json j;
    j["text"] = c.str();
    if (c.is_zero())
        j["valuation"] = nullptr;
    else
        j["valuation"] = c.valuation().str();
    if (c.abs_prec() >= RamifiedElem::kExactPrec)
        j["abs_prec"] = "exact";
    else
        j["abs_prec"] = c.abs_prec();
    return j;
}

json series_coeffs_1var(const PowSeries& s) {
    json arr = json::array();
    for (int d = 1; d <= s.cap(); ++d) {
        const RamifiedElem c = s.coeff1(d);
        if (c.exact_zero()) continue;
        json entry;
        entry["k"] = d;
        entry.update(coeff_info(c));
        arr.push_back(std::move(entry));
    }
    return arr;
}

json series_coeffs_2var(const PowSeries& s) {
    json arr = json::array();
    for (const auto& e : PowSeries::basis(2, s.cap())) {
        if (e[0] + e[1] == 0) continue;
        const RamifiedElem c = s.coeff(e);
        if (c.exact_zero()) continue;
        json entry;
        entry["x"] = e[0];
        entry["y"] = e[1];
        entry.update(coeff_info(c));
        arr.push_back(std::move(entry));
    }
    return arr;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for twisted disc classes and formal group series"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read option defaults from a config file");

    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
    bool no_timestamp = false;
    app.add_option("--seed", seed, "seed recorded in the output")->capture_default_str();
    app.add_option("--out", out_path,
                   "output file; relative paths land in PICDISC_OUT_DIR when set");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp for byte-stable reruns");

    auto* po = app.add_subcommand("picard-order", "order of the disc class of a unit datum");
    po->fallthrough();
    std::uint32_t po_p = 2;
    std::uint32_t po_m = 1;
    std::uint64_t po_q = 2;
    std::string po_c;
    po->add_option("--p", po_p, "residue characteristic")->required();
    po->add_option("--m", po_m, "descent depth; the subring index is p^m")
        ->required()
        ->check(CLI::PositiveNumber);
    po->add_option("--q", po_q, "coefficient field size")->required();
    po->add_option("--c", po_c, "unit datum, e.g. \"1+T\" or \"1 + 1*t^-1*T\"")->required();

    auto* lt = app.add_subcommand("lt-series", "series attached to the model pi*X + X^q");
    lt->fallthrough();
    std::uint32_t lt_p = 2;
    std::int64_t lt_e = 1;
    std::uint64_t lt_q = 2;
    int lt_deg = 12;
    std::string lt_op;
    std::int64_t lt_a = 3;
    std::string lt_u = "3";
    std::vector<std::int64_t> lt_eis;
    lt->add_option("--p", lt_p, "residue characteristic")->required();
    lt->add_option("--e", lt_e, "ramification index")->capture_default_str();
    lt->add_option("--q", lt_q, "parameter q of the model")->required();
    lt->add_option("--deg", lt_deg, "degree cap")->check(CLI::PositiveNumber)->capture_default_str();
    lt->add_option("--op", lt_op, "series to build")
        ->required()
        ->check(CLI::IsMember({"law", "endo", "log", "exp", "h"}));
    lt->add_option("--a", lt_a, "multiplier for op endo")->capture_default_str();
    lt->add_option("--u", lt_u, "principal unit for op h, e.g. \"3\" or \"1 + pi^2\"")
        ->capture_default_str();
    lt->add_option("--eis", lt_eis, "Eisenstein coefficients, constant term first")
        ->delimiter(',');

    auto* rad = app.add_subcommand("radius", "critical radii of the disc tower");
    rad->fallthrough();
    std::uint32_t rad_p = 2;
    std::int64_t rad_e = 1;
    std::uint64_t rad_q = 2;
    std::uint32_t rad_n = 0;
    std::int64_t rad_max_n = -1;
    std::vector<std::int64_t> rad_eis;
    rad->add_option("--p", rad_p, "residue characteristic")->required();
    rad->add_option("--e", rad_e, "ramification index")->capture_default_str();
    rad->add_option("--q", rad_q, "parameter q of the model")->required();
    rad->add_option("--n", rad_n, "tower level")->capture_default_str();
    rad->add_option("--max-n", rad_max_n, "emit a table for levels 0..max-n instead");
    rad->add_option("--eis", rad_eis, "Eisenstein coefficients, constant term first")
        ->delimiter(',');

    auto* sym = app.add_subcommand("symbol", "principal symbol of a Tate polynomial");
    sym->fallthrough();
    std::string sym_field = "qp2";
    std::string sym_elem;
    sym->add_option("--field", sym_field, "field descriptor, qp2 or 2:-2,0,1")
        ->capture_default_str();
    sym->add_option("--elem", sym_elem, "element, e.g. \"2 + 2*z + 4*z^2\"")->required();

    auto* chk = app.add_subcommand("check", "run a named identity suite");
    chk->fallthrough();
    std::string chk_suite;
    std::uint64_t chk_cases = 0;
    chk->add_option("--suite", chk_suite, "suite name; see --list")
        ->check(CLI::IsMember(check_suite_names()));
    chk->add_option("--cases", chk_cases, "random cases per cell, 0 for the default")
        ->capture_default_str();
    bool chk_list = false;
    chk->add_flag("--list", chk_list, "list the available suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    int rc = 0;
    try {
        std::string command;
        json params;
        json result;
        bool table_output = false;
        std::string csv;
        std::string failure_detail;

        if (*po) {
            command = "picard-order";
            const std::uint32_t f = power_of(po_q, po_p);
            const FieldPtr fld = FqField::make(po_p, f);
            std::uint64_t pm = 1;
            for (std::uint32_t i = 0; i < po_m; ++i) pm *= po_p;
            const auto c = parse_trunc(po_c, fld, pm - 1);
            const std::uint64_t order = class_order(c);
            params = {{"p", po_p}, {"m", po_m}, {"q", po_q}, {"c", format_trunc(c)}};
            result["order"] = order;
            result["divides_pm"] = pm % order == 0;
            result["lprime_size"] =
                unit_log_group(HigherDerivation::standard(fld, po_m)).size();
        } else if (*lt) {
            command = "lt-series";
            const std::int64_t prec = 2 * lt_policy_prec(lt_deg, lt_q);
            const RFieldPtr fld = build_rfield(lt_p, lt_e, lt_eis, prec);
            const LTData data = lt_make(fld, lt_q);
            params = {{"p", lt_p}, {"e", lt_e},     {"q", lt_q},
                      {"deg", lt_deg}, {"op", lt_op}, {"eis", lt_eis}};
            result["model"] = "pi*X + X^q";
            result["prec"] = prec;
            if (lt_op == "law") {
                result["vars"] = {"X", "Y"};
                result["coeffs"] = series_coeffs_2var(lt_group_law(data, lt_deg));
            } else if (lt_op == "endo") {
                params["a"] = lt_a;
                result["vars"] = {"X"};
                result["coeffs"] =
                    series_coeffs_1var(lt_endomorphism(data, fld->from_int(lt_a), lt_deg));
            } else if (lt_op == "log") {
                result["vars"] = {"X"};
                result["coeffs"] = series_coeffs_1var(lt_log(data, lt_deg));
            } else if (lt_op == "exp") {
                result["vars"] = {"X"};
                result["coeffs"] = series_coeffs_1var(lt_exp(data, lt_deg));
            } else {
                const RamifiedElem u = parse_ramified(lt_u, fld);
                params["u"] = lt_u;
                result["vars"] = {"Z"};
                result["coeffs"] = series_coeffs_1var(lt_h_series(data, u, lt_deg));
            }
        } else if (*rad) {
            command = "radius";
            const RFieldPtr fld = build_rfield(rad_p, rad_e, rad_eis, 32);
            const LTData data = lt_make(fld, rad_q);
            params = {{"p", rad_p}, {"e", rad_e}, {"q", rad_q}, {"eis", rad_eis}};
            result["limit"] = lt_radius_limit(data).str();
            if (rad_max_n >= 0) {
                params["max_n"] = rad_max_n;
                table_output = true;
                json rows = json::array();
                std::string lines = "n,valuation,num,den\n";
                for (std::int64_t n = 0; n <= rad_max_n; ++n) {
                    const ValExp v = lt_radius(data, static_cast<std::uint32_t>(n));
                    rows.push_back({{"n", n}, {"valuation", v.str()}, {"num", v.num}, {"den", v.den}});
                    lines += std::to_string(n) + "," + v.str() + "," + std::to_string(v.num) +
                             "," + std::to_string(v.den) + "\n";
                }
                result["rows"] = std::move(rows);
                csv = std::move(lines);
            } else {
                params["n"] = rad_n;
                const ValExp v = lt_radius(data, rad_n);
                result["n"] = rad_n;
                result["valuation"] = v.str();
                result["num"] = v.num;
                result["den"] = v.den;
            }
        } else if (*sym) {
            command = "symbol";
            const RFieldPtr fld = parse_field_desc(sym_field, 40);
            const TateElem a = parse_tate(sym_elem, fld);
            const GradedElem g = principal_symbol(a);
            params = {{"field", sym_field}, {"elem", format_tate(a)}};
            result["degree"] = g.degree.str();
            result["num"] = g.degree.num;
            result["den"] = g.degree.den;
            result["symbol"] = format_laurent(g.symbol);
        } else if (*chk) {
            command = "check";
            if (chk_list) {
                params = {{"list", true}};
                result["suites"] = check_suite_names();
            } else {
                if (chk_suite.empty())
                    throw std::invalid_argument("--suite is required unless --list is given");
                const SuiteResult res = run_check_suite(chk_suite, seed, chk_cases);
                params = {{"suite", chk_suite}, {"cases", chk_cases}};
                table_output = true;
                result["suite"] = res.suite;
                result["ok"] = res.ok();
                result["total_cases"] = res.total_cases();
                result["failures"] = res.total_failures();
                json cells = json::array();
                csv = "cell,cases,failures\n";
                for (const auto& cell : res.cells) {
                    json c = {{"cell", cell.cell},
                              {"cases", cell.cases},
                              {"failures", cell.failures}};
                    if (cell.failures > 0) c["first_failure"] = cell.first_failure;
                    cells.push_back(std::move(c));
                    csv += cell.cell + "," + std::to_string(cell.cases) + "," +
                           std::to_string(cell.failures) + "\n";
                }
                result["cells"] = std::move(cells);
                if (!res.ok()) {
                    rc = 2;
                    failure_detail = res.first_failure();
                }
            }
        }

        if (format == "csv" && !table_output)
            throw std::invalid_argument("--format csv is only available for table results");

        json out = envelope(command, std::move(params), seed, !no_timestamp);
        out["result"] = std::move(result);
        emit(format == "csv" ? csv : out.dump(2) + "\n", out_path);

        if (rc == 2) std::cerr << "identity failure: " << failure_detail << "\n";
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::logic_error& ex) {
        std::cerr << "identity failure: " << ex.what() << "\n";
        return 2;
    }
    return rc;
}
