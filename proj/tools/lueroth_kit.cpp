/*
 * Copyright 2026 The lueroth-kit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lueroth/apolarity.hpp"
#include "lueroth/geiser.hpp"
#include "lueroth/json_io.hpp"
#include "lueroth/morley.hpp"
#include "lueroth/repcheck.hpp"
#include "lueroth/scorza.hpp"
#include "lueroth/verify.hpp"

namespace {

using lueroth::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

std::array<lueroth::Poly, 5> load_lines(const std::string& path) {
    json j = load_json(path);
    const json& arr = j.is_array() ? j : j.at("lines");
    if (arr.size() != 5) throw std::invalid_argument("expected 5 lines");
    std::array<lueroth::Poly, 5> lines;
    for (int i = 0; i < 5; ++i) lines[i] = lueroth::poly_from_json(arr[i]);
    return lines;
}

json complex_to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

json point_to_json(const lueroth::CPoint& p) {
    return json::array({complex_to_json(p[0]), complex_to_json(p[1]), complex_to_json(p[2])});
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    using namespace lueroth;

    CLI::App app{"exact toolkit for plane quartics, syzygy point configurations and their skew matrices"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand name

    uint64_t seed = 1;
    double tol = 1e-8;
    std::string format = "json";
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--tol", tol, "numeric tolerance")->capture_default_str();
    app.add_option("--format", format, "output format: json or table")->check(CLI::IsMember({"json", "table"}));

    std::string quartic_path, lines_path, q_path, c_path;
    bool use_naive = false;

    auto* cat = app.add_subcommand("catalecticant", "matrix, determinant and kernel of a quartic");
    cat->add_option("quartic", quartic_path, "quartic JSON file")->required();

    auto* clebsch = app.add_subcommand("clebsch", "sum of fourth powers of five lines");
    clebsch->add_option("--lines", lines_path, "JSON file with 5 linear forms")->required();

    auto* lueroth_cmd = app.add_subcommand("lueroth", "quartics through the ten vertices of five lines");
    lueroth_cmd->add_option("--lines", lines_path, "JSON file with 5 linear forms")->required();

    auto* scorza_cmd = app.add_subcommand("scorza", "degree-4 covariant of a quartic");
    scorza_cmd->add_option("quartic", quartic_path, "quartic JSON file")->required();
    scorza_cmd->add_flag("--naive", use_naive, "use the full-loop oracle");

    auto* bateman_cmd = app.add_subcommand("bateman", "18-coordinate tuple of a conic/cubic pair");
    bateman_cmd->add_option("--Q", q_path, "conic JSON file (in x)")->required();
    bateman_cmd->add_option("--C", c_path, "cubic JSON file (in x)")->required();

    bool opt_pf = false, opt_kernel = false, opt_trank = false;
    auto* morley_cmd = app.add_subcommand("morley", "skew matrix of the tuple of a conic/cubic pair");
    morley_cmd->add_option("--Q", q_path, "conic JSON file (in x)")->required();
    morley_cmd->add_option("--C", c_path, "cubic JSON file (in x)")->required();
    morley_cmd->add_flag("--pfaffian", opt_pf, "print only the pfaffian");
    morley_cmd->add_flag("--kernel", opt_kernel, "print only the kernel pencil");
    morley_cmd->add_flag("--tangent-rank", opt_trank, "print only the tangent-system rank");

    bool opt_points = false, opt_ram = false, opt_branch = false;
    auto* geiser_cmd = app.add_subcommand("geiser", "numeric net-of-cubics pipeline");
    geiser_cmd->add_option("--Q", q_path, "conic JSON file (in x)")->required();
    geiser_cmd->add_option("--C", c_path, "cubic JSON file (in x)")->required();
    geiser_cmd->add_flag("--points", opt_points, "seven base points");
    geiser_cmd->add_flag("--ramification", opt_ram, "exact ramification sextic");
    geiser_cmd->add_flag("--branch", opt_branch, "fitted branch quartic");

    auto* repcheck_cmd = app.add_subcommand("repcheck", "character and weight decompositions");

    std::string only;
    auto* verify_cmd = app.add_subcommand("verify-paper", "run all statement checks");
    verify_cmd->add_option("--only", only, "restrict to statements with this id prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat->parsed()) {
            Poly f = poly_from_json(load_json(quartic_path));
            CatalecticantData data = catalecticant(f);
            json out;
            out["matrix"] = matrix_to_json(data.lc);
            out["det"] = scalar_to_json(det(data.lc), data.lc.at(0, 0).ext_d());
            json ker = json::array();
            for (const Poly& k : catalecticant_kernel(f)) ker.push_back(poly_to_json(k));
            out["kernel"] = std::move(ker);
            emit(out);
        } else if (clebsch->parsed()) {
            emit(poly_to_json(clebsch_from_lines(load_lines(lines_path))));
        } else if (lueroth_cmd->parsed()) {
            Pentagon p = pentagon_from_lines(load_lines(lines_path));
            auto basis = lueroth_space_from_pentagon(p);
            json out;
            out["dimension"] = basis.size();
            json arr = json::array();
            for (const Poly& b : basis) arr.push_back(poly_to_json(b));
            out["basis"] = std::move(arr);
            emit(out);
        } else if (scorza_cmd->parsed()) {
            Poly f = poly_from_json(load_json(quartic_path));
            emit(poly_to_json(use_naive ? scorza_naive(f) : scorza_fast(f)));
        } else if (bateman_cmd->parsed()) {
            Poly q = poly_from_json(load_json(q_path));
            Poly c = poly_from_json(load_json(c_path));
            emit(tuple_to_json(b_pairing(adjugate_conic(q), c)));
        } else if (morley_cmd->parsed()) {
            Poly q = poly_from_json(load_json(q_path));
            Poly c = poly_from_json(load_json(c_path));
            Poly qstar = adjugate_conic(q);
            BatemanTuple t = b_pairing(qstar, c);
            ExactMatrix m = morley_matrix(t);
            if (opt_pf) {
                emit(json{{"pfaffian", scalar_to_json(pfaffian(m), 0)}});
            } else if (opt_kernel) {
                ConicPencil p = kernel_pencil(t);
                emit(json{{"kernel", json::array({poly_to_json(p.g1), poly_to_json(p.g2)})}});
            } else if (opt_trank) {
                emit(json{{"tangent_rank", tangent_rank(qstar, c)}});
            } else {
                json out;
                out["matrix"] = matrix_to_json(m);
                out["rank"] = rank_of(m);
                out["pfaffian"] = scalar_to_json(pfaffian(m), 0);
                out["convention"] = morley_convention().str();
                emit(out);
            }
        } else if (geiser_cmd->parsed()) {
            Poly q = poly_from_json(load_json(q_path));
            Poly c = poly_from_json(load_json(c_path));
            CubicNet net = net_from_QC(q, c);
            json out;
            if (opt_ram || !(opt_points || opt_branch)) {
                out["ramification_sextic"] = poly_to_json(ramification_sextic(net));
            }
            if (opt_points || !(opt_ram || opt_branch)) {
                json arr = json::array();
                for (const auto& p : seven_points_numeric(net, tol, seed)) arr.push_back(point_to_json(p));
                out["points"] = std::move(arr);
            }
            if (opt_branch || !(opt_points || opt_ram)) {
                BranchFit fit = branch_quartic(net, 30, 1e-6, seed);
                json qj = json::array();
                for (const auto& z : fit.quartic) qj.push_back(complex_to_json(z));
                out["branch_quartic"] = std::move(qj);
                out["fit_residual"] = fit.fit_residual;
            }
            emit(out);
        } else if (repcheck_cmd->parsed()) {
            VerificationReport r = verify_paper(seed, "repcheck");
            if (format == "table") {
                std::cout << r.to_table();
            } else {
                emit(r.to_json());
            }
            return r.failures() == 0 ? 0 : 1;
        } else if (verify_cmd->parsed()) {
            VerificationReport r = verify_paper(seed, only);
            if (format == "table") {
                std::cout << r.to_table();
            } else {
                emit(r.to_json());
            }
            if (r.failures() != 0) {
                for (const auto& s : r.statements) {
                    if (!s.informational && !s.pass) {
                        std::cerr << "first failing statement: " << s.id << "\n";
                        break;
                    }
                }
                return 1;
            }
            return 0;
        }
    } catch (const RankError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
