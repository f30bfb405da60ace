#include <algorithm>
#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>

#include "oharm/characters.hpp"
#include "oharm/conjectures.hpp"
#include "oharm/formulas.hpp"
#include "oharm/lattice.hpp"
#include "oharm/oracle.hpp"
#include "oharm/parallel.hpp"
#include "oharm/render.hpp"
#include "oharm/selftest.hpp"

namespace {

using namespace oharm;

int report_exit(const CheckReport& rep) {
    for (const std::string& line : rep.lines)
        std::cout << line << "\n";
    return rep.ok ? 0 : 1;
}

SchurExpansion grfrob_by_method(const std::string& method, int n, int m, int r) {
    if (method == "signed") return grfrob_signed(n, m, r);
    if (method == "bad") return grfrob_bad(n, m, r);
    if (method == "good") return grfrob_good(n, m, r);
    if (method == "uz") return grfrob_uz(n, m, r);
    throw CLI::ValidationError("--method must be signed|bad|good|uz");
}

BasisMode basis_by_name(const std::string& name) {
    if (name == "placements") return BasisMode::placements;
    if (name == "subsets") return BasisMode::subsets;
    if (name == "monomials") return BasisMode::monomials;
    throw CLI::ValidationError("--basis must be placements|subsets|monomials");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded characters of rook and involution matrix loci"};
    app.require_subcommand(1);
    std::string format = "lines";
    app.add_option("--format", format, "term output format: lines|records")
        ->check(CLI::IsMember({"lines", "records"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker thread bound for grid verifications")
        ->check(CLI::PositiveNumber);

    // grfrob
    int n = 0, m = 0, r = 0, a = 0;
    std::string method = "signed";
    bool with_hilbert = false;
    auto* cmd_grfrob = app.add_subcommand("grfrob", "graded Frobenius image of a rook locus");
    cmd_grfrob->add_option("--n", n)->required();
    cmd_grfrob->add_option("--m", m)->required();
    cmd_grfrob->add_option("--r", r)->required();
    cmd_grfrob->add_option("--method", method, "signed|bad|good|uz");
    cmd_grfrob->add_flag("--hilbert", with_hilbert, "also print the Hilbert polynomial");

    auto* cmd_inv = app.add_subcommand("grfrob-involution",
                                       "graded Frobenius image of an involution locus");
    cmd_inv->add_option("--n", n)->required();
    cmd_inv->add_option("--a", a)->required();
    cmd_inv->add_flag("--hilbert", with_hilbert);

    std::string hmethod = "signed", htype = "rook";
    auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert polynomial of a graded locus ring");
    cmd_hilbert->add_option("--type", htype, "rook|involution");
    cmd_hilbert->add_option("--n", n)->required();
    cmd_hilbert->add_option("--m", m);
    cmd_hilbert->add_option("--r", r);
    cmd_hilbert->add_option("--a", a);
    cmd_hilbert->add_option("--method", hmethod, "signed|bad|good|uz");

    // loci count
    std::string ltype = "rook";
    bool dump = false;
    auto* cmd_loci = app.add_subcommand("loci", "finite matrix loci");
    auto* cmd_count = cmd_loci->add_subcommand("count", "count locus points");
    cmd_count->add_option("--type", ltype, "rook|uz|involution");
    cmd_count->add_option("--n", n)->required();
    cmd_count->add_option("--m", m);
    cmd_count->add_option("--r", r);
    cmd_count->add_option("--a", a);
    cmd_count->add_flag("--dump", dump, "print one point per line");

    // paths show
    std::string mu_s, lam1_s, lam2_s;
    int pathlen = 0;
    auto* cmd_paths = app.add_subcommand("paths", "lattice paths of strip pairs");
    auto* cmd_show = cmd_paths->add_subcommand("show", "print the path of (mu, lam1, lam2)");
    cmd_show->add_option("--mu", mu_s)->required();
    cmd_show->add_option("--lam1", lam1_s)->required();
    cmd_show->add_option("--lam2", lam2_s)->required();
    cmd_show->add_option("--len", pathlen, "prefix length (default max first part)");

    // oracle grfrob
    std::string otype = "rook", basis = "placements";
    int dmax = -1;
    auto* cmd_oracle = app.add_subcommand("oracle", "exact locus-side computations");
    auto* cmd_ofrob = cmd_oracle->add_subcommand("grfrob", "graded Frobenius from the locus");
    cmd_ofrob->add_option("--type", otype, "rook|uz|involution");
    cmd_ofrob->add_option("--n", n)->required();
    cmd_ofrob->add_option("--m", m);
    cmd_ofrob->add_option("--r", r);
    cmd_ofrob->add_option("--a", a);
    cmd_ofrob->add_option("--dmax", dmax, "top degree (default: natural bound)");
    cmd_ofrob->add_option("--basis", basis, "placements|subsets|monomials");
    cmd_ofrob->add_flag("--hilbert", with_hilbert);

    // verify subcommands
    auto* cmd_verify = app.add_subcommand("verify", "theorem checkers");
    std::string vtype = "rook";
    int vdmax = -1;
    auto* cmd_videal = cmd_verify->add_subcommand("ideal", "degreewise ideal equality");
    cmd_videal->add_option("--type", vtype, "rook|involution");
    cmd_videal->add_option("--n", n)->required();
    cmd_videal->add_option("--m", m);
    cmd_videal->add_option("--r", r);
    cmd_videal->add_option("--a", a);
    cmd_videal->add_option("--dmax", vdmax);

    int grid = 4, maxnm = 7;
    auto* cmd_vident = cmd_verify->add_subcommand("identities", "symmetric function identities");
    cmd_vident->add_option("--grid", grid, "interchange grid bound");
    cmd_vident->add_option("--max-nm", maxnm, "refinement/sum bound");

    auto* cmd_vbij = cmd_verify->add_subcommand("bijections", "phi and ls certification");
    cmd_vbij->add_option("--n", n)->required();
    cmd_vbij->add_option("--m", m)->required();

    auto* cmd_vchain = cmd_verify->add_subcommand("chain", "surjection chain dominance");
    cmd_vchain->add_option("--n", n)->required();
    cmd_vchain->add_option("--m", m)->required();

    auto* cmd_visom = cmd_verify->add_subcommand("isom", "isomorphism region");
    cmd_visom->add_option("--n", n)->required();
    cmd_visom->add_option("--m", m)->required();

    bool uz_oracle = false;
    auto* cmd_vuz = cmd_verify->add_subcommand("uz", "upper-rook identities");
    cmd_vuz->add_option("--n", n)->required();
    cmd_vuz->add_option("--m", m)->required();
    cmd_vuz->add_flag("--oracle", uz_oracle, "cross-check against the locus oracle");

    auto* cmd_conj = app.add_subcommand("conjecture", "conjecture checkers");
    auto* cmd_logc = cmd_conj->add_subcommand("logconcavity", "equivariant log-concavity");
    cmd_logc->add_option("--n", n)->required();
    cmd_logc->add_option("--m", m)->required();
    cmd_logc->add_option("--r", r)->required();

    auto* cmd_selftest = app.add_subcommand("selftest", "run the full acceptance suite");

    // let --format (and any other top-level option) appear after a subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands(/*filter=*/[](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    try {
        if (cmd_grfrob->parsed()) {
            SchurExpansion f = grfrob_by_method(method, n, m, r);
            std::cout << render_terms(f, format == "records");
            if (with_hilbert)
                std::cout << hilbert(f).str() << "\n";
            return 0;
        }
        if (cmd_inv->parsed()) {
            SchurExpansion f = grfrob_involution(n, a);
            std::cout << render_terms(f, format == "records");
            if (with_hilbert)
                std::cout << hilbert(f).str() << "\n";
            return 0;
        }
        if (cmd_hilbert->parsed()) {
            SchurExpansion f = htype == "involution" ? grfrob_involution(n, a)
                                                     : grfrob_by_method(hmethod, n, m, r);
            std::cout << hilbert(f).str() << "\n";
            return 0;
        }
        if (cmd_count->parsed()) {
            if (ltype == "involution") {
                auto pts = enumerate_involutions(n, a);
                std::cout << pts.size() << "\n";
                if (dump)
                    for (const auto& w : pts)
                        std::cout << w.str() << "\n";
            } else {
                auto pts = ltype == "uz" ? enumerate_uz(n, m, r) : enumerate_rook(n, m, r);
                std::cout << pts.size() << "\n";
                if (dump)
                    for (const auto& p : pts)
                        std::cout << p.str() << "\n";
            }
            return 0;
        }
        if (cmd_show->parsed()) {
            Partition mu = parse_partition(mu_s);
            Partition lam1 = parse_partition(lam1_s);
            Partition lam2 = parse_partition(lam2_s);
            int len = pathlen > 0 ? pathlen : std::max(lam1.first(), lam2.first());
            std::cout << lattice_path(mu, lam1, lam2, len).str();
            return 0;
        }
        if (cmd_ofrob->parsed()) {
            Locus locus = otype == "involution" ? involution_locus(n, a)
                          : otype == "uz"       ? uz_locus(n, m, r)
                                                : rook_locus(n, m, r);
            int top = dmax >= 0 ? dmax
                      : otype == "involution" ? (n - a) / 2
                      : otype == "uz"         ? std::min(n, m)
                                              : r;
            SchurExpansion f = oracle_graded_frobenius(locus, top, basis_by_name(basis));
            std::cout << render_terms(f, format == "records");
            if (with_hilbert)
                std::cout << hilbert(f).str() << "\n";
            return 0;
        }
        if (cmd_videal->parsed()) {
            if (vtype == "involution")
                return report_exit(verify_involution_ideal(n, a, vdmax >= 0 ? vdmax
                                                                            : (n - a) / 2 + 1));
            return report_exit(verify_ideal_equality(n, m, r, vdmax >= 0 ? vdmax : r + 1));
        }
        if (cmd_vident->parsed()) {
            CheckReport rep;
            int side = grid + 1;
            std::vector<char> cell_ok(side * side * side * side * side, 1);
            parallel_for(static_cast<int>(cell_ok.size()), jobs, [&](int idx) {
                int t = idx;
                int qq = t % side; t /= side;
                int p = t % side; t /= side;
                int bb = t % side; t /= side;
                int aa = t % side; t /= side;
                cell_ok[idx] = verify_schur_interchange(t, aa, bb, p, qq).equal ? 1 : 0;
            });
            bool inter = std::all_of(cell_ok.begin(), cell_ok.end(), [](char c) { return c; });
            rep.check("schur-interchange", inter, "grid<=" + std::to_string(grid));
            bool refine = true;
            for (int nn = 1; nn <= maxnm; ++nn)
                for (int mm = 1; mm <= maxnm; ++mm) {
                    for (int rr = 0; rr <= std::min(nn, mm); ++rr)
                        refine = refine && verify_refinement(nn, mm, rr);
                    refine = refine && verify_schur_sum(nn, mm);
                }
            rep.check("schur-refinement-and-sum", refine, "n,m<=" + std::to_string(maxnm));
            return report_exit(rep);
        }
        if (cmd_vbij->parsed())
            return report_exit(verify_bijections(n, m, jobs));
        if (cmd_vchain->parsed())
            return report_exit(check_surjection_chain(n, m));
        if (cmd_visom->parsed())
            return report_exit(check_surj_to_isom(n, m));
        if (cmd_vuz->parsed())
            return report_exit(check_uz_identity(n, m, uz_oracle));
        if (cmd_logc->parsed())
            return report_exit(check_log_concavity(n, m, r));
        if (cmd_selftest->parsed())
            return run_acceptance(std::cout) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << app.help() << "\n";
    return 2;
}
