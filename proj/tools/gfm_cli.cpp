// Command-line front end over the gfm C API: runs the verification commands
// and emits their reports as deterministic JSON (default) or plain text.
//
// Exit codes: 0 all checks passed, 1 a check failed or the run errored,
// 2 usage error (bad flags, invalid parameters, unparsable polynomial).

#include <gfm/gfm.h>

#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

namespace {

int exit_for(gfm_status status) {
    switch (status) {
        case GFM_OK: return 0;
        case GFM_ERR_INVALID_ARGUMENT:
        case GFM_ERR_PARSE: return 2;
        default: return 1;
    }
}

int emit(gfm_report* report, bool as_json, const std::string& out_path) {
    char* text = nullptr;
    gfm_status st = as_json ? gfm_report_json(report, &text) : gfm_report_text(report, &text);
    if (st != GFM_OK) {
        std::fprintf(stderr, "gfm: %s: %s\n", gfm_status_name(st), gfm_last_error());
        return exit_for(st);
    }
    if (out_path.empty()) {
        std::fputs(text, stdout);
    } else {
        std::FILE* f = std::fopen(out_path.c_str(), "w");
        if (!f) {
            std::fprintf(stderr, "gfm: cannot open %s\n", out_path.c_str());
            gfm_string_free(text);
            return 1;
        }
        std::fputs(text, f);
        std::fclose(f);
    }
    gfm_string_free(text);
    return gfm_report_passed(report) ? 0 : 1;
}

int finish(gfm_status st, gfm_report* report, bool as_json, const std::string& out_path) {
    if (st != GFM_OK) {
        std::fprintf(stderr, "gfm: %s: %s\n", gfm_status_name(st), gfm_last_error());
        return exit_for(st);
    }
    int code = emit(report, as_json, out_path);
    gfm_report_free(report);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded Frobenius-module verifications over GF(p^e)[x,y]"};
    app.require_subcommand(1);

    std::uint32_t p = 2, e = 1;
    std::int64_t alpha_max = 3, precision = 64, degree = -5, alpha = 0;
    std::uint64_t trials = 0, seed = 0;
    std::string out_path, t_text = "1";
    bool as_json = true;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "field characteristic (prime)")->required();
        cmd->add_option("--e", e, "field extension degree")->capture_default_str();
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
        cmd->add_flag("--json,!--no-json", as_json, "emit JSON (default) or plain text");
    };

    CLI::App* theorem = app.add_subcommand(
        "theorem", "exhaustively refute every candidate splitting up to alpha-max");
    add_common(theorem);
    theorem->add_option("--alpha-max", alpha_max, "largest twist-numerator degree enumerated")
        ->capture_default_str();

    CLI::App* roundtrip = app.add_subcommand(
        "roundtrip", "randomized roundtrip checks for the structure maps");
    add_common(roundtrip);
    roundtrip->add_option("--degree", degree, "degree of the sampled homs")->capture_default_str();
    roundtrip->add_option("--precision", precision, "coefficient window length")
        ->capture_default_str();
    roundtrip->add_option("--trials", trials, "number of random trials")->default_val(200);
    roundtrip->add_option("--seed", seed, "rng seed")->capture_default_str();

    CLI::App* zero_fuzz = app.add_subcommand(
        "zero-fuzz", "cross-validate normal-form vanishing against the membership test");
    add_common(zero_fuzz);
    zero_fuzz->add_option("--trials", trials, "number of random fractions")->default_val(500);
    zero_fuzz->add_option("--seed", seed, "rng seed")->capture_default_str();

    CLI::App* walk = app.add_subcommand(
        "walkthrough", "trace the defect computation for one candidate splitting");
    add_common(walk);
    walk->add_option("--alpha", alpha, "degree of the candidate numerator")->capture_default_str();
    walk->add_option("--t", t_text, "candidate numerator polynomial, e.g. \"y^2\"")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? 0 : 2;
    }

    gfm_report* report = nullptr;
    gfm_status st = GFM_ERR_INTERNAL;
    if (theorem->parsed())
        st = gfm_run_theorem(p, e, alpha_max, &report);
    else if (roundtrip->parsed())
        st = gfm_run_roundtrip(p, e, degree, precision, trials, seed, &report);
    else if (zero_fuzz->parsed())
        st = gfm_run_zero_fuzz(p, e, trials, seed, &report);
    else if (walk->parsed())
        st = gfm_run_walkthrough(p, e, alpha, t_text.c_str(), &report);
    return finish(st, report, as_json, out_path);
}
