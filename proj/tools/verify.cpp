#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "supertime/checks.hpp"
#include "supertime/curvature.hpp"
#include "supertime/errors.hpp"
#include "supertime/parser.hpp"

using namespace supertime;

namespace {

uint64_t default_seed() {
    if (const char* env = std::getenv("VERIFY_SEED")) return std::strtoull(env, nullptr, 10);
    return 7;
}

void print_json(const VerificationReport& rep, std::ostream& os) {
    nlohmann::json meta;
    meta["convention"] = rep.convention;
    meta["seed"] = rep.seed;
    os << meta.dump() << "\n";
    for (const auto& e : rep.entries) {
        nlohmann::json j;
        j["check_id"] = e.check_id;
        j["paper_ref"] = e.paper_ref;
        j["status"] = to_string(e.status);
        if (e.expected.empty())
            j["expected"] = nullptr;
        else
            j["expected"] = e.expected;
        j["actual"] = e.actual;
        j["notes"] = e.notes;
        os << j.dump() << "\n";
    }
}

void print_text(const VerificationReport& rep, std::ostream& os) {
    os << "seed: " << rep.seed << "\nconvention: " << rep.convention << "\n\n";
    for (const auto& e : rep.entries) {
        os << "[" << to_string(e.status) << "] " << e.check_id << "\n";
        os << "    ref:      " << e.paper_ref << "\n";
        if (!e.expected.empty()) os << "    expected: " << e.expected << "\n";
        os << "    actual:   " << e.actual << "\n";
        if (!e.notes.empty()) os << "    notes:    " << e.notes << "\n";
    }
    int pass = 0, fail = 0, reportonly = 0;
    for (const auto& e : rep.entries) {
        if (e.status == CheckStatus::Pass) ++pass;
        if (e.status == CheckStatus::Fail) ++fail;
        if (e.status == CheckStatus::ReportOnly) ++reportonly;
    }
    os << "\n" << pass << " pass, " << fail << " fail, " << reportonly << " report-only\n";
}

std::string load_source(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;  // inline expression
}

int run_eval(const std::string& vierbein_arg, const std::string& what) {
    Session s(1);
    VierbeinParams v = parse_vierbein(s, load_source(vierbein_arg));
    uint64_t th_mask = uint64_t{1} << s.theta;
    uint64_t thb_mask = uint64_t{1} << s.thetabar;

    if (what == "sdet") {
        std::cout << to_string(sdet(assemble(s, v))) << "\n";
    } else if (what == "metric") {
        SuperMatrix frame = sinv(assemble(s, v));
        std::cout << to_string(metric_from_vierbein(frame, GradingToggle::LeftIndex)) << "\n";
    } else if (what == "pi") {
        RatFunc gt = v.gamma.coeff(th_mask), gtb = v.gamma.coeff(thb_mask);
        RatFunc dt = v.delta.coeff(th_mask), dtb = v.delta.coeff(thb_mask);
        RatFunc bB = body_soul(v.b).body, cB = body_soul(v.c).body;
        RatFunc dB = body_soul(v.d).body, eB = body_soul(v.e).body;
        RatFunc pis[5] = {gt * eB - dt * cB, gtb * eB - dtb * cB, dt * bB - gt * dB,
                          dtb * bB - gtb * dB, gtb * dt - gt * dtb};
        for (int k = 0; k < 5; ++k)
            std::cout << "pi" << (k + 1) << " = " << to_string(pis[k]) << "\n";
    } else if (what == "action" || what == "reduce") {
        SuperNumber x_field = superfield(s);
        SuperNumber density =
            build_action(s, v, x_field, compose_potential(s, x_field), ActionForm::DtDt);
        if (what == "action")
            std::cout << to_string(density) << "\n";
        else
            std::cout << to_string(berezin_reduce(s, density).value) << "\n";
    } else {
        std::cerr << "unknown --what: " << what << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supertime verification driver"};
    app.require_subcommand(1);

    std::string section = "all", branch = "both", format = "text";
    uint64_t seed = default_seed();
    CLI::App* run = app.add_subcommand("run", "replay the derivations section by section");
    run->add_option("--section", section, "algebra|osp|cpi|sec4|qpi|curvature|all")
        ->check(CLI::IsMember({"algebra", "osp", "cpi", "sec4", "qpi", "curvature", "all"}));
    run->add_option("--branch", branch, "plus|minus|both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    run->add_option("--seed", seed, "random seed (default: VERIFY_SEED or 7)");
    run->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

    std::string vierbein_arg, what = "sdet";
    CLI::App* eval = app.add_subcommand("eval", "evaluate an operation on a user vierbein");
    eval->add_option("--vierbein", vierbein_arg, "matrix literal or path to a file containing one")
        ->required();
    eval->add_option("--what", what, "sdet|metric|pi|action|reduce")
        ->check(CLI::IsMember({"sdet", "metric", "pi", "action", "reduce"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            VerificationReport rep = run_checks(section, branch, seed);
            if (format == "json")
                print_json(rep, std::cout);
            else
                print_text(rep, std::cout);
            return rep.has_failures() ? 1 : 0;
        }
        return run_eval(vierbein_arg, what);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
