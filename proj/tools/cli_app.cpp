#include "cli_app.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freefusion/annular.hpp"
#include "freefusion/errors.hpp"
#include "freefusion/free_product.hpp"
#include "freefusion/fusion_ring.hpp"
#include "freefusion/gallery.hpp"
#include "freefusion/group.hpp"
#include "freefusion/pointed_tube.hpp"
#include "freefusion/report.hpp"
#include "freefusion/ring_io.hpp"

namespace freefusion {

namespace {

struct CliOptions {
    std::string ring_spec;

    std::string c_spec, d_spec;
    std::vector<std::string> lemma_ids;
    int wmax = 4;
    int vmax = 6;

    std::string g_spec, h_spec;
    std::vector<int> bounds{6, 8};

    int fc_n = 0, fc_m = 0, fc_len = 6;
    bool generic = false;

    std::string group_spec;
    int samples = 200;
    std::uint64_t seed = 1729;

    std::vector<std::string> word_texts;

    std::string out_path;
    std::string format = "text";
    bool timing = false;
};

ReportFormat format_from_name(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "tsv") return ReportFormat::Tsv;
    if (name == "text") return ReportFormat::Text;
    throw input_error("unknown report format '" + name + "'");
}

template <class F>
CheckResult timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult cr = f();
    cr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cr;
}

int finish(const RunReport& report, const CliOptions& opt, std::ostream& out,
           std::ostream& err) {
    const std::string text =
        serialize_report(report, format_from_name(opt.format), opt.timing);
    if (opt.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.out_path);
        if (!(file << text)) {
            err << "error: cannot write report to '" << opt.out_path << "'\n";
            return 2;
        }
    }
    if (!report.all_passed()) return 1;
    if (report.any_overflow()) return 3;
    return 0;
}

int run_validate(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const FusionRing ring = ring_from_spec(opt.ring_spec);
    RunReport report;
    report.command = "validate";
    report.config = {{"ring", opt.ring_spec}, {"format", opt.format}};
    report.checks.push_back(timed([&] {
        CheckResult cr;
        cr.id = "ring-axioms";
        cr.put("ring", ring.name());
        cr.put("labels", std::to_string(ring.size()));
        const ValidationReport vr = validate_ring(ring);
        for (const Violation& v : vr.violations) cr.fail(v.axiom + ": " + v.witness);
        if (vr.truncation_skips > 0) {
            cr.overflow = true;
            cr.put("truncation-skips", std::to_string(vr.truncation_skips));
        }
        return cr;
    }));
    if (report.checks.back().overflow)
        report.notes.push_back("truncated ring: axioms checked inside the stored window only");
    return finish(report, opt, out, err);
}

std::vector<Lemma> resolve_lemmas(const std::vector<std::string>& ids) {
    std::vector<Lemma> out;
    std::set<Lemma> seen;
    auto push = [&](Lemma l) {
        if (seen.insert(l).second) out.push_back(l);
    };
    for (const std::string& id : (ids.empty() ? std::vector<std::string>{"all"} : ids)) {
        if (id == "all") {
            for (Lemma l : all_lemmas()) push(l);
            continue;
        }
        const auto l = lemma_from_id(id);
        if (!l) {
            std::ostringstream os;
            os << "unknown lemma id '" << id << "' (expected all";
            for (Lemma x : all_lemmas()) os << ", " << lemma_id(x);
            os << ")";
            throw input_error(os.str());
        }
        push(*l);
    }
    return out;
}

int run_verify(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const FreeProduct fp(ring_from_spec(opt.c_spec), ring_from_spec(opt.d_spec));
    const std::vector<Lemma> lemmas = resolve_lemmas(opt.lemma_ids);

    RunReport report;
    report.command = "verify";
    std::ostringstream ids;
    for (std::size_t i = 0; i < lemmas.size(); ++i)
        ids << (i ? "," : "") << lemma_id(lemmas[i]);
    report.config = {{"c", opt.c_spec},
                     {"d", opt.d_spec},
                     {"lemma", ids.str()},
                     {"wmax", std::to_string(opt.wmax)},
                     {"vmax", std::to_string(opt.vmax)},
                     {"format", opt.format}};

    for (Lemma l : lemmas) report.checks.push_back(verify_lemma(fp, l, opt.wmax, opt.vmax));
    report.checks.push_back(timed([&]() -> CheckResult {
        try {
            return decomposition_as_check(fp, decomposition_report(fp, opt.wmax, opt.vmax));
        } catch (const truncation_overflow& e) {
            CheckResult cr;
            cr.id = "decomposition";
            cr.overflow = true;
            cr.bound("wmax", opt.wmax);
            cr.bound("vmax", opt.vmax);
            cr.put("aborted", e.what());
            return cr;
        }
    }));
    return finish(report, opt, out, err);
}

int run_group(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const GroupTable g = group_from_spec(opt.g_spec);
    const GroupTable h = group_from_spec(opt.h_spec);
    RunReport report;
    report.command = "examples group";
    report.config = {{"g", opt.g_spec},
                     {"h", opt.h_spec},
                     {"wmax", std::to_string(opt.bounds[0])},
                     {"vmax", std::to_string(opt.bounds[1])},
                     {"format", opt.format}};
    report.checks.push_back(
        timed([&] { return pointed_cross_check(g, h, opt.bounds[0], opt.bounds[1]); }));
    return finish(report, opt, out, err);
}

int run_fuss_catalan(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const FusionRing rc = opt.generic ? tlj_generic(opt.fc_n) : tlj_ring(opt.fc_n);
    const FusionRing rd = opt.generic ? tlj_generic(opt.fc_m) : tlj_ring(opt.fc_m);
    const FreeProduct fp(rc, rd);
    RunReport report;
    report.command = "examples fuss-catalan";
    report.config = {{"n", std::to_string(opt.fc_n)},
                     {"m", std::to_string(opt.fc_m)},
                     {"len", std::to_string(opt.fc_len)},
                     {"generic", opt.generic ? "1" : "0"},
                     {"format", opt.format}};
    report.checks.push_back(timed([&]() -> CheckResult {
        try {
            const MoritaVerdict verdict = verify_morita_generation(fp, opt.fc_len);
            return morita_check(fp, verdict, opt.fc_len);
        } catch (const truncation_overflow& e) {
            CheckResult cr;
            cr.id = "morita-generation";
            cr.overflow = true;
            cr.bound("len", opt.fc_len);
            cr.put("aborted", e.what());
            return cr;
        }
    }));
    return finish(report, opt, out, err);
}

int run_tube(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const GroupTable g = group_from_spec(opt.group_spec);
    RunReport report;
    report.command = "examples tube";
    report.config = {{"group", opt.group_spec},
                     {"samples", std::to_string(opt.samples)},
                     {"seed", std::to_string(opt.seed)},
                     {"format", opt.format}};
    report.checks.push_back(timed([&] { return pointed_summand_check(g, opt.seed, opt.samples); }));
    return finish(report, opt, out, err);
}

int run_fuse(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const FreeProduct fp(ring_from_spec(opt.c_spec), ring_from_spec(opt.d_spec));
    if (opt.word_texts.size() < 2) throw input_error("fuse needs at least two words");
    std::vector<Word> factors;
    factors.reserve(opt.word_texts.size());
    for (const std::string& text : opt.word_texts) factors.push_back(fp.parse_word(text));

    RunReport report;
    report.command = "fuse";
    report.config = {{"c", opt.c_spec}, {"d", opt.d_spec}, {"format", opt.format}};
    report.checks.push_back(timed([&] {
        CheckResult cr;
        cr.id = "fuse";
        for (std::size_t i = 0; i < factors.size(); ++i)
            cr.put("factor-" + std::to_string(i + 1), fp.format_word(factors[i]));
        try {
            cr.put("product", fp.format_word_sum(fp.fuse_chain(factors)));
        } catch (const truncation_overflow& e) {
            cr.overflow = true;
            cr.put("aborted", e.what());
        }
        return cr;
    }));
    return finish(report, opt, out, err);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliOptions opt;
    CLI::App app{"exact fusion-ring computations for free products and their annular checks"};
    app.name("freefusion");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out_path, "write the report to this file instead of stdout");
        sub->add_option("--format", opt.format, "report format")
            ->check(CLI::IsMember({"text", "json", "tsv"}))
            ->capture_default_str();
        sub->add_flag("--timing", opt.timing, "include wall-clock timings in the report");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the axioms of a fusion ring");
    validate->add_option("ring", opt.ring_spec, "ring file or built-in name")->required();
    add_common(validate);

    CLI::App* verify =
        app.add_subcommand("verify", "run the annular lemma scans on a free product");
    verify->add_option("--c", opt.c_spec, "left factor: ring file or built-in name")->required();
    verify->add_option("--d", opt.d_spec, "right factor: ring file or built-in name")->required();
    verify->add_option("--lemma", opt.lemma_ids,
                       "lemma id, repeatable ('all' selects the whole suite)");
    verify->add_option("--wmax", opt.wmax, "annulus boundary length bound")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--vmax", opt.vmax, "middle word length bound")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_common(verify);

    CLI::App* examples = app.add_subcommand("examples", "worked cross-checks");
    examples->require_subcommand(1);

    CLI::App* group =
        examples->add_subcommand("group", "free product of two finite groups, checked "
                                          "against their conjugacy classification");
    // frees the short -h so the right factor can be spelled --h
    group->set_help_flag("--help", "print this help message and exit");
    group->add_option("--g", opt.g_spec, "left group: file or built-in name")->required();
    group->add_option("--h", opt.h_spec, "right group: file or built-in name")->required();
    group->add_option("--bounds", opt.bounds, "boundary and middle length bounds")
        ->expected(2)
        ->check(CLI::NonNegativeNumber);
    add_common(group);

    CLI::App* fc = examples->add_subcommand(
        "fuss-catalan", "generation closures for a free product of two ladder rings");
    fc->add_option("--n", opt.fc_n, "left ladder index")->required();
    fc->add_option("--m", opt.fc_m, "right ladder index")->required();
    fc->add_option("--len", opt.fc_len, "closure length bound")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    fc->add_flag("--generic", opt.generic,
                 "use the level-truncated generic ladders instead of the finite rings");
    add_common(fc);

    CLI::App* tube =
        examples->add_subcommand("tube", "annular algebra of a single finite group");
    tube->add_option("--group", opt.group_spec, "group: file or built-in name")->required();
    tube->add_option("--samples", opt.samples, "number of seeded positivity samples")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    tube->add_option("--seed", opt.seed, "seed for the positivity samples")
        ->capture_default_str();
    add_common(tube);

    CLI::App* fuse =
        app.add_subcommand("fuse", "product of alternating words in a free product");
    fuse->add_option("--c", opt.c_spec, "left factor: ring file or built-in name")->required();
    fuse->add_option("--d", opt.d_spec, "right factor: ring file or built-in name")->required();
    fuse->add_option("words", opt.word_texts, "words like 'C:f1 D:f1' ('∅' for the unit)")
        ->required()
        ->expected(2, 1000);
    add_common(fuse);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return run_validate(opt, out, err);
        if (verify->parsed()) return run_verify(opt, out, err);
        if (group->parsed()) return run_group(opt, out, err);
        if (fc->parsed()) return run_fuss_catalan(opt, out, err);
        if (tube->parsed()) return run_tube(opt, out, err);
        if (fuse->parsed()) return run_fuse(opt, out, err);
        err << "error: no command selected\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace freefusion
