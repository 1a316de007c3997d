// arrowsmith command-line frontend.  Talks to the shared library through
// the public C interface only.
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "arrowsmith/arrowsmith.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct DocDeleter {
    void operator()(arrowsmith_doc* d) const { arrowsmith_doc_free(d); }
};
struct ReportDeleter {
    void operator()(arrowsmith_report* r) const { arrowsmith_report_free(r); }
};
using DocPtr = std::unique_ptr<arrowsmith_doc, DocDeleter>;
using ReportPtr = std::unique_ptr<arrowsmith_report, ReportDeleter>;

int fail(arrowsmith_status status) {
    std::fprintf(stderr, "error: %s\n", arrowsmith_last_error());
    (void)status;
    return kExitError;
}

DocPtr load(const std::string& path, int& exit_code) {
    arrowsmith_doc* raw = nullptr;
    arrowsmith_status st = arrowsmith_doc_read(path.c_str(), &raw);
    if (st != ARROWSMITH_OK) {
        exit_code = fail(st);
        return nullptr;
    }
    return DocPtr(raw);
}

std::string porcelain_name(const char* name) {
    std::string out(name);
    for (char& c : out)
        if (c == ' ') c = '-';
    return out;
}

int print_report(const arrowsmith_report* rep, bool porcelain) {
    long size = arrowsmith_report_size(rep);
    if (porcelain) {
        for (long i = 0; i < size; ++i) {
            const char* witness = arrowsmith_report_witness(rep, i);
            std::printf("CHECK %s %s%s%s\n", porcelain_name(arrowsmith_report_name(rep, i)).c_str(),
                        arrowsmith_report_pass(rep, i) ? "PASS" : "FAIL",
                        witness[0] ? " " : "", witness);
        }
    } else {
        std::printf("== %s\n", arrowsmith_report_subject(rep));
        long passed = 0;
        for (long i = 0; i < size; ++i) {
            bool pass = arrowsmith_report_pass(rep, i);
            passed += pass;
            const char* witness = arrowsmith_report_witness(rep, i);
            std::printf("  [%s] %s%s%s\n", pass ? "ok" : "FAIL",
                        arrowsmith_report_name(rep, i), witness[0] ? ": " : "", witness);
        }
        std::printf("overall: %s (%ld/%ld)\n", arrowsmith_report_ok(rep) ? "PASS" : "FAIL",
                    passed, size);
    }
    return arrowsmith_report_ok(rep) ? kExitPass : kExitCheckFailed;
}

int emit_or_write(const arrowsmith_doc* doc, const std::string& out_path) {
    if (!out_path.empty()) {
        arrowsmith_status st = arrowsmith_doc_write(doc, out_path.c_str());
        return st == ARROWSMITH_OK ? kExitPass : fail(st);
    }
    char* text = nullptr;
    arrowsmith_status st = arrowsmith_doc_emit(doc, &text);
    if (st != ARROWSMITH_OK) return fail(st);
    std::fputs(text, stdout);
    arrowsmith_free_text(text);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for the non-unital / augmented algebra correspondence"};
    app.require_subcommand(1);
    app.fallthrough();  // let --porcelain etc. appear after the subcommand

    bool porcelain = false;
    app.add_flag("--porcelain", porcelain, "machine-readable CHECK lines");

    std::string file, out_path, field = "Q";
    std::uint64_t seed = 1;
    long count = 20;

    int exit_code = kExitPass;
    auto run_file_report = [&](const std::string& path, auto check_fn) {
        DocPtr doc = load(path, exit_code);
        if (!doc) return;
        arrowsmith_report* rep = nullptr;
        arrowsmith_status st = check_fn(doc.get(), &rep);
        if (st != ARROWSMITH_OK) {
            exit_code = fail(st);
            return;
        }
        ReportPtr holder(rep);
        exit_code = print_report(rep, porcelain);
    };

    auto* validate = app.add_subcommand("validate", "type-dispatched invariant checks");
    validate->add_option("file", file)->required();
    validate->callback([&] { run_file_report(file, arrowsmith_check_validate); });

    auto* unitalize = app.add_subcommand("unitalize", "emit the unitalization V+A");
    unitalize->add_option("file", file)->required();
    unitalize->add_option("-o,--output", out_path);
    unitalize->callback([&] {
        DocPtr doc = load(file, exit_code);
        if (!doc) return;
        arrowsmith_doc* out = nullptr;
        arrowsmith_status st = arrowsmith_unitalize(doc.get(), &out);
        if (st != ARROWSMITH_OK) {
            exit_code = fail(st);
            return;
        }
        DocPtr holder(out);
        exit_code = emit_or_write(out, out_path);
    });

    auto* augker = app.add_subcommand("augker", "emit the kernel of the augmentation");
    augker->add_option("file", file)->required();
    augker->add_option("-o,--output", out_path);
    augker->callback([&] {
        DocPtr doc = load(file, exit_code);
        if (!doc) return;
        arrowsmith_doc* out = nullptr;
        arrowsmith_status st = arrowsmith_augmentation_kernel(doc.get(), &out);
        if (st != ARROWSMITH_OK) {
            exit_code = fail(st);
            return;
        }
        DocPtr holder(out);
        exit_code = emit_or_write(out, out_path);
    });

    auto* roundtrip = app.add_subcommand("roundtrip", "verify both equivalence roundtrips");
    roundtrip->add_option("file", file)->required();
    roundtrip->callback([&] { run_file_report(file, arrowsmith_check_roundtrip); });

    auto* smith = app.add_subcommand("smith-check", "build and verify the Smith ideal");
    smith->add_option("file", file)->required();
    smith->callback([&] { run_file_report(file, arrowsmith_check_smith); });

    std::string pair_f, pair_g;
    auto* monoidal = app.add_subcommand("monoidal-check", "randomized arrow-category identities");
    monoidal->add_option("--seed", seed);
    monoidal->add_option("--count", count);
    monoidal->add_option("--field", field, "Q or FP:<p>");
    monoidal->add_option("--pair", pair_f, "explicit arrow file (with --with)");
    monoidal->add_option("--with", pair_g, "second arrow file");
    monoidal->callback([&] {
        arrowsmith_report* rep = nullptr;
        arrowsmith_status st;
        if (!pair_f.empty() || !pair_g.empty()) {
            DocPtr f = load(pair_f, exit_code);
            if (!f) return;
            DocPtr g = load(pair_g, exit_code);
            if (!g) return;
            st = arrowsmith_check_monoidal_pair(f.get(), g.get(), &rep);
        } else {
            st = arrowsmith_check_monoidal(field.c_str(), seed, count, &rep);
        }
        if (st != ARROWSMITH_OK) {
            exit_code = fail(st);
            return;
        }
        ReportPtr holder(rep);
        exit_code = print_report(rep, porcelain);
    });

    auto* homology = app.add_subcommand("homology", "homology dimensions per degree");
    homology->add_option("file", file)->required();
    homology->callback([&] {
        DocPtr doc = load(file, exit_code);
        if (!doc) return;
        long *degrees = nullptr, *dims = nullptr, n = 0;
        arrowsmith_status st = arrowsmith_homology(doc.get(), &degrees, &dims, &n);
        if (st != ARROWSMITH_OK) {
            exit_code = fail(st);
            return;
        }
        for (long i = 0; i < n; ++i) std::printf("H %ld %ld\n", degrees[i], dims[i]);
        arrowsmith_free_longs(degrees);
        arrowsmith_free_longs(dims);
        exit_code = kExitPass;
    });

    auto* stable = app.add_subcommand("stable-check", "randomized stability identities");
    stable->add_option("--seed", seed);
    stable->add_option("--count", count);
    stable->add_option("--field", field, "Q or FP:<p>");
    stable->callback([&] {
        arrowsmith_report* rep = nullptr;
        arrowsmith_status st = arrowsmith_check_stable(field.c_str(), seed, count, &rep);
        if (st != ARROWSMITH_OK) {
            exit_code = fail(st);
            return;
        }
        ReportPtr holder(rep);
        exit_code = print_report(rep, porcelain);
    });

    auto* dg = app.add_subcommand("dg-roundtrip", "dg unitalization roundtrip");
    dg->add_option("file", file)->required();
    dg->callback([&] { run_file_report(file, arrowsmith_check_dg_roundtrip); });

    auto* main_thm = app.add_subcommand("main-theorem", "stable correspondence desk check");
    main_thm->add_option("file", file)->required();
    main_thm->callback([&] { run_file_report(file, arrowsmith_check_main_theorem); });

    auto* corpus = app.add_subcommand("corpus", "deterministic instance generators");
    corpus->require_subcommand(1);
    auto* dump = corpus->add_subcommand("dump", "emit a corpus instance");
    std::string family;
    long param_n = 1, lo = 0, hi = 2, max_dim = 3;
    dump->add_option("family", family,
                     "truncated_polynomial | upper_triangular | cyclic_group_algebra | "
                     "square_zero | random_arrow | random_complex")
        ->required();
    dump->add_option("--field", field, "Q or FP:<p>");
    dump->add_option("-n", param_n, "family size parameter");
    dump->add_option("--seed", seed);
    dump->add_option("--lo", lo);
    dump->add_option("--hi", hi);
    dump->add_option("--max-dim", max_dim);
    dump->add_option("-o,--output", out_path);
    dump->callback([&] {
        arrowsmith_doc* out = nullptr;
        arrowsmith_status st = arrowsmith_corpus_dump(family.c_str(), field.c_str(), param_n,
                                                      seed, lo, hi, max_dim, &out);
        if (st != ARROWSMITH_OK) {
            exit_code = fail(st);
            return;
        }
        DocPtr holder(out);
        exit_code = emit_or_write(out, out_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitError;
    }
    return exit_code;
}
