#include "arrowsmith/arrowsmith.h"

#include <cstring>
#include <new>
#include <string>

#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/io.hpp"
#include "core/suites.hpp"

using namespace arrowsmith;

struct arrowsmith_doc {
    Document value;
};

struct arrowsmith_report {
    Report value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs fn, translating exceptions into status codes + last_error.
template <typename Fn>
arrowsmith_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        set_error(e.what());
        return ARROWSMITH_ERROR_PARSE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return ARROWSMITH_ERROR_USAGE;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return ARROWSMITH_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ARROWSMITH_ERROR_INTERNAL;
    }
}

arrowsmith_status make_report(Report rep, arrowsmith_report** out) {
    *out = new arrowsmith_report{std::move(rep)};
    return ARROWSMITH_OK;
}

Field field_from_spec(const char* spec) {
    if (!spec) return Field::rationals();
    return Field::parse_spec(spec);
}

}  // namespace

extern "C" {

const char* arrowsmith_version(void) { return "0.1.0"; }

const char* arrowsmith_last_error(void) { return g_last_error.c_str(); }

arrowsmith_status arrowsmith_doc_read(const char* path, arrowsmith_doc** out) {
    return guarded([&] {
        if (!path || !out) throw std::invalid_argument("doc_read: null argument");
        try {
            *out = new arrowsmith_doc{read_document(path)};
        } catch (const ParseError&) {
            throw;
        } catch (const std::runtime_error& e) {
            set_error(e.what());
            return ARROWSMITH_ERROR_IO;
        }
        return ARROWSMITH_OK;
    });
}

arrowsmith_status arrowsmith_doc_parse(const char* text, arrowsmith_doc** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("doc_parse: null argument");
        *out = new arrowsmith_doc{parse_document(text)};
        return ARROWSMITH_OK;
    });
}

arrowsmith_status arrowsmith_doc_write(const arrowsmith_doc* doc, const char* path) {
    return guarded([&] {
        if (!doc || !path) throw std::invalid_argument("doc_write: null argument");
        try {
            write_document(doc->value, path);
        } catch (const std::runtime_error& e) {
            set_error(e.what());
            return ARROWSMITH_ERROR_IO;
        }
        return ARROWSMITH_OK;
    });
}

arrowsmith_status arrowsmith_doc_emit(const arrowsmith_doc* doc, char** out_text) {
    return guarded([&] {
        if (!doc || !out_text) throw std::invalid_argument("doc_emit: null argument");
        std::string text = emit_document(doc->value);
        *out_text = new char[text.size() + 1];
        std::memcpy(*out_text, text.c_str(), text.size() + 1);
        return ARROWSMITH_OK;
    });
}

const char* arrowsmith_doc_kind(const arrowsmith_doc* doc) {
    static thread_local std::string kind;
    if (!doc) return "";
    kind = document_kind(doc->value);
    return kind.c_str();
}

void arrowsmith_doc_free(arrowsmith_doc* doc) { delete doc; }

void arrowsmith_free_text(char* text) { delete[] text; }

arrowsmith_status arrowsmith_unitalize(const arrowsmith_doc* doc, arrowsmith_doc** out) {
    return guarded([&] {
        if (!doc || !out) throw std::invalid_argument("unitalize: null argument");
        const auto* a = std::get_if<NonUnitalAlgebra>(&doc->value);
        if (!a) throw std::invalid_argument("unitalize needs a non-unital algebra file");
        *out = new arrowsmith_doc{unitalize(*a)};
        return ARROWSMITH_OK;
    });
}

arrowsmith_status arrowsmith_augmentation_kernel(const arrowsmith_doc* doc,
                                                 arrowsmith_doc** out) {
    return guarded([&] {
        if (!doc || !out) throw std::invalid_argument("augmentation_kernel: null argument");
        const auto* b = std::get_if<AugmentedAlgebra>(&doc->value);
        if (!b) throw std::invalid_argument("augker needs an augmented algebra file");
        *out = new arrowsmith_doc{augmentation_kernel(*b).first};
        return ARROWSMITH_OK;
    });
}

arrowsmith_status arrowsmith_corpus_dump(const char* family, const char* field_spec, long n,
                                         uint64_t seed, long lo, long hi, long max_dim,
                                         arrowsmith_doc** out) {
    return guarded([&] {
        if (!family || !out) throw std::invalid_argument("corpus_dump: null argument");
        Field field = field_from_spec(field_spec);
        std::string fam(family);
        Document doc = [&]() -> Document {
            if (fam == "truncated_polynomial")
                return truncated_polynomial(field, static_cast<std::size_t>(n));
            if (fam == "upper_triangular")
                return upper_triangular(field, static_cast<std::size_t>(n));
            if (fam == "cyclic_group_algebra")
                return cyclic_group_algebra(field, static_cast<std::size_t>(n));
            if (fam == "square_zero") {
                if (n < 0) throw std::invalid_argument("square_zero needs n >= 0");
                return square_zero(field, static_cast<std::size_t>(n));
            }
            if (fam == "random_arrow")
                return random_arrow(seed, field, static_cast<std::size_t>(max_dim));
            if (fam == "random_complex")
                return random_complex(seed, field, static_cast<int>(lo), static_cast<int>(hi),
                                      static_cast<std::size_t>(max_dim));
            throw std::invalid_argument("unknown corpus family '" + fam + "'");
        }();
        *out = new arrowsmith_doc{std::move(doc)};
        return ARROWSMITH_OK;
    });
}

arrowsmith_status arrowsmith_check_validate(const arrowsmith_doc* doc, arrowsmith_report** out) {
    return guarded([&] {
        if (!doc || !out) throw std::invalid_argument("check_validate: null argument");
        return make_report(validate_document(doc->value), out);
    });
}

arrowsmith_status arrowsmith_check_roundtrip(const arrowsmith_doc* doc, arrowsmith_report** out) {
    return guarded([&] {
        if (!doc || !out) throw std::invalid_argument("check_roundtrip: null argument");
        return make_report(roundtrip_check(doc->value), out);
    });
}

arrowsmith_status arrowsmith_check_smith(const arrowsmith_doc* doc, arrowsmith_report** out) {
    return guarded([&] {
        if (!doc || !out) throw std::invalid_argument("check_smith: null argument");
        return make_report(smith_check(doc->value), out);
    });
}

arrowsmith_status arrowsmith_check_monoidal(const char* field, uint64_t seed, long count,
                                            arrowsmith_report** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("check_monoidal: null argument");
        if (count < 0) throw std::invalid_argument("count must be non-negative");
        return make_report(monoidal_suite(field_from_spec(field), seed, count), out);
    });
}

arrowsmith_status arrowsmith_check_stable(const char* field, uint64_t seed, long count,
                                          arrowsmith_report** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("check_stable: null argument");
        if (count < 0) throw std::invalid_argument("count must be non-negative");
        return make_report(stable_suite(field_from_spec(field), seed, count), out);
    });
}

arrowsmith_status arrowsmith_check_dg_roundtrip(const arrowsmith_doc* doc,
                                                arrowsmith_report** out) {
    return guarded([&] {
        if (!doc || !out) throw std::invalid_argument("check_dg_roundtrip: null argument");
        return make_report(dg_roundtrip_check(doc->value), out);
    });
}

arrowsmith_status arrowsmith_check_main_theorem(const arrowsmith_doc* doc,
                                                arrowsmith_report** out) {
    return guarded([&] {
        if (!doc || !out) throw std::invalid_argument("check_main_theorem: null argument");
        return make_report(main_theorem_check_doc(doc->value), out);
    });
}

arrowsmith_status arrowsmith_check_monoidal_pair(const arrowsmith_doc* f, const arrowsmith_doc* g,
                                                 arrowsmith_report** out) {
    return guarded([&] {
        if (!f || !g || !out) throw std::invalid_argument("check_monoidal_pair: null argument");
        const auto* fa = std::get_if<ArrowObject>(&f->value);
        const auto* ga = std::get_if<ArrowObject>(&g->value);
        if (!fa || !ga) throw std::invalid_argument("monoidal pair check needs two arrow files");
        return make_report(monoidal_pair_check(*fa, *ga), out);
    });
}

arrowsmith_status arrowsmith_homology(const arrowsmith_doc* doc, long** degrees, long** dims,
                                      long* count) {
    return guarded([&] {
        if (!doc || !degrees || !dims || !count)
            throw std::invalid_argument("homology: null argument");
        const ChainComplex* complex = nullptr;
        if (const auto* c = std::get_if<ChainComplex>(&doc->value))
            complex = c;
        else if (const auto* m = std::get_if<ChainMapDoc>(&doc->value))
            complex = &m->map.src();
        else if (const auto* a = std::get_if<DGAlgebraNU>(&doc->value))
            complex = &a->carrier;
        if (!complex) throw std::invalid_argument("homology needs a chain-complex style file");
        auto table = homology(*complex);
        *degrees = new long[table.size()];
        *dims = new long[table.size()];
        for (std::size_t i = 0; i < table.size(); ++i) {
            (*degrees)[i] = table[i].first;
            (*dims)[i] = static_cast<long>(table[i].second);
        }
        *count = static_cast<long>(table.size());
        return ARROWSMITH_OK;
    });
}

void arrowsmith_free_longs(long* data) { delete[] data; }

long arrowsmith_report_size(const arrowsmith_report* report) {
    return report ? static_cast<long>(report->value.records().size()) : 0;
}

int arrowsmith_report_ok(const arrowsmith_report* report) {
    return report && report->value.ok() ? 1 : 0;
}

const char* arrowsmith_report_subject(const arrowsmith_report* report) {
    return report ? report->value.subject().c_str() : "";
}

const char* arrowsmith_report_name(const arrowsmith_report* report, long i) {
    if (!report || i < 0 || i >= arrowsmith_report_size(report)) return "";
    return report->value.records()[static_cast<std::size_t>(i)].name.c_str();
}

int arrowsmith_report_pass(const arrowsmith_report* report, long i) {
    if (!report || i < 0 || i >= arrowsmith_report_size(report)) return 0;
    return report->value.records()[static_cast<std::size_t>(i)].pass ? 1 : 0;
}

const char* arrowsmith_report_witness(const arrowsmith_report* report, long i) {
    if (!report || i < 0 || i >= arrowsmith_report_size(report)) return "";
    return report->value.records()[static_cast<std::size_t>(i)].witness.c_str();
}

void arrowsmith_report_free(arrowsmith_report* report) { delete report; }

}  // extern "C"
