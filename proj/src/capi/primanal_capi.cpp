#include "primanal.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/blocksys.hpp"
#include "core/cipher.hpp"
#include "core/fieldfacts.hpp"
#include "core/primitivity.hpp"
#include "core/render.hpp"
#include "core/specio.hpp"
#include "core/trapdoor.hpp"

struct pa_cipher {
    primanal::CipherSpec spec;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

primanal::ReportFormat to_format(pa_format f) {
    return f == PA_FORMAT_JSON ? primanal::ReportFormat::Json : primanal::ReportFormat::Text;
}

// Run fn, translating exceptions to status codes and the thread-local
// error message.
template <typename Fn>
pa_status guarded(Fn&& fn) {
    try {
        fn();
        return PA_OK;
    } catch (const primanal::ParseError& e) {
        g_last_error = e.what();
        return PA_ERR_PARSE;
    } catch (const primanal::SingularMatrixError& e) {
        g_last_error = e.what();
        return PA_ERR_SINGULAR;
    } catch (const primanal::EnumerationTooLargeError& e) {
        g_last_error = e.what();
        return PA_ERR_TOO_LARGE;
    } catch (const primanal::InconsistentOracleError& e) {
        g_last_error = e.what();
        return PA_ERR_INCONSISTENT;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PA_ERR_USAGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PA_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* pa_version(void) { return "1.0.0"; }

const char* pa_last_error(void) { return g_last_error.c_str(); }

void pa_string_free(char* s) { std::free(s); }

pa_status pa_cipher_from_preset(const char* preset, uint64_t seed, pa_cipher** out) {
    if (!preset || !out) {
        g_last_error = "null argument";
        return PA_ERR_USAGE;
    }
    return guarded([&] {
        *out = new pa_cipher{primanal::cipher_from_preset(preset, seed)};
    });
}

pa_status pa_cipher_from_spec_json(const char* json_text, pa_cipher** out) {
    if (!json_text || !out) {
        g_last_error = "null argument";
        return PA_ERR_USAGE;
    }
    return guarded([&] {
        *out = new pa_cipher{primanal::cipher_from_spec_json(json_text).cipher};
    });
}

pa_status pa_cipher_to_spec_json(const pa_cipher* cipher, char** out_json) {
    if (!cipher || !out_json) {
        g_last_error = "null argument";
        return PA_ERR_USAGE;
    }
    return guarded([&] { *out_json = dup_string(primanal::cipher_to_spec_json(cipher->spec)); });
}

void pa_cipher_free(pa_cipher* cipher) { delete cipher; }

int pa_cipher_block_bits(const pa_cipher* cipher) { return cipher ? cipher->spec.n_b() : 0; }

int pa_cipher_block_count(const pa_cipher* cipher) {
    return cipher ? cipher->spec.part.n_t : 0;
}

pa_status pa_analyze(const pa_cipher* cipher, int s, uint64_t budget, pa_format format,
                     char** out_report, int* out_verdict) {
    if (!cipher || !out_report || !out_verdict) {
        g_last_error = "null argument";
        return PA_ERR_USAGE;
    }
    return guarded([&] {
        const primanal::PrimitivityReport rep = primanal::verify_primitivity(
            cipher->spec, s, budget ? budget : primanal::kDefaultEnumBudget);
        *out_report = dup_string(primanal::render_primitivity(rep, to_format(format)));
        *out_verdict = rep.certified ? PA_CERTIFIED_PRIMITIVE : PA_INCONCLUSIVE;
    });
}

pa_status pa_find_block_systems(const pa_cipher* cipher, uint64_t seed, int sampled,
                                pa_format format, char** out_report, int* out_found) {
    if (!cipher || !out_report || !out_found) {
        g_last_error = "null argument";
        return PA_ERR_USAGE;
    }
    return guarded([&] {
        primanal::ClosureOptions opts;
        opts.sampled = sampled != 0;
        opts.seed = seed;
        const primanal::FindBlocksOutcome out = primanal::run_find_blocks(cipher->spec, opts);
        if (!out.methods_agree) {
            throw std::logic_error("closure and group-action methods disagree");
        }
        *out_report = dup_string(primanal::render_find_blocks(cipher->spec, out, to_format(format)));
        *out_found = out.closure.exists_nontrivial ? 1 : 0;
    });
}

pa_status pa_trapdoor_demo(int n_bits, int dim, uint64_t seed, int pair_count, pa_format format,
                           char** out_report, char** out_spec_json) {
    if (!out_report) {
        g_last_error = "null argument";
        return PA_ERR_USAGE;
    }
    return guarded([&] {
        const primanal::TrapdoorDemoReport rep =
            primanal::run_trapdoor_demo(n_bits, dim, seed, pair_count);
        *out_report = dup_string(primanal::render_trapdoor_demo(rep, to_format(format)));
        if (out_spec_json) {
            // rebuild to serialize; construction is deterministic in the seed
            const primanal::TrapdoorSpec td = primanal::build_trapdoor_cipher(n_bits, dim, seed);
            *out_spec_json =
                dup_string(primanal::cipher_to_spec_json(td.cipher, &td.planted));
        }
    });
}

pa_status pa_field_appendix(int m, pa_format format, char** out_report, int* out_all_subfields) {
    if (!out_report || !out_all_subfields) {
        g_last_error = "null argument";
        return PA_ERR_USAGE;
    }
    return guarded([&] {
        const primanal::AppendixReport rep = primanal::run_field_appendix(m);
        *out_report = dup_string(primanal::render_field_appendix(rep, to_format(format)));
        *out_all_subfields = rep.catalog.all_subfields ? 1 : 0;
    });
}

pa_status pa_count_subspaces(int n, int k, char** out_decimal) {
    if (!out_decimal) {
        g_last_error = "null argument";
        return PA_ERR_USAGE;
    }
    return guarded([&] {
        *out_decimal = dup_string(primanal::u128_to_string(primanal::count_subspaces(n, k)));
    });
}

}  // extern "C"
