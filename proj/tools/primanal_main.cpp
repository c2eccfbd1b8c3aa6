// Command-line front end; talks to the analysis library purely through the
// C interface in primanal.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "primanal.h"

namespace {

constexpr uint64_t kDefaultSeed = 1;

// 0 = good outcome, 1 = error, 2 = inconclusive, 3 = block system found
enum ExitCode { kExitOk = 0, kExitError = 1, kExitInconclusive = 2, kExitBlockSystem = 3 };

struct CommonOpts {
    std::string spec_file;
    std::string preset;
    uint64_t seed = kDefaultSeed;
    uint64_t budget = 0;  // 0 = library default
    std::string format = "text";
    bool sampled = false;
};

void add_spec_source(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("specfile", opts.spec_file, "cipher-spec JSON file");
    cmd->add_option("--preset", opts.preset, "cipher preset (aes, toy:<n_t>x<m>:<sbox>:<lambda>)");
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "seed for randomized components");
    cmd->add_option("--budget", opts.budget, "enumeration budget");
    cmd->add_option("--format", opts.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

pa_format format_of(const CommonOpts& opts) {
    return opts.format == "json" ? PA_FORMAT_JSON : PA_FORMAT_TEXT;
}

int fail(const char* context) {
    std::cerr << "error: " << context << ": " << pa_last_error() << "\n";
    return kExitError;
}

// Returns nullptr and reports on failure; caller owns the handle.
pa_cipher* load_cipher(const CommonOpts& opts) {
    if (opts.preset.empty() == opts.spec_file.empty()) {
        std::cerr << "error: give exactly one of a spec file or --preset\n";
        return nullptr;
    }
    pa_cipher* cipher = nullptr;
    if (!opts.preset.empty()) {
        if (pa_cipher_from_preset(opts.preset.c_str(), opts.seed, &cipher) != PA_OK) {
            fail("loading preset");
            return nullptr;
        }
        return cipher;
    }
    std::ifstream in(opts.spec_file);
    if (!in) {
        std::cerr << "error: cannot open spec file: " << opts.spec_file << "\n";
        return nullptr;
    }
    std::ostringstream text;
    text << in.rdbuf();
    if (pa_cipher_from_spec_json(text.str().c_str(), &cipher) != PA_OK) {
        fail("parsing spec file");
        return nullptr;
    }
    return cipher;
}

int cmd_analyze(const CommonOpts& opts, int s) {
    pa_cipher* cipher = load_cipher(opts);
    if (!cipher) return kExitError;
    char* report = nullptr;
    int verdict = 0;
    const pa_status st = pa_analyze(cipher, s, opts.budget, format_of(opts), &report, &verdict);
    pa_cipher_free(cipher);
    if (st != PA_OK) return fail("analysis");
    std::cout << report;
    pa_string_free(report);
    return verdict == PA_CERTIFIED_PRIMITIVE ? kExitOk : kExitInconclusive;
}

int cmd_find_blocks(const CommonOpts& opts) {
    pa_cipher* cipher = load_cipher(opts);
    if (!cipher) return kExitError;
    char* report = nullptr;
    int found = 0;
    const pa_status st = pa_find_block_systems(cipher, opts.seed, opts.sampled ? 1 : 0,
                                               format_of(opts), &report, &found);
    pa_cipher_free(cipher);
    if (st != PA_OK) return fail("block-system search");
    std::cout << report;
    pa_string_free(report);
    return found ? kExitBlockSystem : kExitOk;
}

int cmd_trapdoor(const CommonOpts& opts, int bits, int dim, int pairs,
                 const std::string& out_file) {
    char* report = nullptr;
    char* spec_json = nullptr;
    const pa_status st = pa_trapdoor_demo(bits, dim, opts.seed, pairs, format_of(opts), &report,
                                          out_file.empty() ? nullptr : &spec_json);
    if (st != PA_OK) return fail("trapdoor demo");
    std::cout << report;
    pa_string_free(report);
    if (spec_json) {
        std::ofstream out(out_file);
        if (!out) {
            std::cerr << "error: cannot write " << out_file << "\n";
            pa_string_free(spec_json);
            return kExitError;
        }
        out << spec_json << "\n";
        pa_string_free(spec_json);
        std::cerr << "wrote trapdoor spec to " << out_file << "\n";
    }
    return kExitOk;
}

int cmd_field_appendix(const CommonOpts& opts, int m) {
    char* report = nullptr;
    int all_subfields = 0;
    const pa_status st = pa_field_appendix(m, format_of(opts), &report, &all_subfields);
    if (st != PA_OK) return fail("field appendix");
    std::cout << report;
    pa_string_free(report);
    return all_subfields ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis of block-cipher round-function groups"};
    app.require_subcommand(1);

    CommonOpts opts;
    int s = 2;
    int bits = 16, dim = 8, pairs = 10000;
    int m = 8;
    std::string out_file;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "certify primitivity of the round-function group (exit 0) or report "
                   "the failing condition (exit 2)");
    add_spec_source(analyze, opts);
    add_common(analyze, opts);
    analyze->add_option("--s", s, "order of the S-box layer (gamma^s = 1)");

    CLI::App* find = app.add_subcommand(
        "find-blocks", "search for block systems / invariant subspaces (exit 3 when found)");
    add_spec_source(find, opts);
    add_common(find, opts);
    find->add_flag("--sampled", opts.sampled, "heuristic sampled search for wide states");

    CLI::App* trapdoor = app.add_subcommand(
        "trapdoor", "plant an invariant subspace, distinguish it, and run the coset attack");
    add_common(trapdoor, opts);
    trapdoor->add_option("--bits", bits, "state width in bits")->required();
    trapdoor->add_option("--dim", dim, "dimension of the planted subspace")->required();
    trapdoor->add_option("--pairs", pairs, "distinguisher sample count");
    trapdoor->add_option("--out", out_file, "write the trapdoor cipher spec to this file");

    CLI::App* field = app.add_subcommand("field", "finite-field fact checks");
    field->require_subcommand(1);
    CLI::App* appendix = field->add_subcommand(
        "appendix", "catalog inversion-closed subspaces (subfields) and sweep the Hua identity");
    add_common(appendix, opts);
    appendix->add_option("--m", m, "field degree, 2..8")->required();

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) return cmd_analyze(opts, s);
    if (find->parsed()) return cmd_find_blocks(opts);
    if (trapdoor->parsed()) return cmd_trapdoor(opts, bits, dim, pairs, out_file);
    if (field->parsed() && appendix->parsed()) return cmd_field_appendix(opts, m);
    return kExitError;
}
