#include "core/render.hpp"

#include <sstream>

#include <json.hpp>

namespace primanal {

using nlohmann::json;

namespace {

json subspace_json(const Subspace& s) {
    json j;
    j["dim"] = s.dim();
    j["codim"] = s.codim();
    j["basis"] = subspace_hex_rows(s);
    return j;
}

std::string subspace_oneline(const Subspace& s) {
    std::string out = "dim " + std::to_string(s.dim()) + " <";
    for (int i = 0; i < s.dim(); ++i) {
        if (i) out += ", ";
        out += to_hex(s.basis[i]);
    }
    out += ">";
    return out;
}

json block_report_json(const BlockSystemReport& rep) {
    json j;
    j["method"] = rep.method;
    j["exists_nontrivial"] = rep.exists_nontrivial;
    j["sampled"] = rep.sampled;
    j["seeds_examined"] = rep.seeds_examined;
    j["seeds_skipped"] = rep.seeds_skipped;
    json subs = json::array();
    for (const auto& s : rep.invariant_subspaces) subs.push_back(subspace_json(s));
    j["invariant_subspaces"] = std::move(subs);
    json trace = json::array();
    for (const auto& t : rep.trace) {
        trace.push_back({{"seed", to_hex(t.seed)}, {"closure_dim", t.closure_dim}});
    }
    j["trace"] = std::move(trace);
    return j;
}

void block_report_text(std::ostream& os, const BlockSystemReport& rep, int n_b) {
    os << "method " << rep.method << (rep.sampled ? " (sampled, heuristic)" : "") << ": "
       << (rep.exists_nontrivial ? "NONTRIVIAL BLOCK SYSTEM FOUND" : "no nontrivial block system")
       << "\n";
    os << "  seeds examined " << rep.seeds_examined << ", skipped " << rep.seeds_skipped << "\n";
    for (const auto& s : rep.invariant_subspaces) {
        os << "  invariant subspace " << subspace_oneline(s);
        if (rep.method == "GROUP_ACTION") {
            os << "  [block size " << (uint64_t{1} << s.dim()) << ", "
               << (uint64_t{1} << (n_b - s.dim())) << " blocks]";
        }
        os << "\n";
    }
}

}  // namespace

std::string render_primitivity(const PrimitivityReport& rep, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        json j;
        j["cipher"] = rep.cipher_name;
        j["n_t"] = rep.n_t;
        j["m"] = rep.m;
        j["s"] = rep.s;
        j["condition1"] = {{"pass", rep.condition1_pass}, {"s", rep.s}};
        json images = json::array();
        for (const auto& [idx, mi] : rep.per_sbox_min_image) {
            images.push_back({{"sbox", idx}, {"min_image_size", mi}});
        }
        j["per_sbox_min_image"] = std::move(images);
        j["min_image_size"] = rep.min_image_size;
        j["max_image_r"] = rep.max_image_r ? json(*rep.max_image_r) : json(nullptr);
        j["achieved_r"] = rep.achieved_r ? json(*rep.achieved_r) : json(nullptr);
        json offenders = json::array();
        for (const auto& [idx, s] : rep.invariant_subspaces_found) {
            json e = subspace_json(s);
            e["sbox"] = idx;
            offenders.push_back(std::move(e));
        }
        j["invariant_subspaces_found"] = std::move(offenders);
        j["lambda_invariant_sums"] = rep.lambda_invariant_sums;
        j["single_block_policy_fail"] = rep.single_block_policy_fail;
        j["verdict"] = rep.verdict;
        j["reason"] = rep.reason;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "primitivity analysis of " << rep.cipher_name << " (n_t=" << rep.n_t
       << ", m=" << rep.m << ", s=" << rep.s << ")\n";
    os << "  condition 1 (0 fixed, gamma^s = 1): " << (rep.condition1_pass ? "pass" : "FAIL")
       << "\n";
    os << "  min differential image size: " << rep.min_image_size;
    if (rep.max_image_r) {
        os << "  (image bound admits r up to " << *rep.max_image_r << ")";
    } else {
        os << "  (no admissible r)";
    }
    os << "\n";
    if (rep.achieved_r) os << "  r used: " << *rep.achieved_r << "\n";
    for (const auto& [idx, s] : rep.invariant_subspaces_found) {
        os << "  S-box " << idx << " invariant subspace: " << subspace_oneline(s) << "\n";
    }
    for (const auto& blocks : rep.lambda_invariant_sums) {
        os << "  lambda-invariant block sum: {";
        for (size_t i = 0; i < blocks.size(); ++i) os << (i ? "," : "") << blocks[i];
        os << "}\n";
    }
    if (rep.single_block_policy_fail) os << "  single-block cipher (policy: not certified)\n";
    os << "verdict: " << rep.verdict << (rep.reason.empty() ? "" : " - " + rep.reason) << "\n";
    return os.str();
}

std::string render_find_blocks(const CipherSpec& spec, const FindBlocksOutcome& out,
                               ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        json j;
        j["cipher"] = spec.name;
        j["n_b"] = spec.n_b();
        j["closure"] = block_report_json(out.closure);
        if (out.group) {
            j["group_action"] = block_report_json(*out.group);
            j["methods_agree"] = out.methods_agree;
        }
        j["exists_nontrivial"] = out.closure.exists_nontrivial;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "block-system search for " << spec.name << " (n_b=" << spec.n_b() << ")\n";
    block_report_text(os, out.closure, spec.n_b());
    if (out.group) {
        block_report_text(os, *out.group, spec.n_b());
        os << "methods agree: " << (out.methods_agree ? "yes" : "NO") << "\n";
    }
    return os.str();
}

std::string render_trapdoor_demo(const TrapdoorDemoReport& rep, ReportFormat fmt) {
    const uint64_t full_search = uint64_t{1} << rep.n_b;
    if (fmt == ReportFormat::Json) {
        json j;
        j["n_b"] = rep.n_b;
        j["d"] = rep.d;
        j["seed"] = rep.seed;
        j["planted_U"] = subspace_json(rep.planted);
        j["pair_count"] = rep.pair_count;
        j["distinguisher_trapdoor"] = rep.distinguisher_trapdoor;
        j["distinguisher_control"] = rep.distinguisher_control;
        j["control_baseline"] = rep.control_baseline;
        j["control_cipher"] = rep.control_name;
        j["attack"] = {{"recovered_key", to_hex(rep.attack.recovered_key)},
                       {"withheld_key", to_hex(rep.withheld_key)},
                       {"recovered", rep.attack.recovered_key == rep.withheld_key},
                       {"trial_count", rep.attack.trial_count},
                       {"trial_bound", rep.attack.theoretical_bound},
                       {"full_search", full_search}};
        j["same_dim_subspace_count"] = u128_to_string(rep.same_dim_subspace_count);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "trapdoor demo: n_b=" << rep.n_b << ", d=" << rep.d << ", seed=" << rep.seed << "\n";
    os << "planted U: " << subspace_oneline(rep.planted) << "\n";
    os << "distinguisher (" << rep.pair_count << " pairs):\n";
    os << "  trapdoor cipher: " << rep.distinguisher_trapdoor << "\n";
    os << "  control " << rep.control_name << ": " << rep.distinguisher_control
       << "  (baseline " << rep.control_baseline << ")\n";
    os << "one-round known-plaintext attack (key withheld):\n";
    os << "  recovered key " << to_hex(rep.attack.recovered_key) << " == withheld "
       << to_hex(rep.withheld_key) << ": "
       << (rep.attack.recovered_key == rep.withheld_key ? "yes" : "NO") << "\n";
    os << "  trials " << rep.attack.trial_count << " <= bound " << rep.attack.theoretical_bound
       << " (vs " << full_search << " full search)\n";
    os << "subspaces of dimension " << rep.d << " in " << rep.n_b << " bits: "
       << u128_to_string(rep.same_dim_subspace_count) << "\n";
    return os.str();
}

std::string render_field_appendix(const AppendixReport& rep, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        json j;
        j["m"] = rep.catalog.m;
        j["poly"] = rep.catalog.poly;
        j["subspaces_swept"] = u128_to_string(rep.catalog.subspaces_swept);
        json entries = json::array();
        for (const auto& e : rep.catalog.entries) {
            json ej = subspace_json(e.subspace);
            ej["subfield"] = e.subfield;
            entries.push_back(std::move(ej));
        }
        j["inversion_closed_subspaces"] = std::move(entries);
        j["all_subfields"] = rep.catalog.all_subfields;
        j["hua"] = {{"checked", rep.hua.checked}, {"passed", rep.hua.passed}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "GF(2^" << rep.catalog.m << "), reduction polynomial 0x" << std::hex
       << rep.catalog.poly << std::dec << "\n";
    os << "swept " << u128_to_string(rep.catalog.subspaces_swept)
       << " subspaces; inversion-closed nonzero subspaces:\n";
    for (const auto& e : rep.catalog.entries) {
        os << "  " << subspace_oneline(e.subspace) << "  subfield: "
           << (e.subfield ? "yes" : "NO") << "\n";
    }
    os << "all inversion-closed subspaces are subfields: "
       << (rep.catalog.all_subfields ? "yes" : "NO") << "\n";
    os << "Hua identity sweep: " << rep.hua.passed << "/" << rep.hua.checked << " pairs pass\n";
    return os.str();
}

}  // namespace primanal
