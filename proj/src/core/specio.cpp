#include "core/specio.hpp"

#include <json.hpp>

namespace primanal {

using nlohmann::json;

namespace {

BitMatrix lambda_from_field(const json& j, const Partition& part) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "identity") return BitMatrix::identity(part.n_b());
        if (name == "aes") {
            if (part.n_t != 16 || part.m != 8) {
                throw ParseError("lambda \"aes\" requires n_t=16 and m=8");
            }
            return aes_spec().lambda;
        }
        if (name == "rotate") {
            // same layout as the toy preset: block i feeds block i+1
            BitMatrix m = BitMatrix::zero(part.n_b(), part.n_b());
            for (int i = 0; i < part.n_t; ++i) {
                for (int b = 0; b < part.m; ++b) {
                    m.row[part.m * i + b] =
                        BitVec::unit(part.n_b(), part.m * ((i + 1) % part.n_t) + b);
                }
            }
            return m;
        }
        throw ParseError("unknown lambda preset \"" + name + "\"");
    }
    if (!j.is_array()) throw ParseError("field \"lambda\" must be a preset name or hex rows");
    std::vector<std::string> rows;
    for (const auto& r : j) {
        if (!r.is_string()) throw ParseError("field \"lambda\" rows must be hex strings");
        rows.push_back(r.get<std::string>());
    }
    if (static_cast<int>(rows.size()) != part.n_b()) {
        throw ParseError("field \"lambda\" needs exactly n_b rows");
    }
    try {
        return mat_from_hex_rows(part.n_b(), rows);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("field \"lambda\": ") + e.what());
    }
}

}  // namespace

ParsedCipherFile cipher_from_spec_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) throw ParseError("cipher spec must be a JSON object");
    for (const char* field : {"n_t", "m", "sboxes", "lambda"}) {
        if (!j.contains(field)) throw ParseError(std::string("missing field \"") + field + "\"");
    }

    Partition part;
    try {
        part.n_t = j.at("n_t").get<int>();
        part.m = j.at("m").get<int>();
    } catch (const json::exception&) {
        throw ParseError("fields \"n_t\" and \"m\" must be integers");
    }
    if (part.n_t < 1 || part.m < 1 || part.n_b() > kMaxWidth) {
        throw ParseError("fields \"n_t\"/\"m\" out of range (need n_t*m <= 128)");
    }

    std::vector<SBoxTable> sboxes;
    const json& js = j.at("sboxes");
    if (js.is_string()) {
        if (js.get<std::string>() != "inversion") {
            throw ParseError("field \"sboxes\" string form must be \"inversion\"");
        }
        sboxes.assign(part.n_t, inversion_sbox(part.m));
    } else if (js.is_array()) {
        if (static_cast<int>(js.size()) != part.n_t) {
            throw ParseError("field \"sboxes\" needs exactly n_t tables");
        }
        for (const auto& tj : js) {
            if (!tj.is_array()) throw ParseError("each S-box must be an integer array");
            std::vector<uint32_t> table;
            for (const auto& e : tj) {
                if (!e.is_number_unsigned() && !e.is_number_integer()) {
                    throw ParseError("S-box entries must be integers");
                }
                const int64_t v = e.get<int64_t>();
                if (v < 0) throw ParseError("S-box entries must be non-negative");
                table.push_back(static_cast<uint32_t>(v));
            }
            try {
                sboxes.emplace_back(part.m, std::move(table));
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("field \"sboxes\": ") + e.what());
            }
        }
    } else {
        throw ParseError("field \"sboxes\" must be \"inversion\" or an array of tables");
    }

    BitMatrix lambda = lambda_from_field(j.at("lambda"), part);

    std::string name = j.value("name", std::string("cipher"));

    ParsedCipherFile out;
    try {
        out.cipher = make_cipher(std::move(name), part, std::move(sboxes), std::move(lambda));
    } catch (const SingularMatrixError&) {
        throw ParseError("field \"lambda\" is singular; the mixing layer must be invertible");
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    if (j.contains("planted_U")) {
        const json& ju = j.at("planted_U");
        if (!ju.is_array()) throw ParseError("field \"planted_U\" must be an array of hex rows");
        std::vector<BitVec> gens;
        for (const auto& r : ju) {
            if (!r.is_string()) throw ParseError("field \"planted_U\" rows must be hex strings");
            gens.push_back(vec_from_hex(part.n_b(), r.get<std::string>()));
        }
        out.planted = subspace_from_generators(part.n_b(), gens);
    }
    return out;
}

std::string cipher_to_spec_json(const CipherSpec& spec, const Subspace* planted) {
    json j;
    j["name"] = spec.name;
    j["n_t"] = spec.part.n_t;
    j["m"] = spec.part.m;
    json tables = json::array();
    for (const auto& s : spec.sboxes) tables.push_back(s.table);
    j["sboxes"] = std::move(tables);
    j["lambda"] = mat_hex_rows(spec.lambda);
    if (planted != nullptr) j["planted_U"] = subspace_hex_rows(*planted);
    return j.dump(2);
}

}  // namespace primanal
