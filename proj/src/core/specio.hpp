#pragma once

#include <optional>
#include <string>

#include "core/cipher.hpp"
#include "core/subspace.hpp"

namespace primanal {

// Cipher-spec document (JSON): fields `name`, `n_t`, `m`, `sboxes` (array of
// 2^m-entry integer arrays, or the string "inversion"), `lambda` (array of
// n_b hex-string rows, or one of "aes", "identity", "rotate"), optional
// `seed`, optional `planted_U` (hex basis rows, carried for trapdoor specs).
struct ParsedCipherFile {
    CipherSpec cipher;
    std::optional<Subspace> planted;
};

ParsedCipherFile cipher_from_spec_json(const std::string& text);
std::string cipher_to_spec_json(const CipherSpec& spec, const Subspace* planted = nullptr);

}  // namespace primanal
