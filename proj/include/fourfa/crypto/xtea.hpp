#pragma once

#include <fourfa/bytes.hpp>

namespace fourfa {

using Key128 = FixedBytes<16, struct Key128Tag>;
/// Two big-endian 32-bit words (v0, v1).
using Block64 = FixedBytes<8, struct Block64Tag>;

/// XTEA, 32 cycles (64 Feistel rounds), delta 0x9E3779B9, words and key big-endian.
Block64 xtea_encrypt_block(const Block64& block, const Key128& key);
Block64 xtea_decrypt_block(const Block64& block, const Key128& key);

}
