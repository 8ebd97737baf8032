#include <fourfa/crypto/xtea.hpp>

namespace fourfa {

namespace {

constexpr uint32_t DELTA = 0x9E3779B9;
constexpr uint32_t CYCLES = 32;

std::array<uint32_t, 4> key_words(const Key128& key)
   {
   return {load_be32(key.data()), load_be32(key.data() + 4),
           load_be32(key.data() + 8), load_be32(key.data() + 12)};
   }

}

Block64 xtea_encrypt_block(const Block64& block, const Key128& key)
   {
   const auto k = key_words(key);
   uint32_t v0 = load_be32(block.data());
   uint32_t v1 = load_be32(block.data() + 4);

   uint32_t sum = 0;
   for(uint32_t i = 0; i != CYCLES; ++i)
      {
      v0 += (((v1 << 4) ^ (v1 >> 5)) + v1) ^ (sum + k[sum & 3]);
      sum += DELTA;
      v1 += (((v0 << 4) ^ (v0 >> 5)) + v0) ^ (sum + k[(sum >> 11) & 3]);
      }

   Block64 out;
   store_be32(v0, out.data());
   store_be32(v1, out.data() + 4);
   return out;
   }

Block64 xtea_decrypt_block(const Block64& block, const Key128& key)
   {
   const auto k = key_words(key);
   uint32_t v0 = load_be32(block.data());
   uint32_t v1 = load_be32(block.data() + 4);

   uint32_t sum = DELTA * CYCLES;
   for(uint32_t i = 0; i != CYCLES; ++i)
      {
      v1 -= (((v0 << 4) ^ (v0 >> 5)) + v0) ^ (sum + k[(sum >> 11) & 3]);
      sum -= DELTA;
      v0 -= (((v1 << 4) ^ (v1 >> 5)) + v1) ^ (sum + k[sum & 3]);
      }

   Block64 out;
   store_be32(v0, out.data());
   store_be32(v1, out.data() + 4);
   return out;
   }

}
