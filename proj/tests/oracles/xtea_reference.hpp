// Reference XTEA as published by Needham and Wheeler (1997), kept verbatim in
// structure so it stays independent of the library implementation. Only the
// byte packing helpers are added; they read words big-endian.
#pragma once

#include <cstdint>

namespace fourfa::oracle {

inline void xtea_ref_encipher(unsigned int num_rounds, uint32_t v[2], const uint32_t key[4])
{
   uint32_t v0 = v[0], v1 = v[1], sum = 0, delta = 0x9E3779B9;
   for(unsigned int i = 0; i < num_rounds; i++)
   {
      v0 += (((v1 << 4) ^ (v1 >> 5)) + v1) ^ (sum + key[sum & 3]);
      sum += delta;
      v1 += (((v0 << 4) ^ (v0 >> 5)) + v0) ^ (sum + key[(sum >> 11) & 3]);
   }
   v[0] = v0;
   v[1] = v1;
}

inline void xtea_ref_decipher(unsigned int num_rounds, uint32_t v[2], const uint32_t key[4])
{
   uint32_t v0 = v[0], v1 = v[1], delta = 0x9E3779B9, sum = delta * num_rounds;
   for(unsigned int i = 0; i < num_rounds; i++)
   {
      v1 -= (((v0 << 4) ^ (v0 >> 5)) + v0) ^ (sum + key[(sum >> 11) & 3]);
      sum -= delta;
      v0 -= (((v1 << 4) ^ (v1 >> 5)) + v1) ^ (sum + key[sum & 3]);
   }
   v[0] = v0;
   v[1] = v1;
}

inline uint32_t ref_load_be32(const uint8_t* p)
{
   return (uint32_t(p[0]) << 24) | (uint32_t(p[1]) << 16) | (uint32_t(p[2]) << 8) | uint32_t(p[3]);
}

inline void ref_store_be32(uint32_t w, uint8_t* p)
{
   p[0] = uint8_t(w >> 24);
   p[1] = uint8_t(w >> 16);
   p[2] = uint8_t(w >> 8);
   p[3] = uint8_t(w);
}

// 8-byte block, 16-byte key, 32 cycles.
inline void xtea_ref_encrypt_bytes(const uint8_t in[8], const uint8_t key_bytes[16], uint8_t out[8])
{
   uint32_t key[4];
   for(int i = 0; i < 4; ++i)
      key[i] = ref_load_be32(key_bytes + 4 * i);
   uint32_t v[2] = {ref_load_be32(in), ref_load_be32(in + 4)};
   xtea_ref_encipher(32, v, key);
   ref_store_be32(v[0], out);
   ref_store_be32(v[1], out + 4);
}

inline void xtea_ref_decrypt_bytes(const uint8_t in[8], const uint8_t key_bytes[16], uint8_t out[8])
{
   uint32_t key[4];
   for(int i = 0; i < 4; ++i)
      key[i] = ref_load_be32(key_bytes + 4 * i);
   uint32_t v[2] = {ref_load_be32(in), ref_load_be32(in + 4)};
   xtea_ref_decipher(32, v, key);
   ref_store_be32(v[0], out);
   ref_store_be32(v[1], out + 4);
}

}
