#include <fourfa/crypto/sha256.hpp>

#include <bit>
#include <cstring>

namespace fourfa {

namespace {

constexpr std::array<uint32_t, 64> K = {
   0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5,
   0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174,
   0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
   0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967,
   0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
   0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
   0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
   0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2,
};

}

void Sha256::clear()
   {
   m_state = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
              0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
   m_buffer.fill(0);
   m_buffered = 0;
   m_total = 0;
   }

void Sha256::compress(const uint8_t block[64])
   {
   uint32_t w[64];
   for(int i = 0; i < 16; ++i)
      w[i] = load_be32(block + 4 * i);
   for(int i = 16; i < 64; ++i)
      {
      const uint32_t s0 = std::rotr(w[i - 15], 7) ^ std::rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
      const uint32_t s1 = std::rotr(w[i - 2], 17) ^ std::rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
      w[i] = w[i - 16] + s0 + w[i - 7] + s1;
      }

   uint32_t a = m_state[0], b = m_state[1], c = m_state[2], d = m_state[3];
   uint32_t e = m_state[4], f = m_state[5], g = m_state[6], h = m_state[7];

   for(int i = 0; i < 64; ++i)
      {
      const uint32_t S1 = std::rotr(e, 6) ^ std::rotr(e, 11) ^ std::rotr(e, 25);
      const uint32_t ch = (e & f) ^ (~e & g);
      const uint32_t t1 = h + S1 + ch + K[i] + w[i];
      const uint32_t S0 = std::rotr(a, 2) ^ std::rotr(a, 13) ^ std::rotr(a, 22);
      const uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      const uint32_t t2 = S0 + maj;
      h = g;
      g = f;
      f = e;
      e = d + t1;
      d = c;
      c = b;
      b = a;
      a = t1 + t2;
      }

   m_state[0] += a; m_state[1] += b; m_state[2] += c; m_state[3] += d;
   m_state[4] += e; m_state[5] += f; m_state[6] += g; m_state[7] += h;
   }

Sha256& Sha256::update(ByteView in)
   {
   m_total += in.size();
   std::size_t pos = 0;

   if(m_buffered > 0)
      {
      const std::size_t take = std::min(in.size(), block_size - m_buffered);
      std::memcpy(m_buffer.data() + m_buffered, in.data(), take);
      m_buffered += take;
      pos += take;
      if(m_buffered < block_size)
         return *this;
      compress(m_buffer.data());
      m_buffered = 0;
      }

   while(in.size() - pos >= block_size)
      {
      compress(in.data() + pos);
      pos += block_size;
      }

   if(pos < in.size())
      {
      std::memcpy(m_buffer.data(), in.data() + pos, in.size() - pos);
      m_buffered = in.size() - pos;
      }
   return *this;
   }

Digest256 Sha256::final()
   {
   const uint64_t bit_len = m_total * 8;

   m_buffer[m_buffered++] = 0x80;
   if(m_buffered > block_size - 8)
      {
      std::fill(m_buffer.begin() + m_buffered, m_buffer.end(), 0);
      compress(m_buffer.data());
      m_buffered = 0;
      }
   std::fill(m_buffer.begin() + m_buffered, m_buffer.end() - 8, 0);
   store_be32(static_cast<uint32_t>(bit_len >> 32), &m_buffer[56]);
   store_be32(static_cast<uint32_t>(bit_len), &m_buffer[60]);
   compress(m_buffer.data());

   Digest256 out;
   for(int i = 0; i < 8; ++i)
      store_be32(m_state[i], out.data() + 4 * i);
   clear();
   return out;
   }

}
