#include <fourfa/crypto/cbc.hpp>
#include <fourfa/errors.hpp>

#include <cstring>

namespace fourfa {

std::size_t cbc_ciphertext_length(std::size_t plaintext_length)
   {
   return 8 * (plaintext_length / 8 + 1);
   }

Bytes cbc_encrypt(ByteView plaintext, const Key128& key, const Block64& iv)
   {
   const std::size_t out_len = cbc_ciphertext_length(plaintext.size());
   const uint8_t pad = static_cast<uint8_t>(out_len - plaintext.size());

   Bytes out(out_len);
   std::memcpy(out.data(), plaintext.data(), plaintext.size());
   std::memset(out.data() + plaintext.size(), pad, pad);

   Block64 chain = iv;
   for(std::size_t off = 0; off != out_len; off += 8)
      {
      Block64 x;
      for(std::size_t i = 0; i != 8; ++i)
         x.bytes[i] = out[off + i] ^ chain.bytes[i];
      chain = xtea_encrypt_block(x, key);
      std::memcpy(out.data() + off, chain.data(), 8);
      }
   return out;
   }

Bytes cbc_decrypt(ByteView ciphertext, const Key128& key, const Block64& iv)
   {
   if(ciphertext.empty() || ciphertext.size() % 8 != 0)
      throw LengthError("ciphertext length must be a positive multiple of 8");

   Bytes out(ciphertext.size());
   Block64 chain = iv;
   for(std::size_t off = 0; off != ciphertext.size(); off += 8)
      {
      const Block64 c = Block64::from(ciphertext.subspan(off, 8));
      const Block64 p = xtea_decrypt_block(c, key);
      for(std::size_t i = 0; i != 8; ++i)
         out[off + i] = p.bytes[i] ^ chain.bytes[i];
      chain = c;
      }

   const uint8_t pad = out.back();
   if(pad < 1 || pad > 8)
      throw PaddingError("invalid padding");
   for(std::size_t i = out.size() - pad; i != out.size(); ++i)
      {
      if(out[i] != pad)
         throw PaddingError("invalid padding");
      }
   out.resize(out.size() - pad);
   return out;
   }

}
