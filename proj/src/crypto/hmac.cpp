#include <fourfa/crypto/hmac.hpp>
#include <fourfa/crypto/sha256.hpp>

namespace fourfa {

MacTag hmac_sha256(ByteView key, ByteView message)
   {
   std::array<uint8_t, Sha256::block_size> k0{};
   if(key.size() > Sha256::block_size)
      {
      const Digest256 hk = Sha256::hash(key);
      std::copy(hk.bytes.begin(), hk.bytes.end(), k0.begin());
      }
   else
      {
      std::copy(key.begin(), key.end(), k0.begin());
      }

   std::array<uint8_t, Sha256::block_size> ipad, opad;
   for(std::size_t i = 0; i != k0.size(); ++i)
      {
      ipad[i] = k0[i] ^ 0x36;
      opad[i] = k0[i] ^ 0x5C;
      }

   Sha256 h;
   const Digest256 inner = h.update(ipad).update(message).final();
   const Digest256 outer = h.update(opad).update(inner.view()).final();
   return MacTag{outer.bytes};
   }

}
