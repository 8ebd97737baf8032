#include <fourfa/crypto/kdf.hpp>
#include <fourfa/crypto/sha256.hpp>

namespace fourfa {

Key128 derive_key(ByteView passphrase)
   {
   const Digest256 d = Sha256::hash(passphrase);
   return Key128::from(d.view().first(16));
   }

}
