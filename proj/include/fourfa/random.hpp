#pragma once

#include <cstdint>
#include <random>
#include <span>

#include <fourfa/bytes.hpp>

namespace fourfa {

/// Entropy source used for salts, IVs, OTP codes and session ids.
class RandomSource
   {
   public:
      virtual ~RandomSource() = default;

      virtual void fill(std::span<uint8_t> out) = 0;

      Bytes bytes(std::size_t n)
         {
         Bytes out(n);
         fill(out);
         return out;
         }

      template<class Fixed>
      Fixed fixed()
         {
         Fixed out;
         fill(out.bytes);
         return out;
         }

      uint32_t next_u32();

      /// Uniform draw from [0, bound) by rejection; bound must be nonzero.
      uint32_t uniform(uint32_t bound);
   };

/// Kernel CSPRNG (getrandom). Thread-safe.
class SystemRandom final : public RandomSource
   {
   public:
      void fill(std::span<uint8_t> out) override;
   };

/// Seeded, reproducible stream for tests and model checking. Not for secrets.
class DeterministicRandom final : public RandomSource
   {
   public:
      explicit DeterministicRandom(uint64_t seed) : m_gen(seed) {}
      void fill(std::span<uint8_t> out) override;
   private:
      std::mt19937_64 m_gen;
   };

}
