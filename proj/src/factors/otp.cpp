#include <fourfa/factors/otp.hpp>
#include <fourfa/crypto/ct.hpp>
#include <fourfa/errors.hpp>

#include <cstdio>

namespace fourfa {

namespace {

Digest256 commit(const Salt128& salt, std::string_view code)
   {
   return Sha256().update(salt.view()).update(code).final();
   }

}

OtpChallenge issue_otp(int digits,
                       Timestamp now,
                       std::chrono::seconds ttl,
                       RandomSource& rng,
                       SmsTransport& transport,
                       std::string_view destination)
   {
   if(digits != 4 && digits != 6)
      throw std::invalid_argument("OTP must have 4 or 6 digits");
   if(ttl.count() <= 0)
      throw std::invalid_argument("OTP TTL must be positive");

   const uint32_t modulus = digits == 4 ? 10000 : 1000000;
   const uint32_t value = rng.uniform(modulus);
   char code[8];
   std::snprintf(code, sizeof(code), "%0*u", digits, value);

   OtpChallenge ch;
   ch.salt = rng.fixed<Salt128>();
   ch.commitment = commit(ch.salt, code);
   ch.digits = digits;
   ch.issued_at = now;
   ch.ttl = ttl;
   ch.attempts_left = otp_max_attempts;

   transport.send(destination, otp_message_body(code));
   return ch;
   }

bool verify_otp(OtpChallenge& challenge, std::string_view code, Timestamp now)
   {
   if(challenge.attempts_left <= 0)
      throw ChallengeLocked("OTP challenge locked after too many attempts");
   --challenge.attempts_left;

   const Digest256 d = commit(challenge.salt, code);
   const bool match = constant_time_equal(d.view(), challenge.commitment.view());
   return match && now <= challenge.issued_at + challenge.ttl;
   }

}
