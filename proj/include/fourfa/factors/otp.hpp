#pragma once

#include <chrono>
#include <string_view>

#include <fourfa/crypto/sha256.hpp>
#include <fourfa/factors/sms.hpp>
#include <fourfa/factors/user.hpp>
#include <fourfa/random.hpp>

namespace fourfa {

using Timestamp = std::chrono::sys_seconds;

inline constexpr int default_otp_digits = 6;
inline constexpr std::chrono::seconds default_otp_ttl{120};
inline constexpr int otp_max_attempts = 3;

/// Commitment to an issued code. The code itself is not retained.
struct OtpChallenge
   {
   Salt128 salt;
   Digest256 commitment;   // SHA-256(salt || code_ascii)
   int digits = default_otp_digits;
   Timestamp issued_at{};
   std::chrono::seconds ttl = default_otp_ttl;
   int attempts_left = otp_max_attempts;

   friend bool operator==(const OtpChallenge&, const OtpChallenge&) = default;
   };

/// Draws a uniform code of `digits` digits (4 or 6), sends it to
/// `destination`, and returns the commitment. TransportError propagates.
OtpChallenge issue_otp(int digits,
                       Timestamp now,
                       std::chrono::seconds ttl,
                       RandomSource& rng,
                       SmsTransport& transport,
                       std::string_view destination);

/// Consumes one attempt. True iff within the TTL and the code matches.
/// Throws ChallengeLocked when no attempts remain.
bool verify_otp(OtpChallenge& challenge, std::string_view code, Timestamp now);

}
