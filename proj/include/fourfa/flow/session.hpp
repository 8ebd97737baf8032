#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <fourfa/factors/face.hpp>
#include <fourfa/factors/geo.hpp>
#include <fourfa/factors/otp.hpp>
#include <fourfa/factors/sms.hpp>
#include <fourfa/factors/user_store.hpp>
#include <fourfa/image/raster.hpp>
#include <fourfa/random.hpp>

namespace fourfa {

enum class SessionState
   {
   AwaitPassword,
   AwaitOtp,
   OtpPending,
   ParallelChecks,
   Authenticated,
   Completed,
   Denied,
   };

enum class DenyReason
   {
   None,
   Password,
   Otp,
   Face,
   Geolocation,
   };

std::string_view to_string(SessionState s);
std::string_view to_string(DenyReason r);

/// One transaction's progress through the four factors.
struct Session
   {
   std::string id;
   std::string username;
   SessionState state = SessionState::AwaitPassword;
   // Meaningful in ParallelChecks; both true once Authenticated.
   bool face_done = false;
   bool geo_done = false;
   DenyReason denied = DenyReason::None;
   std::optional<OtpChallenge> challenge;
   std::optional<FaceTemplate> face_submitted;
   std::optional<GeoPoint> reported_location;
   Timestamp created_at{};

   bool terminal() const
      {
      return state == SessionState::Completed || state == SessionState::Denied;
      }

   friend bool operator==(const Session&, const Session&) = default;
   };

struct PasswordSubmitted { std::string password; };
struct OtpRequested {};
struct OtpSubmitted { std::string code; };
struct FaceSubmitted { RasterImage image; };
struct LocationReported { GeoPoint point; };
struct FinalizeRequested { RasterImage cover; };

using FactorEvent = std::variant<PasswordSubmitted,
                                 OtpRequested,
                                 OtpSubmitted,
                                 FaceSubmitted,
                                 LocationReported,
                                 FinalizeRequested>;

std::string_view event_name(const FactorEvent& ev);

struct FlowSettings
   {
   int otp_digits = default_otp_digits;
   std::chrono::seconds otp_ttl = default_otp_ttl;
   double face_threshold = default_face_threshold;
   double geofence_radius_m = default_geofence_m;
   std::chrono::seconds session_lifetime{15 * 60};
   };

/// Everything apply_event may consult besides the session itself. The OTP is
/// dispatched to the session id as destination.
struct FlowContext
   {
   const UserStore& store;
   SmsTransport& transport;
   RandomSource& rng;
   FlowSettings settings{};
   };

/// 128 random bits, URL-safe base64 without padding.
std::string new_session_id(RandomSource& rng);

/// Throws InvalidUsername.
Session begin_session(std::string_view username, Timestamp now, RandomSource& rng);

/*
* Ordered four-factor transitions:
*
*   AwaitPassword  + PasswordSubmitted -> AwaitOtp        | Denied(password)
*   AwaitOtp       + OtpRequested      -> OtpPending
*   OtpPending     + OtpSubmitted      -> ParallelChecks  | Denied(otp)
*   ParallelChecks + FaceSubmitted     -> face_done       | Denied(face)
*   ParallelChecks + LocationReported  -> geo_done        | Denied(geolocation)
*   ParallelChecks with both done      -> Authenticated
*   Authenticated  + FinalizeRequested -> Completed
*
* Any other pairing throws InvalidTransition. Terminal or expired sessions
* throw TerminalSession. The input session is never modified.
*/
Session apply_event(const Session& session, const FactorEvent& event, const FlowContext& ctx, Timestamp now);

}
