#pragma once

#include <string_view>

#include <fourfa/factors/user_store.hpp>
#include <fourfa/flow/payload.hpp>
#include <fourfa/image/raster.hpp>

namespace fourfa {

enum class Outcome { Approve, Deny };

enum class DecisionReason
   {
   Ok,
   Tamper,
   NoEnvelope,
   Malformed,
   UnknownUser,
   Password,
   Face,
   Geolocation,
   };

std::string_view to_string(Outcome o);
std::string_view to_string(DecisionReason r);

/// Approve pairs only with Ok.
struct Decision
   {
   Outcome outcome = Outcome::Deny;
   DecisionReason reason = DecisionReason::Tamper;

   static Decision approve() { return {Outcome::Approve, DecisionReason::Ok}; }
   static Decision deny(DecisionReason r) { return {Outcome::Deny, r}; }

   friend bool operator==(const Decision&, const Decision&) = default;
   };

struct MerchantPolicy
   {
   double geofence_radius_m = default_geofence_m;
   double face_threshold = default_face_threshold;
   };

/// Password, then face, then geolocation; the first failure names the reason.
Decision authenticate_payload(const TransactionPayload& payload, const UserRecord& record, const MerchantPolicy& policy);

/// Opens, parses, looks up and authenticates. Never throws for bad input:
/// every failure becomes a Deny.
Decision process_envelope(const RasterImage& image,
                          ByteView mac_pass,
                          ByteView key_pass,
                          const UserStore& store,
                          const MerchantPolicy& policy);

}
