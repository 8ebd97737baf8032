#include <fourfa/merchant/verifier.hpp>
#include <fourfa/errors.hpp>
#include <fourfa/stego/envelope.hpp>

namespace fourfa {

std::string_view to_string(Outcome o)
   {
   return o == Outcome::Approve ? "approve" : "deny";
   }

std::string_view to_string(DecisionReason r)
   {
   switch(r)
      {
      case DecisionReason::Ok: return "ok";
      case DecisionReason::Tamper: return "tamper";
      case DecisionReason::NoEnvelope: return "no-envelope";
      case DecisionReason::Malformed: return "malformed";
      case DecisionReason::UnknownUser: return "unknown-user";
      case DecisionReason::Password: return "password";
      case DecisionReason::Face: return "face";
      case DecisionReason::Geolocation: return "geolocation";
      }
   return "?";
   }

Decision authenticate_payload(const TransactionPayload& payload, const UserRecord& record, const MerchantPolicy& policy)
   {
   if(!verify_password(record, payload.password))
      return Decision::deny(DecisionReason::Password);
   if(match_face(payload.face, record.face) < policy.face_threshold)
      return Decision::deny(DecisionReason::Face);
   if(!verify_location(record, payload.geo, policy.geofence_radius_m))
      return Decision::deny(DecisionReason::Geolocation);
   return Decision::approve();
   }

Decision process_envelope(const RasterImage& image,
                          ByteView mac_pass,
                          ByteView key_pass,
                          const UserStore& store,
                          const MerchantPolicy& policy)
   {
   Bytes plaintext;
   try
      {
      plaintext = open_envelope(image, mac_pass, key_pass);
      }
   catch(const BadMagic&)
      {
      return Decision::deny(DecisionReason::NoEnvelope);
      }
   catch(const EnvelopeError&)
      {
      return Decision::deny(DecisionReason::Tamper);
      }

   TransactionPayload payload;
   try
      {
      payload = parse_payload(plaintext);
      }
   catch(const MalformedPayload&)
      {
      return Decision::deny(DecisionReason::Malformed);
      }

   const auto record = store.get(payload.username);
   if(!record)
      return Decision::deny(DecisionReason::UnknownUser);

   return authenticate_payload(payload, *record, policy);
   }

}
