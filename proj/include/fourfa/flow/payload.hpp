#pragma once

#include <string>

#include <fourfa/bytes.hpp>
#include <fourfa/crypto/xtea.hpp>
#include <fourfa/factors/face.hpp>
#include <fourfa/factors/geo.hpp>
#include <fourfa/flow/session.hpp>
#include <fourfa/image/raster.hpp>

namespace fourfa {

/// The four credentials shipped to the merchant.
struct TransactionPayload
   {
   std::string username;
   std::string password;
   FaceTemplate face;
   GeoPoint geo;

   friend bool operator==(const TransactionPayload&, const TransactionPayload&) = default;
   };

/// Throws NotAuthenticated unless the session is Authenticated.
TransactionPayload assemble_payload(const Session& session, std::string_view password);

/*
* Text form, every line terminated by '\n':
*
*   MTRK-PAYLOAD/1
*   user=<username>
*   pass=<password>
*   geo=<lat>,<lon>          fixed notation, 6 decimals
*   face=64x32
*   <32 rows of 64 ramp characters>
*
* Throws MalformedPayload if a field cannot be represented (control
* characters in the username, a newline in the password).
*/
Bytes serialize_payload(const TransactionPayload& payload);

/// Strict inverse of serialize_payload. Throws MalformedPayload naming the
/// first offending line.
TransactionPayload parse_payload(ByteView text);

/// Seals the serialized payload into the cover and moves the session to
/// Completed. The session is untouched when any error is thrown
/// (NotAuthenticated, TerminalSession, CapacityExceeded).
RasterImage finalize_transaction(Session& session,
                                 const TransactionPayload& payload,
                                 const RasterImage& cover,
                                 ByteView mac_pass,
                                 ByteView key_pass,
                                 const Block64& iv);

}
