#pragma once

#include <string>
#include <string_view>

#include <fourfa/bytes.hpp>
#include <fourfa/crypto/sha256.hpp>
#include <fourfa/factors/face.hpp>
#include <fourfa/factors/geo.hpp>

namespace fourfa {

using Salt128 = FixedBytes<16, struct Salt128Tag>;

/// Enrolled identity. The password itself is never kept, only
/// SHA-256(pw_salt || password).
struct UserRecord
   {
   std::string username;
   Salt128 pw_salt;
   Digest256 pw_digest;
   FaceTemplate face;
   GeoPoint home;

   friend bool operator==(const UserRecord&, const UserRecord&) = default;
   };

/// 1..64 bytes, no ASCII control characters.
bool is_valid_username(std::string_view username);

/// Throws InvalidUsername.
void check_username(std::string_view username);

/// Throws InvalidUsername, InvalidLocation or ImageTooSmall.
UserRecord enroll_user(std::string_view username,
                       ByteView password,
                       const RasterImage& face_image,
                       const GeoPoint& home,
                       const Salt128& salt);

/// Constant-time digest comparison.
bool verify_password(const UserRecord& record, ByteView password);

inline bool verify_password(const UserRecord& record, std::string_view password)
   {
   return verify_password(record, as_bytes(password));
   }

/// Geofence check: distance(home, reported) <= radius_m.
bool verify_location(const UserRecord& record, const GeoPoint& reported, double radius_m = default_geofence_m);

}
