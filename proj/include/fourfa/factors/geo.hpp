#pragma once

namespace fourfa {

inline constexpr double earth_radius_m = 6371000.0;
inline constexpr double default_geofence_m = 500.0;

/// Latitude in [-90, 90], longitude in (-180, 180], both in degrees.
struct GeoPoint
   {
   double lat = 0.0;
   double lon = 0.0;

   /// Throws InvalidLocation when out of range or not finite.
   static GeoPoint make(double lat, double lon);

   friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
   };

bool is_valid_location(double lat, double lon);

/// Haversine great-circle distance in meters on a sphere of radius earth_radius_m.
double geo_distance(const GeoPoint& p, const GeoPoint& q);

}
