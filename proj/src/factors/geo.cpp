#include <fourfa/factors/geo.hpp>
#include <fourfa/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fourfa {

bool is_valid_location(double lat, double lon)
   {
   return std::isfinite(lat) && std::isfinite(lon) &&
          lat >= -90.0 && lat <= 90.0 &&
          lon > -180.0 && lon <= 180.0;
   }

GeoPoint GeoPoint::make(double lat, double lon)
   {
   if(!is_valid_location(lat, lon))
      throw InvalidLocation("latitude/longitude out of range");
   return GeoPoint{lat, lon};
   }

double geo_distance(const GeoPoint& p, const GeoPoint& q)
   {
   constexpr double rad = std::numbers::pi / 180.0;
   const double phi1 = p.lat * rad;
   const double phi2 = q.lat * rad;
   const double dphi = (q.lat - p.lat) * rad;
   const double dlambda = (q.lon - p.lon) * rad;

   const double s1 = std::sin(dphi / 2);
   const double s2 = std::sin(dlambda / 2);
   const double a = std::clamp(s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2, 0.0, 1.0);
   return 2.0 * earth_radius_m * std::asin(std::sqrt(a));
   }

}
