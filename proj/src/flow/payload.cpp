#include <fourfa/flow/payload.hpp>
#include <fourfa/errors.hpp>
#include <fourfa/factors/user.hpp>
#include <fourfa/stego/envelope.hpp>

#include <charconv>
#include <cstdio>
#include <vector>

namespace fourfa {

namespace {

constexpr std::string_view HEADER = "MTRK-PAYLOAD/1";
constexpr std::string_view FACE_LINE = "face=64x32";
constexpr std::size_t LINE_COUNT = 5 + FaceTemplate::rows;

std::string format_degrees(double v)
   {
   char buf[32];
   std::snprintf(buf, sizeof(buf), "%.6f", v);
   return buf;
   }

/// Accepts -?(0|[1-9][0-9]*)\.[0-9]{6} and nothing else.
bool parse_degrees(std::string_view s, double& out)
   {
   std::string_view digits = s;
   if(!digits.empty() && digits.front() == '-')
      digits.remove_prefix(1);
   const auto dot = digits.find('.');
   if(dot == std::string_view::npos || dot == 0 || digits.size() - dot - 1 != 6)
      return false;
   if(dot > 1 && digits[0] == '0')
      return false;
   for(std::size_t i = 0; i != digits.size(); ++i)
      {
      if(i != dot && (digits[i] < '0' || digits[i] > '9'))
         return false;
      }
   const auto res = std::from_chars(s.data(), s.data() + s.size(), out, std::chars_format::fixed);
   return res.ec == std::errc() && res.ptr == s.data() + s.size();
   }

}

TransactionPayload assemble_payload(const Session& session, std::string_view password)
   {
   if(session.state != SessionState::Authenticated)
      throw NotAuthenticated("session is " + std::string(to_string(session.state)));
   if(!session.face_submitted || !session.reported_location)
      throw NotAuthenticated("session lacks face or location");

   TransactionPayload p;
   p.username = session.username;
   p.password = std::string(password);
   p.face = *session.face_submitted;
   p.geo = *session.reported_location;
   return p;
   }

Bytes serialize_payload(const TransactionPayload& payload)
   {
   if(!is_valid_username(payload.username))
      throw MalformedPayload(2, "username not representable");
   if(payload.password.find('\n') != std::string::npos)
      throw MalformedPayload(3, "password contains a newline");

   std::string out;
   out.reserve(2200 + payload.username.size() + payload.password.size());
   out.append(HEADER).push_back('\n');
   out.append("user=").append(payload.username).push_back('\n');
   out.append("pass=").append(payload.password).push_back('\n');
   out.append("geo=").append(format_degrees(payload.geo.lat)).append(",")
      .append(format_degrees(payload.geo.lon)).push_back('\n');
   out.append(FACE_LINE).push_back('\n');
   for(std::size_t r = 0; r != FaceTemplate::rows; ++r)
      out.append(payload.face.row(r)).push_back('\n');
   return to_bytes(out);
   }

TransactionPayload parse_payload(ByteView bytes)
   {
   const std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());

   std::vector<std::string_view> lines;
   std::size_t pos = 0;
   while(pos < text.size() && lines.size() < LINE_COUNT)
      {
      const auto nl = text.find('\n', pos);
      if(nl == std::string_view::npos)
         throw MalformedPayload(lines.size() + 1, "line not newline-terminated");
      lines.push_back(text.substr(pos, nl - pos));
      pos = nl + 1;
      }

   auto field = [&](std::size_t idx, std::string_view prefix) -> std::string_view {
      if(idx >= lines.size())
         throw MalformedPayload(idx + 1, "missing line");
      if(lines[idx].substr(0, prefix.size()) != prefix)
         throw MalformedPayload(idx + 1, "expected '" + std::string(prefix) + "'");
      return lines[idx].substr(prefix.size());
   };

   TransactionPayload p;

   if(lines.empty() || lines[0] != HEADER)
      throw MalformedPayload(1, "bad header");

   p.username = std::string(field(1, "user="));
   if(!is_valid_username(p.username))
      throw MalformedPayload(2, "invalid username");

   p.password = std::string(field(2, "pass="));

   const std::string_view geo = field(3, "geo=");
   const auto comma = geo.find(',');
   double lat = 0, lon = 0;
   if(comma == std::string_view::npos ||
      !parse_degrees(geo.substr(0, comma), lat) ||
      !parse_degrees(geo.substr(comma + 1), lon) ||
      !is_valid_location(lat, lon))
      throw MalformedPayload(4, "invalid geolocation");
   p.geo = GeoPoint{lat, lon};

   if(field(4, FACE_LINE).size() != 0)
      throw MalformedPayload(5, "bad face header");

   std::string cells;
   cells.reserve(FaceTemplate::cell_count);
   for(std::size_t r = 0; r != FaceTemplate::rows; ++r)
      {
      const std::size_t idx = 5 + r;
      if(idx >= lines.size())
         throw MalformedPayload(idx + 1, "face block has " + std::to_string(r) + " rows");
      const std::string_view row = lines[idx];
      if(row.size() != FaceTemplate::cols)
         throw MalformedPayload(idx + 1, "face row must have 64 characters");
      for(char c : row)
         {
         if(!FaceTemplate::in_ramp(c))
            throw MalformedPayload(idx + 1, "face cell outside the ramp");
         }
      cells.append(row);
      }
   p.face = FaceTemplate::from_cells(std::move(cells));

   if(pos != text.size())
      throw MalformedPayload(LINE_COUNT + 1, "trailing data");

   return p;
   }

RasterImage finalize_transaction(Session& session,
                                 const TransactionPayload& payload,
                                 const RasterImage& cover,
                                 ByteView mac_pass,
                                 ByteView key_pass,
                                 const Block64& iv)
   {
   if(session.terminal())
      throw TerminalSession("session already " + std::string(to_string(session.state)));
   if(session.state != SessionState::Authenticated)
      throw NotAuthenticated("session is " + std::string(to_string(session.state)));

   RasterImage stego = seal_envelope(cover, serialize_payload(payload), mac_pass, key_pass, iv);
   session.state = SessionState::Completed;
   return stego;
   }

}
