#include <fourfa/flow/session.hpp>
#include <fourfa/errors.hpp>

namespace fourfa {

std::string_view to_string(SessionState s)
   {
   switch(s)
      {
      case SessionState::AwaitPassword: return "AwaitPassword";
      case SessionState::AwaitOtp: return "AwaitOtp";
      case SessionState::OtpPending: return "OtpPending";
      case SessionState::ParallelChecks: return "ParallelChecks";
      case SessionState::Authenticated: return "Authenticated";
      case SessionState::Completed: return "Completed";
      case SessionState::Denied: return "Denied";
      }
   return "?";
   }

std::string_view to_string(DenyReason r)
   {
   switch(r)
      {
      case DenyReason::None: return "none";
      case DenyReason::Password: return "password";
      case DenyReason::Otp: return "otp";
      case DenyReason::Face: return "face";
      case DenyReason::Geolocation: return "geolocation";
      }
   return "?";
   }

std::string_view event_name(const FactorEvent& ev)
   {
   static constexpr std::string_view names[] = {
      "PasswordSubmitted", "OtpRequested", "OtpSubmitted",
      "FaceSubmitted", "LocationReported", "FinalizeRequested",
   };
   return names[ev.index()];
   }

std::string new_session_id(RandomSource& rng)
   {
   static constexpr char alphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
   uint8_t raw[16];
   rng.fill(raw);

   std::string out;
   uint32_t acc = 0;
   int bits = 0;
   for(uint8_t b : raw)
      {
      acc = (acc << 8) | b;
      bits += 8;
      while(bits >= 6)
         {
         bits -= 6;
         out.push_back(alphabet[(acc >> bits) & 0x3F]);
         }
      }
   if(bits > 0)
      out.push_back(alphabet[(acc << (6 - bits)) & 0x3F]);
   return out;
   }

Session begin_session(std::string_view username, Timestamp now, RandomSource& rng)
   {
   check_username(username);
   Session s;
   s.id = new_session_id(rng);
   s.username = std::string(username);
   s.state = SessionState::AwaitPassword;
   s.created_at = now;
   return s;
   }

namespace {

[[noreturn]] void invalid(const Session& s, const FactorEvent& ev)
   {
   throw InvalidTransition(std::string(event_name(ev)) + " not allowed in state " + std::string(to_string(s.state)));
   }

void deny(Session& s, DenyReason why)
   {
   s.state = SessionState::Denied;
   s.denied = why;
   }

void settle_parallel_checks(Session& s)
   {
   if(s.state == SessionState::ParallelChecks && s.face_done && s.geo_done)
      s.state = SessionState::Authenticated;
   }

}

Session apply_event(const Session& session, const FactorEvent& event, const FlowContext& ctx, Timestamp now)
   {
   if(session.terminal())
      throw TerminalSession("session already " + std::string(to_string(session.state)));
   if(now >= session.created_at + ctx.settings.session_lifetime)
      throw TerminalSession("session expired");

   Session next = session;

   if(auto* ev = std::get_if<PasswordSubmitted>(&event))
      {
      if(session.state != SessionState::AwaitPassword)
         invalid(session, event);
      // Unknown users fail exactly like wrong passwords.
      const auto rec = ctx.store.get(session.username);
      if(rec && verify_password(*rec, ev->password))
         next.state = SessionState::AwaitOtp;
      else
         deny(next, DenyReason::Password);
      }
   else if(std::holds_alternative<OtpRequested>(event))
      {
      if(session.state != SessionState::AwaitOtp)
         invalid(session, event);
      next.challenge = issue_otp(ctx.settings.otp_digits, now, ctx.settings.otp_ttl,
                                 ctx.rng, ctx.transport, session.id);
      next.state = SessionState::OtpPending;
      }
   else if(auto* ev = std::get_if<OtpSubmitted>(&event))
      {
      if(session.state != SessionState::OtpPending || !next.challenge)
         invalid(session, event);
      if(verify_otp(*next.challenge, ev->code, now))
         {
         next.state = SessionState::ParallelChecks;
         next.face_done = false;
         next.geo_done = false;
         }
      else
         {
         deny(next, DenyReason::Otp);
         }
      }
   else if(auto* ev = std::get_if<FaceSubmitted>(&event))
      {
      if(session.state != SessionState::ParallelChecks || session.face_done)
         invalid(session, event);
      FaceTemplate t = face_to_template(ev->image);
      const auto rec = ctx.store.get(session.username);
      const bool ok = rec && match_face(t, rec->face) >= ctx.settings.face_threshold;
      next.face_submitted = std::move(t);
      if(ok)
         next.face_done = true;
      else
         deny(next, DenyReason::Face);
      settle_parallel_checks(next);
      }
   else if(auto* ev = std::get_if<LocationReported>(&event))
      {
      if(session.state != SessionState::ParallelChecks || session.geo_done)
         invalid(session, event);
      if(!is_valid_location(ev->point.lat, ev->point.lon))
         throw InvalidLocation("reported location out of range");
      const auto rec = ctx.store.get(session.username);
      const bool ok = rec && verify_location(*rec, ev->point, ctx.settings.geofence_radius_m);
      next.reported_location = ev->point;
      if(ok)
         next.geo_done = true;
      else
         deny(next, DenyReason::Geolocation);
      settle_parallel_checks(next);
      }
   else if(std::holds_alternative<FinalizeRequested>(event))
      {
      if(session.state != SessionState::Authenticated)
         invalid(session, event);
      next.state = SessionState::Completed;
      }

   return next;
   }

}
