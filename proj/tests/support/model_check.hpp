// Exhaustive check of the four-factor state machine over every event
// sequence up to a given length, with each event kind in a succeeding and a
// failing variant.
//
// Transitions depend only on the current node (session plus the last code
// dispatched to it, plus the factor history), so it is enough to visit each
// node reachable within max_len - 1 events once and try every symbol from it.
#pragma once

#include "support/flow_harness.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace fourfa::test {

enum class Symbol
   {
   PasswordOk, PasswordBad,
   OtpRequestOk, OtpRequestFail,
   OtpOk, OtpBad,
   FaceOk, FaceBad,
   LocationOk, LocationBad,
   FinalizeOk, FinalizeBad,
   };

inline constexpr int symbol_count = 12;

struct ModelCheckReport
   {
   std::size_t nodes = 0;
   std::size_t transitions = 0;
   std::size_t reached_authenticated = 0;
   std::size_t reached_completed = 0;
   std::size_t unsafe_authentications = 0;      // Authenticated without P, O, {F, G} in order
   std::size_t terminal_escapes = 0;            // Denied/Completed changed by an event
   std::size_t order_violations = 0;            // OTP before password, face/geo before OTP
   std::size_t finalize_disagreements = 0;      // apply_event vs finalize_transaction
   long double sequences_covered = 0;           // sum over k <= max_len of 12^k
   std::vector<std::string> examples;           // first few violations
   };

namespace detail {

struct Node
   {
   Session session;
   std::string code;       // last code dispatched to this session
   std::string history;    // successful factors in order: P, O, F, G
   };

inline std::string node_key(const Node& n)
   {
   const Session& s = n.session;
   std::string k(to_string(s.state));
   k += '|';
   k += s.face_done ? 'f' : '-';
   k += s.geo_done ? 'g' : '-';
   k += to_string(s.denied);
   k += '|';
   k += s.challenge ? std::to_string(s.challenge->attempts_left) : "x";
   k += s.face_submitted ? 'F' : '-';
   k += s.reported_location ? 'L' : '-';
   k += '|';
   k += n.history;
   return k;
   }

inline bool safe_history(const std::string& h)
   {
   return h == "POFG" || h == "POGF";
   }

}

inline ModelCheckReport model_check_flow(int max_len)
   {
   using detail::Node;

   Bank bank;
   const RasterImage small_cover = random_cover(bank.rng, 64, 64);    // 1536 bytes: too small
   const RasterImage huge_cover = random_cover(bank.rng, 96, 96);     // 3456 bytes: fits
   TransactionPayload placeholder{"alice", bank.password, bank.alice.face, bank.alice.home};

   ModelCheckReport rep;
   for(int k = 0; k <= max_len; ++k)
      rep.sequences_covered += std::pow(12.0L, k);

   auto note = [&](std::size_t& counter, const std::string& what) {
      ++counter;
      if(rep.examples.size() < 10)
         rep.examples.push_back(what);
   };

   std::map<std::string, Node> visited;
   std::vector<Node> frontier;
   {
      Node root{begin_session("alice", T0, bank.rng), "", ""};
      visited.emplace(detail::node_key(root), root);
      frontier.push_back(root);
   }

   for(int depth = 0; depth < max_len && !frontier.empty(); ++depth)
      {
      std::vector<Node> next_frontier;
      for(const Node& node : frontier)
         {
         for(int sym = 0; sym != symbol_count; ++sym)
            {
            ++rep.transitions;
            Node next = node;
            const Session& s = node.session;
            const std::string where = detail::node_key(node) + " + symbol " + std::to_string(sym);

            auto apply = [&](const FactorEvent& ev) {
               try
                  {
                  next.session = apply_event(s, ev, bank.ctx(), T0);
                  return true;
                  }
               catch(const InvalidTransition&) {}
               catch(const TerminalSession&) {}
               catch(const TransportError&) {}
               return false;
            };

            bool accepted = false;
            switch(static_cast<Symbol>(sym))
               {
               case Symbol::PasswordOk:
                  accepted = apply(PasswordSubmitted{bank.password});
                  break;
               case Symbol::PasswordBad:
                  accepted = apply(PasswordSubmitted{"not-" + bank.password});
                  break;
               case Symbol::OtpRequestOk:
               case Symbol::OtpRequestFail:
                  bank.sms.set_failing(static_cast<Symbol>(sym) == Symbol::OtpRequestFail);
                  accepted = apply(OtpRequested{});
                  bank.sms.set_failing(false);
                  if(accepted)
                     next.code = *bank.sms.last_code_for(s.id);
                  break;
               case Symbol::OtpOk:
               case Symbol::OtpBad:
                  {
                  std::string code = node.code.empty() ? "000000" : node.code;
                  if(static_cast<Symbol>(sym) == Symbol::OtpBad)
                     code[0] = code[0] == '9' ? '0' : static_cast<char>(code[0] + 1);
                  accepted = apply(OtpSubmitted{code});
                  break;
                  }
               case Symbol::FaceOk:
                  accepted = apply(FaceSubmitted{bank.good_face()});
                  break;
               case Symbol::FaceBad:
                  accepted = apply(FaceSubmitted{bank.bad_face()});
                  break;
               case Symbol::LocationOk:
                  accepted = apply(LocationReported{bank.good_location()});
                  break;
               case Symbol::LocationBad:
                  accepted = apply(LocationReported{bank.offset_location(600)});
                  break;
               case Symbol::FinalizeOk:
               case Symbol::FinalizeBad:
                  {
                  const bool fits = static_cast<Symbol>(sym) == Symbol::FinalizeOk;
                  const RasterImage& cover = fits ? huge_cover : small_cover;
                  Session via_flow = s;
                  bool flow_ok = false;
                  try
                     {
                     via_flow = apply_event(s, FinalizeRequested{cover}, bank.ctx(), T0);
                     flow_ok = true;
                     }
                  catch(const Error&) {}
                  try
                     {
                     const TransactionPayload payload =
                        s.state == SessionState::Authenticated ? assemble_payload(s, bank.password) : placeholder;
                     finalize_transaction(next.session, payload, cover, as_bytes("m"), as_bytes("k"), Block64{});
                     accepted = true;
                     }
                  catch(const NotAuthenticated&) {}
                  catch(const TerminalSession&) {}
                  catch(const CapacityExceeded&) {}
                  if(fits && (flow_ok != accepted || (accepted && via_flow.state != next.session.state)))
                     note(rep.finalize_disagreements, where);
                  break;
                  }
               }

            const Session& after = next.session;
            const bool changed = !(after == s);
            if(!accepted && changed)
               note(rep.terminal_escapes, where + " (rejected event mutated session)");

            if(s.terminal() && changed)
               note(rep.terminal_escapes, where);

            if(accepted)
               {
               if(s.state == SessionState::AwaitPassword && after.state == SessionState::AwaitOtp)
                  next.history += 'P';
               if(s.state == SessionState::OtpPending && after.state == SessionState::ParallelChecks)
                  next.history += 'O';
               if(!s.face_done && after.face_done)
                  next.history += 'F';
               if(!s.geo_done && after.geo_done)
                  next.history += 'G';

               const auto sym_kind = static_cast<Symbol>(sym);
               const bool is_otp_request = sym_kind == Symbol::OtpRequestOk || sym_kind == Symbol::OtpRequestFail;
               const bool is_parallel = sym_kind >= Symbol::FaceOk && sym_kind <= Symbol::LocationBad;
               if(is_otp_request && node.history.find('P') == std::string::npos)
                  note(rep.order_violations, where + " (OTP before password)");
               if(is_parallel && node.history.find('O') == std::string::npos)
                  note(rep.order_violations, where + " (face/location before OTP)");
               }

            if(after.state == SessionState::Authenticated || after.state == SessionState::Completed)
               {
               if(!detail::safe_history(next.history))
                  note(rep.unsafe_authentications, where + " history=" + next.history);
               }

            const std::string key = detail::node_key(next);
            if(visited.emplace(key, next).second)
               {
               if(after.state == SessionState::Authenticated)
                  ++rep.reached_authenticated;
               if(after.state == SessionState::Completed)
                  ++rep.reached_completed;
               next_frontier.push_back(std::move(next));
               }
            }
         }
      frontier = std::move(next_frontier);
      }

   rep.nodes = visited.size();
   return rep;
   }

}
