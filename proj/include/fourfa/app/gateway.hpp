#pragma once

#include <functional>
#include <memory>
#include <string>

#include <fourfa/app/config.hpp>
#include <fourfa/factors/sms.hpp>
#include <fourfa/factors/user_store.hpp>
#include <fourfa/flow/registry.hpp>
#include <fourfa/random.hpp>

namespace fourfa {

using Clock = std::function<Timestamp()>;

Timestamp system_now();

/*
* HTTP surface over the session registry and merchant verifier. Every session
* endpoint translates its request into one FactorEvent (or finalize) and
* replies with the resulting state:
*
*   POST /session                      {username}   -> {session_id, state}
*   POST /session/{id}/password        {password}   -> {state}
*   POST /session/{id}/otp/request                  -> {state}
*   POST /session/{id}/otp/verify      {code}       -> {state}
*   POST /session/{id}/face            PNG          -> {state}
*   POST /session/{id}/location        {lat, lon}   -> {state}
*   POST /session/{id}/finalize        PNG cover    -> stego PNG
*   POST /merchant/verify              stego PNG    -> {outcome, reason}
*   PUT  /users/{name}/location        {lat, lon}   -> 204
*
* Errors reply {"error": <kind>, "message": <text>}.
*/
class GatewayServer
   {
   public:
      GatewayServer(Config config, UserStore& store, SmsTransport& transport, RandomSource& rng,
                    Clock clock = system_now);
      ~GatewayServer();

      GatewayServer(const GatewayServer&) = delete;
      GatewayServer& operator=(const GatewayServer&) = delete;

      /// Binds (port 0 picks a free port) and serves on a background thread.
      /// Returns the bound port.
      int start(const std::string& host, int port);

      /// Binds config.listen_addr and serves on the calling thread until stop().
      void listen();

      void stop();

      SessionRegistry& sessions();
   private:
      struct Impl;
      std::unique_ptr<Impl> m_impl;
   };

}
