#include <fourfa/app/gateway.hpp>
#include <fourfa/errors.hpp>
#include <fourfa/image/png.hpp>
#include <fourfa/merchant/verifier.hpp>

#include <httplib.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include <thread>

namespace fourfa {

using json = nlohmann::json;

Timestamp system_now()
   {
   return std::chrono::time_point_cast<std::chrono::seconds>(std::chrono::system_clock::now());
   }

namespace {

struct BadRequest : Error
   {
   using Error::Error;
   };

json state_json(const Session& s)
   {
   json j = {{"state", to_string(s.state)}};
   if(s.state == SessionState::ParallelChecks)
      {
      j["face_done"] = s.face_done;
      j["geo_done"] = s.geo_done;
      }
   if(s.state == SessionState::Denied)
      j["reason"] = to_string(s.denied);
   return j;
   }

json parse_body(const httplib::Request& req)
   {
   json j = json::parse(req.body, nullptr, false);
   if(j.is_discarded() || !j.is_object())
      throw BadRequest("request body must be a JSON object");
   return j;
   }

std::string string_field(const json& j, const char* key)
   {
   if(!j.contains(key) || !j.at(key).is_string())
      throw BadRequest(std::string("missing string field '") + key + "'");
   return j.at(key).get<std::string>();
   }

GeoPoint location_field(const json& j)
   {
   for(const char* key : {"lat", "lon"})
      {
      if(!j.contains(key) || !j.at(key).is_number())
         throw BadRequest(std::string("missing number field '") + key + "'");
      }
   return GeoPoint::make(j.at("lat").get<double>(), j.at("lon").get<double>());
   }

RasterImage png_body(const httplib::Request& req)
   {
   return decode_png(as_bytes(req.body));
   }

void reply_error(httplib::Response& res, int status, const char* kind, const std::string& message)
   {
   res.status = status;
   res.set_content(json{{"error", kind}, {"message", message}}.dump(), "application/json");
   }

void reply_json(httplib::Response& res, const json& j, int status = 200)
   {
   res.status = status;
   res.set_content(j.dump(), "application/json");
   }

template<class Fn>
httplib::Server::Handler guarded(Fn fn)
   {
   return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
      try
         {
         fn(req, res);
         }
      catch(const BadRequest& e) { reply_error(res, 400, "bad-request", e.what()); }
      catch(const InvalidUsername& e) { reply_error(res, 400, "invalid-username", e.what()); }
      catch(const InvalidLocation& e) { reply_error(res, 400, "invalid-location", e.what()); }
      catch(const ImageTooSmall& e) { reply_error(res, 400, "image-too-small", e.what()); }
      catch(const ImageFormatError& e) { reply_error(res, 400, "bad-image", e.what()); }
      catch(const UnknownSession& e) { reply_error(res, 404, "unknown-session", e.what()); }
      catch(const InvalidTransition& e) { reply_error(res, 409, "invalid-transition", e.what()); }
      catch(const NotAuthenticated& e) { reply_error(res, 409, "not-authenticated", e.what()); }
      catch(const TerminalSession& e) { reply_error(res, 410, "terminal-session", e.what()); }
      catch(const CapacityExceeded& e) { reply_error(res, 413, "capacity", e.what()); }
      catch(const TransportError& e) { reply_error(res, 502, "transport", e.what()); }
      catch(const StorageError& e) { reply_error(res, 500, "storage", e.what()); }
      catch(const Error& e) { reply_error(res, 500, "internal", e.what()); }
      catch(const std::exception&) { reply_error(res, 500, "internal", "unexpected failure"); }
   };
   }

}

struct GatewayServer::Impl
   {
   Config config;
   UserStore& store;
   SmsTransport& transport;
   RandomSource& rng;
   Clock clock;
   SessionRegistry sessions;
   httplib::Server server;
   std::thread thread;

   Impl(Config cfg, UserStore& st, SmsTransport& tr, RandomSource& r, Clock c) :
      config(std::move(cfg)), store(st), transport(tr), rng(r), clock(std::move(c)),
      sessions(config.flow_settings().session_lifetime)
      {
      routes();
      }

   FlowContext context() { return FlowContext{store, transport, rng, config.flow_settings()}; }

   void event(const httplib::Request& req, httplib::Response& res, const FactorEvent& ev)
      {
      const Session s = sessions.apply(req.path_params.at("id"), ev, context(), clock());
      reply_json(res, state_json(s));
      }

   void routes()
      {
      server.Post("/session", guarded([this](const httplib::Request& req, httplib::Response& res) {
         const json body = parse_body(req);
         const Session s = sessions.create(string_field(body, "username"), clock(), rng);
         json j = state_json(s);
         j["session_id"] = s.id;
         reply_json(res, j, 201);
      }));

      server.Post("/session/:id/password", guarded([this](const httplib::Request& req, httplib::Response& res) {
         event(req, res, PasswordSubmitted{string_field(parse_body(req), "password")});
      }));

      server.Post("/session/:id/otp/request", guarded([this](const httplib::Request& req, httplib::Response& res) {
         event(req, res, OtpRequested{});
      }));

      server.Post("/session/:id/otp/verify", guarded([this](const httplib::Request& req, httplib::Response& res) {
         event(req, res, OtpSubmitted{string_field(parse_body(req), "code")});
      }));

      server.Post("/session/:id/face", guarded([this](const httplib::Request& req, httplib::Response& res) {
         event(req, res, FaceSubmitted{png_body(req)});
      }));

      server.Post("/session/:id/location", guarded([this](const httplib::Request& req, httplib::Response& res) {
         event(req, res, LocationReported{location_field(parse_body(req))});
      }));

      server.Post("/session/:id/finalize", guarded([this](const httplib::Request& req, httplib::Response& res) {
         const RasterImage cover = png_body(req);
         const Block64 iv = rng.fixed<Block64>();
         const RasterImage stego = sessions.finalize(req.path_params.at("id"), cover,
                                                     as_bytes(config.mac_pass), as_bytes(config.key_pass),
                                                     iv, clock());
         const Bytes png = encode_png(stego);
         res.set_content(std::string(png.begin(), png.end()), "image/png");
      }));

      server.Post("/merchant/verify", guarded([this](const httplib::Request& req, httplib::Response& res) {
         const RasterImage image = png_body(req);
         const Decision d = process_envelope(image, as_bytes(config.mac_pass), as_bytes(config.key_pass),
                                             store, config.merchant_policy());
         reply_json(res, {{"outcome", to_string(d.outcome)}, {"reason", to_string(d.reason)}});
      }));

      server.Put("/users/:name/location", guarded([this](const httplib::Request& req, httplib::Response& res) {
         const GeoPoint home = location_field(parse_body(req));
         auto rec = store.get(req.path_params.at("name"));
         if(!rec)
            {
            reply_error(res, 404, "unknown-user", "no such user");
            return;
            }
         rec->home = home;
         store.put(*rec);
         res.status = 204;
      }));

      server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
         spdlog::info("{} {} -> {}", req.method, req.path, res.status);
      });
      }
   };

GatewayServer::GatewayServer(Config config, UserStore& store, SmsTransport& transport, RandomSource& rng, Clock clock) :
   m_impl(std::make_unique<Impl>(std::move(config), store, transport, rng, std::move(clock)))
   {
   }

GatewayServer::~GatewayServer()
   {
   stop();
   }

int GatewayServer::start(const std::string& host, int port)
   {
   int bound = port;
   if(port == 0)
      bound = m_impl->server.bind_to_any_port(host);
   else if(!m_impl->server.bind_to_port(host, port))
      bound = -1;
   if(bound < 0)
      throw Error("cannot bind " + host + ":" + std::to_string(port));

   m_impl->thread = std::thread([this] { m_impl->server.listen_after_bind(); });
   m_impl->server.wait_until_ready();
   spdlog::info("gateway listening on {}:{}", host, bound);
   return bound;
   }

void GatewayServer::listen()
   {
   const auto [host, port] = m_impl->config.listen_endpoint();
   spdlog::info("gateway listening on {}:{}", host, port);
   if(!m_impl->server.listen(host, port))
      throw Error("cannot bind " + m_impl->config.listen_addr);
   }

void GatewayServer::stop()
   {
   m_impl->server.stop();
   if(m_impl->thread.joinable())
      m_impl->thread.join();
   }

SessionRegistry& GatewayServer::sessions()
   {
   return m_impl->sessions;
   }

}
