#include "leveltext/reward_server.hpp"

#include "httplib.h"
#include "leveltext/errors.hpp"

namespace leveltext {

struct RewardServer::Impl {
  std::shared_ptr<const RewardEngine> engine;
  EngineConfig defaults;
  httplib::Server server;
};

RewardServer::RewardServer(std::shared_ptr<const RewardEngine> engine, EngineConfig defaults)
    : impl_(std::make_unique<Impl>()) {
  impl_->engine = std::move(engine);
  impl_->defaults = std::move(defaults);
  Impl* impl = impl_.get();

  impl->server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"status":"ok"})", "application/json");
  });

  impl->server.Post("/score_group", [impl](const httplib::Request& req, httplib::Response& res) {
    auto fail = [&res](int status, const std::string& msg) {
      res.status = status;
      res.set_content(nlohmann::json{{"error", msg}}.dump(), "application/json");
    };
    ScoreGroupRequest parsed;
    try {
      parsed = parse_score_group_request(nlohmann::json::parse(req.body), impl->defaults);
    } catch (const nlohmann::json::exception& e) {
      return fail(400, std::string("invalid JSON: ") + e.what());
    } catch (const Error& e) {
      return fail(400, e.what());
    }
    try {
      auto score = impl->engine->score_group(parsed.group, parsed.config);
      res.set_content(score_group_response(score).dump(), "application/json");
    } catch (const PreconditionError& e) {
      fail(400, e.what());
    } catch (const UnknownLevelError& e) {
      fail(400, e.what());
    } catch (const std::exception& e) {
      fail(503, e.what());
    }
  });
}

RewardServer::~RewardServer() { stop(); }

int RewardServer::bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error("cannot bind reward server on " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error("cannot bind reward server on " + host + ":" + std::to_string(port));
  }
  return port;
}

void RewardServer::listen() { impl_->server.listen_after_bind(); }

void RewardServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void RewardServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace leveltext
