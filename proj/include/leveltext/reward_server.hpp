#pragma once

#include <memory>
#include <string>

#include "leveltext/reward_engine.hpp"

namespace leveltext {

// HTTP/JSON reward service for an external trainer.
//   POST /score_group  {language, target_level, original, rollouts[], weights?, params?}
//                      -> {breakdowns[], mean, std}
//   GET  /health       -> {"status": "ok"}
// Malformed requests get 400 with {"error": ...}; backend outages 503.
class RewardServer {
 public:
  RewardServer(std::shared_ptr<const RewardEngine> engine, EngineConfig defaults = {});
  ~RewardServer();
  RewardServer(const RewardServer&) = delete;
  RewardServer& operator=(const RewardServer&) = delete;

  // Returns the bound port; port 0 picks a free one. Throws on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace leveltext
