#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "leveltext/reward_server.hpp"
#include "test_support.hpp"

using namespace leveltext;

TEST_CASE("reward server scores groups over http") {
  auto engine = std::make_shared<const RewardEngine>(testsupport::bundle(), testsupport::mock_suite());
  RewardServer server(engine);
  int port = server.bind("127.0.0.1", 0);
  std::thread t([&] { server.listen(); });
  server.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  auto health = cli.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(nlohmann::json::parse(health->body)["status"] == "ok");

  nlohmann::json req = {{"language", "en"},
                        {"target_level", "A2"},
                        {"original", "The committee postponed the meeting."},
                        {"rollouts", {"The committee postponed the meeting.", "The group moved the meeting."}}};
  auto res = cli.Post("/score_group", req.dump(), "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  auto body = nlohmann::json::parse(res->body);
  REQUIRE(body["breakdowns"].size() == 2);
  auto direct = engine->score_group({"", Language::en, 1, req["original"], req["rollouts"]});
  CHECK(body["mean"].get<double>() == direct.stats.mean);
  CHECK(body["breakdowns"][1]["total"].get<double>() == direct.breakdowns[1].total);

  auto bad = cli.Post("/score_group", "{not json", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(nlohmann::json::parse(bad->body).contains("error"));
  auto bad_level = cli.Post("/score_group",
                            R"({"language":"en","target_level":"Q","original":"a","rollouts":["a","b"]})",
                            "application/json");
  REQUIRE(bad_level);
  CHECK(bad_level->status == 400);
  auto one = cli.Post("/score_group",
                      R"({"language":"en","target_level":"A1","original":"a","rollouts":["a"]})",
                      "application/json");
  REQUIRE(one);
  CHECK(one->status == 400);

  server.stop();
  t.join();
}
