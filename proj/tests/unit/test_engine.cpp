#include <doctest.h>

#include <sstream>
#include <vector>

#include "cclique/engine.hpp"
#include "cclique/errors.hpp"
#include "cclique/smm.hpp"

using namespace cclique;

TEST_CASE("all-to-all single messages cost one round") {
  Clique clique(6);
  clique.step("all", [](NodeContext& ctx) { ctx.broadcast(Word{1, ctx.id(), 0, 0}); });
  const auto& e = clique.ledger().entries().front();
  CHECK(e.rounds == 1);
  CHECK(e.max_send == 5);
  CHECK(e.max_recv == 5);
  CHECK(e.total_msgs == 30);
}

TEST_CASE("one heavy sender") {
  const std::size_t n = 5;
  Clique clique(n);
  clique.step("heavy", [&](NodeContext& ctx) {
    if (ctx.id() != 0) return;
    for (int rep = 0; rep < 3; ++rep)
      for (NodeId u = 1; u < n; ++u) ctx.send(u, Word{1, 0, 0, rep});
  });
  CHECK(clique.ledger().entries().front().rounds == 3);
}

TEST_CASE("empty waves cost nothing but are recorded") {
  Clique clique(4);
  clique.step("quiet", [](NodeContext&) {});
  REQUIRE(clique.ledger().entries().size() == 1);
  CHECK(clique.ledger().total_rounds() == 0);
}

TEST_CASE("broadcast waves add up") {
  Clique clique(7);
  clique.step("one", [](NodeContext& ctx) {
    if (ctx.id() == 3) ctx.broadcast(Word{1, 0, 0, 0});
  });
  CHECK(clique.ledger().total_rounds() == 1);
  CHECK(clique.ledger().entries().back().total_msgs == 6);
  clique.step("two", [](NodeContext& ctx) { ctx.broadcast(Word{1, 0, 0, 0}); });
  CHECK(clique.ledger().total_rounds() == 2);
}

TEST_CASE("self messages are delivered for free") {
  Clique clique(3);
  clique.step("self", [](NodeContext& ctx) {
    for (int i = 0; i < 10; ++i) ctx.send(ctx.id(), Word{1, 0, 0, i});
  });
  CHECK(clique.ledger().total_rounds() == 0);
  std::vector<std::size_t> got(3, 0);
  clique.local([&](NodeContext& ctx) { got[ctx.id()] = ctx.inbox().size(); });
  CHECK(got == std::vector<std::size_t>{10, 10, 10});
}

TEST_CASE("mailboxes are ordered by source then emission") {
  for (bool parallel : {false, true}) {
    EngineOptions options;
    options.parallel = parallel;
    options.threads = 4;
    Clique clique(5, options);
    clique.step("order", [](NodeContext& ctx) {
      for (NodeId u = 5; u-- > 0;) ctx.send(0, Word{1, ctx.id(), u, 0});
    });
    std::vector<Message> inbox;
    clique.local([&](NodeContext& ctx) {
      if (ctx.id() == 0) inbox.assign(ctx.inbox().begin(), ctx.inbox().end());
    });
    REQUIRE(inbox.size() == 25);
    for (std::size_t i = 0; i < inbox.size(); ++i) {
      CHECK(inbox[i].src == i / 5);
      CHECK(inbox[i].word.second == 4 - i % 5);
    }
  }
}

TEST_CASE("locality violations are simulation errors") {
  Clique clique(3);
  CHECK_THROWS_AS(clique.local([](NodeContext& ctx) { ctx.send(0, Word{}); }), SimulationError);
  CHECK_THROWS_AS(clique.step("bad", [](NodeContext& ctx) { ctx.send(3, Word{}); }), SimulationError);
  EngineOptions options;
  options.parallel = true;
  options.threads = 2;
  Clique par(4, options);
  CHECK_THROWS_AS(par.step("bad", [](NodeContext& ctx) {
    if (ctx.id() == 2) ctx.send(9, Word{});
  }), SimulationError);
}

TEST_CASE("lenzen constant scales every charge") {
  EngineOptions options;
  options.lenzen_constant = 3;
  Clique clique(4, options);
  clique.step("all", [](NodeContext& ctx) { ctx.broadcast(Word{}); });
  CHECK(clique.ledger().total_rounds() == 3);
}

TEST_CASE("echo protocol through run_protocol") {
  struct State {
    std::vector<NodeId> heard;
  };
  const std::vector<Phase<State>> phases = {
      {"echo", [](NodeContext& ctx, State&) { ctx.send(0, Word{1, ctx.id(), 0, 0}); }, true},
      {"collect",
       [](NodeContext& ctx, State& s) {
         for (const auto& m : ctx.inbox()) s.heard.push_back(m.word.first);
       },
       false}};
  const auto run = run_protocol<State>(std::vector<State>(8), phases);
  CHECK(run.ledger.total_rounds() == 1);
  CHECK(run.states[0].heard == std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(run.states[1].heard.empty());

  const auto empty = run_protocol(std::vector<State>(8), std::span<const Phase<State>>{});
  CHECK(empty.ledger.total_rounds() == 0);
  CHECK(empty.ledger.entries().empty());
}

TEST_CASE("ledger queries and csv") {
  Clique clique(4);
  clique.set_label_prefix("x.");
  clique.step("a.one", [](NodeContext& ctx) { ctx.broadcast(Word{}); });
  clique.step("a.two", [](NodeContext& ctx) {
    if (ctx.id() == 0)
      for (int i = 0; i < 7; ++i) ctx.send(1, Word{});
  });
  clique.set_label_prefix("");
  clique.step("b", [](NodeContext&) {});
  const auto& ledger = clique.ledger();
  CHECK(ledger.rounds_with_prefix("x.a.") == 4);
  CHECK(ledger.max_recv_with_prefix("x.a.") == 7);
  CHECK(ledger.max_send_with_prefix("x.a.one") == 3);
  CHECK(ledger.count_with_suffix(".two") == 1);
  CHECK(ledger.total_messages() == 19);
  std::ostringstream csv;
  ledger.write_csv(csv);
  CHECK(csv.str() == "phase,rounds,max_send,max_recv,total_msgs\nx.a.one,1,3,3,12\nx.a.two,3,7,7,7\nb,0,0,0,0\n");
}

TEST_CASE("smm on identity matrices labels its five phase groups") {
  const auto id = SparseMatrix::identity(8, counting_semiring());
  const auto result = smm(id, id);
  CHECK(result.product == id);
  std::vector<std::string> groups;
  for (const auto& e : result.ledger.entries()) {
    std::string g = e.phase.rfind("sbmm.", 0) == 0 ? "sbmm" : e.phase.substr(4, e.phase.find('.', 4) - 4);
    if (groups.empty() || groups.back() != g) groups.push_back(g);
  }
  CHECK(groups == std::vector<std::string>{"distribute", "stats", "balance", "sbmm", "unpermute"});
}
