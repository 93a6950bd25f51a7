#include <doctest.h>

#include <cstdlib>

#include "cli.hpp"

using wordlab::cli::dispatch;
using wordlab::cli::Status;

TEST_CASE("documented invocations") {
  auto const b = dispatch({"binom", "aabaaba", "aba"});
  CHECK(b.status == Status::ok);
  CHECK(b.payload["value"] == 10);
  CHECK(b.payload["schema"] == "wordlab.binom.v1");
  CHECK(dispatch({"fair-count", "20"}).payload["value"] == 15884);
  CHECK(dispatch({"fair-count", "12", "--method", "brute", "--jobs", "2"}).payload["value"]
        == 138);
  CHECK(dispatch({"init", "7", "6", "27"}).payload["word"] == "aaaabbbabbbaa");
  CHECK(dispatch({"final", "7", "6", "27"}).payload["word"] == "bbaaaaaababbb");
}

TEST_CASE("every subcommand answers") {
  std::vector<std::vector<std::string>> const calls{
      {"leftright", "ab"},
      {"sums", "aabaabbababba"},
      {"matrices", "abcacab"},
      {"matrices", "ab", "--parikh"},
      {"equiv", "abababa", "baabaab"},
      {"derive", "aabbbaa", "baabaab"},
      {"class", "4", "3", "6"},
      {"class", "5", "5", "5", "--verify"},
      {"class", "5", "5", "5", "--dot", "--relation", "full"},
      {"partition", "aabaabbababba"},
      {"count-partitions", "5", "5", "5"},
      {"fair", "abbbaab"},
      {"fair-length", "aababbaa"},
      {"fair-factors", "abbbaab"},
      {"lsq", "0110"},
      {"balanced-fair", "5", "2"},
      {"tm-audit", "64"},
      {"render", "ab"},
      {"render", "ab", "--svg", "--shade", "steps"},
      {"render", "ab", "--diagonal"},
      {"ferrers", "3", "1"},
      {"--help"}};
  for (auto const& call : calls) {
    CAPTURE(call[0]);
    auto const r = dispatch(call);
    CHECK(r.status == Status::ok);
    CHECK(r.exit_code() == 0);
    CHECK((r.raw.has_value() || r.payload.contains("schema")));
  }
}

TEST_CASE("payload contents") {
  auto const eq = dispatch({"equiv", "abcacab", "caabbac"});
  CHECK(eq.payload["equivalent"] == true);
  auto const d = dispatch({"derive", "abababa", "baabaab"});
  CHECK(d.payload["length"] == 1);
  CHECK(d.payload["steps"][0]["swap_positions"].empty());
  CHECK(d.payload["steps"][1]["word"] == "baabaab");
  auto const cls = dispatch({"class", "4", "3", "6"});
  CHECK(cls.payload["size"] == 5);
  CHECK(cls.payload["nodes"][0] == "aabbbaa");
  auto const v = dispatch({"class", "5", "5", "5", "--verify"});
  CHECK(v.payload["verified"] == true);
  auto const p = dispatch({"partition", "aabaabbababba", "--suffix"});
  CHECK(p.payload["suffix"] == std::vector<int>{6, 6, 5, 5, 3, 2, 0});
  CHECK_FALSE(p.payload.contains("prefix"));
  auto const lsq = dispatch({"lsq", "01"});
  CHECK(lsq.payload["alpha"]["num"] == -1);
  CHECK(lsq.payload["alpha"]["den"] == 1);
  auto const fair = dispatch({"fair", "abbbaab"});
  CHECK(fair.payload["deltas"]["ab"] == 0);
  CHECK(fair.payload["fit"]["beta"]["num"] == 0);
  CHECK(fair.payload["fair_length"] == 1);
  auto const m = dispatch({"matrices", "aabaabbababba"});
  CHECK(m.payload["precedence"][0][1] == 27);
  CHECK(m.payload["parikh"][0][2] == 27);
  CHECK(dispatch({"tm-audit", "128", "--jobs", "1"}).payload["max_fair_length"] == 4);
  auto const dot = dispatch({"class", "5", "5", "5", "--dot", "--relation", "full"});
  REQUIRE(dot.raw);
  CHECK(dot.raw->find("digraph") == 0);
}

TEST_CASE("error statuses and exit codes") {
  auto const unknown = dispatch({"frobnicate"});
  CHECK(unknown.status == Status::usage_error);
  CHECK(unknown.exit_code() == 1);
  CHECK(unknown.diagnostics.find("unknown subcommand") != std::string::npos);
  CHECK(dispatch({}).exit_code() == 1);
  CHECK(dispatch({"binom", "ab"}).exit_code() == 1);
  CHECK(dispatch({"fair-count", "10", "--method", "magic"}).exit_code() == 1);

  auto const domain = dispatch({"init", "2", "2", "9"});
  CHECK(domain.status == Status::domain_error);
  CHECK(domain.exit_code() == 2);
  CHECK(domain.payload["schema"] == "wordlab.error.v1");
  CHECK(dispatch({"derive", "ab", "ba"}).exit_code() == 2);
  CHECK(dispatch({"balanced-fair", "3", "5"}).exit_code() == 2);
  CHECK(dispatch({"fair-length", ""}).exit_code() == 2);
  CHECK(dispatch({"lsq", "1"}).exit_code() == 2);

  auto const resource = dispatch({"fair-count", "30"});
  CHECK(resource.status == Status::resource_error);
  CHECK(resource.exit_code() == 3);
  CHECK(dispatch({"tm-audit", "1000"}).exit_code() == 3);
}

TEST_CASE("the node budget comes from the environment") {
  setenv("WORDLAB_BUDGET", "3", 1);
  CHECK(dispatch({"class", "4", "3", "6"}).exit_code() == 3);
  setenv("WORDLAB_BUDGET", "lots", 1);
  CHECK(dispatch({"class", "4", "3", "6"}).exit_code() == 1);
  unsetenv("WORDLAB_BUDGET");
  CHECK(dispatch({"class", "4", "3", "6"}).exit_code() == 0);
}
