#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "flagorbits/cli.hpp"
#include "flagorbits/jsonio.hpp"

using namespace flagorbits;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli_run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("counts") {
  RunResult r = run({"counts", "--type", "A3", "--n", "4", "--p", "2", "--q", "2"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["params"] == 21);  // 6 sign choices + 6 arcs * 2 signs + 3 pairings
  CHECK(j["closed"] == 6);
  CHECK(j["open"] == 1);

  CHECK(json::parse(run({"counts", "--type", "C1", "--n", "4"}).out)["closed"] == 4);
  CHECK(json::parse(run({"counts", "--type", "D3", "--n", "4"}).out)["open"] == 2);
}

TEST_CASE("enumerate") {
  RunResult r = run({"enumerate", "--type", "A1", "--n", "3"});
  CHECK(r.code == 0);
  int lines = 0;
  std::istringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line)) ++lines;
  CHECK(lines == 4);

  RunResult ascii = run({"enumerate", "--type", "A3", "--n", "2", "--p", "1", "--format", "ascii"});
  CHECK(ascii.code == 0);
  CHECK(ascii.out.find('o') != std::string::npos);

  RunResult dot = run({"enumerate", "--type", "A2", "--n", "2", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph") != std::string::npos);
}

TEST_CASE("represent then classify round trip") {
  for (std::string type : {"A1", "A2", "A3", "BD1", "C1", "C2", "D3"}) {
    int n = (type == "A1" || type == "A3" || type == "BD1") ? 3 : 4;
    std::vector<std::string> enum_args{"enumerate", "--type", type, "--n", std::to_string(n)};
    if (type == "A3" || type == "BD1" || type == "C2") {
      enum_args.push_back("--p");
      enum_args.push_back(type == "C2" ? "2" : "2");
    }
    RunResult listing = run(enum_args);
    REQUIRE(listing.code == 0);
    std::istringstream ss(listing.out);
    std::string line;
    while (std::getline(ss, line)) {
      for (std::string fam : {"K", "G0"}) {
        std::vector<std::string> rep_args = enum_args;
        rep_args[0] = "represent";
        rep_args.push_back("--family");
        rep_args.push_back(fam);
        RunResult rep = run(rep_args, line);
        REQUIRE(rep.code == 0);
        std::vector<std::string> cls_args = enum_args;
        cls_args[0] = "classify";
        cls_args.push_back("--family");
        cls_args.push_back(fam);
        RunResult cls = run(cls_args, rep.out);
        REQUIRE(cls.code == 0);
        json got = json::parse(cls.out);
        json want = json::parse(line);
        CHECK(got["arcs"] == want["arcs"]);
        CHECK(got["signs"] == want["signs"]);
        CHECK(got["family"] == fam);
      }
    }
  }
}

TEST_CASE("dual flips the family") {
  std::string param = R"({"n":2,"arcs":[[1,2]],"signs":{},"family":"K","type":"A2"})";
  RunResult r = run({"dual"}, param);
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["family"] == "G0");
  RunResult rr = run({"dual"}, r.out);
  CHECK(json::parse(rr.out)["family"] == "K");
}

TEST_CASE("relpos") {
  std::string flags = R"({"F": {"n":2,"basis":[["1","0"],["0","1"]]},
                          "G": {"n":2,"basis":[["1","0"],["0","1"]]}})";
  RunResult r = run({"relpos", "--n", "2"}, flags);
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["perm"] == json::array({1, 2}));

  std::string crossed = R"({"F": {"n":2,"basis":[["1","0"],["0","1"]]},
                            "G": {"n":2,"basis":[["1","1"],["1","0"]]}})";
  CHECK(json::parse(run({"relpos", "--n", "2"}, crossed).out)["perm"] == json::array({2, 1}));
}

TEST_CASE("ind-check") {
  RunResult r = run({"ind-check", "--type", "C1", "--omega-tail", "B2", "--signs-tail", "+-",
                     "--order", "ISO_TWOSIDED"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["open_K"] == false);
  CHECK(j["clause"] == "bcd");
  CHECK(j["closed_K"] == "infinitely_many");
  CHECK(j["closed_G0"] == false);

  RunResult a1 = run({"ind-check", "--type", "A1", "--omega-tail", "B1"});
  CHECK(json::parse(a1.out)["open_K"] == true);
}

TEST_CASE("output is byte-stable across runs") {
  std::vector<std::string> args{"enumerate", "--type", "BD1", "--n", "4", "--p", "2"};
  RunResult a = run(args), b = run(args);
  CHECK(a.out == b.out);
  RunResult c = run({"counts", "--type", "A2", "--n", "4"});
  RunResult d = run({"counts", "--type", "A2", "--n", "4"});
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes") {
  // parse error on stdin -> 1
  CHECK(run({"classify", "--type", "A1", "--n", "2"}, "not json").code == 1);
  // domain error -> 2 (dependent columns are not a flag basis)
  std::string bad = R"({"n":2,"basis":[["1","0"],["2","0"]]})";
  CHECK(run({"classify", "--type", "A1", "--n", "2"}, bad).code == 2);
  // unknown flag -> 1
  CHECK(run({"counts", "--type", "A1"}).code == 1);
}
