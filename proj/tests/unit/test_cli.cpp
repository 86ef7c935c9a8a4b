#include <doctest.h>

#include <sstream>

#include "twistor/cli.hpp"

using namespace twistor::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json doc(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("range parsing") {
    CHECK(parse_range("-12..12") == std::pair{-12, 12});
    CHECK(parse_range("3..3") == std::pair{3, 3});
    CHECK(parse_range(" -3 .. -1 ") == std::pair{-3, -1});
    CHECK_FALSE(parse_range("3..1"));
    CHECK_FALSE(parse_range("1-3"));
    CHECK_FALSE(parse_range("a..b"));
  }

  TEST_CASE("poly k_2") {
    auto r = call({"poly", "--family", "k", "--n", "2"});
    CHECK(r.code == kOk);
    CHECK(doc(r)["coeffs"] == Json::array({"1", "-3", "1"}));
    auto t = call({"poly", "--family", "k", "--n=-3", "--format", "text"});
    CHECK(t.code == kOk);
    CHECK(t.out.rfind("k_-3 = ", 0) == 0);
  }

  TEST_CASE("identities over -12..12 exit 0") {
    auto r = call({"identities", "--range", "-12..12"});
    CHECK(r.code == kOk);
    CHECK(doc(r)["pass"] == true);
    CHECK(doc(r)["families"].size() == 10);
  }

  TEST_CASE("lfun n=2 p=11 alpha=5 matches") {
    auto r = call({"lfun", "--n", "2", "--p", "11", "--alpha", "5"});
    CHECK(r.code == kOk);
    auto j = doc(r);
    CHECK(j["verdict"] == "match");
    CHECK(j["lifts"][0]["weierstrass"] == Json::array({"0", "0", "1"}));
    CHECK(j["lifts"][0]["alpha_digits"][0] == "5");
    CHECK(j["lifts"][0]["alpha_digits"][1] == "3");  // 38 = 5 + 3 * 11
  }

  TEST_CASE("lfun over a ramified extension") {
    auto r = call({"lfun", "--n=-3", "--p", "5", "--alpha=-2", "--prec-digits", "24"});
    CHECK(r.code == kOk);
    auto j = doc(r);
    CHECK(j["ext"]["e"] == 2);
    CHECK(j["lifts"].size() == 2);
    for (const auto& l : j["lifts"]) CHECK(l["weierstrass"].size() == 5);
  }

  TEST_CASE("exit codes") {
    CHECK(call({}).code == kUsage);
    CHECK(call({"poly", "--family", "k"}).code == kUsage);
    CHECK(call({"poly", "--family", "zz", "--n", "1"}).code == kUsage);
    CHECK(call({"lfun", "--n", "2", "--p", "10", "--alpha", "5"}).code == kUsage);
    CHECK(call({"lfun", "--n", "2", "--p", "11", "--alpha", "x"}).code == kUsage);
    CHECK(call({"lfun", "--n", "2", "--p", "11", "--alpha", "5", "--ext", "7"}).code == kUsage);
    CHECK(call({"plot", "--n", "2", "--resolution", "8"}).code == kUsage);
    CHECK(call({"lfun", "--n", "2", "--p", "11", "--alpha", "4"}).code == kComputation);
    CHECK(call({"lfun-parabolic", "--n=-1", "--p", "3"}).code == kComputation);
    auto e = call({"roots", "--n", "2", "--alpha", "0.5"});
    CHECK(e.code == kComputation);
    CHECK(e.err.find("NotALocusPoint") != std::string::npos);
    CHECK(e.out.empty());
  }

  TEST_CASE("identical arguments give identical output") {
    for (auto args : std::vector<std::vector<std::string>>{{"torsion-check", "--seed", "11", "--count", "4"},
                                                          {"survey", "--p", "23", "--format", "text"},
                                                          {"roots", "--n=-2"}}) {
      auto a = call(args), b = call(args);
      CHECK(a.code == kOk);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("roots report doubles at ten significant digits") {
    auto j = doc(call({"roots", "--n", "2"}));
    CHECK(j["nonacyclic_count"] == 2);
    bool found = false;
    for (const auto& r : j["roots"])
      if (r["nonacyclic"] == true && r["l"] == 1) {
        found = true;
        CHECK(r["x"].get<double>() == 0.3819660113);
      }
    CHECK(found);
  }

  TEST_CASE("plot writes SVG to stdout without --out") {
    auto r = call({"plot", "--n=-1", "--resolution", "64"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("<svg") != std::string::npos);
    CHECK(r.out.find("class=\"curve-tau\"") != std::string::npos);
  }
}
