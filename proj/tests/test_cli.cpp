#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bocalc/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = bocalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = call(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Coefficients of h_k in e_1, e_2 (e_i = 0 for i > 2), from h_k = e1 h_{k−1} − e2 h_{k−2}.
std::map<std::pair<int, int>, long> h_in_e(int k) {
  std::vector<std::map<std::pair<int, int>, long>> h(static_cast<std::size_t>(k + 1));
  h[0][{0, 0}] = 1;
  for (int m = 1; m <= k; ++m) {
    for (const auto& [e, c] : h[m - 1]) h[m][{e.first + 1, e.second}] += c;
    if (m >= 2)
      for (const auto& [e, c] : h[m - 2]) h[m][{e.first, e.second + 1}] -= c;
  }
  std::map<std::pair<int, int>, long> out;
  for (const auto& [e, c] : h[k])
    if (c != 0) out[e] = c;
  return out;
}

}  // namespace

TEST_CASE("cli: hgr-ring matches the golden file") {
  const json got = call_json({"hgr-ring", "--r", "2", "--n", "4"});
  const json golden = json::parse(read_file(std::string(BOCALC_SOURCE_DIR) + "/tests/golden/hgr_ring_r2_n4.json"));
  CHECK(got == golden);

  // Independent reading of the golden content: C(4,2) = 6 partitions in a 2×2 box.
  CHECK(golden["rank"] == 6);
  const json box = json::parse(R"([[],[1],[2],[1,1],[2,1],[2,2]])");
  CHECK(golden["basis"] == box);
  for (std::size_t i = 0; i < box.size(); ++i) {
    long w = 0;
    for (const auto& p : box[i]) w += p.get<long>();
    CHECK(golden["basis_bidegrees"][i] == json::array({4 * w, 2 * w}));
  }
  // The ideal is generated by h_3 and h_4 written in e_1, e_2.
  REQUIRE(golden["ideal"].size() == 2);
  for (int k = 3; k <= 4; ++k) {
    std::map<std::pair<int, int>, long> got_terms;
    for (const auto& t : golden["ideal"][k - 3])
      got_terms[{t["exponents"][0].get<int>(), t["exponents"][1].get<int>()}] = std::stol(t["coeff"].get<std::string>());
    CHECK(got_terms == h_in_e(k));
  }
}

TEST_CASE("cli: exit codes") {
  Run r = call({"hgr-ring", "--r", "3", "--n", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("r exceeds n") != std::string::npos);

  r = call({"gw", "diagonalize", "--gram", "[[1,2],[3]]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("/gram/1") != std::string::npos);

  r = call({"gw", "diagonalize", "--gram", "[[1,2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("invalid JSON") != std::string::npos);

  r = call({"tower", "--spec", R"({"levels":[{"generators":1}]})"});
  CHECK(r.code == 2);
  CHECK(r.err.find("/maps") != std::string::npos);

  CHECK(call({}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"verify", "nowhere"}).code == 2);
  CHECK(call({"classcheck", "nothing"}).code == 2);
  CHECK(call({"gw", "diagonalize", "--field", "C", "--gram", "[[1]]"}).code == 2);
  CHECK(call({"pontryagin", "--spec", R"({"rank":3})"}).code == 2);
  CHECK(call({"pontryagin", "--spec", R"({"split":["x1/2"]})"}).code == 2);
}

TEST_CASE("cli: verify and suite succeed") {
  for (const char* t : {"m-path", "m1-factorization", "quadratic-section", "symplectic-lift"}) {
    const json j = call_json({"verify", t});
    INFO(t);
    CHECK(j["ok"] == true);
  }
  const Run r = call({"suite"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 14);
}

TEST_CASE("cli: schur and pontryagin values") {
  // s_(2,1) = e1 e2 − e3.
  const json s = call_json({"schur", "--lambda", "2,1", "--r", "3"});
  CHECK(s["text"] == "e1*e2 - e3");
  CHECK(s["bidegree"] == json::array({12, 6}));

  // Split roots x1, x2: p1 = x1 + x2, p2 = x1 x2.
  const Run p = call({"pontryagin", "--spec", R"({"split":["x1","x2"]})"});
  CHECK(p.code == 0);
  CHECK(p.out.find("p1 = x1 + x2") != std::string::npos);
  CHECK(p.out.find("p2 = x1*x2") != std::string::npos);
}

TEST_CASE("cli: forms and koszul") {
  // The hyperbolic plane has discriminant −1: the diagonal product is minus a square.
  const json d = call_json({"gw", "diagonalize", "--field", "Q", "--gram", "[[0,1],[1,0]]"});
  REQUIRE(d["diagonal"].size() == 2);
  CHECK(d["radical_dimension"] == 0);
  const long prod = std::stol(d["diagonal"][0].get<std::string>()) * std::stol(d["diagonal"][1].get<std::string>());
  REQUIRE(prod < 0);
  long root = 0;
  while (root * root < -prod) ++root;
  CHECK(root * root == -prod);
  const json k = call_json({"koszul", "--n", "3"});
  CHECK(k["ok"] == true);
  const json kt = call_json({"gw", "karoubi"});
  CHECK(call({"gw", "karoubi"}).code == 0);
  CHECK(!kt.empty());
}

TEST_CASE("cli: tower analysis") {
  const json twice = call_json({"tower", "--spec", R"({"levels":[{"generators":1}],"maps":[[[2]]],"tail":"template-repeating"})",
                                "--window", "3"});
  CHECK(twice["mittag_leffler"]["status"] == "refutation");
  const json stable = call_json({"tower", "--spec", R"({"levels":[{"orders":[2]},{"orders":[4]}],"maps":[[[1]]],"tail":"eventually-constant"})"});
  CHECK(stable["mittag_leffler"]["status"] == "certificate");
  CHECK(stable["limit_approximations"].back()["group"] == "Z/4");
}

TEST_CASE("cli: --out writes the same text") {
  const auto path = std::filesystem::temp_directory_path() / "bocalc_cli_out.json";
  const Run r = call({"hgr-ring", "--r", "1", "--n", "3", "--json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const Run direct = call({"hgr-ring", "--r", "1", "--n", "3", "--json"});
  CHECK(read_file(path.string()) == direct.out);
  std::filesystem::remove(path);
}
