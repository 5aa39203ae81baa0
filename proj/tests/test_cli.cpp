#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("spernerlab-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the tool with a private cache directory and returns its exit code.
  int run(const std::string& args) const {
    const std::string cmd = "SPERNERLAB_CACHE_DIR='" + (dir_ / "cache").string() + "' '" SPERNERLAB_CLI "' " + args +
                            " > '" + (dir_ / "stdout").string() + "' 2> '" + (dir_ / "stderr").string() + "'";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CheckReportsPredicates) {
  write("chain.json", R"({"n":3,"sets":[[1],[1,2],[1,2,3]]})");
  ASSERT_EQ(run("check --file " + path("chain.json") + " --t 1 --k 2 --out " + path("r.json")), 0);
  const auto j = nlohmann::json::parse(read("r.json"));
  EXPECT_EQ(j.at("longest_chain"), 3);
  EXPECT_FALSE(j.at("is_k_sperner").get<bool>());
  EXPECT_TRUE(j.at("is_t_intersecting").get<bool>());
  EXPECT_EQ(j.at("size"), 3);
}

TEST_F(CliTest, ConstructThenCheckLayers) {
  ASSERT_EQ(run("construct --n 6 --t 2 --k 2 --which layers --out " + path("layers.json")), 0);
  ASSERT_EQ(run("check --file " + path("layers.json") + " --t 2 --k 2 --out " + path("r.json")), 0);
  const auto j = nlohmann::json::parse(read("r.json"));
  EXPECT_EQ(j.at("size"), 21);
  EXPECT_TRUE(j.at("is_k_sperner").get<bool>());
  EXPECT_TRUE(j.at("is_t_intersecting").get<bool>());
  EXPECT_TRUE(j.at("in_band").get<bool>());
}

TEST_F(CliTest, MalformedInputExitsTwo) {
  write("bad.json", "{\"n\":3,\"sets\":[[7]]}");
  EXPECT_EQ(run("check --file " + path("bad.json") + " --t 1 --k 1"), 2);
  EXPECT_EQ(run("check --file " + path("missing.json") + " --t 1 --k 1"), 2);
  EXPECT_EQ(run("search --n 5 --t 2"), 2);
  EXPECT_EQ(run("search --n 5 --t 2 --k 2 --layers 3:4 --use-compression --out " + path("s.json")), 2);
  EXPECT_EQ(run("cycle-audit --n 9:4 --t 2 --k 2"), 2);
  EXPECT_EQ(run("no-such-command"), 2);
}

TEST_F(CliTest, CompressKeepsPredicates) {
  write("f.json", R"({"n":6,"sets":[[1,2,3]]})");
  ASSERT_EQ(run("compress --file " + path("f.json") + " --t 2 --k 1 --out " + path("c.json")), 0);
  const auto j = nlohmann::json::parse(read("c.json"));
  EXPECT_EQ(j.at("output_size"), 3);
  EXPECT_EQ(j.at("family"), nlohmann::json::parse(R"({"n":6,"sets":[[1,2,3,4],[1,2,3,5],[1,2,3,6]]})"));
}

TEST_F(CliTest, SearchWritesResultAndCaches) {
  ASSERT_EQ(run("search --n 5 --t 2 --k 2 --out " + path("s.json")), 0);
  const auto first = read("s.json");
  const auto j = nlohmann::json::parse(first);
  EXPECT_EQ(j.at("best_size"), 9);
  EXPECT_EQ(j.at("witness").at("n"), 5);
  EXPECT_TRUE(fs::exists(dir_ / "cache"));
  EXPECT_FALSE(fs::is_empty(dir_ / "cache"));
  ASSERT_EQ(run("search --n 5 --t 2 --k 2 --out " + path("s2.json")), 0);
  EXPECT_EQ(read("s2.json"), first);
  ASSERT_EQ(run("--no-cache search --n 5 --t 2 --k 2 --out " + path("s3.json")), 0);
  EXPECT_EQ(nlohmann::json::parse(read("s3.json")).at("best_size"), 9);
}

TEST_F(CliTest, BoundsTable) {
  ASSERT_EQ(run("bounds --n 5 --t 2 --k 2 --format csv --out " + path("b.csv")), 0);
  const auto csv = read("b.csv");
  EXPECT_NE(csv.find("construction_A"), std::string::npos);
  EXPECT_NE(csv.find("construction_B"), std::string::npos);
}

TEST_F(CliTest, RestrictedScanHoldsAndRerunsIdentically) {
  const std::string args = "--no-cache scan --oracle-n 2:5 --property-n 2:6 --cycle-n 4:12 --t 2:4 --k 1:2 --trials 5 "
                           "--threads 2 --witness-dir " + path("w") + " --format csv --out ";
  ASSERT_EQ(run(args + path("a.csv")), 0) << read("a.csv");
  ASSERT_EQ(run(args + path("b.csv")), 0);
  EXPECT_EQ(read("a.csv"), read("b.csv"));
  EXPECT_EQ(read("a.csv").substr(0, read("a.csv").find('\n')), "check,n,t,k,verdict,margin,witness_path,detail");
}

TEST_F(CliTest, InjectedFailureExitsOne) {
  EXPECT_EQ(run("--no-cache scan --only binom_swap --inject-failure --witness-dir " + path("w") + " --out " +
                path("x.json")),
            1);
  const auto j = nlohmann::json::parse(read("x.json"));
  bool found = false;
  EXPECT_EQ(j.at("summary").at("violated"), 1);
  for (const auto& r : j.at("records"))
    if (r.at("verdict") == "violated") found = !r.at("witness_path").get<std::string>().empty();
  EXPECT_TRUE(found);
}

TEST_F(CliTest, AuditCommands) {
  EXPECT_EQ(run("cycle-audit --n 10:14 --t 2 --k 2 --trials 5 --witness-dir " + path("w") + " --out " +
                path("c.json")),
            0);
  EXPECT_EQ(run("coeff-audit --n 10:14 --t 2 --k 2 --trials 5 --witness-dir " + path("w") + " --out " +
                path("k.json")),
            0);
  write("profiles.json", R"([{"n":10,"t":2,"k":3,"m":0,"counts":[10,10,10]}])");
  ASSERT_EQ(run("coeff-audit --profiles " + path("profiles.json") + " --out " + path("p.json")), 0);
  const auto j = nlohmann::json::parse(read("p.json"));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0].at("verdict"), "holds");
  write("broken.json", R"([{"n":10,"t":2,"k":3,"m":0,"counts":[30,0,0]}])");
  EXPECT_EQ(run("coeff-audit --profiles " + path("broken.json") + " --out " + path("q.json")), 1);
}
