#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "homdual/cli.hpp"
#include "homdual/families.hpp"
#include "homdual/graph_io.hpp"

using namespace homdual;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "homdual");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("homdual_cli_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("gen") {
  const Result r = run({"gen", "--family", "accycle", "--n", "5"});
  CHECK(r.code == cli::kPositive);
  CHECK(r.out == "digraph 5\n0 1\n2 1\n2 3\n4 0\n4 3\n");
  TempDir dir;
  const std::string path = dir.file("q6.txt");
  CHECK(run({"gen", "--family", "qpath", "--n", "6", "--out", path}).code == cli::kPositive);
  CHECK(read_digraph_file(path) == make_q_path(6));
  CHECK(run({"gen", "--family", "cycle", "--n", "5"}).out.rfind("graph 5\n", 0) == 0);
  CHECK(run({"gen", "--family", "nope", "--n", "5"}).code == cli::kUsage);
  const Result small = run({"gen", "--family", "accycle", "--n", "2"});
  CHECK(small.code == cli::kUsage);
  CHECK(small.err.find("n >= 3") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"certify-ac", "--n", "5"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kPositive);
  const Result missing = run({"core", "--g", "/nonexistent/graph.txt"});
  CHECK(missing.code == cli::kUsage);
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("decide") {
  TempDir dir;
  const std::string p3 = dir.write("p3.txt", format_graph(make_directed_path(3)));
  const std::string tt3 = dir.write("tt3.txt", format_graph(make_transitive_tournament(3)));
  const std::string tt2 = dir.write("tt2.txt", format_graph(make_transitive_tournament(2)));
  const Result yes = run({"decide", "--g", p3, "--h", tt3});
  CHECK(yes.code == cli::kPositive);
  CHECK(yes.out.rfind("yes\nmapping ", 0) == 0);
  CHECK(run({"decide", "--g", p3, "--h", tt2}).code == cli::kNegative);
  const std::string c7 = dir.write("c7.txt", format_graph(make_undirected_cycle(7)));
  const std::string c5 = dir.write("c5.txt", format_graph(make_undirected_cycle(5)));
  CHECK(run({"decide", "--g", c7, "--h", c5}).code == cli::kPositive);
  CHECK(run({"decide", "--g", c7, "--h", tt3}).code == cli::kUsage);
  const std::string big = dir.write("big.txt", format_graph(make_ac_cycle(40)));
  const Result guard = run({"decide", "--g", big, "--h", big});
  CHECK(guard.code == cli::kGuard);
  CHECK(guard.err.find("guard") != std::string::npos);
  CHECK(run({"decide", "--g", big, "--h", big, "--guard", "0"}).code == cli::kPositive);
}

TEST_CASE("certify and verify") {
  TempDir dir;
  const std::string q8 = dir.write("q8.txt", format_graph(make_q_path(8)));
  const Result no = run({"certify-ac", "--g", q8, "--n", "7", "--json"});
  CHECK(no.code == cli::kNegative);
  CHECK(no.out.find(R"("verdict":"no")") != std::string::npos);
  CHECK(no.out.find(R"("l":8)") != std::string::npos);
  CHECK(no.out.find(R"("walk":[0,1,2,3,4,5,6,7])") != std::string::npos);
  const std::string cert = dir.write("cert.json", no.out);
  const Result ok = run({"verify-cert", "--g", q8, "--n", "7", "--cert", cert});
  CHECK(ok.code == cli::kPositive);
  CHECK(ok.out == "valid\n");

  std::string tampered = no.out;
  tampered.replace(tampered.find(R"("l":8)"), 5, R"("l":7)");
  const std::string bad = dir.write("bad.json", tampered);
  const Result rejected = run({"verify-cert", "--g", q8, "--n", "7", "--cert", bad});
  CHECK(rejected.code == cli::kNegative);
  CHECK(rejected.out.rfind("invalid: ", 0) == 0);

  const std::string ac5 = dir.write("ac5.txt", format_graph(make_ac_cycle(5)));
  const Result yes = run({"certify-ac", "--g", ac5, "--n", "5"});
  CHECK(yes.code == cli::kPositive);
  CHECK(yes.out == "yes\nmapping 0 1 2 3 4\n");
  const Result text_no = run({"certify-ac", "--g", q8, "--n", "7"});
  CHECK(text_no.out == "no\nl 8\nwalk 0 1 2 3 4 5 6 7\ndirections FFBFBFF\n");
  const std::string junk = dir.write("junk.json", "{\"verdict\":");
  CHECK(run({"verify-cert", "--g", q8, "--n", "7", "--cert", junk}).code == cli::kUsage);
}

TEST_CASE("images and core") {
  const Result r = run({"images", "--n", "6"});
  CHECK(r.code == cli::kPositive);
  CHECK(r.out.rfind("# 10 images of Q_6\n", 0) == 0);
  TempDir dir;
  const std::string q7 = dir.write("q7.txt", format_graph(make_q_path(7)));
  const Result core = run({"core", "--g", q7});
  CHECK(core.code == cli::kPositive);
  CHECK(core.out == "digraph 3\n0 1\n1 2\n");
}

TEST_CASE("duality") {
  TempDir dir;
  const std::string q6 = dir.write("q6.txt", format_graph(make_q_path(6)));
  const std::string ac5 = dir.write("ac5.txt", format_graph(make_ac_cycle(5)));
  const std::string ac7 = dir.write("ac7.txt", format_graph(make_ac_cycle(7)));
  const Result good = run({"duality", "--left", q6, "--right", ac5, "--max-order", "4"});
  CHECK(good.code == cli::kPositive);
  const Result bad = run({"duality", "--left", q6, "--right", ac7, "--max-order", "5", "--json"});
  CHECK(bad.code == cli::kNegative);
  CHECK(bad.out.find("\"counterexamples\":[{") != std::string::npos);
  CHECK(run({"duality", "--left", q6, "--right", ac5, "--max-order", "3", "--samples", "5"}).code == cli::kUsage);
  const std::vector<std::string> sampled{"duality", "--left", q6,  "--right", ac5,    "--max-order",
                                         "3",       "--samples", "30", "--seed", "12", "--json"};
  const Result a = run(sampled);
  const Result b = run(sampled);
  CHECK(a.code == cli::kPositive);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"sampled\":30") != std::string::npos);
}

TEST_CASE("undirected commands") {
  TempDir dir;
  const std::string c5 = dir.write("c5.txt", format_graph(make_undirected_cycle(5)));
  const std::string k3 = dir.write("k3.txt", format_graph(make_complete_graph(3)));
  for (const char* m : {"hom", "orientation", "pattern"}) {
    CHECK(run({"cycle-color", "--g", c5, "--cycle", "5", "--method", m}).code == cli::kPositive);
    CHECK(run({"cycle-color", "--g", k3, "--cycle", "5", "--method", m}).code == cli::kNegative);
  }
  CHECK(run({"cycle-color", "--g", c5, "--cycle", "5", "--method", "magic"}).code == cli::kUsage);
  const Result o = run({"orient-search", "--g", c5, "--fn", "6"});
  CHECK(o.code == cli::kPositive);
  CHECK(o.out.rfind("digraph 5\n", 0) == 0);
  CHECK(run({"orient-search", "--g", k3, "--fn", "6"}).out == "none\n");
  CHECK(run({"orient-search", "--g", c5, "--fn", "6", "--induced", "--acyclic"}).code == cli::kPositive);
  const Result rg = run({"rghv", "--g", k3, "--k", "3"});
  CHECK(rg.code == cli::kPositive);
  CHECK(rg.out.find("colouring yes") != std::string::npos);
  CHECK(run({"rghv", "--g", k3, "--k", "2"}).code == cli::kNegative);
  const std::string arc = dir.write("arc.txt", format_graph(make_directed_path(2)));
  CHECK(run({"rghv", "--g", arc, "--k", "2"}).code == cli::kUsage);
}

TEST_CASE("tree-dual") {
  TempDir dir;
  const std::string q8 = dir.write("q8.txt", format_graph(make_q_path(8)));
  const Result r = run({"tree-dual", "--t", q8});
  CHECK(r.code == cli::kPositive);
  CHECK(r.out == "# height 3\n" + format_graph(make_ac_cycle(7)));
  const std::string cyc = dir.write("cyc.txt", format_graph(make_ac_cycle(4)));
  CHECK(run({"tree-dual", "--t", cyc}).code == cli::kUsage);
}

TEST_CASE("the installed binary prints the same bytes") {
  TempDir dir;
  const std::string out1 = dir.file("a.txt");
  const std::string out2 = dir.file("b.txt");
  const std::string cmd = std::string(HOMDUAL_TOOL) + " gen --family qpath --n 9";
  CHECK(std::system((cmd + " > " + out1).c_str()) == 0);
  CHECK(std::system((cmd + " > " + out2).c_str()) == 0);
  std::ifstream a(out1);
  std::ifstream b(out2);
  std::stringstream sa;
  std::stringstream sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(sa.str() == format_graph(make_q_path(9)));
  const int status = std::system((std::string(HOMDUAL_TOOL) + " gen --family qpath --n 1 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(status) == cli::kUsage);
}
