#include "unicell/bijections.hpp"
#include "unicell/cli/cache.hpp"
#include "unicell/cli/commands.hpp"
#include "unicell/cli/literals.hpp"
#include "unicell/cli/serialize.hpp"
#include "unicell/enumerate.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace unicell;
using namespace unicell::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "unicell-test-XXXXXX").string();
    path = mkdtemp(tmpl.data());
    unsetenv(kCacheEnv);
  }
  ~TempDir() { fs::remove_all(path); }
};

Json read_json(const fs::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

void write_json(const fs::path& p, const Json& j) {
  std::ofstream out(p, std::ios::trunc);
  out << dump(j);
}

}  // namespace

TEST_CASE("gluing literals round trip") {
  for (int n = 1; n <= 3; ++n)
    for (int q = 1; q <= n + 1; ++q)
      for (const auto& u : gen_colored_unicellular(n, q, false)) CHECK(parse_gluing(format_gluing(u)) == u);
  auto u = parse_gluing("n=2; pairs=(0 2, 1 3)");
  CHECK(u.q() == 1);
  CHECK(u.colors() == std::vector<int>{0});
  CHECK(format_gluing(u) == "n=2; pairs=(0 2, 1 3); colors=(1)");
  auto t = parse_gluing("  n = 1 ; pairs = ( 0 1 ! ) ; colors = ( 1 ) ; q = 1 ");
  CHECK(t.q() == 1);
  CHECK_FALSE(t.orientable());
}

TEST_CASE("gluing literal errors") {
  try {
    parse_gluing("n=1; pairs=(0 1");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 15);
    CHECK(std::string(e.what()).rfind("parse error at position 15", 0) == 0);
  }
  CHECK_THROWS_AS(parse_gluing("n=x"), ParseError);
  CHECK_THROWS_AS(parse_gluing("m=1; pairs=(0 1)"), ParseError);
  CHECK_THROWS(parse_gluing("n=1; pairs=(0 0)"));
  CHECK_THROWS(parse_gluing("n=2; pairs=(0 1)"));
  CHECK_THROWS(parse_gluing("n=1; pairs=(0 1); colors=(1 3)"));
}

TEST_CASE("rotation literals round trip") {
  for (int e = 1; e <= 3; ++e)
    for (const auto& m : gen_rooted_orientable_maps(e)) CHECK(to_rooted_map(parse_rotation(format_rotation(m))) == m);
  for (int slots = 2; slots <= 6; ++slots)
    for_each_near_eulerian_tree(slots, [](const NearEulerianTree& t) {
      CHECK(to_near_eulerian_tree(parse_rotation(format_near_eulerian_tree(t))) == t);
    });
  for (int q = 1; q <= 3; ++q)
    for (const auto& t : gen_tree_rooted_maps(2, q))
      CHECK(to_tree_rooted_map(parse_rotation(format_tree_rooted_map(t))) == t);
  PlaneMap loop(RootedMap({1, 0}, {1, 0}, 0), 1);
  CHECK(to_plane_map(parse_rotation(format_plane_map(loop, dual_distance_orientation(loop)))) == loop);
  CHECK(format_cycles({1, 2, 0, 3}) == "(0 1 2)(3)");
  CHECK_THROWS_AS(parse_rotation("sigma=(0 1; alpha=(0 1)"), ParseError);
  CHECK_THROWS(to_rooted_map(parse_rotation("sigma=(0 1); alpha=(0 0)")));
}

TEST_CASE("census output") {
  TempDir dir;
  auto csv = call({"census", "unicellular-orientable", "-n", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,v,count\n3,2,10\n3,4,5\n");
  auto json = call({"census", "unicellular-general", "-n", "2"});
  CHECK(json.code == 0);
  Json doc = Json::parse(json.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["family"] == "unicellular-general");
  CHECK(doc["total"] == "12");
  CHECK(json.out == call({"census", "unicellular-general", "-n", "2"}).out);
  fs::path file = dir.path / "pqr.json";
  auto written = call({"census", "planar-pqr", "-n", "2", "-o", file.string()});
  CHECK(written.code == 0);
  CHECK(read_json(file) == Json::parse(written.out));
  CHECK(read_json(file)["total"] == "12");
  CHECK(call({"census", "planar-pqr", "-n", "99"}).code == 2);
  CHECK(call({"census", "spheres", "-n", "2"}).code == 2);
  CHECK(call({"census", "planar-pqr", "-n", "2", "--format", "xml"}).code == 2);
}

TEST_CASE("verify output") {
  unsetenv(kCacheEnv);
  auto ok = call({"verify", "ledoux", "-n", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "{\n  \"check\": \"ledoux\",\n  \"counterexample\": null,\n  \"range\": \"2<=n<=3\",\n"
                  "  \"schema\": 1,\n  \"verdict\": \"pass\"\n}\n");
  auto timed = call({"verify", "jackson", "-n", "2", "--timing"});
  CHECK(timed.code == 0);
  CHECK(Json::parse(timed.out).contains("seconds"));
  CHECK_FALSE(Json::parse(call({"verify", "jackson", "-n", "2"}).out).contains("seconds"));
  auto list = call({"verify", "--list"});
  CHECK(list.code == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == static_cast<long>(verification_checks().size()));
  CHECK(call({"verify", "nope"}).code == 2);
  CHECK(call({"verify", "ledoux", "-n", "9"}).code == 2);
  CHECK(call({"verify"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("every check passes at its smallest bound") {
  unsetenv(kCacheEnv);
  for (const CheckSpec& c : verification_checks()) {
    CAPTURE(c.name);
    Verdict v = run_check(c.name, c.min_bound, Context{});
    CHECK(v.pass);
    CHECK(v.check == c.name);
  }
}

TEST_CASE("fiber output") {
  auto psi = call({"fiber", "psi", "n=1; pairs=(0 1!)"});
  CHECK(psi.code == 0);
  Json doc = Json::parse(psi.out);
  CHECK(doc["size"] == 2);
  CHECK(doc["w"] == 1);
  CHECK(doc["orientable"] == false);
  for (const auto& el : doc["elements"]) {
    CHECK(el["faces"] == 2);
    CHECK(el["degrees_match"] == true);
  }
  auto ups = call({"fiber", "upsilon", "n=2; pairs=(0 2, 1 3); colors=(1)"});
  CHECK(ups.code == 0);
  Json u = Json::parse(ups.out);
  CHECK(u["size"] == 1);
  CHECK(u["elements"][0]["edge_colors_match"] == true);
  CHECK(call({"fiber", "psi", "n=1; pairs=(0"}).code == 2);
  CHECK(call({"fiber", "theta", "n=1; pairs=(0 1)"}).code == 2);
}

TEST_CASE("bijection output") {
  auto phi = call({"bijection", "phi", "n=1; pairs=(0 1); colors=(1 2)"});
  CHECK(phi.code == 0);
  CHECK(Json::parse(phi.out)["output"] == "sigma=(0)(1); alpha=(0 1); root=0; labels=(1 2); tree=(0)");
  auto back = call({"bijection", "phi-inv", "sigma=(0)(1); alpha=(0 1); root=0; labels=(1 2); tree=(0)"});
  CHECK(back.code == 0);
  CHECK(Json::parse(back.out)["output"] == "n=1; pairs=(0 1); colors=(1 2)");
  auto gamma = call({"bijection", "gamma", "sigma=(0 1); alpha=(); out=(0); in=(1)"});
  CHECK(gamma.code == 0);
  Json g = Json::parse(gamma.out);
  CHECK(g["output"] == "sigma=(0 1); alpha=(0 1); root=0; outer=0; out=(0); in=(1)");
  CHECK(g["dual_distance_orientation"] == true);
  auto delta = call({"bijection", "delta", "sigma=(0 1); alpha=(0 1); root=0; outer=0"});
  CHECK(delta.code == 0);
  CHECK(Json::parse(delta.out)["output"] == "sigma=(0 1); alpha=(); root=0; out=(0); in=(1)");
  CHECK(call({"bijection", "phi", "n=1; pairs=(0 1!)"}).code == 2);
  CHECK(call({"bijection", "gamma", "sigma=(0 1); alpha=(); out=(0); in=(0)"}).code == 2);
}

TEST_CASE("census cache") {
  TempDir dir;
  Context ctx{1, dir.path};
  CountTable fresh = census_table("unicellular-orientable", 3, ctx);
  CensusCache cache(dir.path);
  fs::path file = cache.file_for("unicellular-orientable", 3);
  REQUIRE(fs::exists(file));
  Json doc = read_json(file);
  CHECK(doc["sha256"] == sha256_hex(doc["body"].dump()));
  CHECK(cache.load("unicellular-orientable", 3, {"n", "v"}) == fresh);
  CHECK_FALSE(cache.load("unicellular-orientable", 4, {"n", "v"}).has_value());

  Json tampered = doc;
  tampered["body"][0]["count"] = "11";
  write_json(file, tampered);
  CHECK_FALSE(cache.load("unicellular-orientable", 3, {"n", "v"}).has_value());
  CHECK(census_table("unicellular-orientable", 3, ctx) == fresh);
  CHECK(read_json(file) == doc);

  tampered["sha256"] = sha256_hex(tampered["body"].dump());
  write_json(file, tampered);
  auto failing = call({"verify", "gluing-totals", "-n", "3", "--cache", dir.path.string()});
  CHECK(failing.code == 1);
  CHECK(Json::parse(failing.out)["verdict"] == "fail");

  setenv(kCacheEnv, dir.path.c_str(), 1);
  CHECK(resolve_cache_dir(std::nullopt) == dir.path);
  CHECK(call({"verify", "gluing-totals", "-n", "3"}).code == 1);
  CHECK(resolve_cache_dir(std::string("/elsewhere")) == fs::path("/elsewhere"));
  unsetenv(kCacheEnv);
  CHECK_FALSE(resolve_cache_dir(std::nullopt).has_value());
  CHECK(call({"verify", "gluing-totals", "-n", "3"}).code == 0);
}

TEST_CASE("table serialization") {
  CountTable t;
  t.set({1, 2}, 3);
  t.set({2, 1}, ExactInteger("123456789012345678901234567890"));
  Json rows = table_to_json(t, {"q", "r"});
  CHECK(rows[1]["count"] == "123456789012345678901234567890");
  CHECK(table_from_json(rows, {"q", "r"}) == t);
  CHECK(table_to_csv(t, {"q", "r"}) == "q,r,count\n1,2,3\n2,1,123456789012345678901234567890\n");
  CHECK_THROWS(table_from_json(Json::parse("[{\"q\": 1}]"), {"q", "r"}));
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
