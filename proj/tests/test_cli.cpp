#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "strongcommon/cli.hpp"
#include "strongcommon/document.hpp"
#include "strongcommon/sweep.hpp"

using namespace strongcommon;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("strongcommon_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("certify: paw") {
  auto r = run({"certify", "--edges", "0 1,1 2,0 2,2 3"});
  CHECK(r.code == kExitCertified);
  auto doc = Json::parse(r.out);
  CHECK(doc["schema_version"] == "1.0");
  CHECK(doc["deficit_coeffs"] == Json::parse(R"(["0/1","0/1","0/1","-1/1","1/1"])"));
  CHECK(doc["c3"] == "-1/1");
  CHECK(doc["witness_p"] == "1/2");
  CHECK(doc["witness_value"] == "-1/16");
  CHECK(doc["applicable"] == true);
  CHECK(doc["graph"]["n"] == 4);
  CHECK(doc["graph"]["m"] == 4);
  std::uint64_t total = 0;
  for (const auto& c : doc["classes"]) total += c["multiplicity"].get<std::uint64_t>();
  CHECK(total == 7);
  CHECK(doc["lemma_report"].size() == 8);
  for (const auto& [name, status] : doc["lemma_report"].items()) CHECK(status != "fail");
  CHECK(doc["timings_ms"].empty());
}

TEST_CASE("certify: not applicable and input errors") {
  auto k3 = run({"certify", "--g6", "Bw"});
  CHECK(k3.code == kExitNotApplicable);
  CHECK(Json::parse(k3.out)["reason"] == "does not properly contain a triangle (e=3)");
  CHECK(Json::parse(k3.out)["witness_p"].is_null());
  auto k2 = run({"certify", "--edges", "0 1"});
  CHECK(k2.code == kExitNotApplicable);
  CHECK(Json::parse(k2.out)["reason"] == "no triangle");

  CHECK(run({"certify", "--g6", "B"}).code == kExitInputError);
  CHECK(run({"certify", "--g6", "Bw~"}).code == kExitInputError);
  CHECK(run({"certify", "--edges", "0 0"}).code == kExitInputError);
  CHECK(run({"certify"}).code == kExitInputError);
  CHECK(run({"certify", "--g6", "Bw", "--edges", "0 1"}).code == kExitInputError);
  CHECK(run({"nonsense"}).code == kExitInputError);
  CHECK(run({"certify", "--g6", "Bw", "--max-vertices", "2"}).code == kExitInputError);
  auto missing = run({"certify", "--input", "/nonexistent/graphs.g6"});
  CHECK(missing.code == kExitInputError);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("certify: other graph sources") {
  auto tree = run({"certify", "--tree", "v0"});
  CHECK(tree.code == kExitCertified);
  CHECK(Json::parse(tree.out)["graph"]["m"] == 6);
  auto file = write_temp("diamond.g6", "\nCz\n");
  auto diamond = run({"certify", "--input", file});
  CHECK(diamond.code == kExitCertified);
  CHECK(Json::parse(diamond.out)["witness_value"] == "-3/16");
  auto csv = run({"certify", "--g6", "Cx", "--format", "csv"});
  CHECK(csv.code == kExitCertified);
  CHECK(lines_of(csv.out).at(1) == "CN,4,4,3,-1/1,yes,1/2,-1/16,yes,");
}

TEST_CASE("certificate documents are deterministic and re-verifiable") {
  auto a = run({"certify", "--g6", "Cx"});
  auto b = run({"certify", "--edges", "0 1,1 2,0 2,2 3"});
  CHECK(a.out == b.out);
  auto path = write_temp("paw.json", a.out);
  auto verified = run({"verify", "--input", path});
  CHECK(verified.code == kExitCertified);
  CHECK(verified.out.rfind("certified", 0) == 0);

  auto doc = Json::parse(a.out);
  doc["future_field"] = {{"anything", 1}};
  CHECK(verify_certificate_document(doc).certified);

  auto tampered = doc;
  tampered["witness_value"] = "-1/8";
  CHECK_FALSE(verify_certificate_document(tampered).valid);
  tampered = doc;
  tampered["classes"][0]["multiplicity"] = 4;
  CHECK_FALSE(verify_certificate_document(tampered).valid);
  tampered = doc;
  tampered["schema_version"] = "2.0";
  CHECK_FALSE(verify_certificate_document(tampered).valid);
  tampered = doc;
  tampered["deficit_coeffs"] = Json::array({"1/2"});
  CHECK_FALSE(verify_certificate_document(tampered).valid);
  auto bad_path = write_temp("tampered.json", tampered.dump());
  CHECK(run({"verify", "--input", bad_path}).code == kExitInputError);

  auto k3 = Json::parse(run({"certify", "--g6", "Bw"}).out);
  auto check = verify_certificate_document(k3);
  CHECK(check.valid);
  CHECK_FALSE(check.certified);
  CHECK(run({"verify", "--input", write_temp("k3.json", k3.dump())}).code == kExitNotApplicable);
  CHECK(run({"verify", "--input", write_temp("junk.json", "{not json")}).code == kExitInputError);
}

TEST_CASE("certify: timings are opt-in") {
  auto r = run({"certify", "--g6", "Cx", "--timings"});
  auto doc = Json::parse(r.out);
  CHECK(doc["timings_ms"].contains("certify"));
  CHECK(doc["timings_ms"].contains("lemmas"));
}

TEST_CASE("scan") {
  auto four = write_temp("four.g6", "Bw\nCx\nCr\nDhc\n");
  auto r = run({"scan", "--input", four});
  CHECK(r.code == 0);
  auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "canonical,n,m,girth,c3,applicable,witness_p,witness_value,lemmas_pass,error");
  CHECK(rows[1] == "Bw,3,3,3,1/1,no,,,yes,");
  CHECK(rows[2] == "CN,4,4,3,-1/1,yes,1/2,-1/16,yes,");
  CHECK(rows[3].find(",4,4,4,0/1,no,,,yes,") != std::string::npos);
  CHECK(rows[4].find(",5,5,5,0/1,no,,,yes,") != std::string::npos);

  auto json = run({"scan", "--input", four, "--format", "json"});
  auto table = Json::parse(json.out);
  REQUIRE(table.size() == 4);
  std::vector<std::string> c3;
  std::vector<bool> applicable;
  for (const auto& row : table) {
    c3.push_back(row["c3"]);
    applicable.push_back(row["applicable"]);
  }
  CHECK(c3 == std::vector<std::string>{"1/1", "-1/1", "0/1", "0/1"});
  CHECK(applicable == std::vector<bool>{false, true, false, false});

  auto empty = run({"scan", "--input", write_temp("empty.g6", "")});
  CHECK(empty.code == 0);
  CHECK(lines_of(empty.out).size() == 1);
  CHECK(Json::parse(run({"scan", "--input", write_temp("empty2.g6", ""), "--format", "json"}).out).empty());

  auto bad = run({"scan", "--input", write_temp("bad.g6", "Bw\n!!bad\nCx\n")});
  CHECK(bad.code == kExitPartialFailure);
  auto bad_rows = lines_of(bad.out);
  REQUIRE(bad_rows.size() == 4);
  CHECK(bad_rows[2].rfind(",,,,,,,,,", 0) == 0);
  CHECK(bad_rows[3].rfind("CN,", 0) == 0);
}

TEST_CASE("scan output is identical for any worker count") {
  std::string text;
  for (const auto& g : enumerate_graphs(5)) text += to_graph6(g) + "\n";
  auto path = write_temp("all5.g6", text);
  auto one = run({"scan", "--input", path, "--jobs", "1"});
  auto four = run({"scan", "--input", path, "--jobs", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(lines_of(one.out).size() == 35);
}

TEST_CASE("lemmas") {
  auto five = run({"lemmas", "--max-n", "5"});
  CHECK(five.code == 0);
  CHECK(lines_of(five.out).at(0) == "34 graphs, all lemma checks passed");
  auto one = run({"lemmas", "--max-n", "1"});
  CHECK(one.code == 0);
  CHECK(lines_of(one.out).at(0) == "1 graphs, all lemma checks passed");
  auto json = Json::parse(run({"lemmas", "--max-n", "4", "--format", "json", "--jobs", "2"}).out);
  CHECK(json["graphs"] == 11);
  CHECK(json["all_pass"] == true);
  CHECK(json["checks"].size() == 8);
  CHECK(run({"lemmas", "--max-n", "0"}).code == kExitInputError);
  CHECK(run({"lemmas", "--max-n", "11"}).code == kExitInputError);
}

TEST_CASE("density") {
  auto r = run({"density", "--g6", "Bw", "--p", "1/4"});
  CHECK(r.code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["density_coeffs"] == Json::parse(R"(["-1/1","3/1","-3/1","2/1"])"));
  CHECK(doc["delta_coeffs"] == Json::parse(R"(["0/1","0/1","0/1","1/1"])"));
  CHECK(doc["density_at_p"] == "-13/32");  // oracle value
  auto rec = Json::parse(run({"density", "--g6", "Cx", "--engine", "recurrence"}).out);
  auto direct = Json::parse(run({"density", "--g6", "Cx"}).out);
  CHECK(rec["density_coeffs"] == direct["density_coeffs"]);
}

TEST_CASE("inequality") {
  auto lifted = Json::parse(run({"inequality", "--g6", "Cx", "--lifted-p", "1/2"}).out);
  CHECK(lifted["difference"] == "-1/128");
  CHECK(lifted["violates"] == true);
  CHECK(lifted["expansion_holds"] == true);
  auto flat = Json::parse(run({"inequality", "--g6", "Cx", "--entries", "1/2,1/2,1/2"}).out);
  CHECK(flat["difference"] == "0/1");
  CHECK(flat["violates"] == false);
  auto three = run({"inequality", "--g6", "Bw", "--measures", "1/3,1/3,1/3", "--entries", "1,0,0,1,0,1"});
  CHECK(three.code == 0);
  CHECK(Json::parse(three.out)["expansion_holds"] == true);
  CHECK(run({"inequality", "--g6", "Bw", "--entries", "1,0"}).code == kExitInputError);
  CHECK(run({"inequality", "--g6", "Bw", "--entries", "2,0,1"}).code == kExitInputError);
  CHECK(run({"inequality", "--g6", "Bw"}).code == kExitInputError);
}

TEST_CASE("local") {
  auto paw = run({"local", "--g6", "Cx"});
  CHECK(paw.code == 0);
  auto doc = Json::parse(paw.out);
  CHECK(doc["p"] == "1/2");
  CHECK(doc["epsilon_coeffs"] == Json::parse(R"(["0/1","0/1","0/1","0/1","-1/16"])"));
  CHECK(doc["epsilon0"] == "1/1");
  CHECK(doc["samples"].size() == 3);
  auto k3 = run({"local", "--g6", "Bw"});
  CHECK(k3.code == kExitNotApplicable);
  CHECK(k3.err.find("not applicable") != std::string::npos);
}

TEST_CASE("explore-girth") {
  auto c5 = Json::parse(run({"explore-girth", "--edges", "0 1,1 2,2 3,3 4,4 0"}).out);
  CHECK(c5["girth"] == 5);
  CHECK(c5["deficit_coeffs"].empty());
  CHECK(c5["lowest_index"].is_null());
  auto file = write_temp("girth.g6", "Cx\nCr\n");
  auto many = Json::parse(run({"explore-girth", "--input", file}).out);
  REQUIRE(many.size() == 2);
  CHECK(many[0]["lowest_index"] == 3);
  CHECK(many[0]["lowest_sign"] == -1);
  CHECK(many[1]["girth"] == 4);
  CHECK(many[1]["lowest_sign"] == 1);
}

TEST_CASE("output flag writes the document to a file") {
  auto path = (std::filesystem::temp_directory_path() / "strongcommon_test_out.json").string();
  std::filesystem::remove(path);
  auto r = run({"certify", "--g6", "Cx", "--output", path});
  CHECK(r.code == kExitCertified);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["witness_value"] == "-1/16");
}
