#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "primroot/cli.hpp"

using namespace primroot;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "primroot_cli");
  std::ostringstream out, err;
  Invocation r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string cell; std::getline(is, cell, ',');) out.push_back(cell);
  return out;
}

/// CSV text of a JSON scalar, as the CSV writer would print it.
std::string csv_text(const nlohmann::ordered_json& v) {
  if (v.is_null()) return "NA";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return output::format_double(v.get<double>());
  return v.dump();
}

void expect_csv_matches_json(const std::vector<std::string>& args) {
  auto csv_args = args;
  auto json_args = args;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto csv = invoke(csv_args);
  const auto json = invoke(json_args);
  ASSERT_EQ(csv.code, 0) << csv.err;
  ASSERT_EQ(json.code, 0) << json.err;
  const auto doc = nlohmann::ordered_json::parse(json.out);
  EXPECT_EQ(doc["schema_version"], output::kSchemaVersion);
  const auto text = lines(csv.out);
  const auto& rows = doc["rows"];
  std::size_t line = 0;
  if (!rows.empty()) {
    const auto header = split(text.at(0));
    ASSERT_EQ(header.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto cells = split(text.at(i + 1));
      std::size_t c = 0;
      for (const auto& [key, value] : rows[i].items()) {
        EXPECT_EQ(header[c], key);
        EXPECT_EQ(cells[c], csv_text(value)) << key;
        ++c;
      }
    }
    line = rows.size() + 1;
  }
  for (const auto& [key, value] : doc["summary"].items()) {
    EXPECT_EQ(text.at(line++), "# " + key + "=" + csv_text(value));
  }
}

}  // namespace

TEST(Cli, OrderRow) {
  const auto r = invoke({"order", "--u", "2", "--n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n,u,order,lambda,primitive\n5,2,4,4,true\n");
}

TEST(Cli, LeastPrimeRejectsSquare) {
  const auto r = invoke({"least-prime", "--q", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("perfect square"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ArtinConstant) {
  const auto r = invoke({"artin-constant", "--cutoff", "1000000", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "artin-constant");
  EXPECT_NEAR(doc["rows"][0]["value"].get<double>(), 0.3739558136, 1e-6);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"order", "--u", "2"}).code, 2);
  EXPECT_EQ(invoke({"order", "--u", "2", "--n", "5", "--bogus", "1"}).code, 2);
  EXPECT_EQ(invoke({"order", "--u", "-2", "--n", "5"}).code, 2);
  EXPECT_EQ(invoke({"psi", "--u", "2", "--p", "5", "--method", "other"}).code, 2);
  const auto r = invoke({"frobnicate"});
  EXPECT_NE(r.err.find("Subcommands"), std::string::npos);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(invoke({"order", "--u", "3", "--n", "6"}).code, 1);
  EXPECT_EQ(invoke({"is-primroot", "--u", "2", "--p", "9"}).code, 1);
  EXPECT_EQ(invoke({"germain-test", "--q", "2", "--p", "127"}).code, 1);
  EXPECT_EQ(invoke({"fermat-test", "--q", "2", "--f", "7"}).code, 1);
  EXPECT_EQ(invoke({"interval", "--z", "2", "--q", "2"}).code, 1);
  EXPECT_EQ(invoke({"order", "--u", "2", "--n", "9223372036854775809"}).code, 1);
  EXPECT_EQ(invoke({"psi", "--u", "2", "--p", "7", "--tau", "2"}).code, 1);
}

TEST(Cli, AdaptersMatchLibrary) {
  auto r = invoke({"is-primroot", "--u", "3", "--p", "5"});
  EXPECT_EQ(r.out, "u,p,primitive,exponentiations\n3,5,true,1\n");

  r = invoke({"lift", "--u", "2", "--n", "15"});
  EXPECT_EQ(r.out, "u,n,lambda,prime_powers,lifted\n2,15,4,2,true\n");

  r = invoke({"germain-test", "--q", "2", "--p", "13"});
  EXPECT_EQ(r.out,
            "q,p,s,r,primitive,exponentiations,generic_exponentiations\n"
            "2,13,2,3,true,2,2\n");

  r = invoke({"fermat-test", "--q", "3", "--f", "17"});
  EXPECT_EQ(r.out, "q,f,jacobi,primitive\n3,17,-1,true\n");

  r = invoke({"k2n", "--k", "3", "--nmax", "6"});
  EXPECT_EQ(r.out, "n,p\n1,7\n2,13\n5,97\n6,193\n# count=4\n# cutoff_n=NA\n");

  r = invoke({"germain", "--limit", "30"});
  EXPECT_EQ(r.out, "p,s,r\n7,1,3\n11,1,5\n13,2,3\n23,1,11\n29,2,7\n# count=5\n");

  r = invoke({"least-prime", "--q", "7"});
  EXPECT_EQ(r.out, "q,least_p,cap,exhausted,germain_hit\n7,5,100000,false,false\n");

  r = invoke({"least-prime", "--q", "2634", "--cap", "50"});
  EXPECT_EQ(r.out, "q,least_p,cap,exhausted,germain_hit\n2634,NA,50,true,false\n");

  r = invoke({"density", "--q", "2", "--x", "100"});
  const auto rep = prime_counts(2, 100);
  EXPECT_EQ(split(lines(r.out).at(1)).at(3), std::to_string(rep.pi_q_x));

  r = invoke({"psi", "--u", "2", "--p", "5", "--method", "free", "--literal"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(split(lines(r.out).at(1)).at(4), "1");

  r = invoke({"interval", "--z", "10", "--q", "2"});
  const auto d = decompose_interval(10, 2);
  const auto cells = split(lines(r.out).at(1));
  EXPECT_EQ(cells.at(3), "3");
  EXPECT_EQ(cells.at(4), output::format_double(d.trivial_term));
  EXPECT_EQ(cells.at(5), output::format_double(d.error_term));
}

TEST(Cli, ScanColumnsAndSummary) {
  const auto r = invoke({"scan", "--qmin", "2", "--qmax", "30", "--threads", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto text = lines(r.out);
  EXPECT_EQ(text.at(0), "q,least_p,bound_value,ratio,germain_hit");
  EXPECT_EQ(text.at(1), "2,3,NA,NA,false");
  EXPECT_EQ(text.at(2), "3,5,NA,NA,false");
  EXPECT_NE(r.out.find("# max_ratio_q=21\n"), std::string::npos);
  EXPECT_NE(r.out.find("# exhausted=0\n"), std::string::npos);
  EXPECT_NE(r.err.find("scan:"), std::string::npos);
}

TEST(Cli, OutputIsBitStable) {
  const std::vector<std::string> args = {"scan", "--qmin", "2", "--qmax", "200"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(invoke(args).out, invoke(threaded).out);
}

TEST(Cli, CsvAndJsonCarryIdenticalValues) {
  expect_csv_matches_json({"order", "--u", "3", "--n", "1001"});
  expect_csv_matches_json({"scan", "--qmin", "2", "--qmax", "60", "--c", "2"});
  expect_csv_matches_json({"interval", "--z", "500", "--q", "3"});
  expect_csv_matches_json({"psi", "--u", "5", "--p", "23", "--method", "divisor"});
  expect_csv_matches_json({"density", "--q", "3", "--x", "1000"});
  expect_csv_matches_json({"k2n", "--k", "3", "--nmax", "70"});
  expect_csv_matches_json({"error-trend", "--q", "2", "--zmin", "100", "--zmax", "1000",
                           "--steps", "3"});
  expect_csv_matches_json({"artin-constant", "--cutoff", "1000"});
}
