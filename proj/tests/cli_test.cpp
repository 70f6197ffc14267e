#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "fibsum/catalog.hpp"
#include "support/subprocess.hpp"

using fibsum::testing::CmdResult;
using fibsum::testing::count_lines;
using fibsum::testing::run_cmd;
using nlohmann::json;

namespace {

const std::string kBin = FIBSUM_BIN;

CmdResult fibsum_cli(const std::string& args) { return run_cmd(kBin + " " + args); }

}  // namespace

TEST_CASE("list prints one line per catalog entry") {
  CmdResult res = fibsum_cli("list");
  CHECK(res.exit_code == 0);
  CHECK(count_lines(res.out) == fibsum::catalog().size());
  CHECK(res.out.find("THM2-F") != std::string::npos);
  CHECK(res.out.find("s even") != std::string::npos);
  CHECK(res.out.find("REL1-F") != std::string::npos);
  CHECK(res.out.find("r nonzero") != std::string::npos);
}

TEST_CASE("unknown id and malformed arguments exit with code 2") {
  CmdResult unknown = fibsum_cli("verify --id NOPE");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err.find("unknown identity id") != std::string::npos);
  CHECK(unknown.out.empty());

  CHECK(fibsum_cli("verify --id COR1-F --n 5..1").exit_code == 2);
  CHECK(fibsum_cli("verify --id COR1-F --n abc").exit_code == 2);
  CHECK(fibsum_cli("verify --id COR1-F --n -1..4").exit_code == 2);
  CHECK(fibsum_cli("verify --all --id COR1-F").exit_code == 2);
  CHECK(fibsum_cli("verify --id COR1-F --samples 10").exit_code == 2);  // samples need a seed
  CHECK(fibsum_cli("verify --format yaml").exit_code == 2);
  CHECK(fibsum_cli("frobnicate").exit_code == 2);
  CHECK(fibsum_cli("").exit_code == 2);
}

TEST_CASE("single-identity grid verification with overridden ranges") {
  CmdResult res = fibsum_cli("verify --id COR1-F --n 0..5 --t 0..0 --format json");
  CHECK(res.exit_code == 0);
  json reports = json::parse(res.out);
  REQUIRE(reports.is_array());
  REQUIRE(reports.size() == 1);
  CHECK(reports[0]["identity_id"] == "COR1-F");
  CHECK(reports[0]["tuples_tested"] == 6);
  CHECK(reports[0]["tuples_skipped"] == 0);
  CHECK(reports[0]["failures"].empty());
  CHECK(reports[0]["grid"]["n"] == "0..5");
  CHECK(reports[0]["grid"]["t"] == "0..0");
  CHECK(!reports[0].contains("seed"));
}

TEST_CASE("emitted json round-trips byte-identically") {
  CmdResult res = fibsum_cli("verify --id THM2-F --n 0..4 --format json");
  CHECK(res.exit_code == 0);
  json parsed = json::parse(res.out);
  CHECK(parsed.dump(2) + "\n" == res.out);
}

TEST_CASE("tsv carries the same information as json") {
  const std::string args = "verify --id THM2-F --n 0..3 --s -2..2 --t -1..1";
  CmdResult js = fibsum_cli(args + " --format json");
  CmdResult tsv = fibsum_cli(args + " --format tsv");
  CHECK(js.exit_code == 0);
  CHECK(tsv.exit_code == 0);

  json reports = json::parse(js.out);
  REQUIRE(reports.size() == 1);

  REQUIRE(count_lines(tsv.out) == 2);  // header + one report
  std::string header = tsv.out.substr(0, tsv.out.find('\n'));
  CHECK(header == "identity_id\tn\tr\ts\tt\tseed\ttuples_tested\ttuples_skipped\tfailures");
  std::string row = tsv.out.substr(tsv.out.find('\n') + 1);
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = row.find('\t', start);
    if (tab == std::string::npos) {
      cells.push_back(row.substr(start, row.size() - start - 1));  // strip newline
      break;
    }
    cells.push_back(row.substr(start, tab - start));
    start = tab + 1;
  }
  REQUIRE(cells.size() == 9);
  CHECK(cells[0] == reports[0]["identity_id"]);
  CHECK(cells[1] == reports[0]["grid"]["n"]);
  CHECK(cells[2] == reports[0]["grid"]["r"]);
  CHECK(cells[3] == reports[0]["grid"]["s"]);
  CHECK(cells[4] == reports[0]["grid"]["t"]);
  CHECK(cells[5] == "-");
  CHECK(cells[6] == std::to_string(reports[0]["tuples_tested"].get<std::uint64_t>()));
  CHECK(cells[7] == std::to_string(reports[0]["tuples_skipped"].get<std::uint64_t>()));
  CHECK(cells[8] == "-");
}

TEST_CASE("human format shows a table") {
  CmdResult res = fibsum_cli("verify --id COR1-F --n 0..3 --format human");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("identity") != std::string::npos);
  CHECK(res.out.find("COR1-F") != std::string::npos);
  CHECK(res.out.find("all reports clean") != std::string::npos);
}

TEST_CASE("jobs flag does not change the report bytes") {
  const std::string args = "verify --id THM3-F --n 0..5 --r -3..3 --s -3..3 --t -3..3 --format json";
  CmdResult one = fibsum_cli(args + " --jobs 1");
  CmdResult eight = fibsum_cli(args + " --jobs 8");
  CHECK(one.exit_code == 0);
  CHECK(eight.exit_code == 0);
  CHECK(one.out == eight.out);
}

TEST_CASE("seeded runs are reproducible") {
  const std::string args = "verify --id COR1-F --seed 7 --samples 40 --format json";
  CmdResult a = fibsum_cli(args);
  CmdResult b = fibsum_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  json reports = json::parse(a.out);
  REQUIRE(reports.size() == 2);  // grid report, then the seeded report
  CHECK(!reports[0].contains("seed"));
  CHECK(reports[1]["seed"] == 7);
  CHECK(reports[1]["tuples_tested"] == 40);
}

TEST_CASE("eval prints exact digits") {
  CmdResult fib_neg = fibsum_cli("eval --seq fib --index -4");
  CHECK(fib_neg.exit_code == 0);
  CHECK(fib_neg.out == "-3\n");

  CmdResult lucas0 = fibsum_cli("eval --seq lucas --index 0");
  CHECK(lucas0.exit_code == 0);
  CHECK(lucas0.out == "2\n");

  CmdResult big = fibsum_cli("eval --seq fib --index 300");
  CHECK(big.exit_code == 0);
  CHECK(big.out == "222232244629420445529739893461909967206666939096499764990979600\n");

  CHECK(fibsum_cli("eval --seq fib --index 3000000000").exit_code == 2);
  CHECK(fibsum_cli("eval --seq primes --index 1").exit_code == 2);
}

TEST_CASE("poly subcommand reports per-n verdicts") {
  CmdResult res = fibsum_cli("poly --id dat1 --n-max 8");
  CHECK(res.exit_code == 0);
  CHECK(count_lines(res.out) == 9);
  CHECK(res.out.find("FAIL") == std::string::npos);
  CHECK(res.out.find("dat1 n=8: pass") != std::string::npos);

  CHECK(fibsum_cli("poly --id rel4 --n-max 4").exit_code == 0);
  CHECK(fibsum_cli("poly --id dat9 --n-max 4").exit_code == 2);
  CHECK(fibsum_cli("poly --id dat1 --n-max 300").exit_code == 2);
}
