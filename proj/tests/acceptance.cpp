// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance gate. Runs the full verification matrix and prints
// one PASS/FAIL line per criterion; exits nonzero when any criterion fails.
// argv[1] must be the path to the command-line binary.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "verisum/report.hpp"
#include "verisum/sequences.hpp"
#include "verisum/suite.hpp"

using namespace verisum;

namespace {

int g_failures = 0;

void report(int index, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << title;
    if (!ok && !detail.empty()) {
        std::cout << " [" << detail << "]";
    }
    std::cout << std::endl;
    if (!ok) {
        ++g_failures;
    }
}

void criterion(int index, const std::string& title,
               const std::function<void(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        body(detail);
        ok = detail.empty();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(index, title, ok, detail);
}

void tally(const std::vector<CheckOutcome>& outcomes, std::map<std::string, std::size_t>& counts,
           std::string& detail) {
    for (const CheckOutcome& o : outcomes) {
        ++counts[o.check];
        if (!o.pass && detail.empty()) {
            detail = o.check + " " + o.instance + ": " + o.lhs + " != " + o.rhs;
        }
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& cli, const std::string& args,
            const std::filesystem::path& capture) {
    const std::string command =
        "\"" + cli + "\" " + args + " >" + capture.string() + " 2>&1";
    const int status = std::system(command.c_str());
    if (status == -1) {
        return -1;
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>" << std::endl;
        return 2;
    }
    const std::string cli = argv[1];
    const std::filesystem::path work =
        std::filesystem::temp_directory_path() /
        ("verisum_acceptance_" + std::to_string(static_cast<long>(::getpid())));
    std::filesystem::create_directories(work);

    criterion(1, "identity suite at full bounds, zero failures", [](std::string& detail) {
        std::map<std::string, std::size_t> counts;
        tally(run_identity_suite({"id1", "id2", "id3", "id4", "id5", "id6", "id7", "conv_hyper",
                                  "transform_4f3", "chaundy_bullard"},
                                 60, 4),
              counts, detail);
        tally(run_identity_suite({"conv_threeway"}, 100, 4), counts, detail);
        const std::map<std::string, std::size_t> expect = {
            {"id1", 61},           {"id2", 61},        {"id3", 61},
            {"id4", 60},           {"id5", 60},        {"id6", 61},
            {"id7", 61},           {"conv_hyper", 41}, {"transform_4f3", 26},
            {"chaundy_bullard", 13}, {"conv_threeway", 101}};
        if (detail.empty() && counts != expect) {
            detail = "record counts off:";
            for (const auto& [id, n] : counts) {
                detail += " " + id + "=" + std::to_string(n);
            }
        }
    });

    const SharedTables tables = SharedTables::build(Integer(199));
    const std::vector<Integer> primes = primes_between(5, 199);

    criterion(2, "congruence suite over primes 5..199, exact in the ring",
              [&](std::string& detail) {
                  const std::vector<std::string> ids = {
                      "rv",        "rv_half_equiv", "sun_half",     "sun_tail",
                      "cxh",       "mao_half",      "sun8_p3",      "sun16_p3",
                      "den8",      "den16",         "mao_cao_32",   "suncon3_half",
                      "suncon3_full", "key1_mod_p5", "key_star",    "sun_x_8",
                      "sun_x_16"};
                  std::map<std::string, std::size_t> counts;
                  tally(run_suite(primes, ids, tables, 4), counts, detail);
                  std::size_t one_mod_four = 0;
                  for (const Integer& p : primes) {
                      if (p % 4 == 1) {
                          ++one_mod_four;
                      }
                  }
                  if (detail.empty()) {
                      for (const std::string& id : ids) {
                          const std::size_t expect =
                              (id == "sun_x_8" || id == "sun_x_16") ? one_mod_four : primes.size();
                          if (counts[id] != expect) {
                              detail = id + ": " + std::to_string(counts[id]) + " records, want " +
                                       std::to_string(expect);
                              break;
                          }
                      }
                  }
              });

    criterion(3, "spot values at p=5 and p=13 match the closed forms", [&](std::string& detail) {
        const EulerTable& euler = tables.euler();
        if (euler.at(2) != -1) {
            detail = "index-2 Euler number is not -1";
            return;
        }
        const Integer m4 = ipow(Integer(5), 4);
        Integer d8 = Integer(5) + Integer(5) * 125 * euler.at(2);
        mpz_fdiv_r(d8.get_mpz_t(), d8.get_mpz_t(), m4.get_mpz_t());
        Integer d16 = Integer(5) + Integer(3) * 125 * euler.at(2);
        mpz_fdiv_r(d16.get_mpz_t(), d16.get_mpz_t(), m4.get_mpz_t());
        const CheckOutcome o8 = run_congruence(*find_congruence("den8"), Integer(5), tables);
        const CheckOutcome o16 = run_congruence(*find_congruence("den16"), Integer(5), tables);
        if (!o8.pass || o8.lhs != d8.get_str()) {
            detail = "den8 at p=5: got " + o8.lhs + ", want " + d8.get_str();
            return;
        }
        if (!o16.pass || o16.lhs != d16.get_str()) {
            detail = "den16 at p=5: got " + o16.lhs + ", want " + d16.get_str();
            return;
        }
        const TwoSquares ts = two_squares(Integer(13));
        if (ts.x != -3 || ts.y != 2) {
            detail = "two_squares(13) = (" + ts.x.get_str() + "," + ts.y.get_str() + ")";
            return;
        }
        for (const char* id : {"sun_x_8", "sun_x_16"}) {
            const CheckOutcome o = run_congruence(*find_congruence(id), Integer(13), tables);
            if (!o.pass || o.lhs != "3") {
                detail = std::string(id) + " at p=13: got " + o.lhs + ", want 3";
                return;
            }
        }
    });

    criterion(4, "product congruence exhaustive over k for primes 5..61",
              [&](std::string& detail) {
                  const CongruenceSpec* spec = find_congruence("prod_binom");
                  for (const Integer& p : primes_between(5, 61)) {
                      const CheckOutcome o = run_congruence(*spec, p, tables);
                      if (!o.pass || o.instance != "p=" + p.get_str()) {
                          detail = "p=" + p.get_str() + " instance " + o.instance + ": " + o.lhs +
                                   " != " + o.rhs;
                          return;
                      }
                  }
              });

    criterion(5, "sequence cross-checks", [](std::string& detail) {
        const EulerTable table(41);
        const Rational half = make_rational(1, 2);
        for (std::size_t n = 0; n <= 40; ++n) {
            if (Rational(table.at(n)) != ipow(Integer(2), n) * euler_polynomial(n, half, table)) {
                detail = "scaling mismatch at index " + std::to_string(n);
                return;
            }
        }
        for (std::size_t n = 1; n <= 41; n += 2) {
            if (table.at(n) != 0) {
                detail = "odd index " + std::to_string(n) + " is nonzero";
                return;
            }
        }
        if (euler_polynomial(2, make_rational(1, 4), table) != make_rational(-3, 16)) {
            detail = "polynomial value at (2, 1/4) is off";
        }
    });

    criterion(6, "command line: exit codes, determinism, round trips", [&](std::string& detail) {
        const auto out1 = work / "default1.json";
        const auto out2 = work / "default2.json";
        const auto out3 = work / "default3.json";
        const auto csv = work / "default.csv";
        const auto log = work / "cli.log";
        if (run_cli(cli, "verify --out " + out1.string(), log) != 0) {
            detail = "default run did not exit 0; log: " + read_file(log);
            return;
        }
        if (run_cli(cli, "verify --out " + out2.string(), log) != 0) {
            detail = "repeat run did not exit 0";
            return;
        }
        if (run_cli(cli, "verify --jobs 4 --out " + out3.string(), log) != 0) {
            detail = "parallel run did not exit 0";
            return;
        }
        const std::string bytes1 = read_file(out1);
        if (bytes1.empty()) {
            detail = "default report is empty";
            return;
        }
        if (bytes1 != read_file(out2)) {
            detail = "repeated runs differ";
            return;
        }
        if (bytes1 != read_file(out3)) {
            detail = "jobs 1 vs 4 reports differ";
            return;
        }
        const std::vector<CheckOutcome> records = from_json_lines(bytes1);
        if (to_json_lines(records) != bytes1) {
            detail = "JSON round trip is not byte-identical";
            return;
        }
        if (run_cli(cli, "verify --format csv --out " + csv.string(), log) != 0) {
            detail = "csv run did not exit 0";
            return;
        }
        const std::string csv_bytes = read_file(csv);
        const std::vector<CheckOutcome> csv_records = from_csv(csv_bytes);
        if (to_csv(csv_records) != csv_bytes) {
            detail = "CSV round trip is not byte-identical";
            return;
        }
        if (csv_records != records) {
            detail = "CSV and JSON record sets disagree";
            return;
        }
        if (run_cli(cli, "verify --checks selftest_fail --primes 5..7", log) != 1) {
            detail = "perturbed fixture did not exit 1; log: " + read_file(log);
            return;
        }
        if (run_cli(cli, "verify --primes 50..5", log) != 2) {
            detail = "inverted prime range did not exit 2";
            return;
        }
        if (run_cli(cli, "verify --checks nonsense", log) != 2) {
            detail = "unknown check id did not exit 2";
            return;
        }
        if (run_cli(cli, "verify --no-such-flag", log) != 2) {
            detail = "unknown flag did not exit 2";
        }
    });

    std::error_code ec;
    std::filesystem::remove_all(work, ec);

    if (g_failures == 0) {
        std::cout << "all criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " criteria failed" << std::endl;
    return 1;
}
