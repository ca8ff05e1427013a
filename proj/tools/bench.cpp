// SPDX-License-Identifier: Apache-2.0
// Times the serial reference lane against the parallel lane on the two
// workload shapes the engine runs: congruence checks over a prime range and
// identity families up to a bound. Outcome lists must match byte for byte.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "verisum/report.hpp"
#include "verisum/suite.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Options {
    verisum::Integer min_prime{5};
    verisum::Integer max_prime{199};
    std::size_t max_n = 60;
    int jobs = 4;
    int repeat = 3;
};

[[noreturn]] void usage(int code) {
    std::cerr << "usage: verisum-bench [--primes LO..HI] [--max-n N] [--jobs N] [--repeat R]\n";
    std::exit(code);
}

Options parse(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        const auto value = [&]() -> std::string {
            if (i + 1 >= argc) {
                usage(2);
            }
            return argv[++i];
        };
        if (arg == "--primes") {
            const std::string range = value();
            const auto dots = range.find("..");
            if (dots == std::string::npos) {
                usage(2);
            }
            opt.min_prime = verisum::Integer(range.substr(0, dots));
            opt.max_prime = verisum::Integer(range.substr(dots + 2));
        } else if (arg == "--max-n") {
            opt.max_n = std::stoul(value());
        } else if (arg == "--jobs") {
            opt.jobs = std::stoi(value());
        } else if (arg == "--repeat") {
            opt.repeat = std::stoi(value());
        } else if (arg == "--help") {
            usage(0);
        } else {
            usage(2);
        }
    }
    if (opt.jobs < 1 || opt.repeat < 1) {
        usage(2);
    }
    return opt;
}

template <typename Run>
double best_of(int repeat, Run run) {
    double best = -1.0;
    for (int r = 0; r < repeat; ++r) {
        const auto start = Clock::now();
        run();
        const double elapsed = seconds_since(start);
        if (best < 0.0 || elapsed < best) {
            best = elapsed;
        }
    }
    return best;
}

void report_lane(const std::string& name, double serial, double parallel, int jobs) {
    std::cout << name << ": serial " << serial << " s, " << jobs << " jobs " << parallel
              << " s, speedup " << (parallel > 0.0 ? serial / parallel : 0.0) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const Options opt = parse(argc, argv);

    std::vector<std::string> congruence_ids;
    for (const verisum::CongruenceSpec& s : verisum::congruence_registry()) {
        if (!s.selftest) {
            congruence_ids.push_back(s.id);
        }
    }
    std::vector<std::string> identity_ids;
    for (const verisum::IdentitySpec& s : verisum::identity_registry()) {
        identity_ids.push_back(s.id);
    }

    const std::vector<verisum::Integer> primes =
        verisum::primes_between(opt.min_prime, opt.max_prime);
    if (primes.empty()) {
        std::cerr << "no primes in range\n";
        return 2;
    }
    const verisum::SharedTables tables = verisum::SharedTables::build(primes.back());

    std::vector<verisum::CheckOutcome> serial_out;
    std::vector<verisum::CheckOutcome> parallel_out;

    const double congr_serial = best_of(opt.repeat, [&] {
        serial_out = verisum::run_suite(primes, congruence_ids, tables, 1);
    });
    const double congr_parallel = best_of(opt.repeat, [&] {
        parallel_out = verisum::run_suite(primes, congruence_ids, tables, opt.jobs);
    });
    if (verisum::to_json_lines(serial_out) != verisum::to_json_lines(parallel_out)) {
        std::cerr << "congruence lanes disagree\n";
        return 1;
    }

    const double ident_serial = best_of(opt.repeat, [&] {
        serial_out = verisum::run_identity_suite(identity_ids, opt.max_n, 1);
    });
    const double ident_parallel = best_of(opt.repeat, [&] {
        parallel_out = verisum::run_identity_suite(identity_ids, opt.max_n, opt.jobs);
    });
    if (verisum::to_json_lines(serial_out) != verisum::to_json_lines(parallel_out)) {
        std::cerr << "identity lanes disagree\n";
        return 1;
    }

    std::cout << "primes " << opt.min_prime.get_str() << ".." << opt.max_prime.get_str()
              << ", max-n " << opt.max_n << ", best of " << opt.repeat << ", "
              << std::thread::hardware_concurrency() << " hardware thread(s)\n";
    report_lane("congruences", congr_serial, congr_parallel, opt.jobs);
    report_lane("identities ", ident_serial, ident_parallel, opt.jobs);
    return 0;
}
