// SPDX-License-Identifier: Apache-2.0
#include "verisum/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include "verisum/report.hpp"
#include "verisum/suite.hpp"

namespace verisum {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

struct Selection {
    std::vector<std::string> identities;
    std::vector<std::string> congruences;
};

Selection select_checks(const RunConfig& cfg) {
    const bool want_identities = cfg.mode != RunConfig::Mode::Congruences;
    const bool want_congruences = cfg.mode != RunConfig::Mode::Identities;
    Selection sel;
    if (cfg.checks.empty()) {
        if (want_identities) {
            for (const IdentitySpec& s : identity_registry()) {
                sel.identities.push_back(s.id);
            }
        }
        if (want_congruences) {
            for (const CongruenceSpec& s : congruence_registry()) {
                if (!s.selftest) {
                    sel.congruences.push_back(s.id);
                }
            }
        }
        return sel;
    }
    for (const std::string& id : cfg.checks) {
        if (find_identity(id) != nullptr) {
            if (want_identities) {
                sel.identities.push_back(id);
            } else {
                std::cerr << "warning: check " << id << " skipped by --mode congruences\n";
            }
        } else if (find_congruence(id) != nullptr) {
            if (want_congruences) {
                sel.congruences.push_back(id);
            } else {
                std::cerr << "warning: check " << id << " skipped by --mode identities\n";
            }
        } else {
            throw UsageError("unknown check id: " + id);
        }
    }
    return sel;
}

bool all_digits(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

// Appends the signed alias in (-m/2, m/2] when it differs from the canonical
// representative; the report files themselves stay canonical.
std::string with_alias(const std::string& value, const Integer& modulus) {
    if (!all_digits(value)) {
        return value;
    }
    const Integer v(value);
    if (v * 2 > modulus) {
        return value + " (" + Integer(v - modulus).get_str() + ")";
    }
    return value;
}

void print_failure(const CheckOutcome& o) {
    std::string lhs = o.lhs;
    std::string rhs = o.rhs;
    const std::string::size_type caret = o.modulus.find('^');
    if (o.modulus != "exact" && caret != std::string::npos) {
        try {
            const Integer base(o.modulus.substr(0, caret));
            const unsigned long exp = std::stoul(o.modulus.substr(caret + 1));
            const Integer m = ipow(base, exp);
            lhs = with_alias(lhs, m);
            rhs = with_alias(rhs, m);
        } catch (const std::exception&) {
            // leave the raw strings; the record itself is still reported
        }
    }
    std::cerr << "FAIL " << o.check << " " << o.instance << " [" << o.modulus << "]: lhs " << lhs
              << " != rhs " << rhs << "\n";
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"exact verification of binomial-sum identities and prime-power congruences"};
    app.name("verisum");
    app.require_subcommand(1);
    CLI::App* verify = app.add_subcommand("verify", "evaluate checks and emit a report");

    std::string mode = "all";
    std::string primes = "5..199";
    std::string checks = "all";
    std::string format = "json";
    std::string out_path;
    unsigned long max_n = 60;
    int jobs = 1;

    verify->add_option("--mode", mode, "which suites to run")
        ->check(CLI::IsMember({"identities", "congruences", "all"}));
    verify->add_option("--primes", primes, "prime range LO..HI (LO >= 5)");
    verify->add_option("--max-n", max_n, "bound for identity families");
    verify->add_option("--checks", checks, "comma-separated check ids, or \"all\"");
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "report file (default: stdout)");
    verify->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.push_back("verisum");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = app.got_subcommand(verify) ? verify : &app;
        throw HelpRequested(target->help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig cfg;
    if (mode == "identities") {
        cfg.mode = RunConfig::Mode::Identities;
    } else if (mode == "congruences") {
        cfg.mode = RunConfig::Mode::Congruences;
    } else {
        cfg.mode = RunConfig::Mode::All;
    }
    cfg.format = (format == "csv") ? RunConfig::Format::Csv : RunConfig::Format::Json;
    cfg.out_path = out_path;
    cfg.max_n = static_cast<std::size_t>(max_n);
    cfg.jobs = jobs;

    const std::string::size_type dots = primes.find("..");
    if (dots == std::string::npos) {
        throw UsageError("--primes expects LO..HI, got \"" + primes + "\"");
    }
    try {
        cfg.min_prime = Integer(primes.substr(0, dots));
        cfg.max_prime = Integer(primes.substr(dots + 2));
    } catch (const std::invalid_argument&) {
        throw UsageError("--primes: \"" + primes + "\" is not a pair of integers");
    }
    if (cfg.min_prime < 5) {
        throw UsageError("--primes: lower bound must be at least 5");
    }
    if (cfg.min_prime > cfg.max_prime) {
        throw UsageError("--primes: empty range, lower bound exceeds upper bound");
    }

    if (checks != "all") {
        cfg.checks = split_commas(checks);
        for (const std::string& id : cfg.checks) {
            if (find_identity(id) == nullptr && find_congruence(id) == nullptr) {
                throw UsageError("unknown check id: " + id);
            }
        }
    }
    return cfg;
}

int execute(const RunConfig& cfg) {
    const Selection sel = select_checks(cfg);
    std::vector<CheckOutcome> records;

    if (!sel.identities.empty()) {
        std::vector<CheckOutcome> got = run_identity_suite(sel.identities, cfg.max_n, cfg.jobs);
        records.insert(records.end(), std::make_move_iterator(got.begin()),
                       std::make_move_iterator(got.end()));
    }
    if (!sel.congruences.empty()) {
        const std::vector<Integer> primes = primes_between(cfg.min_prime, cfg.max_prime);
        std::size_t congruence_records = 0;
        if (!primes.empty()) {
            const SharedTables tables = SharedTables::build(primes.back());
            std::vector<CheckOutcome> got = run_suite(primes, sel.congruences, tables, cfg.jobs);
            congruence_records = got.size();
            records.insert(records.end(), std::make_move_iterator(got.begin()),
                           std::make_move_iterator(got.end()));
        }
        if (congruence_records == 0) {
            std::cerr << "warning: no admissible primes in " << cfg.min_prime.get_str() << ".."
                      << cfg.max_prime.get_str() << " for the selected congruence checks\n";
        }
    }

    // Identity and congruence blocks each come out ordered; a stable sort on
    // the check id alone yields the global (check, instance) order.
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckOutcome& a, const CheckOutcome& b) { return a.check < b.check; });

    const std::string text =
        cfg.format == RunConfig::Format::Json ? to_json_lines(records) : to_csv(records);
    if (cfg.out_path.empty()) {
        std::cout << text << std::flush;
        if (!std::cout) {
            std::cerr << "error: writing the report to stdout failed\n";
            return 2;
        }
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.out_path << " for writing\n";
            return 2;
        }
        file << text;
        file.flush();
        if (!file) {
            std::cerr << "error: writing " << cfg.out_path << " failed\n";
            return 2;
        }
    }

    std::size_t failed = 0;
    constexpr std::size_t kMaxFailureLines = 50;
    for (const CheckOutcome& o : records) {
        if (!o.pass) {
            ++failed;
            if (failed <= kMaxFailureLines) {
                print_failure(o);
            }
        }
    }
    if (failed > kMaxFailureLines) {
        std::cerr << "... " << (failed - kMaxFailureLines) << " further failures omitted\n";
    }
    std::cerr << records.size() << " records: " << (records.size() - failed) << " passed, "
              << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

int cli_main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const RunConfig cfg = parse_args(args);
        return execute(cfg);
    } catch (const HelpRequested& h) {
        std::cout << h.what();
        return 0;
    } catch (const UsageError& u) {
        std::cerr << "error: " << u.what() << "\n";
        std::cerr << "usage: verisum verify [--mode identities|congruences|all] [--primes LO..HI]"
                     " [--max-n N] [--checks ids|all] [--format json|csv] [--out PATH] [--jobs N]\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace verisum
