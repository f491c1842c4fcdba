#include "doctest.h"

#include <fstream>
#include <sstream>

#include "rootpair/cli.hpp"
#include "rootpair/errors.hpp"

using namespace rootpair;

namespace {

using Terms = std::vector<std::pair<int64_t, uint32_t>>;

struct RunResult {
    int code;
    std::string out;
    std::string log;
};

RunResult run_config(const RunConfig& cfg) {
    std::ostringstream out, log;
    const int code = run(cfg, out, log);
    return {code, out.str(), log.str()};
}

RunConfig base(RunConfig::Command cmd, uint64_t p, const std::string& poly) {
    RunConfig cfg;
    cfg.command = cmd;
    cfg.p = p;
    cfg.poly_spec = poly;
    cfg.output_format = RunConfig::Format::csv;
    return cfg;
}

} // namespace

TEST_CASE("parse_poly_terms grammar") {
    CHECK(parse_poly_terms("x^2+1") == Terms{{1, 2}, {1, 0}});
    CHECK(parse_poly_terms("-x+4") == Terms{{-1, 1}, {4, 0}});
    CHECK(parse_poly_terms("3*x^5 - 2x + 7") == Terms{{3, 5}, {-2, 1}, {7, 0}});
    CHECK(parse_poly_terms(" x ^ 2 - x ^ 2 + x ") == Terms{{1, 2}, {-1, 2}, {1, 1}});
    CHECK(parse_poly_terms("+x") == Terms{{1, 1}});
    CHECK(parse_poly_terms("10") == Terms{{10, 0}});
    CHECK(parse_poly_terms("2*x") == Terms{{2, 1}});
    CHECK(parse_poly_terms("x^64") == Terms{{1, 64}});
}

TEST_CASE("parse_poly_terms errors carry positions") {
    auto message_of = [](const std::string& spec) {
        try {
            parse_poly_terms(spec);
        } catch (const usage_error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("").find("position 1") != std::string::npos);
    CHECK(message_of("x^").find("expected an exponent") != std::string::npos);
    CHECK(message_of("x^65").find("degree cap") != std::string::npos);
    CHECK(message_of("4**x").find("expected 'x' after '*'") != std::string::npos);
    CHECK(message_of("x+").find("expected a term") != std::string::npos);
    CHECK(message_of("x 4").find("expected '+' or '-'") != std::string::npos);
    CHECK(message_of("^2").find("expected a coefficient or 'x'")
          != std::string::npos);
    CHECK(message_of("9223372036854775808").find("too large")
          != std::string::npos);
    CHECK_THROWS_AS(parse_poly_terms("x&1"), usage_error);
}

TEST_CASE("parse_poly reduces mod p") {
    const PrimeField f5 = build_field(5);
    CHECK(parse_poly("x+6", f5) == Polynomial({1, 1}));
    CHECK(parse_poly("x^2-x^2+x", f5) == Polynomial({0, 1}));
    CHECK(parse_poly("7x^2+1", f5) == Polynomial({1, 0, 2}));
    CHECK_THROWS_AS(parse_poly("3", f5), usage_error);
    CHECK_THROWS_AS(parse_poly("5x+1", f5), usage_error); // degenerates mod 5
}

TEST_CASE("parse_p_range") {
    CHECK(parse_p_range("3..100") == std::pair<uint64_t, uint64_t>{3, 100});
    CHECK(parse_p_range("17..17") == std::pair<uint64_t, uint64_t>{17, 17});
    CHECK_THROWS_AS(parse_p_range("100..3"), usage_error);
    CHECK_THROWS_AS(parse_p_range("2..10"), usage_error);
    CHECK_THROWS_AS(parse_p_range("3..10000001"), usage_error);
    CHECK_THROWS_AS(parse_p_range("5"), usage_error);
    CHECK_THROWS_AS(parse_p_range("5.."), usage_error);
    CHECK_THROWS_AS(parse_p_range("abc..7"), usage_error);
    CHECK_THROWS_AS(parse_p_range("3..7z"), usage_error);
}

TEST_CASE("count command emits one consistent row") {
    const RunResult r = run_config(base(RunConfig::Command::count, 5, "x+1"));
    CHECK(r.code == 0);
    CHECK(r.out.find("p,alpha,poly,k,r_f,exact,decomposition_total")
          == 0);
    CHECK(r.out.find("5,0,x + 1,1,1,1,1,0.75,") != std::string::npos);
    CHECK(r.out.find(",true\n") != std::string::npos);
}

TEST_CASE("verify command emits the fixed report header") {
    RunConfig cfg = base(RunConfig::Command::verify, 5, "x+1");
    const RunResult r = run_config(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.find("p,alpha,poly,k,r_f,omega,phi,exact,main_term,"
                     "error_bound,theta,holds\n") == 0);
    CHECK(r.out.find("5,0,x + 1,1,1,1,2,1,0.75,2.2360679775,0.111803398875,true\n")
          != std::string::npos);
    // Claims section follows after a blank line.
    CHECK(r.out.find("\n\nlemma,lhs,rhs,slack,holds,secondary,") != std::string::npos);
    CHECK(r.out.find("claim1,") != std::string::npos);
    CHECK(r.out.find("claim2,") != std::string::npos);
    CHECK(r.out.find("claim3,") != std::string::npos);

    cfg.output_format = RunConfig::Format::json;
    const RunResult j = run_config(cfg);
    CHECK(j.code == 0);
    CHECK(j.out.find("\"rows\": [") != std::string::npos);
    CHECK(j.out.find("\"claims\": [") != std::string::npos);
    CHECK(j.out.find("\"exact\": 1") != std::string::npos);
    CHECK(j.out.find("\"holds\": true") != std::string::npos);
}

TEST_CASE("exit codes") {
    // Usage errors: malformed polynomial, composite p, missing p.
    CHECK(run_config(base(RunConfig::Command::count, 5, "x^")).code == 1);
    CHECK(run_config(base(RunConfig::Command::count, 6, "x+1")).code == 1);
    RunConfig no_p = base(RunConfig::Command::count, 5, "x+1");
    no_p.p.reset();
    CHECK(run_config(no_p).code == 1);
    RunConfig no_threads = base(RunConfig::Command::count, 5, "x+1");
    no_threads.parallelism = 0;
    CHECK(run_config(no_threads).code == 1);

    // Hypothesis violations: f not coprime to x, f a perfect power.
    CHECK(run_config(base(RunConfig::Command::count, 5, "x")).code == 2);
    const RunResult sq = run_config(base(RunConfig::Command::verify, 7, "x^2"));
    CHECK(sq.code == 2);
    CHECK(sq.log.find("hypothesis violated") != std::string::npos);
}

TEST_CASE("exists command") {
    const RunResult hit = run_config(base(RunConfig::Command::exists, 5, "x+1"));
    CHECK(hit.code == 0);
    CHECK(hit.out.find("p,poly,exists,xi\n") == 0);
    CHECK(hit.out.find("5,x + 1,true,2\n") != std::string::npos);

    const RunResult miss = run_config(base(RunConfig::Command::exists, 7, "x+1"));
    CHECK(miss.code == 0);
    CHECK(miss.out.find("7,x + 1,false,\n") != std::string::npos);
}

TEST_CASE("weil command walks the character orders") {
    const RunResult r = run_config(base(RunConfig::Command::weil, 7, "x+1"));
    CHECK(r.code == 0);
    CHECK(r.out.find("p,order,chi_exponent,") == 0);
    // Orders 2, 3 and 6, one representative each.
    CHECK(r.out.find("7,2,3,x + 1,") != std::string::npos);
    CHECK(r.out.find("7,3,2,x + 1,") != std::string::npos);
    CHECK(r.out.find("7,6,1,x + 1,") != std::string::npos);

    // A square is skipped for the quadratic character but not the quartic.
    const RunResult skip = run_config(base(RunConfig::Command::weil, 5, "x^2+2x+1"));
    CHECK(skip.code == 0);
    CHECK(skip.out.find("5,4,1,") != std::string::npos);
    CHECK(skip.out.find("5,2,") == std::string::npos);
    CHECK(skip.log.find("skipped character order 2") != std::string::npos);

    // Every order screened out: hypothesis failure.
    const RunResult all_skipped =
        run_config(base(RunConfig::Command::weil, 5, "x^4+4x^3+x^2+4x+1"));
    CHECK(all_skipped.code == 2);
}

TEST_CASE("sweep is deterministic across parallelism") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::sweep;
    cfg.p_range = {3, 200};
    cfg.poly_spec = "x+1";
    cfg.output_format = RunConfig::Format::csv;
    cfg.parallelism = 1;
    const RunResult serial = run_config(cfg);
    cfg.parallelism = 4;
    const RunResult parallel = run_config(cfg);

    CHECK(serial.code == 0);
    CHECK(parallel.code == 0);
    CHECK(serial.out == parallel.out);
    CHECK(serial.log == parallel.log);

    // Primes in [3, 200]: 46 minus p = 2, every one admissible for x + 1.
    size_t rows = 0;
    for (char c : serial.out) {
        rows += c == '\n';
    }
    CHECK(rows == 45 + 1); // header + 45 rows
}

TEST_CASE("sweep skips primes where the instance degenerates") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::sweep;
    cfg.p_range = {3, 30};
    cfg.poly_spec = "x^2+x+1"; // (x+2)^2 mod 3
    cfg.output_format = RunConfig::Format::csv;
    const RunResult r = run_config(cfg);
    CHECK(r.code == 0);
    CHECK(r.log.find("skipped p=3") != std::string::npos);
    CHECK(r.out.find("\n3,") == std::string::npos);
    CHECK(r.out.find("\n5,") != std::string::npos);

    cfg.poly_spec = "5x+1"; // constant mod 5 only
    const RunResult c = run_config(cfg);
    CHECK(c.code == 0);
    CHECK(c.log.find("skipped p=5") != std::string::npos);
    CHECK(c.out.find("\n5,") == std::string::npos);
    CHECK(c.out.find("\n3,") != std::string::npos);
}

TEST_CASE("sweep requires a range") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::sweep;
    cfg.poly_spec = "x+1";
    CHECK(run_config(cfg).code == 1);
}

TEST_CASE("output lands in a file when requested") {
    RunConfig cfg = base(RunConfig::Command::count, 5, "x+1");
    const RunResult direct = run_config(cfg);
    cfg.output_path = "/tmp/rootpair_cli_test_output.csv";
    const RunResult filed = run_config(cfg);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());

    std::ifstream in(*cfg.output_path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
}
