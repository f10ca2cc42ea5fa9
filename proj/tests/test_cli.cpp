#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <sstream>

#include "cli.hpp"
#include "test_util.hpp"

using montdiv::BigUint;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = montdiv::cli::run(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("isdiv exit codes and output") {
    const Result miss = run({"isdiv", "--x", "2^977-1", "--q", "16357897499336320049"});
    CHECK(miss.status == 1);
    CHECK(miss.out == "false\n");

    const Result hit = run({"isdiv", "--x", "2^4-1", "--q", "5"});
    CHECK(hit.status == 0);
    CHECK(hit.out == "true\n");
}

TEST_CASE("divmod prints remainder, quotient and the per-word rows") {
    const Result r = run({"divmod", "--x", "2^977-1", "--q", "16357897499336320049", "--fold", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("remainder 8623243291871090711\n") != std::string::npos);
    CHECK(r.out.find("y[0] 6364180061714936936\n") != std::string::npos);
    CHECK(r.out.find("y[14] 147809\n") != std::string::npos);
    CHECK(r.out.find("y[15] 0\n") != std::string::npos);

    // Folding changes timing only, never the numbers.
    const Result serial = run({"divmod", "--x", "2^977-1", "--q", "16357897499336320049"});
    const Result f4 = run({"divmod", "--x", "2^977-1", "--q", "16357897499336320049", "--fold", "4"});
    CHECK(serial.out == r.out);
    CHECK(serial.out == f4.out);
}

TEST_CASE("rem with decimal and hex rendering") {
    const Result dec = run({"rem", "--x", "100", "--q", "12"});
    CHECK(dec.status == 0);
    CHECK(dec.out == "remainder 4\n");
    const Result hex = run({"rem", "--x", "255", "--q", "16", "--hex"});
    CHECK(hex.out == "remainder 0xf\n");
}

TEST_CASE("pow2 in both directions") {
    const Result inv = run({"pow2", "--p", "977", "--q", "16357897499336320049", "--inverse"});
    CHECK(inv.status == 0);
    CHECK(inv.out == "7143819210136784550\n");
    const Result pos = run({"pow2", "--p", "977", "--q", "16357897499336320049"});
    CHECK(pos.out == "8623243291871090712\n");
}

TEST_CASE("mersenne and fermat predicates") {
    CHECK(run({"mersenne", "--p", "2147483647", "--q", "178021379228511215367151"}).status == 0);
    CHECK(run({"mersenne", "--p", "11", "--q", "13"}).status == 1);
    CHECK(run({"fermat", "--f", "5", "--q", "641"}).status == 0);
    CHECK(run({"fermat", "--f", "5", "--q", "257"}).status == 1);
}

TEST_CASE("census output") {
    const Result r = run({"census", "--min", "6", "--max", "7"});
    CHECK(r.status == 0);
    CHECK(r.out.find("pairs 2\n") != std::string::npos);
    CHECK(r.out.find("mean 1.0000000000\n") != std::string::npos);
    CHECK(r.out.find("max 1\n") != std::string::npos);
}

TEST_CASE("bench emits the CSV schema") {
    const Result r = run({"bench", "--words", "2000", "--trials", "1", "--seed", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("op,fold,words,trials,ns_per_word,words_per_sec\n", 0) == 0);
    CHECK(r.out.find("remainder,4,2000,1,") != std::string::npos);
    CHECK(r.out.find("divmod,2,2000,1,") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run({"isdiv", "--x", "10"}).status == 2);          // missing --q
    CHECK(run({"nosuchcommand"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"rem", "--x", "bogus!", "--q", "3"}).status == 2);
    CHECK(run({"rem", "--x", "10", "--q", "0"}).status == 2); // divisor < 2
}

TEST_CASE("parse_biguint reads limb files via @path") {
    const BigUint v = tu::bu("2^200-12345");
    const std::string path = "limbs_test_tmp.bin";
    v.write_limbs_file(path);
    CHECK(montdiv::cli::parse_biguint("@" + path) == v);
    std::remove(path.c_str());
    CHECK_THROWS_AS(montdiv::cli::parse_biguint("@no_such_file.bin"), std::invalid_argument);
    CHECK(montdiv::cli::parse_biguint("0x10").to_u64() == 16);
}
