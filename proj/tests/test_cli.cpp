#include <doctest.h>

#include <sstream>

#include "skewcm/cli.hpp"
#include "skewcm/io.hpp"

using skewcm::io::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = skewcm::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string kExampleSigns = "4\n1 1 -1 1\n1 1 1 1\n-1 1 1 -1\n1 1 -1 1\n";

} // namespace

TEST_CASE("classify the worked example") {
    const auto r = run({"classify", "--inline", kExampleSigns, "--format", "signs-text"});
    REQUIRE(r.code == 0);
    const json j = r.parsed();
    CHECK(j.at("case") == "gamma_power");
    CHECK(j.at("r") == 1);
    CHECK(j.at("factor_count") == "2");
    CHECK(j.at("category") == "D^b(mod Gamma^2)");
    CHECK(j.at("cm_type") == "countably_infinite");
    CHECK(j.at("isolated_singularity") == false);

    // Emitted reports re-parse and re-validate.
    CHECK_NOTHROW((void)skewcm::io::parse_classification_json(j));
}

TEST_CASE("classify commutative inputs") {
    const auto even = run({"classify", "--inline", "4\n1 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n"});
    REQUIRE(even.code == 0);
    CHECK(even.parsed().at("case") == "lambda_power");
    CHECK(even.parsed().at("r") == 1);
    CHECK(even.parsed().at("factor_count") == "1");

    const auto odd = run({"classify", "--variant", "a1", "--inline", "3\n1 1 1\n1 1 1\n1 1 1\n"});
    REQUIRE(odd.code == 0);
    CHECK(odd.parsed().at("case") == "semisimple_power");
    CHECK(odd.parsed().at("r") == 0);
    CHECK(odd.parsed().at("factor_count") == "1");
    CHECK(odd.parsed().at("cm_type") == "finite");
    CHECK(odd.parsed().at("cm_count") == "1");
    CHECK(odd.parsed().at("isolated_singularity") == true);
}

TEST_CASE("invalid input exits 2 with a named diagnostic") {
    const auto r = run({"classify", "--inline", "2\n1 -1\n1 1\n"});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotSymmetric at (1,2)") != std::string::npos);

    const auto empty = run({"classify"});
    CHECK(empty.code == 2);

    const auto small = run({"classify", "--inline", "1\n1\n"});
    CHECK(small.code == 2); // a-infinity needs n >= 2

    const auto badflag = run({"classify", "--nonsense"});
    CHECK(badflag.code == 2);
}

TEST_CASE("reduce emits the trace") {
    const auto r = run({"reduce", "--inline", kExampleSigns, "--replay"});
    REQUIRE(r.code == 0);
    const json j = r.parsed();
    CHECK(j.at("alpha") == 1);
    CHECK(j.at("beta") == 2);
    CHECK(j.at("n_status") == "isolated_edge_endpoint");
    REQUIRE(j.at("trace").size() == 3);
    CHECK(j.at("trace")[0].at("op") == "switch");
    CHECK(j.at("trace")[0].at("v") == 2);
    CHECK(j.at("trace")[2].at("op") == "rswitch");
    CHECK(j.at("trace")[2].at("v") == 3);
    CHECK(j.at("trace")[2].at("w") == 2);

    const auto empty5 = run({"reduce", "--inline",
                             "5\n1 -1 -1 -1 -1\n-1 1 -1 -1 -1\n-1 -1 1 -1 -1\n-1 -1 -1 1 -1\n-1 -1 -1 -1 1\n"});
    REQUIRE(empty5.code == 0);
    CHECK(empty5.parsed().at("alpha") == 0);
    CHECK(empty5.parsed().at("beta") == 5);
    CHECK(empty5.parsed().at("trace").empty());

    const auto k2 = run({"reduce", "--inline", "2\n1 1\n1 1\n"});
    REQUIRE(k2.code == 0);
    CHECK(k2.parsed().at("alpha") == 0);
    CHECK(k2.parsed().at("beta") == 2);
    CHECK(k2.parsed().at("trace").size() == 1);

    CHECK(run({"reduce", "--variant", "a1", "--inline", kExampleSigns}).code == 2);
}

TEST_CASE("oracle command") {
    const auto r = run({"oracle", "--inline", kExampleSigns});
    REQUIRE(r.code == 0);
    const json j = r.parsed();
    CHECK(j.at("dim") == 8);
    CHECK(j.at("radical_dim") == 4);
    CHECK(j.at("block_count") == 4);
    CHECK(j.at("semisimple") == false);
    CHECK(j.at("consistent") == true);
}

TEST_CASE("verify single input and sweeps") {
    CHECK(run({"verify", "--inline", kExampleSigns}).code == 0);

    const auto ex4 = run({"verify", "--n", "4", "--exhaustive"});
    REQUIRE(ex4.code == 0);
    CHECK(ex4.parsed().at("total") == 64);
    CHECK(ex4.parsed().at("passed") == 64);
    CHECK(ex4.parsed().at("failed") == 0);

    const auto sampled = run({"verify", "--n", "10", "--samples", "50", "--seed", "1"});
    REQUIRE(sampled.code == 0);
    CHECK(sampled.parsed().at("passed") == 50);

    CHECK(run({"verify", "--n", "9", "--exhaustive"}).code == 2);
    CHECK(run({"verify"}).code == 2);
}

TEST_CASE("enumerate") {
    const auto n2 = run({"enumerate", "--n", "2", "--exhaustive"});
    REQUIRE(n2.code == 0);
    const json r2 = n2.parsed().at("results")[0];
    CHECK(r2.at("total") == 2);
    CHECK(r2.at("cases").at("lambda_power") == 2);
    CHECK(r2.at("r_histogram").at("1") == 2);

    const auto n3 = n2.code == 0 ? run({"enumerate", "--n", "3", "--exhaustive", "--verify"}) : n2;
    REQUIRE(n3.code == 0);
    const json r3 = n3.parsed().at("results")[0];
    CHECK(r3.at("total") == 8);
    CHECK(r3.at("passed") == 8);

    const auto range = run({"enumerate", "--n", "2:4", "--exhaustive"});
    REQUIRE(range.code == 0);
    CHECK(range.parsed().at("results").size() == 3);
    CHECK(range.parsed().at("results")[2].at("cases").at("gamma_power") >= 1);

    CHECK(run({"enumerate", "--n", "9", "--exhaustive"}).code == 2);
    CHECK(run({"enumerate", "--n", "9", "--samples", "10", "--seed", "7"}).code == 0);
}

TEST_CASE("identical configuration gives byte-identical output") {
    const std::vector<std::string> args = {"verify", "--n", "8", "--samples", "40", "--seed", "9"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const auto w2 = run({"verify", "--n", "8", "--samples", "40", "--seed", "9", "--workers", "2"});
    const auto w1 = run({"verify", "--n", "8", "--samples", "40", "--seed", "9", "--workers", "1"});
    CHECK(w2.out == a.out);
    CHECK(w1.out == a.out);
}

TEST_CASE("permutation fixing the last variable keeps the verdict") {
    const auto base = run({"classify", "--inline", kExampleSigns});
    const auto perm = run({"classify", "--inline", kExampleSigns, "--permutation", "2,3,1,4"});
    REQUIRE(base.code == 0);
    REQUIRE(perm.code == 0);
    CHECK(base.parsed().at("case") == perm.parsed().at("case"));
    CHECK(base.parsed().at("r") == perm.parsed().at("r"));

    CHECK(run({"classify", "--inline", kExampleSigns, "--permutation", "1,1,2,3"}).code == 2);
}

TEST_CASE("graph formats and text output") {
    const auto gt = run({"classify", "--inline", "4\n1 2\n1 4\n2 3\n2 4\n", "--format", "graph-text"});
    REQUIRE(gt.code == 0);
    CHECK(gt.parsed().at("case") == "gamma_power");

    const auto gj = run({"classify", "--inline", R"({"n":4,"edges":[[1,2],[1,4],[2,3],[2,4]]})",
                         "--format", "graph-json"});
    REQUIRE(gj.code == 0);
    CHECK(gj.parsed().at("case") == "gamma_power");

    const auto sj = run({"classify", "--inline",
                         R"({"n":2,"entries":[[1,-1],[-1,1]]})", "--format", "signs-json"});
    REQUIRE(sj.code == 0);
    CHECK(sj.parsed().at("case") == "lambda_power");

    const auto text = run({"classify", "--inline", kExampleSigns, "--output", "text"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("gamma_power") != std::string::npos);

    const auto uni = run({"classify", "--inline", kExampleSigns, "--unicode"});
    REQUIRE(uni.code == 0);
    CHECK(uni.parsed().at("category") == "D^b(mod Γ^2)");
}

TEST_CASE("help exits zero") {
    CHECK(run({"--help"}).code == 0);
}
