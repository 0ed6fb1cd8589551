#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "hsoq/catalog.hpp"
#include "hsoq/cli.hpp"
#include "hsoq/json_io.hpp"
#include "test_support.hpp"

using namespace hsoq;
using hsoq::test::kind_of;

namespace {

using ParamSet = std::set<std::tuple<uint64_t, uint64_t, uint64_t, uint64_t>>;

ParamSet param_set(const std::vector<DerivationRecord>& records) {
    ParamSet out;
    for (const auto& r : records) out.insert({r.params.q, r.params.N, r.params.K, r.params.D});
    return out;
}

ParamSet family_fixture(uint64_t q, uint64_t N, uint64_t K_base, uint64_t j_from, uint64_t j_to,
                        uint64_t skip_j = 0) {
    // rows [[N, K_base - 4j, >= 2 + j]]_q
    ParamSet out;
    for (uint64_t j = j_from; j <= j_to; ++j) {
        if (skip_j != 0 && j == skip_j) continue;
        out.insert({q, N, K_base - 4 * j, 2 + j});
    }
    return out;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

std::string temp_file(const std::string& name, const std::string& contents) {
    std::string path = "cli_test_" + name;
    std::ofstream f(path, std::ios::binary);
    f << contents;
    return path;
}

}  // namespace

TEST_CASE("table2: the seven F_4 rows of length 152") {
    ParamSet expected = {
        {4, 152, 148, 2}, {4, 152, 144, 3}, {4, 152, 140, 4}, {4, 152, 136, 5},
        {4, 152, 132, 6}, {4, 152, 128, 7}, {4, 152, 124, 8},
    };
    CHECK(param_set(generate_table("table2")) == expected);
}

TEST_CASE("table3: the eight F_5 rows of length 468") {
    ParamSet expected = {
        {5, 468, 452, 5}, {5, 468, 448, 6},  {5, 468, 444, 7},  {5, 468, 440, 8},
        {5, 468, 436, 9}, {5, 468, 432, 10}, {5, 468, 428, 11}, {5, 468, 424, 12},
    };
    CHECK(param_set(generate_table("table3")) == expected);
}

TEST_CASE("lengthened F_4 family of length 153") {
    ParamSet expected = {{4, 153, 140, 4}, {4, 153, 136, 5}, {4, 153, 132, 6}, {4, 153, 128, 7}};
    CHECK(param_set(generate_table("f4-153")) == expected);
}

TEST_CASE("F_4 family of length 765") {
    // [[765, 765 - 6j, >= 1 + j]] for 18 <= j <= 31
    ParamSet expected;
    for (uint64_t j = 18; j <= 31; ++j) expected.insert({4, 765, 765 - 6 * j, 1 + j});
    CHECK(param_set(generate_table("f4-765")) == expected);
}

TEST_CASE("F_7, F_8 and F_9 families") {
    CHECK(param_set(generate_table("f7-392")) == family_fixture(7, 392, 388, 3, 23));
    CHECK(param_set(generate_table("f8-566")) == family_fixture(8, 566, 562, 5, 27));
    CHECK(param_set(generate_table("f8-567")) == family_fixture(8, 567, 562, 5, 27));
    CHECK(param_set(generate_table("f9-400")) == family_fixture(9, 400, 396, 3, 32));
    CHECK(param_set(generate_table("f9-800")) == family_fixture(9, 800, 796, 3, 39));
    CHECK(param_set(generate_table("f9-810")) == family_fixture(9, 810, 806, 3, 39));
    CHECK(param_set(generate_table("f9-324")) == family_fixture(9, 324, 320, 7, 39, 10));
}

TEST_CASE("f8-567 is the row-for-row lengthened image of f8-566") {
    auto base = generate_table("f8-566");
    auto longer = generate_table("f8-567");
    REQUIRE(base.size() == longer.size());
    for (size_t i = 0; i < base.size(); ++i) {
        CHECK(longer[i].params.N == base[i].params.N + 1);
        CHECK(longer[i].params.K == base[i].params.K);
        CHECK(longer[i].params.D == base[i].params.D);
    }
}

TEST_CASE("table regeneration is pure") {
    for (const char* name : {"table1", "table2", "f9-324"}) {
        RuleColumn style = std::string(name) == "table1" ? RuleColumn::Markers : RuleColumn::Names;
        CHECK(to_csv(generate_table(name), style) == to_csv(generate_table(name), style));
    }
    CHECK(kind_of([] { generate_table("table9"); }) == ErrorKind::UnknownTable);
}

TEST_CASE("family rejects out-of-range dimensions") {
    CHECK(kind_of([] { family(4, 2, 76, 1, 8); }) == ErrorKind::KTooLarge);
    CHECK(kind_of([] { family(4, 2, 76, 3, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("catalog CSV round-trip and malformed input") {
    auto records = generate_table("table2");
    std::string csv = to_csv(records);
    auto entries = parse_catalog_csv(csv);
    REQUIRE(entries.size() == records.size());
    for (size_t i = 0; i < entries.size(); ++i) CHECK(entries[i].params == records[i].params);

    CHECK(parse_catalog_csv("").empty());

    try {
        parse_catalog_csv("q,N,K,D\n4,152,x,2\n");
        FAIL("expected MalformedCsv");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedCsv);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK(kind_of([] { parse_catalog_csv("a,b\n"); }) == ErrorKind::MalformedCsv);
    CHECK(kind_of([] { parse_baseline_csv("q,N,K,D,citation\n4,152\n"); }) ==
          ErrorKind::MalformedCsv);
}

TEST_CASE("comparison verdicts") {
    auto ours = parse_catalog_csv(
        "q,N,K,D,rule,chain\n"
        "4,765,657,19,extension,theorem\n"
        "7,392,368,7,extension,theorem\n"
        "4,152,124,8,extension,theorem\n"
        "4,153,140,4,lengthen,theorem\n");
    auto baseline = parse_baseline_csv(
        "q,N,K,D,citation\n"
        "4,765,643,19,tableA\n"
        "7,392,364,7,tableB\n"
        "4,152,124,8,tableC\n"
        "4,152,130,8,tableD\n"
        "2,100,80,5,tableE\n");
    auto verdicts = compare(ours, baseline);
    REQUIRE(verdicts.size() == 5);
    CHECK(verdicts[0].verdict == ComparisonVerdict::Kind::Better);
    CHECK(verdicts[1].verdict == ComparisonVerdict::Kind::Better);
    CHECK(verdicts[2].verdict == ComparisonVerdict::Kind::Equal);
    CHECK(verdicts[3].verdict == ComparisonVerdict::Kind::Worse);
    CHECK(verdicts[4].verdict == ComparisonVerdict::Kind::Incomparable);
    CHECK_FALSE(verdicts[4].ours.has_value());
}

TEST_CASE("linear code JSON uses the flat row-major layout") {
    Field f9 = Field::make(3, 2, true);
    LinearCode c(f9, 4, {1, 0, 1, 1, 0, 1, 1, 2});
    nlohmann::json j = code_to_json(c);
    CHECK(j["generator"] == nlohmann::json({1, 0, 1, 1, 0, 1, 1, 2}));
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    LinearCode back = code_from_json(j);
    CHECK(back.generator() == c.generator());
    CHECK(back.field() == c.field());
}

TEST_CASE("cli: kmax output and range errors") {
    std::string out, err;
    CHECK(run({"kmax", "--q", "2", "--m", "4", "--n", "63"}, &out) == 0);
    CHECK(out == "e=16 n=63 K=7 case=overflow witness={16,16,16,15}\n");

    CHECK(run({"kmax", "--q", "9", "--m", "1", "--n", "55"}, &out) == 0);
    CHECK(out.find("K=3") != std::string::npos);

    CHECK(run({"kmax", "--q", "2", "--m", "1", "--n", "4"}, &out, &err) == 2);
    CHECK(err.find("e must exceed 2") != std::string::npos);

    CHECK(run({"--json", "kmax", "--q", "2", "--m", "4", "--n", "63"}, &out) == 0);
    CHECK(out.find("\"K\": 7") != std::string::npos);

    // global flags also parse after the subcommand
    CHECK(run({"kmax", "--q", "2", "--m", "4", "--n", "63", "--json"}, &out) == 0);
    CHECK(out.find("\"K\": 7") != std::string::npos);
}

TEST_CASE("cli: family reproduces table 2 and table 3") {
    std::string out;
    CHECK(run({"family", "--q", "4", "--m", "2", "--n", "76", "--k", "1..7"}, &out) == 0);
    CHECK(out == to_csv(generate_table("table2")));

    CHECK(run({"family", "--q", "5", "--m", "2", "--n", "234", "--k", "4..11"}, &out) == 0);
    CHECK(out == to_csv(generate_table("table3")));

    CHECK(run({"family", "--q", "9", "--m", "2", "--n", "162", "--k", "8..40", "--skip", "11"},
              &out) == 0);
    CHECK(out == to_csv(generate_table("f9-324")));
}

TEST_CASE("cli: derive guards exit with code 2") {
    std::string out, err;
    CHECK(run({"derive", "--q", "2", "--m", "4", "--n", "63", "--k", "9"}, &out, &err) == 2);
    CHECK(err.find("KTooLarge") != std::string::npos);
}

TEST_CASE("cli: table 1 markers") {
    std::string out;
    CHECK(run({"table", "--name", "table1"}, &out) == 0);
    size_t starred = 0;
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line))
        if (line.find(",*,") != std::string::npos) ++starred;
    CHECK(starred == 8);

    std::string err;
    CHECK(run({"table", "--name", "nope"}, &out, &err) == 2);
    CHECK(err.find("UnknownTable") != std::string::npos);
}

TEST_CASE("cli: closure from a seeds file") {
    std::string seeds = temp_file("seeds.csv",
                                  "q,N,K,D\n"
                                  "2,252,204,7\n");
    std::string out;
    CHECK(run({"closure", "--seeds", seeds, "--n-max", "253", "--k-min", "203", "--out",
               "cli_test_closure.csv"}) == 0);
    std::ifstream result("cli_test_closure.csv");
    std::stringstream ss;
    ss << result.rdbuf();
    // (252,204), (253,204), (252,203), (253,203): sorted N desc, K desc
    CHECK(ss.str() ==
          "q,N,K,D,rule,chain\n"
          "2,253,204,7,L,seed [[252,204,>=7]]_2;lengthen\n"
          "2,253,203,7,L|S,seed [[252,204,>=7]]_2;lengthen;subcode\n"
          "2,252,204,7,*,seed [[252,204,>=7]]_2\n"
          "2,252,203,7,S,seed [[252,204,>=7]]_2;subcode\n");

    std::string empty = temp_file("empty.csv", "");
    CHECK(run({"closure", "--seeds", empty, "--n-max", "10", "--k-min", "0"}, &out) == 0);
    CHECK(out == "q,N,K,D,rule,chain\n");

    std::remove(seeds.c_str());
    std::remove(empty.c_str());
    std::remove("cli_test_closure.csv");
}

TEST_CASE("cli: construct, verify and tamper round-trip") {
    std::string out, err;
    CHECK(run({"construct", "--q", "4", "--m", "1", "--n", "8", "--k", "2", "--seed", "1",
               "--out", "cli_test_cert.json"}) == 0);
    CHECK(run({"verify", "--cert", "cli_test_cert.json"}, &out) == 0);
    CHECK(out.find("ok:") != std::string::npos);

    // perturb one generator entry to a value of a different norm, keeping
    // the file well-formed but breaking row-0 self-orthogonality
    std::ifstream in("cli_test_cert.json");
    nlohmann::json j = nlohmann::json::parse(in);
    Certificate cert = certificate_from_json(j);
    const Field& f = cert.field();
    uint64_t norm_exp = f.conj_exponent() + 1;
    uint32_t v0 = cert.code.at(0, 0);
    for (uint32_t cand = 1; cand < f.order(); ++cand) {
        if (f.pow(cand, norm_exp) != f.pow(v0, norm_exp)) {
            j["generator"][0][0] = cand;
            break;
        }
    }
    temp_file("tampered.json", j.dump(2));

    int rc = run({"verify", "--cert", "cli_test_tampered.json"}, &out, &err);
    CHECK(rc == 1);
    CHECK(out.find("FAILED") != std::string::npos);

    CHECK(run({"construct", "--q", "4", "--m", "1", "--n", "6", "--k", "2"}, &out, &err) == 2);
    CHECK(err.find("KTooLarge") != std::string::npos);

    CHECK(run({"verify", "--cert", "no_such_file.json"}, &out, &err) == 2);

    std::remove("cli_test_cert.json");
    std::remove("cli_test_tampered.json");
}

TEST_CASE("cli: compare emits verdicts") {
    std::string ours = temp_file("ours.csv", to_csv(generate_table("f4-765")));
    std::string baseline = temp_file("baseline.csv",
                                     "q,N,K,D,citation\n"
                                     "4,765,643,19,litA\n"
                                     "4,765,651,20,litA\n");
    std::string out;
    CHECK(run({"compare", "--ours", ours, "--baseline", baseline}, &out) == 0);
    CHECK(out ==
          "q,N,K_baseline,D_baseline,K_ours,D_ours,verdict,citation\n"
          "4,765,643,19,657,19,better,litA\n"
          "4,765,651,20,651,20,equal,litA\n");
    std::remove(ours.c_str());
    std::remove(baseline.c_str());
}
