#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hsoq/constructor.hpp"
#include "hsoq/json_io.hpp"
#include "hsoq/kmax.hpp"
#include "test_support.hpp"

using namespace hsoq;
using hsoq::test::kind_of;

TEST_CASE("construct produces verifiable witnesses") {
    Certificate c1 = construct(4, 1, 8, 2, 1);  // kmax(4,8) = 2, b-zero case
    CHECK(c1.code.length() == 8);
    CHECK(c1.code.dim() == 2);
    CHECK(c1.claimed.dual_distance == 3);
    CHECK(c1.checks.self_orthogonal);
    CHECK(c1.checks.dual_dim == 6);
    CHECK(verify(c1));

    Certificate c2 = construct(3, 1, 6, 1, 1);
    CHECK(c2.claimed.dual_distance == 2);
    CHECK(verify(c2));

    Certificate c3 = construct(5, 1, 10, 2, 1);  // kmax(5,10) = 2, b-zero case
    CHECK(c3.field().order() == 25);
    CHECK(c3.claimed.dual_distance == 3);
    CHECK(verify(c3));
}

TEST_CASE("construct is deterministic in the seed") {
    Certificate a = construct(4, 1, 8, 2, 7);
    Certificate b = construct(4, 1, 8, 2, 7);
    CHECK(certificate_to_json(a).dump() == certificate_to_json(b).dump());

    Certificate other = construct(4, 1, 8, 2, 8);
    CHECK(verify(other));  // different seed still verifies
}

TEST_CASE("construct guards its inputs") {
    CHECK(kind_of([] { construct(4, 1, 6, 2, 1); }) == ErrorKind::KTooLarge);  // kmax(4,6) = 1
    CHECK(kind_of([] { construct(2, 1, 4, 1, 1); }) == ErrorKind::EOutOfRange);
    CHECK(kind_of([] { construct(2, 9, 4, 1, 1); }) == ErrorKind::TooLarge);  // Q > 2^16
    CHECK(kind_of([] { construct(6, 1, 4, 1, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("witness structure: distinct points, nonzero multipliers") {
    Certificate cert = construct(4, 1, 12, 2, 3);
    const Field& f = cert.field();
    const LinearCode& code = cert.code;
    std::set<uint32_t> points;
    for (uint32_t i = 0; i < code.length(); ++i) {
        uint32_t v = code.at(0, i);
        CHECK(v != 0);
        points.insert(f.mul(code.at(1, i), f.inv(v)));  // a_i = row1/row0
    }
    CHECK(points.size() == code.length());
}

TEST_CASE("exhaustive k=1 construction") {
    Certificate c = exhaustive_construct_k1(3, 1, 3);
    CHECK(c.code.generator() == std::vector<uint32_t>{1, 1, 1});
    CHECK(c.claimed.dual_distance == 2);
    CHECK(verify(c));

    // e = 4: the scan decides; the emitted witness must verify either way
    Certificate c2 = exhaustive_construct_k1(2, 2, 5);
    CHECK(verify(c2));
    uint32_t sum = 0;
    const Field& f = c2.field();
    for (uint32_t v : c2.code.generator()) sum = f.add(sum, f.pow(v, 5));
    CHECK(sum == 0);

    CHECK(kind_of([] { exhaustive_construct_k1(2, 1, 3); }) == ErrorKind::EOutOfRange);
    CHECK(kind_of([] { exhaustive_construct_k1(16, 2, 3); }) == ErrorKind::TooLarge);  // Q = 16^4
}

TEST_CASE("tampering with the generator breaks verification") {
    Certificate cert = construct(4, 1, 8, 2, 1);
    nlohmann::json j = certificate_to_json(cert);

    // replace the first entry with a value of a different norm, which breaks
    // row-0 against itself
    const Field& f = cert.field();
    uint32_t v0 = cert.code.at(0, 0);
    uint32_t replacement = 0;
    for (uint32_t cand = 1; cand < f.order(); ++cand) {
        if (f.pow(cand, f.conj_exponent() + 1) != f.pow(v0, f.conj_exponent() + 1)) {
            replacement = cand;
            break;
        }
    }
    REQUIRE(replacement != 0);
    j["generator"][0][0] = replacement;

    Certificate tampered = certificate_from_json(j);
    std::vector<std::string> failed;
    CHECK_FALSE(verify(tampered, &failed));
    CHECK(std::find(failed.begin(), failed.end(), "self_orthogonal") != failed.end());
}

TEST_CASE("overclaimed dual distance fails verification") {
    Certificate cert = construct(4, 1, 8, 2, 1);
    nlohmann::json j = certificate_to_json(cert);
    // Singleton: the dual has dimension n-k, so its distance caps at k+1
    j["claimed"]["dual_distance"] = cert.claimed.dual_distance + 1;
    j["checks"]["dual_distance"] = cert.claimed.dual_distance + 1;
    Certificate boastful = certificate_from_json(j);
    std::vector<std::string> failed;
    CHECK_FALSE(verify(boastful, &failed));
    CHECK(std::find(failed.begin(), failed.end(), "dual_distance") != failed.end());
}

TEST_CASE("certificate JSON round-trips byte-for-byte") {
    Certificate cert = construct(5, 1, 10, 2, 1);
    nlohmann::json j = certificate_to_json(cert);
    Certificate back = certificate_from_json(j);
    CHECK(certificate_to_json(back).dump() == j.dump());
    CHECK(verify(back));
}

TEST_CASE("malformed certificates are rejected") {
    Certificate cert = construct(4, 1, 8, 2, 1);
    nlohmann::json good = certificate_to_json(cert);

    nlohmann::json no_checks = good;
    no_checks.erase("checks");
    CHECK(kind_of([&] { certificate_from_json(no_checks); }) == ErrorKind::MalformedCertificate);

    nlohmann::json bad_modulus = good;
    bad_modulus["field"]["modulus"][0] = 0;
    CHECK(kind_of([&] { certificate_from_json(bad_modulus); }) ==
          ErrorKind::MalformedCertificate);

    nlohmann::json bad_row = good;
    bad_row["generator"][0].erase(0);
    CHECK(kind_of([&] { certificate_from_json(bad_row); }) == ErrorKind::MalformedCertificate);

    nlohmann::json out_of_range = good;
    out_of_range["generator"][0][0] = 999;
    CHECK(kind_of([&] { certificate_from_json(out_of_range); }) ==
          ErrorKind::MalformedCertificate);
}

TEST_CASE("full witness coverage for e = 3") {
    for (uint64_t n = 2; n <= 9; ++n) {
        uint64_t km = kmax(3, n).value;
        for (uint64_t k = 1; k <= km; ++k) {
            Certificate cert =
                k == 1 ? exhaustive_construct_k1(3, 1, n) : construct(3, 1, n, k, 1);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(verify(cert));
            CHECK(cert.claimed.dual_distance == k + 1);
        }
    }
}
