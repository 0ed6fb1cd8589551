#include "hsoq/json_io.hpp"

namespace hsoq {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorKind::MalformedCertificate, "malformed input: " + what);
}

uint64_t get_u64(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) malformed(std::string(key));
    return j[key].get<uint64_t>();
}

}  // namespace

json field_to_json(const Field& f) {
    json j;
    j["p"] = f.characteristic();
    j["s"] = f.degree();
    j["modulus"] = f.modulus();
    j["conj_exponent"] = f.has_conj() ? json(f.conj_exponent()) : json(nullptr);
    return j;
}

Field field_from_json(const json& j) {
    uint64_t p = get_u64(j, "p");
    uint64_t s = get_u64(j, "s");
    bool with_conj = j.contains("conj_exponent") && !j["conj_exponent"].is_null();
    Field f = [&] {
        try {
            return Field::make(p, uint32_t(s), with_conj);
        } catch (const Error& e) {
            malformed(std::string("field: ") + e.what());
        }
    }();
    if (!j.contains("modulus") || !j["modulus"].is_array() ||
        j["modulus"].get<std::vector<uint32_t>>() != f.modulus())
        malformed("modulus is not the canonical modulus for (p, s)");
    if (with_conj && j["conj_exponent"].get<uint64_t>() != f.conj_exponent())
        malformed("conj_exponent does not equal p^(s/2)");
    return f;
}

json code_to_json(const LinearCode& c) {
    json j;
    j["field"] = field_to_json(c.field());
    j["n"] = c.length();
    j["k"] = c.dim();
    j["generator"] = c.generator();
    return j;
}

LinearCode code_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    uint64_t n = get_u64(j, "n");
    uint64_t k = get_u64(j, "k");
    if (!j.contains("generator") || !j["generator"].is_array()) malformed("generator");
    auto gen = j["generator"].get<std::vector<uint32_t>>();
    if (gen.size() != n * k) malformed("generator size does not match n*k");
    try {
        return LinearCode(f, uint32_t(n), std::move(gen));
    } catch (const Error& e) {
        malformed(std::string("generator: ") + e.what());
    }
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["field"] = field_to_json(cert.field());
    j["n"] = cert.code.length();
    j["k"] = cert.code.dim();
    json rows = json::array();
    for (uint32_t r = 0; r < cert.code.dim(); ++r) {
        auto row = cert.code.row(r);
        rows.push_back(std::vector<uint32_t>(row.begin(), row.end()));
    }
    j["generator"] = rows;
    j["claimed"] = {{"n", cert.claimed.n},
                    {"k", cert.claimed.k},
                    {"dual_distance", cert.claimed.dual_distance}};
    j["checks"] = {{"self_orthogonal", cert.checks.self_orthogonal},
                   {"dual_dim", cert.checks.dual_dim},
                   {"dual_distance", cert.checks.dual_distance},
                   {"method", cert.checks.method}};
    j["rng_seed"] = cert.rng_seed;
    return j;
}

Certificate certificate_from_json(const json& j) {
    if (!j.is_object()) malformed("certificate is not an object");
    Field f = field_from_json(j.at("field"));
    uint64_t n = get_u64(j, "n");
    uint64_t k = get_u64(j, "k");
    if (!j.contains("generator") || !j["generator"].is_array() || j["generator"].size() != k)
        malformed("generator row count");
    std::vector<uint32_t> gen;
    gen.reserve(n * k);
    for (const auto& row : j["generator"]) {
        if (!row.is_array() || row.size() != n) malformed("generator row length");
        for (const auto& v : row) {
            if (!v.is_number_unsigned() || v.get<uint64_t>() >= f.order())
                malformed("generator entry");
            gen.push_back(v.get<uint32_t>());
        }
    }
    if (!j.contains("claimed") || !j.contains("checks") || !j.contains("rng_seed"))
        malformed("missing claimed/checks/rng_seed");
    const json& claimed = j["claimed"];
    const json& checks = j["checks"];
    if (!checks.contains("self_orthogonal") || !checks["self_orthogonal"].is_boolean() ||
        !checks.contains("method") || !checks["method"].is_string())
        malformed("checks");

    LinearCode code = [&] {
        try {
            return LinearCode(f, uint32_t(n), std::move(gen));
        } catch (const Error& e) {
            malformed(std::string("generator: ") + e.what());
        }
    }();
    Certificate cert{std::move(code), {}, {}, 0};
    cert.claimed.n = get_u64(claimed, "n");
    cert.claimed.k = get_u64(claimed, "k");
    cert.claimed.dual_distance = get_u64(claimed, "dual_distance");
    cert.checks.self_orthogonal = checks["self_orthogonal"].get<bool>();
    cert.checks.dual_dim = get_u64(checks, "dual_dim");
    cert.checks.dual_distance = get_u64(checks, "dual_distance");
    cert.checks.method = checks["method"].get<std::string>();
    cert.rng_seed = get_u64(j, "rng_seed");
    return cert;
}

json record_to_json(const DerivationRecord& r) {
    json j;
    j["q"] = r.params.q;
    j["N"] = r.params.N;
    j["K"] = r.params.K;
    j["D"] = r.params.D;
    j["rule"] = to_string(r.rule);
    j["chain"] = r.chain_strings();
    return j;
}

json kmax_to_json(uint64_t e, uint64_t n, const KmaxResult& r) {
    json j;
    j["e"] = e;
    j["n"] = n;
    j["K"] = r.value;
    j["case"] = to_string(r.case_tag);
    j["witness"] = r.witness.parts;
    return j;
}

}  // namespace hsoq
