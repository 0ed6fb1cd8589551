#ifndef HSOQ_JSON_IO_HPP
#define HSOQ_JSON_IO_HPP

#include <json.hpp>

#include "hsoq/constructor.hpp"
#include "hsoq/derive.hpp"
#include "hsoq/kmax.hpp"
#include "hsoq/linear_code.hpp"

namespace hsoq {

// Field: {p, s, modulus: [c_0..c_s], conj_exponent}
nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);  // throws MalformedCertificate

// LinearCode: {field, n, k, generator: flat row-major packed entries}
nlohmann::json code_to_json(const LinearCode& c);
LinearCode code_from_json(const nlohmann::json& j);

// Certificate: {field, n, k, generator: [[row]..], claimed, checks, rng_seed}
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

// DerivationRecord: {q, N, K, D, rule, chain: [..]}
nlohmann::json record_to_json(const DerivationRecord& r);

nlohmann::json kmax_to_json(uint64_t e, uint64_t n, const KmaxResult& r);

}  // namespace hsoq

#endif
