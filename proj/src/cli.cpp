#include "hsoq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "hsoq/catalog.hpp"
#include "hsoq/constructor.hpp"
#include "hsoq/json_io.hpp"

namespace hsoq {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::InvalidArgument, "cannot write file '" + path + "'");
    f << text;
}

uint64_t pow_checked(uint64_t q, uint64_t m) {
    uint64_t e = 1;
    for (uint64_t i = 0; i < m; ++i) {
        if (e > (uint64_t(1) << 31) / q)
            throw Error(ErrorKind::EOutOfRange, "q^m exceeds the supported range");
        e *= q;
    }
    return e;
}

std::pair<uint64_t, uint64_t> parse_k_range(const std::string& text) {
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            uint64_t k = std::stoull(text);
            return {k, k};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "bad k range '" + text + "', expected A..B");
    }
}

std::string witness_display(const Partition& p) {
    std::string out = "{";
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts[i]);
    }
    return out + "}";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stabilizer code parameters from Hermitian self-orthogonal codes"};
    app.require_subcommand(1);

    bool json_output = false;
    uint64_t max_enum = kDefaultMaxEnum;
    uint64_t budget = 200;
    app.add_flag("--json", json_output, "emit JSON instead of text/CSV where supported");
    app.add_option("--max-enum", max_enum, "enumeration guard for distance computations");
    app.add_option("--budget", budget, "point-set retry budget for construct");

    uint64_t q = 0, m = 1, n = 0, k = 0, seed = 1, samples = 100'000;
    uint64_t n_max = 0, k_min = 0, max_steps = 0;
    bool exhaustive = false;
    std::string k_range, table_name, out_path, cert_path, seeds_path, ours_path, baseline_path;
    std::vector<uint64_t> skips;

    auto* cmd_kmax = app.add_subcommand("kmax", "largest guaranteed dimension K_n");
    cmd_kmax->add_option("--q", q)->required();
    cmd_kmax->add_option("--m", m)->required();
    cmd_kmax->add_option("--n", n)->required();

    auto* cmd_derive = app.add_subcommand("derive", "derive one [[mn, mn-2mk, >=k+1]]_q record");
    cmd_derive->add_option("--q", q)->required();
    cmd_derive->add_option("--m", m)->required();
    cmd_derive->add_option("--n", n)->required();
    cmd_derive->add_option("--k", k)->required();

    auto* cmd_family = app.add_subcommand("family", "derive a k-range family");
    cmd_family->add_option("--q", q)->required();
    cmd_family->add_option("--m", m)->required();
    cmd_family->add_option("--n", n)->required();
    cmd_family->add_option("--k", k_range, "k range, e.g. 1..7")->required();
    cmd_family->add_option("--skip", skips, "k values to leave out");

    auto* cmd_table = app.add_subcommand("table", "regenerate a named parameter table");
    cmd_table->add_option("--name", table_name)->required();
    cmd_table->add_option("--out", out_path);

    auto* cmd_closure = app.add_subcommand("closure", "propagation-rule closure of seed records");
    cmd_closure->add_option("--seeds", seeds_path)->required();
    cmd_closure->add_option("--n-max", n_max)->required();
    cmd_closure->add_option("--k-min", k_min)->required();
    cmd_closure->add_option("--max-steps", max_steps);
    cmd_closure->add_option("--out", out_path);

    auto* cmd_construct = app.add_subcommand("construct", "search for a certified witness code");
    cmd_construct->add_option("--q", q)->required();
    cmd_construct->add_option("--m", m)->required();
    cmd_construct->add_option("--n", n)->required();
    cmd_construct->add_option("--k", k)->required();
    cmd_construct->add_option("--seed", seed);
    cmd_construct->add_option("--samples", samples);
    cmd_construct->add_flag("--exhaustive", exhaustive, "deterministic scan, k = 1 only");
    cmd_construct->add_option("--out", out_path);

    auto* cmd_verify = app.add_subcommand("verify", "re-verify a certificate file");
    cmd_verify->add_option("--cert", cert_path)->required();

    auto* cmd_compare = app.add_subcommand("compare", "compare a catalog against a baseline");
    cmd_compare->add_option("--ours", ours_path)->required();
    cmd_compare->add_option("--baseline", baseline_path)->required();
    cmd_compare->add_option("--out", out_path);

    // global flags are also accepted after the subcommand name
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("hsoq");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_kmax->parsed()) {
            uint64_t e = pow_checked(q, m);
            KmaxResult result = kmax(e, n);
            if (json_output) {
                out << kmax_to_json(e, n, result).dump(2) << "\n";
            } else {
                out << "e=" << e << " n=" << n << " K=" << result.value
                    << " case=" << to_string(result.case_tag)
                    << " witness=" << witness_display(result.witness) << "\n";
            }
        } else if (cmd_derive->parsed()) {
            std::vector<DerivationRecord> records{derive_from_theorem(q, m, n, k)};
            if (json_output) {
                out << record_to_json(records.front()).dump(2) << "\n";
            } else {
                out << to_csv(records);
            }
        } else if (cmd_family->parsed()) {
            auto [k_from, k_to] = parse_k_range(k_range);
            std::vector<DerivationRecord> records = family(q, m, n, k_from, k_to, skips);
            if (json_output) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : records) arr.push_back(record_to_json(r));
                out << arr.dump(2) << "\n";
            } else {
                out << to_csv(records);
            }
        } else if (cmd_table->parsed()) {
            std::vector<DerivationRecord> records = generate_table(table_name);
            RuleColumn style = table_name == "table1" ? RuleColumn::Markers : RuleColumn::Names;
            write_output(out_path, to_csv(records, style), out);
        } else if (cmd_closure->parsed()) {
            auto entries = parse_catalog_csv(read_file(seeds_path));
            ClosureOptions options;
            if (cmd_closure->count("--max-steps") > 0) options.max_steps = max_steps;
            auto records = closure(seeds_from_entries(entries), n_max, k_min, options);
            write_output(out_path, to_csv(records, RuleColumn::Markers), out);
        } else if (cmd_construct->parsed()) {
            if (exhaustive && k != 1)
                throw Error(ErrorKind::InvalidArgument, "--exhaustive requires k = 1");
            ConstructOptions options;
            options.point_set_budget = budget;
            options.sample_budget = samples;
            options.max_enum = max_enum;
            Certificate cert = exhaustive ? exhaustive_construct_k1(q, m, n)
                                          : construct(q, m, n, k, seed, options);
            write_output(out_path, certificate_to_json(cert).dump(2) + "\n", out);
        } else if (cmd_verify->parsed()) {
            Certificate cert = certificate_from_json(nlohmann::json::parse(read_file(cert_path)));
            std::vector<std::string> failed;
            bool ok = verify(cert, &failed, max_enum);
            if (ok) {
                out << "ok: [" << cert.claimed.n << "," << cert.claimed.k << "]_"
                    << cert.field().order() << " with dual distance "
                    << cert.claimed.dual_distance << "\n";
                return 0;
            }
            for (const std::string& name : failed) out << "FAILED: " << name << "\n";
            return 1;
        } else if (cmd_compare->parsed()) {
            auto ours = parse_catalog_csv(read_file(ours_path));
            auto baseline = parse_baseline_csv(read_file(baseline_path));
            write_output(out_path, to_csv(compare(ours, baseline)), out);
        }
    } catch (const Error& e) {
        err << to_string(e.kind()) << ": " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "MalformedCertificate: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace hsoq
