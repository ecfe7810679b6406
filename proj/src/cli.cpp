#include "cayfact/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cayfact/cayley.hpp"
#include "cayfact/certificate.hpp"
#include "cayfact/errors.hpp"
#include "cayfact/factorization.hpp"
#include "cayfact/oracle.hpp"
#include "cayfact/verify.hpp"

namespace cayfact {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw schema_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error("cannot write file: " + path.string());
    out << content;
    if (!out) throw error("write failed: " + path.string());
}

bool format_ok(const std::string& format, bool graph_output) {
    if (format == "json" || format == "text") return true;
    return graph_output && (format == "dot" || format == "edgelist");
}

ordered_json decision_to_json(const Group& G, int k, const Decision& d) {
    ordered_json j;
    j["decision"] = d.ok;
    j["group"] = G.describe();
    j["k"] = k;
    ordered_json reasons = ordered_json::array();
    for (const BlockReason& r : d.block_reasons) {
        ordered_json b;
        b["block"] = r.block;
        b["p"] = r.p;
        b["r"] = r.r;
        b["block_order_minus_one"] = r.block_order_minus_one;
        b["required_divisor"] = r.required_divisor;
        b["divides"] = r.divides;
        reasons.push_back(std::move(b));
    }
    j["reasons"] = std::move(reasons);
    j["tag"] = d.tag;
    j["detail"] = d.detail;
    return j;
}

}  // namespace

Group parse_group_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') text = read_file(arg.substr(1));
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("group argument is not valid JSON: ") + e.what());
    }
    return group_from_json(j);
}

int cmd_decide(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (!format_ok(cfg.format, false)) throw schema_error("format \"" + cfg.format + "\" is not valid for decide");
        const Group G = parse_group_arg(cfg.group_arg);
        const Decision d = decide_kif(G, cfg.k);
        if (cfg.format == "text") {
            out << "decision: " << (d.ok ? "true" : "false") << " for " << G.describe() << ", k = " << cfg.k << "\n";
            for (const BlockReason& r : d.block_reasons)
                out << "  " << r.block << ": " << r.required_divisor << (r.divides ? " | " : " does not divide ")
                    << r.block_order_minus_one << "\n";
            if (!d.tag.empty()) out << "  tag: " << d.tag << " (" << d.detail << ")\n";
        } else {
            out << decision_to_json(G, cfg.k, d).dump(2) << "\n";
        }
        return d.ok ? exit_ok : exit_negative;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (!format_ok(cfg.format, true))
            throw schema_error("format \"" + cfg.format + "\" is not valid for construct");
        const Group G = parse_group_arg(cfg.group_arg);
        const Decision d = decide_kif(G, cfg.k);
        if (!d.ok) {
            err << "no " << cfg.k << "-factorization exists for " << G.describe() << "\n";
            for (const BlockReason& r : d.block_reasons)
                if (!r.divides)
                    err << "  block " << r.block << ": " << r.required_divisor << " does not divide "
                        << r.block_order_minus_one << "\n";
            if (!d.tag.empty()) err << "  tag: " << d.tag << " (" << d.detail << ")\n";
            return exit_negative;
        }
        const KifConstruction kc = construct_kif(G, cfg.k);
        std::ostringstream provenance;
        provenance << "construct " << G.describe() << " k=" << cfg.k;
        const Certificate cert = to_certificate(kc.factorization, provenance.str(), kc.block_fields);

        const std::filesystem::path dir(cfg.out_dir.empty() ? "." : cfg.out_dir);
        std::filesystem::create_directories(dir);
        const std::string cert_text = certificate_to_string(cert);
        write_file(dir / "certificate.json", cert_text);

        if (cfg.format == "dot" || cfg.format == "edgelist") {
            const bool dot = cfg.format == "dot";
            out << (dir / "certificate.json").generic_string() << "\n";
            for (int j = 0; j < cfg.k; ++j) {
                const CayleyGraph graph = build_cayley(G, kc.factorization.parts[static_cast<std::size_t>(j)]);
                const std::filesystem::path file =
                    dir / ("factor_" + std::to_string(j) + (dot ? ".dot" : ".edges"));
                write_file(file, dot ? graph.to_dot() : graph.to_edgelist());
                out << file.generic_string() << "\n";
            }
        } else if (cfg.format == "text") {
            out << "constructed " << cfg.k << "-factorization of " << G.describe() << ": " << cfg.k
                << " parts of size " << kc.factorization.parts[0].elems.size() << "\n"
                << (dir / "certificate.json").generic_string() << "\n";
        } else {
            out << cert_text;
        }
        return exit_ok;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Certificate cert;
    try {
        if (!format_ok(cfg.format, false)) throw schema_error("format \"" + cfg.format + "\" is not valid for verify");
        cert = certificate_from_string(read_file(cfg.cert_path));
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    const VerifyReport report = verify_certificate(cert);
    if (cfg.format == "text") {
        out << "verdict: " << report.verdict << "\n";
        for (const std::string& f : report.partition.failures) out << "  " << f << "\n";
        for (const FactorCheck& fc : report.factors)
            if (!fc.pass) out << "  part " << fc.part << ": " << fc.detail << "\n";
        if (!report.detail.empty()) out << "  " << report.detail << "\n";
    } else {
        out << report_to_string(report);
    }
    if (report.undecided) return exit_undecided;
    return report.pass() ? exit_ok : exit_negative;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (!format_ok(cfg.format, false)) throw schema_error("format \"" + cfg.format + "\" is not valid for oracle");
        const Group G = parse_group_arg(cfg.group_arg);
        OracleOptions opts;
        opts.budget = cfg.budget;
        const OracleResult result = brute_force_kif(G, cfg.k, opts);
        const char* outcome = result.outcome == OracleOutcome::found     ? "found"
                              : result.outcome == OracleOutcome::refuted ? "refuted"
                                                                         : "exhausted";
        std::string cert_file;
        if (result.factorization) {
            std::ostringstream provenance;
            provenance << "oracle search " << G.describe() << " k=" << cfg.k;
            const Certificate cert = to_certificate(*result.factorization, provenance.str());
            const std::filesystem::path dir(cfg.out_dir.empty() ? "." : cfg.out_dir);
            std::filesystem::create_directories(dir);
            write_file(dir / "certificate.json", certificate_to_string(cert));
            cert_file = (dir / "certificate.json").generic_string();
        }
        if (cfg.format == "text") {
            out << "oracle: " << outcome << " for " << G.describe() << ", k = " << cfg.k << " ("
                << result.nodes << " nodes)\n";
            if (!cert_file.empty()) out << cert_file << "\n";
        } else {
            ordered_json j;
            j["outcome"] = outcome;
            j["group"] = G.describe();
            j["k"] = cfg.k;
            j["nodes"] = result.nodes;
            if (!cert_file.empty()) j["certificate"] = cert_file;
            out << j.dump(2) << "\n";
        }
        switch (result.outcome) {
            case OracleOutcome::found: return exit_ok;
            case OracleOutcome::refuted: return exit_negative;
            case OracleOutcome::exhausted: return exit_exhausted;
        }
        return exit_input_error;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (!format_ok(cfg.format, false)) throw schema_error("format \"" + cfg.format + "\" is not valid for census");
        const Group G = parse_group_arg(cfg.group_arg);
        const auto census = G.order_census();
        if (cfg.format == "text") {
            out << "order census of " << G.describe() << "\n";
            for (const auto& [order, count] : census) out << "  " << order << ": " << count << "\n";
        } else {
            ordered_json j;
            for (const auto& [order, count] : census) j[std::to_string(order)] = count;
            out << j.dump(2) << "\n";
        }
        return exit_ok;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

}  // namespace cayfact
