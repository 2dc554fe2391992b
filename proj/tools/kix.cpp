#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kix/corpus.hpp"
#include "kix/discharge.hpp"
#include "kix/io.hpp"
#include "kix/lab.hpp"
#include "kix/reduce.hpp"
#include "kix/solver.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kix::Error(kix::ErrorCode::InvalidInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct CertificateSink {
    bool enabled = false;
    std::string command;
    std::string input_digest;
    bool deterministic = true;

    void emit(const std::string& payload) const {
        if (!enabled) return;
        json cert{{"command", command},
                  {"input", input_digest},
                  {"payload", payload},
                  {"payload_digest", fnv1a_hex(payload)},
                  {"version", kVersion},
                  {"deterministic_run", deterministic}};
        std::cout << "certificate " << cert.dump() << "\n";
    }
};

int run_verify(const std::string& graph_path, const std::string& coloring_path, int k, int t,
               CertificateSink cert) {
    kix::PlaneMultigraph g = kix::load_graph(graph_path);
    kix::PartialColoring phi = kix::load_coloring(coloring_path, g);
    phi.palette = std::max(phi.palette, t);
    std::ostringstream out;
    bool ok = kix::is_good(g, phi, k, t);
    for (int c : phi.color)
        if (c > t) ok = false;
    if (ok) {
        out << "good k=" << k << " t=" << t << "\n";
    } else {
        out << "not good k=" << k << " t=" << t << "\n";
        if (!kix::is_proper(g, phi)) {
            out << "reason: not a proper coloring\n";
        } else {
            for (const kix::Edge& e : g.edges()) {
                kix::ColorSet su = kix::used_colors(g, phi, e.u);
                kix::ColorSet sv = kix::used_colors(g, phi, e.v);
                if (su.intersect(sv).size() > k) {
                    out << "reason: |S_" << e.u << " ∩ S_" << e.v
                        << "| = " << su.intersect(sv).size() << " > " << k << "\n";
                    break;
                }
            }
            for (int c : phi.color)
                if (c > t) {
                    out << "reason: color " << c << " outside palette 1.." << t << "\n";
                    break;
                }
        }
    }
    std::cout << out.str();
    cert.emit(out.str());
    return ok ? 0 : 1;
}

int run_solve(const std::string& graph_path, int k, int t, bool have_t, bool force,
              bool no_symmetry, CertificateSink cert) {
    kix::PlaneMultigraph g = kix::load_graph(graph_path);
    kix::SolverOptions opts;
    opts.force = force;
    opts.symmetry_break = !no_symmetry;
    std::ostringstream out;
    int code = 0;
    if (have_t) {
        kix::ExistsResult r = kix::exists_good_coloring(g, k, t, opts);
        out << "nodes " << r.nodes << "\n";
        if (r.witness) {
            out << "feasible t=" << t << "\n" << kix::print_coloring(*r.witness);
        } else {
            out << "infeasible t=" << t << "\n";
            code = 1;
        }
    } else {
        kix::SolveResult r = kix::chromatic_index_k_intersection(g, k, opts);
        out << "optimum " << r.optimum << "\n";
        out << "nodes " << r.nodes << "\n";
        out << kix::print_coloring(r.witness);
    }
    std::cout << out.str();
    cert.emit(out.str());
    return code;
}

int run_color5(const std::string& graph_path, CertificateSink cert) {
    kix::PlaneMultigraph g = kix::load_graph(graph_path);
    std::vector<kix::TraceEntry> trace;
    kix::PartialColoring phi = kix::color5(g, &trace);
    std::ostringstream out;
    for (const kix::TraceEntry& t : trace)
        out << "trace " << t.action << " V=" << t.vertices << " E=" << t.edges << " ["
            << t.binding << "]\n";
    out << kix::print_coloring(phi);
    std::cout << out.str();
    cert.emit(out.str());
    return 0;
}

int run_find_config(const std::string& graph_path, CertificateSink cert) {
    kix::PlaneMultigraph g = kix::load_graph(graph_path);
    std::ostringstream out;
    kix::Configuration c = kix::find_configuration(g);
    out << "configuration " << c.describe() << "\n";
    std::cout << out.str();
    cert.emit(out.str());
    return 0;
}

int run_charges(const std::string& graph_path, CertificateSink cert) {
    kix::PlaneMultigraph g = kix::load_graph(graph_path);
    kix::AuditReport report = kix::audit(g);
    std::ostringstream out;
    const kix::ChargeLedger& ledger = report.ledger;
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "vertex " << v << " initial " << ledger.vertex_initial[v].str() << " final "
            << ledger.vertex_final[v].str() << "\n";
    for (std::size_t f = 0; f < ledger.face_initial.size(); ++f)
        out << "face " << f << " length " << g.faces()[f].length() << " initial "
            << ledger.face_initial[f].str() << " final " << ledger.face_final[f].str() << "\n";
    out << "total initial " << ledger.total_initial().str() << "\n";
    out << "total final " << ledger.total_final().str() << "\n";
    for (const kix::NegativeElement& n : report.negatives)
        out << "negative " << n.element << " " << n.charge.str() << " (" << n.reason << ")\n";
    out << "configuration " << report.configuration << "\n";
    std::cout << out.str();
    cert.emit(out.str());
    return 0;
}

int run_check_lemma(const std::string& id, int k, int t, double budget,
                    const std::vector<std::string>& no_filter, int threads,
                    const std::string& replay_out, CertificateSink cert) {
    const kix::ConfigTemplate& tpl = kix::lab_template(id);
    kix::LabOptions opts;
    opts.budget_secs = budget;
    if (const char* cap = std::getenv("KIX_BUDGET_SECS"))
        opts.budget_secs = std::min(opts.budget_secs, std::atof(cap));
    opts.disabled_filters = no_filter;
    opts.threads = threads;
    kix::ReducibilityReport r = kix::verify_reducible(tpl, k, t, opts);
    std::ostringstream out;
    out << "lemma " << r.lemma_id << " (" << tpl.summary << ")\n";
    out << "environments " << r.total_environments << "\n";
    out << "extendable " << r.extendable << "\n";
    out << "failures " << r.failure_count << "\n";
    out << "budget_exhausted " << (r.budget_exhausted ? "yes" : "no") << "\n";
    out << "certified " << (r.certified ? "yes" : "no") << "\n";
    for (const kix::FailingEnvironment& f : r.failures) out << "failing " << f.transcript << "\n";
    json record{{"lemma", r.lemma_id},
                {"k", k},
                {"t", t},
                {"environments", r.total_environments},
                {"extendable", r.extendable},
                {"failures", r.failure_count},
                {"budget_exhausted", r.budget_exhausted},
                {"certified", r.certified},
                {"wall_seconds", r.wall_seconds},
                {"filters", r.active_filters}};
    out << "report " << record.dump() << "\n";
    if (!replay_out.empty() && !r.failures.empty()) {
        std::ofstream rp(replay_out);
        for (const kix::FailingEnvironment& f : r.failures) {
            json line{{"lemma", r.lemma_id},
                      {"classes", f.env.class_colors},
                      {"transcript", f.transcript}};
            rp << line.dump() << "\n";
        }
        out << "replay written to " << replay_out << "\n";
    }
    std::cout << out.str();
    cert.deterministic = !r.budget_exhausted;
    cert.emit(out.str());
    return r.certified ? 0 : 1;
}

int run_gen_corpus(bool exhaustive, int max_vertices, std::uint64_t seed, int count,
                   const std::string& out_dir, CertificateSink cert) {
    std::vector<kix::PlaneMultigraph> graphs;
    int dropped = 0;
    if (exhaustive)
        graphs = kix::exhaustive_corpus(max_vertices, &dropped);
    else
        graphs = kix::random_corpus(max_vertices, seed, count);
    std::ostringstream out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "%s_%05zu.graph", exhaustive ? "ex" : "rnd", i);
        kix::save_graph(graphs[i], out_dir + "/" + name);
        out << "wrote " << name << " V=" << graphs[i].vertex_count()
            << " E=" << graphs[i].edge_count() << "\n";
    }
    out << "count " << graphs.size() << "\n";
    if (exhaustive) out << "dropped " << dropped << "\n";
    std::cout << out.str();
    cert.emit(out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-intersection edge-coloring toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    bool certificate = false;
    app.add_flag("--certificate", certificate, "emit a certificate record");

    std::string graph_path, coloring_path;
    int k = 2, t = 5;
    bool force = false, no_symmetry = false;

    auto* verify = app.add_subcommand("verify", "check a coloring file against a graph");
    verify->add_option("--k", k)->required();
    verify->add_option("--t", t)->required();
    verify->add_option("graph", graph_path)->required();
    verify->add_option("coloring", coloring_path)->required();

    auto* solve = app.add_subcommand("solve", "exact k-intersection chromatic index");
    bool have_t = false;
    solve->add_option("--k", k)->required();
    auto* topt = solve->add_option("--t", t, "decide a fixed palette size instead");
    solve->add_flag("--force", force, "ignore the 40-edge guard");
    solve->add_flag("--no-symmetry-break", no_symmetry);
    solve->add_option("graph", graph_path)->required();

    auto* color5 = app.add_subcommand("color5",
                                      "good 5-coloring plus its reduction trace");
    color5->add_option("graph", graph_path)->required();

    auto* findc = app.add_subcommand("find-config", "first reducible configuration");
    findc->add_option("graph", graph_path)->required();

    auto* charges = app.add_subcommand("charges", "charge ledger and audit");
    charges->add_option("graph", graph_path)->required();

    auto* check = app.add_subcommand("check-lemma", "certify a lemma template");
    std::string lemma_id, replay_out;
    double budget = 600;
    int threads = 1;
    std::vector<std::string> no_filter;
    check->add_option("--id", lemma_id)->required();
    check->add_option("--k", k);
    check->add_option("--t", t);
    check->add_option("--budget", budget, "wall-clock budget in seconds");
    check->add_option("--no-filter", no_filter, "disable an admissibility filter by name");
    check->add_option("--threads", threads);
    check->add_option("--replay-out", replay_out, "write failing environments as JSONL");

    auto* gen = app.add_subcommand("gen-corpus", "emit test graphs");
    bool exhaustive = false;
    int max_vertices = 10, count = 100;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    gen->add_flag("--exhaustive", exhaustive, "all connected subcubic planar simple graphs");
    gen->add_option("--max-vertices", max_vertices);
    gen->add_option("--seed", seed);
    gen->add_option("--count", count);
    gen->add_option("--out", out_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        CertificateSink cert;
        cert.enabled = certificate;
        std::ostringstream cmd;
        for (int i = 1; i < argc; ++i) cmd << (i > 1 ? " " : "") << argv[i];
        cert.command = cmd.str();
        if (!graph_path.empty()) cert.input_digest = fnv1a_hex(read_file(graph_path));

        if (verify->parsed()) return run_verify(graph_path, coloring_path, k, t, cert);
        if (solve->parsed()) {
            have_t = topt->count() > 0;
            return run_solve(graph_path, k, t, have_t, force, no_symmetry, cert);
        }
        if (color5->parsed()) return run_color5(graph_path, cert);
        if (findc->parsed()) return run_find_config(graph_path, cert);
        if (charges->parsed()) return run_charges(graph_path, cert);
        if (check->parsed())
            return run_check_lemma(lemma_id, k, t, budget, no_filter, threads, replay_out, cert);
        if (gen->parsed())
            return run_gen_corpus(exhaustive, max_vertices, seed, count, out_dir, cert);
    } catch (const kix::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
