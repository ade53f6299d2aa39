#include "zxcf/canonical.hpp"
#include "zxcf/errors.hpp"
#include "zxcf/exact_state.hpp"
#include "zxcf/io.hpp"
#include "zxcf/random_diagram.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace zxcf;

constexpr int kExitNotEquivalent = 3;
constexpr int kExitSchema = 64;
constexpr int kExitSizeLimit = 65;
constexpr int kExitPrecondition = 66;
constexpr int kExitInternal = 70;

DiagramFile loadFile(const std::string& path) {
    return parseDiagramFile(readFileOrThrow(path));
}

Diagram loadDiagram(const std::string& path) {
    DiagramFile f = loadFile(path);
    if (f.kind != DiagramFile::Kind::MbqcLc) {
        throw SchemaError("expected an mbqc_lc diagram: " + path);
    }
    return f.diagram;
}

std::vector<int> parseIntList(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) {
            next = s.size();
        }
        try {
            out.push_back(std::stoi(s.substr(pos, next - pos)));
        } catch (const std::exception&) {
            throw SchemaError("invalid integer list: " + s);
        }
        pos = next + 1;
    }
    return out;
}

struct Options {
    std::string command;
    std::string sub;
    std::string fileA, fileB;
    std::string flowFile, traceFile, stepFile, replayFile;
    int vertex = -1;
    std::string edge, neighbours;
    std::string sign = "+";
    int vertices = 4;
    std::uint64_t seed = 0;
    bool ensureFlow = false;
    bool noInputs = false;
};

int runFlow(const Options& o) {
    const Diagram d = loadDiagram(o.fileA);
    if (o.sub == "verify") {
        const PauliFlow f = parseFlow(readFileOrThrow(o.flowFile));
        const auto violation = verifyFlow(d.graph, f);
        if (!violation) {
            std::printf("ok\n");
            return 0;
        }
        std::printf("violation: vertex=%d condition=%d witness=%d\n", violation->u,
                    violation->condition, violation->v);
        return 1;
    }
    const auto f = findFlow(d.graph);
    if (!f) {
        std::printf("none\n");
        return 2;
    }
    std::fputs(writeFlow(*f).c_str(), stdout);
    return 0;
}

int runRewrite(const Options& o) {
    Diagram d = loadDiagram(o.fileA);
    if (!o.replayFile.empty()) {
        const RewriteTrace t = parseTrace(readFileOrThrow(o.replayFile));
        d = applyTrace(d, t);
        std::fputs(writeDiagram(d).c_str(), stdout);
        return 0;
    }
    std::pair<Diagram, RewriteStep> r;
    if (o.sub == "lc") {
        if (o.vertex < 0) {
            throw SchemaError("lc requires --vertex");
        }
        r = lcRewrite(d, o.vertex);
    } else if (o.sub == "pivot") {
        const std::vector<int> uv = parseIntList(o.edge);
        if (uv.size() != 2) {
            throw SchemaError("pivot requires --edge u,v");
        }
        r = pivotRewrite(d, uv[0], uv[1]);
    } else if (o.sub == "zdelete") {
        if (o.vertex < 0) {
            throw SchemaError("zdelete requires --vertex");
        }
        r = zDelete(d, o.vertex);
    } else if (o.sub == "zinsert") {
        VertexSet w;
        if (!o.neighbours.empty()) {
            for (const int v : parseIntList(o.neighbours)) {
                w.insert(v);
            }
        }
        if (o.sign != "+" && o.sign != "-") {
            throw SchemaError("sign must be + or -");
        }
        r = zInsert(d, w, o.sign == "+" ? Sign::Plus : Sign::Minus);
    } else {
        throw SchemaError("unknown rewrite: " + o.sub);
    }
    if (!o.stepFile.empty()) {
        writeFileOrThrow(o.stepFile, writeTrace({r.second}));
    }
    std::fputs(writeDiagram(r.first).c_str(), stdout);
    return 0;
}

int runCanonicalize(const Options& o) {
    const CanonicalizeResult r = canonicalize(loadDiagram(o.fileA));
    if (!o.traceFile.empty()) {
        writeFileOrThrow(o.traceFile, writeTrace(r.trace));
    }
    DiagramFile out;
    out.kind = DiagramFile::Kind::Canonical;
    out.poly = r.canonical;
    std::fputs(writeDiagramFile(out).c_str(), stdout);
    return 0;
}

int runEquiv(const Options& o) {
    const auto trace = decideEquiv(loadDiagram(o.fileA), loadDiagram(o.fileB));
    if (!trace) {
        std::printf("not equivalent\n");
        return kExitNotEquivalent;
    }
    if (!o.traceFile.empty()) {
        writeFileOrThrow(o.traceFile, writeTrace(*trace));
    }
    std::printf("equivalent\n");
    return 0;
}

int runSimulate(const Options& o) {
    const DiagramFile f = loadFile(o.fileA);
    const ExactState s = f.kind == DiagramFile::Kind::MbqcLc ? evaluateDiagram(f.diagram)
                                                             : evaluateDiagram(f.poly);
    std::fputs(writeState(s).c_str(), stdout);
    return 0;
}

int runRandom(const Options& o) {
    Rng rng(o.seed);
    RandomDiagramOptions ro;
    ro.vertices = o.vertices;
    ro.withInputs = !o.noInputs;
    ro.ensureFlow = o.ensureFlow;
    std::fputs(writeDiagram(randomDiagram(rng, ro)).c_str(), stdout);
    return 0;
}

int runExportDot(const Options& o) {
    std::fputs(exportDot(loadFile(o.fileA)).c_str(), stdout);
    return 0;
}

int dispatch(const Options& o) {
    if (o.command == "flow") {
        return runFlow(o);
    }
    if (o.command == "rewrite") {
        return runRewrite(o);
    }
    if (o.command == "canonicalize") {
        return runCanonicalize(o);
    }
    if (o.command == "equiv") {
        return runEquiv(o);
    }
    if (o.command == "simulate") {
        return runSimulate(o);
    }
    if (o.command == "random") {
        return runRandom(o);
    }
    return runExportDot(o);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stabilizer MBQC diagram toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* flow = app.add_subcommand("flow", "Verify or find a Pauli flow");
    flow->require_subcommand(1);
    auto* fv = flow->add_subcommand("verify", "Check a flow against a diagram");
    fv->add_option("diagram", o.fileA)->required();
    fv->add_option("--flow", o.flowFile)->required();
    auto* ff = flow->add_subcommand("find", "Search for a flow");
    ff->add_option("diagram", o.fileA)->required();

    auto* rw = app.add_subcommand("rewrite", "Apply one rewrite or replay a trace");
    for (const char* name : {"lc", "pivot", "zdelete", "zinsert", "replay"}) {
        auto* sc = rw->add_subcommand(name);
        sc->add_option("diagram", o.fileA)->required();
        if (std::string(name) == "replay") {
            sc->add_option("--trace", o.replayFile)->required();
            continue;
        }
        sc->add_option("--vertex", o.vertex);
        sc->add_option("--edge", o.edge);
        sc->add_option("--neighbors", o.neighbours);
        sc->add_option("--sign", o.sign);
        sc->add_option("--emit-step", o.stepFile);
    }
    rw->require_subcommand(1);

    auto* canon = app.add_subcommand("canonicalize", "Canonical form of a diagram");
    canon->add_option("diagram", o.fileA)->required();
    canon->add_option("--trace", o.traceFile);

    auto* eq = app.add_subcommand("equiv", "Decide scalar-free equality");
    eq->add_option("a", o.fileA)->required();
    eq->add_option("b", o.fileB)->required();
    eq->add_option("--emit-trace", o.traceFile);

    auto* sim = app.add_subcommand("simulate", "Exact amplitudes");
    sim->add_option("diagram", o.fileA)->required();

    auto* rnd = app.add_subcommand("random", "Generate a random diagram");
    rnd->add_option("--vertices", o.vertices);
    rnd->add_option("--seed", o.seed);
    rnd->add_flag("--ensure-flow", o.ensureFlow);
    rnd->add_flag("--no-inputs", o.noInputs);

    auto* dot = app.add_subcommand("export-dot", "Graphviz export");
    dot->add_option("diagram", o.fileA)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const auto sub = app.get_subcommands().front();
    o.command = sub->get_name();
    if (!sub->get_subcommands().empty()) {
        o.sub = sub->get_subcommands().front()->get_name();
        if (o.command == "rewrite" && o.sub == "replay") {
            o.replayFile = o.replayFile.empty() ? o.traceFile : o.replayFile;
        }
    }

    try {
        return dispatch(o);
    } catch (const SchemaError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSchema;
    } catch (const SizeLimitError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSizeLimit;
    } catch (const NoFlowError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPrecondition;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInternal;
    }
}
