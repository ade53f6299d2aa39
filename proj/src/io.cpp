#include "zxcf/io.hpp"

#include "zxcf/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace zxcf {

namespace {

using nlohmann::json;

json parseJson(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw SchemaError("invalid JSON");
    }
    return j;
}

const json& field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) {
        throw SchemaError(std::string("missing field: ") + name);
    }
    return *it;
}

int intField(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer()) {
        throw SchemaError(std::string("field must be an integer: ") + name);
    }
    return f.get<int>();
}

std::string strField(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_string()) {
        throw SchemaError(std::string("field must be a string: ") + name);
    }
    return f.get<std::string>();
}

Sign parseSign(const std::string& s) {
    if (s == "+") {
        return Sign::Plus;
    }
    if (s == "-") {
        return Sign::Minus;
    }
    throw SchemaError("sign must be + or -");
}

std::string signString(Sign s) { return s == Sign::Plus ? "+" : "-"; }

CliffordWord parseWord(const std::string& s) {
    const auto w = wordFromString(s);
    if (!w) {
        throw SchemaError("invalid Clifford word: " + s);
    }
    return *w;
}

std::string dumpPretty(const json& j) { return j.dump(2) + "\n"; }

json verticesField(const json& j) {
    const json& vs = field(j, "vertices");
    if (!vs.is_array()) {
        throw SchemaError("vertices must be an array");
    }
    return vs;
}

struct EdgeRec {
    int u, v;
    bool hadamard;
};

std::vector<EdgeRec> parseEdges(const json& j) {
    const json& es = field(j, "edges");
    if (!es.is_array()) {
        throw SchemaError("edges must be an array");
    }
    std::vector<EdgeRec> out;
    for (const json& e : es) {
        EdgeRec r{intField(e, "u"), intField(e, "v"), false};
        const json& h = field(e, "hadamard");
        if (!h.is_boolean()) {
            throw SchemaError("edge hadamard must be a boolean");
        }
        r.hadamard = h.get<bool>();
        if (r.u == r.v) {
            throw SchemaError("self-loop edge");
        }
        out.push_back(r);
    }
    return out;
}

Diagram parseMbqcLc(const json& j) {
    Diagram d;
    VertexSet ids;
    for (const json& v : verticesField(j)) {
        const int id = intField(v, "id");
        if (!ids.insert(id).second) {
            throw SchemaError("duplicate vertex id");
        }
        d.graph.addVertex(id);
        const std::string role = strField(v, "role");
        const bool hasInput = role == "input" || role == "input_output";
        const bool hasOutput = role == "output" || role == "input_output";
        if (!hasInput && !hasOutput && role != "measured") {
            throw SchemaError("unknown role: " + role);
        }
        d.graph.setInput(id, hasInput);
        d.graph.setOutput(id, hasOutput);
        if (!hasOutput) {
            const auto basis = basisFromString(strField(v, "basis"));
            if (!basis) {
                throw SchemaError("basis must be X, Y or Z");
            }
            d.setMeasurement(id, {*basis, parseSign(strField(v, "sign"))});
        } else if (v.contains("basis") || v.contains("sign")) {
            throw SchemaError("output vertices carry no measurement");
        }
        if (v.contains("input_clifford")) {
            if (!hasInput) {
                throw SchemaError("input_clifford on a non-input vertex");
            }
            d.setInputWord(id, parseWord(strField(v, "input_clifford")));
        }
        if (v.contains("output_clifford")) {
            if (!hasOutput) {
                throw SchemaError("output_clifford on a non-output vertex");
            }
            d.setOutputWord(id, parseWord(strField(v, "output_clifford")));
        }
    }
    for (const EdgeRec& e : parseEdges(j)) {
        if (!ids.count(e.u) || !ids.count(e.v)) {
            throw SchemaError("edge references an unknown vertex");
        }
        if (!e.hadamard) {
            throw SchemaError("mbqc_lc edges are all Hadamard edges");
        }
        if (d.graph.hasEdge(e.u, e.v)) {
            throw SchemaError("duplicate edge");
        }
        d.graph.addEdge(e.u, e.v);
    }
    try {
        d.validate();
    } catch (const MalformedDiagramError& e) {
        throw SchemaError(e.what());
    }
    return d;
}

PhasePolyDiagram parsePhasePoly(const json& j, bool requireCanonical) {
    PhasePolyDiagram p;
    const json vs = verticesField(j);
    p.spiders.resize(vs.size());
    VertexSet ids;
    for (const json& v : vs) {
        const int id = intField(v, "id");
        if (id < 0 || id >= static_cast<int>(vs.size()) || !ids.insert(id).second) {
            throw SchemaError("phase_poly vertex ids must be exactly 0..n-1");
        }
        if (strField(v, "role") != "output") {
            throw SchemaError("phase_poly vertices are all outputs");
        }
        const std::string colour = strField(v, "colour");
        const int qt = intField(v, "phase_quarter_turns");
        if (colour == "green") {
            if (qt < 0 || qt > 3) {
                throw SchemaError("green phase must be 0..3 quarter turns");
            }
            p.spiders[id] = {false, qt};
        } else if (colour == "red") {
            if (qt != 0 && qt != 2) {
                throw SchemaError("red phase must be 0 or 2 quarter turns");
            }
            p.spiders[id] = {true, qt / 2};
        } else {
            throw SchemaError("colour must be green or red");
        }
    }
    for (const EdgeRec& e : parseEdges(j)) {
        if (!ids.count(e.u) || !ids.count(e.v)) {
            throw SchemaError("edge references an unknown vertex");
        }
        const auto key = std::minmax(e.u, e.v);
        auto& side = e.hadamard ? p.hEdges : p.plainEdges;
        if (!side.emplace(key.first, key.second).second) {
            throw SchemaError("duplicate edge");
        }
    }
    try {
        p.validate();
    } catch (const MalformedDiagramError& e) {
        throw SchemaError(e.what());
    }
    if (requireCanonical && !p.isCanonical()) {
        throw SchemaError("diagram marked canonical is not canonical");
    }
    return p;
}

json diagramJson(const Diagram& d) {
    json vs = json::array();
    for (const VertexId v : d.graph.vertices()) {
        json e;
        e["id"] = v;
        const bool in = d.graph.isInput(v);
        const bool out = d.graph.isOutput(v);
        e["role"] = in && out ? "input_output" : in ? "input" : out ? "output" : "measured";
        if (const auto it = d.measurements.find(v); it != d.measurements.end()) {
            e["basis"] = basisToString(it->second.basis);
            e["sign"] = signString(it->second.sign);
        }
        if (const CliffordWord w = d.inputWord(v); !w.empty()) {
            e["input_clifford"] = wordToString(w);
        }
        if (const CliffordWord w = d.outputWord(v); !w.empty()) {
            e["output_clifford"] = wordToString(w);
        }
        vs.push_back(std::move(e));
    }
    json es = json::array();
    for (const auto& [u, v] : d.graph.edges()) {
        es.push_back({{"hadamard", true}, {"u", u}, {"v", v}});
    }
    return {{"version", 1}, {"kind", "mbqc_lc"}, {"vertices", vs}, {"edges", es}};
}

json phasePolyJson(const PhasePolyDiagram& p, bool canonical) {
    json vs = json::array();
    for (int v = 0; v < p.numQubits(); ++v) {
        const PhasePolySpider& s = p.spiders[v];
        vs.push_back({{"id", v},
                      {"role", "output"},
                      {"colour", s.red ? "red" : "green"},
                      {"phase_quarter_turns", s.red ? 2 * s.phase : s.phase}});
    }
    json es = json::array();
    for (const auto& [u, v] : p.plainEdges) {
        es.push_back({{"hadamard", false}, {"u", u}, {"v", v}});
    }
    for (const auto& [u, v] : p.hEdges) {
        es.push_back({{"hadamard", true}, {"u", u}, {"v", v}});
    }
    return {{"version", 1},
            {"kind", canonical ? "canonical" : "phase_poly"},
            {"vertices", vs},
            {"edges", es}};
}

} // namespace

DiagramFile parseDiagramFile(const std::string& text) {
    const json j = parseJson(text);
    if (!j.is_object()) {
        throw SchemaError("diagram file must be a JSON object");
    }
    if (intField(j, "version") != 1) {
        throw SchemaError("unsupported version");
    }
    const std::string kind = strField(j, "kind");
    DiagramFile f;
    if (kind == "mbqc_lc") {
        f.kind = DiagramFile::Kind::MbqcLc;
        f.diagram = parseMbqcLc(j);
    } else if (kind == "phase_poly" || kind == "canonical") {
        f.kind = kind == "canonical" ? DiagramFile::Kind::Canonical : DiagramFile::Kind::PhasePoly;
        f.poly = parsePhasePoly(j, f.kind == DiagramFile::Kind::Canonical);
    } else {
        throw SchemaError("unknown kind: " + kind);
    }
    return f;
}

std::string writeDiagramFile(const DiagramFile& f) {
    switch (f.kind) {
        case DiagramFile::Kind::MbqcLc:
            return dumpPretty(diagramJson(f.diagram));
        case DiagramFile::Kind::PhasePoly:
            return dumpPretty(phasePolyJson(f.poly, false));
        case DiagramFile::Kind::Canonical:
            if (!f.poly.isCanonical()) {
                throw MalformedDiagramError("kind canonical requires a canonical diagram");
            }
            return dumpPretty(phasePolyJson(f.poly, true));
    }
    throw Error("unknown diagram file kind");
}

std::string writeDiagram(const Diagram& d) { return dumpPretty(diagramJson(d)); }

std::string writePhasePoly(const PhasePolyDiagram& p) {
    return dumpPretty(phasePolyJson(p, p.isCanonical()));
}

PauliFlow parseFlow(const std::string& text) {
    const json j = parseJson(text);
    PauliFlow f;
    const json& p = field(j, "p");
    if (!p.is_array()) {
        throw SchemaError("p must be an array");
    }
    for (const json& row : p) {
        const int u = intField(row, "vertex");
        if (f.p.count(u)) {
            throw SchemaError("duplicate correction-set vertex");
        }
        const json& cs = field(row, "correction");
        if (!cs.is_array()) {
            throw SchemaError("correction must be an array");
        }
        VertexSet set;
        for (const json& c : cs) {
            if (!c.is_number_integer()) {
                throw SchemaError("correction entries must be integers");
            }
            set.insert(c.get<int>());
        }
        f.p[u] = std::move(set);
    }
    const json& ord = field(j, "order");
    if (!ord.is_array()) {
        throw SchemaError("order must be an array");
    }
    for (const json& e : ord) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw SchemaError("order entries must be integer pairs");
        }
        f.order.emplace(e[0].get<int>(), e[1].get<int>());
    }
    return f;
}

std::string writeFlow(const PauliFlow& f) {
    json p = json::array();
    for (const auto& [u, set] : f.p) {
        p.push_back({{"vertex", u}, {"correction", json(set)}});
    }
    json ord = json::array();
    for (const auto& [a, b] : f.order) {
        ord.push_back({a, b});
    }
    return dumpPretty({{"version", 1}, {"p", p}, {"order", ord}});
}

ExactState parseState(const std::string& text) {
    const json j = parseJson(text);
    ExactState s;
    s.numQubits = intField(j, "num_qubits");
    s.sqrt2Exp = intField(j, "sqrt2_exp");
    const json& amps = field(j, "amps");
    if (s.numQubits < 0 || s.numQubits > 30 || !amps.is_array() ||
        amps.size() != (std::size_t{1} << s.numQubits)) {
        throw SchemaError("amps must list 2^num_qubits entries");
    }
    for (const json& a : amps) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
            !a[1].is_number_integer()) {
            throw SchemaError("amplitudes must be [re, im] integer pairs");
        }
        s.amps.push_back({a[0].get<long long>(), a[1].get<long long>()});
    }
    return s;
}

std::string writeState(const ExactState& s) {
    json amps = json::array();
    for (const Gaussian& a : s.amps) {
        amps.push_back({a.re, a.im});
    }
    return dumpPretty(
        {{"version", 1}, {"num_qubits", s.numQubits}, {"sqrt2_exp", s.sqrt2Exp}, {"amps", amps}});
}

namespace {

const char* stepKindName(RewriteStep::Kind k) {
    switch (k) {
        case RewriteStep::Kind::LC: return "lc";
        case RewriteStep::Kind::Pivot: return "pivot";
        case RewriteStep::Kind::ZDelete: return "zdelete";
        case RewriteStep::Kind::ZInsert: return "zinsert";
        case RewriteStep::Kind::BendInput: return "bend";
        case RewriteStep::Kind::UnbendInput: return "unbend";
        case RewriteStep::Kind::SplitVertex: return "split";
        case RewriteStep::Kind::UnsplitVertex: return "unsplit";
        case RewriteStep::Kind::Relabel: return "relabel";
    }
    throw Error("unknown rewrite step kind");
}

RewriteStep parseStep(const json& j) {
    RewriteStep s;
    const std::string kind = strField(j, "kind");
    if (kind == "lc") {
        s.kind = RewriteStep::Kind::LC;
        s.u = intField(j, "u");
    } else if (kind == "pivot") {
        s.kind = RewriteStep::Kind::Pivot;
        s.u = intField(j, "u");
        s.v = intField(j, "v");
    } else if (kind == "zdelete" || kind == "zinsert") {
        s.kind = kind == "zdelete" ? RewriteStep::Kind::ZDelete : RewriteStep::Kind::ZInsert;
        s.u = intField(j, "u");
        s.sign = parseSign(strField(j, "sign"));
        for (const json& n : field(j, "neighbours")) {
            if (!n.is_number_integer()) {
                throw SchemaError("neighbours must be integers");
            }
            s.neighbours.insert(n.get<int>());
        }
    } else if (kind == "bend" || kind == "unbend") {
        s.kind = kind == "bend" ? RewriteStep::Kind::BendInput : RewriteStep::Kind::UnbendInput;
        s.u = intField(j, "u");
        const auto basis = basisFromString(strField(j, "basis"));
        if (!basis) {
            throw SchemaError("basis must be X, Y or Z");
        }
        s.meas = {*basis, parseSign(strField(j, "sign"))};
        s.word = parseWord(strField(j, "word"));
    } else if (kind == "split" || kind == "unsplit") {
        s.kind = kind == "split" ? RewriteStep::Kind::SplitVertex : RewriteStep::Kind::UnsplitVertex;
        s.u = intField(j, "u");
        s.v = intField(j, "v");
    } else if (kind == "relabel") {
        s.kind = RewriteStep::Kind::Relabel;
        for (const json& e : field(j, "map")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer()) {
                throw SchemaError("relabel map entries must be integer pairs");
            }
            s.relabel[e[0].get<int>()] = e[1].get<int>();
        }
    } else {
        throw SchemaError("unknown step kind: " + kind);
    }
    return s;
}

json stepJson(const RewriteStep& s) {
    json j;
    j["kind"] = stepKindName(s.kind);
    switch (s.kind) {
        case RewriteStep::Kind::LC:
            j["u"] = s.u;
            break;
        case RewriteStep::Kind::Pivot:
        case RewriteStep::Kind::SplitVertex:
        case RewriteStep::Kind::UnsplitVertex:
            j["u"] = s.u;
            j["v"] = s.v;
            break;
        case RewriteStep::Kind::ZDelete:
        case RewriteStep::Kind::ZInsert:
            j["u"] = s.u;
            j["sign"] = signString(s.sign);
            j["neighbours"] = json(s.neighbours);
            break;
        case RewriteStep::Kind::BendInput:
        case RewriteStep::Kind::UnbendInput:
            j["u"] = s.u;
            j["basis"] = basisToString(s.meas.basis);
            j["sign"] = signString(s.meas.sign);
            j["word"] = wordToString(s.word);
            break;
        case RewriteStep::Kind::Relabel: {
            json m = json::array();
            for (const auto& [a, b] : s.relabel) {
                m.push_back({a, b});
            }
            j["map"] = std::move(m);
            break;
        }
    }
    return j;
}

} // namespace

RewriteTrace parseTrace(const std::string& text) {
    RewriteTrace t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        t.push_back(parseStep(parseJson(line)));
    }
    return t;
}

std::string writeTrace(const RewriteTrace& t) {
    std::string out;
    for (const RewriteStep& s : t) {
        out += stepJson(s).dump();
        out += '\n';
    }
    return out;
}

std::string exportDot(const DiagramFile& f) {
    std::ostringstream out;
    out << "graph diagram {\n  node [style=filled];\n";
    if (f.kind == DiagramFile::Kind::MbqcLc) {
        const Diagram& d = f.diagram;
        for (const VertexId v : d.graph.vertices()) {
            const bool in = d.graph.isInput(v);
            const bool out_ = d.graph.isOutput(v);
            std::string label = std::to_string(v);
            if (const auto it = d.measurements.find(v); it != d.measurements.end()) {
                label += "\\n" + basisToString(it->second.basis) + signString(it->second.sign);
            }
            if (const CliffordWord w = d.inputWord(v); !w.empty()) {
                label += "\\nin:" + wordToString(w);
            }
            if (const CliffordWord w = d.outputWord(v); !w.empty()) {
                label += "\\nout:" + wordToString(w);
            }
            out << "  v" << v << " [fillcolor=green, shape="
                << (in && out_ ? "Msquare" : in ? "diamond" : out_ ? "doublecircle" : "circle")
                << ", label=\"" << label << "\"];\n";
        }
        for (const auto& [u, v] : d.graph.edges()) {
            out << "  v" << u << " -- v" << v << " [style=dashed];\n";
        }
    } else {
        const PhasePolyDiagram& p = f.poly;
        for (int v = 0; v < p.numQubits(); ++v) {
            const PhasePolySpider& s = p.spiders[v];
            out << "  v" << v << " [fillcolor=" << (s.red ? "red" : "green")
                << ", shape=circle, label=\"" << v << "\\n"
                << (s.red ? 2 * s.phase : s.phase) << "/4\"];\n";
        }
        for (const auto& [u, v] : p.plainEdges) {
            out << "  v" << u << " -- v" << v << ";\n";
        }
        for (const auto& [u, v] : p.hEdges) {
            out << "  v" << u << " -- v" << v << " [style=dashed];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string readFileOrThrow(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeFileOrThrow(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write file: " + path);
    }
    out << text;
}

} // namespace zxcf
