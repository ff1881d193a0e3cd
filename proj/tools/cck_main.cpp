// cck: exact combinatorics of finite-type cluster algebras.
//
// Subcommands: mutate, enumerate, facevector, hvector, diff, arc, hasse.
// Exit codes: 0 ok, 2 malformed input, 3 infinite type or cap exhausted,
// 4 internal cross-check mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cck/arcs.hpp"
#include "cck/dynkin.hpp"
#include "cck/errors.hpp"
#include "cck/oriented.hpp"

using namespace cck;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string type;
    std::string matrixFile;
    std::string orientation = "linear";
    std::string format = "text";
    std::string identity = "auto";
    long long cap = kDefaultNodeCap;
    int threads = 1;
};

void addCommon(CLI::App* cmd, CommonOpts& o, bool needsSeed = true) {
    if (needsSeed) {
        cmd->add_option("--type", o.type, "Dynkin type string, e.g. A5, D4, A2xA3");
        cmd->add_option("--matrix", o.matrixFile, "JSON matrix file {\"n\":..,\"b\":[[..]]}");
        cmd->add_option("--orientation", o.orientation,
                        "linear | bipartite | explicit arrows like 2>1,3>2 (with --type)");
    }
    cmd->add_option("--cap", o.cap, "node budget (env CCK_NODE_CAP overrides the default)");
    cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--threads", o.threads, "parallel enumeration threads (default 1)");
    cmd->add_option("--identity", o.identity, "variable identity: auto | laurent | gvector | both")
        ->check(CLI::IsMember({"auto", "laurent", "gvector", "both"}));
}

long long envCap() {
    if (const char* s = std::getenv("CCK_NODE_CAP")) {
        try {
            long long v = std::stoll(s);
            if (v >= 1) return v;
        } catch (const std::logic_error&) {
        }
        throw InvalidInput("bad CCK_NODE_CAP value");
    }
    return kDefaultNodeCap;
}

ExchangeMatrix seedOf(const CommonOpts& o) {
    if (o.type.empty() == o.matrixFile.empty())
        throw InvalidInput("provide exactly one of --type or --matrix");
    if (!o.type.empty()) return dynkinMatrix(parseDynkinType(o.type), parseOrientation(o.orientation));
    std::ifstream in(o.matrixFile);
    if (!in) throw InvalidInput("cannot open " + o.matrixFile);
    std::stringstream ss;
    ss << in.rdbuf();
    return ExchangeMatrix::fromJsonText(ss.str());
}

EnumerateOptions enumOpts(const CommonOpts& o) {
    EnumerateOptions opts;
    opts.cap = o.cap;
    opts.threads = o.threads;
    if (o.identity == "laurent") opts.identity = EnumerateOptions::Identity::Laurent;
    else if (o.identity == "gvector") opts.identity = EnumerateOptions::Identity::GVector;
    else if (o.identity == "both") opts.identity = EnumerateOptions::Identity::Both;
    return opts;
}

void requireFinite(const ExchangeMatrix& b, long long cap) {
    auto r = isFiniteType(b.mat(), cap);
    if (r.status == FiniteTypeResult::Status::NotFinite)
        throw NotFiniteType("the mutation class is not of finite type");
    if (r.status == FiniteTypeResult::Status::CapExhausted)
        throw CapExhausted("finite-type detection exhausted its cap");
}

json faceVectorJson(const FaceVector& f) {
    json a = json::array();
    for (long long x : f.raw()) a.push_back(x);
    return a;
}

std::vector<int> parseSequence(const std::string& seq, int n) {
    std::vector<int> out;
    if (seq.empty()) return out;
    std::stringstream ss(seq);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int k;
        try {
            k = std::stoi(item);
        } catch (const std::logic_error&) {
            throw InvalidInput("bad direction '" + item + "'");
        }
        if (k < 1 || k > n) throw InvalidInput("direction " + item + " out of range 1.." + std::to_string(n));
        out.push_back(k - 1);
    }
    return out;
}

int cmdMutate(const CommonOpts& o, const std::string& seq) {
    ExchangeMatrix b0 = seedOf(o);
    const int n = b0.rank();
    VariableRegistry reg(VariableIdentity::Both);
    LabeledSeed s = initialSeed(b0, reg);
    for (int k : parseSequence(seq, n)) s = mutateSeed(s, k, reg);
    ExchangeMatrix b(s.b);
    if (o.format == "json") {
        json out;
        out["matrix"] = json::parse(b.toJsonText());
        json vars = json::array();
        for (VarId v : s.vars) vars.push_back(reg.poly(v)->toString());
        out["vars"] = vars;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "B = " << s.b.toString() << "\n" << ValuedQuiver::of(b).toText();
        for (int i = 0; i < n; ++i)
            std::cout << "x" << (i + 1) << " = " << reg.poly(s.vars[i])->toString() << "\n";
    }
    return 0;
}

int cmdEnumerate(const CommonOpts& o, bool full) {
    ExchangeMatrix b = seedOf(o);
    requireFinite(b, o.cap);
    auto g = enumerateGraph(b, enumOpts(o));
    if (o.format == "json") {
        if (full) {
            std::cout << g.toJsonText() << "\n";
        } else {
            json out{{"nodes", g.nodes.size()}, {"edges", g.edges.size()}, {"variables", g.registry->size()}};
            std::cout << out.dump() << "\n";
        }
    } else {
        std::cout << "nodes: " << g.nodes.size() << "\nedges: " << g.edges.size()
                  << "\nvariables: " << g.registry->size() << "\n";
        if (full) std::cout << g.toJsonText() << "\n";
    }
    return 0;
}

int cmdFaceVector(const CommonOpts& o, const std::string& method, bool verify, bool hOnly,
                  const std::string& complexKind, bool dumpFacets = false) {
    ExchangeMatrix b = seedOf(o);
    requireFinite(b, o.cap);
    const int n = b.rank();

    FaceVector f;
    bool wantFull = complexKind == "full";
    if (wantFull) {
        if (method == "formula") {
            auto r = isFiniteType(b.mat(), o.cap);
            f = formulaFull(r.type);
        } else {
            auto bundle = buildComplexes(b, enumOpts(o));
            f = bundle.full.faceVector();
        }
    } else if (method == "formula") {
        auto r = isFiniteType(b.mat(), o.cap);
        f = formulaPositive(r.type);
    } else if (method == "enumerate") {
        f = positiveFaceVector(b.mat(), FaceVectorStrategy::Enumerate, o.cap);
    } else if (method == "recurse") {
        f = positiveFaceVector(b.mat(), FaceVectorStrategy::Recurse, o.cap);
    } else {
        f = positiveFaceVector(b.mat(), FaceVectorStrategy::Auto, o.cap);
    }

    json out;
    std::ostringstream text;
    if (!wantFull && verify) {
        FaceVector fe = positiveFaceVector(b.mat(), FaceVectorStrategy::Enumerate, o.cap);
        FaceVector fr = positiveFaceVector(b.mat(), FaceVectorStrategy::Recurse, o.cap);
        bool agree = fe == fr;
        std::string formulaNote = "n/a (seed is not of tree type)";
        if (classifyDynkin(cartanCompanion(b.mat()))) {
            FaceVector ff = formulaPositive(*classifyDynkin(cartanCompanion(b.mat())));
            agree = agree && ff == fe;
            formulaNote = ff.toString();
        }
        text << "enumerate: " << fe.toString() << "\nrecurse:   " << fr.toString()
             << "\nformula:   " << formulaNote << "\n"
             << (agree ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
        out["verify"] = agree;
        if (!agree) {
            std::cout << text.str();
            throw CrossCheckMismatch("face-vector routes disagree");
        }
        f = fe;
    }
    auto h = hVector(f, n);
    if (!hOnly) {
        text << (wantFull ? "f  = " : "f+ = ") << f.toString() << "\n";
        out["f"] = faceVectorJson(f);
    }
    text << "h  = " << vectorToString(h) << "\n";
    out["h"] = h;
    if (dumpFacets) {
        auto bundle = buildComplexes(b, enumOpts(o));
        const SimplicialComplex& k = wantFull ? bundle.full : bundle.positive;
        text << k.toFacetText();
        out["complex"] = json::parse(k.toJsonText());
    }
    if (o.format == "json")
        std::cout << out.dump() << "\n";
    else
        std::cout << text.str();
    return 0;
}

int cmdDiff(const CommonOpts& o, int direction) {
    ExchangeMatrix b = seedOf(o);
    requireFinite(b, o.cap);
    if (direction < 1 || direction > b.rank()) throw InvalidInput("direction out of range");
    auto d = mutationDifference(b.mat(), direction - 1, o.cap);
    if (o.format == "json") {
        json out{{"lhs", faceVectorJson(d.lhs)}, {"rhs", faceVectorJson(d.rhs)}, {"equal", d.equal}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << d.lhs.toString() << " == " << d.rhs.toString() << (d.equal ? " PASS" : " FAIL") << "\n";
    }
    return d.equal ? 0 : 4;
}

int cmdArc(const CommonOpts& o, const std::string& model, int n, bool checkIso, bool checkStructure,
           bool table) {
    ArcModel am;
    if (model == "A") am = ArcModel::A;
    else if (model == "BC" || model == "B" || model == "C") am = ArcModel::BC;
    else if (model == "D") am = ArcModel::D;
    else throw InvalidInput("arc model must be A, BC or D");
    if (n < 1 || (am == ArcModel::BC && n < 2) || (am == ArcModel::D && n < 3))
        throw InvalidInput("rank out of range for this model");

    auto res = arcComplex(am, n);
    Triangulation t0 = initialTriangulation(am, n, model == "C");
    IntMat bt = matrixOfTriangulation(t0);

    json out{{"vertices", res.objects.size()}, {"facets", res.complex.facets().size()}};
    std::ostringstream text;
    text << "vertices: " << res.objects.size() << "\nfacets: " << res.complex.facets().size() << "\n";
    text << "initial: " << t0.toText() << "\nB_T = " << bt.toString() << "\n";
    out["initial"] = t0.toText();

    if (table) {
        // Pairwise compatibility table over the vertex objects.
        text << "objects:";
        for (const auto& obj : res.objects) text << " " << obj.toString();
        text << "\n";
        json rowsJ = json::array();
        for (size_t i = 0; i < res.objects.size(); ++i) {
            std::string row;
            for (size_t j = 0; j < res.objects.size(); ++j)
                row += i == j ? '.' : (compatible(am, res.objects[i], res.objects[j]) ? '+' : 'x');
            text << res.objects[i].toString() << ": " << row << "\n";
            rowsJ.push_back(row);
        }
        out["compatibility"] = rowsJ;
    }

    bool ok = true;
    if (checkIso) {
        auto rpt = verifyModelIso(am, n, o.cap, model == "C");
        ok = ok && rpt.ok;
        text << rpt.toText();
        out["iso"] = json::parse(rpt.toJsonText());
    }
    if (checkStructure) {
        ExchangeMatrix seed(bt);
        Report rpt;
        switch (am) {
            case ArcModel::A: rpt = verifyStructureA(seed, o.cap); break;
            case ArcModel::BC: rpt = verifyStructureBC(seed, o.cap); break;
            case ArcModel::D: rpt = verifyStructureD(seed, o.cap); break;
        }
        ok = ok && rpt.ok;
        text << rpt.toText();
        out["structure"] = json::parse(rpt.toJsonText());
    }
    if (o.format == "json")
        std::cout << out.dump() << "\n";
    else
        std::cout << text.str();
    return ok ? 0 : 4;
}

int cmdHasse(const CommonOpts& o, const std::string& dotFile) {
    ExchangeMatrix b = seedOf(o);
    requireFinite(b, o.cap);
    auto bundle = buildComplexes(b, enumOpts(o));
    auto stats = tauTiltH(bundle);
    if (!dotFile.empty()) {
        auto og = orient(bundle.graph);
        std::ofstream out(dotFile);
        if (!out) throw InvalidInput("cannot write " + dotFile);
        out << toDot(og);
    }
    if (o.format == "json") {
        json out{{"in_degree_counts", stats.inDegreeCounts},
                 {"h_of_positive", stats.hOfPositive},
                 {"match", stats.match},
                 {"positive_nodes", stats.positiveNodes}};
        std::cout << out.dump() << "\n";
    } else {
        for (size_t i = 0; i < stats.inDegreeCounts.size(); ++i)
            std::cout << "h_" << i << ": " << stats.inDegreeCounts[i] << "\n";
        std::cout << vectorToString(stats.inDegreeCounts) << " == h(positive complex) "
                  << vectorToString(stats.hOfPositive) << (stats.match ? " PASS" : " FAIL") << "\n";
    }
    if (!stats.match) throw CrossCheckMismatch("in-degree distribution differs from the h-vector");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of finite-type cluster algebras"};
    app.require_subcommand(1);

    CommonOpts mo, eo, fo, ho, dfo, ao, hso;
    std::string seq, method = "auto", hMethod = "auto", complexKind = "positive", hComplex = "positive";
    std::string arcModel, dotFile;
    int direction = 1, arcN = 3;
    bool verify = false, fullExport = false, checkIso = false, checkStructure = false, arcTable = false;

    auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence to a seed");
    addCommon(mutate, mo);
    mutate->add_option("--seq", seq, "comma-separated 1-based directions, e.g. 2,1");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate the exchange graph");
    addCommon(enumerate, eo);
    enumerate->add_flag("--export", fullExport, "print the full graph JSON");

    auto* facevector = app.add_subcommand("facevector", "face vector of the positive complex");
    addCommon(facevector, fo);
    facevector->add_option("--method", method, "enumerate | recurse | formula | auto")
        ->check(CLI::IsMember({"enumerate", "recurse", "formula", "auto"}));
    facevector->add_option("--complex", complexKind, "positive | full")
        ->check(CLI::IsMember({"positive", "full"}));
    facevector->add_flag("--verify", verify, "cross-check enumerate/recurse/formula");
    bool dumpFacets = false;
    facevector->add_flag("--facets", dumpFacets, "also print the facet list");

    auto* hvector = app.add_subcommand("hvector", "h-vector of the positive complex");
    addCommon(hvector, ho);
    hvector->add_option("--method", hMethod, "enumerate | recurse | formula | auto")
        ->check(CLI::IsMember({"enumerate", "recurse", "formula", "auto"}));
    hvector->add_option("--complex", hComplex, "positive | full")
        ->check(CLI::IsMember({"positive", "full"}));

    auto* diff = app.add_subcommand("diff", "mutation-difference identity at one edge");
    addCommon(diff, dfo);
    diff->add_option("--direction", direction, "1-based mutation direction")->required();

    auto* arc = app.add_subcommand("arc", "polygon arc models");
    addCommon(arc, ao, false);
    arc->add_option("--type", arcModel, "A | BC | D (B/C pick the matrix variant)")->required();
    arc->add_option("--n", arcN, "rank")->required();
    arc->add_flag("--check-iso", checkIso, "verify the arc/cluster complex isomorphism");
    arc->add_flag("--check-structure", checkStructure, "verify the positive-complex structure identities");
    arc->add_flag("--table", arcTable, "print the pairwise compatibility table");

    auto* hasse = app.add_subcommand("hasse", "oriented exchange graph statistics");
    addCommon(hasse, hso);
    hasse->add_option("--dot", dotFile, "write the oriented graph in DOT format");

    try {
        mo.cap = eo.cap = fo.cap = ho.cap = dfo.cap = ao.cap = hso.cap = envCap();
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e);
            return code == 0 ? 0 : 2;  // --help is 0; any usage error is malformed input
        }
        if (mutate->parsed()) return cmdMutate(mo, seq);
        if (enumerate->parsed()) return cmdEnumerate(eo, fullExport);
        if (facevector->parsed()) return cmdFaceVector(fo, method, verify, false, complexKind, dumpFacets);
        if (hvector->parsed()) return cmdFaceVector(ho, hMethod, false, true, hComplex);
        if (diff->parsed()) return cmdDiff(dfo, direction);
        if (arc->parsed()) return cmdArc(ao, arcModel, arcN, checkIso, checkStructure, arcTable);
        if (hasse->parsed()) return cmdHasse(hso, dotFile);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotFiniteType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CrossCheckMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const EngineBug& e) {
        std::cerr << "engine bug: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
