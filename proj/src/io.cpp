#include "skewcm/io.hpp"

#include <istream>
#include <sstream>

namespace skewcm::io {

namespace {

int read_count(std::istream& in, const char* what) {
    long long v = 0;
    if (!(in >> v)) throw ParseError(std::string("expected ") + what);
    if (v < 1 || v > 100000) throw ParseError(std::string(what) + " out of range");
    return static_cast<int>(v);
}

const char* status_name(LastVertexStatus s) {
    return s == LastVertexStatus::IsolatedVertex ? "isolated_vertex" : "isolated_edge_endpoint";
}

const char* cm_name(CmType t) {
    return t == CmType::Finite ? "finite" : "countably_infinite";
}

} // namespace

SignMatrix parse_signs_text(std::istream& in) {
    const int n = read_count(in, "matrix size");
    std::vector<std::vector<int>> raw(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("sign matrix ends early");
            if (tok == "1" || tok == "+1") raw[i][j] = 1;
            else if (tok == "-1") raw[i][j] = -1;
            else throw ParseError("bad sign entry '" + tok + "'");
        }
    return validate_signs(raw);
}

Graph parse_graph_text(std::istream& in) {
    const int n = read_count(in, "vertex count");
    Graph g(n);
    long long i = 0, j = 0;
    while (in >> i) {
        if (!(in >> j)) throw ParseError("edge line missing second vertex");
        if (i < 1 || i > n || j < 1 || j > n) throw ParseError("edge vertex out of range");
        if (i == j) throw ParseError("loops are not allowed");
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

SignMatrix parse_signs_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("signs json needs fields n and entries");
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("entries must be an n-row array");
    std::vector<std::vector<int>> raw;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("entries rows must be arrays");
        raw.push_back(row.get<std::vector<int>>());
    }
    return validate_signs(raw);
}

Graph parse_graph_json(const json& j) {
    if (!j.is_object() || !j.contains("n")) throw ParseError("graph json needs field n");
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("vertex count out of range");
    Graph g(n);
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edges must be [i, j] pairs");
            const int a = e[0].get<int>(), b = e[1].get<int>();
            if (a < 1 || a > n || b < 1 || b > n || a == b) throw ParseError("bad edge");
            g.add_edge(a, b);
        }
    }
    return g;
}

json to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return j;
}

json to_json(const Classification& c, bool unicode) {
    json j;
    j["variant"] = variant_name(c.variant);
    j["case"] = case_name(c.case_kind);
    j["r"] = c.r;
    j["factor_count"] = c.factor_count();
    j["category"] = c.category(unicode);
    j["cm_type"] = cm_name(c.cm_type);
    if (c.cm_type == CmType::Finite) j["cm_count"] = c.cm_count();
    j["isolated_singularity"] = c.isolated_singularity;
    return j;
}

Classification parse_classification_json(const json& j) {
    Classification c;
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "a1") c.variant = Variant::A1;
    else if (variant == "a_infinity") c.variant = Variant::AInfinity;
    else throw ParseError("unknown variant " + variant);

    const std::string kind = j.at("case").get<std::string>();
    if (kind == "semisimple_power") c.case_kind = CaseKind::SemisimplePower;
    else if (kind == "lambda_power") c.case_kind = CaseKind::LambdaPower;
    else if (kind == "gamma_power") c.case_kind = CaseKind::GammaPower;
    else throw ParseError("unknown case " + kind);

    c.r = j.at("r").get<int>();
    c.isolated_singularity = j.at("isolated_singularity").get<bool>();
    const std::string cm = j.at("cm_type").get<std::string>();
    if (cm == "finite") c.cm_type = CmType::Finite;
    else if (cm == "countably_infinite") c.cm_type = CmType::CountablyInfinite;
    else throw ParseError("unknown cm_type " + cm);

    // Exponents are recovered from the case shape.
    switch (c.case_kind) {
        case CaseKind::SemisimplePower: c.factor_exponent = static_cast<unsigned>(c.r); break;
        case CaseKind::LambdaPower: c.factor_exponent = static_cast<unsigned>(c.r - 1); break;
        case CaseKind::GammaPower: c.factor_exponent = static_cast<unsigned>(c.r); break;
    }
    if (c.cm_type == CmType::Finite) c.cm_exponent = static_cast<unsigned>(c.r);
    if (j.at("factor_count").get<std::string>() != c.factor_count())
        throw ParseError("factor_count does not match the case shape");
    if (c.cm_type == CmType::Finite && j.at("cm_count").get<std::string>() != c.cm_count())
        throw ParseError("cm_count does not match r");
    return c;
}

json to_json(const ReductionReport& rep) {
    json j;
    j["n"] = rep.original.vertex_count();
    j["alpha"] = rep.shape.alpha;
    j["beta"] = rep.shape.beta;
    j["n_status"] = status_name(rep.last_status);
    json trace = json::array();
    for (const auto& step : rep.trace) {
        json s;
        if (step.kind == ReductionStep::Kind::Switch) {
            s["op"] = "switch";
            s["v"] = step.v;
        } else {
            s["op"] = "rswitch";
            s["v"] = step.v;
            s["w"] = step.w;
        }
        trace.push_back(std::move(s));
    }
    j["trace"] = std::move(trace);
    j["final"] = to_json(rep.final_graph);
    return j;
}

json to_json(const OracleReport& rep) {
    json j;
    j["dim"] = rep.dim;
    j["radical_dim"] = rep.radical_dim;
    j["block_count"] = rep.block_count;
    j["semisimple"] = rep.semisimple;
    j["consistent"] = rep.consistent;
    j["failures"] = rep.failures;
    j["warnings"] = rep.warnings;
    return j;
}

json to_json(const AgreementReport& rep, int n, Variant variant, bool unicode) {
    json j;
    j["n"] = n;
    j["variant"] = variant_name(variant);
    j["agree"] = rep.agree;
    if (rep.matrix_route) j["matrix_route"] = to_json(*rep.matrix_route, unicode);
    if (rep.reduction_route) j["reduction_route"] = to_json(*rep.reduction_route, unicode);
    if (rep.oracle) j["oracle"] = to_json(*rep.oracle);
    j["failures"] = rep.failures;
    return j;
}

json sweep_to_json(const SweepCounts& counts, const SweepOptions& opt) {
    json j;
    j["variant"] = variant_name(opt.variant);
    j["n"] = opt.n;
    j["mode"] = opt.exhaustive ? "exhaustive" : "sample";
    if (!opt.exhaustive) {
        j["samples"] = opt.samples;
        j["seed"] = opt.seed;
    }
    j["total"] = counts.total;
    j["passed"] = counts.passed;
    j["failed"] = counts.total - counts.passed;
    json cases = json::object();
    for (const auto& [k, v] : counts.cases) cases[k] = v;
    j["cases"] = std::move(cases);
    json hist = json::object();
    for (const auto& [k, v] : counts.r_histogram) hist[std::to_string(k)] = v;
    j["r_histogram"] = std::move(hist);
    json fails = json::array();
    for (const auto& f : counts.failures) {
        json e;
        e["index"] = f.index;
        e["reasons"] = f.reasons;
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    return j;
}

std::string render_text(const Classification& c, bool unicode) {
    std::ostringstream os;
    os << "variant               " << variant_name(c.variant) << "\n"
       << "case                  " << case_name(c.case_kind) << "\n"
       << "r                     " << c.r << "\n"
       << "factor_count          " << c.factor_count() << "\n"
       << "category              " << c.category(unicode) << "\n"
       << "cm_type               " << cm_name(c.cm_type) << "\n";
    if (c.cm_type == CmType::Finite) os << "cm_count              " << c.cm_count() << "\n";
    os << "isolated_singularity  " << (c.isolated_singularity ? "true" : "false") << "\n";
    return os.str();
}

std::string render_text(const ReductionReport& rep) {
    std::ostringstream os;
    os << "n          " << rep.original.vertex_count() << "\n"
       << "alpha      " << rep.shape.alpha << "\n"
       << "beta       " << rep.shape.beta << "\n"
       << "n_status   " << status_name(rep.last_status) << "\n"
       << "steps      " << rep.trace.size() << "\n";
    for (const auto& step : rep.trace) {
        if (step.kind == ReductionStep::Kind::Switch) os << "  switch " << step.v << "\n";
        else os << "  rswitch " << step.v << " <- " << step.w << "\n";
    }
    os << "final edges";
    for (const auto& [a, b] : rep.final_graph.edges()) os << " {" << a << "," << b << "}";
    os << "\n";
    return os.str();
}

std::string render_text(const OracleReport& rep) {
    std::ostringstream os;
    os << "dim          " << rep.dim << "\n"
       << "radical_dim  " << rep.radical_dim << "\n"
       << "block_count  " << rep.block_count << "\n"
       << "semisimple   " << (rep.semisimple ? "true" : "false") << "\n"
       << "consistent   " << (rep.consistent ? "true" : "false") << "\n";
    for (const auto& f : rep.failures) os << "failure: " << f << "\n";
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string render_text(const AgreementReport& rep, int n, Variant variant) {
    std::ostringstream os;
    os << "n        " << n << "\n"
       << "variant  " << variant_name(variant) << "\n"
       << "agree    " << (rep.agree ? "true" : "false") << "\n";
    if (rep.matrix_route) os << "matrix route:    " << rep.matrix_route->category() << " (r=" << rep.matrix_route->r << ")\n";
    if (rep.reduction_route)
        os << "reduction route: " << rep.reduction_route->category() << " (r=" << rep.reduction_route->r << ")\n";
    if (rep.oracle)
        os << "oracle:          dim=" << rep.oracle->dim << " radical=" << rep.oracle->radical_dim
           << " blocks=" << rep.oracle->block_count << "\n";
    for (const auto& f : rep.failures) os << "failure: " << f << "\n";
    return os.str();
}

std::string render_sweep_text(const SweepCounts& counts, const SweepOptions& opt) {
    std::ostringstream os;
    os << "variant " << variant_name(opt.variant) << "  n " << opt.n << "  "
       << (opt.exhaustive ? "exhaustive" : "sampled") << "\n"
       << "total " << counts.total << "  passed " << counts.passed << "  failed "
       << (counts.total - counts.passed) << "\n";
    os << "cases:";
    for (const auto& [k, v] : counts.cases) os << " " << k << "=" << v;
    os << "\n";
    os << "r:";
    for (const auto& [k, v] : counts.r_histogram) os << " " << k << "->" << v;
    os << "\n";
    for (const auto& f : counts.failures) {
        os << "failure at index " << f.index << ":";
        for (const auto& r : f.reasons) os << " " << r << ";";
        os << "\n";
    }
    return os.str();
}

} // namespace skewcm::io
